from datetime import datetime
import math
from typing import List


def get_now_ts() -> int:
    """Timestamp in milliseconds for the current time."""
    return int(datetime.now().timestamp() * 1000)


def parse_snr_range(text: str) -> List[float]:
    """
    Parses an SNR range "start:step:stop" (stop included) or a single value, i.e. 1:0.5:3

    Raises:
        ValueError: if the range is malformed or the step does not move towards stop.
    """
    parts = [p.strip() for p in text.split(":")]
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"expected start:step:stop, got {text!r}")

    start, step, stop = (float(p) for p in parts)
    if step <= 0 or stop < start:
        raise ValueError(f"range {text!r} does not increase towards its end")

    count = math.floor((stop - start) / step + 1e-9) + 1
    return [round(start + k * step, 10) for k in range(count)]
