import sys
import traceback
from typing import Any, List, Literal, Optional
import warnings

from golaysc.types.data_types import LogMessagePoint, SimRecord
from golaysc.utils.config import LOG_LEVELS, config
from golaysc.utils.event_emitter import EventEmitter
from golaysc.utils.helpers import get_now_ts

Level = Literal["ERROR", "WARN", "INFO", "DEBUG"]


class RunMonitor(EventEmitter):
    """
    Collects log messages and simulation records of one process.

    Dispatches "log" for every message and "record" for every SimRecord.
    """

    def __init__(self, level: str = "INFO"):
        EventEmitter.__init__(self)
        self._log: List[LogMessagePoint] = []
        self._records: List[SimRecord] = []
        self.set_level(level)

    def set_level(self, level: str):
        level = str(level).upper()
        self.level = level if level in LOG_LEVELS else "INFO"

    def echoes(self, level: str) -> bool:
        return LOG_LEVELS.index(level) <= LOG_LEVELS.index(self.level)

    def add_data_point(self, data_point: Any, timestamp=None):
        if isinstance(data_point, LogMessagePoint):
            data_point.timestamp = get_now_ts() if timestamp is None else timestamp
            self._log.append(data_point)
            self.dispatch("log", data_point)
        elif isinstance(data_point, SimRecord):
            self._records.append(data_point)
            self.dispatch("record", data_point)

    @property
    def messages(self) -> List[LogMessagePoint]:
        return list(self._log)

    @property
    def records(self) -> List[SimRecord]:
        return list(self._records)

    def clear(self):
        self._log.clear()
        self._records.clear()


run_monitor = RunMonitor(config.get("GOLAYSC_LOG_LEVEL", "INFO"))


# User-facing functions
def log_exception(e: Exception, message: str = "", timestamp=None, stdout=True):
    text = f"{message} - {e}" if message else str(e)
    run_monitor.add_data_point(
        LogMessagePoint(message=text, stacktrace=traceback.format_exc(), level="ERROR"),
        timestamp=timestamp,
    )
    if stdout:
        print(text, file=sys.stderr)


def log_message(
    message,
    level: Optional[Level] = "INFO",
    timestamp=None,
    stdout=True,
):
    run_monitor.add_data_point(
        LogMessagePoint(message=message, stacktrace="", level=level), timestamp
    )
    if level == "WARN":
        warnings.warn(message)
    elif stdout and run_monitor.echoes(level):
        print(message, file=sys.stderr)


def log_record(record: SimRecord, stdout=True):
    run_monitor.add_data_point(record)
    if stdout and run_monitor.echoes("INFO"):
        print(
            f"Eb/N0 {record.eb_n0_db:.2f} dB: {record.frame_errors}/{record.frames_run} "
            f"frame errors, FER {record.fer:.3e}, avg ops {record.avg_summations:.1f}+"
            f"{record.avg_comparisons:.1f}, max {record.max_total_ops}",
            file=sys.stderr,
        )
