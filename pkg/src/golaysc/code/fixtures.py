from pathlib import Path
from typing import List, Tuple

import numpy as np

from golaysc.errors import InputFormatError
from golaysc.gf2.bit_matrix import BitMatrix, parse_bits

DATA_DIR = Path(__file__).parent / "data"


def load_matrix(name: str) -> BitMatrix:
    return BitMatrix.from_text((DATA_DIR / name).read_text())


def published_generator() -> BitMatrix:
    return load_matrix("golay_generator.txt")


def published_constraints() -> BitMatrix:
    return load_matrix("golay_constraints.txt")


def parse_llr_line(line: str, line_number: int, length: int = 24) -> np.ndarray:
    """Parses one line of whitespace separated LLRs."""
    fields = line.split()
    if len(fields) != length:
        raise InputFormatError(line_number, f"expected {length} values, got {len(fields)}")
    try:
        values = np.array([float(field) for field in fields])
    except ValueError as e:
        raise InputFormatError(line_number, str(e)) from e
    if not np.all(np.isfinite(values)):
        raise InputFormatError(line_number, "LLR values must be finite")
    return values


def read_regression_pairs(path: Path) -> List[Tuple[np.ndarray, np.ndarray]]:
    """
    Reads (llr, codeword) pairs. Each non-comment line holds 24 LLRs, a '|' and the
    24-bit codeword, i.e. "4.0 -4.0 ... | 0100...".
    """
    pairs = []
    for number, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "|" not in line:
            raise InputFormatError(number, "missing '|' between LLRs and codeword")
        llr_text, word_text = line.split("|", 1)
        word = parse_bits(word_text)
        if len(word) != 24:
            raise InputFormatError(number, f"codeword has {len(word)} bits")
        pairs.append((parse_llr_line(llr_text, number), np.array(word, dtype=np.uint8)))
    return pairs
