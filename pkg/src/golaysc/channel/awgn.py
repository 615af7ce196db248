from typing import Optional, Sequence

import numpy as np

from golaysc.gf2.bit_matrix import as_bit_vector
from golaysc.types.data_types import ChannelConfig


def frame_rng(seed: int, snr_index: int, frame_index: int) -> np.random.Generator:
    """Independent stream per (seed, SNR point, frame), whatever process draws it."""
    return np.random.default_rng(np.random.SeedSequence((seed, snr_index, frame_index)))


def bpsk(codeword: Sequence[int]) -> np.ndarray:
    """Bit 0 maps to +1, bit 1 to -1."""
    return 1.0 - 2.0 * as_bit_vector(codeword)


def modulate_and_transmit(
    codeword: Sequence[int],
    cfg: ChannelConfig,
    rng: Optional[np.random.Generator] = None,
    noiseless: bool = False,
) -> np.ndarray:
    """
    BPSK over AWGN with noise variance cfg.noise_variance, returning LLRs 2y/sigma^2.
    """
    x = bpsk(codeword)
    variance = cfg.noise_variance
    if noiseless:
        y = x
    else:
        rng = np.random.default_rng(cfg.seed) if rng is None else rng
        y = x + rng.normal(0.0, np.sqrt(variance), size=x.size)
    return 2.0 * y / variance
