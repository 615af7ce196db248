from .block_decoder import block_decode, stage1_enumerate, stage2_extend
from .fht import correlation_to_weight, fht
from .llr import boxplus, g_step, tau
from .sc_decoder import (
    DecoderPath,
    list_decode,
    path_score_identity_check,
    sc_decode,
    segment_llr,
    sequential_decode,
)
