from .golay import (
    GOLAY_SEGMENTS,
    build_component_codes,
    codebook,
    encode,
    golay_spec,
    greedy_schedule,
    info_bits,
    schedule_is_valid,
    turyn_construct,
)
