from .awgn import frame_rng, modulate_and_transmit
from .simulation import (
    PUBLISHED_MAX_BLOCK_OPERATIONS,
    VARDY_OPERATIONS,
    FerSimulation,
    make_decoder,
    run_fer,
    write_csv,
)
