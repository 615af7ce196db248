"""
Monte-Carlo frame error rate and complexity measurement.

Frames are drawn in batches with fixed boundaries and every frame owns its random
stream, so the records of a run depend on the seed only, never on the worker count.
"""

from concurrent.futures import ProcessPoolExecutor
import csv
from dataclasses import dataclass
import os
from typing import Callable, Iterable, List, Optional, Sequence, Union

import numpy as np

from golaysc.channel.awgn import frame_rng, modulate_and_transmit
from golaysc.code.golay import encode, golay_spec
from golaysc.decoding.block_decoder import block_decode
from golaysc.decoding.fht import correlation
from golaysc.decoding.sc_decoder import list_decode, sc_decode, sequential_decode
from golaysc.oracle.brute_force import max_correlation, ml_decode
from golaysc.types.data_types import (
    CSV_HEADER,
    ChannelConfig,
    CodeSpec,
    DecodeResult,
    DecoderKind,
    FrameOutcome,
    SimRecord,
    StopRule,
)
from golaysc.utils.event_emitter import EventEmitter
from golaysc.utils.logging import log_message, log_record

# operation count of the Vardy decoder, the usual reference for Golay ML decoding
VARDY_OPERATIONS = 121
# largest block decoder operation count observed in published runs at low SNR
PUBLISHED_MAX_BLOCK_OPERATIONS = 1590

Decoder = Callable[[np.ndarray], DecodeResult]


def make_decoder(
    kind: Union[DecoderKind, str],
    spec: Optional[CodeSpec] = None,
    list_size: int = 16,
    max_paths: int = 4096,
) -> Decoder:
    """
    Raises:
        DecoderError: for an unknown decoder name.
    """
    kind = DecoderKind.parse(kind) if isinstance(kind, str) else kind
    spec = golay_spec() if spec is None else spec

    if kind == DecoderKind.SC:
        return lambda llr: sc_decode(llr, spec)
    if kind == DecoderKind.LIST:
        return lambda llr: list_decode(llr, spec, list_size)[0]
    if kind == DecoderKind.SEQUENTIAL:
        return lambda llr: sequential_decode(llr, spec, list_size, max_paths)
    if kind == DecoderKind.BLOCK:
        return lambda llr: block_decode(llr)
    if kind == DecoderKind.BLOCK_SHORTCUT:
        return lambda llr: block_decode(llr, shortcut=True)
    return lambda llr: ml_decode(llr, spec)


def simulate_frame(
    decoder: Decoder,
    spec: CodeSpec,
    cfg: ChannelConfig,
    snr_index: int,
    frame_index: int,
) -> FrameOutcome:
    rng = frame_rng(cfg.seed, snr_index, frame_index)
    info = rng.integers(0, 2, size=spec.k)
    codeword = encode(info, spec)
    llr = modulate_and_transmit(codeword, cfg, rng)

    result = decoder(llr)
    best = max_correlation(llr, spec)
    agrees = correlation(result.codeword, llr) >= best - 1e-9 * max(1.0, abs(best))
    return FrameOutcome(
        frame_error=not np.array_equal(result.codeword, codeword),
        summations=result.ops.summations,
        comparisons=result.ops.comparisons,
        ml_agreement=bool(agrees),
    )


@dataclass
class BatchTotals:
    frames: int = 0
    frame_errors: int = 0
    summations: int = 0
    comparisons: int = 0
    max_total_ops: int = 0
    ml_agreements: int = 0

    def add_frame(self, outcome: FrameOutcome):
        self.frames += 1
        self.frame_errors += int(outcome.frame_error)
        self.summations += outcome.summations
        self.comparisons += outcome.comparisons
        self.max_total_ops = max(self.max_total_ops, outcome.summations + outcome.comparisons)
        self.ml_agreements += int(outcome.ml_agreement)

    def merge(self, other: "BatchTotals"):
        self.frames += other.frames
        self.frame_errors += other.frame_errors
        self.summations += other.summations
        self.comparisons += other.comparisons
        self.max_total_ops = max(self.max_total_ops, other.max_total_ops)
        self.ml_agreements += other.ml_agreements

    def to_record(self, eb_n0_db: float) -> SimRecord:
        frames = max(self.frames, 1)
        return SimRecord(
            eb_n0_db=eb_n0_db,
            frames_run=self.frames,
            frame_errors=self.frame_errors,
            avg_summations=self.summations / frames,
            avg_comparisons=self.comparisons / frames,
            max_total_ops=self.max_total_ops,
            ml_agreement_rate=self.ml_agreements / frames,
        )


@dataclass(frozen=True)
class BatchJob:
    kind: DecoderKind
    list_size: int
    max_paths: int
    cfg: ChannelConfig
    snr_index: int
    start: int
    stop: int


def run_batch(job: BatchJob, spec: Optional[CodeSpec] = None) -> BatchTotals:
    """Decodes frames [start, stop) of one SNR point. Module level so worker processes can run it."""
    spec = golay_spec() if spec is None else spec
    decoder = make_decoder(job.kind, spec, job.list_size, job.max_paths)
    totals = BatchTotals()
    for frame_index in range(job.start, job.stop):
        totals.add_frame(simulate_frame(decoder, spec, job.cfg, job.snr_index, frame_index))
    return totals


class FerSimulation(EventEmitter):
    """
    Runs one decoder over a list of SNR points.

    Dispatches "point_done" with the SimRecord of every finished point.
    """

    def __init__(
        self,
        decoder: Union[DecoderKind, str],
        stop_rule: StopRule = StopRule(),
        seed: int = 0,
        list_size: int = 16,
        max_paths: int = 4096,
        batch_size: int = 1000,
        workers: int = 1,
        spec: Optional[CodeSpec] = None,
    ):
        EventEmitter.__init__(self)
        self.kind = DecoderKind.parse(decoder) if isinstance(decoder, str) else decoder
        self.stop_rule = stop_rule
        self.seed = seed
        self.list_size = list_size
        self.max_paths = max_paths
        self.batch_size = batch_size
        self.workers = workers
        self.spec = golay_spec() if spec is None else spec

    def _jobs(self, cfg: ChannelConfig, snr_index: int, first_frame: int, count: int) -> List[BatchJob]:
        jobs = []
        start = first_frame
        for _ in range(count):
            stop = start + self.batch_size
            if self.stop_rule.max_frames is not None:
                stop = min(stop, self.stop_rule.max_frames)
            if stop <= start:
                break
            jobs.append(
                BatchJob(self.kind, self.list_size, self.max_paths, cfg, snr_index, start, stop)
            )
            start = stop
        return jobs

    def run_point(
        self, snr_index: int, eb_n0_db: float, executor: Optional[ProcessPoolExecutor] = None
    ) -> SimRecord:
        cfg = ChannelConfig(eb_n0_db=eb_n0_db, code_rate=self.spec.k / self.spec.n, seed=self.seed)
        totals = BatchTotals()
        wave = self.workers if executor is not None else 1

        while not self.stop_rule.done(totals.frames, totals.frame_errors):
            jobs = self._jobs(cfg, snr_index, totals.frames, wave)
            if not jobs:
                break
            if executor is None:
                results: Iterable[BatchTotals] = (run_batch(job, self.spec) for job in jobs)
            else:
                # workers rebuild the default code locally instead of unpickling a copy per batch
                shipped = None if self.spec is golay_spec() else self.spec
                results = executor.map(run_batch, jobs, [shipped] * len(jobs))
            # batches are folded in frame order, the stop rule sees the same sequence as a serial run
            for batch in results:
                if self.stop_rule.done(totals.frames, totals.frame_errors):
                    break
                totals.merge(batch)

        record = totals.to_record(eb_n0_db)
        log_record(record)
        self.dispatch("point_done", record)
        return record

    def run(self, snr_list: Sequence[float]) -> List[SimRecord]:
        log_message(
            f"Simulating {self.kind.value} decoder at {len(snr_list)} SNR points, seed {self.seed}",
            level="DEBUG",
        )
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                return [self.run_point(i, snr, executor) for i, snr in enumerate(snr_list)]
        return [self.run_point(i, snr) for i, snr in enumerate(snr_list)]


def run_fer(
    spec: Optional[CodeSpec],
    decoder: Union[DecoderKind, str],
    snr_list: Sequence[float],
    stop_rule: StopRule = StopRule(),
    seed: int = 0,
    **kwargs,
) -> List[SimRecord]:
    """
    Frame error rate, operation counts and ML agreement per SNR point.

    Raises:
        DecoderError: for an unknown decoder name.
    """
    return FerSimulation(decoder, stop_rule, seed, spec=spec, **kwargs).run(snr_list)


def write_csv(records: Sequence[SimRecord], file_path: str):
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(file_path, "w", newline="") as file:
        writer = csv.writer(file)
        writer.writerow(CSV_HEADER.split(","))
        writer.writerows(record.to_csv_row().split(",") for record in records)


def ops_summary(records: Sequence[SimRecord]) -> str:
    peak = max((r.max_total_ops for r in records), default=0)
    return (
        f"max ops {peak} (published maximum {PUBLISHED_MAX_BLOCK_OPERATIONS}, "
        f"Vardy decoder {VARDY_OPERATIONS})"
    )