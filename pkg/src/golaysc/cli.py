"""
Command line front end.

    golaysc decode --algo block --llr frames.txt
    golaysc simulate --algo block --snr-db 1:1:4 --frames 100000 --out fer.csv
    golaysc verify
    golaysc tables

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.
"""

import argparse
import sys
from typing import List, Optional, TextIO

from golaysc.channel.simulation import FerSimulation, make_decoder, ops_summary, write_csv
from golaysc.code.fixtures import parse_llr_line, published_generator
from golaysc.code.golay import golay_spec
from golaysc.errors import ConfigError, GolayError, InputFormatError
from golaysc.gf2.bit_matrix import format_bits
from golaysc.types.data_types import CSV_HEADER, DecoderKind, StopRule
from golaysc.utils.config import settings
from golaysc.utils.helpers import parse_snr_range
from golaysc.utils.logging import log_exception, log_message, run_monitor
from golaysc.verify import run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3

ALGORITHMS = [kind.value for kind in DecoderKind]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="golaysc", description="Golay code as a chained polar subcode")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    decode = sub.add_parser("decode", help="decode LLR frames, 24 values per line")
    decode.add_argument("--algo", choices=ALGORITHMS, default="block")
    decode.add_argument("--list-size", type=int, default=None)
    decode.add_argument("--max-paths", type=int, default=None)
    decode.add_argument("--shortcut", action="store_true", help="hard-decision shortcut (block only)")
    decode.add_argument("--llr", default="-", help="input file, '-' for stdin")

    simulate = sub.add_parser("simulate", help="Monte-Carlo FER and complexity over AWGN")
    simulate.add_argument("--algo", choices=ALGORITHMS, default="block")
    simulate.add_argument("--snr-db", required=True, help="start:step:stop in dB, stop included")
    simulate.add_argument("--frames", type=int, default=None, help="minimum frames per point")
    simulate.add_argument("--errors", type=int, default=None, help="minimum frame errors per point")
    simulate.add_argument("--max-frames", type=int, default=None)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--list-size", type=int, default=None)
    simulate.add_argument("--max-paths", type=int, default=None)
    simulate.add_argument("--batch-size", type=int, default=None)
    simulate.add_argument("--workers", type=int, default=None)
    simulate.add_argument("--out", default=None, help="CSV path, stdout if omitted")

    sub.add_parser("verify", help="run the structural self-checks")
    sub.add_parser("tables", help="print G, H, V, frozen set, constraints and schedule")
    return parser


def _pick(flag, default):
    return default if flag is None else flag


def cmd_decode(args, out: TextIO) -> int:
    cfg = settings()
    list_size = _pick(args.list_size, cfg.list_size)
    max_paths = _pick(args.max_paths, cfg.max_paths)
    if list_size < 1 or max_paths < 1:
        raise UsageError("--list-size and --max-paths must be positive")

    kind = DecoderKind.parse(args.algo)
    if args.shortcut and kind == DecoderKind.BLOCK:
        kind = DecoderKind.BLOCK_SHORTCUT
    spec = golay_spec()
    decoder = make_decoder(kind, spec, list_size, max_paths)

    stream = sys.stdin if args.llr == "-" else open(args.llr, "r")
    try:
        for number, line in enumerate(stream, start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            result = decoder(parse_llr_line(line, number, spec.n))
            out.write(
                f"{format_bits(result.codeword)} {format_bits(result.info)} "
                f"{result.score:.6f} {result.ops.summations} {result.ops.comparisons}\n"
            )
    finally:
        if stream is not sys.stdin:
            stream.close()
    return EXIT_OK


def cmd_simulate(args, out: TextIO) -> int:
    cfg = settings()
    try:
        snr_list = parse_snr_range(args.snr_db)
    except ValueError as e:
        raise UsageError(str(e))

    stop_rule = StopRule(
        min_frames=_pick(args.frames, cfg.min_frames),
        min_errors=_pick(args.errors, cfg.min_errors),
        max_frames=_pick(args.max_frames, cfg.max_frames),
    )
    counts = [stop_rule.min_frames, stop_rule.min_errors, stop_rule.max_frames]
    if any(count < 0 for count in counts):
        raise UsageError("frame and error counts must not be negative")

    simulation = FerSimulation(
        args.algo,
        stop_rule=stop_rule,
        seed=args.seed,
        list_size=_pick(args.list_size, cfg.list_size),
        max_paths=_pick(args.max_paths, cfg.max_paths),
        batch_size=_pick(args.batch_size, cfg.batch_size),
        workers=_pick(args.workers, cfg.workers),
    )
    if simulation.batch_size < 1 or simulation.workers < 1:
        raise UsageError("--batch-size and --workers must be positive")

    def point_done(record):
        log_message(f"finished {record.eb_n0_db:.2f} dB", level="DEBUG")

    simulation.on("point_done", point_done)
    try:
        records = simulation.run(snr_list)
    finally:
        simulation.off("point_done", point_done)

    if args.out:
        write_csv(records, args.out)
    else:
        out.write(CSV_HEADER + "\n")
        for record in records:
            out.write(record.to_csv_row() + "\n")
    log_message(ops_summary(records))
    return EXIT_OK


def cmd_verify(out: TextIO) -> int:
    results = run_verification()
    for check in results:
        status = "PASS" if check.passed else "FAIL"
        out.write(f"{status} {check.name}{': ' + check.detail if check.detail else ''}\n")
    failed = [check.name for check in results if not check.passed]
    if failed:
        out.write(f"failed checks: {', '.join(failed)}\n")
        return EXIT_VERIFY
    return EXIT_OK


def tables_text() -> str:
    spec = golay_spec()
    g = published_generator()
    sections = [
        ("G", g.to_text()),
        # self-dual: the generator doubles as check matrix
        ("H", g.to_text()),
        ("V", spec.v.to_text()),
        ("frozen set", ",".join(map(str, spec.cs.frozen_set))),
        ("constraints", "\n".join(spec.cs.describe())),
        ("schedule", ",".join(map(str, spec.schedule))),
    ]
    return "\n".join(f"# {title}\n{body}" for title, body in sections) + "\n"


def cmd_tables(out: TextIO) -> int:
    out.write(tables_text())
    return EXIT_OK


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        run_monitor.set_level(settings().log_level)
        if args.command == "decode":
            return cmd_decode(args, out)
        if args.command == "simulate":
            return cmd_simulate(args, out)
        if args.command == "verify":
            return cmd_verify(out)
        return cmd_tables(out)
    except (UsageError, InputFormatError, ConfigError) as e:
        log_exception(e, "usage error")
        return EXIT_USAGE
    except OSError as e:
        log_exception(e, "I/O error")
        return EXIT_IO
    except GolayError as e:
        log_exception(e, "failed")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
