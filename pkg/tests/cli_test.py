import io

import numpy as np
import pytest

from golaysc.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, main, tables_text
from golaysc.code.fixtures import published_generator
from golaysc.code.golay import encode, golay_spec
from golaysc.gf2.bit_matrix import BitMatrix
from golaysc.gf2.constraints import constraint_set_from_v
from golaysc.types.data_types import CSV_HEADER

NOISELESS_LINE = " ".join(["4.0"] * 24)


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def llr_file(tmp_path):
    def write(*lines):
        path = tmp_path / "frames.txt"
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    return write


def test_tables():
    code, text = run(["tables"])
    assert code == EXIT_OK
    assert text == tables_text()
    lines = text.splitlines()
    assert lines[lines.index("# G") + 1] == "".join(map(str, published_generator().row(0)))
    v_start = lines.index("# V") + 1
    v_rows = lines[v_start : lines.index("# frozen set")]
    assert len(v_rows) == 12
    assert lines[lines.index("# frozen set") + 1] == "0,1,2,4,8,16,17,18,19,20,21,22"
    assert lines[lines.index("# schedule") + 1] == (
        "0,1,2,16,3,17,4,5,18,6,7,8,9,19,20,10,21,11,12,22,13,14,15,23"
    )
    assert "u22=u12+u17" in lines


def test_tables_round_trip():
    _, text = run(["tables"])
    sections = {}
    for block in text.split("# ")[1:]:
        title, _, body = block.partition("\n")
        sections[title] = body
    spec = golay_spec()
    assert BitMatrix.from_text(sections["G"]) == published_generator()
    v = BitMatrix.from_text(sections["V"])
    assert v == spec.v
    cs = constraint_set_from_v(v)
    assert cs.frozen_set == spec.cs.frozen_set
    assert cs.constraints == spec.cs.constraints
    schedule = tuple(int(i) for i in sections["schedule"].strip().split(","))
    assert schedule == spec.schedule


@pytest.mark.parametrize("algo", ["block", "sc", "list", "seq", "ml"])
def test_decode_noiseless(algo, llr_file):
    code, text = run(["decode", "--algo", algo, "--llr", llr_file("# comment", NOISELESS_LINE, "")])
    assert code == EXIT_OK
    fields = text.split()
    assert fields[0] == "0" * 24
    assert fields[1] == "0" * 12
    assert float(fields[2]) == 0.0
    if algo == "block":
        assert 94 <= int(fields[3]) <= 128
        assert 38 <= int(fields[4]) <= 52


def test_decode_codeword_with_errors(llr_file):
    spec = golay_spec()
    info = np.array([1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1])
    word = encode(info, spec)
    y = 4.0 * (1.0 - 2.0 * word)
    y[[2, 9, 20]] = -0.5 * y[[2, 9, 20]]
    line = " ".join(f"{v:.3f}" for v in y)
    for extra in ([], ["--shortcut"]):
        code, text = run(["decode", "--llr", llr_file(line, line)] + extra)
        assert code == EXIT_OK
        rows = text.splitlines()
        assert len(rows) == 2
        assert rows[0].split()[0] == "".join(map(str, word))
        assert rows[0].split()[1] == "".join(map(str, info))


def test_decode_malformed_line(llr_file):
    code, _ = run(["decode", "--llr", llr_file(NOISELESS_LINE, "1.0 2.0")])
    assert code == EXIT_USAGE
    code, _ = run(["decode", "--llr", llr_file(" ".join(["x"] * 24))])
    assert code == EXIT_USAGE


def test_decode_missing_file(tmp_path):
    code, _ = run(["decode", "--llr", str(tmp_path / "absent.txt")])
    assert code == EXIT_IO


def test_usage_errors():
    assert run(["decode", "--algo", "viterbi"])[0] == EXIT_USAGE
    assert run(["frobnicate"])[0] == EXIT_USAGE
    assert run([])[0] == EXIT_USAGE
    assert run(["decode", "--list-size", "0"])[0] == EXIT_USAGE
    assert run(["simulate", "--snr-db", "3:1:2"])[0] == EXIT_USAGE
    assert run(["simulate"])[0] == EXIT_USAGE


def test_simulate_to_stdout():
    code, text = run(
        ["simulate", "--algo", "ml", "--snr-db", "2:1:3", "--frames", "20", "--errors", "0", "--max-frames", "20"]
    )
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    assert [line.split(",")[0] for line in lines[1:]] == ["2.00", "3.00"]
    assert all(line.split(",")[1] == "20" for line in lines[1:])


def test_simulate_is_reproducible(tmp_path):
    outputs = []
    for name in ("a.csv", "b.csv"):
        target = tmp_path / name
        argv = [
            "simulate", "--algo", "block", "--snr-db", "1:1:2", "--frames", "30", "--errors", "0",
            "--max-frames", "30", "--seed", "7", "--out", str(target),
        ]
        assert run(argv)[0] == EXIT_OK
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]


def test_verify():
    code, text = run(["verify"])
    assert code == EXIT_OK
    assert "FAIL" not in text
    assert "PASS block_decoder_is_ml" in text
