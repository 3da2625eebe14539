import json

import numpy as np
import pytest

from grassmann_codes.cli import main

MSG = "101100"
CODEWORD = "11010101110000100100010011111111110"
CORRUPTED = "11100101110000000100110111111011010"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--q", "2", "--m", "4")
    assert code == 0
    assert "n=35 k=6 d=16" in out and "15/15/5" in out
    code, out, _ = run(capsys, "params", "--q", "2", "--m", "5", "--json")
    data = json.loads(out)
    assert (data["n"], data["k"], data["d"]) == (155, 10, 64)
    assert data["orbit_sizes"] == [31] * 5 and data["info_set_orbits"] == 5
    assert data["per_orbit_t"] == 6 and data["radius"] == 31


def test_params_degenerate(capsys):
    code, out, _ = run(capsys, "params", "--q", "2", "--m", "2", "--json")
    data = json.loads(out)
    assert code == 0 and (data["n"], data["k"]) == (1, 1) and not data["decoder_available"]


def test_unsupported_exit_code(capsys):
    assert run(capsys, "params", "--q", "4", "--m", "2")[0] == 3
    assert run(capsys, "decode", "--q", "3", "--m", "4", "0" * 130)[0] == 3


def test_golden_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "encode", "--q", "2", "--m", "4", MSG)
    assert code == 0 and out.strip() == CODEWORD
    code, out, _ = run(capsys, "corrupt", "--q", "2", "--m", "4", "--weight", "7", "--seed", "42", CODEWORD)
    assert code == 0 and out.strip() == CORRUPTED
    assert sum(a != b for a, b in zip(CODEWORD, CORRUPTED)) == 7
    diag = tmp_path / "diag.json"
    code, out, _ = run(capsys, "decode", "--q", "2", "--m", "4", CORRUPTED, "--diagnostics", str(diag))
    assert code == 0 and out.strip() == CODEWORD
    assert json.loads(diag.read_text())["distance"] == 7


def test_zero_message_roundtrip(capsys, tmp_path):
    msg = tmp_path / "msg.txt"
    msg.write_text("0" * 10 + "\n")
    cw = tmp_path / "cw.txt"
    assert run(capsys, "encode", "--m", "5", "-i", str(msg), "-o", str(cw))[0] == 0
    assert cw.read_text().strip() == "0" * 155
    code, out, _ = run(capsys, "decode", "--m", "5", "-i", str(cw))
    assert code == 0 and out.strip() == "0" * 155


def test_malformed_input(capsys):
    code, _, err = run(capsys, "encode", "--m", "4", "10x100")
    assert code == 4 and "error" in err
    assert run(capsys, "encode", "--m", "4", "10110")[0] == 4
    assert run(capsys, "decode", "--m", "4", "1" * 34)[0] == 4
    assert run(capsys, "corrupt", "--weight", "9", "0101")[0] == 4
    assert run(capsys, "encode", "--m", "4", "-i", "/nonexistent/file")[0] == 4


def test_decode_failure_exit_code(capsys):
    # far from every codeword: decoder reports failure instead of guessing
    from conftest import decoder_for
    from grassmann_codes.pipeline import decode
    dec = decoder_for(2, 4)
    rng = np.random.default_rng(0)
    for _ in range(200):
        r = rng.integers(0, 2, 35)
        if not decode(dec, r).success:
            break
    else:
        pytest.skip("no failing word found")
    code, out, err = run(capsys, "decode", "--m", "4", "".join(map(str, r)))
    assert code == 2 and out == "" and "decode failure" in err


def test_simulate_deterministic(capsys):
    args = ["simulate", "--m", "4", "--weight", "7", "--trials", "20", "--seed", "1", "--no-timing"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0] == "trial,weight,success,winner_orbit,winner_b,total_candidates,wall_ms"
    assert len(lines) == 21 and all(line.split(",")[2] == "1" for line in lines[1:])


def test_simulate_json_weight_zero(capsys):
    code, out, _ = run(capsys, "simulate", "--m", "4", "--weight", "0", "--trials", "5", "--json")
    assert code == 0 and json.loads(out)["success_rate"] == 1.0


def test_simulate_parallel_matches_serial(capsys):
    base = ["simulate", "--m", "4", "--weight", "7", "--trials", "12", "--seed", "3", "--no-timing"]
    _, serial, _ = run(capsys, *base)
    _, parallel, _ = run(capsys, *base, "--workers", "2")
    assert serial == parallel


def test_build_and_cache(capsys, tmp_path):
    cache = tmp_path / "c24.json"
    assert run(capsys, "build", "--m", "4", "--cache", str(cache))[0] == 0
    code, out, _ = run(capsys, "encode", "--m", "4", "--cache", str(cache), MSG)
    assert code == 0 and out.strip() == CODEWORD
    assert run(capsys, "encode", "--m", "5", "--cache", str(cache), "0" * 10)[0] == 4
    cache.write_text(cache.read_text().replace('"k": 6', '"k": 7'))
    assert run(capsys, "encode", "--m", "4", "--cache", str(cache), MSG)[0] == 4
    assert run(capsys, "build", "--m", "4")[0] == 4


def test_orbits_command(capsys):
    code, out, _ = run(capsys, "orbits", "--m", "4", "--json")
    rows = json.loads(out)["orbits"]
    assert [r["size"] for r in rows] == [15, 15, 5]
    assert [r["has_info_set"] for r in rows] == [True, True, False]


@pytest.mark.parametrize("q,m", [(2, 4), (2, 5), (3, 4)])
def test_selftest(capsys, q, m):
    code, out, _ = run(capsys, "selftest", "--q", str(q), "--m", str(m))
    assert code == 0 and out.strip().endswith("pass")
