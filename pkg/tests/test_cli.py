import json
import subprocess
import sys

import pytest

from fortnull import complete, cycle, encode_graph6, petersen
from fortnull.certificates import verify_certificate
from fortnull.cli import main, run

from conftest import BARBELL_EDGES_1, C_ROWS

PG6 = encode_graph6(petersen())
C4, C6, K4 = (encode_graph6(g) for g in (cycle(4), cycle(6), complete(4)))
E1 = json.dumps(BARBELL_EDGES_1)
BARBELL = ["--edges", E1, "--one-based"]
C_JSON = json.dumps(C_ROWS)

CASES = [
    (["forts", "--graph6", C4], 0),
    (["minimal-forts", "--graph6", PG6], 0),
    (["zero-forcing", "--graph6", PG6], 0),
    (["tau", "--family", "[[0,1],[1,2],[3]]"], 0),
    (["compatible", "--graph6", K4, "--family", "[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]"], 0),
    (["compatible", *BARBELL, "--family", "[[1,4,6,7],[1,4,5,8]]"], 2),
    (["y-number", "--graph6", PG6], 0),
    (["bounds", "--graph6", C6], 0),
    (["construct-csym", *BARBELL, "--forts", "[[1,4,6,7],[2,3,5,8]]"], 0),
    (["construct-msym", *BARBELL, "--forts", "[[1,4,6,7],[2,3,5,8]]"], 2),
    (["construct-msym", *BARBELL, "--forts", "[[1,4],[5,8],[2,3,6,7]]"], 0),
    (["construct-msym", "--graph6", C6, "--forts", "[[0,2,4],[1,3,5]]", "--vectors", "random", "--seed", "3"], 0),
    (["forced-zeros", *BARBELL, "--forts", "[[1,4,6,7],[2,3,5,8]]"], 0),
    (["zsf", "--graph6", C4], 0),
    (["zsf", *BARBELL], 2),
    (["nullspace", "--matrix", C_JSON], 0),
    (["special-basis", "--matrix", C_JSON, "--one-based"], 0),
    (["embed-matroid", "--ground-n", "4", "--circuits", "[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]"], 0),
    (["sap-check", "--matrix", "[[2,-1,0],[-1,2,-1],[0,-1,2]]"], 0),
    (["petersen-audit", "--one-based"], 0),
]


@pytest.mark.parametrize("argv, code", CASES, ids=[" ".join(c[0][:1] + [str(i)]) for i, c in enumerate(CASES)])
def test_closed_loop(argv, code, capsys):
    cert, got = run(argv)
    assert got == code
    assert cert["version"] == "fortnull-cert/1" and cert["command"] == argv[0]
    assert verify_certificate(json.loads(json.dumps(cert))) == []


def test_spec_examples():
    cert, code = run(["zero-forcing", "--graph6", PG6])
    assert code == 0 and cert["claim"]["Z"] == 5
    cert, code = run(["construct-msym", *BARBELL, "--forts", "[[1,4,6,7],[2,3,5,8]]"])
    assert code == 2 and cert["claim"]["obstruction"]["bridge"] == [3, 6]
    cert, _ = run(["forced-zeros", *BARBELL, "--forts", "[[1,4,6,7],[2,3,5,8]]"])
    assert cert["claim"]["forced"] == [[3, 6]]
    assert cert["inputs"]["graph"]["edges"][0] == [1, 2]


def test_tampered_certificates_fail():
    cert, _ = run(["tau", "--family", "[[0,1],[1,2],[3]]"])
    cert["claim"]["witness"] = [0, 3]
    assert verify_certificate(cert)
    cert, _ = run(["zsf", "--graph6", C4])
    cert["claim"]["edges"][0][2] = "5"
    assert verify_certificate(cert)
    cert, _ = run(["construct-csym", *BARBELL, "--forts", "[[1,4,6,7],[2,3,5,8]]"])
    cert["claim"]["matrix"]["rows"][0][1] = "7"
    assert verify_certificate(cert)
    cert, _ = run(["sap-check", "--matrix", "[[2,-1,0],[-1,2,-1],[0,-1,2]]"])
    cert["claim"]["has_sap"] = False
    cert["claim"]["witness"] = {"n": 3, "rows": [["0", "0", "1"], ["0", "0", "0"], ["1", "0", "0"]]}
    assert verify_certificate(cert)


def test_verify_command(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["zsf", "--graph6", C4, "--output", str(out)]) == 0
    assert main(["verify", "--certificate", "@" + str(out)]) == 0
    bad = json.loads(out.read_text())
    bad["claim"]["edges"][0][2] = "3"
    out.write_text(json.dumps(bad))
    assert main(["verify", "--certificate", "@" + str(out)]) == 2
    out.write_text('{"version": "nope"}')
    assert main(["verify", "--certificate", "@" + str(out)]) == 1


def test_input_errors(capsys):
    assert run(["forts"])[1] == 1
    assert run(["forts", "--graph6", "!!"])[1] == 1
    assert run(["forts", "--edges", "[[0,0]]"])[1] == 1
    assert run(["tau", "--family", "not json"])[1] == 1
    assert run(["compatible", "--graph6", C4, "--family", "[[0]]"])[1] == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1


def test_budget_exit_code(capsys):
    assert run(["forts", "--graph6", PG6, "--max-forts", "5"])[1] == 3
    cert, code = run(["y-number", "--graph6", encode_graph6(complete(5)), "--max-nodes", "1"])
    assert code == 0 and cert["claim"]["Y"] == 4  # minimal forts of K5 are compatible, no search
    from fortnull import corona_k1, cycle
    g = encode_graph6(corona_k1(cycle(5)))
    cert, code = run(["y-number", "--graph6", g, "--max-nodes", "5"])
    assert code == 3 and cert["claim"]["proven"] is False


def test_output_is_byte_stable():
    args = [sys.executable, "-m", "fortnull.cli", "bounds", "--graph6", PG6]
    a = subprocess.run(args, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(args, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["claim"]["chain"]["Z"] == 5
