"""Command-line interface: verdict exit codes, JSON schema, determinism."""

from __future__ import annotations

import json
import re

from colonlab import Ideal, QQ, Ring, ideal_equal
from colonlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert err == ""
    return code, json.loads(out)


def test_storch_command(capsys):
    code, document = run_json(capsys, "storch")
    assert code == 0
    assert document["command"] == "storch"
    result = document["result"]
    assert result["hilbert"] == [1, 2, 1, 1]
    assert result["length"] == 5
    assert result["gorenstein"] is True
    assert result["symmetric"] is False
    assert result["ladder_holds"] is False
    assert result["consistent"] is True
    assert "timing_ms" in document


def test_ladder_command(capsys):
    code, document = run_json(
        capsys, "ladder", "--field", "F32003", "--vars", "x,y", "--gens", "x^2,y^3"
    )
    assert code == 0
    assert document["result"]["delta"] == 3
    assert document["result"]["holds"] is True
    assert document["ring"] == {"field": "F32003", "vars": ["x", "y"], "order": "degrevlex"}


def test_ladder_precondition_exit_code(capsys):
    code, out, err = run(
        capsys, "ladder", "--field", "Q", "--vars", "x,y", "--gens", "x^2+y^2"
    )
    assert code == 2
    assert "error" in err


def test_gb_command_round_trip(capsys):
    code, document = run_json(
        capsys, "gb", "--field", "Q", "--vars", "x,y", "--gens", "x^2+y^2,x^2-y^2"
    )
    assert code == 0
    basis = document["result"]["basis"]
    ring = Ring(("x", "y"), QQ)
    reparsed = Ideal(ring, tuple(ring.parse(s) for s in basis))
    original = Ideal(ring, (ring.parse("x^2+y^2"), ring.parse("x^2-y^2")))
    assert ideal_equal(reparsed, original)
    assert [str(g) for g in reparsed.groebner_basis()] == basis


def test_nf_command(capsys):
    code, document = run_json(
        capsys,
        "nf",
        "--field", "Q",
        "--vars", "x,y",
        "--gens", "x^2-1",
        "--poly", "x^2*y+y",
    )
    assert code == 0
    assert document["result"]["remainder"] == "2*y"


def test_colon_command(capsys):
    code, document = run_json(
        capsys,
        "colon",
        "--field", "Q",
        "--vars", "x,y",
        "--gens", "x^2,y^2",
        "--ideal2", "x,y",
    )
    assert code == 0
    assert document["result"]["basis"] == ["x^2", "x*y", "y^2"]


def test_intersect_command(capsys):
    code, document = run_json(
        capsys, "intersect", "--field", "Q", "--vars", "x,y", "--gens", "x", "--ideal2", "y"
    )
    assert code == 0
    assert document["result"]["basis"] == ["x*y"]


def test_hilbert_graded_and_filtration(capsys):
    code, document = run_json(
        capsys, "hilbert", "--field", "Q", "--vars", "x,y", "--gens", "x^2,y^2"
    )
    assert code == 0
    assert document["result"] == {"kind": "graded", "values": [1, 2, 1], "delta": 2, "length": 4}
    code, document = run_json(
        capsys,
        "hilbert",
        "--field", "Q",
        "--vars", "x,y",
        "--gens", "x^2,y^2",
        "--ideal2", "x,y",
    )
    assert code == 0
    assert document["result"]["kind"] == "filtration"
    assert document["result"]["values"] == [1, 2, 1]


def test_socle_command(capsys):
    code, document = run_json(
        capsys, "socle", "--field", "Q", "--vars", "x,y", "--gens", "x^2,x*y,y^2"
    )
    assert code == 0
    assert document["result"]["socle_dimension"] == 2
    assert document["result"]["gorenstein"] is False


def test_symmetry_command(capsys):
    code, document = run_json(
        capsys, "symmetry", "--field", "Q", "--vars", "x,y", "--gens", "x^2,y^2"
    )
    assert code == 0
    assert document["result"]["values"] == [1, 2, 1]


def test_equiv_command_default_maximal(capsys):
    code, document = run_json(
        capsys, "equiv", "--field", "Q", "--vars", "x,y", "--gens", "x^2,y^2"
    )
    assert code == 0
    assert document["result"]["consistent"] is True
    assert document["result"]["hilbert"] == [1, 2, 1]


def test_corollary_command(capsys):
    code, document = run_json(
        capsys, "corollary", "--field", "Q", "--vars", "x", "--gens", "x^3"
    )
    assert code == 0
    assert document["result"]["delta"] == 2 and document["result"]["holds"] is True


def test_random_ci_command(capsys):
    code, document = run_json(capsys, "random-ci", "--seed", "3", "--count", "3")
    assert code == 0
    result = document["result"]
    assert result["all_hold"] is True and len(result["instances"]) == 3


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "gb", "--field", "Q", "--vars", "x", "--gens", "x^-2")
    assert code == 2 and "error" in err


def test_unknown_field_exit_code(capsys):
    code, out, err = run(capsys, "gb", "--field", "F6", "--vars", "x", "--gens", "x")
    assert code == 2 and "not prime" in err


def test_input_file(tmp_path, capsys):
    path = tmp_path / "session.txt"
    path.write_text(
        "# fixture session\n"
        "field = F2\n"
        "vars = x,y\n"
        "order = degrevlex\n"
        "gens = x^2+y^3; x^2+x*y+y^3\n"
    )
    code, document = run_json(capsys, "hilbert", "--in", str(path), "--ideal2", "x,y")
    assert code == 0
    assert document["result"]["values"] == [1, 2, 1, 1]
    # Flags override file values.
    code, document = run_json(
        capsys, "gb", "--in", str(path), "--gens", "x^2,y^2", "--field", "Q"
    )
    assert code == 0
    assert document["result"]["basis"] == ["x^2", "y^2"]


def test_byte_identical_output_modulo_timing(capsys):
    outputs = []
    for _ in range(2):
        code, out, err = run(capsys, "storch", "--json")
        assert code == 0
        outputs.append(re.sub(r'"timing_ms": [0-9.]+', '"timing_ms": 0', out))
    assert outputs[0] == outputs[1]
    seeded = []
    for _ in range(2):
        code, out, err = run(capsys, "random-ci", "--seed", "9", "--count", "2", "--json")
        assert code == 0
        seeded.append(re.sub(r'"timing_ms": [0-9.]+', '"timing_ms": 0', out))
    assert seeded[0] == seeded[1]


def test_text_output_mode(capsys):
    code, out, err = run(capsys, "storch")
    assert code == 0
    assert "consistent: True" in out
    assert "i=2" in out and "DIFFERENT" in out


def test_missing_vars_is_usage_error(capsys):
    code, out, err = run(capsys, "gb", "--field", "Q", "--gens", "x")
    assert code == 2 and "--vars" in err


def test_lex_order_supported(capsys):
    code, document = run_json(
        capsys,
        "ladder",
        "--field", "Q",
        "--vars", "x,y",
        "--order", "lex",
        "--gens", "x^2,y^2",
    )
    assert code == 0
    assert document["ring"]["order"] == "lex"
    assert document["result"]["delta"] == 2 and document["result"]["holds"] is True
