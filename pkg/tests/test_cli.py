"""CLI behaviour: rendering, exit codes, jsonl round trips."""

import json

import pytest

from riordan.cli import main
from riordan.hypergeom import h_for_binomial_A


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def lines(out):
    return out.splitlines()


# -- triangle -----------------------------------------------------------


def test_triangle_pascal_small(capsys):
    code, out, _ = run(capsys, "triangle", "pascal", "--rows", "3")
    assert code == 0
    assert out == "1\n1 1\n1 2 1\n"


def test_triangle_catalan42(capsys):
    code, out, _ = run(capsys, "triangle", "catalan42", "--rows", "5")
    assert code == 0
    assert [l.split() for l in lines(out)] == [
        ["1"],
        ["2", "1"],
        ["5", "4", "1"],
        ["14", "14", "6", "1"],
        ["42", "48", "27", "8", "1"],
    ]


def test_triangle_ballot43(capsys):
    code, out, _ = run(capsys, "triangle", "ballot43", "--rows", "4")
    assert code == 0
    assert [l.split() for l in lines(out)] == [
        ["1"],
        ["1", "1"],
        ["2", "2", "1"],
        ["5", "5", "3", "1"],
    ]


def test_triangle_text_alignment(capsys):
    _, out, _ = run(capsys, "triangle", "pascal", "--rows", "5")
    assert lines(out)[4] == "1 4 6 4 1"
    assert lines(out)[0] == "1"


def test_triangle_explicit_dA(capsys):
    code, out, _ = run(
        capsys, "triangle", "--d", "1,1,1,1,1", "--A", "1,1", "--rows", "4"
    )
    assert code == 0
    assert [l.split() for l in lines(out)] == [
        ["1"],
        ["1", "1"],
        ["1", "2", "1"],
        ["1", "3", "3", "1"],
    ]


def test_triangle_unknown_builtin(capsys):
    code, _, err = run(capsys, "triangle", "nosuch", "--rows", "3")
    assert code == 2
    assert "unknown triangle" in err


def test_triangle_name_and_explicit_conflict(capsys):
    code, _, err = run(capsys, "triangle", "pascal", "--d", "1", "--A", "1")
    assert code == 2


def test_triangle_csv(capsys):
    code, out, _ = run(capsys, "triangle", "pascal", "--rows", "3", "--format", "csv")
    assert code == 0
    assert out == "1\n1,1\n1,2,1\n"


def test_triangle_jsonl_round_trip(capsys):
    code, out, _ = run(
        capsys, "triangle", "catalan42", "--rows", "6", "--format", "jsonl"
    )
    assert code == 0
    for line in lines(out):
        rec = json.loads(line)
        assert json.dumps(rec, sort_keys=True, separators=(",", ":")) == line


# -- extract -------------------------------------------------------------


def test_extract_pascal_even(capsys):
    code, out, _ = run(capsys, "extract", "pascal", "--p", "2", "--r", "0", "--rows", "4")
    assert code == 0
    assert [l.split() for l in lines(out)] == [
        ["1"],
        ["2", "1"],
        ["6", "4", "1"],
        ["20", "15", "6", "1"],
    ]


def test_extract_pascal_p3_r1(capsys):
    code, out, _ = run(capsys, "extract", "pascal", "--p", "3", "--r", "1", "--rows", "2")
    assert code == 0
    assert [l.split() for l in lines(out)] == [["1"], ["4", "1"]]


def test_extract_with_aseq_claim(capsys):
    code, out, _ = run(
        capsys,
        "extract",
        "pascal",
        "--p",
        "2",
        "--r",
        "0",
        "--rows",
        "4",
        "--aseq",
        "--terms",
        "4",
    )
    assert code == 0
    assert "A = 1 2 1 0" in out
    assert "claim A_new = A^2: ok" in out


def test_extract_aseq_catalan_base(capsys):
    code, out, _ = run(
        capsys, "extract", "catalan42", "--p", "2", "--aseq", "--terms", "5",
        "--rows", "3",
    )
    assert code == 0
    # A^2 for A = (1+t)^2 is (1+t)^4
    assert "A = 1 4 6 4 1" in out


def test_extract_requires_valid_p(capsys):
    code, _, err = run(capsys, "extract", "pascal", "--p", "1", "--rows", "3")
    assert code == 2


# -- aseq ------------------------------------------------------------------


def test_aseq_pascal(capsys):
    code, out, _ = run(capsys, "aseq", "pascal", "--terms", "6")
    assert code == 0
    assert out == "A = 1 1 0 0 0 0\n"


def test_aseq_ballot(capsys):
    code, out, _ = run(capsys, "aseq", "ballot43", "--terms", "5")
    assert code == 0
    assert out == "A = 1 1 1 1 1\n"


def test_aseq_improper_triangle(capsys):
    # d, A with A(0) = 0 is rejected before any recovery runs
    code, _, err = run(capsys, "aseq", "--d", "1,1", "--A", "0,1", "--terms", "3")
    assert code == 2


# -- check -------------------------------------------------------------------


def test_check_andrews_holds(capsys):
    code, out, _ = run(capsys, "check", "andrews-a1", "--max-n", "100")
    assert code == 0
    assert "andrews-a1: holds" in out


def test_check_rothe_hagen_pinned(capsys):
    code, out, _ = run(
        capsys,
        "check",
        "rothe-hagen",
        "--n-max",
        "15",
        "--x",
        "2",
        "--y",
        "3",
        "--z",
        "4",
    )
    assert code == 0
    assert "rothe-hagen: holds" in out


def test_check_unknown_id(capsys):
    code, _, err = run(capsys, "check", "no-such-id")
    assert code == 2
    assert "unknown identity" in err


def test_check_list(capsys):
    code, out, _ = run(capsys, "check", "--list")
    assert code == 0
    assert "andrews-a1" in out
    assert "rothe-hagen" in out
    assert "product-laws" in out


def test_check_list_jsonl(capsys):
    code, out, _ = run(capsys, "check", "--list", "--format", "jsonl")
    assert code == 0
    ids = [json.loads(l)["id"] for l in lines(out)]
    assert len(ids) == 18


def test_check_all_small_grid_jsonl(capsys):
    code, out, _ = run(
        capsys, "check", "--all", "--max-n", "6", "--format", "jsonl"
    )
    assert code == 0
    recs = [json.loads(l) for l in lines(out)]
    assert len(recs) == 18
    assert all(r["verdict"] == "holds" for r in recs)
    for line, rec in zip(lines(out), recs):
        assert json.dumps(rec, sort_keys=True, separators=(",", ":")) == line


def test_check_requires_target(capsys):
    code, _, err = run(capsys, "check")
    assert code == 2


def test_check_pin_on_wrong_identity(capsys):
    code, _, err = run(capsys, "check", "andrews-a1", "--x", "2")
    assert code == 2


# -- hyper ----------------------------------------------------------------------


def test_hyper_catalan(capsys):
    code, out, _ = run(
        capsys, "hyper", "--upper", "1/2,1", "--lower", "2", "--scale", "4",
        "--terms", "5",
    )
    assert code == 0
    assert out == "1 1 2 5 14\n"


def test_hyper_single_term(capsys):
    code, out, _ = run(capsys, "hyper", "--upper", "1", "--terms", "1")
    assert code == 0
    assert out == "1\n"


def test_hyper_matches_h_series(capsys):
    # the q = 3 parameter lists: upper (3+i)/3, lower (3+i)/2, scale 27/4
    code, out, _ = run(
        capsys,
        "hyper",
        "--upper",
        "1,4/3,5/3",
        "--lower",
        "2,5/2",
        "--scale",
        "27/4",
        "--terms",
        "8",
    )
    assert code == 0
    assert out.split() == [str(c) for c in h_for_binomial_A(3, 8).coeffs]


def test_hyper_pole_exit_code(capsys):
    code, _, err = run(capsys, "hyper", "--upper", "1", "--lower", "0", "--terms", "3")
    assert code == 2


def test_hyper_bad_rational(capsys):
    code, _, err = run(capsys, "hyper", "--upper", "x", "--terms", "3")
    assert code == 2


def test_hyper_jsonl(capsys):
    code, out, _ = run(
        capsys, "hyper", "--upper", "1", "--terms", "4", "--format", "jsonl"
    )
    assert code == 0
    rec = json.loads(out)
    assert rec == {"prec": 4, "coeffs": ["1", "1", "1", "1"]}
