"""Command-line interface: flag grammar, exit codes, deterministic reports."""

import json

import pytest

from homalt.algfile import parse_algebra, serialize_algebra, serialize_morphism
from homalt.catalog import FamilyParams, mikheev_morphism
from homalt.cli import run


@pytest.fixture(scope="module")
def files(tmp_path_factory, mikheev, fam_sym, fam23, plain_twisted):
    root = tmp_path_factory.mktemp("cli")
    paths = {
        "mikheev": root / "mikheev.alg",
        "fam_sym": root / "family.alg",
        "fam23": root / "fam23.alg",
        "broken": root / "broken.alg",
        "beta": root / "beta.mor",
    }
    paths["mikheev"].write_text(serialize_algebra(mikheev))
    paths["fam_sym"].write_text(serialize_algebra(fam_sym))
    paths["fam23"].write_text(serialize_algebra(fam23))
    paths["broken"].write_text(serialize_algebra(plain_twisted))
    paths["beta"].write_text(
        serialize_morphism(mikheev_morphism(FamilyParams.symbolic()), 13, ("lambda", "xi")))
    return {k: str(v) for k, v in paths.items()}


def test_help_exits_zero(capsys):
    assert run(["check", "--help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_usage_errors(files, capsys):
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["check", "--algebra", files["mikheev"]]) == 2
    assert run(["check", "--algebra", files["mikheev"], "--identity", "right-alt",
                "--bogus"]) == 2


def test_check_right_alt_holds(files, capsys):
    code = run(["check", "--algebra", files["mikheev"], "--identity", "right-alt"])
    assert code == 0
    out = capsys.readouterr().out
    assert "right-alt" in out and "holds" in out


def test_check_left_alt_fails_with_witness(files, capsys):
    code = run(["check", "--algebra", files["mikheev"], "--identity", "left-alt"])
    assert code == 1
    out = capsys.readouterr().out
    assert "fails" in out
    assert "(e1, e1, e2)" in out
    assert "e7 - e8" in out


def test_check_broken_algebra_fails(files, capsys):
    code = run(["check", "--algebra", files["broken"], "--identity", "right-alt"])
    assert code == 1
    out = capsys.readouterr().out
    assert "fails" in out and "witness" in out


def test_check_registry_identity(files, capsys):
    code = run(["check", "--algebra", files["fam23"], "--identity", "eq5",
                "--strategy", "random", "--points", "5", "--seed", "3"])
    assert code == 0
    assert "random-pass" in capsys.readouterr().out


def test_check_precondition_violation_is_exit_2(files, capsys):
    code = run(["check", "--algebra", files["broken"], "--identity", "eq1",
                "--strategy", "random", "--points", "2", "--seed", "0"])
    assert code == 2
    assert "not right Hom-alternative" in capsys.readouterr().err


def test_check_unknown_identity(files, capsys):
    assert run(["check", "--algebra", files["mikheev"], "--identity", "nope"]) == 2


def test_check_rejects_basis_strategy_for_registry_ids(files, capsys):
    code = run(["check", "--algebra", files["mikheev"], "--identity", "theorem",
                "--strategy", "basis"])
    assert code == 2


def test_check_morphism_defaults_to_twist_map(files, capsys):
    assert run(["check", "--algebra", files["fam23"], "--identity", "morphism"]) == 0


def test_check_morphism_from_file(files, capsys):
    code = run(["check", "--algebra", files["mikheev"], "--identity", "morphism",
                "--morphism", files["beta"]])
    assert code == 0


def test_lemmas_random_on_family(files, capsys):
    code = run(["lemmas", "--mikheev", "--lambda", "2/1", "--xi", "3/1",
                "--strategy", "random", "--points", "5", "--seed", "7"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("random-pass") == 25


def test_lemmas_structural_errors_exit_2(files, capsys):
    code = run(["lemmas", "--algebra", files["broken"], "--strategy", "random",
                "--points", "2", "--seed", "0"])
    assert code == 2
    out = capsys.readouterr().out
    assert "fails" in out
    assert "error" in out


def test_json_requires_seed_for_random(files, capsys):
    code = run(["check", "--algebra", files["fam23"], "--identity", "eq5",
                "--strategy", "random", "--format", "json"])
    assert code == 2
    assert "--seed" in capsys.readouterr().err


def test_json_reports_are_byte_identical(files, capsys):
    argv = ["lemmas", "--algebra", files["fam23"], "--strategy", "random",
            "--points", "3", "--seed", "12", "--format", "json"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    records = json.loads(first)
    assert len(records) == 25
    assert all(rec["seed"] == 12 for rec in records)
    assert all(rec["status"] == "random-pass" for rec in records)


def test_json_witness_record(files, capsys):
    code = run(["check", "--algebra", files["broken"], "--identity", "right-alt",
                "--format", "json"])
    assert code == 1
    rec = json.loads(capsys.readouterr().out)[0]
    assert rec["status"] == "fails"
    assert rec["witness"]["basis"] == [0, 0, 1]
    assert rec["witness"]["pretty"]


def test_mikheev_write_and_parse(tmp_path, fam_sym, capsys):
    out = tmp_path / "sym.alg"
    assert run(["mikheev", "--symbolic", "--out", str(out)]) == 0
    written = parse_algebra(out.read_text())
    assert written.mu == fam_sym.mu
    assert written.alpha == fam_sym.alpha


def test_mikheev_rational_variant(tmp_path, fam23, capsys):
    out = tmp_path / "a23.alg"
    assert run(["mikheev", "--lambda", "2", "--xi", "3", "--out", str(out)]) == 0
    assert parse_algebra(out.read_text()).mu == fam23.mu


def test_mikheev_flag_conflicts(tmp_path, capsys):
    out = tmp_path / "x.alg"
    assert run(["mikheev", "--symbolic", "--lambda", "2", "--xi", "3",
                "--out", str(out)]) == 2
    assert run(["mikheev", "--lambda", "2", "--out", str(out)]) == 2


def test_twist_command(files, tmp_path, fam_sym, capsys):
    out = tmp_path / "twisted.alg"
    code = run(["twist", "--algebra", files["mikheev"], "--morphism", files["beta"],
                "--out", str(out)])
    assert code == 0
    T = parse_algebra(out.read_text())
    assert T.mu == fam_sym.mu
    assert T.alpha == fam_sym.alpha


def test_twist_rejects_non_morphism(files, tmp_path, capsys):
    bad = tmp_path / "bad.mor"
    bad.write_text(json.dumps({
        "dimension": 13,
        "matrix": [{"from": 0, "to": [{"index": 0, "coeff": "1"}]}],
    }))
    out = tmp_path / "out.alg"
    code = run(["twist", "--algebra", files["mikheev"], "--morphism", str(bad),
                "--out", str(out)])
    assert code == 2


def test_twist_dimension_mismatch(files, tmp_path, capsys):
    small = tmp_path / "small.mor"
    small.write_text(json.dumps({
        "dimension": 2,
        "matrix": [{"from": 0, "to": [{"index": 0, "coeff": "1"}]}],
    }))
    out = tmp_path / "out.alg"
    assert run(["twist", "--algebra", files["mikheev"], "--morphism", str(small),
                "--out", str(out)]) == 2


def test_power_text(files, capsys):
    code = run(["power", "--algebra", files["mikheev"], "--element", "e7 - e8",
                "--n", "2"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "-e13"


def test_power_json(files, capsys):
    code = run(["power", "--algebra", files["fam_sym"], "--element", "e7 - e8",
                "--n", "2", "--format", "json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"power": [{"index": 12,
                              "coeff": {"poly": [{"coeff": "-1",
                                                  "exps": {"lambda": 4, "xi": 2}}]}}]}


def test_power_bad_inputs(files, capsys):
    assert run(["power", "--algebra", files["mikheev"], "--element", "e7 - e8",
                "--n", "0"]) == 2
    assert run(["power", "--algebra", files["mikheev"], "--element", "e99",
                "--n", "2"]) == 2


def test_noniso(capsys):
    assert run(["noniso", "--params", "2", "3", "5", "7"]) == 0
    assert "certified" in capsys.readouterr().out
    assert run(["noniso", "--params", "2", "3", "2", "3"]) == 1
    assert "not certified" in capsys.readouterr().out
    assert run(["noniso", "--params", "0", "3", "5", "7"]) == 2
    assert run(["noniso", "--params", "2", "3", "5", "x"]) == 2


def test_missing_file(capsys):
    assert run(["check", "--algebra", "/nonexistent.alg", "--identity", "right-alt"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_check_needs_algebra_source(capsys):
    assert run(["check", "--identity", "right-alt"]) == 2
