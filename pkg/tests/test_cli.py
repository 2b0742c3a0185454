import json
import os
import shutil
import subprocess
import sys

import pytest

from gradekit import errors as E
from gradekit import fixtures
from gradekit.algebra import GradedAlgebra, check_grading
from gradekit.cli import CheckReport, WorkspaceConfig, build_parser, execute, main
from gradekit.files import (
    Loader,
    algebra_to_json,
    dumps,
    load,
    parse_definitions,
    scalar_from_json,
    vector_from_json,
)
from gradekit.tensor import GradedLieAlgebra

DATA = fixtures.data_path()


def run(*argv, config=None):
    args = build_parser().parse_args(list(argv))
    return execute(args, config)


@pytest.fixture
def data_dir(monkeypatch):
    monkeypatch.chdir(DATA)
    return DATA


def test_shipped_fixtures_match_generator():
    for name, obj in fixtures.fixture_files().items():
        with open(os.path.join(DATA, name), encoding="utf-8") as fh:
            assert fh.read() == dumps(obj), name


def test_all_fixtures_load():
    files = sorted(f for f in os.listdir(DATA) if f.endswith(".json"))
    objs = parse_definitions([os.path.join(DATA, f) for f in files])
    assert len(objs) == len(files)
    assert load(os.path.join(DATA, "s3.json")) == fixtures.s3()
    A = load(os.path.join(DATA, "s3-group-algebra.json"))
    assert isinstance(A, GradedAlgebra) and check_grading(A, "classical").holds
    assert isinstance(load(os.path.join(DATA, "heisenberg.json")), GradedLieAlgebra)


def test_zero_denominator():
    with pytest.raises(E.ParseError) as exc:
        scalar_from_json({"num": "1", "den": "0"})
    assert exc.value.path.endswith("den")


def test_index_out_of_range():
    B = fixtures.abelian_c3().basis
    with pytest.raises(E.ValidationError) as exc:
        vector_from_json([{"basis": 5, "num": "1", "den": "1"}], B)
    assert exc.value.witness == 5


def test_algebra_with_bad_index(tmp_path):
    shutil.copy(os.path.join(DATA, "s3.json"), tmp_path / "s3.json")
    obj = algebra_to_json(fixtures.s3_nc_counterexample(), "s3.json")
    obj["products"][0]["value"][0]["basis"] = 9
    (tmp_path / "bad.json").write_text(json.dumps(obj))
    with pytest.raises(E.ValidationError) as exc:
        load(str(tmp_path / "bad.json"))
    assert exc.value.witness == 9 and exc.value.file.endswith("bad.json")


def test_module_errors_are_wrapped(tmp_path):
    (tmp_path / "g.json").write_text(json.dumps({"table": [[0, 1], [1, 1]]}))
    with pytest.raises(E.ValidationError) as exc:
        load(str(tmp_path / "g.json"))
    assert isinstance(exc.value.cause, E.NoInverse)


def test_check_graded_nc(data_dir):
    rep, code = run("check-graded", "--algebra", "s3-commutator.json", "--mode", "nc")
    assert rep.verdict == "pass" and code == 0


def test_check_graded_classical(data_dir):
    rep, code = run("check-graded", "--algebra", "s3-commutator.json", "--mode", "classical")
    assert rep.verdict == "fail" and code == 1
    w = rep.witnesses[0]
    S3 = fixtures.s3()
    g, h = S3.index(w["g"]), S3.index(w["h"])
    assert not S3.commute(g, h)


def test_pbw_command(data_dir):
    rep, code = run("pbw", "--lie", "heisenberg.json", "--depth", "2")
    out = rep.to_json()
    assert out["pbw_count"] == 10 and out["independent"] is True and code == 0
    assert out["ideal_graded"] == "graded" and out["witnesses"] == []


def test_pbw_json_output(data_dir, capsys):
    assert main(["--format", "json", "pbw", "--lie", "abelian-s3.json", "--depth", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["pbw_count"] == 6 and out["ideal_graded"] == "not_graded"
    assert out["witnesses"]


def test_depth_env(data_dir, monkeypatch):
    monkeypatch.setenv("GRADEKIT_DEPTH", "2")
    args = build_parser().parse_args(["pbw", "--lie", "heisenberg.json"])
    from gradekit.cli import default_depth
    rep, _ = execute(args, WorkspaceConfig(depth=default_depth()))
    assert rep.details["depth"] == 2


def test_workspace_config(tmp_path):
    with pytest.raises(E.ValidationError):
        WorkspaceConfig(depth=0)
    with pytest.raises(E.ValidationError):
        WorkspaceConfig(paths={"x": str(tmp_path / "missing.json")})
    cfg = WorkspaceConfig(paths={"heis": os.path.join(DATA, "heisenberg.json")}, depth=2)
    rep, code = run("pbw", "--lie", "heis", config=cfg)
    assert rep.details["pbw_count"] == 10 and code == 0


def test_usage_errors(data_dir, capsys):
    assert main(["check-graded", "--algebra", "no-such-file.json"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert main(["pbw", "--lie", "heisenberg.json", "--depth", "0"]) == 2


def test_unknown_command():
    args = build_parser().parse_args(["check-lie", "--lie", "x"])
    args.command = "frobnicate"
    with pytest.raises(E.UnknownCommand):
        execute(args)


@pytest.mark.parametrize("argv", [
    ["deform", "--algebra", "s3-group-algebra.json", "--deformation", "commutator-s3.deformation.json"],
    ["deform", "--algebra", "s3-group-algebra.json", "--lambda", "1/2", "--mu", "1/2"],
    ["opposite", "--algebra", "s3-nc-counterexample.json"],
    ["restrict", "--algebra", "s3-group-algebra.json", "--hom", "c3-to-s3.json"],
    ["induce", "--algebra", "c3-group-algebra.json", "--hom", "c3-to-s3.json"],
    ["coarsen", "--algebra", "s3-group-algebra.json", "--subgroup", "a3.json"],
    ["coarsen", "--algebra", "s3-group-algebra.json", "--hom", "s3-to-s3-mod-a3.json"],
    ["lift", "--algebra", "s3-mod-a3-group-algebra.json", "--group", "s3.json", "--subgroup", "a3.json"],
    ["inverse-limit", "--diagram", "diagonal.diagram.json"],
])
def test_functor_output_roundtrips(data_dir, tmp_path, argv):
    out = tmp_path / "out.json"
    rep, code = run(*argv, "--out", str(out))
    assert code == 0
    text = out.read_text()
    again = Loader().load(str(out))
    assert dumps(algebra_to_json(again)) == text
    assert json.loads(text) == rep.output


@pytest.mark.parametrize("argv, verdict", [
    (["check-group", "--group", "s3.json", "--subgroup", "a3.json"], "pass"),
    (["check-lie", "--lie", "s3-lie.json"], "pass"),
    (["find-unit", "--algebra", "s3-half.json"], "informational"),
    (["inverse", "--algebra", "s3-group-algebra.json", "--index", "3", "--coeff", "3"], "pass"),
    (["adjunction-phi", "--algebra", "c3-group-algebra.json", "--hom", "c3-to-s3.json"], "pass"),
    (["adjunction-phi", "--algebra", "c3-group-algebra.json", "--hom", "c3-to-s3.json",
      "--target", "s3-group-algebra.json", "--map", "c3-into-s3.hom.json"], "pass"),
    (["adjunction-psi", "--algebra", "s3-group-algebra.json", "--subgroup", "a3.json"], "pass"),
    (["adjunction-psi", "--algebra", "s3-group-algebra.json", "--subgroup", "a3.json",
      "--deformation", "commutator-s3.deformation.json"], "pass"),
    (["inverse-limit", "--diagram", "diagonal.diagram.json"], "pass"),
    (["ideal-graded", "--lie", "abelian-s3.json", "--depth", "2"], "informational"),
    (["universal-property", "--lie", "s3-lie.json", "--algebra", "s3-group-algebra.json"], "pass"),
    (["check-graded", "--algebra", "s3-nc-counterexample.json"], "fail"),
])
def test_commands(data_dir, argv, verdict):
    rep, code = run(*argv)
    assert rep.verdict == verdict
    assert code == (1 if verdict == "fail" else 0)
    if verdict == "fail":
        assert rep.witnesses
    json.loads(dumps(rep.to_json()))


def test_exit_code_depends_only_on_verdict():
    for v, c in (("pass", 0), ("informational", 0), ("fail", 1)):
        assert CheckReport("x", v, timing=123.0).exit_code == c
        assert CheckReport("x", v, timing=0.0).exit_code == c


def test_console_script(data_dir):
    proc = subprocess.run([sys.executable, "-m", "gradekit.cli", "--format", "json", "check-graded",
                           "--algebra", "s3-commutator.json", "--mode", "classical"],
                          capture_output=True, text=True, cwd=data_dir)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["verdict"] == "fail"
