"""Command-line interface: exit codes, output formats, determinism."""

import json

import pytest

from pseudobe import cli
from pseudobe.algebra import check_axioms, parse_algebra


def run(capsys, *argv):
    code = cli.run(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.fixture
def alg(fixtures_dir):
    def path(name):
        return str(fixtures_dir / name)

    return path


def test_check_pass(capsys, alg):
    code, out, err = run(capsys, "check", alg("proper6.alg"))
    assert code == 0
    assert "holds true" in out and err == ""


def test_check_fail_with_witness(capsys, alg):
    code, out, _ = run(
        capsys, "check", alg("proper6.alg"), "--system", "pseudo-BCK"
    )
    assert code == 1
    assert "holds false" in out
    assert "violation psBCK" in out
    assert "violations-total" in out


def test_classify_text(capsys, alg):
    code, out, _ = run(capsys, "classify", alg("bounded6.alg"))
    assert code == 0
    assert "bounded true" in out
    assert "good " in out and "regular {" in out


def test_classify_exit_on_non_model(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text(
        "algebra bad\nelements 1 a\nunit 1\n"
        "table arrow\n1 a\na a\ntable squig\n1 a\na a\nend\n"
    )
    code, out, _ = run(capsys, "classify", str(bad))
    assert code == 1
    assert "pseudo-be false" in out


def test_ds_listing(capsys, alg):
    code, out, _ = run(capsys, "ds", alg("bck4.alg"))
    assert code == 0
    assert "ds {1,b} prime maximal" in out
    assert "count 3" in out


def test_ds_filtered(capsys, alg):
    code, out, _ = run(capsys, "ds", alg("proper6.alg"), "--fantastic")
    assert code == 0
    assert "count 4" in out


def test_ds_involutive_requires_bounded(capsys, alg):
    code, _, err = run(capsys, "ds", alg("bck4.alg"), "--involutive")
    assert code == 2
    assert err.startswith("error:")


def test_quotient(capsys, alg):
    code, out, _ = run(
        capsys, "quotient", alg("conda5.alg"), "--ds", "{1,a,d}"
    )
    assert code == 0
    assert "class {1,a,d}" in out and "class {b,c}" in out
    quoted = "\n".join(
        line.split(" ", 1)[1]
        for line in out.splitlines()
        if line.startswith("quotient ")
    )
    q = parse_algebra(quoted)
    assert q.size == 2 and check_axioms(q, "pseudo-BE").holds
    assert q.arrow == q.squig


def test_quotient_rejects_non_ds(capsys, alg):
    code, _, err = run(
        capsys, "quotient", alg("conda5.alg"), "--ds", "{1,a}"
    )
    assert code == 2 and "error:" in err


def test_states_summary_and_vertices(capsys, alg):
    code, out, _ = run(capsys, "states", alg("conda5.alg"), "--vertices")
    assert code == 0
    assert "dimension 2" in out
    assert "vertex-count 4" in out
    assert out.count("vertex ") == 4


def test_states_verify(capsys, alg):
    code, out, _ = run(
        capsys,
        "states",
        alg("conda5.alg"),
        "--verify",
        alg("s1_half.state"),
        "--morphism",
    )
    assert code == 0
    assert "bosbach true" in out and "state-morphism true" in out


def test_states_verify_morphism_failure(capsys, alg):
    code, out, _ = run(
        capsys,
        "states",
        alg("conda5.alg"),
        "--verify",
        alg("s3_half_third.state"),
        "--morphism",
    )
    assert code == 1
    assert "state-morphism false" in out and "violation sm" in out


def test_measures(capsys, alg):
    code, out, _ = run(capsys, "measures", alg("conda5.alg"), "--rays")
    assert code == 0
    assert "ray-count 2" in out and out.count("ray ") == 2

    code, out, _ = run(
        capsys, "measures", alg("conda5.alg"), "--verify", alg("m3_1_2.measure")
    )
    assert code == 0
    assert "is-measure true" in out and "is-measure-morphism false" in out


def test_internal(capsys, alg):
    code, out, _ = run(capsys, "internal", alg("conda5.alg"), "--kind", "I")
    assert code == 0 and "count 10" in out

    code, out, _ = run(capsys, "internal", alg("conda5.alg"), "--kind", "smo")
    assert code == 0 and "count 9" in out

    code, out, _ = run(
        capsys,
        "internal",
        alg("conda5.alg"),
        "--kind",
        "II",
        "--verify",
        alg("mu6.op"),
    )
    assert code == 0 and "valid true" in out


def test_valuations(capsys, alg):
    code, out, _ = run(capsys, "valuations", alg("conda5.alg"), "--rays")
    assert code == 0 and "ray-count 2" in out

    code, out, _ = run(
        capsys,
        "valuations",
        alg("conda5.alg"),
        "--verify",
        alg("phi_1_3.valuation"),
        "--commutative",
    )
    assert code == 0
    assert "is-pseudo-valuation true" in out and "is-commutative true" in out

    code, out, _ = run(
        capsys,
        "valuations",
        alg("conda5.alg"),
        "--verify",
        alg("phi_weak.valuation"),
    )
    assert code == 1
    assert "is-pseudo-valuation false" in out
    assert "is-weak-pseudo-valuation true" in out


def test_hom(capsys, alg):
    code, out, _ = run(
        capsys,
        "hom",
        alg("conda5.alg"),
        alg("conda5.alg"),
        "--verify",
        alg("id_conda5.hom"),
    )
    assert code == 0
    assert "is-homomorphism true" in out and "kernel {1}" in out

    code, out, _ = run(
        capsys, "hom", alg("conda5.alg"), alg("conda5.alg"), "--iso"
    )
    assert code == 0 and "count 1" in out

    code, out, _ = run(
        capsys, "hom", alg("bck4.alg"), alg("conda5.alg"), "--iso"
    )
    assert code == 1 and "count 0" in out


def test_find_and_emit(capsys, tmp_path):
    outdir = tmp_path / "models"
    code, out, _ = run(
        capsys, "find", "--size", "3", "--emit", str(outdir)
    )
    assert code == 0 and "count 4" in out
    emitted = sorted(outdir.glob("*.alg"))
    assert len(emitted) == 4
    for path in emitted:
        m = parse_algebra(path.read_text())
        assert check_axioms(m, "pseudo-BE").holds


def test_find_flags_and_limit(capsys):
    code, out, _ = run(
        capsys, "find", "--size", "4", "--flag", "commutative", "--limit", "3"
    )
    assert code == 0 and "count 3" in out


def test_meta(capsys):
    code, out, _ = run(capsys, "meta", "--max-size", "3")
    assert code == 0
    assert "models 6" in out and "clean true" in out
    assert out.count("theorem ") == 16


def test_json_output(capsys, alg):
    code, out, _ = run(
        capsys, "--format", "json", "ds", alg("bck4.alg")
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 3
    assert isinstance(obj["ds"], list) and len(obj["ds"]) == 3


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "/nonexistent.alg")
    assert code == 2 and err.startswith("error:")


def test_malformed_file_is_usage_error(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra x\nelements 1 a\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and err.startswith("error:")


def test_unknown_flag_exits_two(capsys, alg):
    with pytest.raises(SystemExit) as exc:
        cli.run(["check", alg("bck4.alg"), "--bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_determinism_three_runs(capsys, alg, tmp_path):
    commands = [
        ["check", alg("proper6.alg"), "--system", "pseudo-BE"],
        ["classify", alg("bounded6.alg")],
        ["ds", alg("conda5.alg")],
        ["quotient", alg("conda5.alg"), "--ds", "{1,a,d}"],
        ["states", alg("conda5.alg"), "--vertices"],
        ["measures", alg("conda5.alg"), "--rays"],
        ["internal", alg("conda5.alg"), "--kind", "smo"],
        ["valuations", alg("conda5.alg"), "--rays"],
        ["hom", alg("bck4.alg"), alg("bck4.alg")],
        ["find", "--size", "3"],
        ["meta", "--max-size", "2"],
    ]
    for argv in commands:
        outs = set()
        for _ in range(3):
            _, out, _ = run(capsys, *argv)
            outs.add(out)
        assert len(outs) == 1, argv


def test_workers_do_not_change_output(capsys):
    _, out1, _ = run(capsys, "--workers", "1", "meta", "--max-size", "3")
    _, out8, _ = run(capsys, "--workers", "8", "meta", "--max-size", "3")
    assert out1 == out8
