"""CLI behaviour: exit codes, golden outputs, and error reporting."""

import subprocess
import sys

import pytest

from conftest import CORPORA, FIXTURES, ROOT
from ontrust.cli import main

EXPECTED = CORPORA / "expected"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


GOLDEN_CASES = [
    ("evoting", "validate", ()),
    ("evoting", "classify", ()),
    ("evoting", "degree", ("--context", "election", "--scale", "lmh")),
    ("evoting", "risk", ()),
    ("ai-diagnosis", "validate", ()),
    ("ai-diagnosis", "classify", ()),
    ("ai-diagnosis", "degree", ("--context", "experiment", "--scale", "lmh")),
    ("ai-diagnosis", "risk", ()),
]


@pytest.mark.parametrize("name,command,extra", GOLDEN_CASES, ids=lambda v: str(v))
def test_golden_outputs(capsys, name, command, extra):
    code, out, err = run_cli(capsys, command, str(CORPORA / f"{name}.onti"), *extra)
    assert code == 0
    assert out == (EXPECTED / f"{name}-{command}.txt").read_text()
    assert err == ""


def test_validate_clean_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "validate", str(FIXTURES / "closed-cycle.onti"))
    assert code == 0
    assert out.endswith("0 errors, 0 warnings\n")


def test_validate_violation_exits_one(capsys):
    code, out, _ = run_cli(capsys, "validate", str(FIXTURES / "open-cycle.onti"))
    assert code == 1
    lines = out.strip().splitlines()
    assert lines[-1] == "1 errors, 0 warnings"
    assert lines[0].startswith("A1_GroundTrustInherence\terror\t")


def test_missing_file_exits_two(capsys):
    code, out, err = run_cli(capsys, "validate", "no-such-file.onti")
    assert code == 2
    assert out == "" and err.startswith("error: ")


def test_parse_error_exits_two_with_line(tmp_path, capsys):
    doc = tmp_path / "bad.onti"
    doc.write_text("ontrust-i/1\nelement a Wizard\n")
    code, _, err = run_cli(capsys, "validate", str(doc))
    assert code == 2
    assert "line 2" in err


def test_unknown_context_exits_two(capsys):
    code, _, err = run_cli(
        capsys, "degree", str(CORPORA / "evoting.onti"), "--context", "nope"
    )
    assert code == 2
    assert "nope" in err


def test_usage_error_exits_two(capsys):
    assert run_cli(capsys, "degree", str(CORPORA / "evoting.onti"))[0] == 2
    assert run_cli(capsys, "frobnicate")[0] == 2


def test_version_flag(capsys):
    code, out, _ = run_cli(capsys, "--version")
    assert code == 0
    assert out == "ontrust 1.0.0 (format ontrust-i/1)\n"


def test_classify_single_trust(capsys):
    code, out, _ = run_cli(
        capsys, "classify", str(CORPORA / "ai-diagnosis.onti"), "--trust", "trust_ai"
    )
    assert code == 0
    assert out == "trust_ai\tpatient -> AI doctor\tWeakTrust\n"


def test_find_witness_and_no_witness(capsys):
    sig = str(FIXTURES / "open-cycle.sig")
    code, out, _ = run_cli(
        capsys,
        "find", "--sig", sig, "--property", "open-cycle:GroundTrust",
        "--disable", "A1", "--bound", "6",
    )
    assert code == 0
    assert out.startswith("ontrust-i/1\n") and "GroundTrust" in out

    code, out, _ = run_cli(
        capsys,
        "find", "--sig", sig, "--property", "open-cycle:GroundTrust", "--bound", "6",
    )
    assert code == 0
    assert out == "no witness\n"


def test_find_bad_axiom_exits_two(capsys):
    code, _, err = run_cli(
        capsys,
        "find", "--sig", str(FIXTURES / "open-cycle.sig"),
        "--property", "satisfiable", "--disable", "A99",
    )
    assert code == 2
    assert "A99" in err


def test_export_triples(capsys):
    code, out, _ = run_cli(capsys, "export", str(FIXTURES / "context-contrast.onti"))
    assert code == 0
    lines = out.strip().splitlines()
    assert "<trust_carl> <rdf:type> <gufo:SocialTrust> ." in lines
    assert all(line.endswith(" .") for line in lines)


def test_installed_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ontrust.cli", "validate", str(CORPORA / "evoting.onti")],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )
    assert proc.returncode == 0
    assert proc.stdout.endswith("0 errors, 0 warnings\n")
