import subprocess
import sys

import pytest

from morpholex import __version__
from morpholex.cli import main
from conftest import FIXTURES, RULES

COMMANDS = ["extract", "analyze", "evaluate", "summary", "recall", "report", "rules", "axioms", "check-model"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_summary_table1(capsys):
    assert run(capsys, "summary", "--table", str(FIXTURES / "table1.tsv")) == (0, "75.4\n", "")


def test_summary_table2(capsys):
    assert run(capsys, "summary", "--table", str(FIXTURES / "table2.tsv"))[1] == "81.7\n"


def test_analyze_traditionalize(capsys):
    code, out, _ = run(capsys, "analyze", "traditionalize", "--tag", "VB")
    assert (code, out) == (0, "[[tradition -al] -Aize]\n")


def test_analyze_inflected_and_filtered(capsys):
    assert run(capsys, "analyze", "centralized", "--tag", "VBD", "--affix", "-Aize")[1] == "[central -Aize]\n"
    assert run(capsys, "analyze", "subsidize", "--tag", "VB")[1] == "[subsidy -Nize]\n[sub- [side -Nize]]\n"


def test_analyze_no_parse(capsys):
    code, out, err = run(capsys, "analyze", "seize", "--tag", "VB")
    assert (code, out) == (0, "")
    assert "no analysis" in err


def test_rules_dump_matches_file(capsys):
    assert run(capsys, "rules", "--dump")[1] == (RULES / "builtin.rules").read_text()


def test_rules_env_var(capsys, monkeypatch):
    monkeypatch.setenv("MORPHOLEX_RULES", str(RULES / "structural.rules"))
    assert run(capsys, "rules", "--dump")[1] == (RULES / "structural.rules").read_text()


def test_rules_listing(capsys):
    lines = run(capsys, "rules")[1].splitlines()
    assert len(lines) == 20
    assert lines[0] == "re-\tprefix\tverb\tENTAILS-BASE,PRESUPS-RSTATE,RSTATE-EQ-BASE-RSTATE,TELIC"


def test_extract(capsys, tmp_path):
    code, out, _ = run(capsys, "extract", "--corpus", str(FIXTURES / "mini.corpus.txt"),
                       "--lexicon", str(FIXTURES / "lexicon.tsv"), "--out", str(tmp_path), "--affix", "-le")
    assert code == 0
    assert out == "affix\tcandidates\tanalyzed\trejected\tassignments\n-le\t2\t2\t0\t2\n"
    assert (tmp_path / "store.tsv").read_text().count("ACTIVITY") == 2


def test_extract_unknown_affix_writes_nothing(capsys, tmp_path):
    code, _, err = run(capsys, "extract", "--corpus", str(FIXTURES / "mini.corpus.txt"),
                       "--lexicon", str(FIXTURES / "lexicon.tsv"), "--out", str(tmp_path / "o"), "--affix", "-ish")
    assert code == 1 and "-ish" in err
    assert not (tmp_path / "o").exists()


def test_evaluate_and_report(capsys, tmp_path):
    code, out, _ = run(capsys, "evaluate", "--store", str(FIXTURES / "aize" / "store.tsv"),
                       "--gold", str(FIXTURES / "aize" / "gold.tsv"), "--role", "derived")
    assert code == 0
    assert out.splitlines()[1] == "CHANGE-OF-STATE\t-Aize\tderived\t63\t49\t77.8"
    path = tmp_path / "eval.tsv"
    path.write_text(out)
    assert run(capsys, "report", "--eval", str(path), "--format", "text")[1].splitlines()[1].endswith("78%")
    assert run(capsys, "report", "--eval", str(path), "--format", "tsv")[1] == out


def test_recall_from_lists_and_store(capsys, tmp_path):
    gold = str(FIXTURES / "recall" / "re.gold.txt")
    run(capsys, "extract", "--corpus", str(FIXTURES / "recall" / "re.corpus.txt"),
        "--lexicon", str(FIXTURES / "lexicon.tsv"), "--out", str(tmp_path), "--affix", "re-")
    assert run(capsys, "recall", "--extracted", str(tmp_path / "store.tsv"), "--gold", gold, "--affix", "re-")[1] == "85.0\n"
    assert run(capsys, "recall", "--extracted", gold, "--gold", gold)[1] == "100.0\n"


def test_axioms(capsys):
    code, out, _ = run(capsys, "axioms", "CHANGE-OF-STATE")
    assert code == 0 and out.startswith("For all predicates P with features CHANGE-OF-STATE and DYADIC:")
    out = run(capsys, "axioms", "CHANGE-OF-STATE", "--predicate", "formalize")[1]
    assert "rstate(formalize)" in out and "P(" not in out
    out = run(capsys, "axioms", "RSTATE-EQ-BASE", "--predicate", "centralize", "--related", "central")[1]
    assert "central(y)" in out


def test_axioms_errors(capsys):
    assert run(capsys, "axioms", "SHINY")[0] == 1
    code, _, err = run(capsys, "axioms", "SENTIENT")
    assert code == 1 and "no axiom" in err


def test_check_model(capsys):
    base = ["check-model", "--axiom-of", "CHANGE-OF-STATE", "--predicate", "formalize", "--model"]
    assert run(capsys, *base, str(FIXTURES / "models" / "m1.model"))[1] == "holds\n"
    assert run(capsys, *base, str(FIXTURES / "models" / "m1-mutant.model"))[1] == "fails x=a y=b e=e e2=e2\n"


def test_check_model_uninterpreted(capsys, tmp_path):
    path = tmp_path / "m.model"
    path.write_text("episode e\n")
    code, _, err = run(capsys, "check-model", "--model", str(path), "--axiom-of", "CHANGE-OF-STATE", "--predicate", "formalize")
    assert code == 1 and "uninterpreted" in err


@pytest.mark.parametrize("argv", [["bogus"], ["summary"], ["summary", "--table", "x", "--nope"], [], ["analyze", "x", "--tag", "VB", "--max-depth", "0"]])
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert "usage:" in err


def test_runtime_error_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "summary", "--table", str(tmp_path / "missing.tsv"))
    assert code == 2 and "missing.tsv" in err


def test_malformed_input_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("TELIC\tre-\n")
    assert run(capsys, "summary", "--table", str(path))[0] == 1


@pytest.mark.parametrize("command", COMMANDS)
def test_version_and_help_everywhere(capsys, command):
    code, out, _ = run(capsys, command, "--version")
    assert (code, out) == (0, f"morpholex {__version__}\n")
    code, out, _ = run(capsys, command, "--help")
    assert code == 0 and out.startswith("usage: morpholex " + command)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "morpholex", "summary", "--table", str(FIXTURES / "table2.tsv")],
                          capture_output=True, text=True, check=False)
    assert (proc.returncode, proc.stdout) == (0, "81.7\n")
