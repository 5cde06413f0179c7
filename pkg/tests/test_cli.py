import pytest

from electcontrol.cli import run

INTRO = "system: plurality\ncandidates: a b c\nk: 1\nvotes:\na>b>c\na>b>c\na>c>b\nb>c>a\n"


@pytest.fixture
def corpus_dir(tmp_path):
    assert run(["export-corpus", "--out", str(tmp_path / "corpus")]) == 0
    return tmp_path / "corpus"


@pytest.fixture
def intro(tmp_path):
    p = tmp_path / "plur_intro.election"
    p.write_text(INTRO, encoding="utf-8")
    return str(p)


def test_decide_yes(intro, capsys):
    assert run(["decide", "--system", "plurality", "--type", "CC-DC-UW", "--input", intro, "--focus", "b"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "yes" and out[1] == "witness: delete {a}"


def test_decide_no(intro, capsys):
    assert run(["decide", "--system", "plurality", "--type", "CC-DC-UW", "--input", intro, "--focus", "c"]) == 1
    assert capsys.readouterr().out == "no\n"


def test_fset_plur3(corpus_dir, capsys):
    path = str(corpus_dir / "plurality" / "Plur.3.election")
    assert run(["fset", "--system", "plurality", "--type", "DC-PC-TE-NUW", "--input", path]) == 0
    assert capsys.readouterr().out == "{b}\n"


def test_compare_plur3(corpus_dir, capsys):
    path = str(corpus_dir / "plurality" / "Plur.3.election")
    argv = ["compare", "--system", "plurality", "--type-a", "CC-PC-TE-NUW", "--type-b", "DC-PC-TE-NUW", "--input", path]
    assert run(argv) == 0
    assert capsys.readouterr().out == "a-b {a}\nb-a {b}\n"


def test_classify_all_dir_matches_embedded(corpus_dir, capsys):
    assert run(["classify-all", "--system", "veto", "--corpus", str(corpus_dir)]) == 0
    from_dir = capsys.readouterr().out
    assert run(["classify-all", "--system", "veto"]) == 0
    assert capsys.readouterr().out == from_dir
    assert len(from_dir.splitlines()) == 322


def test_verify_corpus_veto(capsys):
    assert run(["verify", "--suite", "corpus", "--system", "veto"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and out.rstrip().endswith("corpus veto pass")


def test_verify_alpha_small(capsys):
    assert run(["verify", "--suite", "alpha", "--system", "approval", "--trials", "50"]) == 0


def test_search_found_and_witness_file(tmp_path, capsys):
    out = tmp_path / "w.election"
    argv = ["search", "--system", "veto", "--type-a", "DC-PV-TP-UW", "--type-b", "DC-PV-TE-NUW",
            "--direction", "b-a", "--seed", "7", "--max-trials", "1000", "--out", str(out)]
    assert run(argv) == 0
    text = capsys.readouterr().out
    assert "result=found" in text and out.read_text().startswith("system: veto")
    assert run(["fset", "--system", "veto", "--type", "DC-PV-TE-NUW", "--input", str(out)]) == 0


def test_search_exhausted(capsys):
    argv = ["search", "--system", "plurality", "--type-a", "DC-RPC-TP-NUW", "--type-b", "DC-PC-TP-NUW",
            "--max-trials", "20", "--candidates", "1:3", "--votes", "0:3"]
    assert run(argv) == 1
    assert capsys.readouterr().out.rstrip().endswith("exhausted")


@pytest.mark.parametrize(
    "argv",
    [
        ["fset", "--system", "borda", "--type", "CC-PC-TE-NUW", "--input", "x"],
        ["fset", "--system", "plurality", "--type", "CC-XX-UW", "--input", "x"],
        ["fset", "--system", "plurality", "--bogus"],
        ["verify", "--suite", "nope", "--system", "veto"],
        ["compare", "--system", "plurality", "--type-a", "CC-AC-UW", "--type-b", "CC-DV-UW", "--input", "x"],
        ["search", "--system", "veto", "--type-a", "CC-AC-UW", "--type-b", "CC-DV-UW"],
        ["search", "--system", "veto", "--type-a", "CC-AC-UW", "--type-b", "CC-AC-NUW", "--votes", "0:30"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_missing_file_is_io_error(tmp_path, capsys):
    argv = ["fset", "--system", "plurality", "--type", "CC-PC-TE-NUW", "--input", str(tmp_path / "nope.election")]
    assert run(argv) == 3


def test_malformed_file_is_io_error(tmp_path, capsys):
    p = tmp_path / "bad.election"
    p.write_text("system: plurality\ncandidates: a b\nvotes:\na>c\n", encoding="utf-8")
    assert run(["fset", "--system", "plurality", "--type", "CC-PC-TE-NUW", "--input", str(p)]) == 3
    assert "line 4" in capsys.readouterr().err


def test_wrong_class_and_system(intro, capsys):
    assert run(["fset", "--system", "plurality", "--type", "CC-PC-TE-NUW", "--input", intro]) == 2
    assert run(["fset", "--system", "veto", "--type", "CC-DC-UW", "--input", intro]) == 2
    assert run(["decide", "--system", "plurality", "--type", "CC-DC-UW", "--input", intro, "--focus", "z"]) == 2
