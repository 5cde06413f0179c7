import pytest
from hypothesis import given
from hypothesis import strategies as st

from electcontrol.control import CompatibilityClass, class_focus_sets
from electcontrol.corpus import (
    ALPHA_COUNTEREXAMPLES,
    export_corpus,
    get_record,
    id_key,
    load_builtin_corpus,
    load_corpus_dir,
    parse_instance,
    record_from_reduced,
    serialize_instance,
)
from electcontrol.elections import VotingRule, approval_profile, linear_profile
from electcontrol.errors import ParseError
from strategies import reduced_inputs, rules

CORPUS = load_builtin_corpus()


def test_counts_per_rule():
    assert len(load_builtin_corpus("plurality")) == 50
    assert len(load_builtin_corpus("veto")) == 46
    assert len(load_builtin_corpus("approval")) == 32
    assert len({r.id for r in CORPUS}) == 128


def test_ids_are_contiguous():
    for prefix, n in (("Plur", 50), ("Veto", 46), ("Appr", 32)):
        got = sorted((r.id for r in CORPUS if r.id.startswith(prefix)), key=id_key)
        assert got == [f"{prefix}.{i}" for i in range(1, n + 1)]


def test_parse_plur3():
    rec = parse_instance("system: plurality\ncandidates: a b\nvotes:\na>b\n")
    ref = get_record("Plur.3")
    assert rec.rule is ref.rule and rec.candidates == ref.candidates
    assert rec.votes == ref.votes == linear_profile("a>b")
    assert rec.reduced() == ref.reduced()


def test_parse_appr2():
    rec = parse_instance("system: approval\ncandidates: a b\nvotes:\n10\n01\n")
    assert rec.reduced() == get_record("Appr.2").reduced()
    assert rec.votes == approval_profile("ab", "10", "01")


def test_parse_veto36():
    text = "system: veto\ncandidates: a b c\nk: 1\nvotes:\nc>a>b\nspoiler-votes:\nc>a>b\n"
    rec = parse_instance(text)
    assert rec.compat_class is CompatibilityClass.ADD_VOTERS
    assert rec.reduced() == get_record("Veto.36").reduced()


def test_plur33_serializes_empty_spoiler_line():
    text = serialize_instance(get_record("Plur.33"))
    assert "spoiler-candidates:\n" in text
    assert text == "system: plurality\ncandidates: a\nspoiler-candidates:\nk: 0\nvotes:\na\n"


def test_appr10_has_k0():
    assert "k: 0\n" in serialize_instance(get_record("Appr.10"))


@pytest.mark.parametrize("rec", CORPUS, ids=lambda r: r.id)
def test_round_trip_and_validity(rec):
    text = serialize_instance(rec)
    back = parse_instance(text, rec.id)
    assert serialize_instance(back) == text
    assert back.reduced() == rec.reduced()
    assert all(line == line.rstrip() for line in text.splitlines())


@pytest.mark.parametrize("rec", CORPUS, ids=lambda r: r.id)
def test_every_record_separates_some_pair(rec):
    fs = class_focus_sets(rec.rule, rec.reduced())
    assert len(set(fs.values())) >= 2


def test_comments_and_blank_lines_are_ignored():
    text = "# a witness\nsystem: veto   # rule\n\ncandidates: a b\nvotes:\n  a>b  \n# end\n"
    assert parse_instance(text).votes == linear_profile("a>b")


def test_empty_votes_section():
    rec = parse_instance("system: veto\ncandidates: a b\nvotes:\n")
    assert len(rec.votes) == 0


@pytest.mark.parametrize(
    "text,line",
    [
        ("system: plurality\ncandidates: a b\nvotes:\na>c\n", 4),
        ("system: plurality\ncandidates: a b\nvotes:\na>b>a\n", 4),
        ("system: approval\ncandidates: a b\nvotes:\n101\n", 4),
        ("system: approval\ncandidates: a b\nvotes:\n1x\n", 4),
        ("system: plurality\ncandidates: a a\nvotes:\n", 2),
        ("system: plurality\ncandidates: a b\nspoiler-candidates: b\nvotes:\n", 3),
        ("system: plurality\nbogus line\n", 2),
        ("system: plurality\ncandidates: a\ncandidates: a\nvotes:\n", 3),
        ("system: condorcet\ncandidates: a\nvotes:\n", 1),
        ("system: plurality\ncandidates: a\nk: -1\nvotes:\n", 3),
        ("system: plurality\ncandidates: a b\nvotes: a>b\n", 3),
        ("system: plurality\ncandidates: a b\nvotes:\na>b b>a\n", 4),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as e:
        parse_instance(text)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}:")


@pytest.mark.parametrize(
    "text",
    [
        "candidates: a\nvotes:\n",
        "system: veto\nvotes:\n",
        "system: veto\ncandidates: a\n",
        "system: veto\ncandidates: a\nvotes:\nspoiler-votes:\n",
    ],
)
def test_missing_sections(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_export_and_reload(tmp_path):
    written = export_corpus(tmp_path)
    assert len(written) == 128
    assert (tmp_path / "veto" / "Veto.36.election").exists()
    back = load_corpus_dir(tmp_path, "approval")
    assert [r.id for r in back] == [f"Appr.{i}" for i in range(1, 33)]
    for r in back:
        assert r.reduced() == get_record(r.id).reduced()


def test_load_dir_reports_file_on_error(tmp_path):
    (tmp_path / "bad.election").write_text("system: veto\n", encoding="utf-8")
    with pytest.raises(ParseError, match="bad.election"):
        load_corpus_dir(tmp_path)


def test_generated_flag_is_metadata_only():
    flagged = [r for r in CORPUS if r.generated]
    assert flagged
    rec = flagged[0]
    assert parse_instance(serialize_instance(rec)).reduced() == rec.reduced()


def test_alpha_counterexamples_are_linear_partition_inputs():
    for rule, rec in ALPHA_COUNTEREXAMPLES.items():
        assert rule.linear and rec.compat_class is CompatibilityClass.PARTITION


@pytest.mark.parametrize("cls", list(CompatibilityClass), ids=lambda c: c.value)
@given(rule=rules, data=st.data())
def test_round_trip_random_inputs(cls, rule, data):
    red = data.draw(reduced_inputs(rule, cls))
    rec = record_from_reduced("x", rule, red)
    text = serialize_instance(rec)
    back = parse_instance(text, "x")
    assert back.reduced() == red
    assert serialize_instance(back) == text
