"""Witness election corpus and the ``.election`` file format.

Format (UTF-8, line based)::

    system: veto
    candidates: a b c
    spoiler-candidates: d        # add-candidates inputs only; may be empty
    k: 1                         # limited inputs only
    votes:
    c>a>b
    spoiler-votes:               # adding-voters inputs only; may be empty
    c>a>b

Approval votes are bitstrings ordered by ``candidates`` then
``spoiler-candidates``. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..control.instances import (
    AddCandInput,
    AddVoterInput,
    DeleteInput,
    PartitionInput,
    ReducedInstance,
    UnlimitedAddCandInput,
)
from ..control.types import CompatibilityClass
from ..elections import ApprovalVote, LinearVote, Profile, VotingRule, check_name
from ..errors import DomainError, ParseError
from .tables import ROWS

_PREFIX = {"Plur": VotingRule.PLURALITY, "Veto": VotingRule.VETO, "Appr": VotingRule.APPROVAL}
_HEADER = re.compile(r"^(system|candidates|spoiler-candidates|k|votes|spoiler-votes):(.*)$")


@dataclass(frozen=True)
class WitnessRecord:
    id: str
    rule: VotingRule
    candidates: tuple[str, ...]
    votes: Profile
    spoilers: tuple[str, ...] | None = None
    spoiler_votes: Profile | None = None
    k: int | None = None
    generated: bool = False

    @property
    def compat_class(self) -> CompatibilityClass:
        if self.spoilers is not None:
            if self.k is None:
                return CompatibilityClass.UNLIMITED_ADD_CANDIDATES
            return CompatibilityClass.ADD_CANDIDATES
        if self.spoiler_votes is not None:
            return CompatibilityClass.ADD_VOTERS
        if self.k is not None:
            return CompatibilityClass.DELETE
        return CompatibilityClass.PARTITION

    def reduced(self) -> ReducedInstance:
        cls = self.compat_class
        if cls is CompatibilityClass.PARTITION:
            return PartitionInput(self.candidates, self.votes)
        if cls is CompatibilityClass.ADD_CANDIDATES:
            return AddCandInput(self.candidates, self.spoilers, self.votes, self.k)
        if cls is CompatibilityClass.UNLIMITED_ADD_CANDIDATES:
            return UnlimitedAddCandInput(self.candidates, self.spoilers, self.votes)
        if cls is CompatibilityClass.DELETE:
            return DeleteInput(self.candidates, self.votes, self.k)
        return AddVoterInput(self.candidates, self.votes, self.spoiler_votes, self.k)


def id_key(record_id: str):
    """Natural sort key: ``Plur.9`` before ``Plur.10``."""
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", record_id)]


def record_from_reduced(
    record_id: str, rule: VotingRule, reduced: ReducedInstance, generated: bool = True
) -> WitnessRecord:
    return WitnessRecord(
        id=record_id,
        rule=VotingRule(rule),
        candidates=reduced.candidates,
        votes=reduced.votes,
        spoilers=getattr(reduced, "spoilers", None),
        spoiler_votes=getattr(reduced, "spoiler_votes", None),
        k=getattr(reduced, "k", None),
        generated=generated,
    )


# ---------------------------------------------------------------- parsing


def _parse_vote(token: str, rule: VotingRule, universe: tuple[str, ...], line: int):
    if rule.linear:
        ranking = tuple(token.split(">"))
        if sorted(ranking) != sorted(universe) or len(set(ranking)) != len(ranking):
            raise ParseError(f"vote {token!r} is not a permutation of {' '.join(universe)}", line)
        return LinearVote(ranking)
    if len(token) != len(universe) or set(token) - {"0", "1"}:
        raise ParseError(f"bitstring {token!r} does not have length {len(universe)}", line)
    return ApprovalVote(universe, token)


def _names(value: str, line: int) -> tuple[str, ...]:
    names = tuple(value.split())
    try:
        for c in names:
            check_name(c)
    except DomainError as e:
        raise ParseError(str(e), line) from None
    if len(set(names)) != len(names):
        raise ParseError("duplicate candidate", line)
    return names


def parse_instance(text: str, record_id: str = "input") -> WitnessRecord:
    fields: dict[str, tuple[int, str]] = {}
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            key, value = m.group(1), m.group(2).strip()
            if key in fields or key in sections:
                raise ParseError(f"duplicate header {key!r}", lineno)
            if key in ("votes", "spoiler-votes"):
                if value:
                    raise ParseError(f"{key}: takes one vote per following line", lineno)
                sections[key] = []
                current = key
            else:
                fields[key] = (lineno, value)
                current = None
        elif current is not None:
            if len(line.split()) != 1:
                raise ParseError(f"expected one vote per line, got {line!r}", lineno)
            sections[current].append((lineno, line))
        else:
            raise ParseError(f"malformed header {line!r}", lineno)

    for key in ("system", "candidates"):
        if key not in fields:
            raise ParseError(f"missing {key}: header")
    if "votes" not in sections:
        raise ParseError("missing votes: section")
    line, system = fields["system"]
    try:
        rule = VotingRule(system)
    except ValueError:
        raise ParseError(f"unknown system {system!r}", line) from None
    candidates = _names(fields["candidates"][1], fields["candidates"][0])
    spoilers = None
    if "spoiler-candidates" in fields:
        line, value = fields["spoiler-candidates"]
        spoilers = _names(value, line)
        if set(spoilers) & set(candidates):
            raise ParseError("duplicate candidate across candidates and spoilers", line)
    k = None
    if "k" in fields:
        line, value = fields["k"]
        if not value.isdigit():
            raise ParseError(f"k must be a nonnegative integer, got {value!r}", line)
        k = int(value)
    if spoilers is not None and "spoiler-votes" in sections:
        raise ParseError("spoiler-candidates and spoiler-votes cannot be combined")
    if "spoiler-votes" in sections and k is None:
        raise ParseError("spoiler-votes require k:")

    universe = candidates + (spoilers or ())
    votes = Profile(tuple(_parse_vote(t, rule, universe, n) for n, t in sections["votes"]))
    spoiler_votes = None
    if "spoiler-votes" in sections:
        spoiler_votes = Profile(
            tuple(_parse_vote(t, rule, candidates, n) for n, t in sections["spoiler-votes"])
        )
    return WitnessRecord(record_id, rule, candidates, votes, spoilers, spoiler_votes, k)


def serialize_instance(record: WitnessRecord) -> str:
    out = [f"system: {record.rule.value}", "candidates: " + " ".join(record.candidates)]
    if record.spoilers is not None:
        out.append(" ".join(["spoiler-candidates:", *record.spoilers]))
    if record.k is not None:
        out.append(f"k: {record.k}")
    out.append("votes:")
    out += [str(v) for v in record.votes]
    if record.spoiler_votes is not None:
        out.append("spoiler-votes:")
        out += [str(v) for v in record.spoiler_votes]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- embedded tables


def _row_record(row) -> WitnessRecord:
    rid, c, s, v, u, k, generated = row
    rule = _PREFIX[rid.split(".")[0]]
    candidates = tuple(c.split())
    spoilers = None if s is None else tuple(s.split())
    universe = candidates + (spoilers or ())

    def profile(text, over):
        return Profile(tuple(_parse_vote(t, rule, over, 0) for t in text.split()))

    return WitnessRecord(
        id=rid,
        rule=rule,
        candidates=candidates,
        votes=profile(v, universe),
        spoilers=spoilers,
        spoiler_votes=None if u is None else profile(u, candidates),
        k=k,
        generated=generated,
    )


_CORPUS = tuple(_row_record(r) for r in ROWS)


def load_builtin_corpus(rule: VotingRule | str | None = None) -> list[WitnessRecord]:
    if rule is None:
        return list(_CORPUS)
    rule = VotingRule(rule)
    return [r for r in _CORPUS if r.rule is rule]


def get_record(record_id: str) -> WitnessRecord:
    for r in _CORPUS:
        if r.id == record_id:
            return r
    raise KeyError(record_id)


# Property-alpha counterexamples. The plurality one is worked by hand (a wins;
# dropping b lets c overtake a). The veto one is the smallest found by the
# exhaustive scan in scripts/find_alpha_counterexamples.py: b ties a with one
# vote, yet loses the head-to-head election ({a, b}, a>b).
ALPHA_COUNTEREXAMPLES = {
    VotingRule.PLURALITY: parse_instance(
        "system: plurality\ncandidates: a b c\nvotes:\na>b>c\na>c>b\nb>c>a\nb>c>a\nc>a>b\n",
        "Plur.alpha",
    ),
    VotingRule.VETO: parse_instance(
        "system: veto\ncandidates: a b c\nvotes:\na>b>c\n",
        "Veto.alpha",
    ),
}


# ---------------------------------------------------------------- directories


def export_corpus(out_dir: str | Path, records=None) -> list[Path]:
    out_dir = Path(out_dir)
    written = []
    for rec in records if records is not None else _CORPUS:
        path = out_dir / rec.rule.value / f"{rec.id}.election"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(serialize_instance(rec), encoding="utf-8")
        written.append(path)
    return written


def load_corpus_dir(path: str | Path, rule: VotingRule | str | None = None) -> list[WitnessRecord]:
    """Read every ``*.election`` file below ``path``; ids come from file stems."""
    path = Path(path)
    records = []
    for f in sorted(path.rglob("*.election")):
        try:
            rec = parse_instance(f.read_text(encoding="utf-8"), f.stem)
        except ParseError as e:
            raise ParseError(f"{f}: {e}") from None
        if rule is None or rec.rule is VotingRule(rule):
            records.append(rec)
    return sorted(records, key=lambda r: id_key(r.id))
