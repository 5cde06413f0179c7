"""Verification suites behind ``electcontrol verify``.

Each suite yields :class:`Check` results; a suite passes when all checks do.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .control.engine import class_focus_sets
from .control.types import CompatibilityClass, types_in_class
from .corpus import ALPHA_COUNTEREXAMPLES, load_builtin_corpus
from .elections import VotingRule
from .errors import UsageError
from .relations import (
    IMMUNE_TYPES,
    check_claim,
    claims_for,
    classify_all,
    contradictions,
    immunity_check,
    property_alpha,
    reverify_witness,
)
from .search import Direction, SearchConfig, SearchTarget, find_witness, random_instance, trial_rng

SUITES = ("collapses", "containments", "immunity", "alpha", "corpus")
STRICT_SEARCH_TRIALS = 100_000


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}{tail}"


def _claims(rule, kind, trials, seed) -> Iterator[Check]:
    for claim in claims_for(rule, kind):
        res = check_claim(rule, claim, trials=trials, seed=seed)
        if res.passed:
            yield Check(claim.name, True, f"trials={res.trials}")
        else:
            i, _, a, b, c = res.counterexample
            yield Check(claim.name, False, f"trial={i} {c} in {a} but not {b}")


def collapses(rule, trials=1000, seed=0) -> Iterator[Check]:
    yield from _claims(rule, "collapse", trials, seed)


def strict_witnesses(rule, seed=0, max_trials=STRICT_SEARCH_TRIALS) -> Iterator[Check]:
    """One-direction witnesses for every containment claimed to be proper."""
    cfg = SearchConfig(seed=seed, max_trials=max_trials)
    for claim in claims_for(rule, "subset"):
        if not claim.strict:
            continue
        for a, b in claim.pairs():
            res = find_witness(SearchTarget(rule, a, b, Direction.B_MINUS_A), cfg)
            ok = res.found and res.verified
            detail = f"trial={res.trial}" if res.found else "exhausted"
            yield Check(f"strict:{a}<{b}", ok, detail)


def containments(rule, trials=1000, seed=0) -> Iterator[Check]:
    yield from _claims(rule, "subset", trials, seed)
    yield from strict_witnesses(rule, seed)


def _random_inputs(rule, cls, trials, seed):
    cfg = SearchConfig(seed=seed, max_trials=trials)
    for i in range(trials):
        yield random_instance(trial_rng(seed, i), rule, cls, cfg)


def immunity(rule, trials=1000, seed=0) -> Iterator[Check]:
    rule = VotingRule(rule)
    if not IMMUNE_TYPES[rule]:
        yield Check(f"{rule}:no-immunities-claimed", True)
        return
    corpus = load_builtin_corpus(rule)
    for t in sorted(IMMUNE_TYPES[rule]):
        inputs = list(corpus) + list(_random_inputs(rule, t.compat_class, trials, seed))
        res = immunity_check(rule, t, inputs)
        detail = f"checked={res.checked}"
        if not res.passed:
            detail += f" focus={res.counterexample.focus}"
        yield Check(f"immune:{t}", res.passed, detail)


def alpha(rule, trials=1000, seed=0) -> Iterator[Check]:
    rule = VotingRule(rule)
    if rule is VotingRule.APPROVAL:
        elections = [
            r.reduced().election
            for r in load_builtin_corpus(rule)
            if r.compat_class is CompatibilityClass.PARTITION
        ]
        elections += [red.election for red in _random_inputs(rule, CompatibilityClass.PARTITION, trials, seed)]
        for unique in (False, True):
            bad = [e for e in elections if not property_alpha(rule, e, unique=unique)]
            name = "unique-alpha" if unique else "alpha"
            yield Check(f"{rule}:{name}", not bad, f"elections={len(elections)}")
        return
    rec = ALPHA_COUNTEREXAMPLES[rule]
    violated = not property_alpha(rule, rec.reduced().election)
    yield Check(f"{rule}:alpha-counterexample:{rec.id}", violated)


def _strong_partition_pairs(rule, record_id) -> int:
    """Constructive x destructive partition pairs strongly separated by one record."""
    from .corpus import get_record

    fs = class_focus_sets(rule, get_record(record_id).reduced())
    types = types_in_class(CompatibilityClass.PARTITION)
    cc = [t for t in types if t.constructive]
    dc = [t for t in types if not t.constructive]
    return sum(1 for a in cc for b in dc if fs[a] - fs[b] and fs[b] - fs[a])


def corpus(rule, trials=1000, seed=0) -> Iterator[Check]:
    rule = VotingRule(rule)
    records = load_builtin_corpus(rule)
    idle = []
    for rec in records:
        fs = class_focus_sets(rule, rec.reduced())
        if len(set(fs.values())) < 2:
            idle.append(rec.id)
    yield Check(f"{rule}:records-separate", not idle, f"records={len(records)} idle={','.join(idle) or '-'}")

    classified = classify_all(rule, records)
    bad = contradictions(rule, classified)
    yield Check(f"{rule}:no-contradictions", not bad, bad[0] if bad else "")

    unverified = []
    for a, b, _, ev in classified:
        if ev.a_minus_b and not reverify_witness(rule, a, b, ev.a_minus_b):
            unverified.append(f"{a}/{b}")
        if ev.b_minus_a and not reverify_witness(rule, b, a, ev.b_minus_a):
            unverified.append(f"{b}/{a}")
    yield Check(f"{rule}:witnesses-reverify", not unverified, ",".join(unverified[:3]))

    if rule is VotingRule.PLURALITY:
        n = _strong_partition_pairs(rule, "Plur.3")
        yield Check("plurality:Plur.3-strong-pairs", n == 144, f"pairs={n}")


_SUITES = {
    "collapses": collapses,
    "containments": containments,
    "immunity": immunity,
    "alpha": alpha,
    "corpus": corpus,
}


def run_suite(name: str, rule, trials: int = 1000, seed: int = 0) -> list[Check]:
    if name not in _SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if trials < 1:
        raise UsageError("trials must be >= 1")
    return list(_SUITES[name](VotingRule(rule), trials=trials, seed=seed))
