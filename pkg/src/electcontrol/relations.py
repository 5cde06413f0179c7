"""Relations between compatible control types.

Two layers live here:

* the *known* relations: proven collapses and containments, per voting rule,
  closed under transitivity (:class:`KnownRelationMatrix`);
* *evidence* gathered by exhaustively computing focus sets on a corpus of
  reduced inputs (:func:`classify_pair`, :func:`classify_all`).

Evidence can refute a claimed collapse or containment but never prove one,
which is why verdicts are named ``...Evidence`` / ``CollapseConsistent``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from .control.engine import class_focus_sets, decide, no_control_goal
from .control.instances import ControlInstance, ReducedInstance, inflate
from .control.reference import reference_focus_set
from .control.types import (
    ALL_TYPES,
    Action,
    ControlType,
    Goal,
    T,
    Tie,
    WinnerModel,
    compatible,
    compatible_pairs,
)
from .elections import Election, VotingRule, mask_votes, winners
from .errors import SizeError, UsageError

RULES = (VotingRule.PLURALITY, VotingRule.VETO, VotingRule.APPROVAL)


# ---------------------------------------------------------------- claims


@dataclass(frozen=True)
class Claim:
    """A proven relation between control types, valid for ``rules``.

    ``kind == "collapse"``: all of ``left`` are pairwise equal.
    ``kind == "subset"``: every type in ``left`` is contained in every type of ``right``;
    ``strict`` records that the containment is known to be proper for these rules.
    """

    name: str
    kind: str
    rules: tuple[VotingRule, ...]
    left: tuple[ControlType, ...]
    right: tuple[ControlType, ...] = ()
    strict: bool = False

    def pairs(self) -> list[tuple[ControlType, ControlType]]:
        if self.kind == "collapse":
            return list(combinations(self.left, 2))
        return [(a, b) for a in self.left for b in self.right]

    @property
    def types(self) -> tuple[ControlType, ...]:
        return self.left + self.right


def _ts(*names: str) -> tuple[ControlType, ...]:
    return tuple(T(n) for n in names)


_PLU, _VETO, _APP = RULES


def _winner_model_claims() -> list[Claim]:
    out = []
    for t in ALL_TYPES:
        if t.model is not WinnerModel.UW:
            continue
        nuw = t.with_model(WinnerModel.NUW)
        small, big = (t, nuw) if t.constructive else (nuw, t)
        out.append(Claim(f"winner-model:{small}<={big}", "subset", RULES, (small,), (big,)))
    return out


CLAIMS: tuple[Claim, ...] = (
    # collapses valid for every election system, regardless of vote type
    Claim("dc-te-four-way-collapse", "collapse", RULES,
          _ts("DC-RPC-TE-NUW", "DC-RPC-TE-UW", "DC-PC-TE-UW", "DC-PC-TE-NUW")),
    Claim("dc-tp-nuw-collapse", "collapse", RULES, _ts("DC-RPC-TP-NUW", "DC-PC-TP-NUW")),
    Claim("dc-tp-uw-in-dc-rpc-te-nuw", "subset", RULES,
          _ts("DC-RPC-TP-UW", "DC-PC-TP-UW"), _ts("DC-RPC-TE-NUW")),
    *_winner_model_claims(),
    # veto
    Claim("veto-dc-pv-te-collapse", "collapse", (_VETO,), _ts("DC-PV-TE-UW", "DC-PV-TE-NUW")),
    Claim("veto-dc-pv-tp-in-dc-pv-te-nuw", "subset", (_VETO,),
          _ts("DC-PV-TP-UW", "DC-PV-TP-NUW"), _ts("DC-PV-TE-NUW"), strict=True),
    Claim("veto-dc-candidate-partition-in-dc-pv-te-nuw", "subset", (_VETO,),
          _ts("DC-RPC-TE-NUW", "DC-RPC-TP-UW", "DC-RPC-TP-NUW", "DC-PC-TP-UW"),
          _ts("DC-PV-TE-NUW"), strict=True),
    # approval: consequences of Unique-alpha and alpha
    Claim("approval-dc-five-way-collapse", "collapse", (_APP,),
          _ts("DC-PC-TP-UW", "DC-PC-TE-UW", "DC-RPC-TE-UW", "DC-RPC-TE-NUW", "DC-PC-TE-NUW")),
    Claim("approval-dc-tp-nuw-collapse", "collapse", (_APP,), _ts("DC-RPC-TP-NUW", "DC-PC-TP-NUW")),
    Claim("approval-dc-dc-uw-in-dc-dv-uw", "subset", (_APP,),
          _ts("DC-DC-UW"), _ts("DC-DV-UW"), strict=True),
    Claim("approval-dc-dc-nuw-in-dc-dv-nuw", "subset", (_APP,),
          _ts("DC-DC-NUW"), _ts("DC-DV-NUW"), strict=True),
    Claim("approval-dc-dc-nuw-in-dc-dv-uw", "subset", (_APP,),
          _ts("DC-DC-NUW"), _ts("DC-DV-UW"), strict=True),
    Claim("approval-cc-tp-uw-collapse", "collapse", (_APP,), _ts("CC-PC-TP-UW", "CC-RPC-TP-UW")),
    Claim("approval-cc-pc-tp-uw-in-cc-partitions", "subset", (_APP,), _ts("CC-PC-TP-UW"),
          _ts("CC-PC-TE-UW", "CC-PC-TE-NUW", "CC-RPC-TE-UW", "CC-RPC-TE-NUW",
              "CC-PV-TE-UW", "CC-PV-TE-NUW", "CC-PV-TP-UW", "CC-PV-TP-NUW"), strict=True),
    # approval: direct arguments
    Claim("approval-dc-rpc-tp-uw-collapse", "collapse", (_APP,), _ts("DC-RPC-TP-UW", "DC-PC-TP-UW")),
    Claim("approval-cc-tp-nuw-collapse", "collapse", (_APP,), _ts("CC-PC-TP-NUW", "CC-RPC-TP-NUW")),
    Claim("approval-cc-pc-tp-nuw-in-cc-partitions", "subset", (_APP,), _ts("CC-PC-TP-NUW"),
          _ts("CC-PC-TE-NUW", "CC-RPC-TE-NUW", "CC-PV-TP-NUW"), strict=True),
    Claim("approval-dc-pv-te-collapse", "collapse", (_APP,), _ts("DC-PV-TE-UW", "DC-PV-TE-NUW")),
    Claim("approval-cc-te-nuw-collapse", "collapse", (_APP,), _ts("CC-PC-TE-NUW", "CC-RPC-TE-NUW")),
    Claim("approval-cc-te-uw-collapse", "collapse", (_APP,), _ts("CC-PC-TE-UW", "CC-RPC-TE-UW")),
    Claim("approval-dc-pv-tp-uw-in-dc-pv-te-nuw", "subset", (_APP,),
          _ts("DC-PV-TP-UW"), _ts("DC-PV-TE-NUW"), strict=True),
    Claim("approval-dc-rpc-te-nuw-in-dc-pv-tp-uw", "subset", (_APP,),
          _ts("DC-RPC-TE-NUW"), _ts("DC-PV-TP-UW"), strict=True),
    Claim("approval-dc-rpc-te-nuw-in-dc-pv-te-nuw", "subset", (_APP,),
          _ts("DC-RPC-TE-NUW"), _ts("DC-PV-TE-NUW"), strict=True),
    # Derived here rather than quoted: by alpha a winner survives every TP
    # candidate partition, so DC-(R)PC-TP-NUW holds exactly when p already
    # loses, and the voter split (V, {}) then reproduces (C, V) in the final.
    Claim("approval-dc-c-tp-nuw-in-dc-pv-tp-nuw", "subset", (_APP,),
          _ts("DC-PC-TP-NUW", "DC-RPC-TP-NUW"), _ts("DC-PV-TP-NUW"), strict=True),
)

CLAIMS_BY_NAME = {c.name: c for c in CLAIMS}


def claims_for(rule: VotingRule, kind: str | None = None) -> list[Claim]:
    rule = VotingRule(rule)
    return [c for c in CLAIMS if rule in c.rules and (kind is None or c.kind == kind)]


# Known equivalence classes (size >= 2) of collapsing types, per rule.
EQUIVALENCE_CLASSES: dict[VotingRule, tuple[tuple[ControlType, ...], ...]] = {
    _PLU: (
        _ts("DC-RPC-TE-NUW", "DC-RPC-TE-UW", "DC-PC-TE-UW", "DC-PC-TE-NUW"),
        _ts("DC-RPC-TP-NUW", "DC-PC-TP-NUW"),
    ),
    _VETO: (
        _ts("DC-RPC-TE-NUW", "DC-RPC-TE-UW", "DC-PC-TE-UW", "DC-PC-TE-NUW"),
        _ts("DC-RPC-TP-NUW", "DC-PC-TP-NUW"),
        _ts("DC-PV-TE-NUW", "DC-PV-TE-UW"),
    ),
    _APP: (
        _ts("DC-PV-TE-NUW", "DC-PV-TE-UW"),
        _ts("DC-RPC-TE-NUW", "DC-RPC-TE-UW", "DC-PC-TE-UW", "DC-PC-TE-NUW",
            "DC-RPC-TP-UW", "DC-PC-TP-UW"),
        _ts("DC-RPC-TP-NUW", "DC-PC-TP-NUW"),
        _ts("CC-RPC-TP-UW", "CC-PC-TP-UW"),
        _ts("CC-RPC-TP-NUW", "CC-PC-TP-NUW"),
        _ts("CC-RPC-TE-UW", "CC-PC-TE-UW"),
        _ts("CC-RPC-TE-NUW", "CC-PC-TE-NUW"),
    ),
}


# ---------------------------------------------------------------- known matrix


class Known(str, Enum):
    COLLAPSE = "collapse"
    SUBSET = "subset"  # left is contained in right
    SUPERSET = "superset"
    SEPARATION = "separation"  # no containment either way is claimed


@dataclass(frozen=True)
class KnownRelationMatrix:
    rule: VotingRule
    contained: frozenset[tuple[ControlType, ControlType]]  # (a, b): a <= b, transitively closed

    def relation(self, a: ControlType, b: ControlType) -> Known:
        if not compatible(a, b):
            raise UsageError(f"{a} and {b} are incompatible")
        ab = a == b or (a, b) in self.contained
        ba = a == b or (b, a) in self.contained
        if ab and ba:
            return Known.COLLAPSE
        if ab:
            return Known.SUBSET
        if ba:
            return Known.SUPERSET
        return Known.SEPARATION

    def collapse_classes(self) -> list[tuple[ControlType, ...]]:
        seen, out = set(), []
        for t in ALL_TYPES:
            if t in seen:
                continue
            cls = tuple(u for u in ALL_TYPES if u == t or self.relation_safe(t, u) is Known.COLLAPSE)
            seen.update(cls)
            if len(cls) > 1:
                out.append(cls)
        return out

    def relation_safe(self, a, b):
        return self.relation(a, b) if compatible(a, b) else None

    def counts(self) -> dict[Known, int]:
        out = dict.fromkeys(Known, 0)
        for a, b in compatible_pairs():
            out[self.relation(a, b)] += 1
        return out


@lru_cache(maxsize=None)
def known_matrix(rule: VotingRule) -> KnownRelationMatrix:
    rule = VotingRule(rule)
    idx = {t: i for i, t in enumerate(ALL_TYPES)}
    n = len(ALL_TYPES)
    reach = np.eye(n, dtype=bool)
    for claim in claims_for(rule):
        for a, b in claim.pairs():
            reach[idx[a], idx[b]] = True
            if claim.kind == "collapse":
                reach[idx[b], idx[a]] = True
    for k in range(n):  # Floyd-Warshall closure
        reach |= reach[:, [k]] & reach[[k], :]
    contained = frozenset(
        (ALL_TYPES[i], ALL_TYPES[j]) for i in range(n) for j in range(n) if i != j and reach[i, j]
    )
    return KnownRelationMatrix(rule, contained)


# ---------------------------------------------------------------- evidence


class Verdict(str, Enum):
    COLLAPSE_CONSISTENT = "CollapseConsistent"
    STRICT_SUBSET = "StrictSubsetEvidence"
    STRICT_SUPERSET = "StrictSupersetEvidence"
    INCOMPARABLE = "IncomparableEvidence"
    STRONGLY_INCOMPARABLE = "StronglyIncomparableEvidence"


@dataclass(frozen=True)
class Witness:
    label: str
    reduced: ReducedInstance
    candidate: str


@dataclass(frozen=True)
class RelationEvidence:
    pair: tuple[ControlType, ControlType]
    a_minus_b: Witness | None = None
    b_minus_a: Witness | None = None
    strong: Witness | None = None  # candidate field holds the a-minus-b candidate

    @property
    def verdict(self) -> Verdict:
        if self.strong is not None:
            return Verdict.STRONGLY_INCOMPARABLE
        if self.a_minus_b and self.b_minus_a:
            return Verdict.INCOMPARABLE
        if self.a_minus_b:
            return Verdict.STRICT_SUPERSET
        if self.b_minus_a:
            return Verdict.STRICT_SUBSET
        return Verdict.COLLAPSE_CONSISTENT

    def merge(self, other: "RelationEvidence") -> "RelationEvidence":
        """Combine evidence, keeping ``self``'s witness where both have one."""
        return RelationEvidence(
            self.pair,
            self.a_minus_b or other.a_minus_b,
            self.b_minus_a or other.b_minus_a,
            self.strong or other.strong,
        )


def _check_pair(a: ControlType, b: ControlType) -> None:
    if not compatible(a, b):
        raise UsageError(f"{a} and {b} are incompatible control types")


def compare_on_instance(rule, a: ControlType, b: ControlType, reduced: ReducedInstance):
    """``(f_a - f_b, f_b - f_a)`` on one reduced input."""
    _check_pair(a, b)
    fs = class_focus_sets(VotingRule(rule), reduced)
    return fs[a] - fs[b], fs[b] - fs[a]


def _labelled(corpus) -> list[tuple[str, ReducedInstance]]:
    out = []
    for i, item in enumerate(corpus):
        if hasattr(item, "reduced") and callable(item.reduced):
            out.append((item.id, item.reduced()))
        else:
            out.append((f"#{i}", item))
    return out


def _first(xs: frozenset[str], order: Sequence[str]) -> str:
    return next(c for c in order if c in xs)


def _evidence_on(pair, label, reduced, fs) -> RelationEvidence:
    a, b = pair
    amb, bma = fs[a] - fs[b], fs[b] - fs[a]
    wa = Witness(label, reduced, _first(amb, reduced.candidates)) if amb else None
    wb = Witness(label, reduced, _first(bma, reduced.candidates)) if bma else None
    return RelationEvidence(pair, wa, wb, wa if (wa and wb) else None)


def classify_pair(rule, a: ControlType, b: ControlType, corpus) -> tuple[Verdict, RelationEvidence]:
    """Aggregate focus-set differences of ``a`` and ``b`` over every corpus input of their class."""
    _check_pair(a, b)
    rule = VotingRule(rule)
    ev = RelationEvidence((a, b))
    for label, reduced in _labelled(corpus):
        if reduced.compat_class is not a.compat_class:
            continue
        ev = ev.merge(_evidence_on((a, b), label, reduced, class_focus_sets(rule, reduced)))
    return ev.verdict, ev


def classify_all(rule, corpus) -> list[tuple[ControlType, ControlType, Verdict, RelationEvidence]]:
    """Classify all 322 compatible pairs, computing each input's focus sets once."""
    rule = VotingRule(rule)
    items = [(lbl, red, class_focus_sets(rule, red)) for lbl, red in _labelled(corpus)]
    out = []
    for a, b in compatible_pairs():
        ev = RelationEvidence((a, b))
        for lbl, red, fs in items:
            if red.compat_class is a.compat_class:
                ev = ev.merge(_evidence_on((a, b), lbl, red, fs))
        out.append((a, b, ev.verdict, ev))
    return out


def contradictions(rule, classified) -> list[str]:
    """Evidence that contradicts a known collapse or containment."""
    m = known_matrix(rule)
    bad = []
    for a, b, verdict, ev in classified:
        rel = m.relation(a, b)
        if rel is Known.COLLAPSE and verdict is not Verdict.COLLAPSE_CONSISTENT:
            bad.append(f"{a} = {b} is a known collapse but {verdict.value}")
        if rel is Known.SUBSET and ev.a_minus_b is not None:
            bad.append(f"{a} <= {b} is known but {ev.a_minus_b.label} separates it")
        if rel is Known.SUPERSET and ev.b_minus_a is not None:
            bad.append(f"{b} <= {a} is known but {ev.b_minus_a.label} separates it")
    return bad


def _witness_tokens(ev: RelationEvidence) -> list[str]:
    out = []
    if ev.a_minus_b:
        out.append(f"a-b={ev.a_minus_b.label}:{ev.a_minus_b.candidate}")
    if ev.b_minus_a:
        out.append(f"b-a={ev.b_minus_a.label}:{ev.b_minus_a.candidate}")
    if ev.strong:
        out.append(f"strong={ev.strong.label}")
    return out


def format_report(rule, classified) -> str:
    lines = []
    for a, b, verdict, ev in sorted(classified, key=lambda r: (r[0].index, r[1].index)):
        lines.append(" ".join([VotingRule(rule).value, str(a), str(b), verdict.value, *_witness_tokens(ev)]))
    return "\n".join(lines) + "\n"


REFERENCE_VOTE_LIMIT = 10


def reverify_witness(rule, a: ControlType, b: ControlType, w: Witness) -> bool:
    """Recompute both focus sets for ``w`` with the literal reference procedures.

    Partition-of-voters enumeration in the reference is exponential in the
    number of votes, so inputs above ``REFERENCE_VOTE_LIMIT`` votes fall back to
    per-candidate ``decide`` calls on a fresh (uncached) engine evaluation.
    """
    rule = VotingRule(rule)
    uses_pv = Action.PV in (a.action, b.action)
    if uses_pv and len(w.reduced.votes) > REFERENCE_VOTE_LIMIT:
        from .control.engine import _focus_sets_from, outcomes

        def fset(t):
            return _focus_sets_from(outcomes(rule, t.action, t.tie, w.reduced), [t])[t]
    else:
        def fset(t):
            return reference_focus_set(rule, t, w.reduced)

    return w.candidate in fset(a) and w.candidate not in fset(b)


# ---------------------------------------------------------------- claims on samples


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    rule: VotingRule
    trials: int
    counterexample: tuple[int, ReducedInstance, ControlType, ControlType, str] | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def claim_violation(claim: Claim, fs) -> tuple[ControlType, ControlType, str] | None:
    for a, b in claim.pairs():
        extra = fs[a] - fs[b]
        if extra:
            return a, b, sorted(extra)[0]
        if claim.kind == "collapse" and fs[b] - fs[a]:
            return b, a, sorted(fs[b] - fs[a])[0]
    return None


def check_claim(rule, claim: Claim | str, sampler: Callable | None = None, trials: int = 1000, seed: int = 0) -> ClaimResult:
    """Test ``claim`` on ``trials`` seeded random inputs of its compatibility class.

    ``sampler(rng, rule, compat_class)`` must return a reduced input; the default
    draws from :func:`electcontrol.search.random_instance` with |C| <= 5, |V| <= 8.
    """
    from .search import SearchConfig, random_instance, trial_rng

    rule = VotingRule(rule)
    if isinstance(claim, str):
        claim = CLAIMS_BY_NAME[claim]
    if rule not in claim.rules:
        raise UsageError(f"claim {claim.name} is not asserted for {rule}")
    if trials < 1:
        raise UsageError("trials must be >= 1")
    if sampler is None:
        cfg = SearchConfig(seed=seed, max_trials=trials)

        def sampler(rng, rule, cls):
            return random_instance(rng, rule, cls, cfg)

    cls = claim.left[0].compat_class
    for i in range(trials):
        reduced = sampler(trial_rng(seed, i), rule, cls)
        bad = claim_violation(claim, class_focus_sets(rule, reduced))
        if bad:
            return ClaimResult(claim, rule, i + 1, (i, reduced, *bad))
    return ClaimResult(claim, rule, trials)


# ---------------------------------------------------------------- alpha and immunity

ALPHA_GUARD = 20


def property_alpha(rule, election: Election, unique: bool = False) -> bool:
    """Whether every (unique) winner stays a (unique) winner on every candidate subset containing it."""
    from itertools import combinations as comb

    rule = VotingRule(rule)
    cands = election.candidates
    if len(cands) > ALPHA_GUARD:
        raise SizeError(f"{len(cands)} candidates exceed the guard of {ALPHA_GUARD}")
    w = winners(rule, election)
    focus = ([next(iter(w))] if len(w) == 1 else []) if unique else sorted(w)
    for p in focus:
        others = [c for c in cands if c != p]
        for r in range(len(others) + 1):
            for extra in comb(others, r):
                sub = winners(rule, election.restrict((p, *extra)))
                if (sub != {p}) if unique else (p not in sub):
                    return False
    return True


IMMUNE_TYPES: dict[VotingRule, frozenset[ControlType]] = {
    _PLU: frozenset(),
    _VETO: frozenset(),
    _APP: frozenset(
        _ts(
            "CC-PC-TP-NUW", "CC-RPC-TP-NUW", "CC-PC-TP-UW", "CC-RPC-TP-UW",
            "DC-PC-TE-UW", "DC-PC-TP-UW", "DC-RPC-TE-UW", "DC-RPC-TP-UW",
            "DC-DC-UW", "DC-DC-NUW",
        )
    ),
}


@dataclass(frozen=True)
class ImmunityResult:
    rule: VotingRule
    type: ControlType
    checked: int
    counterexample: ControlInstance | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def immunity_check(rule, t: ControlType, corpus) -> ImmunityResult:
    """For every input of ``t``'s class and every focus: success implies the goal already held."""
    rule = VotingRule(rule)
    if t not in IMMUNE_TYPES[rule]:
        raise UsageError(f"{rule} is not known to be immune to {t}")
    checked = 0
    for _, reduced in _labelled(corpus):
        if reduced.compat_class is not t.compat_class:
            continue
        for c in reduced.candidates:
            inst = inflate(reduced, c)
            checked += 1
            if decide(rule, t, inst) and not no_control_goal(rule, t, inst):
                return ImmunityResult(rule, t, checked, inst)
    return ImmunityResult(rule, t, checked)
