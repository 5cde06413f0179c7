"""Exhaustive decision procedures and focus sets.

Every control action of a given kind is enumerated once per reduced input.
Each action yields the final winner set (as a candidate bitmask) and, for
deleting candidates, the set of candidates still present. The four goal and
winner-model variants are then read off the same outcome table, so one
enumeration answers all focus candidates and all types sharing the action.

Candidates are indexed in declared order: C first, then spoiler candidates.
Vote multisets are enumerated by multiplicity vectors over the distinct
votes (first distinct vote is the least significant digit). When all votes
are distinct this is exactly binary-counter order over index subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from ..elections import ApprovalVote, LinearVote, Profile, VotingRule
from ..errors import DomainError, SizeError, UsageError, VoteKindError
from .instances import (
    AddCandInput,
    AddVoterInput,
    ControlInstance,
    DeleteInput,
    PartitionInput,
    ReducedInstance,
    UnlimitedAddCandInput,
)
from .types import Action, CompatibilityClass, ControlType, Tie, types_in_class

MAX_CANDIDATES = 16
MAX_ENUMERATION = 1 << 22


# ---------------------------------------------------------------- encoding


def _encode(rule: VotingRule, profile: Profile, names: tuple[str, ...]):
    """Distinct votes (encoded) with multiplicities and first-occurrence vote indices."""
    pos = {c: i for i, c in enumerate(names)}
    want = LinearVote if rule.linear else ApprovalVote
    distinct: dict[object, int] = {}
    occ: list[list[int]] = []
    for i, vote in enumerate(profile):
        if not isinstance(vote, want):
            raise VoteKindError(f"{rule} needs {want.__name__} ballots")
        if rule.linear:
            key = tuple(pos[c] for c in vote.ranking)
        else:
            key = sum(1 << pos[c] for c in vote.approved)
        if key not in distinct:
            distinct[key] = len(occ)
            occ.append([])
        occ[distinct[key]].append(i)
    encoded = list(distinct)
    counts = np.array([len(o) for o in occ], dtype=np.int64)
    return encoded, counts, occ


def _full_scores(rule: VotingRule, encoded, n: int) -> np.ndarray:
    """Per-distinct-vote score contribution over all ``n`` candidates, shape (d, n)."""
    s = np.zeros((len(encoded), n), dtype=np.int64)
    for j, v in enumerate(encoded):
        if rule is VotingRule.PLURALITY:
            s[j, v[0]] = 1
        elif rule is VotingRule.VETO:
            s[j, list(v[:-1])] = 1
        else:
            for c in range(n):
                if v >> c & 1:
                    s[j, c] = 1
    return s


def _pack(eq: np.ndarray) -> np.ndarray:
    n = eq.shape[1]
    return eq.astype(np.int64) @ (np.int64(1) << np.arange(n, dtype=np.int64))


def _winner_masks(scores: np.ndarray, inmask: np.ndarray | None = None) -> np.ndarray:
    """Bitmask of maximal-score candidates per row, restricted to ``inmask`` columns."""
    if inmask is not None:
        scores = np.where(inmask, scores, -1)
    top = scores.max(axis=1, initial=-1)
    eq = scores == top[:, None]
    if inmask is not None:
        eq &= inmask
    return _pack(eq)


def _bits_matrix(masks: np.ndarray, n: int) -> np.ndarray:
    return (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1 == 1


def subset_winner_table(rule: VotingRule, encoded, counts: np.ndarray, n: int) -> np.ndarray:
    """``table[mask]`` = winners of the election over candidate set ``mask`` with votes masked."""
    if n > MAX_CANDIDATES:
        raise SizeError(f"{n} candidates exceed the enumeration guard of {MAX_CANDIDATES}")
    masks = np.arange(1 << n, dtype=np.int64)
    inmask = _bits_matrix(masks, n)
    scores = np.zeros((1 << n, n), dtype=np.int64)
    rows = np.arange(1 << n)
    if rule is VotingRule.APPROVAL:
        scores[:] = counts @ _full_scores(rule, encoded, n) if len(encoded) else 0
    else:
        total = int(counts.sum())
        for v, cnt in zip(encoded, counts):
            # highest-ranked (plurality) or lowest-ranked (veto) candidate inside each mask
            pick = np.full(1 << n, -1, dtype=np.int64)
            order = reversed(v) if rule is VotingRule.PLURALITY else v
            for c in order:
                pick = np.where(inmask[:, c], c, pick)
            ok = pick >= 0
            np.add.at(scores, (rows[ok], pick[ok]), cnt)
        if rule is VotingRule.VETO:
            scores = total - scores
    return _winner_masks(scores, inmask)


def _popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.int64)
    c = np.zeros_like(x)
    while np.any(x):
        c += x & 1
        x = x >> 1
    return c


def _tie_filter(w: np.ndarray, tie: Tie) -> np.ndarray:
    if tie is Tie.TP:
        return w
    return np.where(_popcount(w) == 1, w, 0)


def _multiplicity_vectors(counts: np.ndarray, limit: int | None = None) -> np.ndarray:
    """All vectors ``0 <= r <= counts`` in mixed-radix counter order, optionally with ``sum(r) <= limit``."""
    dims = counts + 1
    total = int(np.prod(dims)) if len(dims) else 1
    if total > MAX_ENUMERATION:
        raise SizeError(f"{total} vote sub-multisets exceed the enumeration guard")
    idx = np.arange(total, dtype=np.int64)
    out = np.empty((total, len(dims)), dtype=np.int64)
    for j, base in enumerate(dims):
        out[:, j] = idx % base
        idx //= base
    if limit is not None:
        out = out[out.sum(axis=1) <= limit]
    return out


def _subsets_with_size(pool_mask: int, n: int, limit: int | None) -> np.ndarray:
    """Submasks of ``pool_mask`` (ascending) with at most ``limit`` bits."""
    masks = np.arange(1 << n, dtype=np.int64)
    masks = masks[(masks & ~pool_mask) == 0]
    if limit is not None:
        masks = masks[_popcount(masks) <= limit]
    return masks


def _pick_votes(occ: list[list[int]], r) -> tuple[int, ...]:
    return tuple(sorted(i for j, k in enumerate(r) for i in occ[j][: int(k)]))


# ---------------------------------------------------------------- outcomes


@dataclass(frozen=True)
class Outcomes:
    """All control actions of one kind on one reduced input.

    ``finals[i]`` is the final winner bitmask of action ``i``; if ``present`` is
    given, the action is only available to focus candidates in ``present[i]``.
    """

    names: tuple[str, ...]
    finals: np.ndarray
    present: np.ndarray | None
    describe: Callable[[int], object]

    def candidate_index(self, c: str) -> int:
        return self.names.index(c)


def _names_of(mask: int, names) -> tuple[str, ...]:
    return tuple(c for i, c in enumerate(names) if mask >> i & 1)


def _partition_outcomes(rule, action: Action, tie: Tie, red: PartitionInput) -> Outcomes:
    names = red.candidates
    n = len(names)
    encoded, counts, occ = _encode(rule, red.votes, names)
    table = subset_winner_table(rule, encoded, counts, n)
    full = (1 << n) - 1
    if action is Action.PV:
        r = _multiplicity_vectors(counts)
        s = _full_scores(rule, encoded, n)
        first = r @ s
        second = counts @ s - first if len(encoded) else first
        cover = np.ones((1, n), dtype=bool)
        w1 = _tie_filter(_winner_masks(first, cover), tie)
        w2 = _tie_filter(_winner_masks(second, cover), tie)
        finals = table[w1 | w2]
        allv = tuple(range(len(red.votes)))

        def describe(i, r=r):
            v1 = _pick_votes(occ, r[i])
            return ("votes", v1, tuple(x for x in allv if x not in v1))

        return Outcomes(names, finals, None, describe)
    c1 = np.arange(1 << n, dtype=np.int64)
    c2 = full ^ c1
    w1 = _tie_filter(table[c1], tie)
    if action is Action.RPC:
        finals = table[w1 | _tie_filter(table[c2], tie)]
    else:
        finals = table[w1 | c2]

    def describe(i):
        return ("candidates", _names_of(i, names), _names_of(full ^ i, names))

    return Outcomes(names, finals, None, describe)


def _add_cand_outcomes(rule, red, limit: int | None) -> Outcomes:
    names = red.candidates + red.spoilers
    n = len(names)
    encoded, counts, _ = _encode(rule, red.votes, names)
    table = subset_winner_table(rule, encoded, counts, n)
    core = (1 << len(red.candidates)) - 1
    added = _subsets_with_size(((1 << n) - 1) ^ core, n, limit)
    finals = table[core | added]
    return Outcomes(red.candidates, finals, None, lambda i: ("add", _names_of(int(added[i]), names)))


def _delete_cand_outcomes(rule, red: DeleteInput) -> Outcomes:
    names = red.candidates
    n = len(names)
    encoded, counts, _ = _encode(rule, red.votes, names)
    table = subset_winner_table(rule, encoded, counts, n)
    full = (1 << n) - 1
    deleted = _subsets_with_size(full, n, red.k)
    remaining = full ^ deleted
    return Outcomes(
        names, table[remaining], remaining, lambda i: ("delete", _names_of(int(deleted[i]), names))
    )


def _delete_voter_outcomes(rule, red: DeleteInput) -> Outcomes:
    names = red.candidates
    n = len(names)
    encoded, counts, occ = _encode(rule, red.votes, names)
    r = _multiplicity_vectors(counts, red.k)
    s = _full_scores(rule, encoded, n)
    finals = _winner_masks((counts - r) @ s, np.ones((1, n), dtype=bool))
    return Outcomes(names, finals, None, lambda i: ("delete-votes", _pick_votes(occ, r[i])))


def _add_voter_outcomes(rule, red: AddVoterInput) -> Outcomes:
    names = red.candidates
    n = len(names)
    enc_v, cnt_v, _ = _encode(rule, red.votes, names)
    enc_w, cnt_w, occ_w = _encode(rule, red.spoiler_votes, names)
    base = cnt_v @ _full_scores(rule, enc_v, n) if len(enc_v) else np.zeros(n, dtype=np.int64)
    r = _multiplicity_vectors(cnt_w, red.k)
    finals = _winner_masks(base + r @ _full_scores(rule, enc_w, n), np.ones((1, n), dtype=bool))
    return Outcomes(names, finals, None, lambda i: ("add-votes", _pick_votes(occ_w, r[i])))


def outcomes(rule: VotingRule, action: Action, tie: Tie | None, reduced: ReducedInstance) -> Outcomes:
    rule = VotingRule(rule)
    if action.partition:
        _expect(reduced, PartitionInput)
        return _partition_outcomes(rule, action, tie, reduced)
    if action is Action.AC:
        _expect(reduced, AddCandInput)
        return _add_cand_outcomes(rule, reduced, reduced.k)
    if action is Action.UAC:
        _expect(reduced, UnlimitedAddCandInput)
        return _add_cand_outcomes(rule, reduced, None)
    if action is Action.DELC:
        _expect(reduced, DeleteInput)
        return _delete_cand_outcomes(rule, reduced)
    if action is Action.DV:
        _expect(reduced, DeleteInput)
        return _delete_voter_outcomes(rule, reduced)
    _expect(reduced, AddVoterInput)
    return _add_voter_outcomes(rule, reduced)


def _expect(reduced, cls) -> None:
    if not isinstance(reduced, cls):
        raise UsageError(
            f"{type(reduced).__name__} does not match the {cls.compat_class.value} class"
        )


# ---------------------------------------------------------------- goals


def _goal_hits(t: ControlType, finals: np.ndarray, bit: int) -> np.ndarray:
    if t.constructive:
        return finals == bit if t.unique else (finals & bit) != 0
    return finals != bit if t.unique else (finals & bit) == 0


def _available(out: Outcomes, bit: int) -> np.ndarray | slice:
    return slice(None) if out.present is None else (out.present & bit) != 0


def _focus_sets_from(out: Outcomes, types) -> dict[ControlType, frozenset[str]]:
    if out.present is None:
        finals = np.unique(out.finals)
        present = None
    else:
        pairs = np.unique(np.stack([out.finals, out.present]), axis=1)
        finals, present = pairs[0], pairs[1]
    res = {}
    for t in types:
        got = []
        for i, c in enumerate(out.names):
            bit = 1 << i
            f = finals if present is None else finals[(present & bit) != 0]
            if np.any(_goal_hits(t, f, bit)):
                got.append(c)
        res[t] = frozenset(got)
    return res


def focus_sets(rule: VotingRule, types, reduced: ReducedInstance) -> dict[ControlType, frozenset[str]]:
    """Uncached focus sets for a few ``types``; sharing one enumeration per (action, tie)."""
    rule = VotingRule(rule)
    groups: dict[tuple, list[ControlType]] = {}
    for t in types:
        if t.compat_class is not reduced.compat_class:
            raise UsageError(f"{t} cannot take a {reduced.compat_class.value} input")
        groups.setdefault((t.action, t.tie), []).append(t)
    res = {}
    for (action, tie), ts in groups.items():
        res.update(_focus_sets_from(outcomes(rule, action, tie, reduced), ts))
    return res


@lru_cache(maxsize=4096)
def class_focus_sets(rule: VotingRule, reduced: ReducedInstance) -> dict[ControlType, frozenset[str]]:
    """Focus sets of every control type in ``reduced``'s compatibility class."""
    return focus_sets(rule, types_in_class(reduced.compat_class), reduced)


def focus_set(rule: VotingRule, t: ControlType, reduced: ReducedInstance) -> frozenset[str]:
    if t.compat_class is not reduced.compat_class:
        raise UsageError(f"{t} cannot take a {reduced.compat_class.value} input")
    return class_focus_sets(VotingRule(rule), reduced)[t]


def decide(rule: VotingRule, t: ControlType, instance: ControlInstance) -> bool:
    return instance.focus in focus_set(rule, t, instance.reduced)


def find_control_witness(rule: VotingRule, t: ControlType, instance: ControlInstance):
    """First successful control action in enumeration order, or ``None``.

    The structure is a tuple tagged by the action kind, e.g.
    ``("candidates", C1, C2)`` for candidate partitions or ``("votes", V1, V2)``
    with vote indices for voter partitions.
    """
    if t.compat_class is not instance.compat_class:
        raise UsageError(f"{t} cannot take a {instance.compat_class.value} input")
    out = outcomes(rule, t.action, t.tie, instance.reduced)
    bit = 1 << out.candidate_index(instance.focus)
    hits = _goal_hits(t, out.finals, bit)
    if out.present is not None:
        hits &= (out.present & bit) != 0
    idx = np.flatnonzero(hits)
    return out.describe(int(idx[0])) if len(idx) else None


def two_stage_eval(rule: VotingRule, action: Action, tie: Tie, candidates, votes: Profile, partition):
    """Final-round winners of one partition election.

    ``partition`` is ``(V1, V2)`` as vote-index collections for PV, or
    ``(C1, C2)`` as candidate collections for PC and RPC.
    """
    if not action.partition:
        raise UsageError(f"{action.value} is not a partition action")
    from ..elections import Election, mask_votes, winners

    rule = VotingRule(rule)
    tie = Tie(tie)
    election = Election(tuple(candidates), votes)
    cands = frozenset(election.candidates)

    def survive(w):
        return w if tie is Tie.TP or len(w) == 1 else frozenset()

    part1, part2 = (tuple(x) for x in partition)
    if action is Action.PV:
        n = len(votes)
        if sorted(part1 + part2) != list(range(n)):
            raise DomainError("vote partition must split the vote indices exactly")
        s = set()
        for part in (part1, part2):
            sub = Profile(tuple(votes[i] for i in part))
            s |= survive(winners(rule, Election(election.candidates, sub)))
    else:
        c1, c2 = frozenset(part1), frozenset(part2)
        if c1 & c2 or c1 | c2 != cands or len(c1) != len(part1) or len(c2) != len(part2):
            raise DomainError("candidate partition must split C into disjoint sets")
        s = set(survive(winners(rule, election.restrict(c1))))
        if action is Action.RPC:
            s |= survive(winners(rule, election.restrict(c2)))
        else:
            s |= c2
    return winners(rule, election.restrict(s))


def no_control_goal(rule: VotingRule, t: ControlType, instance: ControlInstance) -> bool:
    """Whether the goal of ``t`` already holds on ``(C, V)`` with no control action."""
    from ..elections import Election, mask_votes, winners

    red = instance.reduced
    c = frozenset(red.candidates)
    w = winners(rule, Election(red.candidates, mask_votes(red.votes, c)))
    p = instance.focus
    if t.constructive:
        return w == {p} if t.unique else p in w
    return w != {p} if t.unique else p not in w
