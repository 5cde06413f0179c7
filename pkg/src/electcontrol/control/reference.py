"""Slow, literal decision procedures used to cross-check the vectorized engine.

Nothing here shares code with :mod:`.engine` beyond the election model:
control actions are enumerated as index subsets of the vote list and
candidate subsets via itertools, and every (sub)election is evaluated with
:func:`electcontrol.elections.winners`.
"""

from __future__ import annotations

from itertools import chain, combinations

from ..elections import Election, Profile, VotingRule, mask_votes, winners
from .instances import ControlInstance, ReducedInstance, inflate
from .types import Action, ControlType, Tie


def _subsets(xs, max_size=None):
    xs = list(xs)
    top = len(xs) if max_size is None else min(max_size, len(xs))
    return chain.from_iterable(combinations(xs, r) for r in range(top + 1))


def _goal(t: ControlType, w: frozenset[str], p: str) -> bool:
    if t.constructive:
        return w == {p} if t.unique else p in w
    return w != {p} if t.unique else p not in w


def _elect(rule, cands, votes: Profile) -> frozenset[str]:
    cands = tuple(cands)
    return winners(rule, Election(cands, mask_votes(votes, cands)))


def _survivors(w, tie: Tie):
    return w if tie is Tie.TP or len(w) == 1 else frozenset()


def final_winner_sets(rule: VotingRule, t: ControlType, inst: ControlInstance):
    """Yield the final winner set of every legal control action for ``inst``."""
    red = inst.reduced
    C = red.candidates
    p = inst.focus
    a = t.action
    if a in (Action.AC, Action.UAC):
        limit = red.k if a is Action.AC else None
        for extra in _subsets(red.spoilers, limit):
            yield _elect(rule, C + extra, red.votes)
    elif a is Action.DELC:
        for gone in _subsets([c for c in C if c != p], red.k):
            yield _elect(rule, [c for c in C if c not in gone], red.votes)
    elif a is Action.DV:
        n = len(red.votes)
        for gone in _subsets(range(n), red.k):
            yield _elect(rule, C, Profile(tuple(red.votes[i] for i in range(n) if i not in gone)))
    elif a is Action.AV:
        for extra in _subsets(range(len(red.spoiler_votes)), red.k):
            yield _elect(rule, C, red.votes + Profile(tuple(red.spoiler_votes[i] for i in extra)))
    elif a is Action.PV:
        n = len(red.votes)
        for first in _subsets(range(n)):
            v1 = Profile(tuple(red.votes[i] for i in first))
            v2 = Profile(tuple(red.votes[i] for i in range(n) if i not in first))
            s = _survivors(_elect(rule, C, v1), t.tie) | _survivors(_elect(rule, C, v2), t.tie)
            yield _elect(rule, [c for c in C if c in s], red.votes)
    else:
        for first in _subsets(C):
            c1 = list(first)
            c2 = [c for c in C if c not in first]
            s = set(_survivors(_elect(rule, c1, red.votes), t.tie))
            if a is Action.RPC:
                s |= _survivors(_elect(rule, c2, red.votes), t.tie)
            else:
                s |= set(c2)
            yield _elect(rule, [c for c in C if c in s], red.votes)


def reference_decide(rule: VotingRule, t: ControlType, inst: ControlInstance) -> bool:
    rule = VotingRule(rule)
    return any(_goal(t, w, inst.focus) for w in final_winner_sets(rule, t, inst))


def reference_focus_set(rule: VotingRule, t: ControlType, reduced: ReducedInstance) -> frozenset[str]:
    return frozenset(c for c in reduced.candidates if reference_decide(rule, t, inflate(reduced, c)))
