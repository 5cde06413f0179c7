"""Seeded randomized search for separation witnesses.

Trial ``i`` of a search with seed ``s`` draws from its own PCG64 stream,
seeded by ``SeedSequence([s, i])``. Trials are therefore independent of each
other and of evaluation order, and a reported ``(seed, trial)`` pair is
enough to regenerate the witness input.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .control.engine import focus_sets
from .control.instances import (
    AddCandInput,
    AddVoterInput,
    DeleteInput,
    PartitionInput,
    ReducedInstance,
    UnlimitedAddCandInput,
)
from .control.types import CompatibilityClass, ControlType, compatible
from .elections import ApprovalVote, LinearVote, Profile, VotingRule
from .errors import UsageError

MAX_VOTES = 20
MAX_CANDIDATES = 10
NAMES = string.ascii_lowercase


@dataclass(frozen=True)
class SearchConfig:
    """Sampling ranges are inclusive ``(min, max)`` pairs.

    The guards bound |V| + |W| by ``MAX_VOTES`` and |C| + |A| by ``MAX_CANDIDATES``.
    """

    seed: int = 0
    max_trials: int = 10_000
    candidates: tuple[int, int] = (1, 5)
    votes: tuple[int, int] = (0, 8)
    k: tuple[int, int] = (0, 3)
    spoiler_candidates: tuple[int, int] = (0, 3)
    spoiler_votes: tuple[int, int] = (0, 4)

    def __post_init__(self):
        if not 0 <= self.seed < 1 << 64:
            raise UsageError("seed must be a 64-bit unsigned integer")
        if self.max_trials < 1:
            raise UsageError("max_trials must be >= 1")
        for name in ("candidates", "votes", "k", "spoiler_candidates", "spoiler_votes"):
            lo, hi = getattr(self, name)
            object.__setattr__(self, name, (int(lo), int(hi)))
            if not 0 <= lo <= hi:
                raise UsageError(f"{name} range {lo}..{hi} is empty or negative")
        if self.candidates[0] < 1:
            raise UsageError("at least one candidate is needed to host a focus candidate")
        if self.candidates[1] + self.spoiler_candidates[1] > MAX_CANDIDATES:
            raise UsageError(f"candidates plus spoilers may not exceed {MAX_CANDIDATES}")
        if self.votes[1] + self.spoiler_votes[1] > MAX_VOTES:
            raise UsageError(f"votes plus spoiler votes may not exceed {MAX_VOTES}")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def _draw(rng: np.random.Generator, bounds: tuple[int, int]) -> int:
    return int(rng.integers(bounds[0], bounds[1] + 1))


def _profile(rng, rule: VotingRule, universe: tuple[str, ...], n: int) -> Profile:
    if rule.linear:
        votes = (LinearVote(tuple(universe[j] for j in rng.permutation(len(universe)))) for _ in range(n))
    else:
        votes = (
            ApprovalVote(universe, "".join("1" if b else "0" for b in rng.integers(0, 2, len(universe))))
            for _ in range(n)
        )
    return Profile(tuple(votes))


def random_instance(
    rng: np.random.Generator, rule: VotingRule, cls: CompatibilityClass, config: SearchConfig
) -> ReducedInstance:
    """Draw sizes uniformly from the config ranges, then uniform votes over them."""
    rule = VotingRule(rule)
    cls = CompatibilityClass(cls)
    m = _draw(rng, config.candidates)
    cands = tuple(NAMES[:m])
    if cls in (CompatibilityClass.ADD_CANDIDATES, CompatibilityClass.UNLIMITED_ADD_CANDIDATES):
        s = _draw(rng, config.spoiler_candidates)
        spoilers = tuple(NAMES[m : m + s])
        votes = _profile(rng, rule, cands + spoilers, _draw(rng, config.votes))
        if cls is CompatibilityClass.UNLIMITED_ADD_CANDIDATES:
            return UnlimitedAddCandInput(cands, spoilers, votes)
        return AddCandInput(cands, spoilers, votes, _draw(rng, config.k))
    votes = _profile(rng, rule, cands, _draw(rng, config.votes))
    if cls is CompatibilityClass.PARTITION:
        return PartitionInput(cands, votes)
    if cls is CompatibilityClass.DELETE:
        return DeleteInput(cands, votes, _draw(rng, config.k))
    extra = _profile(rng, rule, cands, _draw(rng, config.spoiler_votes))
    return AddVoterInput(cands, votes, extra, _draw(rng, config.k))


class Direction(str, Enum):
    A_MINUS_B = "a-b"
    B_MINUS_A = "b-a"
    BOTH = "both"


@dataclass(frozen=True)
class SearchTarget:
    rule: VotingRule
    a: ControlType
    b: ControlType
    direction: Direction = Direction.BOTH

    def __post_init__(self):
        object.__setattr__(self, "rule", VotingRule(self.rule))
        object.__setattr__(self, "direction", Direction(self.direction))
        if not compatible(self.a, self.b):
            raise UsageError(f"{self.a} and {self.b} are incompatible control types")

    def hit(self, fa: frozenset[str], fb: frozenset[str]) -> bool:
        amb, bma = fa - fb, fb - fa
        if self.direction is Direction.A_MINUS_B:
            return bool(amb)
        if self.direction is Direction.B_MINUS_A:
            return bool(bma)
        return bool(amb and bma)


@dataclass(frozen=True)
class SearchResult:
    target: SearchTarget
    config: SearchConfig
    trials: int  # trials evaluated
    reduced: ReducedInstance | None = None
    a_minus_b: frozenset[str] = field(default_factory=frozenset)
    b_minus_a: frozenset[str] = field(default_factory=frozenset)
    verified: bool = False

    @property
    def found(self) -> bool:
        return self.reduced is not None

    @property
    def trial(self) -> int | None:
        """Index of the witnessing trial."""
        return self.trials - 1 if self.found else None

    def report(self) -> str:
        t = self.target
        head = f"{t.rule.value} {t.a} {t.b} direction={t.direction.value}"
        if not self.found:
            return f"{head}\ntrial={self.trials - 1} seed={self.config.seed} result=no\nexhausted\n"
        from .corpus import record_from_reduced, serialize_instance

        diff = (
            f"a-b={' '.join(sorted(self.a_minus_b)) or '-'} "
            f"b-a={' '.join(sorted(self.b_minus_a)) or '-'} verified={'yes' if self.verified else 'no'}"
        )
        rec = record_from_reduced(f"search.{self.trial}", t.rule, self.reduced)
        return (
            f"{head}\ntrial={self.trial} seed={self.config.seed} result=found\n{diff}\n"
            + serialize_instance(rec)
        )


def _reverify(target: SearchTarget, reduced: ReducedInstance, amb, bma) -> bool:
    from .relations import Witness, reverify_witness

    ok = True
    if amb:
        ok &= reverify_witness(target.rule, target.a, target.b, Witness("search", reduced, min(amb)))
    if bma:
        ok &= reverify_witness(target.rule, target.b, target.a, Witness("search", reduced, min(bma)))
    return ok


def find_witness(target: SearchTarget, config: SearchConfig) -> SearchResult:
    """Run trials ``0, 1, ...`` until one hits ``target``; the hit is re-verified independently."""
    cls = target.a.compat_class
    for i in range(config.max_trials):
        reduced = random_instance(trial_rng(config.seed, i), target.rule, cls, config)
        fs = focus_sets(target.rule, (target.a, target.b), reduced)
        fa, fb = fs[target.a], fs[target.b]
        if target.hit(fa, fb):
            amb, bma = fa - fb, fb - fa
            return SearchResult(
                target, config, i + 1, reduced, amb, bma, _reverify(target, reduced, amb, bma)
            )
    return SearchResult(target, config, config.max_trials)
