"""Election data model and winner determination for plurality, veto and approval.

Votes are immutable values. A :class:`Profile` is an ordered tuple of votes
with multiset semantics: duplicates matter, order does not.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .errors import DomainError, VoteKindError


class VotingRule(str, Enum):
    PLURALITY = "plurality"
    VETO = "veto"
    APPROVAL = "approval"

    @property
    def linear(self) -> bool:
        """True when the rule consumes linear orders rather than approval vectors."""
        return self is not VotingRule.APPROVAL

    def __str__(self) -> str:
        return self.value


def check_name(name: str) -> str:
    if not isinstance(name, str) or not name or any(ch.isspace() for ch in name) or ">" in name:
        raise DomainError(f"invalid candidate name {name!r}")
    return name


@dataclass(frozen=True)
class LinearVote:
    ranking: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranking", tuple(self.ranking))
        if len(set(self.ranking)) != len(self.ranking):
            raise DomainError(f"ranking {self.ranking!r} repeats a candidate")

    @property
    def universe(self) -> frozenset[str]:
        return frozenset(self.ranking)

    def mask(self, subset: frozenset[str]) -> "LinearVote":
        return LinearVote(tuple(c for c in self.ranking if c in subset))

    def __str__(self) -> str:
        return ">".join(self.ranking)


@dataclass(frozen=True)
class ApprovalVote:
    """One approval ballot: ``bits[i] == "1"`` iff ``universe[i]`` is approved."""

    universe_order: tuple[str, ...]
    bits: str

    def __post_init__(self):
        object.__setattr__(self, "universe_order", tuple(self.universe_order))
        if len(self.bits) != len(self.universe_order) or set(self.bits) - {"0", "1"}:
            raise DomainError(
                f"bitstring {self.bits!r} does not fit universe {self.universe_order!r}"
            )
        if len(set(self.universe_order)) != len(self.universe_order):
            raise DomainError("approval universe repeats a candidate")

    @classmethod
    def from_approved(cls, universe: Iterable[str], approved: Iterable[str]) -> "ApprovalVote":
        universe = tuple(universe)
        approved = set(approved)
        return cls(universe, "".join("1" if c in approved else "0" for c in universe))

    @property
    def universe(self) -> frozenset[str]:
        return frozenset(self.universe_order)

    @property
    def approved(self) -> frozenset[str]:
        return frozenset(c for c, b in zip(self.universe_order, self.bits) if b == "1")

    def mask(self, subset: frozenset[str]) -> "ApprovalVote":
        keep = [i for i, c in enumerate(self.universe_order) if c in subset]
        return ApprovalVote(
            tuple(self.universe_order[i] for i in keep), "".join(self.bits[i] for i in keep)
        )

    def __str__(self) -> str:
        return self.bits


Vote = Union[LinearVote, ApprovalVote]


@dataclass(frozen=True)
class Profile:
    votes: tuple[Vote, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "votes", tuple(self.votes))
        if self.votes:
            kinds = {type(v) for v in self.votes}
            if len(kinds) > 1:
                raise VoteKindError("profile mixes linear and approval votes")
            first = self.votes[0].universe
            if any(v.universe != first for v in self.votes):
                raise DomainError("votes in a profile must share one candidate universe")

    def __len__(self) -> int:
        return len(self.votes)

    def __iter__(self):
        return iter(self.votes)

    def __getitem__(self, i):
        return self.votes[i]

    @property
    def universe(self) -> frozenset[str] | None:
        """Candidate universe of the votes, or ``None`` for the empty profile."""
        return self.votes[0].universe if self.votes else None

    def counts(self) -> Counter:
        return Counter(self.votes)

    def same_multiset(self, other: "Profile") -> bool:
        return self.counts() == other.counts()

    def __add__(self, other: "Profile") -> "Profile":
        return Profile(self.votes + other.votes)


def mask_votes(profile: Profile, subset: Iterable[str]) -> Profile:
    """Restrict every vote to ``subset``, keeping relative order and multiplicities."""
    subset = frozenset(subset)
    universe = profile.universe
    if universe is not None and not subset <= universe:
        raise DomainError(f"mask {sorted(subset - universe)} not in the vote universe")
    return Profile(tuple(v.mask(subset) for v in profile.votes))


@dataclass(frozen=True)
class Election:
    candidates: tuple[str, ...]
    profile: Profile = Profile()

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        for c in self.candidates:
            check_name(c)
        if len(set(self.candidates)) != len(self.candidates):
            raise DomainError("duplicate candidate name")
        universe = self.profile.universe
        if universe is not None and universe != frozenset(self.candidates):
            raise DomainError("profile universe differs from the candidate set")

    def restrict(self, subset: Iterable[str]) -> "Election":
        """The election ``(subset, V)`` with votes masked down to ``subset``."""
        subset = frozenset(subset)
        if not subset <= frozenset(self.candidates):
            raise DomainError("restriction outside the candidate set")
        return Election(
            tuple(c for c in self.candidates if c in subset), mask_votes(self.profile, subset)
        )


def _check_kind(rule: VotingRule, profile: Profile) -> None:
    if not profile.votes:
        return
    want = LinearVote if rule.linear else ApprovalVote
    if not isinstance(profile.votes[0], want):
        raise VoteKindError(f"{rule} needs {want.__name__} ballots")


def scores(rule: VotingRule, election: Election) -> dict[str, int]:
    rule = VotingRule(rule)
    _check_kind(rule, election.profile)
    tally = dict.fromkeys(election.candidates, 0)
    if not tally:
        return tally
    for vote in election.profile:
        if rule is VotingRule.PLURALITY:
            tally[vote.ranking[0]] += 1
        elif rule is VotingRule.VETO:
            for c in vote.ranking[:-1]:
                tally[c] += 1
        else:
            for c in vote.approved:
                tally[c] += 1
    return tally


def score(rule: VotingRule, election: Election, c: str) -> int:
    if c not in election.candidates:
        raise DomainError(f"unknown candidate {c!r}")
    return scores(rule, election)[c]


def winners(rule: VotingRule, election: Election) -> frozenset[str]:
    tally = scores(rule, election)
    if not tally:
        return frozenset()
    top = max(tally.values())
    return frozenset(c for c, s in tally.items() if s == top)


def unique_winner(rule: VotingRule, election: Election, c: str) -> bool:
    if c not in election.candidates:
        raise DomainError(f"unknown candidate {c!r}")
    return winners(rule, election) == {c}


def linear_profile(*rankings: str) -> Profile:
    """Shorthand: ``linear_profile("a>b>c", "b>c>a")``."""
    return Profile(tuple(LinearVote(tuple(r.split(">"))) for r in rankings))


def approval_profile(universe: Iterable[str], *bitstrings: str) -> Profile:
    universe = tuple(universe)
    return Profile(tuple(ApprovalVote(universe, b) for b in bitstrings))
