"""Control inputs, in reduced form (no focus candidate) and inflated form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..elections import Election, Profile, check_name
from ..errors import DomainError
from .types import CompatibilityClass


def _names(xs) -> tuple[str, ...]:
    xs = tuple(xs)
    for x in xs:
        check_name(x)
    if len(set(xs)) != len(xs):
        raise DomainError(f"duplicate candidate in {xs!r}")
    return xs


def _check_universe(profile: Profile, expected: tuple[str, ...], what: str) -> None:
    universe = profile.universe
    if universe is not None and universe != frozenset(expected):
        raise DomainError(f"{what} are not over {' '.join(expected)}")


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"limit k must be a nonnegative integer, got {k!r}")


@dataclass(frozen=True)
class PartitionInput:
    candidates: tuple[str, ...]
    votes: Profile

    compat_class = CompatibilityClass.PARTITION

    def __post_init__(self):
        object.__setattr__(self, "candidates", _names(self.candidates))
        _check_universe(self.votes, self.candidates, "votes")

    @property
    def election(self) -> Election:
        return Election(self.candidates, self.votes)


@dataclass(frozen=True)
class AddCandInput:
    candidates: tuple[str, ...]
    spoilers: tuple[str, ...]
    votes: Profile
    k: int

    compat_class = CompatibilityClass.ADD_CANDIDATES

    def __post_init__(self):
        object.__setattr__(self, "candidates", _names(self.candidates))
        object.__setattr__(self, "spoilers", _names(self.spoilers))
        if set(self.candidates) & set(self.spoilers):
            raise DomainError("spoiler candidates must be disjoint from C")
        _check_k(self.k)
        _check_universe(self.votes, self.candidates + self.spoilers, "votes")


@dataclass(frozen=True)
class UnlimitedAddCandInput:
    candidates: tuple[str, ...]
    spoilers: tuple[str, ...]
    votes: Profile

    compat_class = CompatibilityClass.UNLIMITED_ADD_CANDIDATES

    def __post_init__(self):
        object.__setattr__(self, "candidates", _names(self.candidates))
        object.__setattr__(self, "spoilers", _names(self.spoilers))
        if set(self.candidates) & set(self.spoilers):
            raise DomainError("spoiler candidates must be disjoint from C")
        _check_universe(self.votes, self.candidates + self.spoilers, "votes")


@dataclass(frozen=True)
class DeleteInput:
    candidates: tuple[str, ...]
    votes: Profile
    k: int

    compat_class = CompatibilityClass.DELETE

    def __post_init__(self):
        object.__setattr__(self, "candidates", _names(self.candidates))
        _check_k(self.k)
        _check_universe(self.votes, self.candidates, "votes")


@dataclass(frozen=True)
class AddVoterInput:
    candidates: tuple[str, ...]
    votes: Profile
    spoiler_votes: Profile
    k: int

    compat_class = CompatibilityClass.ADD_VOTERS

    def __post_init__(self):
        object.__setattr__(self, "candidates", _names(self.candidates))
        _check_k(self.k)
        _check_universe(self.votes, self.candidates, "votes")
        _check_universe(self.spoiler_votes, self.candidates, "spoiler votes")


ReducedInstance = Union[
    PartitionInput, AddCandInput, UnlimitedAddCandInput, DeleteInput, AddVoterInput
]


@dataclass(frozen=True)
class ControlInstance:
    """A reduced input inflated by a focus candidate ``focus`` (always drawn from C)."""

    reduced: ReducedInstance
    focus: str

    def __post_init__(self):
        if self.focus not in self.reduced.candidates:
            raise DomainError(f"focus {self.focus!r} is not in C")

    @property
    def compat_class(self) -> CompatibilityClass:
        return self.reduced.compat_class


def inflate(reduced: ReducedInstance, focus: str) -> ControlInstance:
    return ControlInstance(reduced, focus)


def reduce(instance: ControlInstance) -> ReducedInstance:
    return instance.reduced
