"""The 44 standard control types and their five compatibility classes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

from ..errors import UsageError


class Action(str, Enum):
    AC = "AC"
    UAC = "UAC"
    DELC = "DC"  # deleting candidates; prints as DC
    AV = "AV"
    DV = "DV"
    PV = "PV"
    PC = "PC"
    RPC = "RPC"

    @property
    def partition(self) -> bool:
        return self in (Action.PV, Action.PC, Action.RPC)


class Goal(str, Enum):
    CONSTRUCTIVE = "CC"
    DESTRUCTIVE = "DC"


class Tie(str, Enum):
    TE = "TE"
    TP = "TP"


class WinnerModel(str, Enum):
    UW = "UW"
    NUW = "NUW"


class CompatibilityClass(str, Enum):
    PARTITION = "partition"
    ADD_CANDIDATES = "add-candidates"
    DELETE = "delete"
    ADD_VOTERS = "add-voters"
    UNLIMITED_ADD_CANDIDATES = "unlimited-add-candidates"


_CLASS_OF_ACTION = {
    Action.PV: CompatibilityClass.PARTITION,
    Action.PC: CompatibilityClass.PARTITION,
    Action.RPC: CompatibilityClass.PARTITION,
    Action.AC: CompatibilityClass.ADD_CANDIDATES,
    Action.DELC: CompatibilityClass.DELETE,
    Action.DV: CompatibilityClass.DELETE,
    Action.AV: CompatibilityClass.ADD_VOTERS,
    Action.UAC: CompatibilityClass.UNLIMITED_ADD_CANDIDATES,
}


@dataclass(frozen=True, order=False)
class ControlType:
    action: Action
    goal: Goal
    tie: Tie | None
    model: WinnerModel

    def __post_init__(self):
        if self.action.partition != (self.tie is not None):
            raise UsageError(f"tie rule {self.tie} is invalid for action {self.action.value}")

    @property
    def constructive(self) -> bool:
        return self.goal is Goal.CONSTRUCTIVE

    @property
    def unique(self) -> bool:
        return self.model is WinnerModel.UW

    @property
    def compat_class(self) -> CompatibilityClass:
        return _CLASS_OF_ACTION[self.action]

    def with_model(self, model: WinnerModel) -> "ControlType":
        return ControlType(self.action, self.goal, self.tie, model)

    def __str__(self) -> str:
        parts = [self.goal.value, self.action.value]
        if self.tie is not None:
            parts.append(self.tie.value)
        parts.append(self.model.value)
        return "-".join(parts)

    def __repr__(self) -> str:
        return f"ControlType({str(self)!r})"

    @property
    def index(self) -> int:
        """Position in canonical order."""
        return _INDEX[self]

    def __lt__(self, other: "ControlType") -> bool:
        return self.index < other.index


def _build() -> tuple[ControlType, ...]:
    # Canonical order follows the compatibility table: partition block, AC,
    # deletion block, AV, UAC; UW before NUW, TE before TP.
    out = []
    ms = (WinnerModel.UW, WinnerModel.NUW)
    for goal in Goal:
        for action in (Action.PV, Action.PC, Action.RPC):
            for tie in Tie:
                out += [ControlType(action, goal, tie, m) for m in ms]
    for goal in Goal:
        out += [ControlType(Action.AC, goal, None, m) for m in ms]
    for goal in Goal:
        for action in (Action.DELC, Action.DV):
            out += [ControlType(action, goal, None, m) for m in ms]
    for goal in Goal:
        out += [ControlType(Action.AV, goal, None, m) for m in ms]
    for goal in Goal:
        out += [ControlType(Action.UAC, goal, None, m) for m in ms]
    return tuple(out)


ALL_TYPES = _build()
_INDEX = {t: i for i, t in enumerate(ALL_TYPES)}
_BY_NAME = {str(t): t for t in ALL_TYPES}


def all_types() -> list[ControlType]:
    return list(ALL_TYPES)


def parse_type(text: str) -> ControlType:
    """Parse a canonical string such as ``DC-DC-NUW`` (goal first, then action)."""
    try:
        return _BY_NAME[text.strip().upper()]
    except KeyError:
        raise UsageError(f"unknown control type {text!r}") from None


def T(text: str) -> ControlType:
    return parse_type(text)


def types_in_class(cls: CompatibilityClass) -> list[ControlType]:
    return [t for t in ALL_TYPES if t.compat_class is cls]


def compatible(a: ControlType, b: ControlType) -> bool:
    return a.compat_class is b.compat_class


@lru_cache(maxsize=None)
def compatible_pairs() -> tuple[tuple[ControlType, ControlType], ...]:
    """All unordered pairs of distinct compatible types, canonical order within and across pairs."""
    return tuple((a, b) for a, b in combinations(ALL_TYPES, 2) if compatible(a, b))


def all_pairs() -> list[tuple[ControlType, ControlType]]:
    return list(combinations(ALL_TYPES, 2))
