"""Control types, control inputs and exhaustive decision procedures."""

from .engine import (
    class_focus_sets,
    decide,
    find_control_witness,
    focus_set,
    focus_sets,
    no_control_goal,
    two_stage_eval,
)
from .instances import (
    AddCandInput,
    AddVoterInput,
    ControlInstance,
    DeleteInput,
    PartitionInput,
    ReducedInstance,
    UnlimitedAddCandInput,
    inflate,
    reduce,
)
from .reference import reference_decide, reference_focus_set
from .types import (
    ALL_TYPES,
    Action,
    CompatibilityClass,
    ControlType,
    Goal,
    T,
    Tie,
    WinnerModel,
    all_pairs,
    all_types,
    compatible,
    compatible_pairs,
    parse_type,
    types_in_class,
)
