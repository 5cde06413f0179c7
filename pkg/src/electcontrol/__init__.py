"""Exact decision engine and analysis toolkit for electoral control under plurality, veto and approval."""

from .elections import (
    ApprovalVote,
    Election,
    LinearVote,
    Profile,
    VotingRule,
    approval_profile,
    linear_profile,
    mask_votes,
    score,
    unique_winner,
    winners,
)

__version__ = "0.1.0"
