"""Hypothesis strategies for elections and reduced control inputs."""

import string

from hypothesis import strategies as st

from electcontrol.control import (
    AddCandInput,
    AddVoterInput,
    CompatibilityClass,
    DeleteInput,
    PartitionInput,
    UnlimitedAddCandInput,
)
from electcontrol.elections import ApprovalVote, Election, LinearVote, Profile, VotingRule

rules = st.sampled_from(list(VotingRule))


def names(n, offset=0):
    return tuple(string.ascii_lowercase[offset : offset + n])


@st.composite
def profiles(draw, rule, universe, min_votes=0, max_votes=6):
    n = draw(st.integers(min_votes, max_votes))
    if rule.linear:
        votes = [LinearVote(tuple(draw(st.permutations(universe)))) for _ in range(n)]
    else:
        votes = [
            ApprovalVote(universe, "".join(draw(st.lists(st.sampled_from("01"), min_size=len(universe), max_size=len(universe)))))
            for _ in range(n)
        ]
    return Profile(tuple(votes))


@st.composite
def elections(draw, rule, min_cands=1, max_cands=5, max_votes=6):
    cands = names(draw(st.integers(min_cands, max_cands)))
    return Election(cands, draw(profiles(rule, cands, max_votes=max_votes)))


@st.composite
def reduced_inputs(draw, rule, cls, max_cands=4, max_votes=5, max_spoilers=2, max_k=3):
    cands = names(draw(st.integers(1, max_cands)))
    if cls in (CompatibilityClass.ADD_CANDIDATES, CompatibilityClass.UNLIMITED_ADD_CANDIDATES):
        spoilers = names(draw(st.integers(0, max_spoilers)), len(cands))
        votes = draw(profiles(rule, cands + spoilers, max_votes=max_votes))
        if cls is CompatibilityClass.UNLIMITED_ADD_CANDIDATES:
            return UnlimitedAddCandInput(cands, spoilers, votes)
        return AddCandInput(cands, spoilers, votes, draw(st.integers(0, max_k)))
    votes = draw(profiles(rule, cands, max_votes=max_votes))
    if cls is CompatibilityClass.PARTITION:
        return PartitionInput(cands, votes)
    if cls is CompatibilityClass.DELETE:
        return DeleteInput(cands, votes, draw(st.integers(0, max_k)))
    extra = draw(profiles(rule, cands, max_votes=3))
    return AddVoterInput(cands, votes, extra, draw(st.integers(0, max_k)))
