"""Exhaustively scan small linear-order elections for Property-alpha violations.

Prints, per rule, the smallest violating election found (fewest votes, then
first in enumeration order over profiles of sorted rankings).

    python3 scripts/find_alpha_counterexamples.py --max-votes 3
"""

import argparse
from itertools import combinations_with_replacement, permutations

from electcontrol.elections import Election, LinearVote, Profile, VotingRule
from electcontrol.relations import property_alpha


def scan(rule: VotingRule, candidates, max_votes: int):
    rankings = [LinearVote(p) for p in permutations(candidates)]
    for n in range(1, max_votes + 1):
        for votes in combinations_with_replacement(rankings, n):
            e = Election(candidates, Profile(votes))
            if not property_alpha(rule, e):
                return e
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--candidates", default="a b c")
    ap.add_argument("--max-votes", type=int, default=5)
    args = ap.parse_args()
    cands = tuple(args.candidates.split())
    for rule in (VotingRule.PLURALITY, VotingRule.VETO):
        e = scan(rule, cands, args.max_votes)
        if e is None:
            print(f"{rule}: none with <= {args.max_votes} votes")
        else:
            print(f"{rule}: " + " ".join(str(v) for v in e.profile))


if __name__ == "__main__":
    main()
