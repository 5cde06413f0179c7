"""Search for a witness to every claimed proper containment and time it."""

import argparse
import time

from electcontrol.relations import RULES, claims_for
from electcontrol.search import Direction, SearchConfig, SearchTarget, find_witness


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-trials", type=int, default=100_000)
    args = ap.parse_args()
    cfg = SearchConfig(seed=args.seed, max_trials=args.max_trials)
    for rule in RULES:
        for claim in claims_for(rule, "subset"):
            if not claim.strict:
                continue
            for a, b in claim.pairs():
                t0 = time.perf_counter()
                res = find_witness(SearchTarget(rule, a, b, Direction.B_MINUS_A), cfg)
                status = f"trial={res.trial} verified={res.verified}" if res.found else "exhausted"
                print(f"{rule.value} {a} < {b}: {status} ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
