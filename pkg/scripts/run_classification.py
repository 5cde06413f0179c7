"""Classify all compatible pairs on the embedded corpus and compare with the known matrix.

Writes one report per rule to ``--out`` and prints verdict tallies next to
the strict/separated counts implied by the encoded collapse and containment
claims.
"""

import argparse
from collections import Counter
from pathlib import Path

from electcontrol.corpus import load_builtin_corpus
from electcontrol.relations import (
    RULES,
    Known,
    Verdict,
    classify_all,
    contradictions,
    format_report,
    known_matrix,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="reports")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for rule in RULES:
        classified = classify_all(rule, load_builtin_corpus(rule))
        (out / f"{rule.value}.txt").write_text(format_report(rule, classified), encoding="utf-8")
        tally = Counter(v for _, _, v, _ in classified)
        known = known_matrix(rule).counts()
        strict_ev = tally[Verdict.STRICT_SUBSET] + tally[Verdict.STRICT_SUPERSET]
        incomp_ev = tally[Verdict.INCOMPARABLE] + tally[Verdict.STRONGLY_INCOMPARABLE]
        print(
            f"{rule.value}: known collapse={known[Known.COLLAPSE]} "
            f"strict={known[Known.SUBSET] + known[Known.SUPERSET]} separated={known[Known.SEPARATION]} | "
            f"corpus consistent={tally[Verdict.COLLAPSE_CONSISTENT]} one-way={strict_ev} "
            f"incomparable={incomp_ev} (strong={tally[Verdict.STRONGLY_INCOMPARABLE]}) "
            f"contradictions={len(contradictions(rule, classified))}"
        )


if __name__ == "__main__":
    main()
