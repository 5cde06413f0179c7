"""The ten acceptance criteria, one test each.

Every test records a ``criterion N: PASS|FAIL ...`` line; conftest prints the
collected lines in the terminal summary, so they show up even under capture.
"""

import subprocess
import sys

from electcontrol.control import (
    ALL_TYPES,
    CompatibilityClass,
    ControlInstance,
    DeleteInput,
    T,
    all_pairs,
    class_focus_sets,
    compatible_pairs,
    decide,
    reference_decide,
    types_in_class,
)
from electcontrol.corpus import (
    ALPHA_COUNTEREXAMPLES,
    get_record,
    load_builtin_corpus,
    parse_instance,
    serialize_instance,
)
from electcontrol.elections import Election, VotingRule, linear_profile, scores, unique_winner, winners
from electcontrol.relations import (
    IMMUNE_TYPES,
    Known,
    check_claim,
    claims_for,
    classify_all,
    contradictions,
    known_matrix,
)
from electcontrol.search import SearchConfig, random_instance, trial_rng
from electcontrol.suites import run_suite, strict_witnesses
from oracles import brute_scores, brute_winners

P, V, A = VotingRule.PLURALITY, VotingRule.VETO, VotingRule.APPROVAL
RULES = (P, V, A)
TRIALS = 1000
RESULTS = {}


def record(n, failures, detail=""):
    ok = not failures
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
    if failures:
        line += " | " + "; ".join(failures[:5])
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_1_structural_counts():
    pairs = all_pairs()
    compat = compatible_pairs()
    sizes = {c: len(types_in_class(c)) for c in CompatibilityClass}
    want = {
        CompatibilityClass.PARTITION: 24,
        CompatibilityClass.ADD_CANDIDATES: 4,
        CompatibilityClass.DELETE: 8,
        CompatibilityClass.ADD_VOTERS: 4,
        CompatibilityClass.UNLIMITED_ADD_CANDIDATES: 4,
    }
    got = (len(ALL_TYPES), len(pairs), len(pairs) - len(compat), len(compat))
    failures = []
    if got != (44, 946, 624, 322):
        failures.append(f"types/pairs/incompatible/compatible = {got}")
    if sizes != want:
        failures.append(f"class sizes {[sizes[c] for c in CompatibilityClass]}")
    record(1, failures, "44 types, 946 pairs, 624 incompatible, 322 compatible, classes 24/4/8/4/4")


def test_criterion_2_collapse_counts():
    want = {P: (7, 315), V: (8, 314), A: (21, 301)}
    failures, got = [], []
    for rule in RULES:
        collapses = known_matrix(rule).counts()[Known.COLLAPSE]
        pair = (collapses, len(compatible_pairs()) - collapses)
        got.append(f"{rule.value} {pair[0]}/{pair[1]}")
        if pair != want[rule]:
            failures.append(f"{rule.value} collapse/separated {pair} != {want[rule]}")
    record(2, failures, ", ".join(got))


def test_criterion_3_winner_oracles():
    failures = []
    intro = Election(("a", "b", "c"), linear_profile("a>b>c", "a>b>c", "a>c>b", "b>c>a"))
    if not (winners(P, intro) == {"a"} and unique_winner(P, intro, "a")):
        failures.append("plurality example: a is not the unique winner")
    veto_ex = Election(("a", "b", "c"), linear_profile("a>b>c", "c>a>b"))
    if not (scores(V, veto_ex)["a"] == 2 and winners(V, veto_ex) == {"a"}):
        failures.append("veto example: a does not win with two points")
    cfg = SearchConfig(seed=2024, candidates=(1, 5), votes=(0, 8))
    for rule in RULES:
        for i in range(TRIALS):
            e = random_instance(trial_rng(cfg.seed, i), rule, CompatibilityClass.PARTITION, cfg).election
            if scores(rule, e) != brute_scores(rule, e) or winners(rule, e) != brute_winners(rule, e):
                failures.append(f"{rule.value} trial {i}")
                break
    record(3, failures, f"both examples, {TRIALS} random elections per rule vs brute force")


def test_criterion_4_membership_facts():
    inst = ControlInstance(
        DeleteInput(("a", "b", "c"), linear_profile("a>b>c", "a>b>c", "a>c>b", "b>c>a"), 1), "b"
    )
    failures = []
    for name in ("CC-DC-UW", "CC-DC-NUW"):
        t = T(name)
        if not (decide(P, t, inst) and reference_decide(P, t, inst)):
            failures.append(f"(C,V,b,1) not in plurality-{name}")
    record(4, failures, "(C,V,b,1) in plurality CC-DC-UW and CC-DC-NUW")


def _strong_pairs(rule, record_id):
    fs = class_focus_sets(rule, get_record(record_id).reduced())
    types = types_in_class(CompatibilityClass.PARTITION)
    cc = [t for t in types if t.constructive]
    dc = [t for t in types if not t.constructive]
    return sum(1 for a in cc for b in dc if fs[a] - fs[b] and fs[b] - fs[a]), len(cc) * len(dc)


def test_criterion_5_corpus():
    failures, sizes = [], []
    for rule, n in ((P, 50), (V, 46), (A, 32)):
        records = load_builtin_corpus(rule)
        sizes.append(str(len(records)))
        if len(records) != n:
            failures.append(f"{rule.value} has {len(records)} records, not {n}")
        for rec in records:
            if parse_instance(serialize_instance(rec), rec.id).reduced() != rec.reduced():
                failures.append(f"{rec.id} does not round-trip")
            fs = class_focus_sets(rule, rec.reduced())
            if not any(fs[a] != fs[b] for a, b in compatible_pairs() if a in fs and b in fs):
                failures.append(f"{rec.id} separates no pair")
        bad = contradictions(rule, classify_all(rule, records))
        if bad:
            failures.append(f"{rule.value} contradiction {bad[0]}")
    strong, total = _strong_pairs(P, "Plur.3")
    if strong != total or total != 144:
        failures.append(f"Plur.3 strong pairs {strong}/{total}")
    record(5, failures, f"records {'/'.join(sizes)}, Plur.3 strong pairs {strong}, zero contradictions")


def _claims_suite(kind):
    failures, n = [], 0
    for rule in RULES:
        for claim in claims_for(rule, kind):
            n += 1
            res = check_claim(rule, claim, trials=TRIALS, seed=0)
            if res.trials < TRIALS and res.passed:
                failures.append(f"{claim.name} ran {res.trials} trials")
            if not res.passed:
                i, _, a, b, c = res.counterexample
                failures.append(f"{rule.value} {claim.name} trial {i}: {c} in {a} not {b}")
    return failures, n


def test_criterion_6_collapse_suite():
    failures, n = _claims_suite("collapse")
    record(6, failures, f"{n} collapse claims x {TRIALS} trials, |C|<=5 |V|<=8")


def test_criterion_7_containment_suite():
    failures, n = _claims_suite("subset")
    record(7, failures, f"{n} containment claims x {TRIALS} trials, |C|<=5 |V|<=8")


def test_criterion_8_strict_witnesses():
    failures, n, worst = [], 0, 0
    for rule in RULES:
        checks = list(strict_witnesses(rule, seed=0, max_trials=100_000))
        if rule in (V, A) and not checks:
            failures.append(f"no strict containments encoded for {rule.value}")
        for c in checks:
            n += 1
            if not c.passed:
                failures.append(f"{rule.value} {c.name} {c.detail}")
            else:
                worst = max(worst, int(c.detail.removeprefix("trial=")))
    record(8, failures, f"{n} strict containments witnessed and re-verified, latest hit at trial {worst}")


def test_criterion_9_alpha_and_immunity():
    failures = []
    for suite in ("alpha", "immunity"):
        for c in run_suite(suite, A, trials=TRIALS, seed=0):
            if not c.passed:
                failures.append(c.line())
    for name in ("CC-PC-TP-NUW", "CC-RPC-TP-NUW"):
        if T(name) not in IMMUNE_TYPES[A]:
            failures.append(f"approval immunity to {name} not encoded")
    for rule in (P, V):
        for c in run_suite("alpha", rule):
            if not c.passed:
                failures.append(c.line())
        if rule not in ALPHA_COUNTEREXAMPLES:
            failures.append(f"no stored counterexample for {rule.value}")
    record(
        9,
        failures,
        f"approval alpha and unique-alpha, {len(IMMUNE_TYPES[A])} approval immunities, "
        "plurality and veto counterexamples",
    )


def _cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "electcontrol.cli", *argv], capture_output=True, check=False
    )
    return proc.returncode, proc.stdout


def test_criterion_10_reproducibility():
    runs = [
        ("search", "--system", "veto", "--type-a", "DC-PV-TP-UW", "--type-b", "DC-PV-TE-NUW",
         "--direction", "b-a", "--seed", "17"),
        ("search", "--system", "approval", "--type-a", "DC-RPC-TE-NUW", "--type-b", "DC-PC-TE-UW",
         "--seed", "17", "--max-trials", "200"),
    ] + [("classify-all", "--system", r.value) for r in RULES]
    failures = []
    for argv in runs:
        first, second = _cli(*argv), _cli(*argv)
        if first != second:
            failures.append(f"{' '.join(argv[:3])} differs between runs")
        if not first[1]:
            failures.append(f"{' '.join(argv[:3])} printed nothing")
    record(10, failures, f"{len(runs)} commands byte-identical over two runs")
