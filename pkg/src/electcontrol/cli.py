"""Command-line interface.

Exit codes: 0 yes/pass/found, 1 no/fail/exhausted, 2 usage error, 3 I/O or
input-file error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .control.engine import find_control_witness, focus_set
from .control.instances import ControlInstance
from .control.types import parse_type
from .corpus import (
    export_corpus,
    load_builtin_corpus,
    load_corpus_dir,
    parse_instance,
    record_from_reduced,
    serialize_instance,
)
from .elections import VotingRule
from .errors import ControlError, ParseError, UsageError

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

EPILOG = "exit codes: 0 yes/pass/found, 1 no/fail/exhausted, 2 usage error, 3 file error"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition(":")
        return int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MIN:MAX, got {text!r}") from None


def _type(text: str):
    try:
        return parse_type(text)
    except ControlError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _fmt(cands, order) -> str:
    return "{" + ", ".join(c for c in order if c in cands) + "}"


def _load(path: str, rule: VotingRule):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise OSError(f"cannot read {path}: {e.strerror}") from None
    rec = parse_instance(text, Path(path).stem)
    if rec.rule is not rule:
        raise UsageError(f"{path} is a {rec.rule} election but --system is {rule}")
    return rec


def _reduced_for(rec, t):
    if rec.compat_class is not t.compat_class:
        raise UsageError(f"{t} needs a {t.compat_class.value} input, got {rec.compat_class.value}")
    return rec.reduced()


def cmd_decide(args) -> int:
    rec = _load(args.input, args.system)
    inst = ControlInstance(_reduced_for(rec, args.type), args.focus)
    witness = find_control_witness(args.system, args.type, inst)
    if witness is None:
        print("no")
        return EXIT_NO
    print("yes")
    print("witness:", " ".join(_witness_tokens(witness)))
    return EXIT_OK


def _witness_tokens(witness) -> list[str]:
    kind, *parts = witness
    out = [kind]
    for p in parts:
        out.append("{" + " ".join(str(x) for x in p) + "}")
    return out


def cmd_fset(args) -> int:
    rec = _load(args.input, args.system)
    red = _reduced_for(rec, args.type)
    print(_fmt(focus_set(args.system, args.type, red), red.candidates))
    return EXIT_OK


def cmd_compare(args) -> int:
    from .control.types import compatible
    from .relations import compare_on_instance

    if not compatible(args.type_a, args.type_b):
        raise UsageError(f"{args.type_a} and {args.type_b} are incompatible control types")
    rec = _load(args.input, args.system)
    red = _reduced_for(rec, args.type_a)
    amb, bma = compare_on_instance(args.system, args.type_a, args.type_b, red)
    print(f"a-b {_fmt(amb, red.candidates)}")
    print(f"b-a {_fmt(bma, red.candidates)}")
    return EXIT_OK


def cmd_classify_all(args) -> int:
    from .relations import classify_all, format_report

    if args.corpus is None:
        records = load_builtin_corpus(args.system)
    else:
        if not Path(args.corpus).is_dir():
            raise OSError(f"corpus directory {args.corpus} not found")
        records = load_corpus_dir(args.corpus, args.system)
    if not records:
        raise UsageError(f"no {args.system} records found")
    sys.stdout.write(format_report(args.system, classify_all(args.system, records)))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suites import run_suite

    checks = run_suite(args.suite, args.system, trials=args.trials, seed=args.seed)
    for c in checks:
        print(c.line())
    ok = all(c.passed for c in checks)
    print(f"{args.suite} {args.system} {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_NO


def cmd_search(args) -> int:
    from .search import SearchConfig, SearchTarget, find_witness

    cfg = SearchConfig(
        seed=args.seed,
        max_trials=args.max_trials,
        candidates=args.candidates,
        votes=args.votes,
        k=args.k,
        spoiler_candidates=args.spoiler_candidates,
        spoiler_votes=args.spoiler_votes,
    )
    res = find_witness(SearchTarget(args.system, args.type_a, args.type_b, args.direction), cfg)
    sys.stdout.write(res.report())
    if res.found and args.out:
        rec = record_from_reduced(f"search.{res.trial}", args.system, res.reduced)
        Path(args.out).write_text(serialize_instance(rec), encoding="utf-8")
    return EXIT_OK if res.found else EXIT_NO


def cmd_export_corpus(args) -> int:
    written = export_corpus(args.out)
    print(f"wrote {len(written)} files to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="electcontrol", description=__doc__.splitlines()[0], epilog=EPILOG)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def system(sp):
        sp.add_argument("--system", required=True, type=VotingRule, choices=list(VotingRule),
                        metavar="{plurality,veto,approval}")

    sp = sub.add_parser("decide", help="decide one control instance", epilog=EPILOG)
    system(sp)
    sp.add_argument("--type", required=True, type=_type)
    sp.add_argument("--input", required=True)
    sp.add_argument("--focus", required=True)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("fset", help="successful focus candidates of a reduced input", epilog=EPILOG)
    system(sp)
    sp.add_argument("--type", required=True, type=_type)
    sp.add_argument("--input", required=True)
    sp.set_defaults(func=cmd_fset)

    sp = sub.add_parser("compare", help="focus-set differences of two types", epilog=EPILOG)
    system(sp)
    sp.add_argument("--type-a", required=True, type=_type)
    sp.add_argument("--type-b", required=True, type=_type)
    sp.add_argument("--input", required=True)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("classify-all", help="relation report for all compatible pairs", epilog=EPILOG)
    system(sp)
    sp.add_argument("--corpus", help="directory of .election files (default: embedded corpus)")
    sp.set_defaults(func=cmd_classify_all)

    sp = sub.add_parser("verify", help="run a verification suite", epilog=EPILOG)
    sp.add_argument("--suite", required=True,
                    choices=["collapses", "containments", "immunity", "alpha", "corpus"])
    system(sp)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="seeded search for a separation witness", epilog=EPILOG)
    system(sp)
    sp.add_argument("--type-a", required=True, type=_type)
    sp.add_argument("--type-b", required=True, type=_type)
    sp.add_argument("--direction", choices=["a-b", "b-a", "both"], default="both")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-trials", type=int, default=10_000)
    sp.add_argument("--candidates", type=_range, default=(1, 5), metavar="MIN:MAX")
    sp.add_argument("--votes", type=_range, default=(0, 8), metavar="MIN:MAX")
    sp.add_argument("--k", type=_range, default=(0, 3), metavar="MIN:MAX")
    sp.add_argument("--spoiler-candidates", type=_range, default=(0, 3), metavar="MIN:MAX")
    sp.add_argument("--spoiler-votes", type=_range, default=(0, 4), metavar="MIN:MAX")
    sp.add_argument("--out", help="write the witness input here when found")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("export-corpus", help="write the embedded corpus as .election files", epilog=EPILOG)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_export_corpus)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except ControlError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
