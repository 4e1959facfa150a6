"""Command-line front end.

Exit codes: 0 success, 1 exact theorem/agreement violation, 2 input error.
Monte Carlo noise never drives a nonzero exit; statistical results are
reported, not gated.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import corpus
from .classify import (
    Verdict,
    census_table,
    check_theorem1,
    check_theorem2_part1,
    classify_high_cp,
    scan_corpus,
)
from .compact import cp_monte_carlo, cp_semianalytic, fc_center
from .cp import (
    cp_class_count,
    cp_coset_formula,
    cp_pair_count,
    format_rational,
    parse_rational,
)
from .errors import HaarcpError
from .groups import DEFAULT_CLOSURE_CAP, center
from .isoclinism import find_isoclinism, find_stem_group
from .specfmt import parse_model_file, resolve_group


def _cap(args) -> int:
    if getattr(args, "cap", None):
        return args.cap
    env = os.environ.get("HAARCP_CAP")
    if env and env.isdigit():
        return int(env)
    return DEFAULT_CLOSURE_CAP


def _group(args, tokens) -> "FiniteGroup":
    return resolve_group(" ".join(tokens), cap=_cap(args))


def cmd_cp(args) -> int:
    G = _group(args, args.group)
    pair = cp_pair_count(G)
    cls = cp_class_count(G)
    coset = cp_coset_formula(G)
    print(f"pair-count:    {format_rational(pair)}")
    print(f"class-count:   {format_rational(cls)}")
    print(f"coset-formula: {format_rational(coset)}")
    if pair == cls == coset:
        print("PASS agreement")
        return 0
    print("FAIL disagreement between algorithms")
    return 1


def cmd_center(args) -> int:
    G = _group(args, args.group)
    Z = center(G)
    print(f"center order {Z.order} of group order {G.order}")
    print(" ".join(str(m) for m in Z.members))
    return 0


def cmd_fc(args) -> int:
    model = parse_model_file(args.model, cap=_cap(args))
    fc = fc_center(model)
    print(f"action kernel size {len(fc.kernel)} of |Q| = {model.acting_group.order}")
    print(f"FC index {fc.index}")
    print(f"finite shadow order {fc.finite_shadow.order}")
    return 0


def cmd_classify(args) -> int:
    G = _group(args, args.group)
    result = classify_high_cp(G)
    print(f"cp = {format_rational(result.cp_value)}")
    print(f"verdict: {result.verdict}")
    return 1 if result.verdict is Verdict.THEOREM_VIOLATION else 0


def cmd_isoclinic(args) -> int:
    G = resolve_group(args.group_a, cap=_cap(args))
    H = resolve_group(args.group_b, cap=_cap(args))
    w = find_isoclinism(G, H)
    if w is None:
        print("none")
        return 0
    print(w.serialize())
    return 0


def cmd_stem(args) -> int:
    F = _group(args, args.group)
    groups = [g for _n, g in corpus.builtin_corpus(args.max_order)]
    found = find_stem_group(F, groups)
    if found is None:
        print("none (corpus exhausted)")
        return 0
    H, w = found
    print(f"stem: {H.name} (order {H.order})")
    print(w.serialize())
    return 0


def cmd_verify_t1(args) -> int:
    model = parse_model_file(args.model, cap=_cap(args))
    stem_groups = [g for _n, g in corpus.builtin_corpus(32)]
    report = check_theorem1(model, stem_corpus=stem_groups)
    eq = "PASS" if report.equal else "FAIL"
    print(
        f"{eq} cp equality: direct {format_rational(report.cp_direct)}"
        f" vs reduced {format_rational(report.cp_reduced)}"
    )
    if report.stem_name is not None:
        mark = "PASS" if report.stem_cp_equal else "FAIL"
        print(f"{mark} stem clause: {report.stem_name}")
    for note in report.notes:
        print(f"note: {note}")
    return 0 if report.passed else 1


def cmd_verify_t2(args) -> int:
    target = args.input
    if corpus.builtin_group(target) is not None or _looks_like_group_file(target):
        x = resolve_group(target, cap=_cap(args))
    else:
        x = parse_model_file(target, cap=_cap(args))
    report = check_theorem2_part1(x)
    mark = "PASS" if report.passed else "FAIL"
    print(f"{mark} cp = {format_rational(report.cp_value)}")
    for note in report.notes:
        print(f"note: {note}")
    return 0 if report.passed else 1


def _looks_like_group_file(target: str) -> bool:
    path = Path(target)
    if not path.is_file():
        return False
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return line.split()[0] in ("perm", "table", "product")
    return False


def cmd_scan(args) -> int:
    threshold = parse_rational(args.threshold)
    cap = _cap(args)
    entries: list[tuple[str, "FiniteGroup"]] = []
    if not args.inputs:
        entries = corpus.builtin_corpus(64)
    for item in args.inputs:
        path = Path(item)
        if path.is_dir():
            for child in sorted(path.iterdir()):
                if child.is_file():
                    entries.append((child.stem, resolve_group(str(child), cap=cap)))
        else:
            entries.append((item, resolve_group(item, cap=cap)))
    rows = scan_corpus(entries, threshold=threshold)
    if args.machine:
        for row in rows:
            print(row.machine_line())
    else:
        print(census_table(rows))
    bad = [r for r in rows if r.verdict is Verdict.THEOREM_VIOLATION]
    return 1 if bad else 0


def cmd_mc(args) -> int:
    model = parse_model_file(args.model, cap=_cap(args))
    est = cp_monte_carlo(model, args.samples, args.seed)
    exact = cp_semianalytic(model)
    print(f"estimate {est.estimate:.6f} +- {est.stderr:.6f} ({est.samples} samples)")
    print(f"exact {format_rational(exact)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haarcp",
        description="Exact commuting probability for finite groups and finite-by-torus compact groups.",
    )
    parser.add_argument("--cap", type=int, default=None,
                        help="closure cap (overrides HAARCP_CAP)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("cp", help="exact cp by all three finite algorithms")
    p.add_argument("group", nargs="+")
    p.set_defaults(func=cmd_cp)

    p = sub.add_parser("center", help="center of a group")
    p.add_argument("group", nargs="+")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("fc", help="FC-center of a compact model")
    p.add_argument("model")
    p.set_defaults(func=cmd_fc)

    p = sub.add_parser("classify", help="threshold classification of a group")
    p.add_argument("group", nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("isoclinic", help="search for an isoclinism witness")
    p.add_argument("group_a")
    p.add_argument("group_b")
    p.set_defaults(func=cmd_isoclinic)

    p = sub.add_parser("stem", help="find a stem group isoclinic to the input")
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("group", nargs="+")
    p.set_defaults(func=cmd_stem)

    p = sub.add_parser("verify-t1", help="check both cp routes agree on a model")
    p.add_argument("model")
    p.set_defaults(func=cmd_verify_t1)

    p = sub.add_parser("verify-t2", help="check the 1/4 finiteness threshold")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify_t2)

    p = sub.add_parser("scan", help="census of a corpus against a threshold")
    p.add_argument("--threshold", default="3/40",
                   help="exact fraction like 3/40 (decimals rejected)")
    p.add_argument("--machine", action="store_true",
                   help="pipe-delimited output for golden files")
    p.add_argument("inputs", nargs="*")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("mc", help="Monte Carlo cp estimate for a model")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("model")
    p.set_defaults(func=cmd_mc)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HaarcpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
