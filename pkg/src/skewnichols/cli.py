"""Command-line entry point: ``skewnichols {roots,skew,verify,chains}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import chaincomb, skewcalc, suites
from .braided import is_zero_in_nichols
from .rootsys import build_root_system
from .weylgroup import from_word, group_order, weyl_group

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_word(text: str | None, rank: int) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        letters = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"bad word {text!r}: expected comma-separated integers") from None
    if any(not 1 <= b <= rank for b in letters):
        raise UsageError(f"letters of {text!r} must lie in 1..{rank}")
    return tuple(b - 1 for b in letters)


def _root_system(type_str: str, need_group: bool = False):
    try:
        rs = build_root_system(type_str)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    if need_group and group_order(rs) > suites.MAX_ENUMERATED:
        raise UsageError(f"Weyl group of {rs.type} is too large for this command")
    return rs


def _reduced(g, word, name):
    ok, x = g.is_reduced(word)
    if not ok:
        raise UsageError(f"--{name} is not a reduced word")
    return x


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_roots(args) -> int:
    rs = _root_system(args.type)
    payload = {
        "type": str(rs.type),
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "positive_roots": [list(a) for a in rs.positive_roots],
    }
    lines = [f"{rs.type}: rank {rs.rank}, {rs.n_pos} positive roots", "Cartan matrix:"]
    lines += ["  " + " ".join(f"{c:2d}" for c in row) for row in rs.cartan_matrix]
    lines += [f"  {i + 1:3d}  {a}" for i, a in enumerate(rs.positive_roots)]
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_skew(args) -> int:
    rs = _root_system(args.type, need_group=True)
    g = weyl_group(rs)
    ww = _parse_word(args.w, rs.rank)
    vw = _parse_word(args.v, rs.rank)
    wi, vi = _reduced(g, ww, "w"), _reduced(g, vw, "v")
    W, V = g.elements[wi], g.elements[vi]
    routes = list(skewcalc.ROUTES) if args.route == "all" else [args.route]
    reps = {r: skewcalc.skew(rs, W, V, r).rep for r in routes}
    first = reps[routes[0]]
    payload = {
        "type": str(rs.type), "w": [b + 1 for b in ww], "v": [b + 1 for b in vw],
        "below": g.leq(vi, wi),
        "representatives": {r: x.to_json(rs) for r, x in reps.items()},
    }
    lines = [f"{r}: {x.format(rs)}" for r, x in reps.items()]
    if args.verify:
        others = [r for r in skewcalc.ROUTES if r not in reps]
        for r in others:
            reps[r] = skewcalc.skew(rs, W, V, r).rep
        agree = all(skewcalc.nichols_equal(rs, first, x) for x in reps.values())
        payload["routes_agree"] = agree
        payload["zero"] = is_zero_in_nichols(rs, first)
        lines.append(f"routes agree in the Nichols algebra: {agree}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_chains(args) -> int:
    rs = _root_system(args.type, need_group=True)
    g = weyl_group(rs)
    ww = _parse_word(args.w, rs.rank)
    vw = _parse_word(args.v, rs.rank)
    _reduced(g, ww, "w")
    vi = _reduced(g, vw, "v")
    V = g.elements[vi]
    try:
        j, k = chaincomb.unique_subsequences(rs, ww, V, check_unique=True)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = chaincomb.r_map(rs, ww, V)
    rc = chaincomb.r_circ_map(rs, ww, V)
    payload = {
        "type": str(rs.type), "w": [b + 1 for b in ww], "v": [b + 1 for b in vw],
        "j": list(j), "k": list(k),
        "r": [b + 1 for b in r], "r_circ": [b + 1 for b in rc],
    }
    if args.fibers:
        fibers: dict[tuple, list] = {}
        words = sorted(g.reduced_words(g.id(from_word(rs, ww))))
        if args.max_words:
            words = words[:args.max_words]
        for word in words:
            fibers.setdefault(chaincomb.r_map(rs, word, V), []).append([b + 1 for b in word])
        payload["r_fibers"] = [{"image": [b + 1 for b in img], "words": ws}
                               for img, ws in sorted(fibers.items())]
    text = "\n".join(f"{key}: {payload[key]}" for key in ("j", "k", "r", "r_circ"))
    _emit(payload, args.json, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    opts = suites.Options(bound=args.bound, seed=args.seed, jobs=args.jobs,
                          route=args.route, pairs=args.pairs, max_words=args.max_words)
    _root_system(args.type)
    try:
        report = suites.run_suite(args.suite, args.type, opts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = report.to_json(timing=args.timing)
    payload.update(seed=args.seed, bound=args.bound)
    text = (f"{report.suite} on {report.type}: {report.status.upper()} "
            f"({report.cases_checked} cases, {report.hypothesis_hits} hypothesis hits, "
            f"{len(report.violations)} violations, "
            f"{len(report.expected_failures)} expected failures)")
    if args.timing:
        text += f" in {report.wall_time:.2f}s"
    _emit(payload, args.json, text)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewnichols",
                                description="Skew elements in Nichols algebras of Weyl groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--type", required=True, help="Cartan type such as A3, B2, E6")
        sp.add_argument("--json", action="store_true", help="print one JSON object")

    sp = sub.add_parser("roots", help="list positive roots and the Cartan matrix")
    common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("skew", help="representatives of x_{w/v}")
    common(sp)
    sp.add_argument("--w", default="", help="reduced word of w, 1-based CSV")
    sp.add_argument("--v", default="", help="reduced word of v, 1-based CSV")
    sp.add_argument("--route", default="positive", choices=skewcalc.ROUTES + ("all",))
    sp.add_argument("--verify", action="store_true", help="compare all routes in the Nichols algebra")
    sp.set_defaults(func=cmd_skew)

    sp = sub.add_parser("chains", help="deletion sequences and r-maps")
    common(sp)
    sp.add_argument("--w", default="", help="reduced word of w, 1-based CSV")
    sp.add_argument("--v", default="", help="reduced word of v, 1-based CSV")
    sp.add_argument("--fibers", action="store_true", help="group all reduced words of w by r-image")
    sp.add_argument("--max-words", type=int, default=0, help="cap on words for --fibers (0: all)")
    sp.set_defaults(func=cmd_chains)

    sp = sub.add_parser("verify", help="run a verification scan")
    sp.add_argument("suite", choices=suites.SUITES)
    common(sp)
    sp.add_argument("--bound", type=int, default=suites.MAX_ENUMERATED,
                    help="maximum number of base elements before sampling")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--route", default="chains", choices=("chains", "pairing"),
                    help="how one-property computes c")
    sp.add_argument("--pairs", type=int, default=200, help="random pairs for leibniz")
    sp.add_argument("--max-words", type=int, default=0, help="reduced words per w for chains (0: all)")
    sp.add_argument("--timing", action="store_true", help="report wall time (not deterministic)")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"skewnichols: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
