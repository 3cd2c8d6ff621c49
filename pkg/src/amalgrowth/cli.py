"""Command line front end.

    amalgrowth series --p 2,3,7 [--format plain|latex|factored] [--json]
    amalgrowth coeffs --p 2,3,7 --upto 20
    amalgrowth verify --p 2,3,7 --depth 12 [--csv FILE]
    amalgrowth normalform --p 3,6,7 --word "x2^2 x3^-3 ..."
    amalgrowth geodesics --p 3,6,7 --word "..." [--cap 100]
    amalgrowth canonical --p 3,6,7 --word "..."

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .canonical import canonical_spread, gamma_membership, locate_case
from .core import Presentation, WordSyntaxError, parse_letters, reindex, to_lambda
from .geodesics import TypeTag, classify, geodesic_length, suitable_spread
from .normal_forms import canonical_key, garside_nf, modified_nf, r_nu
from .oracle import OracleBudgetError, bfs_spheres
from .ratfun import taylor
from .series import growth_series


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="amalgrowth", description="Growth series of G(p_1,...,p_n).")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def with_p(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--p", required=True, help="exponents, e.g. 2,3,7")
        sp.add_argument("--json", action="store_true", help="print a JSON envelope")
        return sp

    sp = with_p("series", "closed-form growth series")
    sp.add_argument("--format", choices=("plain", "latex", "factored"), default="plain")
    sp = with_p("coeffs", "power series coefficients")
    sp.add_argument("--upto", type=int, default=20)
    sp = with_p("verify", "compare the closed form with breadth-first search")
    sp.add_argument("--depth", type=int, default=8)
    sp.add_argument("--csv", help="also write the sphere table to this file")
    for name, help_ in (
        ("normalform", "lambda form, Garside and modified normal forms"),
        ("geodesics", "all geodesics produced by the spread procedure"),
        ("canonical", "canonical geodesic and its class"),
    ):
        sp = with_p(name, help_)
        sp.add_argument("--word", required=True)
        if name == "geodesics":
            sp.add_argument("--cap", type=int, default=100)
    return ap


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _series(args, pres: Presentation) -> int:
    s = growth_series(pres)
    payload = {
        "p": list(pres.p),
        "numerator_coeffs": list(s.num.coeffs),
        "denominator_coeffs": list(s.den.coeffs),
    }
    _emit(args, s.render(args.format), payload)
    return 0


def _coeffs(args, pres: Presentation) -> int:
    c = taylor(growth_series(pres), args.upto)
    _emit(args, " ".join(map(str, c)), {"p": list(pres.p), "coefficients": c})
    return 0


def _verify(args, pres: Presentation) -> int:
    closed = taylor(growth_series(pres), args.depth)
    try:
        table = bfs_spheres(pres, args.depth)
    except OracleBudgetError as exc:
        print(f"oracle stopped early: {exc}", file=sys.stderr)
        table = exc.partial
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(table.to_csv())
    ok = table.complete
    lines = ["length  closed-form  bfs  match"]
    for l, c in enumerate(closed):
        b = table.counts[l] if l < len(table.counts) else None
        ok &= b == c
        lines.append(f"{l:>6}  {c:>11}  {b if b is not None else '-':>3}  {'ok' if b == c else 'MISMATCH'}")
    payload = {"p": list(pres.p), "coefficients": closed, "bfs": list(table.counts), "match": ok}
    _emit(args, "\n".join(lines), payload)
    return 0 if ok else 1


def _normalform(args, pres: Presentation) -> int:
    letters = parse_letters(pres, args.word)
    lam = to_lambda(pres, letters)
    gnf = garside_nf(pres, lam)
    mnf = modified_nf(pres, gnf)
    rs = r_nu(pres, mnf)
    tag = classify(pres, mnf)
    payload = {
        "p": list(pres.p),
        "lambda": str(lam),
        "garside": str(gnf),
        "modified": str(mnf),
        "R": sorted(rs.r_set),
        "r": rs.r_nu,
        "type": tag.value,
        "length": geodesic_length(pres, mnf),
    }
    text = "\n".join(
        [
            f"lambda:   {lam}",
            f"garside:  {gnf}",
            f"modified: {mnf}",
            f"R:        {{{','.join(map(str, sorted(rs.r_set)))}}}  r = {rs.r_nu}",
            f"type:     {tag.value}",
            f"length:   {payload['length']}",
        ]
    )
    _emit(args, text, payload)
    return 0


def _geodesics(args, pres: Presentation) -> int:
    mnf = canonical_key(pres, parse_letters(pres, args.word))
    try:
        words = suitable_spread(pres, mnf, cap=args.cap)
    except OverflowError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    payload = {"p": list(pres.p), "geodesics": [str(w) for w in words], "count": len(words)}
    _emit(args, "\n".join(payload["geodesics"] + [f"count: {len(words)}"]), payload)
    return 0


def _canonical(args, pres: Presentation) -> int:
    reidx = reindex(pres)
    mnf = canonical_key(pres, parse_letters(pres, args.word))
    word = canonical_spread(pres, reidx, mnf)
    tag = classify(pres, mnf)
    case = str(locate_case(pres, reidx, mnf)[0]) if tag is TypeTag.T3Zero else None
    classes = gamma_membership(pres, reidx, word).classes
    payload = {"p": list(pres.p), "canonical": str(word), "type": tag.value, "case": case, "classes": classes}
    text = f"{word}\ntype: {tag.value}" + (f"\n{case}" if case else "") + f"\nclasses: {', '.join(classes)}"
    _emit(args, text, payload)
    return 0


_COMMANDS = {
    "series": _series,
    "coeffs": _coeffs,
    "verify": _verify,
    "normalform": _normalform,
    "geodesics": _geodesics,
    "canonical": _canonical,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        pres = Presentation.parse(args.p)
        return _COMMANDS[args.cmd](args, pres)
    except WordSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
