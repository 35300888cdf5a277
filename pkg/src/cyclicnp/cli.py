"""Command line front end: compute, table, search, verify.

Exit codes: 0 success, 1 oracle mismatch, 2 invalid input or datum,
3 p (or a class) not coprime to m, 4 point-counting budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import gcd

from sympy import isprime

from .arith import NotCoprimeError, subgroup_generated
from .monodromy import InvalidDatumError, MonodromyDatum, canonical_form, genus, validate
from .oracle import DEFAULT_BUDGET, BudgetExceededError, cross_check
from .polygon import NewtonPolygon, display, is_supersingular, p_rank, parse
from .shimura import orbit_slopes_for_generator, subgroup_generator
from .survey import (
    compress_congruence,
    congruence_classes_grouped,
    find_polygon,
    find_supersingular,
    has_slope,
    prank_zero,
    table_for_m,
)

EXIT_MISMATCH, EXIT_INVALID, EXIT_COPRIME, EXIT_BUDGET = 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {text!r}", EXIT_INVALID)


def _datum(m: int, a_text: str) -> MonodromyDatum:
    a = _ints(a_text)
    try:
        datum = validate(m, a)
    except InvalidDatumError as exc:
        cond = getattr(exc, "condition", "monodromy datum")
        raise CliError(f"invalid monodromy datum (violates {cond}): {exc}", EXIT_INVALID)
    canon = canonical_form(m, datum.a)
    if canon.a != tuple(a):
        _err(f"note: inertia type {tuple(a)} canonicalized to {canon.a}")
    return canon


def slope_triples(np_: NewtonPolygon) -> list[dict]:
    return [{"num": s.numerator, "den": s.denominator, "mult": k} for s, k in np_.slopes]


def polygon_record(np_: NewtonPolygon, ascii: bool = False) -> dict:
    return {
        "slopes": slope_triples(np_),
        "p_rank": p_rank(np_),
        "supersingular": is_supersingular(np_),
        "label": display(np_, ascii=ascii),
    }


def _orbit_records(datum: MonodromyDatum, h: int) -> list[dict]:
    out = []
    for r in orbit_slopes_for_generator(datum, h):
        rec = {
            "members": list(r.orbit.members),
            "order": r.orbit.order,
            "self_dual": r.orbit.self_dual,
            "alpha": r.alpha,
            "beta": r.beta,
            "excluded": r.excluded,
        }
        if not r.excluded:
            rec["slope"] = str(r.slope)
        out.append(rec)
    return out


def _class_members(m: int, h: int) -> list[int]:
    target = subgroup_generated(m, h)
    return [r for r in range(1, m) if gcd(r, m) == 1 and subgroup_generated(m, r) == target]


def compute_record(args) -> dict:
    datum = _datum(args.m, args.a)
    m = datum.m
    rec: dict = {"m": m, "a": list(datum.a)}
    if args.p is not None:
        if m % args.p == 0:
            raise CliError(f"p={args.p} divides m={m}: bad reduction", EXIT_COPRIME)
        if not isprime(args.p):
            raise CliError(f"p={args.p} is not prime", EXIT_INVALID)
        h = args.p % m
        rec["p"] = args.p
    elif args.cls is not None:
        if gcd(args.cls, m) != 1:
            raise CliError(f"class {args.cls} is not a unit mod {m}", EXIT_COPRIME)
        h = args.cls % m
    else:
        try:
            h = subgroup_generator(m, _ints(args.subgroup))
        except NotCoprimeError as exc:
            raise CliError(str(exc), EXIT_COPRIME)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INVALID)
    reports = orbit_slopes_for_generator(datum, h)
    np_ = NewtonPolygon.from_slopes(
        (r.slope, len(r.orbit)) for r in reports if not r.excluded
    )
    rec["classes"] = _class_members(m, h)
    rec["subgroup"] = sorted(subgroup_generated(m, h))
    rec.update(polygon_record(np_, args.ascii))
    if args.orbits:
        rec["orbits"] = _orbit_records(datum, h)
    if getattr(args, "oracle", False):
        if args.p is None:
            raise CliError("--oracle needs --p", EXIT_INVALID)
        rec["oracle"] = _oracle_record(datum, args.p, args.budget)
    return rec


def _oracle_record(datum, p, budget) -> dict:
    try:
        chk = cross_check(datum, p, budget)
    except BudgetExceededError as exc:
        raise CliError(str(exc), EXIT_BUDGET)
    return {
        "agree": chk.agree,
        "l_polynomial": list(chk.l_poly.coefficients),
        "label": display(chk.oracle),
    }


def _text_compute(rec: dict) -> str:
    a = ",".join(map(str, rec["a"]))
    head = f"m={rec['m']} a=({a}) g={genus(MonodromyDatum(rec['m'], tuple(rec['a'])))}"
    if "p" in rec:
        head += f" p={rec['p']}"
    lines = [
        head,
        f"classes: p ≡ {','.join(map(str, rec['classes']))} mod {rec['m']}",
        f"Newton polygon: {rec['label']}",
        "slopes: " + ", ".join(f"{s['num']}/{s['den']} x{s['mult']}" for s in rec["slopes"]),
        f"p-rank: {rec['p_rank']}  supersingular: {'yes' if rec['supersingular'] else 'no'}",
    ]
    for o in rec.get("orbits", []):
        members = "(" + ",".join(map(str, o["members"])) + ")"
        if o["excluded"]:
            lines.append(f"  orbit {members}: order {o['order']} divides some a(i), excluded")
        else:
            dual = ", self-dual" if o["self_dual"] else ""
            lines.append(
                f"  orbit {members}: order {o['order']}, alpha={o['alpha']}, "
                f"beta={o['beta']}, slope {o['slope']}{dual}"
            )
    if "oracle" in rec:
        o = rec["oracle"]
        lines.append(f"oracle: {o['label']} ({'agree' if o['agree'] else 'MISMATCH'})")
    return "\n".join(lines)


def cmd_compute(args) -> int:
    rec = compute_record(args)
    if args.format == "json":
        print(json.dumps(rec, ensure_ascii=False))
    else:
        print(_text_compute(rec))
    if "oracle" in rec and not rec["oracle"]["agree"]:
        return EXIT_MISMATCH
    return 0


def table_data(m: int, ascii: bool = False) -> dict:
    classes = congruence_classes_grouped(m)
    rows = []
    for row in table_for_m(m):
        cells = []
        for c in classes:
            rec = {"classes": list(c.members)}
            rec.update(polygon_record(row.cells[c], ascii))
            cells.append(rec)
        rows.append(
            {"a": list(row.datum.a), "genus": row.genus, "signature": list(row.signature.f), "cells": cells}
        )
    return {
        "m": m,
        "columns": [{"classes": list(c.members), "orbits": c.orbit_label()} for c in classes],
        "rows": rows,
    }


def _tuple(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def render_table(data: dict, fmt: str) -> str:
    m = data["m"]
    heads = [f"{','.join(map(str, c['classes']))} mod {m}" for c in data["columns"]]
    if fmt == "json":
        return json.dumps(data, ensure_ascii=False)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "signature"] + heads)
        for row in data["rows"]:
            w.writerow([_tuple(row["a"]), _tuple(row["signature"])] + [c["label"] for c in row["cells"]])
        return buf.getvalue().rstrip("\n")
    lines = [
        f"m={m}",
        "",
        "| a | signature | " + " | ".join(heads) + " |",
        "|" + "---|" * (len(heads) + 2),
        "|  | prime orbits | " + " | ".join(c["orbits"] for c in data["columns"]) + " |",
    ]
    for row in data["rows"]:
        cells = " | ".join(c["label"] for c in row["cells"])
        lines.append(f"| {_tuple(row['a'])} | {_tuple(row['signature'])} | {cells} |")
    return "\n".join(lines)


def cmd_table(args) -> int:
    if args.m < 3:
        raise CliError(f"tables need m >= 3, got {args.m}", EXIT_INVALID)
    print(render_table(table_data(args.m, args.ascii), args.format))
    return 0


def _hit_record(hit, compress: bool) -> dict:
    rec = {
        "m": hit.m,
        "a": None if hit.any_a else list(hit.datum.a),
        "genus": hit.genus,
        "classes": list(hit.residues),
        "label": None if hit.polygon is None else display(hit.polygon),
    }
    if compress:
        d, image = compress_congruence(hit.residues, hit.m)
        rec["congruence"] = {"modulus": d, "residues": list(image)}
    return rec


def cmd_search(args) -> int:
    if args.m_min > args.m_max:
        raise CliError("empty m range", EXIT_INVALID)
    ms = range(args.m_min, args.m_max + 1)
    if args.supersingular:
        hits = find_supersingular(ms)
    elif args.polygon is not None:
        try:
            target = parse(args.polygon)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INVALID)
        hits = find_polygon(ms, target)
    elif args.slope is not None:
        hits = find_polygon(ms, has_slope(Fraction(args.slope)))
    else:
        hits = find_polygon(ms, prank_zero())
    if args.format == "json":
        print(json.dumps([_hit_record(h, args.compress_congruences) for h in hits], ensure_ascii=False))
    else:
        for h in hits:
            line = h.describe(args.compress_congruences)
            print(line.replace("⊕", "+") if args.ascii else line)
    return 0


def cmd_verify(args) -> int:
    datum = _datum(args.m, args.a)
    if datum.m % args.p == 0:
        raise CliError(f"p={args.p} divides m={datum.m}: bad reduction", EXIT_COPRIME)
    if not isprime(args.p):
        raise CliError(f"p={args.p} is not prime", EXIT_INVALID)
    try:
        chk = cross_check(datum, args.p, args.budget)
    except BudgetExceededError as exc:
        raise CliError(str(exc), EXIT_BUDGET)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "m": datum.m,
                    "a": list(datum.a),
                    "p": args.p,
                    "agree": chk.agree,
                    "l_polynomial": list(chk.l_poly.coefficients),
                    "orbit_method": polygon_record(chk.shimura),
                    "point_count": polygon_record(chk.oracle),
                },
                ensure_ascii=False,
            )
        )
    else:
        print(f"{datum}, p={args.p}, g={genus(datum)}")
        print(f"L(T) = {chk.l_poly}")
        print(f"orbit method:  {display(chk.shimura, args.ascii)}")
        print(f"point counts:  {display(chk.oracle, args.ascii)}")
        print("agree" if chk.agree else "MISMATCH")
    return 0 if chk.agree else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclicnp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--ascii", action="store_true", help='join polygon factors with "+"')

    c = sub.add_parser("compute", help="Newton polygon for one datum and prime or class")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--a", required=True, help="inertia type, e.g. 1,1,9")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--class", dest="cls", type=int, help="any prime congruent to this mod m")
    g.add_argument("--subgroup", help="elements of a cyclic subgroup of units mod m")
    c.add_argument("--orbits", action="store_true", help="include per-orbit slope data")
    c.add_argument("--oracle", action="store_true", help="also run the point-count check (needs --p)")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(c, ["text", "json"], "text")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="all inertia types and congruence classes for m")
    t.add_argument("--m", type=int, required=True)
    common(t, ["md", "csv", "json"], "md")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("search", help="search congruence classes over a range of m")
    s.add_argument("--m-min", type=int, required=True)
    s.add_argument("--m-max", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--supersingular", action="store_true")
    g.add_argument("--polygon", help='exact polygon label, e.g. "(1/3,2/3)^2"')
    g.add_argument("--slope", help="polygons containing this slope, e.g. 1/5")
    g.add_argument("--prank0", action="store_true", help="p-rank 0, not supersingular")
    s.add_argument("--compress-congruences", action="store_true")
    common(s, ["text", "json"], "text")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="compare against point counts over F_p^k")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--a", required=True)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(v, ["text", "json"], "text")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _err(f"error: {exc}")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
