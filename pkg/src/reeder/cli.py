"""Command-line front end: ``reeder {orbits,h1,pi0,table,validate}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import dynkin
from .dynkin import DynkinType, bourbaki_map, build_diagram, extend
from .errors import (CapExceededError, CatalogError, InvalidSpecError, InvalidTypeError, KacValidationError,
                     NotAvailableError, ReederError, UnsupportedFormError, UnsupportedIsogenyError,
                     UnsupportedSubsetError)
from .forms import (RealFormSpec, catalog, closed_form_count, h1_decomposition, inner_form, kac_for_vertex,
                    named_form, outer_form)
from .homspace import pi0_count
from .puzzle import DEFAULT_CAP, to_string

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_CAP = 0, 1, 2, 3, 4


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_form_options(p: argparse.ArgumentParser):
    g = p.add_argument_group("form selection")
    g.add_argument("--form", help='catalog name, e.g. "Sp(4)", "SU(2,3)", "EV", "D6^(3)"')
    g.add_argument("--type", dest="series", help="series letter A-G")
    g.add_argument("--rank", type=int)
    g.add_argument("--black", type=_int_list, default=[], help="twisted vertices, e.g. 3 or 1,4")
    g.add_argument("--outer", action="store_true", help="use the standard diagram involution")
    g.add_argument("--diagram", help='JSON like {"series": "E", "rank": 7, "black": [7]}')
    g.add_argument("--bourbaki", action="store_true", help="vertex numbers in --black/--keep/--remove and "
                   "output follow Bourbaki's numbering")
    g.add_argument("--cap", type=int, default=DEFAULT_CAP, help=f"vertex cap for enumeration (default {DEFAULT_CAP})")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--tsv", action="store_true")


def _from_bourbaki(t: DynkinType, vs):
    inv = {b: o for o, b in bourbaki_map(t).items()}
    inv[0] = 0
    return [inv[v] for v in vs]


def _resolve(args) -> RealFormSpec:
    chosen = sum(x is not None for x in (args.form, args.series, args.diagram))
    if chosen != 1:
        raise CatalogError("give exactly one of --form, --type/--rank or --diagram")
    if args.form is not None:
        return named_form(args.form)
    if args.diagram is not None:
        try:
            data = json.loads(args.diagram)
            series, rank = data["series"], int(data["rank"])
        except (ValueError, KeyError, TypeError) as e:
            raise CatalogError(f"bad --diagram JSON: {e}") from None
        black, outer = data.get("black", []), bool(data.get("outer", False))
    else:
        if args.rank is None:
            raise CatalogError("--type needs --rank")
        series, rank, black, outer = args.series, args.rank, args.black, args.outer
    try:
        t = DynkinType(series.upper(), rank)
    except InvalidTypeError as e:
        raise CatalogError(str(e)) from None
    if args.bourbaki:
        black = _from_bourbaki(t, black)
    return (outer_form if outer else inner_form)(t, tuple(black))


def _emit(args, payload: dict, text_lines: list[str], rows: list[list] | None = None):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.tsv and rows is not None:
        for r in rows:
            print("\t".join(map(str, r)))
    else:
        print("\n".join(text_lines))


def _relabel(s: str, verts, spec, bourbaki):
    if not bourbaki:
        return s
    m = bourbaki_map(spec.dtype)
    order = sorted(range(len(verts)), key=lambda j: m[verts[j]])
    return "".join(s[j] for j in order)


def cmd_orbits(args) -> int:
    spec = _resolve(args)
    red, dec = h1_decomposition(spec, args.cap)
    verts = red.vertices
    if args.bourbaki:
        verts_shown = sorted(bourbaki_map(spec.dtype)[v] for v in verts)
    else:
        verts_shown = list(verts)
    reps = [_relabel(to_string(r, dec.n), verts, spec, args.bourbaki) for r in dec.reps]
    payload = {"form": spec.to_json(), "vertices": verts_shown, "classes": len(dec),
               "representatives": reps, "sizes": list(dec.sizes), "zero_class": dec.zero_class}
    lines = [f"{spec.label}: {len(dec)} classes on vertices {','.join(map(str, verts_shown)) or '-'}"]
    lines += [f"  {i}  {r or '-'}  size {s}{'  (zero)' if i == dec.zero_class else ''}"
              for i, (r, s) in enumerate(zip(reps, dec.sizes))]
    rows = [["class", "representative", "size"]] + [[i, r, s] for i, (r, s) in enumerate(zip(reps, dec.sizes))]
    _emit(args, payload, lines, rows)
    return EXIT_OK


def cmd_h1(args) -> int:
    spec = _resolve(args)
    red, dec = h1_decomposition(spec, args.cap)
    n = spec.dtype.rank
    verts = list(range(1, n + 1))
    reps = [_relabel(to_string(red.lift(r), n), verts, spec, args.bourbaki) for r in dec.reps]
    payload = {"form": spec.to_json(), "h1": len(dec), "representatives": reps}
    rows = [["form", "label", "h1"], [spec.name or spec.label, spec.label, len(dec)]]
    _emit(args, payload, [str(len(dec))], rows)
    return EXIT_OK


def cmd_pi0(args) -> int:
    spec = _resolve(args)
    if (args.keep is None) == (args.remove is None):
        raise CatalogError("give exactly one of --keep or --remove")
    keep, remove = args.keep, args.remove
    if args.bourbaki:
        keep = _from_bourbaki(spec.dtype, keep) if keep is not None else None
        remove = _from_bourbaki(spec.dtype, remove) if remove is not None else None
    res = pi0_count(spec, keep=keep, remove=remove, extended=args.extended, cap=args.cap)
    payload = {"form": spec.to_json(), **res.to_json()}
    rows = [["form", "pi1_order", "pi0"], [spec.name or spec.label, res.pi1_order, res.count]]
    _emit(args, payload, [str(res.count)], rows)
    return EXIT_OK


def cmd_table(args) -> int:
    max_rank = 12 if args.all else args.max_rank
    rows, bad = [], 0
    for spec in catalog(max_rank):
        h = len(h1_decomposition(spec, args.cap)[1])
        try:
            f = closed_form_count(spec)
        except NotAvailableError:
            f = None
        ok = f is None or f == h
        bad += not ok
        rows.append([spec.name, spec.label, h, f if f is not None else "-", "ok" if ok else "MISMATCH"])
    payload = {"rows": [dict(zip(["name", "label", "enumerated", "closed_form", "status"], r)) for r in rows],
               "mismatches": bad}
    width = max(len(r[0]) for r in rows)
    lines = [f"{r[0]:<{width}}  {r[1]:<14} {r[2]:>3} {r[3]:>3}  {r[4]}" for r in rows]
    lines.append(f"{len(rows)} forms, {bad} mismatches")
    _emit(args, payload, lines, [["name", "label", "enumerated", "closed_form", "status"]] + rows)
    return EXIT_OK if bad == 0 else EXIT_FAIL


def cmd_validate(args) -> int:
    problems = []
    checked = 0
    types = [DynkinType(s, n) for s in "ABCD" for n in range(dynkin.MIN_RANK[s], args.max_rank + 1)]
    types += [DynkinType(s, n) for s, n in sorted(dynkin.EXCEPTIONAL)]
    for t in types:
        checked += 1
        try:
            e = extend(t)
            d = build_diagram(t)
            if any(d.cartan[i][i] != 2 for i in range(d.n)):
                problems.append(f"{t}: diagonal entries must be 2")
            for i in range(1, t.rank + 1):
                if e.marks[i] in (1, 2):
                    kac_for_vertex(t, i)
        except (ValueError, KacValidationError) as exc:
            problems.append(f"{t}: {exc}")
    payload = {"checked": checked, "problems": problems}
    _emit(args, payload, problems + [f"{checked} diagrams checked, {len(problems)} problems"])
    return EXIT_OK if not problems else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reeder", description="Orbit counts for the generalized Reeder puzzle.")
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("orbits", help="list the move classes of a (twisted) diagram")
    _add_form_options(o)
    o.set_defaults(func=cmd_orbits)

    h = sub.add_parser("h1", help="number of Galois cohomology classes of a real form")
    _add_form_options(h)
    h.set_defaults(func=cmd_h1)

    q = sub.add_parser("pi0", help="components of (G/H)(R) for an equal-rank subgroup")
    _add_form_options(q)
    sel = q.add_mutually_exclusive_group()
    sel.add_argument("--keep", type=_int_list)
    sel.add_argument("--remove", type=_int_list)
    q.add_argument("--extended", action="store_true", help="allow vertex 0 of the extended diagram")
    q.set_defaults(func=cmd_pi0)

    t = sub.add_parser("table", help="enumerated vs closed-form counts for the catalog")
    t.add_argument("--all", action="store_true", help="every form up to rank 12")
    t.add_argument("--max-rank", type=int, default=8)
    t.add_argument("--cap", type=int, default=DEFAULT_CAP)
    out = t.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--tsv", action="store_true")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("validate", help="check static diagram data and Kac diagrams")
    v.add_argument("--max-rank", type=int, default=12)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_validate, tsv=False)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CatalogError, InvalidSpecError, InvalidTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedSubsetError, UnsupportedIsogenyError, UnsupportedFormError, NotAvailableError) as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CapExceededError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except ReederError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
