"""
Command-line surface.

Subcommands: coxeter, roots, length, bruhat, classes, descent, group,
degrees, molien, poincare, fakedeg, chartable, regular, homfly, table.
Every command prints stable text by default and a version-stamped JSON
payload with --json.  Exit codes: 0 ok, 2 usage, 3 budget exceeded,
4 internal invariant violation.

Coxeter matrices come from a file (one row per line, "inf" for infinity)
or from a type name like A3, B4, H3, I2(7).  Braid words use the format
"n: i j -k"; monomial group elements "(1 2);[1,0]".
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .coxeter import (CoxeterGroup, bad_and_torsion_primes, bruhat_leq,
                      classify_finite_type, coxeter_matrix_of_type,
                      generate_roots, is_finite, parse_coxeter_matrix,
                      standard_cartan)
from .classes import carter_decomposition, conjugacy_classes, gp_descent
from .errors import BudgetExceeded, InvariantViolation
from .hecke import homfly, markov_fuzz, parse_braid, specialize
from .imprim import ImprimitiveGroup
from .invariants import (degree_data_imprim, degrees_from_molien,
                         molien_series, poincare_polynomial, regular_numbers,
                         degree_data_enumerated)
from .chars import char_table, fake_degree_closed, d_partitions
from .sheptodd import load_table, record

DEFAULT_BUDGET = 10 ** 6
DEFAULT_TABLE_BUDGET = 24


def _budget(args) -> int:
    env = os.environ.get("REFLGROUPS_BUDGET")
    if args.budget is not None:
        return args.budget
    if env:
        return int(env)
    return DEFAULT_BUDGET


def _coxeter_matrix(args):
    if args.type:
        return coxeter_matrix_of_type(args.type)
    if args.matrix_file:
        with open(args.matrix_file) as fh:
            return parse_coxeter_matrix(fh.read())
    raise SystemExit2("need --type or --matrix-file")


def _group(args):
    if getattr(args, "imprim", None):
        d, e, n = args.imprim
        return ImprimitiveGroup(d, e, n, budget=_budget(args))
    return CoxeterGroup(_coxeter_matrix(args), budget=_budget(args))


class SystemExit2(Exception):
    pass


def _emit(args, payload: dict, text_lines: list[str]):
    if args.json:
        doc = {"command": args.command, "version": __version__,
               "payload": payload}
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- command handlers ---------------------------------------------------------

def cmd_coxeter(args):
    m = _coxeter_matrix(args)
    finite = is_finite(m)
    payload = {"rank": m.rank, "finite": finite,
               "matrix": [[str(v) for v in row] for row in m.entries]}
    lines = [f"rank {m.rank}", f"finite: {finite}"]
    if finite:
        types = classify_finite_type(m)
        payload["type"] = [[t, r] for t, r in types]
        lines.append("type: " + " x ".join(f"{t}{r}" if not t.startswith('I2')
                                           else t for t, r in types))
    _emit(args, payload, lines)


def cmd_roots(args):
    m = _coxeter_matrix(args)
    rs = generate_roots(standard_cartan(m), args.root_limit)
    payload = {"positive_roots": rs.N, "total": 2 * rs.N}
    lines = [f"{2 * rs.N} roots ({rs.N} positive)"]
    if args.list:
        payload["roots"] = [[str(v) for v in r] for r in rs.pos]
        lines += [" ".join(str(v) for v in r) for r in rs.pos]
    _emit(args, payload, lines)


def _word(text: str) -> list[int]:
    return [int(t) for t in text.split()]


def cmd_length(args):
    group = CoxeterGroup(_coxeter_matrix(args), budget=_budget(args))
    w = group.word_to_element(_word(args.word))
    l = group.length(w)
    red = group.reduced_word(w)
    payload = {"length": l, "reduced_word": red}
    _emit(args, payload, [f"length {l}", "reduced word: " +
                          " ".join(map(str, red))])


def cmd_bruhat(args):
    group = CoxeterGroup(_coxeter_matrix(args), budget=_budget(args))
    y = group.word_to_element(_word(args.word_y))
    w = group.word_to_element(_word(args.word_w))
    leq = bruhat_leq(group, y, w)
    _emit(args, {"leq": leq}, [f"y <= w: {leq}"])


def cmd_classes(args):
    group = _group(args)
    classes = conjugacy_classes(group)
    payload = {"count": len(classes),
               "sizes": [c.size for c in classes]}
    lines = [f"{len(classes)} conjugacy classes",
             "sizes: " + " ".join(str(c.size) for c in classes)]
    if all(c.l_min is not None for c in classes):
        payload["l_min"] = [c.l_min for c in classes]
        payload["representatives"] = [
            " ".join(map(str, group.reduced_word(c.representative)))
            for c in classes]
        lines.append("l_min: " + " ".join(str(c.l_min) for c in classes))
    elif hasattr(group, "format_element"):
        payload["representatives"] = [group.format_element(c.representative)
                                      for c in classes]
    _emit(args, payload, lines)


def cmd_descent(args):
    group = CoxeterGroup(_coxeter_matrix(args), budget=_budget(args))
    x = group.word_to_element(_word(args.word))
    path = gp_descent(group, x)
    steps = [{"generator": s,
              "word": " ".join(map(str, group.reduced_word(g)))}
             for g, s in path]
    final = path[-1][0] if path else x
    payload = {"steps": steps,
               "final_word": " ".join(map(str, group.reduced_word(final))),
               "final_length": group.length(final)}
    lines = [f"conjugate by s{s} -> {st['word'] or '(identity)'}"
             for st, (g, s) in zip(steps, path)]
    lines.append(f"minimal length {group.length(final)}")
    _emit(args, payload, lines)


def cmd_group(args):
    d, e, n = args.imprim
    group = ImprimitiveGroup(d, e, n, budget=_budget(args))
    refl = group.reflections()
    payload = {"label": group.name, "order": group.order(),
               "reflections": len(refl),
               "hyperplanes": len(group.hyperplanes()),
               "reducible": group.params.is_reducible,
               "generators": [group.format_element(g)
                              for g in group.generators()]}
    lines = [f"{group.name}: order {group.order()}",
             f"reflections: {len(refl)}  hyperplanes: "
             f"{payload['hyperplanes']}",
             "generators: " + "  ".join(payload["generators"])]
    if args.element:
        g = group.parse_element(args.element)
        payload["element"] = group.format_element(g)
        payload["member"] = group.contains(g)
        lines.append(f"element {payload['element']} member: "
                     f"{payload['member']}")
    _emit(args, payload, lines)


def cmd_degrees(args):
    if args.imprim:
        d, e, n = args.imprim
        dd = degree_data_imprim(d, e, n)
        if args.molien:
            group = ImprimitiveGroup(d, e, n, budget=_budget(args))
            extracted = degrees_from_molien(molien_series(group), n)
            if tuple(extracted) != dd.degrees:
                raise InvariantViolation("Molien degrees differ from the "
                                         "closed form")
    else:
        group = CoxeterGroup(_coxeter_matrix(args), budget=_budget(args))
        dd = degree_data_enumerated(group)
    payload = {"degrees": list(dd.degrees), "codegrees": list(dd.codegrees),
               "exponents": list(dd.exponents),
               "coexponents": list(dd.coexponents),
               "order": dd.order, "N": dd.reflection_count,
               "Nstar": dd.hyperplane_count}
    _emit(args, payload, [" ".join(map(str, dd.degrees))])


def cmd_molien(args):
    group = _group(args)
    p = molien_series(group)
    _emit(args, {"molien": str(p)}, [str(p)])


def cmd_poincare(args):
    if args.imprim:
        d, e, n = args.imprim
        degrees = degree_data_imprim(d, e, n).degrees
    else:
        group = CoxeterGroup(_coxeter_matrix(args), budget=_budget(args))
        degrees = degree_data_enumerated(group).degrees
    p = poincare_polynomial(degrees)
    _emit(args, {"poincare": str(p)}, [str(p)])


def cmd_fakedeg(args):
    d, n = args.dn
    labels = d_partitions(d, n)
    rows = []
    for alpha in labels:
        r = fake_degree_closed(alpha, d)
        rows.append((alpha, r))
    payload = {"entries": [{"label": _label_str(a), "fake_degree": str(r)}
                           for a, r in rows]}
    _emit(args, payload,
          [f"{_label_str(a):24} {r}" for a, r in rows])


def _label_str(alpha) -> str:
    return "|".join("." if not comp else
                    ",".join(map(str, comp)) for comp in alpha)


def cmd_chartable(args):
    d, n = args.dn
    table = char_table(d, n, budget=args.table_budget)
    labels = [_label_str(a) for a in table.labels]
    payload = {"d": d, "n": n, "characters": labels, "classes": labels,
               "class_sizes": list(table.class_sizes),
               "values": [[str(v) for v in row] for row in table.values]}
    lines = ["classes: " + "  ".join(labels),
             "sizes:   " + "  ".join(map(str, table.class_sizes))]
    for lab, row in zip(labels, table.values):
        lines.append(f"{lab:20} " + "  ".join(str(v) for v in row))
    _emit(args, payload, lines)


def cmd_regular(args):
    if args.table_label:
        rec = record(args.table_label)
        from .invariants import DegreeData
        dd = DegreeData(rec.degrees, rec.codegrees)
    elif args.imprim:
        d, e, n = args.imprim
        dd = degree_data_imprim(d, e, n)
    else:
        group = CoxeterGroup(_coxeter_matrix(args), budget=_budget(args))
        dd = degree_data_enumerated(group)
    regs = regular_numbers(dd)
    payload = {"regular_numbers": regs,
               "regular_degrees": [d for d in dd.degrees if d in regs]}
    _emit(args, payload, ["regular numbers: " + " ".join(map(str, regs)),
                          "regular degrees: " +
                          " ".join(map(str, payload["regular_degrees"]))])


def cmd_homfly(args):
    braid = parse_braid(args.braid)
    x = homfly(braid)
    payload = {"strands": braid.strands, "components": braid.components(),
               "homfly_uv": str(x)}
    lines = [f"X(u,v) = {x}", f"components: {braid.components()}"]
    for name, flag in (("jones", args.jones), ("alexander", args.alexander),
                       ("homfly_tx", args.tx)):
        if flag:
            var, val = specialize(x, name)
            payload[name] = {"variable": var, "value": str(val)}
            lines.append(f"{name} [{var}]: {val}")
    if args.fuzz:
        violations = markov_fuzz(braid, moves=args.fuzz)
        payload["markov_violations"] = violations
        lines.append(f"markov fuzz violations: {violations}")
    _emit(args, payload, lines)


def cmd_table(args):
    series, records = load_table()
    if args.label:
        rec = record(args.label)
        payload = {"label": rec.label, "degrees": list(rec.degrees),
                   "codegrees": list(rec.codegrees),
                   "well_generated": rec.well_generated, "field": rec.field,
                   "order": rec.order,
                   "regular_degrees": list(rec.regular_degrees),
                   "coxeter_type": rec.coxeter_type}
        lines = [f"{rec.label}: degrees " +
                 ",".join(map(str, rec.degrees)) +
                 f"; field {rec.field}; order {rec.order}"]
    else:
        payload = {"series": [s.label for s in series],
                   "exceptional": [r.label for r in records]}
        lines = ["series: " + " ".join(payload["series"]),
                 "exceptional: " + " ".join(payload["exceptional"])]
    _emit(args, payload, lines)


def cmd_badprimes(args):
    name, rank = args.type[0], int(args.type[1:])
    bad, torsion = bad_and_torsion_primes(name, rank)
    payload = {"bad": sorted(bad), "torsion": sorted(torsion)}
    _emit(args, payload,
          [f"bad: {' '.join(map(str, sorted(bad))) or 'none'}",
           f"torsion: {' '.join(map(str, sorted(torsion))) or 'none'}"])


# -- parser --------------------------------------------------------------------

def _add_coxeter_source(p, required=False):
    p.add_argument("--type", help="Coxeter type, e.g. A3, B4, H3, I2(7)")
    p.add_argument("--matrix-file", help="file with a Coxeter matrix")


def _add_imprim(p):
    p.add_argument("--imprim", nargs=3, type=int, metavar=("D", "E", "N"),
                   help="parameters of G(de,e,n) as d e n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="reflgroups",
        description="Exact computations with finite reflection groups")
    ap.add_argument("--json", action="store_true",
                    help="emit a JSON payload")
    ap.add_argument("--budget", type=int, default=None,
                    help=f"element budget (default {DEFAULT_BUDGET}; env "
                         f"REFLGROUPS_BUDGET)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coxeter", help="validate and classify a Coxeter matrix")
    _add_coxeter_source(p)
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("roots", help="root system of a finite Coxeter matrix")
    _add_coxeter_source(p)
    p.add_argument("--list", action="store_true")
    p.add_argument("--root-limit", type=int, default=10 ** 4)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("length", help="length and reduced word of a word")
    _add_coxeter_source(p)
    p.add_argument("word", help="0-based generator indices, e.g. '0 1 0'")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("bruhat", help="Bruhat-Chevalley comparison")
    _add_coxeter_source(p)
    p.add_argument("word_y")
    p.add_argument("word_w")
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("classes", help="conjugacy classes")
    _add_coxeter_source(p)
    _add_imprim(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("descent", help="non-increasing conjugation descent")
    _add_coxeter_source(p)
    p.add_argument("word")
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("group", help="data of an imprimitive group G(de,e,n)")
    _add_imprim(p)
    p.add_argument("--element", help='element text, e.g. "(1 2);[1,0]"')
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("degrees", help="degrees and codegrees")
    _add_coxeter_source(p)
    _add_imprim(p)
    p.add_argument("--molien", action="store_true",
                   help="cross-check against the Molien series")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("molien", help="exact Molien series")
    _add_coxeter_source(p)
    _add_imprim(p)
    p.set_defaults(func=cmd_molien)

    p = sub.add_parser("poincare", help="Poincare polynomial")
    _add_coxeter_source(p)
    _add_imprim(p)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("fakedeg", help="closed-form fake degrees of G(d,1,n)")
    p.add_argument("dn", nargs=2, type=int, metavar=("D", "N"))
    p.set_defaults(func=cmd_fakedeg)

    p = sub.add_parser("chartable", help="character table of G(d,1,n)")
    p.add_argument("dn", nargs=2, type=int, metavar=("D", "N"))
    p.add_argument("--table-budget", type=int, default=DEFAULT_TABLE_BUDGET)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("regular", help="regular numbers (divisibility test)")
    _add_coxeter_source(p)
    _add_imprim(p)
    p.add_argument("--table-label", help="use bundled degrees, e.g. G23")
    p.set_defaults(func=cmd_regular)

    p = sub.add_parser("homfly", help="link invariants of a braid closure")
    p.add_argument("braid", help='braid word "n: i j -k"')
    p.add_argument("--jones", action="store_true")
    p.add_argument("--alexander", action="store_true")
    p.add_argument("--tx", action="store_true",
                   help="HOMFLY-PT in (t, x) via u=t^2, v=tx")
    p.add_argument("--fuzz", type=int, default=0, metavar="MOVES",
                   help="verify invariance under random Markov moves")
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("table", help="bundled classification data")
    p.add_argument("label", nargs="?", help="e.g. G23 or H3")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("badprimes", help="bad and torsion primes of a "
                                         "crystallographic type")
    p.add_argument("type", help="e.g. B3, E8, G2, C4")
    p.set_defaults(func=cmd_badprimes)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4
    except (SystemExit2, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
