"""Command-line surface: deterministic, citable reports over the library.

Exit codes: 0 success/verified, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .catalog import (
    auxiliary_catalog,
    load_table1,
    shipped_catalog,
)
from .classifier import (
    Classifier,
    GraphQuery,
    GRAPHS,
    compare_with_oracle,
    nine_torsion_label_set,
    three_torsion_label_set,
)
from .cuspgenus import cusp_set, genus
from .lmfdb import (
    CMClassError,
    FixtureMissingError,
    GraphShapeError,
    crosscheck,
    fetch_class,
)
from .modmat import Mat2
from .subgroups import (
    adjoin_minus_identity,
    closure,
    is_conjugate_into,
    level,
    reduce_group,
    stable_lines,
)
from .transform import regenerate_table1, transform_image

TORSION3_CITATION = "lemma-4.9"
TORSION9_CITATION = "lemma-4.10"
CONTAINMENT_CLAIMS = [
    ("3.6.0.1", "3.3.0.1", "cor-4.2"),
    ("9.9.0.1", "3.3.0.1", "cor-4.2"),
    ("9.18.0.1", "3.3.0.1", "cor-4.2"),
    ("9.18.0.2", "9.9.0.1", "cor-4.4"),
    ("9.36.0.7", "9.12.0.2", "cor-4.7"),
    ("9.36.0.8", "9.12.0.2", "cor-4.7"),
    ("9.36.0.9", "9.12.0.2", "cor-4.7"),
    ("3.12.0.1", "3.3.0.1", "lemma-3.12.0.1"),
]
TORSION3_LIST = [
    "3.8.0.1", "3.24.0.1", "9.24.0.1", "9.24.0.2",
    "9.72.0.1", "9.72.0.2", "9.72.0.3", "9.72.0.4", "9.72.0.5",
    "9.72.0.6", "9.72.0.7", "9.72.0.8", "9.72.0.9", "9.72.0.10",
    "27.72.0.1",
]


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _group_from_args(parser, args):
    """Resolve --label (main or auxiliary catalog) or --gens/--mod."""
    if getattr(args, "label", None):
        cat = shipped_catalog()
        if args.label in cat.by_label:
            return args.label, cat.group(args.label)
        aux = auxiliary_catalog()
        if args.label in aux.by_label:
            return args.label, aux.group(args.label)
        parser.error(f"unknown label {args.label!r}")
    if getattr(args, "gens", None):
        if not getattr(args, "mod", None):
            parser.error("--gens requires --mod")
        gens = [
            Mat2.parse(tok, args.mod)
            for tok in args.gens.replace(";", " ").split()
        ]
        return None, closure(gens, args.mod)
    parser.error("need --label or --gens/--mod")


def cmd_identify(parser, args) -> int:
    _, g = _group_from_args(parser, args)
    cat = shipped_catalog()
    label = cat.identify(g)
    _emit(args, {"label": label}, [label if label else "unidentified"])
    return 0 if label else 1


def cmd_level(parser, args) -> int:
    _, g = _group_from_args(parser, args)
    lv = level(g)
    _emit(args, {"level": lv}, [str(lv)])
    return 0


def cmd_genus(parser, args) -> int:
    _, g = _group_from_args(parser, args)
    gg = genus(adjoin_minus_identity(g))
    _emit(args, {"genus": gg}, [str(gg)])
    return 0


def cmd_cusps(parser, args) -> int:
    _, g = _group_from_args(parser, args)
    cs = cusp_set(adjoin_minus_identity(g))
    payload = {
        "modulus": cs.n,
        "cusps": cs.count,
        "rational_cusps": cs.rational_count,
        "sizes": sorted(len(c) for c in cs.cosets),
    }
    _emit(args, payload, [
        f"cusps: {cs.count}",
        f"rational cusps: {cs.rational_count}",
    ])
    return 0


def cmd_transform(parser, args) -> int:
    cat = shipped_catalog()
    if args.label not in cat.by_label:
        parser.error(f"unknown label {args.label!r}")
    g = cat.group(args.label)
    lines = stable_lines(g, 3)
    if not lines:
        print(f"{args.label}: no stable line, no degree-3 isogeny to follow")
        return 1
    if args.line:
        want = tuple(int(x) % 3 for x in args.line.split(","))
        lines = [l for l in lines if l.rep == want]
        if not lines:
            parser.error(f"line {args.line!r} is not stable for {args.label}")
    rows = []
    for line in lines:
        out = cat.identify(transform_image(g, line))
        rows.append({"line": list(line.rep), "output": out})
    _emit(args, {"label": args.label, "outputs": rows}, [
        f"{args.label} line {','.join(map(str, r['line']))} -> "
        f"{r['output'] or 'unidentified'}  [table-1]"
        for r in rows
    ])
    return 0 if all(r["output"] for r in rows) else 1


def cmd_classify(parser, args) -> int:
    try:
        q = GraphQuery.make(args.graph, args.torsion)
    except ValueError as exc:
        parser.error(str(exc))
    clf = Classifier()
    tuples = clf.classify(q)
    payload = {
        "graph": args.graph,
        "torsion": args.torsion,
        "tuples": [
            {"labels": list(t.labels), "flags": list(t.flags)} for t in tuples
        ],
    }
    lines = [str(t) for t in tuples] or ["no admissible tuples"]
    _emit(args, payload, lines)
    return 0 if tuples else 1


def cmd_graphs_for(parser, args) -> int:
    clf = Classifier()
    try:
        hits = clf.graphs_for(args.label)
    except ValueError as exc:
        parser.error(str(exc))
    payload = {"label": args.label, "graphs": [
        {"graph": g, "torsion": t, "conditional": c} for g, t, c in hits
    ]}
    lines = [
        f"{g} torsion [{t}]" + (" [conditional]" if c else "")
        for g, t, c in hits
    ] or ["no graph type admits this label"]
    _emit(args, payload, lines)
    return 0


def cmd_verify_catalog(parser, args) -> int:
    cat = shipped_catalog()
    ok = True
    lines = []
    rows = []
    for label in cat.labels():
        rep = cat.verify_entry(label)
        ok = ok and rep.digits_ok
        lines.extend(rep.lines())
        rows.append(rep.__dict__)
    lines.append(
        f"{sum(1 for r in rows if (r['level'], r['index'], r['genus']) == tuple(int(x) for x in r['label'].split('.')[:3]))}"
        f"/{len(rows)} entries consistent"
    )
    _emit(args, {"entries": rows}, lines)
    return 0 if ok else 1


def cmd_verify_table1(parser, args) -> int:
    cat = shipped_catalog()
    report = regenerate_table1(cat, load_table1())
    lines = []
    for row in report.rows:
        outs = ", ".join(
            f"{','.join(map(str, line.rep))}->{lab or 'unidentified'}"
            for line, lab in sorted(row.line_outputs.items())
        )
        mark = "ok" if row.reproduced else "FAIL"
        lines.append(
            f"{row.source} -> {row.printed_output} [{mark}] lines: {outs}"
            "  [table-1]"
        )
    lines.append(
        f"{report.reproduced}/{report.total} rows reproduced  [table-1]"
    )
    payload = {
        "total": report.total,
        "reproduced": report.reproduced,
        "rows": [
            {
                "source": r.source,
                "printed": r.printed_output,
                "reproduced": r.reproduced,
                "line_outputs": {
                    ",".join(map(str, line.rep)): lab
                    for line, lab in sorted(r.line_outputs.items())
                },
            }
            for r in report.rows
        ],
    }
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def cmd_verify_lemmas(parser, args) -> int:
    cat = shipped_catalog()
    ok = True
    lines = []
    t3 = three_torsion_label_set(cat)
    t3_ok = t3 == set(TORSION3_LIST)
    ok &= t3_ok
    lines.append(
        f"order-3 point criterion: {len(t3)} labels "
        f"{'match the stated list' if t3_ok else 'MISMATCH'} "
        f"[{TORSION3_CITATION}]"
    )
    t9 = nine_torsion_label_set(cat)
    t9_ok = t9 == {"9.72.0.5"}
    ok &= t9_ok
    lines.append(
        f"order-9 point criterion: {sorted(t9)} "
        f"{'== [9.72.0.5]' if t9_ok else 'MISMATCH'} [{TORSION9_CITATION}]"
    )
    for sub, sup, cite in CONTAINMENT_CLAIMS:
        got = is_conjugate_into(cat.group(sub), cat.group(sup))
        ok &= got
        lines.append(
            f"{sub} conjugate into {sup}: {'yes' if got else 'NO'} [{cite}]"
        )
    borel3_ok = True
    for e in cat.entries:
        if e.label == "1.1.0.1":
            continue
        has_line = bool(stable_lines(e.group(), 3))
        in_borel = bool(stable_lines(reduce_group(e.group(), 3), 3))
        if has_line != in_borel:
            borel3_ok = False
    second = [
        e.label for e in cat.entries if stable_lines(e.group(), 3)
    ]
    lines.append(
        f"{len(second)} labels admit a degree-3 isogeny (conjugate into the "
        f"upper-triangular group mod 3) [thm-3.6]"
    )
    ok &= len(second) == 39 and borel3_ok
    _emit(args, {"ok": ok}, lines)
    return 0 if ok else 1


def cmd_verify_tuples(parser, args) -> int:
    clf = Classifier()
    reports = compare_with_oracle(clf)
    lines = []
    hard_fail = False
    for rep in reports:
        lines.extend(rep.lines())
        if not rep.exact and not rep.flagged:
            hard_fail = True
    nexact = sum(1 for r in reports if r.exact)
    lines.append(f"{nexact}/{len(reports)} oracle rows exact; "
                 f"flagged rows report both readings")
    payload = {
        "rows": [
            {
                "graph": r.row.graph,
                "torsion": r.row.torsion,
                "exact": r.exact,
                "flagged": r.flagged,
                "missing": [list(t) for t in r.missing],
                "extra": [list(t) for t in r.extra],
            }
            for r in reports
        ]
    }
    _emit(args, payload, lines)
    return 0 if not hard_fail else 1


def cmd_crosscheck(parser, args) -> int:
    clf = Classifier()
    mode = "offline" if args.offline else "online"
    try:
        rec = fetch_class(
            args.cls,
            mode=mode,
            base_url=args.base_url,
            fixture_dir=args.fixture_dir,
            timeout=args.timeout,
        )
        report = crosscheck(rec, clf)
    except (FixtureMissingError, CMClassError, GraphShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = {
        "class": report.class_label,
        "graph": report.graph,
        "ok": report.ok,
        "vertices": [v.__dict__ for v in report.vertices],
    }
    _emit(args, payload, report.lines())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gl2images",
        description="open subgroups of GL2(Z/NZ): catalogs, cusps, genus, "
        "degree-3 isogeny transforms and graph/torsion classification",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    for name, fn, help_text in [
        ("identify", cmd_identify, "identify a subgroup against the catalog"),
        ("level", cmd_level, "level of a subgroup"),
        ("genus", cmd_genus, "genus of the associated modular curve"),
        ("cusps", cmd_cusps, "cusp count and rational cusp count"),
    ]:
        p = add(name, fn, help=help_text)
        p.add_argument("--label", help="catalog or auxiliary label")
        p.add_argument("--gens", help="generators '[a,b,c,d];[e,f,g,h]'")
        p.add_argument("--mod", type=int, help="modulus for --gens")

    p = add("transform", cmd_transform,
            help="degree-3 isogeny transform of a catalog label")
    p.add_argument("--label", required=True)
    p.add_argument("--line", help="kernel line 'x,y' (default: all lines)")

    p = add("classify", cmd_classify,
            help="admissible label tuples for a graph/torsion query")
    p.add_argument("--graph", required=True, choices=sorted(GRAPHS))
    p.add_argument("--torsion", required=True,
                   help="per-vertex torsion, e.g. 2,2,6,6")

    p = add("graphs-for", cmd_graphs_for,
            help="graph types whose classification mentions a label")
    p.add_argument("--label", required=True)

    add("verify-catalog", cmd_verify_catalog,
        help="recompute level/index/genus digits for every entry")
    add("verify-table1", cmd_verify_table1,
        help="regenerate the transfer table")
    add("verify-lemmas", cmd_verify_lemmas,
        help="torsion criteria and subgroup containments")
    add("verify-tuples", cmd_verify_tuples,
        help="derived classification against the printed oracle")

    p = add("crosscheck", cmd_crosscheck,
            help="check an isogeny class record against the classifier")
    p.add_argument("--class", dest="cls", required=True,
                   help="class label, e.g. 14.a")
    p.add_argument("--offline", action="store_true",
                   help="use bundled fixtures (no network)")
    p.add_argument("--base-url",
                   default=os.environ.get("LMFDB_BASE_URL"),
                   help="API base URL (env LMFDB_BASE_URL)")
    p.add_argument("--fixture-dir",
                   default=os.environ.get("FIXTURE_DIR"),
                   help="fixture directory (env FIXTURE_DIR)")
    p.add_argument("--timeout", type=float, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
