"""Torsion criteria and the isogeny-torsion-graph classifier.

Admissible label tuples for a graph type with per-vertex torsion are derived
from four ingredients: candidate sets from the catalog's structure (stable
line counts, cyclic-9 admission), transfer along 3-edges (line-matched
transform outputs), torsion criteria (fixed vectors), and the rational-point
axioms in the fact base.  A separate file of printed tuples serves as the
regression oracle; discrepancies are reported, never silently resolved.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .catalog import Catalog, shipped_catalog
from .subgroups import has_fixed_vector, is_conjugate_into
from .transform import transform_image
from .subgroups import stable_lines

CONDITIONAL_LABEL = "27.243.12.1"  # existence of points is conjectural

ADMISSIBLE_NO3 = {
    (1,), (2,), (4,), (5,), (7,), (8,), (10,), (2, 2), (2, 4), (2, 8),
}
ADMISSIBLE_WITH3 = {
    (1,), (2,), (3,), (4,), (5,), (6,), (9,), (12,), (2, 6), (2, 2),
}


def parse_torsion(text: str) -> tuple[int, ...]:
    """Torsion group token: "1", "6", "2x6", ... -> invariant factors."""
    parts = tuple(int(p) for p in text.lower().split("x"))
    if parts == (1,):
        return (1,)
    if any(p < 1 for p in parts) or len(parts) > 2:
        raise ValueError(f"bad torsion token {text!r}")
    return parts


def torsion_order(t: tuple[int, ...]) -> int:
    out = 1
    for p in t:
        out *= p
    return out


def format_torsion(t: tuple[int, ...]) -> str:
    return "x".join(str(p) for p in t)


@dataclass(frozen=True)
class GraphType:
    name: str
    nvertices: int
    edges: tuple[tuple[int, int, int], ...]  # (i, j, prime)

    def edges_at(self, v: int):
        return [e for e in self.edges if v in (e[0], e[1])]

    def neighbors(self, v: int, prime: int | None = None):
        out = []
        for i, j, p in self.edges:
            if prime is not None and p != prime:
                continue
            if i == v:
                out.append((j, p))
            elif j == v:
                out.append((i, p))
        return out


def _build_graphs() -> dict[str, GraphType]:
    gs = [
        GraphType("L1", 1, ()),
        GraphType("L3(9)", 3, ((0, 1, 3), (1, 2, 3))),
        GraphType("L3(25)", 3, ((0, 1, 5), (1, 2, 5))),
        GraphType("R6", 6, (
            (0, 2, 3), (2, 4, 3), (1, 3, 3), (3, 5, 3),
            (0, 1, 2), (2, 3, 2), (4, 5, 2),
        )),
        GraphType("T4", 4, ((0, 1, 2), (0, 2, 2), (0, 3, 2))),
        GraphType("T6", 6, (
            (0, 1, 2), (0, 2, 2), (0, 3, 2), (3, 4, 2), (3, 5, 2),
        )),
        GraphType("T8", 8, (
            (0, 1, 2), (0, 2, 2), (0, 3, 2), (3, 4, 2), (3, 5, 2),
            (5, 6, 2), (5, 7, 2),
        )),
        GraphType("S", 8, (
            (0, 1, 3), (0, 2, 2), (0, 4, 2), (0, 6, 2),
            (1, 3, 2), (1, 5, 2), (1, 7, 2),
            (2, 3, 3), (4, 5, 3), (6, 7, 3),
        )),
    ]
    for p in (2, 3, 5, 7, 11, 13, 17, 37):
        gs.append(GraphType(f"L2({p})", 2, ((0, 1, p),)))
    for name, p, q in (
        ("R4(6)", 3, 2), ("R4(10)", 2, 5), ("R4(14)", 2, 7),
        ("R4(15)", 3, 5), ("R4(21)", 3, 7),
    ):
        gs.append(GraphType(name, 4, (
            (0, 1, q), (0, 2, p), (1, 3, p), (2, 3, q),
        )))
    return {g.name: g for g in gs}


GRAPHS = _build_graphs()


@dataclass(frozen=True)
class GraphQuery:
    graph: GraphType
    torsion: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, graph_name: str, torsion_csv: str) -> "GraphQuery":
        if graph_name not in GRAPHS:
            raise ValueError(f"unknown graph type {graph_name!r}")
        gt = GRAPHS[graph_name]
        tors = tuple(parse_torsion(t) for t in torsion_csv.split(","))
        if len(tors) != gt.nvertices:
            raise ValueError(
                f"{graph_name} has {gt.nvertices} vertices, "
                f"got {len(tors)} torsion groups"
            )
        for v, t in enumerate(tors):
            allowed = (
                ADMISSIBLE_WITH3 if gt.neighbors(v, 3) else ADMISSIBLE_NO3
            )
            if t not in allowed:
                raise ValueError(
                    f"torsion {format_torsion(t)} not admissible at vertex "
                    f"{v + 1} of {graph_name}"
                )
        return cls(gt, tors)


@dataclass(frozen=True)
class LabelTuple:
    labels: tuple[str, ...]
    flags: tuple[str, ...] = ()

    def __str__(self) -> str:
        body = "(" + ",".join(self.labels) + ")"
        return body + (" [" + "; ".join(self.flags) + "]" if self.flags else "")


@dataclass(frozen=True)
class ExcludeFact:
    subjects: tuple[str, ...]
    features: tuple[str, ...]
    citation: str


@dataclass(frozen=True)
class RestrictFact:
    feature: str
    allowed: tuple[str, ...]
    citation: str


class FactBase:
    def __init__(self, excludes, restricts):
        self.excludes = tuple(excludes)
        self.restricts = tuple(restricts)

    @classmethod
    def load(cls, source) -> "FactBase":
        if isinstance(source, (str, Path)) and "\n" not in str(source):
            lines = Path(source).read_text(encoding="utf-8").splitlines()
        else:
            lines = str(source).splitlines()
        excludes, restricts = [], []
        for lineno, raw in enumerate(lines, 1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            parts = [p.strip() for p in text.split(";")]
            if len(parts) != 4:
                raise ValueError(f"facts line {lineno}: need 4 fields")
            kind, subject, payload, citation = parts
            if not citation:
                raise ValueError(f"facts line {lineno}: citation required")
            if kind == "exclude":
                excludes.append(ExcludeFact(
                    tuple(subject.split()), tuple(payload.split()), citation
                ))
            elif kind == "restrict":
                restricts.append(RestrictFact(
                    subject, tuple(payload.split()), citation
                ))
            else:
                raise ValueError(f"facts line {lineno}: unknown kind {kind}")
        return cls(excludes, restricts)


def _data_path(name: str) -> Path:
    return Path(str(resources.files("gl2images") / "data" / name))


@functools.lru_cache(maxsize=None)
def shipped_facts() -> FactBase:
    return FactBase.load(_data_path("facts.txt"))


def has_rational_point_of_order(g, m: int) -> bool:
    """Torsion criterion: a curve with image g has a rational point of order
    m exactly when the mod-m reduction fixes a vector of that order."""
    return has_fixed_vector(g, m)


def three_torsion_label_set(cat: Catalog) -> set[str]:
    """Labels whose group fixes a vector of order 3 (rational 3-torsion)."""
    return {
        e.label for e in cat.entries if has_rational_point_of_order(e.group(), 3)
    }


def nine_torsion_label_set(cat: Catalog) -> set[str]:
    return {
        e.label for e in cat.entries if has_fixed_vector(e.group(), 9)
    }


class Classifier:
    """Bundles the catalog, the fact base and derived per-label data."""

    def __init__(self, cat: Catalog | None = None,
                 facts: FactBase | None = None):
        self.catalog = cat if cat is not None else shipped_catalog()
        self.facts = facts if facts is not None else shipped_facts()
        self._lineouts: dict[str, tuple[str, ...]] = {}
        self._affected: dict[ExcludeFact, frozenset] = {}
        self._classify_cache: dict[GraphQuery, list] = {}
        self._t3 = None
        self._t9 = None
        self._cyc9 = None

    # -- derived label data -------------------------------------------------

    @property
    def torsion3(self) -> set[str]:
        if self._t3 is None:
            self._t3 = three_torsion_label_set(self.catalog)
        return self._t3

    @property
    def torsion9(self) -> set[str]:
        if self._t9 is None:
            self._t9 = nine_torsion_label_set(self.catalog)
        return self._t9

    @property
    def cyclic9(self) -> set[str]:
        from .subgroups import stabilizes_cyclic

        if self._cyc9 is None:
            self._cyc9 = {
                e.label for e in self.catalog.entries
                if stabilizes_cyclic(e.group(), 9)
            }
        return self._cyc9

    def line_count(self, label: str) -> int:
        return len(stable_lines(self.catalog.group(label), 3))

    def lineouts(self, label: str) -> tuple[str, ...]:
        """Transform output labels, one per stable line (canonical order)."""
        if label not in self._lineouts:
            g = self.catalog.group(label)
            outs = []
            for line in stable_lines(g, 3):
                out = self.catalog.identify(transform_image(g, line))
                outs.append(out if out is not None else "?")
            self._lineouts[label] = tuple(outs)
        return self._lineouts[label]

    def affected_labels(self, fact: ExcludeFact) -> frozenset:
        """Catalog labels conjugate into one of the fact's subject groups."""
        if fact not in self._affected:
            subj = [self.catalog.group(s) for s in fact.subjects]
            hit = set()
            for e in self.catalog.entries:
                g = e.group()
                if any(is_conjugate_into(g, h) for h in subj):
                    hit.add(e.label)
            self._affected[fact] = frozenset(hit)
        return self._affected[fact]

    # -- per-vertex machinery -------------------------------------------------

    @staticmethod
    def _vertex_features(q: GraphQuery, v: int) -> set[str]:
        feats = set()
        t = q.torsion[v]
        order = torsion_order(t)
        for m in (2, 5, 7):
            if order % m == 0:
                feats.add(f"point-{m}")
        if order % 4 == 0:
            feats.add("order4-subgroup")
        if t == (2,):
            feats.add("torsion-exactly-2")
        for _, p in q.graph.neighbors(v):
            feats.add(f"isogeny-{p}")
        # cyclic composite degrees: simple paths of length two
        for w, p1 in q.graph.neighbors(v):
            for u, p2 in q.graph.neighbors(w):
                if u != v:
                    feats.add(f"cyclic-{p1 * p2}")
        return feats

    @staticmethod
    def _has_9_chain(q: GraphQuery, v: int) -> bool:
        for w, p1 in q.graph.neighbors(v, 3):
            for u, p2 in q.graph.neighbors(w, 3):
                if u != v:
                    return True
        return False

    def _vertex_candidates(self, q: GraphQuery, v: int) -> list[str]:
        deg3 = len(q.graph.neighbors(v, 3))
        has9 = self._has_9_chain(q, v)
        feats = self._vertex_features(q, v)
        t = q.torsion[v]
        order = torsion_order(t)
        out = []
        for label in self.catalog.labels():
            if self.line_count(label) != deg3:
                continue
            if (label in self.cyclic9) != has9:
                continue
            if (label in self.torsion3) != (order % 3 == 0):
                continue
            if (label in self.torsion9) != (t == (9,)):
                continue
            excluded = False
            for fact in self.facts.excludes:
                if label not in self.affected_labels(fact):
                    continue
                if any(f in feats for f in fact.features):
                    excluded = True
                    break
            if excluded:
                continue
            allowed = True
            for fact in self.facts.restricts:
                if fact.feature in feats and label not in fact.allowed:
                    allowed = False
                    break
            if allowed:
                out.append(label)
        return out

    # -- classification -------------------------------------------------------

    def classify(self, q: GraphQuery) -> list[LabelTuple]:
        if q in self._classify_cache:
            return list(self._classify_cache[q])
        gt = q.graph
        cand = [self._vertex_candidates(q, v) for v in range(gt.nvertices)]
        if any(not c for c in cand):
            return []
        # visit order: breadth-first so each vertex touches an assigned one
        order = [0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for w, _ in gt.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        order.append(w)
                        nxt.append(w)
            frontier = nxt
        assert len(order) == gt.nvertices, "graph must be connected"

        results: list[tuple[str, ...]] = []
        assignment: dict[int, str] = {}

        def options(v: int) -> list[str]:
            opts = set(cand[v])
            for w, p in gt.neighbors(v):
                if w not in assignment:
                    continue
                if p == 3:
                    opts &= set(self.lineouts(assignment[w]))
                else:
                    opts &= {assignment[w]}
            return sorted(opts)

        def admissible_full(labels: dict[int, str]) -> bool:
            for v in range(gt.nvertices):
                want = Counter(
                    labels[w] for w, _ in gt.neighbors(v, 3)
                )
                have = Counter(self.lineouts(labels[v]))
                if want != have:
                    return False
            return True

        def rec(i: int):
            if i == len(order):
                labels = dict(assignment)
                if admissible_full(labels):
                    results.append(
                        tuple(labels[v] for v in range(gt.nvertices))
                    )
                return
            v = order[i]
            for lab in options(v):
                assignment[v] = lab
                rec(i + 1)
                del assignment[v]

        rec(0)
        # canonicalize under torsion-preserving graph automorphisms
        autos = self._automorphisms(q)
        canon = {}
        for tup in results:
            best = min(tuple(tup[pi[v]] for v in range(len(tup)))
                       for pi in autos)
            canon[best] = best
        out = []
        for tup in sorted(canon):
            flags = ()
            if CONDITIONAL_LABEL in tup:
                flags = ("conditional: existence of non-cuspidal points on "
                         "the genus-12 level-27 curve is an open question",)
            out.append(LabelTuple(tup, flags))
        self._classify_cache[q] = list(out)
        return out

    @staticmethod
    def _automorphisms(q: GraphQuery) -> list[tuple[int, ...]]:
        gt = q.graph
        n = gt.nvertices
        edge_set = {
            (min(i, j), max(i, j), p) for i, j, p in gt.edges
        }
        autos = []
        for pi in itertools.permutations(range(n)):
            if all(q.torsion[pi[v]] == q.torsion[v] for v in range(n)):
                mapped = {
                    (min(pi[i], pi[j]), max(pi[i], pi[j]), p)
                    for i, j, p in gt.edges
                }
                if mapped == edge_set:
                    autos.append(pi)
        return autos

    def graphs_for(self, label: str) -> list[tuple[str, str, bool]]:
        """Graph types (with a witnessing torsion configuration) whose
        admissible tuples mention the label; searches the oracle query space.
        Returns (graph, torsion-csv, conditional-flag) triples."""
        if label not in self.catalog.by_label:
            raise ValueError(f"unknown label {label!r}")
        hits = []
        seen_queries = set()
        for row in load_printed_oracle():
            key = (row.graph, row.torsion)
            if key in seen_queries:
                continue
            seen_queries.add(key)
            q = GraphQuery.make(row.graph, row.torsion)
            for tup in self.classify(q):
                if label in tup.labels:
                    hits.append((row.graph, row.torsion, bool(tup.flags)))
                    break
        return hits


@dataclass
class OracleRow:
    graph: str
    torsion: str
    tuples: tuple[tuple[str, ...], ...]
    citation: str
    flags: tuple[str, ...] = ()


@functools.lru_cache(maxsize=None)
def load_printed_oracle() -> tuple[OracleRow, ...]:
    rows = []
    for lineno, raw in enumerate(
        _data_path("tuples_printed.txt").read_text().splitlines(), 1
    ):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = [p.strip() for p in text.split(";")]
        if len(parts) not in (4, 5):
            raise ValueError(f"tuples line {lineno}: need 4 or 5 fields")
        graph, torsion, tuples_s, citation = parts[:4]
        flags = tuple(parts[4].split()) if len(parts) == 5 else ()
        tups = []
        for tok in tuples_s.split():
            if not (tok.startswith("(") and tok.endswith(")")):
                raise ValueError(f"tuples line {lineno}: bad tuple {tok!r}")
            tups.append(tuple(tok[1:-1].split(",")))
        rows.append(OracleRow(graph, torsion, tuple(tups), citation, flags))
    return tuple(rows)


@dataclass
class OracleComparison:
    row: OracleRow
    derived: tuple[tuple[str, ...], ...]
    printed_canon: tuple[tuple[str, ...], ...]
    missing: tuple[tuple[str, ...], ...]  # printed but not derived
    extra: tuple[tuple[str, ...], ...]  # derived but not printed

    @property
    def exact(self) -> bool:
        return not self.missing and not self.extra

    @property
    def flagged(self) -> bool:
        return "typo-suspect" in self.row.flags

    def lines(self) -> list[str]:
        head = f"{self.row.graph} torsion [{self.row.torsion}]"
        cite = f"[{self.row.citation}]"
        if self.exact:
            return [f"{head}: {len(self.derived)} tuple(s) match {cite}"]
        out = [f"{head}: DISCREPANCY {cite}"
               + (" (flagged as suspected misprint)" if self.flagged else "")]
        for t in self.missing:
            out.append(f"  printed but not derived: ({','.join(t)})")
        for t in self.extra:
            out.append(f"  derived but not printed: ({','.join(t)})")
        return out


def compare_with_oracle(clf: Classifier) -> list[OracleComparison]:
    reports = []
    for row in load_printed_oracle():
        q = GraphQuery.make(row.graph, row.torsion)
        derived = tuple(t.labels for t in clf.classify(q))
        autos = Classifier._automorphisms(q)
        printed = []
        for tup in row.tuples:
            printed.append(min(
                tuple(tup[pi[v]] for v in range(len(tup))) for pi in autos
            ))
        printed = tuple(sorted(set(printed)))
        missing = tuple(t for t in printed if t not in derived)
        extra = tuple(t for t in derived if t not in printed)
        reports.append(OracleComparison(row, derived, printed, missing, extra))
    return reports
