"""Isogeny-class records from the LMFDB API or bundled offline fixtures,
cross-checked against the classifier's admissible tuples."""

from __future__ import annotations

import itertools
import json
import os
import urllib.parse
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .classifier import (
    GRAPHS,
    Classifier,
    GraphQuery,
    format_torsion,
)

DEFAULT_BASE_URL = "https://www.lmfdb.org"
DEFAULT_TIMEOUT = 30.0


class FixtureMissingError(FileNotFoundError):
    pass


class CMClassError(ValueError):
    """The record contains CM curves; the classification excludes them."""


class GraphShapeError(ValueError):
    """The isogeny matrix does not match any taxonomy graph."""


@dataclass(frozen=True)
class CurveRecord:
    label: str
    torsion: tuple[int, ...]  # invariant factors, () for trivial
    three_adic_label: str
    cm: int  # 0 for non-CM, else the CM discriminant


@dataclass
class IsogenyClassRecord:
    class_label: str
    curves: list[CurveRecord]
    isogeny_matrix: list[list[int]]

    def validate(self) -> None:
        n = len(self.curves)
        m = self.isogeny_matrix
        if len(m) != n or any(len(row) != n for row in m):
            raise ValueError(
                f"{self.class_label}: matrix size does not match curve count"
            )
        for i in range(n):
            if m[i][i] != 1:
                raise ValueError(f"{self.class_label}: diagonal must be 1")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError(f"{self.class_label}: matrix not symmetric")

    def torsion_token(self, i: int) -> str:
        t = self.curves[i].torsion
        return format_torsion(t if t else (1,))


def default_fixture_dir() -> Path:
    env = os.environ.get("FIXTURE_DIR")
    if env:
        return Path(env)
    return Path(str(resources.files("gl2images") / "data" / "fixtures"))


def _record_from_json(data: dict) -> IsogenyClassRecord:
    curves = [
        CurveRecord(
            label=c["label"],
            torsion=tuple(c.get("torsion", ())),
            three_adic_label=c["three_adic_label"],
            cm=int(c.get("cm", 0)),
        )
        for c in data["curves"]
    ]
    rec = IsogenyClassRecord(
        class_label=data["class_label"],
        curves=curves,
        isogeny_matrix=[list(r) for r in data["isogeny_matrix"]],
    )
    rec.validate()
    return rec


def _well_formed_class_label(label: str) -> bool:
    head, _, tail = label.partition(".")
    return head.isdigit() and tail.isalpha() and bool(tail)


def _fetch_json(url: str, timeout: float) -> dict:
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return json.load(resp)


def _fetch_online(label: str, base_url: str, timeout: float) -> dict:
    """Query the curve and class tables and normalize to the fixture schema."""
    q = urllib.parse.quote(label)
    curves_url = (
        f"{base_url}/api/ec_curvedata/?lmfdb_iso={q}&_format=json"
        "&_fields=lmfdb_label,torsion_structure,elladic_images,cm"
    )
    class_url = (
        f"{base_url}/api/ec_classdata/?lmfdb_iso={q}&_format=json"
        "&_fields=isogeny_matrix"
    )
    curves_data = _fetch_json(curves_url, timeout).get("data", [])
    class_data = _fetch_json(class_url, timeout).get("data", [])
    if not curves_data or not class_data:
        raise ValueError(f"class {label!r} not found upstream")
    curves = []
    for c in sorted(curves_data, key=lambda c: c["lmfdb_label"]):
        three_adic = "1.1.0.1"
        for img in c.get("elladic_images") or []:
            if img.split(".", 1)[0].isdigit() and int(img.split(".")[0]) % 3 == 0:
                three_adic = img
        curves.append({
            "label": c["lmfdb_label"],
            "torsion": c.get("torsion_structure") or [],
            "three_adic_label": three_adic,
            "cm": c.get("cm") or 0,
        })
    return {
        "class_label": label,
        "curves": curves,
        "isogeny_matrix": class_data[0]["isogeny_matrix"],
    }


def fetch_class(
    label: str,
    mode: str = "offline",
    base_url: str | None = None,
    fixture_dir: str | Path | None = None,
    timeout: float | None = None,
) -> IsogenyClassRecord:
    """Fetch one isogeny class.  Offline mode reads the fixture directory;
    online mode queries the API and caches the normalized response."""
    if not _well_formed_class_label(label):
        raise ValueError(f"malformed class label {label!r}")
    fdir = Path(fixture_dir) if fixture_dir else default_fixture_dir()
    path = fdir / f"{label}.json"
    if mode == "offline":
        if not path.exists():
            raise FixtureMissingError(
                f"no fixture for {label!r} in {fdir} (run online mode to cache)"
            )
        return _record_from_json(json.loads(path.read_text()))
    if mode != "online":
        raise ValueError(f"mode must be 'offline' or 'online', got {mode!r}")
    base = base_url or os.environ.get("LMFDB_BASE_URL", DEFAULT_BASE_URL)
    if timeout is not None:
        t = timeout
    else:
        t = float(os.environ.get("LMFDB_TIMEOUT", DEFAULT_TIMEOUT))
    data = _fetch_online(label, base.rstrip("/"), t)
    rec = _record_from_json(data)  # validate before caching
    fdir.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    return rec


# -- graph-shape recovery ----------------------------------------------------


def derive_graph(rec: IsogenyClassRecord):
    """Match the record's prime-degree edges against the taxonomy; returns
    (GraphType, vertex map template-index -> record-index)."""
    n = len(rec.curves)
    edges = set()

    def is_prime(d):
        if d < 2:
            return False
        k = 2
        while k * k <= d:
            if d % k == 0:
                return False
            k += 1
        return True

    for i in range(n):
        for j in range(i + 1, n):
            d = rec.isogeny_matrix[i][j]
            if is_prime(d):
                edges.add((i, j, d))

    matches = []
    for gt in GRAPHS.values():
        if gt.nvertices != n or len(gt.edges) != len(edges):
            continue
        tmpl = {(min(i, j), max(i, j), p) for i, j, p in gt.edges}
        for pi in itertools.permutations(range(n)):
            mapped = {
                (min(pi[i], pi[j]), max(pi[i], pi[j]), p)
                for i, j, p in tmpl
            }
            if mapped == edges:
                matches.append((gt, pi))
                break
    if not matches:
        raise GraphShapeError(
            f"{rec.class_label}: isogeny matrix matches no taxonomy graph"
        )
    if len({gt.name for gt, _ in matches}) > 1:
        raise GraphShapeError(
            f"{rec.class_label}: ambiguous graph type "
            f"{sorted(gt.name for gt, _ in matches)}"
        )
    return matches[0]


@dataclass
class VertexCheck:
    curve_label: str
    torsion: str
    observed: str
    expected: str

    @property
    def ok(self) -> bool:
        return self.observed == self.expected


@dataclass
class CrosscheckReport:
    class_label: str
    graph: str
    vertices: list[VertexCheck]
    matched_tuple: tuple[str, ...] | None

    @property
    def ok(self) -> bool:
        return self.matched_tuple is not None and all(
            v.ok for v in self.vertices
        )

    def lines(self) -> list[str]:
        status = "PASS" if self.ok else "FAIL"
        out = [f"{self.class_label}: graph {self.graph} -> {status}"]
        for v in self.vertices:
            mark = "ok" if v.ok else "MISMATCH"
            out.append(
                f"  {v.curve_label} torsion={v.torsion} "
                f"image={v.observed} admissible={v.expected} [{mark}]"
            )
        return out


def crosscheck(rec: IsogenyClassRecord, clf: Classifier) -> CrosscheckReport:
    """Match the record's per-curve 3-adic labels against some admissible
    tuple for its graph type and torsion configuration."""
    cm = [c.label for c in rec.curves if c.cm]
    if cm:
        raise CMClassError(
            f"{rec.class_label}: CM curves {cm} are outside the "
            "classification; crosscheck applies to non-CM classes only"
        )
    gt, pi = derive_graph(rec)  # pi: template index -> record index
    # all template isomorphisms: compose pi with graph automorphisms later;
    # query torsion lives on template vertices
    torsion_csv = ",".join(rec.torsion_token(pi[v]) for v in range(gt.nvertices))
    q = GraphQuery.make(gt.name, torsion_csv)
    tuples = clf.classify(q)
    autos = Classifier._automorphisms(q)
    observed = tuple(
        rec.curves[pi[v]].three_adic_label for v in range(gt.nvertices)
    )
    best = None
    best_score = -1
    for lt in tuples:
        for a in autos:
            cand = tuple(lt.labels[a[v]] for v in range(gt.nvertices))
            score = sum(1 for x, y in zip(cand, observed) if x == y)
            if score > best_score:
                best, best_score = cand, score
            if score == gt.nvertices:
                break
        if best_score == gt.nvertices:
            break
    vertices = []
    for v in range(gt.nvertices):
        i = pi[v]
        vertices.append(VertexCheck(
            curve_label=rec.curves[i].label,
            torsion=rec.torsion_token(i),
            observed=rec.curves[i].three_adic_label,
            expected=best[v] if best else "-",
        ))
    matched = best if best_score == gt.nvertices else None
    return CrosscheckReport(rec.class_label, gt.name, vertices, matched)
