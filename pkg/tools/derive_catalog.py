#!/usr/bin/env python3
"""Regenerate the shipped 3-power subgroup catalog from scratch.

The published classification gives each group only as a label
(level.index.genus.tiebreak) plus a web of relations: the transfer table,
the torsion criteria, explicit subgroup containments and genus digits.
This script enumerates all conjugacy classes of full-determinant subgroups
of GL2(Z/27Z) in the relevant (level, index) range, computes every invariant
those relations mention, and solves for the unique assignment of labels to
classes consistent with all of them.  Cells the relations provably cannot
distinguish are resolved by a deterministic canonical order and reported.

Output: src/gl2images/data/catalog_3power.txt plus a console report.
Runtime: a few minutes with the compiled core.
"""

from __future__ import annotations

import itertools
import sys
import time
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gl2images import core
from gl2images.modmat import Mat2
from gl2images.subgroups import (
    SubgroupRep,
    adjoin_minus_identity,
    borel_gens,
    closure,
    crt_product,
    det_full,
    full_preimage,
    gl2_group,
    gl2_order,
    has_fixed_vector,
    index_in_gl2,
    is_conjugate_into,
    level,
    reduce_group,
    stable_lines,
    stabilizes_cyclic,
)
from gl2images.cuspgenus import cusp_set, genus
from gl2images.modmat import Mat2 as _M
from gl2images.transform import transform_image

HERE = Path(__file__).resolve().parent
DATA = HERE.parent / "src" / "gl2images" / "data"

FIRST_BULLET = [
    "3.3.0.1", "3.6.0.1", "9.9.0.1", "9.18.0.1", "9.18.0.2",
    "9.27.0.1", "9.27.0.2", "27.243.12.1",
]
SECOND_BULLET = [
    "3.4.0.1", "3.8.0.1", "3.8.0.2", "3.12.0.1", "3.24.0.1",
    "9.12.0.1", "9.12.0.2",
    "9.24.0.1", "9.24.0.2", "9.24.0.3", "9.24.0.4",
] + [f"9.36.0.{i}" for i in range(1, 10)] \
  + [f"9.72.0.{i}" for i in range(1, 17)] \
  + ["27.36.0.1", "27.72.0.1", "27.72.0.2"]

ALL_LABELS = ["1.1.0.1"] + FIRST_BULLET + SECOND_BULLET

TORSION3 = {
    "3.8.0.1", "3.24.0.1", "9.24.0.1", "9.24.0.2",
    "9.72.0.1", "9.72.0.2", "9.72.0.3", "9.72.0.4", "9.72.0.5",
    "9.72.0.6", "9.72.0.7", "9.72.0.8", "9.72.0.9", "9.72.0.10",
    "27.72.0.1",
}  # citation: lemma-4.9
TORSION9 = {"9.72.0.5"}  # citation: lemma-4.10

SUB_OF_9_12_0_1 = {
    "9.12.0.1", "9.24.0.1", "9.24.0.3", "9.36.0.4", "9.72.0.5",
    "9.72.0.11", "9.36.0.5", "9.72.0.6", "9.72.0.12", "9.36.0.6",
    "9.72.0.7", "9.72.0.13", "27.36.0.1", "27.72.0.1", "27.72.0.2",
}  # citation: prop-5.16 proof ("the only subgroups of 9.12.0.1")

CONTAINMENTS = [
    ("3.6.0.1", "3.3.0.1"),    # cor-4.2
    ("9.9.0.1", "3.3.0.1"),    # cor-4.2
    ("9.18.0.1", "3.3.0.1"),   # cor-4.2
    ("9.18.0.2", "9.9.0.1"),   # cor-4.4
    ("9.27.0.2", "3.3.0.1"),   # lemma-4.5 proof
    ("3.12.0.1", "3.3.0.1"),   # lemma-4.6 proof
    ("9.36.0.7", "9.12.0.2"),  # cor-4.7
    ("9.36.0.8", "9.12.0.2"),  # cor-4.7
    ("9.36.0.9", "9.12.0.2"),  # cor-4.7
    ("9.18.0.1", "3.6.0.1"),   # lemma-5.7 proof (map of fiber products)
    ("9.18.0.2", "3.6.0.1"),   # lemma-5.7 proof
]


def parse_label(label: str) -> tuple[int, int, int]:
    parts = label.split(".")
    return int(parts[0]), int(parts[1]), int(parts[2])


def load_table1() -> list[tuple[str, str]]:
    rows = []
    for line in (DATA / "table1.txt").read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        src, dst = (s.strip() for s in line.split("->"))
        rows.append((src, dst))
    return rows


# --------------------------------------------------------------------------
# phase 1: subgroup classes of GL2(F3)
# --------------------------------------------------------------------------

def all_subgroups(n: int) -> list[frozenset]:
    """Every subgroup of GL2(Z/nZ) as a frozenset of packed elements.
    Only sensible for tiny n (used at n = 3, order 48)."""
    universe = gl2_group(n).elements
    subs: set[frozenset] = set()
    frontier: list[frozenset] = []
    for g in universe:
        s = frozenset(core.closure([g], n))
        if s not in subs:
            subs.add(s)
            frontier.append(s)
    while frontier:
        s = frontier.pop()
        gens = list(s)
        for g in universe:
            if g in s:
                continue
            t = frozenset(core.closure(gens + [g], n))
            if t not in subs:
                subs.add(t)
                frontier.append(t)
    return sorted(subs, key=lambda s: (len(s), tuple(sorted(s))))


def conjugacy_classes(groups: list[SubgroupRep]) -> list[SubgroupRep]:
    """Deduplicate up to GL2-conjugacy, keeping the first (canonical order)."""
    buckets: dict[tuple, list[SubgroupRep]] = defaultdict(list)
    out = []
    for g in sorted(groups, key=lambda g: (g.order, g.elements)):
        found = False
        for h in buckets[g.fingerprint()]:
            if is_conjugate_into(g, h):
                found = True
                break
        if not found:
            buckets[g.fingerprint()].append(g)
            out.append(g)
    return out


# --------------------------------------------------------------------------
# phases 2-3: lifting mod q -> mod 3q
# --------------------------------------------------------------------------

def f3_subspaces() -> list[frozenset]:
    """All subspaces of F3^4 as frozensets of packed 4-vectors (base 3)."""
    def add(u, v):
        return tuple((a + b) % 3 for a, b in zip(u, v))

    vectors = list(itertools.product(range(3), repeat=4))
    nonzero = [v for v in vectors if any(v)]

    def span(basis):
        out = {(0, 0, 0, 0)}
        for b in basis:
            cur = list(out)
            for c in (1, 2):
                vb = tuple(x * c % 3 for x in b)
                for u in cur:
                    out.add(add(u, vb))
        return frozenset(out)

    subs = {frozenset([(0, 0, 0, 0)]), frozenset(vectors)}
    for v in nonzero:
        subs.add(span([v]))
    for v, w in itertools.combinations(nonzero, 2):
        s = span([v, w])
        if len(s) == 9:
            subs.add(s)
    # 3-dimensional ones: kernels of nonzero functionals
    for c in nonzero:
        subs.add(frozenset(
            v for v in vectors
            if sum(a * b for a, b in zip(c, v)) % 3 == 0
        ))
    return sorted(subs, key=lambda s: (len(s), tuple(sorted(s))))


def stable_subspaces(h: SubgroupRep, subspaces) -> list[frozenset]:
    """Subspaces of M2(F3) stable under conjugation by h (via mod 3)."""
    red = reduce_group(h, 3) if h.n != 3 else h
    gen3 = [(m.packed, core.mat_inv(m.packed, 3)) for m in red.small_gens()]
    out = []
    for v in subspaces:
        ok = True
        for a in v:
            pa = core.pack(*a, 3)
            for g, gi in gen3:
                im = core.unpack(core.mat_mul(core.mat_mul(g, pa, 3), gi, 3), 3)
                if im not in v:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(v)
    return out


def lift_classes(base: SubgroupRep, vee: frozenset, n2: int) -> list[SubgroupRep]:
    """All subgroups of GL2(Z/n2Z) reducing onto ``base`` (mod q = n2/3)
    with kernel intersection exactly ``vee`` (deduplicated by element set,
    not by conjugacy)."""
    q = base.n
    assert n2 == 3 * q
    want = base.order * len(vee)
    gens_q = base.small_gens()
    lifted = [Mat2(n2, *m.entries()) for m in gens_q]
    vee_gens = []
    seenv = {(0, 0, 0, 0)}
    for a in sorted(vee):
        if a in seenv:
            continue
        vee_gens.append(Mat2(n2, 1 + q * a[0], q * a[1], q * a[2], 1 + q * a[3]))
        # grow the recorded span so we keep the generator list short
        grown = set(seenv)
        stack = [a]
        while stack:
            x = stack.pop()
            for y in list(grown):
                z = tuple((i + j) % 3 for i, j in zip(x, y))
                if z not in grown:
                    grown.add(z)
                    stack.append(z)
        seenv = grown
    # coset representatives of V in K = F3^4
    reps = []
    visited = set()
    for a in itertools.product(range(3), repeat=4):
        if a in visited:
            continue
        coset = {tuple((i + j) % 3 for i, j in zip(a, v)) for v in vee}
        visited |= coset
        reps.append(min(coset))
    rep_mats = [
        Mat2(n2, 1 + q * a[0], q * a[1], q * a[2], 1 + q * a[3]).packed
        for a in reps
    ]
    vee_packed = [m.packed for m in vee_gens]
    out = {}
    for combo in itertools.product(rep_mats, repeat=len(lifted)):
        gens = [
            core.mat_mul(m.packed, k, n2) for m, k in zip(lifted, combo)
        ] + vee_packed
        try:
            elems = core.closure(gens, n2, cap=want)
        except RuntimeError:
            continue
        key = hash(tuple(elems))
        if key not in out:
            mats = tuple(Mat2.from_packed(x, n2) for x in gens)
            out[key] = SubgroupRep(n2, mats, elems)
    return list(out.values())


def enumerate_level(bases: list[SubgroupRep], n2: int,
                    wanted_indexes: set[int], subspaces) -> list[SubgroupRep]:
    """All conjugacy classes mod n2 of exact level n2 whose GL2-index lies in
    wanted_indexes, lifting every base class one level.  Deduplicates up to
    conjugacy incrementally to bound memory."""
    total = gl2_order(n2)
    classes: list[SubgroupRep] = []
    buckets: dict[tuple, list[SubgroupRep]] = defaultdict(list)
    for base in bases:
        # re-derive a small generating set; constructor generator lists of
        # preimages are too long for the lift combinatorics
        base = SubgroupRep(base.n, (), list(base.elements))
        base_index = gl2_order(base.n) // base.order
        stabs = stable_subspaces(base, subspaces)
        for vee in stabs:
            if len(vee) == 81:
                continue  # full preimage: level stays below n2
            idx = base_index * 81 // len(vee)
            if idx not in wanted_indexes or total % idx:
                continue
            for g in sorted(lift_classes(base, vee, n2),
                            key=lambda h: h.elements):
                if not det_full(g):
                    continue
                fp = g.fingerprint()
                if any(is_conjugate_into(g, h) for h in buckets[fp]):
                    continue
                buckets[fp].append(g)
                classes.append(g)
    classes.sort(key=lambda g: (g.order, g.elements))
    return classes


# --------------------------------------------------------------------------
# class invariants and the constraint solver
# --------------------------------------------------------------------------

class ClassInfo:
    def __init__(self, cid: int, rep: SubgroupRep):
        self.cid = cid
        self.rep = rep  # at its own modulus
        self.at27 = rep if rep.n == 27 else full_preimage(rep, 27)
        self.level = level(self.at27)
        self.index = index_in_gl2(self.at27)
        self.genus = genus(adjoin_minus_identity(self.at27))
        self.minus_i = Mat2.minus_identity(27) in self.at27
        self.t3 = has_fixed_vector(self.at27, 3)
        self.t9 = has_fixed_vector(self.at27, 9)
        self.lines = stable_lines(self.at27, 3)
        self.cyc9 = stabilizes_cyclic(self.at27, 9)
        self.cyc27 = stabilizes_cyclic(self.at27, 27)
        self.line_out: dict = {}  # Line -> cid or None

    @property
    def bucket(self):
        return (self.level, self.index, self.genus)

    def canon_key(self):
        return (self.level, self.index, self.genus, self.rep.elements)


def main() -> int:
    t0 = time.time()
    subspaces = f3_subspaces()
    print(f"[{time.time()-t0:6.1f}s] F3^4 subspaces: {len(subspaces)}")

    # ---- phase 1
    subs3 = all_subgroups(3)
    groups3 = []
    for s in subs3:
        rep = SubgroupRep(3, (), sorted(s))
        rep.small_gens()
        groups3.append(rep)
    groups3 = [g for g in groups3 if det_full(g)]
    classes3 = conjugacy_classes(groups3)
    print(f"[{time.time()-t0:6.1f}s] mod-3 subgroups {len(subs3)}, "
          f"full-det classes {len(classes3)}")

    # ---- phase 2 (level 9) and preimages for bases
    idx9 = {3, 9, 12, 18, 24, 27, 36, 72, 81}
    classes9 = enumerate_level(classes3, 9, idx9, subspaces)
    print(f"[{time.time()-t0:6.1f}s] level-9 classes in index scope: "
          f"{len(classes9)}")
    bases9 = list(classes9)
    for g in classes3:
        i3 = 48 // g.order
        if i3 in {3, 4, 8, 9, 12, 24, 27, 81}:
            bases9.append(full_preimage(g, 9))

    # ---- phase 3 (level 27)
    idx27 = {36, 72, 243}
    bases = [
        b for b in bases9
        if gl2_order(9) // b.order in {3, 4, 8, 9, 12, 24, 27, 81}
    ]
    classes27 = enumerate_level(bases, 27, idx27, subspaces)
    print(f"[{time.time()-t0:6.1f}s] level-27 classes in index scope: "
          f"{len(classes27)}")

    # ---- assemble class infos
    infos: list[ClassInfo] = []
    full = gl2_group(27)
    classes3_proper = [g for g in classes3 if g.order < 48]
    for rep in [full] + classes3_proper + classes9 + classes27:
        infos.append(ClassInfo(len(infos), rep))
    infos_by_bucket: dict[tuple, list[ClassInfo]] = defaultdict(list)
    for ci in infos:
        infos_by_bucket[ci.bucket].append(ci)
    for b in infos_by_bucket.values():
        b.sort(key=lambda c: c.canon_key())
    print(f"[{time.time()-t0:6.1f}s] classes with invariants: {len(infos)}")
    for b in sorted(infos_by_bucket):
        lv, ix, gn = b
        labels_here = [
            lab for lab in ALL_LABELS if parse_label(lab) == b
        ]
        if labels_here:
            print(f"  bucket {b}: {len(infos_by_bucket[b])} classes "
                  f"for {len(labels_here)} labels")

    # ---- transform line-outputs between classes
    def identify_class(g: SubgroupRep):
        fp = g.fingerprint()
        for ci in infos:
            if ci.at27.order == g.order and ci.at27.fingerprint() == fp \
                    and is_conjugate_into(g, ci.at27):
                return ci.cid
        return None

    for ci in infos:
        if ci.bucket == (1, 1, 0) or not ci.lines:
            continue
        for line in ci.lines:
            out = transform_image(ci.at27, line)
            ci.line_out[line] = identify_class(out)
    print(f"[{time.time()-t0:6.1f}s] transform relation computed")

    conj_cache: dict[tuple[int, int], bool] = {}

    def contained(a: ClassInfo, b: ClassInfo) -> bool:
        key = (a.cid, b.cid)
        if key not in conj_cache:
            conj_cache[key] = is_conjugate_into(a.at27, b.at27)
        return conj_cache[key]

    # ---- solve
    second = set(SECOND_BULLET)
    first = set(FIRST_BULLET)
    table_rows = load_table1()
    b9 = full_preimage(closure(borel_gens(9), 9), 27)
    borel9_cid = identify_class(b9)
    print(f"classes: borel(9) lifted = class {borel9_cid}")

    # fiber-product facts pin the cells the group relations leave open:
    # the X0(5) fiber of 3.6.0.1 has four rational cusps (lemma-5.7 proof)
    # and the X0(2) fiber of 9.18.0.1 has genus 1 (its defining lemma).
    borel2 = closure(borel_gens(2), 2)
    borel5 = closure(borel_gens(5), 5)
    fiber_cache: dict[tuple, tuple] = {}

    def fiber_stats(ci: ClassInfo, aux: SubgroupRep) -> tuple[int, int]:
        key = (ci.cid, aux.n)
        if key not in fiber_cache:
            red = adjoin_minus_identity(
                reduce_group(ci.at27, max(ci.level, 3))
            )
            fib = crt_product(red, aux)
            fiber_cache[key] = (genus(fib), cusp_set(fib).rational_count)
        return fiber_cache[key]

    def fiber_ok(lab: str, ci: ClassInfo) -> bool:
        if lab == "3.6.0.1":
            return fiber_stats(ci, borel5)[1] == 4
        if lab == "9.18.0.1":
            return fiber_stats(ci, borel2)[0] == 1
        return True

    def unary_ok(lab: str, ci: ClassInfo) -> bool:
        if parse_label(lab) != ci.bucket:
            return False
        if (lab in TORSION3) != ci.t3:
            return False
        if (lab in TORSION9) != ci.t9:
            return False
        if lab == "1.1.0.1":
            return ci.bucket == (1, 1, 0)
        if (lab in second) != bool(ci.lines):
            return False
        if lab in second and (lab in SUB_OF_9_12_0_1) != ci.cyc9:
            return False
        if not fiber_ok(lab, ci):
            return False
        return True

    candidates = {
        lab: sorted(
            (ci for ci in infos if unary_ok(lab, ci)),
            key=lambda c: c.canon_key(),
        )
        for lab in ALL_LABELS
    }
    for lab in ALL_LABELS:
        if not candidates[lab]:
            print(f"!! no candidate classes for {lab}")
            return 1

    order_labels = sorted(
        ALL_LABELS, key=lambda lab: (len(candidates[lab]), lab)
    )
    solutions = []
    assign: dict[str, ClassInfo] = {}
    used: set[int] = set()

    def consistent(lab: str, ci: ClassInfo) -> bool:
        for sub, sup in CONTAINMENTS:
            if sub == lab and sup in assign and not contained(ci, assign[sup]):
                return False
            if sup == lab and sub in assign and not contained(assign[sub], ci):
                return False
        for src, dst in table_rows:
            if src == lab and dst in assign:
                if assign[dst].cid not in ci.line_out.values():
                    return False
            if dst == lab and src in assign:
                if ci.cid not in assign[src].line_out.values():
                    return False
        # exactness of the subgroup list of 9.12.0.1
        if "9.12.0.1" in assign or lab == "9.12.0.1":
            ref = ci if lab == "9.12.0.1" else assign["9.12.0.1"]
            for other_lab, other_ci in assign.items():
                if other_lab in second and other_lab != lab:
                    want = other_lab in SUB_OF_9_12_0_1
                    if contained(other_ci, ref) != want:
                        return False
            if lab != "9.12.0.1" and lab in second:
                want = lab in SUB_OF_9_12_0_1
                if contained(ci, assign["9.12.0.1"]) != want:
                    return False
        # first bullet: inside 3.3.0.1 or 9.27.0.1
        if lab in first and "3.3.0.1" in assign and "9.27.0.1" in assign:
            if not (contained(ci, assign["3.3.0.1"])
                    or contained(ci, assign["9.27.0.1"])):
                return False
        return True

    def validate_full(sol: dict) -> bool:
        for src, dst in table_rows:
            if sol[dst].cid not in sol[src].line_out.values():
                return False
        for sub, sup in CONTAINMENTS:
            if not contained(sol[sub], sol[sup]):
                return False
        ref = sol["9.12.0.1"]
        for lab in SECOND_BULLET:
            if contained(sol[lab], ref) != (lab in SUB_OF_9_12_0_1):
                return False
        for lab in FIRST_BULLET:
            if not (contained(sol[lab], sol["3.3.0.1"])
                    or contained(sol[lab], sol["9.27.0.1"])):
                return False
        return True

    def backtrack(i: int):
        if len(solutions) >= 4096:
            return
        if i == len(order_labels):
            sol = dict(assign)
            if validate_full(sol):
                solutions.append(sol)
            return
        lab = order_labels[i]
        for ci in candidates[lab]:
            if ci.cid in used:
                continue
            if not consistent(lab, ci):
                continue
            assign[lab] = ci
            used.add(ci.cid)
            backtrack(i + 1)
            del assign[lab]
            used.discard(ci.cid)

    backtrack(0)
    print(f"[{time.time()-t0:6.1f}s] solutions found: {len(solutions)}")
    if not solutions:
        return 1

    # report ambiguity: labels whose class differs across solutions
    moving = sorted(
        lab for lab in ALL_LABELS
        if len({sol[lab].cid for sol in solutions}) > 1
    )
    if moving:
        print("labels not pinned by the published relations "
              "(canonical choice applied):")
        for lab in moving:
            cids = sorted({sol[lab].cid for sol in solutions})
            print(f"  {lab}: classes {cids}")

    # canonical solution: minimize the tuple of class canon keys in label order
    solutions.sort(
        key=lambda sol: tuple(sol[lab].canon_key() for lab in ALL_LABELS)
    )
    chosen = solutions[0]

    # borel(9) must be 9.12.0.1
    if chosen["9.12.0.1"].cid != borel9_cid:
        print("!! 9.12.0.1 is not the borel(9) class; check constraints")
        return 1

    # final validation sweep against the full relation list
    bad = 0
    for src, dst in table_rows:
        if chosen[dst].cid not in chosen[src].line_out.values():
            print(f"!! table row {src} -> {dst} not realized")
            bad += 1
    for sub, sup in CONTAINMENTS:
        if not contained(chosen[sub], chosen[sup]):
            print(f"!! containment {sub} < {sup} fails")
            bad += 1

    # fiber-product genus facts stated in the source lemmas
    x2 = closure([Mat2.identity(2)], 2)
    x1pm5 = closure(
        [_M(5, -1, 0, 0, 1), _M(5, 1, 1, 0, 1), _M(5, 1, 0, 0, 2)], 5
    )
    aux = {
        "X(2)": x2, "X0(2)": borel2, "X0(5)": borel5,
        "X0(4)": closure(borel_gens(4), 4),
        "X0(7)": closure(borel_gens(7), 7),
        "X0(10)": closure(borel_gens(10), 10),
        "X0(13)": closure(borel_gens(13), 13),
        "X1pm(5)": x1pm5,
    }
    genus_facts = [
        ("3.3.0.1", "X(2)", 1, "lemma-4.1"),
        ("3.3.0.1", "X0(4)", 1, "lemma-4.1"),
        ("3.3.0.1", "X1pm(5)", 2, "lemma-4.1"),
        ("3.3.0.1", "X0(7)", 2, "lemma-4.1"),
        ("3.3.0.1", "X0(13)", 2, "lemma-5.10"),
        ("3.3.0.1", "X0(10)", 2, "prop-R4(10)"),
        ("3.6.0.1", "X0(5)", 1, "lemma-5.7"),
        ("9.9.0.1", "X0(2)", 1, "lemma-9.9.0.1-X0(2)"),
        ("9.18.0.1", "X0(2)", 1, "lemma-9.18.0.1-X0(2)"),
        ("9.12.0.2", "X0(2)", 2, "lemma-9.12.0.2-order2"),
    ] + [
        (lab, "X0(2)", 2, "lemma-9.36-X0(2)")
        for lab in ["27.36.0.1"] + [f"9.36.0.{i}" for i in range(1, 7)]
    ]
    for lab, aux_name, want, cite in genus_facts:
        got = fiber_stats(chosen[lab], aux[aux_name])[0]
        mark = "ok" if got == want else "FAIL"
        if got != want:
            bad += 1
        print(f"  fiber {lab} x {aux_name}: genus {got} (want {want}) "
              f"[{cite}] {mark}")
    if bad:
        return 1

    # ---- write the catalog
    lines_out = [
        "# RSZB-style labeled subgroups of GL2(Z/27Z): label; modulus; generators",
        "# Regenerated by tools/derive_catalog.py; every computable digit and",
        "# relation is validated by the test suite.",
    ]
    for lab in ALL_LABELS:
        ci = chosen[lab]
        gens = " ".join(str(m) for m in ci.at27.small_gens())
        lines_out.append(f"{lab}; 27; {gens}")
    (DATA / "catalog_3power.txt").write_text("\n".join(lines_out) + "\n")
    print(f"[{time.time()-t0:6.1f}s] wrote {DATA / 'catalog_3power.txt'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
