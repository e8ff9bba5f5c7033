"""Cusps of X_G as double cosets, the Galois action on them, and the genus
of X_G from the coset permutation action."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import core
from .modmat import Mat2
from .subgroups import (
    SubgroupRep,
    contains_minus_I,
    det_full,
    level,
    reduce_group,
    unit_group_gens,
    _factor,
    _gl2_sorted,
)


class HypothesisError(ValueError):
    """The standing hypothesis (-I in G, full determinant) fails."""


@dataclass
class CuspSet:
    n: int
    cosets: list[frozenset]
    reps: list[Mat2]
    rational_mask: list[bool]

    @property
    def count(self) -> int:
        return len(self.cosets)

    @property
    def rational_count(self) -> int:
        return sum(self.rational_mask)


def _working_modulus(g: SubgroupRep) -> int:
    """Smallest modulus that still determines X_G (the level, floored at the
    smallest prime divisor so a matrix modulus exists)."""
    lv = level(g)
    if lv >= 2:
        return lv
    return min(_factor(g.n))


def _check_hypothesis(g: SubgroupRep) -> None:
    if not contains_minus_I(g):
        raise HypothesisError("group does not contain -I")
    if not det_full(g):
        raise HypothesisError("group does not have full determinant")


def _unipotent_gens(n: int) -> list[int]:
    return [
        Mat2(n, 1, 1, 0, 1).packed,
        Mat2.minus_identity(n).packed,
    ]


def cusp_set(g: SubgroupRep) -> CuspSet:
    """Double cosets G \\ GL2(Z/nZ) / U with U = <[[1,1],[0,1]], -I>,
    together with the mask of cusps fixed by the full Galois action."""
    _check_hypothesis(g)
    n = _working_modulus(g)
    red = reduce_group(g, n) if n != g.n else g
    universe = list(_gl2_sorted(n))
    labels = core.orbit_labels(
        universe,
        n,
        [m.packed for m in red.small_gens()],
        _unipotent_gens(n),
    )
    ncusps = max(labels) + 1
    members: list[list[int]] = [[] for _ in range(ncusps)]
    for x, lab in zip(universe, labels):
        members[lab].append(x)
    index = {x: i for i, x in enumerate(universe)}

    def act(a: int) -> list[int]:
        """Cusp permutation induced by zeta_n -> zeta_n^a."""
        da = Mat2(n, 1, 0, 0, a).packed
        out = [0] * ncusps
        for lab in range(ncusps):
            r = members[lab][0]
            out[lab] = labels[index[core.mat_mul(r, da, n)]]
        return out

    rational = [True] * ncusps
    for a in unit_group_gens(n):
        perm = act(a)
        for lab in range(ncusps):
            if perm[lab] != lab:
                rational[lab] = False
    return CuspSet(
        n=n,
        cosets=[frozenset(m) for m in members],
        reps=[Mat2.from_packed(m[0], n) for m in members],
        rational_mask=rational,
    )


def galois_action(cs: CuspSet, a: int) -> list[int]:
    """The permutation of cusp indices induced by a in (Z/nZ)^x."""
    n = cs.n
    index = {}
    for lab, coset in enumerate(cs.cosets):
        for x in coset:
            index[x] = lab
    da = Mat2(n, 1, 0, 0, a).packed
    return [index[core.mat_mul(rep.packed, da, n)] for rep in cs.reps]


def rational_cusp_count(g: SubgroupRep) -> int:
    return cusp_set(g).rational_count


@functools.lru_cache(maxsize=None)
def _sl2_sorted(n: int) -> tuple[int, ...]:
    gens = [Mat2(n, 1, 1, 0, 1).packed, Mat2(n, 1, 0, 1, 1).packed]
    return tuple(core.closure(gens, n))


def genus(g: SubgroupRep) -> int:
    """Genus of X_G via the coset action of +-(G n SL2) on SL2(Z/nZ).

    g = 1 + m/12 - nu2/4 - nu3/3 - nuoo/2 with m the coset-space size, nu2
    and nu3 the fixed cosets of the order-2 and order-3 rotations, and nuoo
    the cusp count.
    """
    _check_hypothesis(g)
    n = _working_modulus(g)
    red = reduce_group(g, n) if n != g.n else g
    sl_part = sorted(x for x in red.elements if core.mat_det(x, n) == 1)
    hs = SubgroupRep(n, (), sl_part)
    universe = list(_sl2_sorted(n))
    labels = core.orbit_labels(
        universe, n, [m.packed for m in hs.small_gens()], []
    )
    ncosets = max(labels) + 1
    index = {x: i for i, x in enumerate(universe)}
    rep_of = [-1] * ncosets
    for i, lab in enumerate(labels):
        if rep_of[lab] == -1:
            rep_of[lab] = i

    def coset_perm(s: Mat2) -> list[int]:
        sp = s.packed
        return [
            labels[index[core.mat_mul(universe[rep_of[lab]], sp, n)]]
            for lab in range(ncosets)
        ]

    perm_s = coset_perm(Mat2(n, 0, -1, 1, 0))
    perm_st = coset_perm(Mat2(n, 0, -1, 1, 1))
    perm_t = coset_perm(Mat2(n, 1, 1, 0, 1))
    nu2 = sum(1 for i, j in enumerate(perm_s) if i == j)
    nu3 = sum(1 for i, j in enumerate(perm_st) if i == j)
    seen = [False] * ncosets
    nuoo = 0
    for start in range(ncosets):
        if seen[start]:
            continue
        nuoo += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm_t[j]
    gg = Fraction(12 + ncosets, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) \
        - Fraction(nuoo, 2)
    if gg.denominator != 1 or gg < 0:
        raise ArithmeticError(
            f"non-integral or negative genus {gg} "
            f"(m={ncosets}, nu2={nu2}, nu3={nu3}, nuoo={nuoo})"
        )
    return int(gg)
