"""The catalog against classical subgroup constructions.

These are independent anchors: the constructions below are built from
textbook descriptions (Cartan subgroups and their normalizers, Borel
groups, vector stabilizers), not from the shipped generator data.
"""

import itertools

from gl2images.core import mat_mul
from gl2images.modmat import Mat2
from gl2images.subgroups import (
    are_conjugate,
    borel_gens,
    closure,
    full_preimage,
    gl2_order,
    reduce_group,
)


def nonsplit_cartan_normalizer(n):
    """Units of Z[i]/(n) acting on the basis {1, i} (i^2 = -1 stays a
    non-square at every 3-power modulus), extended by conjugation."""
    gens = []
    for a in range(n):
        for b in range(n):
            m = Mat2(n, a, -b, b, a)
            if m.is_invertible():
                gens.append(m)
    gens.append(Mat2(n, 1, 0, 0, -1))
    return closure(gens, n)


def test_nonsplit_normalizer_tower(catalog):
    for n, label in ((3, "3.3.0.1"), (9, "9.27.0.2"), (27, "27.243.12.1")):
        nn = nonsplit_cartan_normalizer(n)
        assert are_conjugate(full_preimage(nn, 27), catalog.group(label))


def test_nonsplit_cartan_itself_not_in_catalog(catalog):
    # the order-8 cyclic (3,6,0) class does not occur as an image
    cns = closure([Mat2(3, 1, -1, 1, 1)], 3)
    assert cns.order == 8
    assert catalog.identify(cns) is None


def test_split_normalizer_is_3_6_0_1(catalog):
    nsp = closure(
        [Mat2(3, 2, 0, 0, 1), Mat2(3, 1, 0, 0, 2), Mat2(3, 0, 1, 1, 0)], 3
    )
    assert nsp.order == 8
    assert catalog.identify(nsp) == "3.6.0.1"


def test_split_cartan_is_3_12_0_1(catalog):
    csp = closure([Mat2(3, 2, 0, 0, 1), Mat2(3, 1, 0, 0, 2)], 3)
    assert catalog.identify(csp) == "3.12.0.1"


def test_vector_stabilizer_is_3_8_0_1(catalog):
    stab = closure([Mat2(3, 1, 1, 0, 1), Mat2(3, 1, 0, 0, 2)], 3)
    assert catalog.identify(stab) == "3.8.0.1"


def test_borel_tower(catalog):
    assert catalog.identify(closure(borel_gens(3), 3)) == "3.4.0.1"
    assert catalog.identify(closure(borel_gens(9), 9)) == "9.12.0.1"
    # the full upper-triangular group mod 27 keeps a cyclic 27-chain, which
    # no catalog group does
    assert catalog.identify(closure(borel_gens(27), 27)) is None


def test_9_27_0_1_surjects_mod_3(catalog):
    red = reduce_group(catalog.group("9.27.0.1"), 3)
    assert red.order == gl2_order(3)
    red2 = reduce_group(catalog.group("9.27.0.2"), 3)
    assert red2.order == 16  # inside the nonsplit normalizer


def test_no_halving_twist_subgroup(catalog):
    # quadratic-twist argument support: 3.6.0.1 admits no index-2 subgroup
    # whose union with its negative recovers the whole group
    h = reduce_group(catalog.group("3.6.0.1"), 3)
    mi = Mat2.minus_identity(3).packed
    full = set(h.elements)
    for combo in itertools.combinations(h.elements, 3):
        sub = closure([Mat2.from_packed(x, 3) for x in combo], 3)
        if sub.order != h.order // 2 or mi in sub.element_set:
            continue
        pm = set(sub.elements) | {mat_mul(mi, x, 3) for x in sub.elements}
        assert pm != full
