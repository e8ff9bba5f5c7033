from random import Random

import pytest

from gl2images.catalog import (
    CatalogError,
    auxiliary_catalog,
    load_catalog,
)
from gl2images.modmat import Mat2
from gl2images.subgroups import (
    borel_gens,
    closure,
    full_preimage,
    are_conjugate,
)


def test_shipped_catalog_validates(catalog):
    assert len(catalog) == 48
    catalog.validate()  # level, index, determinant digits


def test_every_entry_identifies_itself(catalog):
    for e in catalog.entries:
        assert catalog.identify(e.group()) == e.label


def test_identify_conjugation_invariant(catalog):
    rng = Random(21)
    for label in ("3.4.0.1", "9.24.0.2", "9.72.0.11", "27.36.0.1",
                  "9.27.0.1", "3.6.0.1"):
        g = catalog.group(label)
        for _ in range(3):
            while True:
                t = Mat2(27, rng.randrange(27), rng.randrange(27),
                         rng.randrange(27), rng.randrange(27))
                if t.is_invertible():
                    break
            assert catalog.identify(g.conjugated(t)) == label


def test_identify_borel_preimage(catalog):
    b3 = closure(borel_gens(3), 3)
    assert catalog.identify(full_preimage(b3, 27)) == "3.4.0.1"
    # groups below the storage modulus are lifted before matching
    assert catalog.identify(b3) == "3.4.0.1"


def test_identify_unknown(catalog):
    assert catalog.identify(closure([Mat2.identity(27)], 27)) is None


def test_wrong_level_digit_rejected():
    text = "3.4.0.1; 3; [1,1,0,1] [1,0,1,1] [2,0,0,1]\n"
    cat = load_catalog(text)
    with pytest.raises(CatalogError, match="level"):
        cat.validate()


def test_wrong_index_digit_rejected():
    text = "3.8.0.1; 3; [1,1,0,1] [2,0,0,1] [1,0,0,2]\n"
    cat = load_catalog(text)
    with pytest.raises(CatalogError, match="index"):
        cat.validate()


def test_duplicate_label_rejected():
    text = "3.4.0.1; 3; [1,1,0,1]\n3.4.0.1; 3; [1,1,0,1]\n"
    with pytest.raises(CatalogError, match="duplicate"):
        load_catalog(text)


def test_empty_catalog_is_valid():
    cat = load_catalog("# nothing here\n")
    assert len(cat) == 0
    cat.validate()


def test_format_tolerates_whitespace_and_comments():
    text = "#c\n  9.12.0.1 ;  27;   [1,1,0,1]   [2,0,0,1]  # trailing\n"
    cat = load_catalog(text)
    assert cat.labels() == ["9.12.0.1"]
    assert cat.entries[0].gens == (Mat2(27, 1, 1, 0, 1), Mat2(27, 2, 0, 0, 1))


def test_verify_entry_digits(catalog):
    rep = catalog.verify_entry("3.4.0.1")
    assert (rep.level, rep.index, rep.genus) == (3, 4, 0)
    assert rep.digits_ok and rep.full_det
    assert catalog.verify_entry("9.27.0.1").genus == 0
    big = catalog.verify_entry("27.243.12.1")
    assert (big.level, big.index, big.genus) == (27, 243, 12)


def test_catalog_closed_under_table(catalog, table1_rows):
    labels = set(catalog.by_label)
    for src, dst in table1_rows:
        assert src in labels and dst in labels
    assert len({src for src, _ in table1_rows}) == 39


def test_entries_pairwise_nonconjugate(catalog):
    by_bucket = {}
    for e in catalog.entries:
        by_bucket.setdefault(e.digits[:3], []).append(e)
    for bucket in by_bucket.values():
        for i, a in enumerate(bucket):
            for b in bucket[i + 1:]:
                assert not are_conjugate(a.group(), b.group()), (
                    a.label, b.label
                )


def test_auxiliary_catalog_loads():
    aux = auxiliary_catalog()
    assert "X0(15)" in aux.by_label
    assert aux.group("X0(11)").n == 11


def test_identify_rejects_ambiguous_catalog(catalog):
    # two entries that are conjugate as groups: identification must refuse
    from random import Random

    rng = Random(71)
    e = catalog.by_label["9.12.0.1"]
    while True:
        t = Mat2(27, rng.randrange(27), rng.randrange(27),
                 rng.randrange(27), rng.randrange(27))
        if t.is_invertible():
            break
    twisted = " ".join(str(m) for m in e.group().conjugated(t).small_gens())
    text = (
        f"9.12.0.1; 27; {' '.join(str(m) for m in e.gens)}\n"
        f"9.12.0.9; 27; {twisted}\n"
    )
    corrupt = load_catalog(text)
    with pytest.raises(CatalogError, match="multiple"):
        corrupt.identify(e.group())
