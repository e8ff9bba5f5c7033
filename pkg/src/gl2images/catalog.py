"""Labeled subgroup catalog: loading, validation, identification.

Catalog file format (public contract): line-oriented text,
``label; modulus; [a,b,c,d] [a,b,c,d] ...`` with ``#`` comments; UTF-8;
whitespace-insensitive between tokens.
"""

from __future__ import annotations

import functools
import io
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .modmat import Mat2
from .subgroups import (
    SubgroupRep,
    adjoin_minus_identity,
    closure,
    contains_minus_I,
    det_full,
    full_preimage,
    index_in_gl2,
    is_conjugate_into,
    level,
)
from . import cuspgenus

STORE_MODULUS = 27  # full 3-adic images are determined at this level


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    label: str
    n_stored: int
    gens: tuple[Mat2, ...]
    _group: SubgroupRep | None = field(default=None, repr=False)

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(int(p) for p in self.label.split("."))

    @property
    def level_digit(self) -> int:
        return self.digits[0]

    @property
    def index_digit(self) -> int:
        return self.digits[1]

    @property
    def genus_digit(self) -> int:
        return self.digits[2]

    def group(self) -> SubgroupRep:
        if self._group is None:
            self._group = closure(self.gens, self.n_stored)
        return self._group


@dataclass
class EntryReport:
    label: str
    level: int
    index: int
    genus: int
    has_minus_i: bool
    full_det: bool

    @property
    def digits_ok(self) -> bool:
        want = tuple(int(p) for p in self.label.split("."))[:3]
        return (self.level, self.index, self.genus) == want

    def lines(self) -> list[str]:
        want = tuple(int(p) for p in self.label.split("."))[:3]
        mark = "ok" if self.digits_ok else "MISMATCH"
        return [
            f"{self.label}: level={self.level} index={self.index} "
            f"genus={self.genus} (label says {want}) [{mark}]"
            f" minus_id={'yes' if self.has_minus_i else 'no'}"
            f" full_det={'yes' if self.full_det else 'no'}"
        ]


def _parse_lines(lines, source_name: str):
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = [p.strip() for p in text.split(";")]
        if len(parts) != 3:
            raise CatalogError(
                f"{source_name}:{lineno}: expected 'label; modulus; gens'"
            )
        label, mod_s, gens_s = parts
        try:
            modulus = int(mod_s)
        except ValueError as exc:
            raise CatalogError(f"{source_name}:{lineno}: bad modulus") from exc
        gens = tuple(
            Mat2.parse(tok, modulus) for tok in gens_s.split() if tok
        )
        yield label, modulus, gens


class Catalog:
    """Immutable after load; entries indexed by label."""

    def __init__(self, entries: list[CatalogEntry]):
        self.entries = list(entries)
        self.by_label = {e.label: e for e in self.entries}
        if len(self.by_label) != len(self.entries):
            seen = set()
            for e in self.entries:
                if e.label in seen:
                    raise CatalogError(f"duplicate label {e.label}")
                seen.add(e.label)
        self._ident_cache: dict = {}

    def __len__(self) -> int:
        return len(self.entries)

    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    def group(self, label: str) -> SubgroupRep:
        return self.by_label[label].group()

    # -- validation --------------------------------------------------------

    def validate(self) -> None:
        """Checks every invariant that does not need the genus machinery:
        level and index digits, full determinant.  Raises on violation."""
        for e in self.entries:
            g = e.group()
            if not det_full(g):
                raise CatalogError(f"{e.label}: determinant not full")
            lv = level(g)
            if lv != e.level_digit:
                raise CatalogError(
                    f"{e.label}: computed level {lv} != label digit"
                )
            idx = index_in_gl2(g)
            if idx != e.index_digit:
                raise CatalogError(
                    f"{e.label}: computed index {idx} != label digit"
                )

    def verify_entry(self, label: str) -> EntryReport:
        e = self.by_label[label]
        g = e.group()
        return EntryReport(
            label=label,
            level=level(g),
            index=index_in_gl2(g),
            genus=cuspgenus.genus(adjoin_minus_identity(g)),
            has_minus_i=contains_minus_I(g),
            full_det=det_full(g),
        )

    # -- identification ------------------------------------------------------

    def identify(self, g: SubgroupRep) -> str | None:
        """Label whose entry is GL2(Z/27Z)-conjugate to g, or None.

        g may be given mod 3 or 9 (it is replaced by its full preimage).
        """
        if g.n != STORE_MODULUS:
            if STORE_MODULUS % g.n != 0:
                raise ValueError(f"modulus {g.n} does not divide 27")
            g = full_preimage(g, STORE_MODULUS)
        key = (g.order, g.fingerprint())
        matches = []
        for e in self.entries:
            h = e.group()
            if h.order != g.order or h.fingerprint() != key[1]:
                continue
            if is_conjugate_into(g, h):
                matches.append(e.label)
        if len(matches) > 1:
            raise CatalogError(
                f"multiple conjugate entries {matches}: corrupt catalog"
            )
        return matches[0] if matches else None


def load_catalog(source) -> Catalog:
    """Load from a path, file object, or text."""
    if isinstance(source, (str, Path)) and "\n" not in str(source):
        name = str(source)
        lines = Path(source).read_text(encoding="utf-8").splitlines()
    elif isinstance(source, str):
        name, lines = "<text>", source.splitlines()
    elif isinstance(source, io.IOBase):
        name = getattr(source, "name", "<stream>")
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        lines = data.splitlines()
    else:
        raise TypeError(f"unsupported source {type(source)}")
    entries = [
        CatalogEntry(label, modulus, gens)
        for label, modulus, gens in _parse_lines(lines, name)
    ]
    return Catalog(entries)


def _data_path(name: str) -> Path:
    return Path(str(resources.files("gl2images") / "data" / name))


@functools.lru_cache(maxsize=None)
def shipped_catalog(validated: bool = False) -> Catalog:
    cat = load_catalog(_data_path("catalog_3power.txt"))
    if validated:
        cat.validate()
    return cat


@functools.lru_cache(maxsize=None)
def auxiliary_catalog() -> Catalog:
    """Borel and small auxiliary groups at non-3-power moduli."""
    return load_catalog(_data_path("catalog_aux.txt"))


def load_table1() -> list[tuple[str, str]]:
    rows = []
    for line in _data_path("table1.txt").read_text().splitlines():
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        src, dst = (s.strip() for s in text.split("->"))
        rows.append((src, dst))
    return rows
