"""Subgroups of GL2(Z/nZ) by generators: closure, order, level, preimages,
conjugacy and stable lines."""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from math import gcd

from . import core
from .modmat import Mat2, ModulusMismatchError, NonInvertibleError, reduce_mod

DEFAULT_CAP = 10**7


def euler_phi(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            out *= p - 1
            m //= p
            while m % p == 0:
                out *= p
                m //= p
        p += 1
    if m > 1:
        out *= m - 1
    return out


def _factor(n: int) -> dict[int, int]:
    f: dict[int, int] = {}
    m, p = n, 2
    while p * p <= m:
        while m % p == 0:
            f[p] = f.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        f[m] = f.get(m, 0) + 1
    return f


def gl2_order(n: int) -> int:
    out = 1
    for p, e in _factor(n).items():
        out *= (p * p - 1) * (p * p - p) * p ** (4 * (e - 1))
    return out


def kernel_order(n: int, m: int) -> int:
    """Order of ker(GL2(Z/nZ) -> GL2(Z/mZ)) for m | n (m = 1 allowed)."""
    if m == 1:
        return gl2_order(n)
    if n % m != 0:
        raise ValueError(f"{m} does not divide {n}")
    return gl2_order(n) // gl2_order(m)


@functools.lru_cache(maxsize=None)
def unit_group_gens(n: int) -> tuple[int, ...]:
    """Deterministic small generating set of (Z/nZ)^x."""
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    target = len(units)
    gens: list[int] = []
    have = {1}
    for u in units:
        if u in have:
            continue
        gens.append(u)
        grown = set(have)
        frontier = [u]
        while frontier:
            x = frontier.pop()
            for h in list(grown):
                y = x * h % n
                if y not in grown:
                    grown.add(y)
                    frontier.append(y)
        have = grown
        if len(have) == target:
            break
    return tuple(gens)


def _crt_lift(mat: Mat2, n: int) -> Mat2:
    """Lift mat to modulus n (mat.n | n), identity at the new prime parts."""
    q = mat.n
    rest = n // q
    while gcd(q, rest) != 1:
        g = gcd(q, rest)
        q *= g
        rest //= g
    # q now carries all primes of mat.n; matrix is I at the coprime part
    entries = []
    for e_q, e_i in zip((mat.a, mat.b, mat.c, mat.d), (1, 0, 0, 1)):
        # CRT: x = e_q mod q, x = e_i mod rest
        if rest == 1:
            entries.append(e_q % n)
            continue
        inv_q = pow(q, -1, rest)
        x = e_q + q * ((e_i - e_q) * inv_q % rest)
        entries.append(x % n)
    return Mat2(n, *entries)


@functools.lru_cache(maxsize=None)
def gl2_gens(n: int) -> tuple[Mat2, ...]:
    gens = [Mat2(n, 1, 1, 0, 1), Mat2(n, 1, 0, 1, 1)]
    gens += [Mat2(n, u, 0, 0, 1) for u in unit_group_gens(n)]
    return tuple(gens)


@functools.lru_cache(maxsize=None)
def borel_gens(n: int) -> tuple[Mat2, ...]:
    gens = [Mat2(n, 1, 1, 0, 1)]
    for u in unit_group_gens(n):
        gens.append(Mat2(n, u, 0, 0, 1))
        gens.append(Mat2(n, 1, 0, 0, u))
    return tuple(gens)


@dataclass(frozen=True, order=True)
class Line:
    """A line in (Z/pZ)^2, normalized so the first nonzero coordinate is 1."""

    p: int
    rep: tuple[int, int]

    @classmethod
    def all_lines(cls, p: int) -> list["Line"]:
        return sorted(
            [cls(p, (0, 1))] + [cls(p, (1, y)) for y in range(p)]
        )


class SubgroupRep:
    """A subgroup of GL2(Z/nZ): generators plus its cached element set."""

    def __init__(self, n: int, gens: tuple[Mat2, ...], elements: list[int]):
        self.n = n
        self.gens = tuple(gens)
        self.elements = tuple(elements)  # sorted packed ints
        self._cache: dict[str, object] = {}

    # -- construction -----------------------------------------------------

    @classmethod
    def generate(cls, gens, n: int, cap: int = DEFAULT_CAP) -> "SubgroupRep":
        mats = tuple(g if isinstance(g, Mat2) else Mat2(n, *g) for g in gens)
        for g in mats:
            if g.n != n:
                raise ModulusMismatchError(f"generator modulus {g.n} != {n}")
            if not g.is_invertible():
                raise NonInvertibleError(f"generator {g} not invertible mod {n}")
        elems = core.closure([g.packed for g in mats], n, cap)
        return cls(n, mats, elems)

    # -- basic invariants --------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def element_set(self) -> frozenset:
        v = self._cache.get("eset")
        if v is None:
            v = frozenset(self.elements)
            self._cache["eset"] = v
        return v

    def __contains__(self, m: Mat2) -> bool:
        if m.n != self.n:
            raise ModulusMismatchError(f"modulus {m.n} vs group modulus {self.n}")
        return m.packed in self.element_set

    def mats(self):
        for x in self.elements:
            yield Mat2.from_packed(x, self.n)

    def fingerprint(self) -> tuple:
        v = self._cache.get("fp")
        if v is None:
            counts = Counter()
            n = self.n
            for x in self.elements:
                a, b, c, d = core.unpack(x, n)
                counts[((a * d - b * c) % n, (a + d) % n)] += 1
            v = (self.order, tuple(sorted(counts.items())))
            self._cache["fp"] = v
        return v

    def small_gens(self) -> tuple[Mat2, ...]:
        """Deterministic small generating set for this group.

        The stored generators are used when present (constructors guarantee
        they generate); otherwise a greedy set is recovered from elements.
        """
        if self.gens and len(self.gens) <= 8:
            return self.gens
        v = self._cache.get("sg")
        if v is not None:
            return v
        n = self.n
        ident = core.pack(1, 0, 0, 1, n)
        chosen: list[int] = []
        if self.order > 1:
            # prefer a 2-generator set: fix a first element of maximal order
            best, best_ord = None, 0
            for x in self.elements:
                o, y = 1, x
                while y != ident:
                    y = core.mat_mul(y, x, n)
                    o += 1
                if o > best_ord:
                    best, best_ord = x, o
            if best_ord == self.order:
                chosen = [best]
            elif self.order <= 4000:
                for y in self.elements:
                    if y == ident or y == best:
                        continue
                    if len(core.closure([best, y], n)) == self.order:
                        chosen = [best, y]
                        break
        if not chosen or len(core.closure(chosen, n)) != self.order:
            if not chosen and self.order > 1:
                chosen = [best]
            have = set(core.closure(chosen, n)) if chosen else {ident}
            for x in self.elements:
                if x in have:
                    continue
                chosen.append(x)
                have = set(core.closure(chosen, n))
                if len(have) == self.order:
                    break
            for g in list(chosen):
                rest = [h for h in chosen if h != g]
                if rest and len(core.closure(rest, n)) == self.order:
                    chosen = rest
        v = tuple(Mat2.from_packed(x, n) for x in chosen)
        self._cache["sg"] = v
        return v

    def conjugated(self, t: Mat2) -> "SubgroupRep":
        """The subgroup t * self * t^-1."""
        n = self.n
        tp = t.packed
        ti = core.mat_inv(tp, n)
        if ti == -1:
            raise NonInvertibleError(f"conjugator {t} not invertible")
        elems = sorted(
            core.mat_mul(core.mat_mul(tp, x, n), ti, n) for x in self.elements
        )
        gens = tuple(
            Mat2.from_packed(
                core.mat_mul(core.mat_mul(tp, g.packed, n), ti, n), n
            )
            for g in self.gens
        )
        return SubgroupRep(n, gens, elems)


@functools.lru_cache(maxsize=None)
def gl2_group(n: int) -> SubgroupRep:
    return SubgroupRep.generate(gl2_gens(n), n)


def closure(gens, n: int, cap: int = DEFAULT_CAP) -> SubgroupRep:
    return SubgroupRep.generate(gens, n, cap)


def index_in_gl2(g: SubgroupRep) -> int:
    return gl2_order(g.n) // g.order


def contains_minus_I(g: SubgroupRep) -> bool:
    return Mat2.minus_identity(g.n) in g


def det_full(g: SubgroupRep) -> bool:
    """det(G) = (Z/nZ)^x; the det image is generated by generator dets."""
    n = g.n
    have = {1}
    frontier = [d for d in (m.det() for m in g.small_gens())]
    for d in frontier:
        if d in have:
            continue
        grown = set(have)
        stack = [d]
        while stack:
            x = stack.pop()
            for h in list(grown):
                y = x * h % n
                if y not in grown:
                    grown.add(y)
                    stack.append(y)
        have = grown
    return len(have) == euler_phi(n)


def reduce_group(g: SubgroupRep, m: int) -> SubgroupRep:
    """Image of g under entrywise reduction to modulus m | n."""
    if m < 2 or g.n % m != 0:
        raise ValueError(f"{m} does not divide {g.n}")
    if m == g.n:
        return g
    elems = sorted({core.pack(*core.unpack(x, g.n), m) for x in g.elements})
    gens = tuple(reduce_mod(x, m) for x in g.gens)
    return SubgroupRep(m, gens, elems)


def level(g: SubgroupRep) -> int:
    """Smallest m | n with g equal to the full preimage of its mod-m image."""
    v = g._cache.get("level")
    if v is not None:
        return v
    n = g.n
    divisors = sorted(d for d in range(1, n + 1) if n % d == 0)
    out = n
    for m in divisors:
        if m == n:
            break
        if m == 1:
            if g.order == gl2_order(n):
                out = 1
                break
            continue
        red = reduce_group(g, m)
        if g.order == red.order * kernel_order(n, m):
            out = m
            break
    g._cache["level"] = out
    return out


def full_preimage(g: SubgroupRep, n2: int) -> SubgroupRep:
    """Preimage of g under GL2(Z/n2Z) -> GL2(Z/nZ), as a subgroup mod n2."""
    n = g.n
    if n2 % n != 0:
        raise ValueError(f"{n} does not divide {n2}")
    if n2 == n:
        return g
    gens = [_crt_lift(m, n2) for m in (g.small_gens() or (Mat2.identity(n),))]
    # modulus splits as shared-prime part times brand-new part
    shared = 1
    for p, e in _factor(n2).items():
        if n % p == 0:
            shared *= p**e
    if shared > n:
        for pos in range(4):
            e = [0, 0, 0, 0]
            e[pos] = n
            gens.append(
                _crt_lift(Mat2(shared, 1 + e[0], e[1], e[2], 1 + e[3]), n2)
            )
    new_part = n2 // shared
    if new_part > 1:
        for gm in gl2_gens(new_part):
            gens.append(_crt_lift(gm, n2))
    return SubgroupRep.generate(gens, n2)


@functools.lru_cache(maxsize=None)
def _gl2_sorted(n: int) -> tuple[int, ...]:
    return tuple(gl2_group(n).elements)


def _coset_reps(h: SubgroupRep) -> tuple[int, ...]:
    """Minimal representatives of the left cosets h\\GL2(Z/nZ)."""
    v = h._cache.get("reps")
    if v is not None:
        return v
    universe = list(_gl2_sorted(h.n))
    labels = core.orbit_labels(
        universe, h.n, [g.packed for g in h.small_gens()], []
    )
    reps: dict[int, int] = {}
    for x, lab in zip(universe, labels):
        if lab not in reps:
            reps[lab] = x
    v = tuple(reps[k] for k in sorted(reps))
    h._cache["reps"] = v
    return v


def is_conjugate_into(g: SubgroupRep, h: SubgroupRep) -> bool:
    """True iff some GL2(Z/nZ)-conjugate of g is a subset of h."""
    if g.n != h.n:
        raise ModulusMismatchError(f"moduli differ: {g.n} vs {h.n}")
    if h.order % g.order != 0:
        return False
    if g.order == h.order and g.fingerprint() != h.fingerprint():
        return False
    gens = [m.packed for m in g.small_gens()]
    hset = h.element_set
    n = g.n
    for t in _coset_reps(h):
        ti = core.mat_inv(t, n)
        if all(
            core.mat_mul(core.mat_mul(t, x, n), ti, n) in hset for x in gens
        ):
            return True
    return False


def is_conjugate(g: SubgroupRep, h: SubgroupRep):
    """First conjugator (canonical matrix order) t with t*g*t^-1 = h, or None."""
    if g.n != h.n:
        raise ModulusMismatchError(f"moduli differ: {g.n} vs {h.n}")
    if g.order != h.order or g.fingerprint() != h.fingerprint():
        return None
    t = core.least_conjugator(
        [m.packed for m in g.small_gens()],
        h.element_set,
        g.n,
        _gl2_sorted(g.n),
    )
    if t == -1:
        return None
    return Mat2.from_packed(t, g.n)


def are_conjugate(g: SubgroupRep, h: SubgroupRep) -> bool:
    """Conjugacy test without the canonical-least scan (coset pruning)."""
    if g.n != h.n:
        raise ModulusMismatchError(f"moduli differ: {g.n} vs {h.n}")
    return g.order == h.order and is_conjugate_into(g, h)


def stable_lines(g: SubgroupRep, p: int) -> list[Line]:
    """Lines of (Z/pZ)^2 preserved by the mod-p reduction of g."""
    if g.n % p != 0:
        raise ValueError(f"{p} does not divide {g.n}")
    red = reduce_group(g, p) if g.n != p else g
    out = []
    gens = red.small_gens()
    for line in Line.all_lines(p):
        ok = True
        for m in gens:
            w = m.apply(line.rep)
            # w must be a multiple of rep: cross product vanishes mod p
            if (w[0] * line.rep[1] - w[1] * line.rep[0]) % p != 0:
                ok = False
                break
        if ok:
            out.append(line)
    return out


def has_fixed_vector(g: SubgroupRep, m: int) -> bool:
    """Some vector of additive order m in (Z/mZ)^2 fixed by every element."""
    if g.n % m != 0:
        raise ValueError(f"{m} does not divide {g.n}")
    red = reduce_group(g, m) if g.n != m else g
    gens = red.small_gens()
    for v0 in range(m):
        for v1 in range(m):
            if gcd(gcd(v0, v1), m) != 1:
                continue  # not of exact order m
            v = (v0, v1)
            if all(mm.apply(v) == v for mm in gens):
                return True
    return False


def stabilizes_cyclic(g: SubgroupRep, m: int) -> bool:
    """True iff g preserves some cyclic subgroup of order m of (Z/mZ)^2.

    For m = p this matches stable_lines being nonempty; m = p^k detects
    admission of a cyclic p^k-isogeny.
    """
    if g.n % m != 0:
        raise ValueError(f"{m} does not divide {g.n}")
    red = reduce_group(g, m) if g.n != m else g
    gens = red.small_gens()
    reps = [(1, y) for y in range(m)]
    p = min(_factor(m))
    reps += [(x, 1) for x in range(0, m, p)]
    for v in reps:
        ok = True
        for mm in gens:
            w = mm.apply(v)
            if v[0] % m and gcd(v[0], m) == 1:
                lam = w[0] * pow(v[0], -1, m) % m
            else:
                lam = w[1] * pow(v[1], -1, m) % m
            if (lam * v[0] % m, lam * v[1] % m) != w:
                ok = False
                break
        if ok:
            return True
    return False


def crt_product(g1: SubgroupRep, g2: SubgroupRep) -> SubgroupRep:
    """The product group {(x, y)} inside GL2(Z/n1*n2) for coprime moduli
    (fiber-product group of the two modular curves)."""
    if gcd(g1.n, g2.n) != 1:
        raise ValueError(f"moduli {g1.n}, {g2.n} are not coprime")
    n = g1.n * g2.n
    gens = [_crt_lift(m, n) for m in g1.small_gens()]
    gens += [_crt_lift(m, n) for m in g2.small_gens()]
    return SubgroupRep.generate(gens, n)


def adjoin_minus_identity(g: SubgroupRep) -> SubgroupRep:
    if contains_minus_I(g):
        return g
    mi = Mat2.minus_identity(g.n).packed
    n = g.n
    extra = {core.mat_mul(mi, x, n) for x in g.elements}
    elems = sorted(set(g.elements) | extra)
    return SubgroupRep(
        n, g.small_gens() + (Mat2.minus_identity(n),), elems
    )
