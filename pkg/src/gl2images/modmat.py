"""Exact arithmetic for 2x2 matrices over Z/nZ and modulus-change maps."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import core


class ModulusMismatchError(ValueError):
    pass


class NonInvertibleError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Mat2:
    """Row-major matrix [[a, b], [c, d]] with entries reduced into [0, n).

    Immutable; the dataclass ordering is (n, a, b, c, d), so sorting matrices
    of one modulus is lexicographic on entries ("canonical matrix order").
    """

    n: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not 2 <= self.n < 2**32:
            raise ValueError(f"modulus must be in [2, 2^32), got {self.n}")
        for f in ("a", "b", "c", "d"):
            object.__setattr__(self, f, getattr(self, f) % self.n)

    @classmethod
    def identity(cls, n: int) -> "Mat2":
        return cls(n, 1, 0, 0, 1)

    @classmethod
    def minus_identity(cls, n: int) -> "Mat2":
        return cls(n, -1, 0, 0, -1)

    @classmethod
    def from_packed(cls, x: int, n: int) -> "Mat2":
        return cls(n, *core.unpack(x, n))

    @classmethod
    def parse(cls, text: str, n: int) -> "Mat2":
        """Parse the repo-wide text form ``[a,b,c,d]`` (whitespace tolerated)."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"expected [a,b,c,d], got {text!r}")
        parts = [p.strip() for p in body[1:-1].split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected 4 entries in {text!r}")
        return cls(n, *(int(p) for p in parts))

    @property
    def packed(self) -> int:
        return core.pack(self.a, self.b, self.c, self.d, self.n)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.n

    def trace(self) -> int:
        return (self.a + self.d) % self.n

    def is_invertible(self) -> bool:
        return gcd(self.det(), self.n) == 1

    def __mul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c},{self.d}]"

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (
            (self.a * v[0] + self.b * v[1]) % self.n,
            (self.c * v[0] + self.d * v[1]) % self.n,
        )


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if x.n != y.n:
        raise ModulusMismatchError(f"moduli differ: {x.n} vs {y.n}")
    return Mat2.from_packed(core.mat_mul(x.packed, y.packed, x.n), x.n)


def mat_inv(x: Mat2) -> Mat2:
    p = core.mat_inv(x.packed, x.n)
    if p == -1:
        raise NonInvertibleError(
            f"det {x.det()} shares a factor with modulus {x.n}"
        )
    return Mat2.from_packed(p, x.n)


def reduce_mod(x: Mat2, m: int) -> Mat2:
    """Entrywise reduction to a divisor modulus (the projection map)."""
    if m < 2 or x.n % m != 0:
        raise ValueError(f"{m} does not divide modulus {x.n}")
    return Mat2(m, x.a, x.b, x.c, x.d)


def fiber(x: Mat2, n2: int) -> list[Mat2]:
    """All invertible matrices mod n2 reducing to x; x.n must divide n2."""
    if n2 % x.n != 0:
        raise ValueError(f"{x.n} does not divide {n2}")
    q = n2 // x.n
    out = []
    for ka in range(q):
        for kb in range(q):
            for kc in range(q):
                for kd in range(q):
                    m = Mat2(
                        n2,
                        x.a + ka * x.n,
                        x.b + kb * x.n,
                        x.c + kc * x.n,
                        x.d + kd * x.n,
                    )
                    if m.is_invertible():
                        out.append(m)
    return out
