"""Pure-Python kernels for 2x2 matrix arithmetic over Z/nZ.

Matrices are packed into a single int as ((a*n + b)*n + c)*n + d for the
row-major matrix [[a, b], [c, d]].  Packed order is therefore lexicographic
on (a, b, c, d), which every "first found" rule in the package relies on.

The compiled twin in ``_core.pyx`` exposes the same functions; callers go
through ``gl2images.core`` which picks a backend at import time.
"""

from collections import deque
from math import gcd

BACKEND_NAME = "pure"


def pack(a, b, c, d, n):
    return ((a % n * n + b % n) * n + c % n) * n + d % n


def unpack(x, n):
    x, d = divmod(x, n)
    x, c = divmod(x, n)
    a, b = divmod(x, n)
    return a, b, c, d


def mat_mul(x, y, n):
    xa, xb, xc, xd = unpack(x, n)
    ya, yb, yc, yd = unpack(y, n)
    return (
        ((xa * ya + xb * yc) % n * n + (xa * yb + xb * yd) % n) * n
        + (xc * ya + xd * yc) % n
    ) * n + (xc * yb + xd * yd) % n


def mat_det(x, n):
    a, b, c, d = unpack(x, n)
    return (a * d - b * c) % n


def _inv_unit(u, n):
    # iterative extended gcd; caller guarantees gcd(u, n) == 1
    r0, r1 = n, u % n
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % n


def mat_inv(x, n):
    """Inverse via adjugate; returns -1 if det is not a unit."""
    a, b, c, d = unpack(x, n)
    det = (a * d - b * c) % n
    if gcd(det, n) != 1:
        return -1
    di = _inv_unit(det, n)
    return pack(d * di, -b * di, -c * di, a * di, n)


def closure(gens, n, cap=10**7):
    """Element set generated by ``gens`` (packed ints), as a sorted list.

    Raises ValueError on a non-invertible generator and RuntimeError if the
    group grows past ``cap``.
    """
    ident = pack(1, 0, 0, 1, n)
    step = []
    for g in gens:
        gi = mat_inv(g, n)
        if gi == -1:
            raise ValueError(f"generator {unpack(g, n)} not invertible mod {n}")
        step.append(g)
        step.append(gi)
    step = list(dict.fromkeys(step))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in step:
            y = mat_mul(x, g, n)
            if y not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(f"group order exceeded cap {cap}")
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def least_conjugator(g_gens, h_elems, n, universe):
    """Smallest t in ``universe`` (packed order) with t*g*t^-1 inside h.

    ``h_elems`` must be a set; returns -1 when no conjugator exists.
    """
    hset = h_elems if isinstance(h_elems, (set, frozenset)) else set(h_elems)
    for t in universe:
        ti = mat_inv(t, n)
        ok = True
        for g in g_gens:
            if mat_mul(mat_mul(t, g, n), ti, n) not in hset:
                ok = False
                break
        if ok:
            return t
    return -1


def orbit_labels(elements, n, left_gens, right_gens):
    """Partition ``elements`` (sorted packed list) into orbits of
    x -> l*x and x -> x*r; returns one orbit id per element, ids assigned
    in first-seen order scanning elements in the given order."""
    index = {x: i for i, x in enumerate(elements)}
    labels = [-1] * len(elements)
    lg = []
    for g in left_gens:
        lg.append(g)
        lg.append(mat_inv(g, n))
    rg = []
    for g in right_gens:
        rg.append(g)
        rg.append(mat_inv(g, n))
    next_label = 0
    for start in range(len(elements)):
        if labels[start] != -1:
            continue
        labels[start] = next_label
        queue = deque([elements[start]])
        while queue:
            x = queue.popleft()
            for g in lg:
                y = mat_mul(g, x, n)
                j = index[y]
                if labels[j] == -1:
                    labels[j] = next_label
                    queue.append(y)
            for g in rg:
                y = mat_mul(x, g, n)
                j = index[y]
                if labels[j] == -1:
                    labels[j] = next_label
                    queue.append(y)
        next_label += 1
    return labels


def rightmul_perm(elements, n, s):
    """Permutation of element indices induced by x -> x*s."""
    index = {x: i for i, x in enumerate(elements)}
    return [index[mat_mul(x, s, n)] for x in elements]
