# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for 2x2 matrix arithmetic over Z/nZ.

Same packed-int representation and call surface as ``_purecore``; see that
module for the contract.  Hot paths (group closure, conjugator scans, orbit
partitioning) run over C arrays with a flat seen-table of size n**4.
"""

from libc.stdlib cimport malloc, free

BACKEND_NAME = "compiled"


cdef inline long long c_pack(long long a, long long b, long long c, long long d,
                             long long n) nogil:
    return ((a % n * n + b % n) * n + c % n) * n + d % n


cdef inline void c_unpack(long long x, long long n, long long *o) nogil:
    o[3] = x % n; x //= n
    o[2] = x % n; x //= n
    o[1] = x % n
    o[0] = x // n


cdef inline long long c_mul(long long x, long long y, long long n) nogil:
    cdef long long xm[4]
    cdef long long ym[4]
    c_unpack(x, n, xm)
    c_unpack(y, n, ym)
    return ((((xm[0] * ym[0] + xm[1] * ym[2]) % n) * n
             + (xm[0] * ym[1] + xm[1] * ym[3]) % n) * n
            + (xm[2] * ym[0] + xm[3] * ym[2]) % n) * n \
        + (xm[2] * ym[1] + xm[3] * ym[3]) % n


cdef long long c_gcd(long long a, long long b) nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long c_inv_unit(long long u, long long n) nogil:
    cdef long long r0 = n, r1 = u % n, s0 = 0, s1 = 1, q, t
    while r1:
        q = r0 / r1
        t = r0 - q * r1; r0 = r1; r1 = t
        t = s0 - q * s1; s0 = s1; s1 = t
    return s0 % n if s0 % n >= 0 else s0 % n + n


cdef long long c_inv(long long x, long long n) nogil:
    cdef long long m[4]
    cdef long long det, di
    c_unpack(x, n, m)
    det = (m[0] * m[3] - m[1] * m[2]) % n
    if det < 0:
        det += n
    if c_gcd(det, n) != 1:
        return -1
    di = c_inv_unit(det, n)
    return c_pack(m[3] * di, -m[1] * di % n + n, -m[2] * di % n + n, m[0] * di, n)


def pack(a, b, c, d, n):
    return c_pack(a % n, b % n, c % n, d % n, n)


def unpack(x, n):
    cdef long long o[4]
    c_unpack(x, n, o)
    return o[0], o[1], o[2], o[3]


def mat_mul(x, y, n):
    return c_mul(x, y, n)


def mat_det(x, n):
    cdef long long m[4]
    cdef long long nn = n
    c_unpack(x, nn, m)
    cdef long long det = (m[0] * m[3] - m[1] * m[2]) % nn
    return det + nn if det < 0 else det


def mat_inv(x, n):
    return c_inv(x, n)


def closure(gens, n, cap=10**7):
    cdef long long nn = n
    cdef long long space = nn * nn * nn * nn
    cdef long long capc = cap
    cdef unsigned char *seen = <unsigned char *> malloc(space)
    cdef long long *queue = NULL
    cdef long long *step = NULL
    cdef long long head = 0, count = 0, x, y, gi
    cdef Py_ssize_t i, nstep = 0
    if seen == NULL:
        raise MemoryError()
    try:
        for i in range(space):
            seen[i] = 0
        uniq = []
        present = set()
        for g in gens:
            gi = c_inv(g, nn)
            if gi == -1:
                raise ValueError(f"generator {unpack(g, n)} not invertible mod {n}")
            if g not in present:
                present.add(g)
                uniq.append(g)
            if gi not in present:
                present.add(gi)
                uniq.append(gi)
        nstep = len(uniq)
        step = <long long *> malloc((nstep if nstep else 1) * sizeof(long long))
        queue = <long long *> malloc(space * sizeof(long long))
        if step == NULL or queue == NULL:
            raise MemoryError()
        for i in range(nstep):
            step[i] = uniq[i]
        x = c_pack(1, 0, 0, 1, nn)
        seen[x] = 1
        queue[0] = x
        count = 1
        while head < count:
            x = queue[head]
            head += 1
            for i in range(nstep):
                y = c_mul(x, step[i], nn)
                if not seen[y]:
                    if count >= capc:
                        raise RuntimeError(f"group order exceeded cap {cap}")
                    seen[y] = 1
                    queue[count] = y
                    count += 1
        out = [0] * count
        count = 0
        for x in range(space):
            if seen[x]:
                out[count] = x
                count += 1
        return out
    finally:
        if seen != NULL:
            free(seen)
        if queue != NULL:
            free(queue)
        if step != NULL:
            free(step)


def least_conjugator(g_gens, h_elems, n, universe):
    cdef long long nn = n
    cdef long long space = nn * nn * nn * nn
    cdef unsigned char *hset = <unsigned char *> malloc(space)
    cdef long long *gg = NULL
    cdef long long t, ti, x
    cdef Py_ssize_t i, j, ng
    cdef bint ok
    if hset == NULL:
        raise MemoryError()
    try:
        for i in range(space):
            hset[i] = 0
        for e in h_elems:
            hset[<long long> e] = 1
        ng = len(g_gens)
        gg = <long long *> malloc((ng if ng else 1) * sizeof(long long))
        if gg == NULL:
            raise MemoryError()
        for i in range(ng):
            gg[i] = g_gens[i]
        for cand in universe:
            t = cand
            ti = c_inv(t, nn)
            ok = True
            for i in range(ng):
                x = c_mul(c_mul(t, gg[i], nn), ti, nn)
                if not hset[x]:
                    ok = False
                    break
            if ok:
                return t
        return -1
    finally:
        free(hset)
        if gg != NULL:
            free(gg)


def orbit_labels(elements, n, left_gens, right_gens):
    cdef long long nn = n
    cdef long long space = nn * nn * nn * nn
    cdef Py_ssize_t m = len(elements), i, k, nl, nr
    cdef long long *elems = <long long *> malloc(m * sizeof(long long))
    cdef long long *index = <long long *> malloc(space * sizeof(long long))
    cdef long long *labels = <long long *> malloc(m * sizeof(long long))
    cdef long long *queue = <long long *> malloc(m * sizeof(long long))
    cdef long long *lg = NULL
    cdef long long *rg = NULL
    cdef long long x, y, head, count, lab
    cdef Py_ssize_t j
    if elems == NULL or index == NULL or labels == NULL or queue == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            elems[i] = elements[i]
            labels[i] = -1
        for x in range(space):
            index[x] = -1
        for i in range(m):
            index[elems[i]] = i
        lpy = []
        for g in left_gens:
            lpy.append(g)
            lpy.append(c_inv(g, nn))
        rpy = []
        for g in right_gens:
            rpy.append(g)
            rpy.append(c_inv(g, nn))
        nl = len(lpy)
        nr = len(rpy)
        lg = <long long *> malloc((nl if nl else 1) * sizeof(long long))
        rg = <long long *> malloc((nr if nr else 1) * sizeof(long long))
        if lg == NULL or rg == NULL:
            raise MemoryError()
        for i in range(nl):
            lg[i] = lpy[i]
        for i in range(nr):
            rg[i] = rpy[i]
        lab = 0
        for i in range(m):
            if labels[i] != -1:
                continue
            labels[i] = lab
            queue[0] = elems[i]
            head = 0
            count = 1
            while head < count:
                x = queue[head]
                head += 1
                for k in range(nl):
                    y = c_mul(lg[k], x, nn)
                    j = index[y]
                    if labels[j] == -1:
                        labels[j] = lab
                        queue[count] = y
                        count += 1
                for k in range(nr):
                    y = c_mul(x, rg[k], nn)
                    j = index[y]
                    if labels[j] == -1:
                        labels[j] = lab
                        queue[count] = y
                        count += 1
            lab += 1
        return [labels[i] for i in range(m)]
    finally:
        free(elems)
        free(index)
        free(labels)
        free(queue)
        if lg != NULL:
            free(lg)
        if rg != NULL:
            free(rg)


def rightmul_perm(elements, n, s):
    cdef long long nn = n
    cdef long long space = nn * nn * nn * nn
    cdef Py_ssize_t m = len(elements), i
    cdef long long *index = <long long *> malloc(space * sizeof(long long))
    cdef long long ss = s
    if index == NULL:
        raise MemoryError()
    try:
        for x in range(space):
            index[x] = -1
        for i in range(m):
            index[<long long> elements[i]] = i
        return [index[c_mul(<long long> elements[i], ss, nn)] for i in range(m)]
    finally:
        free(index)
