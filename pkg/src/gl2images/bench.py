"""Benchmark the compiled kernels against the pure-Python fallback.

Run as ``python -m gl2images.bench``.  Workloads mirror the package's hot
paths: group closure, conjugator scanning and orbit partitioning.
"""

from __future__ import annotations

import time

from . import _purecore

try:
    from . import _core
except ImportError:  # pragma: no cover - build-environment dependent
    _core = None

from .modmat import Mat2
from .subgroups import borel_gens, gl2_gens


def _timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads():
    b27 = [m.packed for m in borel_gens(27)]
    full9 = [m.packed for m in gl2_gens(9)]
    full27 = [m.packed for m in gl2_gens(27)]
    wl = []
    wl.append(("closure borel(27), order 8748", lambda be: be.closure(b27, 27)))
    wl.append(("closure GL2(Z/9), order 3888", lambda be: be.closure(full9, 9)))
    wl.append(("closure GL2(Z/27), order 314928",
               lambda be: be.closure(full27, 27)))

    def conj_scan(be):
        helems = be.closure(b27, 27)
        universe = be.closure(full27, 27)
        t = Mat2(27, 1, 2, 1, 1).packed
        ti = be.mat_inv(t, 27)
        gens = [be.mat_mul(be.mat_mul(t, g, 27), ti, 27) for g in b27]
        return be.least_conjugator(gens, set(helems), 27, universe)

    wl.append(("conjugator scan over GL2(Z/27)", conj_scan))

    def orbits(be):
        sl2 = be.closure(
            [Mat2(27, 1, 1, 0, 1).packed, Mat2(27, 1, 0, 1, 1).packed], 27
        )
        upper_sl2 = [
            Mat2(27, 1, 1, 0, 1).packed,
            Mat2(27, 2, 1, 0, 14).packed,  # det 1, upper triangular
        ]
        u = [Mat2(27, 1, 1, 0, 1).packed, Mat2.minus_identity(27).packed]
        return max(be.orbit_labels(sl2, 27, upper_sl2, u)) + 1

    wl.append(("double-coset orbits in SL2(Z/27)", orbits))
    return wl


def main() -> int:
    backends = [("pure", _purecore)]
    if _core is not None:
        backends.append(("compiled", _core))
    print(f"{'workload':44s}" + "".join(f"{name:>12s}" for name, _ in backends)
          + ("     speedup" if _core is not None else ""))
    for name, fn in workloads():
        times = []
        results = []
        for _, be in backends:
            t, out = _timed(lambda be=be: fn(be), repeat=2)
            times.append(t)
            results.append(out if isinstance(out, int) else len(out))
        assert len(set(results)) == 1, f"backend disagreement on {name}"
        row = f"{name:44s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
