"""Backend selection: compiled Cython kernels when available, else pure Python.

Set GL2IMAGES_BACKEND=pure (or =compiled) to force a choice; forcing
"compiled" raises if the extension is missing.
"""

import os

_forced = os.environ.get("GL2IMAGES_BACKEND", "").strip().lower()

if _forced == "pure":
    from . import _purecore as backend
elif _forced == "compiled":
    from . import _core as backend  # type: ignore[attr-defined]
else:
    try:
        from . import _core as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _purecore as backend

BACKEND_NAME = backend.BACKEND_NAME

pack = backend.pack
unpack = backend.unpack
mat_mul = backend.mat_mul
mat_det = backend.mat_det
mat_inv = backend.mat_inv
closure = backend.closure
least_conjugator = backend.least_conjugator
orbit_labels = backend.orbit_labels
rightmul_perm = backend.rightmul_perm
