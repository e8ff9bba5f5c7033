"""gl2images: computing with open subgroups of GL2(Z/NZ) at 3-power levels.

Subpackages: exact 2x2 modular matrix arithmetic, subgroup closure and
conjugacy, a labeled subgroup catalog, cusp/genus computation, the
degree-3 isogeny basis-change transform, a graph/torsion classifier and an
LMFDB cross-checking client.
"""

from .core import BACKEND_NAME

__version__ = "0.1.0"

__all__ = ["BACKEND_NAME", "__version__"]
