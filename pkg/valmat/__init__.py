"""
valmat
======

Valuated matroids and the uniform semimodular lattices of their tropical
linear spaces.
"""
__version__ = "0.1"

from . import errors  # noqa: E402
from . import util  # noqa: E402
from . import matroid  # noqa: E402
from . import valuation  # noqa: E402
from . import tropical  # noqa: E402
from . import lattice  # noqa: E402
from . import reconstruct  # noqa: E402
from . import ends  # noqa: E402
from . import generators  # noqa: E402
from . import oracle  # noqa: E402
from . import io  # noqa: E402
from . import export  # noqa: E402

__all__ = [
    "errors",
    "util",
    "matroid",
    "valuation",
    "tropical",
    "lattice",
    "reconstruct",
    "ends",
    "generators",
    "oracle",
    "io",
    "export",
]
