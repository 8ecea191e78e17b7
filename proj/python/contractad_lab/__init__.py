"""Exact counting for Hamiltonian paths/cycles and the tuple calculus
around them: realizable orderings, Koszul complex homology, symmetric and
univariate generating series.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

import os
import sys

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc  # noqa: F401
except ImportError:  # pragma: no cover - developer builds
    # In a plain cmake build the extension sits in the build tree; tests
    # point CONTRACTAD_CORE_DIR there.
    _core_dir = os.environ.get("CONTRACTAD_CORE_DIR")
    if not _core_dir:
        raise
    sys.path.insert(0, _core_dir)
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
