"""Kernel selection: the compiled extension when importable, else the numpy fallback.

Set ``RRW_PURE=1`` to force the fallback.
"""
import os

from . import _kernels_py as pure

if os.environ.get("RRW_PURE", "") not in ("", "0"):
    impl = pure
    COMPILED = False
else:
    try:
        from . import _kernels as impl  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:  # extension not built
        impl = pure
        COMPILED = False

member = impl.member
sup_along = impl.sup_along
upper_bounds = impl.upper_bounds
polytope_vertices = impl.polytope_vertices
