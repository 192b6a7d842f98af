"""Exact structure-constant calculator for operator-equipped Lie, pre-Lie
and bialgebra structures.

The heavy lifting lives in the compiled extension ``enl._enl``; this package
re-exports its surface unchanged. Bundles are JSON text in, rendered reports
and JSON text out; matrices cross the boundary as nested lists of reduced
rational strings.
"""

from enl._enl import (
    __version__,
    centroid_basis,
    check_en_rmatrix,
    check_equivariant,
    check_lie,
    construct,
    nijenhuis_torsion,
    run_all,
    run_task,
    schouten,
)

__all__ = [
    "__version__",
    "centroid_basis",
    "check_en_rmatrix",
    "check_equivariant",
    "check_lie",
    "construct",
    "nijenhuis_torsion",
    "run_all",
    "run_task",
    "schouten",
]
