"""Backend selection for the rank kernels.

The compiled extension is used when it was built; setting
``SIGMACOLOR_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

if os.environ.get("SIGMACOLOR_PURE_PYTHON"):
    from ._kernels_py import first_conflict, first_fit_replay, greedy_by_left, max_overlap

    BACKEND = "python"
else:
    try:
        from ._kernels import first_conflict, first_fit_replay, greedy_by_left, max_overlap

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import first_conflict, first_fit_replay, greedy_by_left, max_overlap

        BACKEND = "python"

__all__ = ["BACKEND", "first_conflict", "first_fit_replay", "greedy_by_left", "max_overlap"]
