"""Online coloring of intervals with lengths in [1, sigma]."""
from .core import (
    Interval,
    Transcript,
    bounds_report,
    clique_number,
    intersects,
    offline_optimal_coloring,
    parse_rational,
    render_rational,
    verify_proper,
)
from .kernels import BACKEND

__version__ = "0.1.0"
