"""Upper-triangular roots of the zero matrix over GF(2).

Three classes of n x n upper-triangular matrices U over the two-element
field, named by their defining equations:

    class A:  U @ U  = I
    class B:  U @ U  = 0
    class C:  U.T @ U = 0

The package enumerates them, counts them exactly (by recurrence and by
closed forms), certifies their asymptotic growth constants with proven
error bounds, and connects class C to pressing sequences on bicolored
graphs, where roots of a symmetric matrix describe successful press runs.
"""

from .bounded import BoundedReal
from .counting import RankTable, closed_form_count, lpn_root_count, unified_count
from .gf2 import GF2Matrix, NotLpnError, RankProfile, parse_matrix, rank_profile, render_matrix

__version__ = "0.1.0"

__all__ = [
    "BoundedReal",
    "GF2Matrix",
    "NotLpnError",
    "RankProfile",
    "RankTable",
    "closed_form_count",
    "lpn_root_count",
    "parse_matrix",
    "rank_profile",
    "render_matrix",
    "unified_count",
    "__version__",
]
