"""Exact 2+1 separately convex (rank-one convex) hulls of finite sets in R^3.

Quick start::

    >>> from rchull import rank_one_hull, membership
    >>> S = [(1, 0, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 1, 2)]
    >>> M, trace = rank_one_hull(S)
    >>> membership(M, ("1/2", "1/2", 1))
    False
"""

from .exact import (
    ConvexPolygon,
    Point2,
    Point3,
    Segment2,
    convex_hull_2d,
    convex_polygon_intersection,
    orientation,
    point_in_polygon,
    rational,
    segment_intersection_point,
)
from .grid import Grid, build_grid, first_derived_set, project
from .hull import (
    ActiveSet,
    EliminationTrace,
    HvComplex,
    complex_extremal_points,
    eliminate,
    finitely_extremal,
    hv_hull,
    membership,
    rank_one_hull,
    scaffolding,
)
from .pcpp import Shovel, pcpp_member, shovel_contains
from .verify import VerificationReport, brute_force_hull_1level, verify_hull

__version__ = "0.1.0"
