"""Small strong epsilon-nets for boxes, halfplanes and disks, with exact adversary oracles."""

from smallnets.geometry import (
    PointSet,
    as_point,
    centerpoint2d,
    convex_hull,
    delaunay,
    halfplane_depth,
    in_circle,
    orient2d,
    rank_normalize,
)

__version__ = "0.1.0"

__all__ = [
    "PointSet",
    "as_point",
    "centerpoint2d",
    "convex_hull",
    "delaunay",
    "halfplane_depth",
    "in_circle",
    "orient2d",
    "rank_normalize",
]
