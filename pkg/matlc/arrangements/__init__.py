from matlc.arrangements.decone import affine_char_poly, decone, decone_identity_holds, varchenko_count
from matlc.arrangements.model import (
    AffineArrangement,
    CentralArrangement,
    concurrent_lines,
    generic_lines,
    random_central_arrangement,
)
from matlc.arrangements.regions import bounded_regions_2d, intersection_points

__all__ = [
    "CentralArrangement",
    "AffineArrangement",
    "decone",
    "affine_char_poly",
    "decone_identity_holds",
    "varchenko_count",
    "bounded_regions_2d",
    "intersection_points",
    "generic_lines",
    "concurrent_lines",
    "random_central_arrangement",
]
