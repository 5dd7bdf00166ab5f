"""
Exact bounded-region count for real line arrangements in the plane.

The bounded segments between consecutive intersection points on each line
form a planar graph whose bounded faces are exactly the bounded regions, so
by Euler's relation  faces = edges - vertices + components.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from matlc.arrangements.model import AffineArrangement
from matlc.errors import DomainError, UnsupportedRankError

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


def _intersection(f: Tuple[Fraction, ...], g: Tuple[Fraction, ...]) -> Optional[Point]:
    a1, b1, c1 = f
    a2, b2, c2 = g
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return (c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det


def intersection_points(arrangement: AffineArrangement) -> Dict[Point, List[int]]:
    """Each distinct intersection point with the indices of the lines through it."""
    forms = arrangement.forms
    points: Dict[Point, set] = {}
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            p = _intersection(forms[i], forms[j])
            if p is not None:
                points.setdefault(p, set()).update((i, j))
    return {p: sorted(lines) for p, lines in sorted(points.items())}


def bounded_regions_2d(arrangement: AffineArrangement) -> int:
    """Number of bounded regions of R^2 minus the lines."""
    if arrangement.dim != 2:
        raise UnsupportedRankError(f"region counting supports rank 2 only, got rank {arrangement.dim}")
    if not arrangement.is_essential():
        raise DomainError("region counting needs an essential arrangement")
    points = intersection_points(arrangement)
    index = {p: k for k, p in enumerate(points)}
    parent = list(range(len(points)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    on_line: List[List[int]] = [[] for _ in range(len(arrangement))]
    for p, lines in points.items():
        for i in lines:
            on_line[i].append(index[p])
    edges = 0
    for pts in on_line:
        edges += max(len(pts) - 1, 0)
        for a, b in zip(pts, pts[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    components = len({find(k) for k in range(len(points))})
    regions = edges - len(points) + components
    logger.debug(
        f"[bounded_regions_2d] V={len(points)} E={edges} C={components} -> {regions} bounded regions"
    )
    return regions
