"""High-level triangulation pipeline.

Two stages: eliminate holes by bridging them into the outer ring, then run
the selected clipping algorithm over the resulting single ring. Output
triangles index the flattened vertex table (outer vertices first, then each
hole's, in normalized order).
"""

from __future__ import annotations

from dataclasses import dataclass

from .geom import DEFAULT_EPS, Epsilon, InvalidRing
from .polygon import PolygonWithHoles, build_ring, normalize, validate_polygon
from .bridge import DegenerateRing, eliminate_holes
from .earclip import Triangulation, triangulate_basic, triangulate_traditional
from .swap import AngleBound, triangulate_improved
from .quality import QualityReport, report

__all__ = ["ALGORITHMS", "RunConfig", "triangulate_polygon", "run"]

ALGORITHMS = ("traditional", "basic", "improved")


@dataclass
class RunConfig:
    """Options for one triangulation run."""

    algorithm: str = "basic"
    bound: float = 30.0
    validate: bool = False
    seed: int = 42
    emit: str = "json"
    eps: Epsilon = DEFAULT_EPS


def triangulate_polygon(
    poly: PolygonWithHoles,
    algorithm: str = "basic",
    bound: float | AngleBound = 30.0,
    eps: Epsilon = DEFAULT_EPS,
) -> tuple[Triangulation, DegenerateRing]:
    """Normalize, bridge out the holes, and triangulate.

    Returns the triangulation together with the intermediate single ring
    (which is just the outer ring when there are no holes).
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    poly = normalize(poly, eps)
    degen = eliminate_holes(poly, eps)
    ring = build_ring(degen.ring, eps, indices=degen.indices, table=poly.vertex_table())
    if algorithm == "basic":
        tri = triangulate_basic(ring, eps)
    elif algorithm == "traditional":
        tri = triangulate_traditional(ring, eps)
    else:
        tri = triangulate_improved(ring, bound, eps)
    return tri, degen


def run(config: RunConfig, poly: PolygonWithHoles) -> tuple[Triangulation, QualityReport]:
    """Config-driven entry point: validate (optional), triangulate, measure."""
    if config.validate:
        problems = validate_polygon(normalize(poly, config.eps), config.eps)
        if problems:
            raise InvalidRing("; ".join(problems))
    tri, _ = triangulate_polygon(poly, config.algorithm, config.bound, config.eps)
    return tri, report(tri, config.eps)
