"""Polygon data model.

Immutable rings and polygons on one side; on the other, the mutable doubly
linked vertex ring that the clipping passes consume and tear down. A ring is
stored open (the last point connects implicitly back to the first) and the
outer boundary is always normalized to counter-clockwise order with holes
clockwise.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable, Iterator, Optional, Sequence

from .geom import (
    DEFAULT_EPS,
    DegenerateVertex,
    Epsilon,
    InvalidRing,
    Point2,
    point_in_ring,
    segments_properly_cross,
    signed_area,
)

__all__ = [
    "Ring",
    "PolygonWithHoles",
    "VertexNode",
    "VertexRing",
    "normalize",
    "build_ring",
    "remove_vertex",
    "refresh_node",
    "validate_polygon",
]

log = logging.getLogger("polytri")


class Ring:
    """An open list of vertices forming a closed loop (last joins first)."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Sequence[float]]):
        pts = tuple(Point2(float(p[0]), float(p[1])) for p in points)
        if len(pts) < 3:
            raise InvalidRing(f"ring needs at least 3 points, got {len(pts)}")
        for p in pts:
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise InvalidRing(f"non-finite coordinate {p}")
        self.points = pts

    def signed_area(self) -> float:
        return signed_area(self.points)

    def reversed(self) -> "Ring":
        return Ring(tuple(reversed(self.points)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"Ring({len(self.points)} points)"


class PolygonWithHoles:
    """One outer ring plus zero or more hole rings.

    After :func:`normalize` the outer ring is counter-clockwise and every
    hole is clockwise. Hole containment and disjointness are not checked
    here; that is the opt-in :func:`validate_polygon` pass.
    """

    __slots__ = ("outer", "holes")

    def __init__(self, outer: Ring, holes: Iterable[Ring] = ()):
        self.outer = outer
        self.holes = tuple(holes)

    def vertex_table(self) -> tuple[Point2, ...]:
        """Flattened vertex list: outer vertices first, then each hole's."""
        table = list(self.outer.points)
        for h in self.holes:
            table.extend(h.points)
        return tuple(table)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolygonWithHoles)
            and self.outer == other.outer
            and self.holes == other.holes
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.holes))

    def __repr__(self) -> str:
        return f"PolygonWithHoles(outer={len(self.outer)} pts, holes={len(self.holes)})"


def _dedupe(points: Sequence[Point2], eps: Epsilon) -> tuple[Point2, ...]:
    """Drop consecutive (and wrap-around) points closer than eps_len."""
    kept: list[Point2] = []
    for p in points:
        if kept and math.hypot(p.x - kept[-1].x, p.y - kept[-1].y) <= eps.eps_len:
            continue
        kept.append(p)
    while len(kept) > 1 and math.hypot(
        kept[0].x - kept[-1].x, kept[0].y - kept[-1].y
    ) <= eps.eps_len:
        kept.pop()
    return tuple(kept)


def _normalize_ring(ring: Ring, want_ccw: bool, label: str, eps: Epsilon) -> Ring:
    pts = _dedupe(ring.points, eps)
    if len(pts) < 3:
        raise InvalidRing(f"{label} collapses below 3 points after removing duplicates")
    area = signed_area(pts)
    if abs(area) <= eps.eps_area:
        raise InvalidRing(f"{label} has (near-)zero area")
    if (area > 0.0) != want_ccw:
        pts = tuple(reversed(pts))
        log.info("%s reversed to %s order", label, "CCW" if want_ccw else "CW")
    if pts == ring.points:
        return ring
    return Ring(pts)


def normalize(poly: PolygonWithHoles, eps: Epsilon = DEFAULT_EPS) -> PolygonWithHoles:
    """Canonical form: outer CCW, holes CW, consecutive duplicates removed.

    Idempotent; point order is otherwise preserved. Raises InvalidRing when
    a ring collapses below 3 points or encloses no area.
    """
    outer = _normalize_ring(poly.outer, True, "outer ring", eps)
    holes = tuple(
        _normalize_ring(h, False, f"hole {i}", eps) for i, h in enumerate(poly.holes)
    )
    if outer is poly.outer and all(a is b for a, b in zip(holes, poly.holes)):
        return poly
    return PolygonWithHoles(outer, holes)


class VertexNode:
    """A vertex in the live clipping ring.

    Carries its coordinates inline (hot loops read ``x``/``y`` directly),
    the index of the vertex in the flattened input table, and the cached
    interior angle, convexity, and ear status.
    """

    __slots__ = (
        "x",
        "y",
        "original_index",
        "prev",
        "next",
        "interior_angle",
        "is_convex",
        "is_ear",
        "seq",
    )

    def __init__(self, x: float, y: float, original_index: int, seq: int):
        self.x = x
        self.y = y
        self.original_index = original_index
        self.prev: "VertexNode" = self
        self.next: "VertexNode" = self
        self.interior_angle = 0.0
        self.is_convex = False
        self.is_ear = False
        self.seq = seq

    @property
    def point(self) -> Point2:
        return Point2(self.x, self.y)

    def __repr__(self) -> str:
        return (
            f"VertexNode(#{self.original_index} ({self.x:.6g},{self.y:.6g}) "
            f"angle={self.interior_angle:.2f})"
        )


class VertexRing:
    """Circular doubly linked ring of vertices, consumed by ear clipping.

    ``reflex`` is the live set of non-convex nodes; ear tests scan it
    instead of the whole ring. It is maintained by :func:`refresh_node` and
    :func:`remove_vertex`. Single-threaded mutable state: one triangulation
    run owns one ring.
    """

    __slots__ = ("head", "count", "table", "reflex")

    def __init__(self, head: VertexNode, count: int, table: tuple[Point2, ...]):
        self.head = head
        self.count = count
        self.table = table
        self.reflex: set[VertexNode] = set()

    def __iter__(self) -> Iterator[VertexNode]:
        node = self.head
        for _ in range(self.count):
            yield node
            node = node.next

    def nodes(self) -> list[VertexNode]:
        return list(self)


def refresh_node(
    ring: VertexRing, node: VertexNode, eps: Epsilon = DEFAULT_EPS, strict: bool = False
) -> None:
    """Recompute angle and convexity of ``node`` from its current neighbours.

    Convexity comes from the orientation test (LEFT means convex on a CCW
    ring); exactly straight or spiked vertices are reflex. Keeps
    ``ring.reflex`` in sync and clears the ear flag on non-convex nodes.

    With ``strict`` a coincident neighbour raises DegenerateVertex (build
    time, where it means broken input). Without it the node is marked
    reflex with a 360 degree angle so the clipping fallbacks can clean up a
    collapsed edge mid-run.
    """
    p, n = node.prev, node.next
    ux, uy = p.x - node.x, p.y - node.y
    wx, wy = n.x - node.x, n.y - node.y
    if math.hypot(ux, uy) <= eps.eps_len or math.hypot(wx, wy) <= eps.eps_len:
        if strict:
            raise DegenerateVertex(f"coincident neighbours at {node!r}")
        node.interior_angle = 360.0
        node.is_convex = False
        node.is_ear = False
        ring.reflex.add(node)
        return
    z = wx * uy - wy * ux  # positive iff convex on a CCW ring
    if z > eps.eps_area:
        node.interior_angle = math.degrees(math.atan2(uy, ux) - math.atan2(wy, wx)) % 360.0
        node.is_convex = True
        ring.reflex.discard(node)
    else:
        if z < -eps.eps_area:
            node.interior_angle = (
                math.degrees(math.atan2(uy, ux) - math.atan2(wy, wx)) % 360.0
            )
        else:
            node.interior_angle = 180.0 if ux * wx + uy * wy < 0.0 else 360.0
        node.is_convex = False
        node.is_ear = False
        ring.reflex.add(node)


def build_ring(
    ring: Ring,
    eps: Epsilon = DEFAULT_EPS,
    indices: Optional[Sequence[int]] = None,
    table: Optional[tuple[Point2, ...]] = None,
) -> VertexRing:
    """Create the linked vertex ring for a normalized CCW boundary.

    ``indices`` maps each position to its index in the flattened vertex
    table (bridged rings repeat indices for duplicated vertices); it
    defaults to 0..n-1 with the ring's own points as the table. Interior
    angles and convexity are computed for every node; ear flags start
    false.
    """
    pts = ring.points
    n = len(pts)
    if indices is None:
        indices = range(n)
    if table is None:
        table = pts
    nodes = [VertexNode(p.x, p.y, idx, seq) for seq, (p, idx) in enumerate(zip(pts, indices))]
    for i, node in enumerate(nodes):
        node.prev = nodes[i - 1]
        node.next = nodes[(i + 1) % n]
    vring = VertexRing(nodes[0], n, table)
    for node in nodes:
        refresh_node(vring, node, eps, strict=True)
    return vring


def remove_vertex(ring: VertexRing, v: VertexNode) -> VertexRing:
    """Unlink ``v`` from the ring; neighbour angles are NOT recomputed here.

    The caller (the clipping loop) refreshes the two neighbours afterwards.
    ``v`` keeps its own prev/next pointers so an emitted triangle can still
    reference them.
    """
    if ring.count < 3:
        raise InvalidRing("cannot remove from a ring with fewer than 3 vertices")
    v.prev.next = v.next
    v.next.prev = v.prev
    if ring.head is v:
        ring.head = v.next
    ring.count -= 1
    ring.reflex.discard(v)
    return ring


def validate_polygon(poly: PolygonWithHoles, eps: Epsilon = DEFAULT_EPS) -> list[str]:
    """Opt-in O(n^2) structural check; returns a list of problems (empty = ok).

    Verifies that every hole lies strictly inside the outer ring and that no
    two rings touch or cross. Assumes a normalized polygon.
    """
    problems: list[str] = []

    def edges(r: Ring):
        pts = r.points
        return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]

    outer_edges = edges(poly.outer)
    hole_edges = [edges(h) for h in poly.holes]
    for i, h in enumerate(poly.holes):
        for p in h.points:
            if not point_in_ring(p, poly.outer.points):
                problems.append(f"hole {i}: vertex {p} outside the outer ring")
                break
        for a, b in hole_edges[i]:
            if any(segments_properly_cross(a, b, c, d, eps) for c, d in outer_edges):
                problems.append(f"hole {i}: crosses the outer ring")
                break
    for i in range(len(poly.holes)):
        for j in range(i + 1, len(poly.holes)):
            crossing = any(
                segments_properly_cross(a, b, c, d, eps)
                for a, b in hole_edges[i]
                for c, d in hole_edges[j]
            )
            nested = point_in_ring(
                poly.holes[i].points[0], poly.holes[j].points
            ) or point_in_ring(poly.holes[j].points[0], poly.holes[i].points)
            if crossing or nested:
                problems.append(f"holes {i} and {j} overlap")
    return problems
