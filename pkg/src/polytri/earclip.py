"""Ear clipping triangulation.

Two selection policies drive one clipping engine. The traditional policy
walks the ring and clips the first ear it meets, which tends to shave off
long fans of sliver triangles. The angle-aware policy always clips the ear
whose tip has the smallest interior angle, removing the sharpest corner
before it can be split into something worse. Both emit exactly n-2
triangles for an n-vertex ring.

An ear is three consecutive vertices whose tip is convex and whose triangle
closure contains no reflex vertex of the current ring other than the tip's
own neighbours. Ear status is cached per vertex and refreshed only for the
two neighbours of each cut; the selected candidate is re-verified before
cutting as a cheap guard against stale flags on degenerate rings.

Rings produced by bridging holes repeat vertices, and exact coincidences
can starve the literal ear test even though the limit geometry still has
ears. When no ear is found the engine escalates through two fallbacks
before giving up: clip an exactly-collinear tip as a zero-area triangle
(flagged degenerate, excluded from quality stats), then rescan ignoring
reflex blockers that sit exactly on a corner of the candidate triangle.
"""

from __future__ import annotations

import math
from typing import Callable, Optional

from .geom import DEFAULT_EPS, Epsilon, GeometryError, Point2, point_in_triangle_closure
from .polygon import VertexNode, VertexRing, refresh_node, remove_vertex

__all__ = [
    "EarSearchFailed",
    "Triangle",
    "Triangulation",
    "edge_key",
    "is_ear",
    "update_after_cut",
    "triangulate_basic",
    "triangulate_traditional",
]


class EarSearchFailed(GeometryError):
    """No clippable ear exists although more than 3 vertices remain.

    Signals self-intersecting input or a tolerance failure. Carries the
    surviving ring coordinates for debugging.
    """

    def __init__(self, ring: VertexRing):
        self.points: list[Point2] = [n.point for n in ring]
        super().__init__(
            f"no ear found with {ring.count} vertices remaining; "
            "input is likely self-intersecting"
        )


def edge_key(a: VertexNode, b: VertexNode) -> tuple[VertexNode, VertexNode]:
    """Canonical undirected edge key by node identity.

    Bridged rings give two distinct nodes the same original index, so keys
    use the node objects themselves; identity keeps edge multiplicities
    honest across a duplicated vertex.
    """
    return (a, b) if id(a) <= id(b) else (b, a)


class Triangle:
    """Output triangle: three indices into the vertex table, CCW.

    ``nodes`` keeps the originating ring nodes so adjacency stays exact on
    rings with duplicated vertices. ``degenerate`` marks zero-area slivers
    emitted while collapsing bridge slits; they are excluded from quality
    statistics.
    """

    __slots__ = ("a", "b", "c", "nodes", "degenerate", "id")

    def __init__(
        self,
        na: VertexNode,
        nb: VertexNode,
        nc: VertexNode,
        tid: int,
        degenerate: bool = False,
    ):
        self.nodes = (na, nb, nc)
        self.a = na.original_index
        self.b = nb.original_index
        self.c = nc.original_index
        self.id = tid
        self.degenerate = degenerate

    def indices(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def points(self) -> tuple[Point2, Point2, Point2]:
        na, nb, nc = self.nodes
        return (na.point, nb.point, nc.point)

    def __repr__(self) -> str:
        flag = " degenerate" if self.degenerate else ""
        return f"Triangle({self.a},{self.b},{self.c}{flag})"


class Triangulation:
    """Triangles over an immutable vertex table, with edge adjacency.

    ``edge_map`` maps every undirected edge (keyed by node identity) to the
    ids of the one or two triangles using it: boundary edges of the input
    ring end up with one triangle, interior diagonals with two.
    """

    def __init__(self, vertex_table: tuple[Point2, ...]):
        self.vertex_table = vertex_table
        self.triangles: list[Triangle] = []
        self.edge_map: dict[tuple[VertexNode, VertexNode], list[int]] = {}
        self.boundary_edges: set[tuple[VertexNode, VertexNode]] = set()
        self.swap_count = 0

    def add_triangle(
        self, na: VertexNode, nb: VertexNode, nc: VertexNode, degenerate: bool = False
    ) -> int:
        tid = len(self.triangles)
        tri = Triangle(na, nb, nc, tid, degenerate)
        self.triangles.append(tri)
        for u, v in ((na, nb), (nb, nc), (nc, na)):
            owners = self.edge_map.setdefault(edge_key(u, v), [])
            owners.append(tid)
            assert len(owners) <= 2, "edge shared by more than two triangles"
        return tid

    @property
    def degenerate_count(self) -> int:
        return sum(1 for t in self.triangles if t.degenerate)

    def triangle_points(self, tid: int) -> tuple[Point2, Point2, Point2]:
        return self.triangles[tid].points()

    def __len__(self) -> int:
        return len(self.triangles)

    def __repr__(self) -> str:
        return (
            f"Triangulation({len(self.vertex_table)} vertices, "
            f"{len(self.triangles)} triangles)"
        )


def is_ear(ring: VertexRing, v: VertexNode, eps: Epsilon = DEFAULT_EPS) -> bool:
    """Ear test for tip ``v`` against the current ring state.

    True iff ``v`` is convex and no reflex vertex of the ring, other than
    ``v.prev`` and ``v.next``, lies in the closure of the tip triangle. The
    reflex set is scanned live at call time.
    """
    if not v.is_convex:
        return False
    p = v.prev
    n = v.next
    ax, ay = p.x, p.y
    bx, by = v.x, v.y
    cx, cy = n.x, n.y
    abx, aby = bx - ax, by - ay
    bcx, bcy = cx - bx, cy - by
    cax, cay = ax - cx, ay - cy
    neg = -eps.eps_area
    # A point passing all three closure tests lies within eps_area/min_side
    # of the triangle, so the bounding box can be padded by that margin and
    # stay conservative.
    margin = eps.eps_area / math.sqrt(
        min(abx * abx + aby * aby, bcx * bcx + bcy * bcy, cax * cax + cay * cay)
    )
    minx = min(ax, bx, cx) - margin
    maxx = max(ax, bx, cx) + margin
    miny = min(ay, by, cy) - margin
    maxy = max(ay, by, cy) + margin
    for r in ring.reflex:
        if r is p or r is n:
            continue
        px = r.x
        py = r.y
        if px < minx or px > maxx or py < miny or py > maxy:
            continue
        if abx * (py - ay) - aby * (px - ax) < neg:
            continue
        if bcx * (py - by) - bcy * (px - bx) < neg:
            continue
        if cax * (py - cy) - cay * (px - cx) < neg:
            continue
        return False
    return True


def _is_ear_skip_corner_twins(ring: VertexRing, v: VertexNode, eps: Epsilon) -> bool:
    """Relaxed ear test: ignore reflex blockers sitting exactly on a corner.

    Used only by the last-resort fallback. A bridged ring duplicates
    vertices, and the duplicate of a corner lies on the candidate closure
    even when the limit geometry keeps it strictly outside; exempting
    coincident-with-corner blockers recovers those ears.
    """
    if not v.is_convex:
        return False
    p, n = v.prev, v.next
    tol = eps.eps_len
    for r in ring.reflex:
        if r is p or r is n:
            continue
        if (
            math.hypot(r.x - p.x, r.y - p.y) <= tol
            or math.hypot(r.x - v.x, r.y - v.y) <= tol
            or math.hypot(r.x - n.x, r.y - n.y) <= tol
        ):
            continue
        if point_in_triangle_closure(r.point, p.point, v.point, n.point, eps):
            return False
    return True


def update_after_cut(
    ring: VertexRing, left: VertexNode, right: VertexNode, eps: Epsilon = DEFAULT_EPS
) -> None:
    """Refresh the two neighbours of a cut: angle, convexity, ear status.

    Geometry first for both nodes, then ear tests, so each neighbour's ear
    test sees the other's updated reflex status. No other node is touched.
    """
    refresh_node(ring, left, eps)
    refresh_node(ring, right, eps)
    left.is_ear = is_ear(ring, left, eps) if left.is_convex else False
    right.is_ear = is_ear(ring, right, eps) if right.is_convex else False


def _select_smallest_angle(ring: VertexRing, eps: Epsilon) -> Optional[VertexNode]:
    """Ear tip with the minimal interior angle, re-verified before use.

    Ties break on the smallest original index, then earliest ring position,
    so runs are reproducible. Returns None when no flagged ear survives
    re-verification.
    """
    while True:
        best: Optional[VertexNode] = None
        best_key = (math.inf, 0, 0)
        node = ring.head
        for _ in range(ring.count):
            if node.is_ear:
                key = (node.interior_angle, node.original_index, node.seq)
                if key < best_key:
                    best = node
                    best_key = key
            node = node.next
        if best is None:
            return None
        if is_ear(ring, best, eps):
            return best
        best.is_ear = False


def _select_next_sequential(
    ring: VertexRing, start: VertexNode, eps: Epsilon
) -> Optional[VertexNode]:
    """First flagged-and-verified ear at or after ``start`` in ring order."""
    node = start
    for _ in range(ring.count):
        if node.is_ear:
            if is_ear(ring, node, eps):
                return node
            node.is_ear = False
        node = node.next
    return None


def _select_fallback(ring: VertexRing, eps: Epsilon) -> tuple[VertexNode, bool]:
    """Escalation when no literal ear exists; returns (tip, degenerate_flag).

    First clip an exactly-collinear tip as a flagged zero-area triangle
    (this is how collapsed bridge slits drain away), then retry the ear
    scan with coincident-corner reflex twins exempted. Raises
    EarSearchFailed when neither applies.
    """
    best: Optional[VertexNode] = None
    best_key = (0, 0)
    for node in ring:
        if not node.is_convex and (
            node.interior_angle == 180.0 or node.interior_angle == 360.0
        ):
            key = (node.original_index, node.seq)
            if best is None or key < best_key:
                best = node
                best_key = key
    if best is not None:
        return best, True
    best = None
    angle_key = (math.inf, 0, 0)
    for node in ring:
        if node.is_convex and _is_ear_skip_corner_twins(ring, node, eps):
            key = (node.interior_angle, node.original_index, node.seq)
            if key < angle_key:
                best = node
                angle_key = key
    if best is not None:
        return best, False
    raise EarSearchFailed(ring)


def _clip(
    ring: VertexRing,
    eps: Epsilon,
    smallest_angle: bool,
    post_emit: Optional[Callable[[Triangulation, int], None]] = None,
) -> Triangulation:
    """Shared clipping loop; emits n-2 triangles and returns the result."""
    tri = Triangulation(ring.table)
    for node in ring:
        tri.boundary_edges.add(edge_key(node, node.next))
    for node in ring:
        node.is_ear = is_ear(ring, node, eps) if node.is_convex else False
    cursor = ring.head
    while ring.count > 3:
        degenerate = False
        if smallest_angle:
            v = _select_smallest_angle(ring, eps)
        else:
            v = _select_next_sequential(ring, cursor, eps)
        if v is None:
            v, degenerate = _select_fallback(ring, eps)
        left, right = v.prev, v.next
        tid = tri.add_triangle(left, v, right, degenerate=degenerate)
        remove_vertex(ring, v)
        update_after_cut(ring, left, right, eps)
        cursor = right
        if post_emit is not None:
            post_emit(tri, tid)
    h = ring.head
    a, b, c = h, h.next, h.next.next
    z = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    tid = tri.add_triangle(a, b, c, degenerate=0.5 * abs(z) <= eps.eps_area)
    if post_emit is not None:
        post_emit(tri, tid)
    return tri


def triangulate_basic(ring: VertexRing, eps: Epsilon = DEFAULT_EPS) -> Triangulation:
    """Triangulate by always clipping the ear with the smallest interior angle."""
    return _clip(ring, eps, smallest_angle=True)


def triangulate_traditional(ring: VertexRing, eps: Epsilon = DEFAULT_EPS) -> Triangulation:
    """Triangulate by clipping the first ear found in ring order.

    Scanning resumes at the successor of the last clipped tip, which is the
    classic sequential behaviour this library's angle-aware variants are
    measured against.
    """
    return _clip(ring, eps, smallest_angle=False)
