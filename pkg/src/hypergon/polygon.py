"""Ideal hyperbolic polygons, side reflections, and generational growth.

An ideal polygon is described by its vector of side angles (turn fractions
summing to one full turn) plus a base rotation; vertex ``j`` sits at the
rotation plus the cumulative sum of the first ``j - 1`` angles.  Reflecting
the polygon across side ``j`` maps every other vertex strictly inside that
side's arc, so the images of the remaining sides tile the arc; the table of
their widths is the inverted-angle matrix, whose row ``j`` sums back to the
angle of side ``j``.

Growing a body repeats the reflection: generation 0 is the seed polygon,
and each later generation reflects every polygon of the previous one across
each of its free sides (the side shared with its parent stays fixed).  The
union of all generations up to ``s`` is itself a convex ideal polygon whose
boundary angles are the gaps between all vertices produced along the way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .disk_geometry import (
    ALPHA_MIN,
    POINT_TOL,
    CirclePoint,
    GeodesicSide,
    invert_fractions,
    invert_on_circle,
    wrap_unit,
)
from .errors import DepthLimitError, DomainError, PrecisionError

# Below this arc width (in turns) vertices are no longer reliably separable.
ARC_GUARD = 100.0 * POINT_TOL

DEFAULT_MAX_SIDES = 10**6

REGULARITY_TOL = 1e-9


def _validate_angles(angles) -> tuple[float, ...]:
    angles = tuple(float(a) for a in angles)
    if len(angles) < 3:
        raise DomainError("a polygon needs at least 3 sides")
    for a in angles:
        if not (ALPHA_MIN <= a <= 0.5 - ALPHA_MIN):
            raise DomainError("alpha must be in (0, 0.5)")
    if abs(math.fsum(angles) - 1.0) > 1e-12:
        raise DomainError("angles must sum to 1")
    return angles


@dataclass(frozen=True)
class IdealPolygon:
    """An ideal polygon: side angles in turns plus the rotation of vertex 1."""

    angles: tuple[float, ...]
    rotation: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "angles", _validate_angles(self.angles))
        if not math.isfinite(self.rotation):
            raise DomainError("rotation must be finite")
        object.__setattr__(self, "rotation", wrap_unit(self.rotation))

    @property
    def n(self) -> int:
        return len(self.angles)

    @classmethod
    def regular(cls, n: int, rotation: float = 0.0) -> "IdealPolygon":
        """The regular ideal n-gon: every side angle equal to 1/n."""
        if n < 3:
            raise DomainError("a polygon needs at least 3 sides")
        return cls((1.0 / n,) * n, rotation)


def vertex_fractions(poly: IdealPolygon) -> np.ndarray:
    """Vertex turn fractions in polygon order, reduced mod 1."""
    sums = np.concatenate(([0.0], np.cumsum(poly.angles)[:-1]))
    return (poly.rotation + sums) % 1.0


def vertices(poly: IdealPolygon) -> tuple[CirclePoint, ...]:
    """The polygon's vertices as circle points, starting at the rotation."""
    return tuple(CirclePoint(t) for t in vertex_fractions(poly))


def side(poly: IdealPolygon, j: int) -> GeodesicSide:
    """Side ``j`` (1-based), joining vertex ``j`` to vertex ``j + 1``."""
    if not 1 <= j <= poly.n:
        raise DomainError(f"side index must be in 1..{poly.n}")
    return GeodesicSide(vertex_fractions(poly)[j - 1], poly.angles[j - 1])


def _cycle_fractions(vertex_cycle) -> np.ndarray:
    ts = np.array([p.t if isinstance(p, CirclePoint) else float(p) for p in vertex_cycle])
    if len(ts) < 3:
        raise DomainError("a vertex cycle needs at least 3 points")
    gaps = np.diff(np.concatenate([ts, ts[:1]])) % 1.0
    if np.any(gaps <= 0.0) or abs(gaps.sum() - 1.0) > 1e-9:
        raise DomainError("vertex cycle must be strictly ordered in the positive direction")
    return ts


def reflect_polygon(vertex_cycle, j: int) -> tuple[CirclePoint, ...]:
    """Reflect a vertex cycle across its side ``j`` (1-based).

    The side's endpoints stay fixed; every other vertex is replaced by its
    inversion image, which lands strictly inside the side's arc.  The result
    is re-sorted into positive orientation starting at the side's first
    endpoint.  If the cycle's arc from vertex ``j`` to vertex ``j + 1`` is
    the long way around (as for the closing side of a previously reflected
    cycle), the same geodesic is used via the complementary arc.
    """
    ts = _cycle_fractions(vertex_cycle)
    n = len(ts)
    if not 1 <= j <= n:
        raise DomainError(f"side index must be in 1..{n}")
    a = ts[j - 1]
    e = ts[j % n]
    w = (e - a) % 1.0
    if w > 0.5:
        geo = GeodesicSide(e, 1.0 - w)
    else:
        geo = GeodesicSide(a, w)
    out = [float(a), float(e)]
    for i, t in enumerate(ts):
        if i not in (j - 1, j % n):
            out.append(invert_on_circle(float(t), geo))
    out.sort(key=lambda t: (t - a) % 1.0)
    return tuple(CirclePoint(t) for t in out)


@dataclass(frozen=True)
class InvertedAngleMatrix:
    """The n x (n-1) table of reflected side widths.

    Entry ``(j, k)`` (1-based, ``k != j``) is the arc width of the image of
    side ``k`` under reflection of the polygon across side ``j``.  Stored as
    a full square table with NaN on the diagonal.
    """

    n: int
    table: np.ndarray = field(repr=False)

    def entry(self, j: int, k: int) -> float:
        if not (1 <= j <= self.n and 1 <= k <= self.n) or j == k:
            raise DomainError("matrix indices must be distinct and in 1..n")
        return float(self.table[j - 1, k - 1])

    def row_sums(self) -> np.ndarray:
        """Per-row totals; row ``j`` tiles the arc of side ``j``."""
        return np.nansum(self.table, axis=1)

    def values(self) -> np.ndarray:
        """All ``n * (n - 1)`` entries in row-major order, diagonal skipped."""
        flat = self.table[~np.eye(self.n, dtype=bool)]
        return flat.copy()


def _tables_from_vertices(verts: np.ndarray, angles: np.ndarray) -> np.ndarray:
    """Inverted-angle tables, shape (B, n, n), for a batch of polygons.

    ``verts`` and ``angles`` are (B, n) arrays of vertex fractions and side
    angles.  Inversion reverses the circular order, so the image width of
    side ``k`` is the mod-1 difference of the images of its endpoints taken
    backwards; noise-level negative differences fold to 0 rather than to a
    full turn.
    """
    b, n = verts.shape
    tables = np.empty((b, n, n))
    for j in range(n):
        x = invert_fractions(verts, verts[:, j : j + 1], angles[:, j : j + 1])
        ent = (x - np.roll(x, -1, axis=1)) % 1.0
        ent = np.where(ent > 0.5, 0.0, ent)
        tables[:, j, :] = ent
    idx = np.arange(n)
    tables[:, idx, idx] = np.nan
    return tables


def angle_tables(angle_rows: np.ndarray) -> np.ndarray:
    """Batch inverted-angle tables for rotation-0 angle vectors, (B, n, n)."""
    a = np.atleast_2d(np.asarray(angle_rows, dtype=float))
    v = np.concatenate([np.zeros((a.shape[0], 1)), np.cumsum(a, axis=1)[:, :-1]], axis=1)
    return _tables_from_vertices(v % 1.0, a)


def inverted_angle_matrix(poly: IdealPolygon) -> InvertedAngleMatrix:
    """The table of inverted side angles of a polygon."""
    verts = vertex_fractions(poly)[None, :]
    angles = np.asarray(poly.angles)[None, :]
    table = _tables_from_vertices(verts, angles)[0]
    return InvertedAngleMatrix(poly.n, table)


def max_inverted_angle(poly: IdealPolygon) -> tuple[float, int, int]:
    """Largest inverted angle and its (row, column), 1-based.

    Ties resolve to the lexicographically smallest ``(j, k)``, which the
    row-major scan of the table guarantees.
    """
    table = inverted_angle_matrix(poly).table
    flat = int(np.nanargmax(table))
    j, k = divmod(flat, poly.n)
    return float(table[j, k]), j + 1, k + 1


def is_regular(angles, tol: float = REGULARITY_TOL) -> bool:
    """Whether all angles agree with 1/n within ``tol``."""
    arr = np.asarray(angles, dtype=float)
    if arr.ndim != 1 or arr.size < 3:
        raise DomainError("need a flat vector of at least 3 angles")
    return bool(np.max(np.abs(arr - 1.0 / arr.size)) <= tol)


@dataclass(frozen=True, eq=False)
class Body:
    """The union of all reflection generations up to ``generations``.

    ``polygons[g]`` lists the vertex cycles (tuples of turn fractions) of
    generation ``g``; ``boundary_angles`` are the arcs between consecutive
    boundary vertices of the union, in positive orientation starting from
    the smallest fraction.
    """

    base: IdealPolygon
    generations: int
    polygons: tuple[tuple[tuple[float, ...], ...], ...]
    boundary_angles: np.ndarray

    @property
    def polygon_counts(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.polygons)


def _reflect_cell(verts: tuple[float, ...], i: int, n: int) -> tuple[tuple[float, ...], list[float]]:
    """Reflect a cell across its side ``i`` (0-based, consecutive pair).

    Returns the child's span-ordered vertex tuple and the list of newly
    created vertex fractions.
    """
    a = verts[i]
    e = verts[(i + 1) % n]
    w = (e - a) % 1.0
    if w < ARC_GUARD:
        raise PrecisionError("arc width underflow: vertices no longer separable")
    geo = GeodesicSide(a, w)
    offsets = []
    for idx in range(n):
        if idx in (i, (i + 1) % n):
            continue
        x = invert_on_circle(verts[idx], geo)
        offsets.append((x - a) % 1.0)
    offsets.sort()
    gaps = np.diff([0.0] + offsets + [w])
    if gaps.min() < ARC_GUARD:
        raise PrecisionError("arc width underflow: vertices no longer separable")
    images = [wrap_unit(a + off) for off in offsets]
    child = (a, *images, e)
    return child, images


def grow_body(poly: IdealPolygon, s: int, max_sides: int = DEFAULT_MAX_SIDES) -> Body:
    """Grow the reflection body of ``poly`` through ``s`` generations.

    Generation 0 is the seed; generation ``g + 1`` reflects every
    generation-``g`` cell across each of its free sides (all ``n`` sides
    for the seed, the ``n - 1`` non-shared ones afterwards).  Cells are
    processed in creation order and the boundary is assembled sorted, so
    the result is deterministic.
    """
    if s < 0 or int(s) != s:
        raise DomainError("generation count must be a non-negative integer")
    s = int(s)
    n = poly.n
    projected = n * (n - 1) ** s
    if projected > max_sides:
        raise DepthLimitError(
            f"projected boundary side count {projected} exceeds cap {max_sides}"
        )
    seed = tuple(float(t) for t in vertex_fractions(poly))
    boundary = list(seed)
    generations = [(seed,)]
    frontier = [seed]
    frontier_is_root = True
    for _ in range(s):
        new_cells = []
        for verts in frontier:
            free = n if frontier_is_root else n - 1
            for i in range(free):
                child, images = _reflect_cell(verts, i, n)
                new_cells.append(child)
                boundary.extend(images)
        generations.append(tuple(new_cells))
        frontier = new_cells
        frontier_is_root = False
    bverts = np.sort(np.asarray(boundary))
    gaps = np.concatenate([np.diff(bverts), [1.0 + bverts[0] - bverts[-1]]])
    return Body(
        base=poly,
        generations=s,
        polygons=tuple(generations),
        boundary_angles=gaps,
    )
