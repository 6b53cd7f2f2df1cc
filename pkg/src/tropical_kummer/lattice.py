"""Principally polarized tropical abelian surfaces and their lattice geometry.

Coordinate conventions, fixed once for the whole package:

* Points are written in coordinates with respect to a fixed basis of the
  period lattice, so the period lattice is exactly ``Z^2`` and the
  polarization is ``Q(x, y) = x^T G y`` for a symmetric positive-definite
  rational Gram matrix ``G``.
* The integral structure (the dual lattice under ``Q``) has basis the
  columns of ``G^{-1}``; a point's dual-basis coordinates are ``G x``.
* ``u, v`` is the Lagrange-reduced basis with ``Q(u,u) <= Q(v,v)`` and
  ``Q(u,v) <= 0``; in the hexagonal case ``w = -u - v`` is the third
  Voronoi relevant vector.

Vertex numbering of the hexagonal Voronoi cell follows the facet cycle
``w, -v, u, -w, v, -u``: vertex ``m_i`` is the intersection of the facet
lines of the i-th and (i+1)-st entries, so ``m_1`` lies on the facets
defined by ``w`` and ``-v`` and ``m_{i+3} = -m_i``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotPositiveDefiniteError, ProductTypeError
from .exact import Mat2, Vec2, ZERO2, gram_eval, is_positive_definite

HALF = Fraction(1, 2)


class SurfaceClass(enum.Enum):
    IRREDUCIBLE = "irreducible"
    PRODUCT_TYPE = "product_type"


class CellKind(enum.Enum):
    HEXAGON = "hexagon"
    RECTANGLE = "rectangle"


@dataclass(frozen=True)
class PrincipallyPolarizedSurface:
    """A polarized surface: Gram matrix plus the dual-lattice basis G^{-1}."""

    gram: Mat2
    n_basis: Mat2

    def q(self, x: Vec2, y: Vec2) -> Fraction:
        return gram_eval(self.gram, x, y)

    def norm(self, x: Vec2) -> Fraction:
        return gram_eval(self.gram, x, x)


@dataclass(frozen=True)
class ReducedBasis:
    u: Vec2
    v: Vec2
    norms: tuple[Fraction, Fraction, Fraction]  # (Q(u,u), Q(v,v), Q(u,v))

    @property
    def w(self) -> Vec2:
        return -(self.u + self.v)


@dataclass(frozen=True)
class VoronoiCell:
    kind: CellKind
    relevant_vectors: tuple[Vec2, ...]
    vertices: tuple[Vec2, ...]


@dataclass(frozen=True)
class Cell:
    """One closed 2-cell of the hexagon subdivision."""

    kind: str  # "sigma" | "tau" | "rho"
    quadrilateral: int  # 1..6
    vertices: tuple[Vec2, ...]

    @property
    def label(self) -> str:
        return f"{self.kind}{self.quadrilateral}"

    def centroid(self) -> Vec2:
        n = len(self.vertices)
        sx = sum(p.x for p in self.vertices)
        sy = sum(p.y for p in self.vertices)
        return Vec2(Fraction(sx, n), Fraction(sy, n))

    def area(self) -> Fraction:
        """Shoelace area; vertices are stored in cyclic order."""
        total = Fraction(0)
        pts = self.vertices
        for i, p in enumerate(pts):
            q = pts[(i + 1) % len(pts)]
            total += p.x * q.y - q.x * p.y
        return abs(total) / 2


@dataclass(frozen=True)
class CellComplex:
    cells: tuple[Cell, ...]

    def by_label(self, label: str) -> Cell:
        for cell in self.cells:
            if cell.label == label:
                return cell
        raise KeyError(label)


def make_surface(gram) -> PrincipallyPolarizedSurface:
    """Build a surface from a symmetric positive-definite rational matrix."""
    g = gram if isinstance(gram, Mat2) else Mat2.from_rows(gram)
    if not is_positive_definite(g):  # raises NonSymmetricError when asymmetric
        raise NotPositiveDefiniteError(
            f"matrix {g.describe()} is not positive-definite"
        )
    return PrincipallyPolarizedSurface(gram=g, n_basis=g.inverse())


def _int_gram(gram: Mat2) -> tuple[int, int, int]:
    """A positive multiple of the Gram matrix with integer entries.

    Comparisons of Q-norms are scale-invariant, so every descent and
    reduction loop can run on (h11, h12, h22) with plain int arithmetic.
    """
    den = math.lcm(
        gram.a.denominator, gram.b.denominator, gram.d.denominator
    )
    return (int(gram.a * den), int(gram.b * den), int(gram.d * den))


def _lexpos(vec: tuple[int, int]) -> tuple[int, int]:
    """The representative of {vec, -vec} whose first nonzero entry is > 0."""
    x, y = vec
    if x < 0 or (x == 0 and y < 0):
        return (-x, -y)
    return (x, y)


@lru_cache(maxsize=None)
def lagrange_reduce(surface: PrincipallyPolarizedSurface) -> ReducedBasis:
    """Lagrange-Gauss reduction of the period lattice basis.

    The iteration is deterministic (round-half-up multiplier, fixed swap
    rule) and is followed by a sign normalization: Q(u,v) <= 0, and the
    leading nonzero coordinate of u is positive (of both u and v when
    Q(u,v) = 0, where the signs decouple).
    """
    h11, h12, h22 = _int_gram(surface.gram)

    def q(s: tuple[int, int], t: tuple[int, int]) -> int:
        return h11 * s[0] * t[0] + h12 * (s[0] * t[1] + s[1] * t[0]) + h22 * s[1] * t[1]

    u, v = (1, 0), (0, 1)
    if q(u, u) > q(v, v):
        u, v = v, u
    while True:
        a, b = q(u, v), q(u, u)
        k = (2 * a + b) // (2 * b)  # nearest integer to a/b, halves up
        vk = (v[0] - k * u[0], v[1] - k * u[1])
        if q(vk, vk) < b:
            u, v = vk, u
        else:
            v = vk
            break
    if q(u, v) > 0:
        v = (-v[0], -v[1])
    if q(u, v) == 0:
        u, v = _lexpos(u), _lexpos(v)
    elif u != _lexpos(u):
        u, v = (-u[0], -u[1]), (-v[0], -v[1])

    uu, vv = Vec2(u[0], u[1]), Vec2(v[0], v[1])
    norms = (surface.q(uu, uu), surface.q(vv, vv), surface.q(uu, vv))
    return ReducedBasis(u=uu, v=vv, norms=norms)


def classify(surface: PrincipallyPolarizedSurface) -> SurfaceClass:
    """Irreducible iff the Voronoi cell is a hexagon, i.e. Q(u,v) < 0."""
    if lagrange_reduce(surface).norms[2] < 0:
        return SurfaceClass.IRREDUCIBLE
    return SurfaceClass.PRODUCT_TYPE


def relevant_vectors(surface: PrincipallyPolarizedSurface) -> tuple[Vec2, ...]:
    rb = lagrange_reduce(surface)
    if classify(surface) is SurfaceClass.IRREDUCIBLE:
        w = rb.w
        return (rb.u, rb.v, w, -rb.u, -rb.v, -w)
    return (rb.u, rb.v, -rb.u, -rb.v)


def _facet_vertex(surface: PrincipallyPolarizedSurface, q1: Vec2, q2: Vec2) -> Vec2:
    """Intersection of the facet lines Q(m, q_i) = Q(q_i, q_i)/2, exact."""
    g = surface.gram
    r1, r2 = g.mul_vec(q1), g.mul_vec(q2)
    c1, c2 = surface.norm(q1) / 2, surface.norm(q2) / 2
    det = r1.x * r2.y - r1.y * r2.x
    return Vec2((c1 * r2.y - c2 * r1.y) / det, (r1.x * c2 - r2.x * c1) / det)


@lru_cache(maxsize=None)
def voronoi_cell(surface: PrincipallyPolarizedSurface) -> VoronoiCell:
    rb = lagrange_reduce(surface)
    u, v = rb.u, rb.v
    if classify(surface) is SurfaceClass.IRREDUCIBLE:
        w = rb.w
        facet_cycle = (w, -v, u, -w, v, -u)
        kind = CellKind.HEXAGON
        rel = (u, v, w, -u, -v, -w)
    else:
        facet_cycle = (-v, u, v, -u)
        kind = CellKind.RECTANGLE
        rel = (u, v, -u, -v)
    verts = tuple(
        _facet_vertex(surface, facet_cycle[i], facet_cycle[(i + 1) % len(facet_cycle)])
        for i in range(len(facet_cycle))
    )
    return VoronoiCell(kind=kind, relevant_vectors=rel, vertices=verts)


def in_voronoi_cell(surface: PrincipallyPolarizedSurface, y: Vec2) -> bool:
    """Membership in the closed cell: 2 Q(y, r) <= Q(r, r) for relevant r."""
    return all(
        2 * surface.q(y, r) <= surface.norm(r) for r in relevant_vectors(surface)
    )


@lru_cache(maxsize=None)
def _descent_data(surface: PrincipallyPolarizedSurface):
    """Integer data for the relevant-vector descent: (r, H r, r^T H r) triples."""
    h11, h12, h22 = _int_gram(surface.gram)
    data = []
    for r in relevant_vectors(surface):
        rx, ry = int(r.x), int(r.y)
        hr = (h11 * rx + h12 * ry, h12 * rx + h22 * ry)
        qr = rx * hr[0] + ry * hr[1]
        data.append(((rx, ry), hr, qr))
    return tuple(data)


def reduce_point(
    surface: PrincipallyPolarizedSurface, x: Vec2
) -> tuple[Vec2, Vec2]:
    """Closest-vector reduction: x = x0 + p with p integral and x0 in the cell.

    Iterated relevant-vector descent with unit steps in a fixed scan order;
    terminates because the Q-norm strictly decreases through a discrete set.
    Boundary points keep whichever representative the descent reaches first.
    """
    den = math.lcm(x.x.denominator, x.y.denominator)
    t0, t1 = int(x.x * den), int(x.y * den)
    data = _descent_data(surface)
    changed = True
    while changed:
        changed = False
        for (rx, ry), (hr0, hr1), qr in data:
            # Q(t/den - r) < Q(t/den) iff 2 <t, H r> > den * r^T H r.
            while 2 * (t0 * hr0 + t1 * hr1) > den * qr:
                t0 -= den * rx
                t1 -= den * ry
                changed = True
    x0 = Vec2(Fraction(t0, den), Fraction(t1, den))
    return x0, x - x0


def _quadrant_frames(surface: PrincipallyPolarizedSurface):
    """Per-quadrilateral data (a_i, b_i, m_i, n_i) for quadrants 1..3.

    Quadrilateral i is spanned by 0, a_i, m_i, b_i where a_i and b_i are the
    half relevant vectors on its two bounding rays; n_i is the midpoint of
    the chord joining the two hexagon vertices adjacent to m_i.
    """
    rb = lagrange_reduce(surface)
    u, v, w = rb.u, rb.v, rb.w
    m = voronoi_cell(surface).vertices
    half = Fraction(1, 2)
    a = (half * w, half * -v, half * u)
    b = (half * -v, half * u, half * -w)
    n = (
        half * (m[1] + m[5]),  # midpoint of m2, m6
        half * (m[0] + m[2]),  # midpoint of m1, m3
        half * (m[1] + m[3]),  # midpoint of m2, m4
    )
    return a, b, m, n


@lru_cache(maxsize=None)
def subdivide(surface: PrincipallyPolarizedSurface) -> CellComplex:
    """The 18-cell subdivision of the hexagonal Voronoi cell.

    Each quadrilateral Q_i = (0, a_i, m_i, b_i) splits into the triangle
    sigma = (0, n_i, a_i), the quadrilateral tau = (n_i, a_i, m_i, b_i), and
    the triangle rho = (0, n_i, b_i); quadrants 4..6 are the antipodes of
    quadrants 1..3.
    """
    if classify(surface) is not SurfaceClass.IRREDUCIBLE:
        raise ProductTypeError("rectangular Voronoi cells are not subdivided")
    a, b, m, n = _quadrant_frames(surface)
    cells: list[Cell] = []
    for i in range(3):
        quad = i + 1
        sigma = (ZERO2, n[i], a[i])
        tau = (n[i], a[i], m[i], b[i])
        rho = (ZERO2, n[i], b[i])
        cells.append(Cell("sigma", quad, sigma))
        cells.append(Cell("tau", quad, tau))
        cells.append(Cell("rho", quad, rho))
    for i in range(9):
        src = cells[i]
        cells.append(
            Cell(src.kind, src.quadrilateral + 3, tuple(-p for p in src.vertices))
        )
    return CellComplex(cells=tuple(cells))
