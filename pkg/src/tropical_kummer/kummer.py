"""The theta embedding into tropical P^3 and the Kummer quartic parallelepiped.

The ambient projective coordinates are ordered by the characteristic
numbering b0=(0,0), b1=(1,0), b2=(0,1), b3=(1,1); affine values use the
chart (x1,x2,x3) <-> (0 : x1 : x2 : x3), so

    psi(x) = (th[10](x) - th[00](x), th[01](x) - th[00](x), th[11](x) - th[00](x)).

The quartic's eight vertices are the orbit of the theta-constant point
under the group generated by the double-transposition coordinate swaps and
the min-plus Cremona involution x -> -x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import (
    InternalInconsistencyError,
    NotAffineOnCellError,
    ProductTypeError,
)
from .exact import Vec2, Vec3, is_unimodular, to_fraction
from .lattice import (
    Cell,
    HALF,
    PrincipallyPolarizedSurface,
    SurfaceClass,
    classify,
    lagrange_reduce,
    reduce_point,
    subdivide,
)
from .theta import CHARACTERISTICS, ThetaCharacteristic, theta_constants, theta_eval

# The Klein four-group inside S4, as involutive index permutations.
V4 = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)

VERTEX_LABELS = (
    "tau_0",
    "tau_1",
    "tau_2",
    "tau_3",
    "tau_tilde_0",
    "tau_tilde_1",
    "tau_tilde_2",
    "tau_tilde_3",
)


@dataclass(frozen=True)
class FacePlane:
    normal: tuple[int, int, int]
    offset: Fraction
    vertex_ids: tuple[str, str, str, str]
    source_cells: tuple[str, ...]

    def evaluate(self, p: Vec3) -> Fraction:
        n = self.normal
        return n[0] * p.x + n[1] * p.y + n[2] * p.z


@dataclass(frozen=True)
class KummerQuartic:
    vertices: tuple[Vec3, ...]  # ordered as VERTEX_LABELS
    faces: tuple[FacePlane, ...]
    theta_constants: tuple[Fraction, Fraction, Fraction]

    def vertex(self, label: str) -> Vec3:
        return self.vertices[VERTEX_LABELS.index(label)]


@dataclass(frozen=True)
class AffinePiece:
    cell: Cell
    linear_part: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    offset: Vec3
    unimodular: bool


@dataclass(frozen=True)
class EquivalentPlus:
    shift: Vec2


@dataclass(frozen=True)
class EquivalentMinus:
    shift: Vec2


@dataclass(frozen=True)
class Distinct:
    witness: ThetaCharacteristic


Verdict = Union[EquivalentPlus, EquivalentMinus, Distinct]


def psi_eval(surface: PrincipallyPolarizedSurface, x: Vec2) -> Vec3:
    """The chart triple of theta differences at x.

    Differences of second-order theta values are invariant under integer
    translation (the quasi-periodicity anomaly cancels), so x is reduced
    into the Voronoi cell first.
    """
    x0, _ = reduce_point(surface, x)
    t00, t10, t01, t11 = (
        theta_eval(surface, char, x0).value for char in CHARACTERISTICS
    )
    return Vec3(t10 - t00, t01 - t00, t11 - t00)


def g_action(
    element: tuple[Sequence[int], bool], point: Sequence[Fraction]
) -> Vec3:
    """Apply (coordinate swap, optional sign flip) to a projective 4-tuple.

    Returns the result in the normalized chart (first coordinate
    subtracted off).
    """
    perm, iota = element
    if sorted(perm) != [0, 1, 2, 3]:
        raise ValueError(f"not a coordinate permutation: {perm!r}")
    coords = [to_fraction(c) for c in point]
    if len(coords) != 4:
        raise ValueError("expected a projective 4-tuple")
    moved = [coords[perm[i]] for i in range(4)]
    if iota:
        moved = [-c for c in moved]
    return Vec3(moved[1] - moved[0], moved[2] - moved[0], moved[3] - moved[0])


def _face_table(
    th: tuple[Fraction, Fraction, Fraction]
) -> tuple[FacePlane, ...]:
    t10, t01, t11 = th
    return (
        FacePlane(
            (1, 1, -1),
            t10 + t01 - t11,
            ("tau_0", "tau_3", "tau_tilde_1", "tau_tilde_2"),
            ("sigma1", "rho3", "sigma4", "rho6"),
        ),
        FacePlane(
            (1, 1, -1),
            -t10 - t01 + t11,
            ("tau_1", "tau_2", "tau_tilde_0", "tau_tilde_3"),
            ("tau2", "tau5"),
        ),
        FacePlane(
            (1, -1, -1),
            -t10 + t01 + t11,
            ("tau_2", "tau_3", "tau_tilde_0", "tau_tilde_1"),
            ("tau1", "tau4"),
        ),
        FacePlane(
            (1, -1, -1),
            t10 - t01 - t11,
            ("tau_0", "tau_1", "tau_tilde_2", "tau_tilde_3"),
            ("rho2", "sigma3", "rho5", "sigma6"),
        ),
        FacePlane(
            (1, -1, 1),
            t10 - t01 + t11,
            ("tau_0", "tau_2", "tau_tilde_1", "tau_tilde_3"),
            ("rho1", "sigma2", "rho4", "sigma5"),
        ),
        FacePlane(
            (1, -1, 1),
            -t10 + t01 - t11,
            ("tau_1", "tau_3", "tau_tilde_0", "tau_tilde_2"),
            ("tau3", "tau6"),
        ),
    )


def _parallelogram_frame(points: Sequence[Vec3]) -> tuple[Vec3, Vec3, Vec3]:
    """Identify (base, edge1, edge2) among four parallelogram vertices."""
    a = points[0]
    rest = list(points[1:])
    for i in range(3):
        opposite = rest[i]
        others = [rest[j] for j in range(3) if j != i]
        if a + opposite == others[0] + others[1]:
            return a, others[0] - a, others[1] - a
    raise InternalInconsistencyError(f"points {points} do not form a parallelogram")


def _validate_quartic(
    vertices: tuple[Vec3, ...], faces: tuple[FacePlane, ...]
) -> None:
    if len(set(vertices)) != 8:
        raise InternalInconsistencyError("vertex orbit is degenerate")
    vmap = dict(zip(VERTEX_LABELS, vertices))
    for face in faces:
        for vid in face.vertex_ids:
            if face.evaluate(vmap[vid]) != face.offset:
                raise InternalInconsistencyError(
                    f"vertex {vid} misses face {face.normal}={face.offset}"
                )
    # Parallelepiped: base tau_tilde_0 with edges to tau_3, tau_2, tau_1.
    base = vmap["tau_tilde_0"]
    e1, e2, e3 = (vmap[f"tau_{i}"] - base for i in (3, 2, 1))
    spanned = {
        base + i * e1 + j * e2 + k * e3
        for i in (0, 1)
        for j in (0, 1)
        for k in (0, 1)
    }
    if spanned != set(vertices):
        raise InternalInconsistencyError("vertices do not span a parallelepiped")


@lru_cache(maxsize=None)
def build_quartic(surface: PrincipallyPolarizedSurface) -> KummerQuartic:
    """Vertices as the full group orbit of the theta-constant point."""
    if classify(surface) is not SurfaceClass.IRREDUCIBLE:
        raise ProductTypeError("product-type surfaces have no Kummer quartic")
    th = theta_constants(surface)
    p0 = (Fraction(0), th[0], th[1], th[2])
    orbit = [g_action((perm, False), p0) for perm in V4]
    orbit += [g_action((perm, True), p0) for perm in V4]
    vertices = tuple(orbit)
    faces = _face_table(th)
    _validate_quartic(vertices, faces)
    return KummerQuartic(vertices=vertices, faces=faces, theta_constants=th)


def contains(quartic: KummerQuartic, p: Vec3) -> bool:
    """Membership in the union of the six closed faces, exact."""
    vmap = dict(zip(VERTEX_LABELS, quartic.vertices))
    for face in quartic.faces:
        if face.evaluate(p) != face.offset:
            continue
        base, edge1, edge2 = _parallelogram_frame(
            [vmap[vid] for vid in face.vertex_ids]
        )
        coeffs = _solve_in_plane(p - base, edge1, edge2)
        if coeffs is None:
            continue
        alpha, beta = coeffs
        if 0 <= alpha <= 1 and 0 <= beta <= 1:
            return True
    return False


def _solve_in_plane(
    target: Vec3, edge1: Vec3, edge2: Vec3
) -> tuple[Fraction, Fraction] | None:
    """Solve target = alpha*edge1 + beta*edge2 exactly, or None if insoluble."""
    pairs = ((0, 1), (0, 2), (1, 2))
    t = target.as_tuple()
    e1 = edge1.as_tuple()
    e2 = edge2.as_tuple()
    for i, j in pairs:
        det = e1[i] * e2[j] - e1[j] * e2[i]
        if det == 0:
            continue
        alpha = (t[i] * e2[j] - t[j] * e2[i]) / det
        beta = (e1[i] * t[j] - e1[j] * t[i]) / det
        # Verify on the full 3-vector; the plane test alone is not enough.
        recon = alpha * edge1 + beta * edge2
        return (alpha, beta) if recon == target else None
    return None


def injectivity_check(
    surface: PrincipallyPolarizedSurface, y: Vec2, yp: Vec2
) -> Verdict:
    """Decide yp = +-y modulo Z^2 and cross-check against the embedding.

    The verdict and the equality of all four theta differences are computed
    independently; a mismatch between the two would falsify the injectivity
    criterion and raises InternalInconsistencyError.
    """
    if classify(surface) is not SurfaceClass.IRREDUCIBLE:
        raise ProductTypeError("the injectivity criterion needs a hexagonal cell")
    image_y = psi_eval(surface, y)
    image_yp = psi_eval(surface, yp)

    verdict: Verdict
    if (yp - y).is_integral():
        verdict = EquivalentPlus(shift=yp - y)
    elif (yp + y).is_integral():
        verdict = EquivalentMinus(shift=yp + y)
    else:
        witness = None
        for char, a, b in zip(
            CHARACTERISTICS[1:], image_y.as_tuple(), image_yp.as_tuple()
        ):
            if a != b:
                witness = char
                break
        if witness is None:
            raise InternalInconsistencyError(
                f"{y.as_tuple()} and {yp.as_tuple()} are inequivalent but share "
                f"the image {image_y.as_tuple()}"
            )
        verdict = Distinct(witness=witness)

    if isinstance(verdict, (EquivalentPlus, EquivalentMinus)) and image_y != image_yp:
        raise InternalInconsistencyError(
            f"equivalent points {y.as_tuple()}, {yp.as_tuple()} have distinct images"
        )
    return verdict


def _interior_points(cell: Cell) -> list[Vec2]:
    """Four rational interior points, the first three affinely independent."""
    c = cell.centroid()
    points = [c]
    for v in cell.vertices[:3]:
        points.append(HALF * (c + v))
    return points


def _fit_affine(
    points: Sequence[Vec2], values: Sequence[Vec3]
) -> tuple[Vec3, Vec3, Vec3]:
    """Fit values = A*point + d from three affinely independent samples.

    Returns A as the images of the two coordinate directions (its columns,
    each a Vec3) plus the offset d.
    """
    p0, p1, p2 = points
    d1, d2 = p1 - p0, p2 - p0
    det = d1.x * d2.y - d1.y * d2.x
    if det == 0:
        raise NotAffineOnCellError("sample points are affinely dependent")
    w1 = values[1] - values[0]
    w2 = values[2] - values[0]
    # Columns of A solve A [d1 d2] = [w1 w2].
    col1 = Fraction(1, 1) / det * (d2.y * w1 - d1.y * w2)
    col2 = Fraction(1, 1) / det * (d1.x * w2 - d2.x * w1)
    offset = values[0] - Vec3(
        col1.x * p0.x + col2.x * p0.y,
        col1.y * p0.x + col2.y * p0.y,
        col1.z * p0.x + col2.z * p0.y,
    )
    return col1, col2, offset


def _apply_affine(col1: Vec3, col2: Vec3, offset: Vec3, p: Vec2) -> Vec3:
    return Vec3(
        col1.x * p.x + col2.x * p.y + offset.x,
        col1.y * p.x + col2.y * p.y + offset.y,
        col1.z * p.x + col2.z * p.y + offset.z,
    )


def affine_pieces(
    surface: PrincipallyPolarizedSurface,
) -> tuple[AffinePiece, ...]:
    """Fit the embedding on every subdivision cell and certify unimodularity.

    The affine map is recovered from evaluations at interior points, checked
    on a fourth point and on every cell vertex, and its linear part is
    converted to dual-lattice coordinates, where it must be integral.
    """
    complex_ = subdivide(surface)  # raises ProductTypeError on rectangles
    nb = surface.n_basis
    pieces = []
    for cell in complex_.cells:
        pts = _interior_points(cell)
        vals = [psi_eval(surface, p) for p in pts]
        col1, col2, offset = _fit_affine(pts[:3], vals[:3])
        check_pts = pts[3:] + list(cell.vertices)
        check_vals = vals[3:] + [psi_eval(surface, p) for p in cell.vertices]
        for p, expected in zip(check_pts, check_vals):
            if _apply_affine(col1, col2, offset, p) != expected:
                raise NotAffineOnCellError(f"cell {cell.label} is not affine")
        rows = []
        for c1, c2 in zip(col1.as_tuple(), col2.as_tuple()):
            # Row of A times n_basis: the linear part in dual coordinates.
            r1 = c1 * nb.a + c2 * nb.c
            r2 = c1 * nb.b + c2 * nb.d
            if r1.denominator != 1 or r2.denominator != 1:
                raise NotAffineOnCellError(
                    f"cell {cell.label}: linear part {r1}, {r2} is not integral"
                )
            rows.append((int(r1), int(r2)))
        pieces.append(
            AffinePiece(
                cell=cell,
                linear_part=tuple(rows),
                offset=offset,
                unimodular=is_unimodular(rows),
            )
        )
    return tuple(pieces)


def _primitive_normal(
    rows: Sequence[tuple[int, int]]
) -> tuple[int, int, int]:
    """Integer normal to the column space of a rank-2 3x2 integer matrix."""
    (a1, b1), (a2, b2), (a3, b3) = rows
    n = (
        a2 * b3 - a3 * b2,
        a3 * b1 - a1 * b3,
        a1 * b2 - a2 * b1,
    )
    g = math.gcd(math.gcd(abs(n[0]), abs(n[1])), abs(n[2]))
    if g == 0:
        raise InternalInconsistencyError("linear part has rank < 2")
    n = tuple(c // g for c in n)
    for c in n:
        if c != 0:
            return n if c > 0 else tuple(-x for x in n)
    raise InternalInconsistencyError("zero normal")


def coplanarity_report(
    surface: PrincipallyPolarizedSurface,
) -> dict[FacePlane, tuple[str, ...]]:
    """Group the 18 affine-piece images into the six face planes.

    The grouping computed from the fitted maps must reproduce the faces'
    (normal, offset, source-cell) table exactly.
    """
    quartic = build_quartic(surface)
    groups: dict[tuple[tuple[int, int, int], Fraction], list[str]] = {}
    for piece in affine_pieces(surface):
        normal = _primitive_normal(piece.linear_part)
        offset = (
            normal[0] * piece.offset.x
            + normal[1] * piece.offset.y
            + normal[2] * piece.offset.z
        )
        groups.setdefault((normal, offset), []).append(piece.cell.label)

    report: dict[FacePlane, tuple[str, ...]] = {}
    for face in quartic.faces:
        key = (face.normal, face.offset)
        if key not in groups:
            raise InternalInconsistencyError(
                f"no affine piece lands on face {face.normal}={face.offset}"
            )
        cells = tuple(sorted(groups.pop(key)))
        if cells != tuple(sorted(face.source_cells)):
            raise InternalInconsistencyError(
                f"face {face.normal}={face.offset}: cells {cells} != "
                f"{tuple(sorted(face.source_cells))}"
            )
        report[face] = cells
    if groups:
        raise InternalInconsistencyError(f"extra image planes: {sorted(groups)}")
    return report


def two_torsion_images(
    surface: PrincipallyPolarizedSurface,
) -> tuple[tuple[Vec2, Vec3, bool], ...]:
    """The embedding at the four half-period representatives.

    Each entry is (representative, image, image-is-a-parallelepiped-vertex).
    """
    if classify(surface) is not SurfaceClass.IRREDUCIBLE:
        raise ProductTypeError("two-torsion report needs a hexagonal cell")
    rb = lagrange_reduce(surface)
    quartic = build_quartic(surface)
    vertex_set = set(quartic.vertices)
    reps = (
        Vec2(0, 0),
        HALF * rb.u,
        HALF * rb.v,
        HALF * (rb.u + rb.v),
    )
    out = []
    for rep in reps:
        image = psi_eval(surface, rep)
        out.append((rep, image, image in vertex_set))
    return tuple(out)


def vertex_sign_diagnostics(surface: PrincipallyPolarizedSurface) -> dict:
    """Cross-check the sign of the third coordinate of the swap-(0 3) vertex.

    The closed-form vertex display admits two candidate readings for tau_3,
    differing in the sign of the last coordinate; only one can satisfy the
    three face planes through tau_3.  The orbit computation decides.
    """
    quartic = build_quartic(surface)
    t10, t01, t11 = quartic.theta_constants
    orbit_vertex = quartic.vertex("tau_3")
    candidates = {
        "minus": Vec3(t01 - t11, t10 - t11, -t11),
        "plus": Vec3(t01 - t11, t10 - t11, t11),
    }
    faces_through = [f for f in quartic.faces if "tau_3" in f.vertex_ids]
    consistency = {
        name: all(f.evaluate(p) == f.offset for f in faces_through)
        for name, p in candidates.items()
    }
    consistent = [name for name, ok in consistency.items() if ok]
    if len(consistent) != 1 or candidates[consistent[0]] != orbit_vertex:
        raise InternalInconsistencyError(
            "orbit vertex does not single out one closed-form reading"
        )
    return {
        "orbit_vertex": orbit_vertex,
        "consistent_reading": consistent[0],
        "plane_consistency": consistency,
    }
