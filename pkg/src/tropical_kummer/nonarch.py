"""Tropical descent data and tropicalized truncated theta series.

Fourier exponents are stored in coordinates with respect to the dual basis
induced by the polarization (the image of the period basis), where the
second-order descent map is twice the identity.  Pairing an exponent m with
a point v is then ``m . (G v)``, kept exact.

Only valuations are represented: for the even, symmetric normalization the
coefficient valuations are ``Q(u', u')`` and the lifting constant
contributes ``Q(c, c)/4`` for the characteristic representative ``c``.
Characteristics use the same reduced-basis indexing as the direct theta
evaluation, so the tropicalized series and `theta_eval` agree pointwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptySupportError, NonSymmetricError
from .exact import Mat2, Vec2, gram_eval
from .lattice import PrincipallyPolarizedSurface
from .theta import ThetaCharacteristic, char_vector


@dataclass(frozen=True)
class TropicalDescentDatum:
    """A pair (lambda, gamma) satisfying the descent cocycle identity.

    `lambda_matrix` holds the dual-basis coordinates of the images of the
    period basis; `pairing` is the symmetric bilinear form
    B(s, t) = <lambda(t), s> as a matrix in period coordinates; `ell` is the
    linear-form part (zero in every supported evaluation path).
    """

    lambda_matrix: tuple[tuple[int, int], tuple[int, int]]
    pairing: Mat2
    ell: Vec2

    def gamma(self, up: Vec2) -> Fraction:
        return gram_eval(self.pairing, up, up) / 2 - (
            self.ell.x * up.x + self.ell.y * up.y
        )

    def cocycle_defect(self, u1: Vec2, u2: Vec2) -> Fraction:
        """gamma(u1+u2) - gamma(u1) - gamma(u2) - <lambda(u2), u1>; zero always."""
        return (
            self.gamma(u1 + u2)
            - self.gamma(u1)
            - self.gamma(u2)
            - gram_eval(self.pairing, u1, u2)
        )

    def is_even(self) -> bool:
        return self.ell == Vec2(0, 0)


def descent_datum(surface: PrincipallyPolarizedSurface) -> TropicalDescentDatum:
    """The datum of the second-order pair (2Q, 0): gamma(u') = Q(u', u')."""
    g = surface.gram
    return TropicalDescentDatum(
        lambda_matrix=((2, 0), (0, 2)),
        pairing=Mat2(2 * g.a, 2 * g.b, 2 * g.c, 2 * g.d),
        ell=Vec2(0, 0),
    )


def general_descent_datum(
    surface: PrincipallyPolarizedSurface,
    lambda_matrix: tuple[tuple[int, int], tuple[int, int]],
    ell: Vec2,
) -> TropicalDescentDatum:
    """The datum of an arbitrary pair (form, ell) given by its dual map.

    Exposed for completeness; series evaluation supports only the even
    second-order case above.
    """
    g = surface.gram
    lam = Mat2(
        lambda_matrix[0][0],
        lambda_matrix[0][1],
        lambda_matrix[1][0],
        lambda_matrix[1][1],
    )
    pairing = g.mul_mat(lam)
    if not pairing.is_symmetric():
        raise NonSymmetricError("the induced bilinear form must be symmetric")
    return TropicalDescentDatum(
        lambda_matrix=lambda_matrix, pairing=pairing, ell=ell
    )


@dataclass(frozen=True)
class FormalThetaSeries:
    """Finite Fourier support with exact valuations, plus the lifting shift."""

    surface: PrincipallyPolarizedSurface
    support: tuple[tuple[tuple[int, int], Fraction], ...]
    constant_shift: Fraction
    char: ThetaCharacteristic
    cutoff: int


def build_series(
    surface: PrincipallyPolarizedSurface,
    char: ThetaCharacteristic,
    cutoff: int,
) -> FormalThetaSeries:
    """Truncate the theta series of a characteristic to a cutoff box.

    Term for u' in the box: exponent c + 2u' (dual coordinates of the class
    representative plus twice the lattice point), valuation
    Q(u', u') + Q(c, u').
    """
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    c = char_vector(surface, char)
    cx, cy = int(c.x), int(c.y)
    terms = []
    for i in range(-cutoff, cutoff + 1):
        for j in range(-cutoff, cutoff + 1):
            up = Vec2(i, j)
            exponent = (cx + 2 * i, cy + 2 * j)
            valuation = surface.norm(up) + surface.q(c, up)
            terms.append((exponent, valuation))
    return FormalThetaSeries(
        surface=surface,
        support=tuple(terms),
        constant_shift=surface.q(c, c) / 4,
        char=char,
        cutoff=cutoff,
    )


def tropicalize_series(series: FormalThetaSeries, v: Vec2) -> Fraction:
    """constant_shift + min over the support of (<exponent, v> + valuation)."""
    if not series.support:
        raise EmptySupportError("series has empty support")
    gv = series.surface.gram.mul_vec(v)
    # Clear denominators once so the minimum runs on plain integers.
    den = math.lcm(
        gv.x.denominator,
        gv.y.denominator,
        *(val.denominator for _, val in series.support),
    )
    gx, gy = int(gv.x * den), int(gv.y * den)
    best = min(
        ex * gx + ey * gy + int(val * den)
        for (ex, ey), val in series.support
    )
    return series.constant_shift + Fraction(best, den)


def safe_cutoff(
    surface: PrincipallyPolarizedSurface,
    char: ThetaCharacteristic,
    region_bound: Fraction,
) -> int:
    """Smallest certified cutoff for all evaluation points ``|v|_inf <= bound``.

    The minimized quadratic at u' = 0 is at most
    M = (sum |G_ij|) * (bound + |c|_inf / 2)^2, while any u' outside the
    cutoff-R box keeps it above lam_low * (R + 1 - bound - |c|_inf / 2)^2
    with lam_low = det(G) / (G11 + G22); R is grown until the latter
    exceeds the former.
    """
    bound = Fraction(region_bound)
    if bound < 0:
        raise ValueError("region_bound must be nonnegative")
    g = surface.gram
    c = char_vector(surface, char)
    reach = bound + c.sup_norm() / 2
    weight = abs(g.a) + abs(g.b) + abs(g.c) + abs(g.d)
    upper = weight * reach * reach
    lam_low = g.det() / (g.a + g.d)
    radius = 1
    while True:
        margin = radius + 1 - reach
        if margin > 0 and lam_low * margin * margin > upper:
            return radius
        radius += 1
