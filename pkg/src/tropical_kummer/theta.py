"""Exact evaluation of the four tropical theta functions of second order.

A characteristic (j1, j2) is indexed against the reduced basis (u, v):
the function value at x is

    min over integer a of  Q(a + s, a + s) - Q(x, x),
    with the shift  s = x + (j1*u + j2*v)/2.

The minimum is computed by closest-vector reduction of s; a brute-force
enumeration oracle with a global-minimum certificate is provided alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ProductTypeError, RadiusTooSmallError
from .exact import Vec2
from .lattice import (
    HALF,
    PrincipallyPolarizedSurface,
    SurfaceClass,
    _int_gram,
    classify,
    lagrange_reduce,
    reduce_point,
)


@dataclass(frozen=True)
class ThetaCharacteristic:
    j1: int
    j2: int

    def __post_init__(self):
        if self.j1 not in (0, 1) or self.j2 not in (0, 1):
            raise ValueError("characteristic indices must be 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "ThetaCharacteristic":
        if len(text) != 2 or any(ch not in "01" for ch in text):
            raise ValueError(f"characteristic must be two bits, got {text!r}")
        return cls(int(text[0]), int(text[1]))

    def __str__(self) -> str:
        return f"{self.j1}{self.j2}"


# Fixed numbering b0..b3 of the four second-order characteristics.
CHARACTERISTICS = (
    ThetaCharacteristic(0, 0),
    ThetaCharacteristic(1, 0),
    ThetaCharacteristic(0, 1),
    ThetaCharacteristic(1, 1),
)


@dataclass(frozen=True)
class ThetaValue:
    value: Fraction
    minimizer: Vec2  # a lattice point attaining the minimum


def char_vector(
    surface: PrincipallyPolarizedSurface, char: ThetaCharacteristic
) -> Vec2:
    """The integer vector j1*u + j2*v in the reduced basis."""
    rb = lagrange_reduce(surface)
    return Vec2(
        char.j1 * rb.u.x + char.j2 * rb.v.x, char.j1 * rb.u.y + char.j2 * rb.v.y
    )


def theta_eval(
    surface: PrincipallyPolarizedSurface, char: ThetaCharacteristic, x: Vec2
) -> ThetaValue:
    s = x + HALF * char_vector(surface, char)
    s0, p = reduce_point(surface, s)
    value = surface.norm(s0) - surface.norm(x)
    return ThetaValue(value=value, minimizer=-p)


def theta_eval_bruteforce(
    surface: PrincipallyPolarizedSurface,
    char: ThetaCharacteristic,
    x: Vec2,
    radius: int,
) -> ThetaValue:
    """Enumerate the box |a_i| <= radius and certify the minimum is global.

    The certificate uses the exact spectral lower bound
    Q(y, y) >= lam_low * ||y||_inf^2 with lam_low = det(G) / (G11 + G22):
    every lattice point outside the box must exceed the box minimum, else
    RadiusTooSmallError.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    s = x + HALF * char_vector(surface, char)
    h11, h12, h22 = _int_gram(surface.gram)
    den = math.lcm(s.x.denominator, s.y.denominator)
    t0, t1 = int(s.x * den), int(s.y * den)

    best = None
    best_a = (0, 0)
    for a1 in range(-radius, radius + 1):
        y0 = den * a1 + t0
        for a2 in range(-radius, radius + 1):
            y1 = den * a2 + t1
            num = h11 * y0 * y0 + 2 * h12 * y0 * y1 + h22 * y1 * y1
            if best is None or num < best:
                best = num
                best_a = (a1, a2)

    gram_den = math.lcm(
        surface.gram.a.denominator,
        surface.gram.b.denominator,
        surface.gram.d.denominator,
    )
    box_min = Fraction(best, gram_den * den * den)

    g = surface.gram
    lam_low = g.det() / (g.a + g.d)
    margin = radius + 1 - s.sup_norm()
    if margin <= 0 or lam_low * margin * margin <= box_min:
        raise RadiusTooSmallError(
            f"radius {radius} cannot certify the minimum for shift {s.as_tuple()}"
        )
    return ThetaValue(
        value=box_min - surface.norm(x), minimizer=Vec2(best_a[0], best_a[1])
    )


def theta_constants(
    surface: PrincipallyPolarizedSurface,
) -> tuple[Fraction, Fraction, Fraction]:
    """(theta_10, theta_01, theta_11) = (Q(u,u), Q(v,v), Q(w,w)) / 4."""
    if classify(surface) is not SurfaceClass.IRREDUCIBLE:
        raise ProductTypeError("theta constants are defined for hexagonal cells only")
    rb = lagrange_reduce(surface)
    quu, qvv, _ = rb.norms
    qww = surface.norm(rb.w)
    return (quu / 4, qvv / 4, qww / 4)
