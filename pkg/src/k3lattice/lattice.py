"""Rank-2 polarized K3 Picard lattices with exact integer arithmetic.

The ambient lattice is Z*H + Z*F with intersection matrix, in the (H, F)
basis,

    [[2g-2, d],
     [d,    0]]

where g is the sectional genus of the polarization H and d = H.F is the
degree of the elliptic class F.  Valid parameters are g >= 3 and
3 <= d <= floor((g+3)/2).  Everything downstream (cohomology, Clifford
index, ACM classification, stability) reduces to arithmetic in this
lattice, so this module also computes the special classes that control
the geometry: the unique (-2)-class when d | g, the primitive isotropic
rays, and the effective/nef cones.

All values are plain Python integers, so results are exact.  Inputs are
capped at 10**6 per coefficient (an OverflowError is raised beyond the
cap); within the caps every intersection product fits in 64 bits, and
Python's unbounded integers keep intermediate reductions exact even past
that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

COEFF_CAP = 10**6


class DivClass(NamedTuple):
    """Integer divisor class n*H + m*F."""

    n: int
    m: int

    def __add__(self, other):
        return DivClass(self.n + other.n, self.m + other.m)

    def __sub__(self, other):
        return DivClass(self.n - other.n, self.m - other.m)

    def __neg__(self):
        return DivClass(-self.n, -self.m)

    def __mul__(self, k):
        return DivClass(self.n * k, self.m * k)

    __rmul__ = __mul__

    def __str__(self):
        return format_class(self)


H = DivClass(1, 0)
F = DivClass(0, 1)
ZERO = DivClass(0, 0)


def format_class(c: DivClass) -> str:
    """Render n*H + m*F in the usual shorthand, e.g. 'H-2F' or '3F'."""
    if c == ZERO:
        return "0"
    parts = []
    for coeff, sym in ((c.n, "H"), (c.m, "F")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else ("+" if parts else "")
        mag = abs(coeff)
        parts.append(f"{sign}{mag if mag != 1 else ''}{sym}")
    return "".join(parts)


def is_primitive(c: DivClass) -> bool:
    """gcd(|n|, |m|) == 1, with gcd(0, k) = |k|."""
    return math.gcd(abs(c.n), abs(c.m)) == 1


def _check_coeffs(*classes: DivClass):
    for c in classes:
        if abs(c.n) > COEFF_CAP or abs(c.m) > COEFF_CAP:
            raise OverflowError(
                f"class coefficients {tuple(c)} exceed the cap {COEFF_CAP}"
            )


@dataclass(frozen=True)
class PolarizedLattice:
    """The pair (g, d) fixing the intersection form.

    g: sectional genus of H (H^2 = 2g - 2), g >= 3.
    d: degree H.F of the elliptic class, 3 <= d <= floor((g+3)/2).
    """

    g: int
    d: int

    def __post_init__(self):
        if self.g > COEFF_CAP or self.d > COEFF_CAP:
            raise OverflowError(f"(g, d) = ({self.g}, {self.d}) exceeds the cap {COEFF_CAP}")
        if self.g < 3 or not 3 <= self.d <= (self.g + 3) // 2:
            raise ValueError(
                f"invalid (g, d) = ({self.g}, {self.d}): need g ≥ 3 and "
                f"3 ≤ d ≤ ⌊(g+3)/2⌋"
            )

    @property
    def h_square(self) -> int:
        return 2 * self.g - 2

    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2 * self.g - 2, self.d), (self.d, 0))


@dataclass(frozen=True)
class ConeData:
    """Extremal rays and special classes of the effective/nef cones.

    eff_rays generate the cone of effective classes; a class is nef iff
    it pairs nonnegatively with both of them.  nef_rays generate the nef
    cone.  isotropic_primitives are the two effective primitive classes
    of self-intersection zero (the boundary rays of the positive cone);
    when d | g the second one is effective but not nef.
    """

    minus_two_class: Optional[DivClass]
    isotropic_primitives: tuple[DivClass, DivClass]
    eff_rays: tuple[DivClass, DivClass]
    nef_rays: tuple[DivClass, DivClass]


def intersect(lat: PolarizedLattice, a: DivClass, b: DivClass) -> int:
    """Bilinear intersection pairing a.b."""
    _check_coeffs(a, b)
    return a.n * b.n * (2 * lat.g - 2) + (a.n * b.m + a.m * b.n) * lat.d


def square(lat: PolarizedLattice, a: DivClass) -> int:
    return intersect(lat, a, a)


def deg_h(lat: PolarizedLattice, a: DivClass) -> int:
    """Degree a.H with respect to the polarization."""
    return intersect(lat, a, H)


@lru_cache(maxsize=None)
def minus_two_classes(lat: PolarizedLattice) -> Optional[tuple[DivClass, DivClass]]:
    """The pair of solutions of x.x = -2, if any.

    x.x = -2 means n*(n*(g-1) + m*d) = -1, forcing n = +-1, so a solution
    exists iff d | g and then equals +-(H - (g/d)F).  The class with
    positive H-degree is listed first.
    """
    g, d = lat.g, lat.d
    if g % d != 0:
        return None
    gamma = DivClass(1, -(g // d))
    return (gamma, -gamma)


@lru_cache(maxsize=None)
def elliptic_pencil_classes(lat: PolarizedLattice) -> tuple[DivClass, ...]:
    """Primitive nef isotropic classes of positive degree (elliptic pencils).

    F always qualifies.  A second pencil R = (d/e)H - ((g-1)/e)F with
    e = gcd(g-1, d) exists exactly when d does not divide g; when d | g
    that class pairs negatively with the (-2)-class and is not nef.
    """
    g, d = lat.g, lat.d
    if g % d == 0:
        return (F,)
    e = math.gcd(g - 1, d)
    return (F, DivClass(d // e, -((g - 1) // e)))


def _second_isotropic(lat: PolarizedLattice) -> DivClass:
    e = math.gcd(lat.g - 1, lat.d)
    return DivClass(lat.d // e, -((lat.g - 1) // e))


@lru_cache(maxsize=None)
def cone_data(lat: PolarizedLattice) -> ConeData:
    g, d = lat.g, lat.d
    r = _second_isotropic(lat)
    mt = minus_two_classes(lat)
    if mt is None:
        return ConeData(None, (F, r), (F, r), (F, r))
    gamma = mt[0]
    # primitive ray of gamma-perp on the H side: x.gamma = n(g-2) + m*d = 0
    e = math.gcd(g - 2, d)
    s = DivClass(d // e, -((g - 2) // e))
    return ConeData(gamma, (F, r), (F, gamma), (F, s))


def is_nef(lat: PolarizedLattice, x: DivClass) -> bool:
    """x is nef iff it pairs nonnegatively with both effective rays."""
    return all(intersect(lat, x, p) >= 0 for p in cone_data(lat).eff_rays)


def in_effective_cone(lat: PolarizedLattice, x: DivClass) -> bool:
    """Membership in the effective cone (nonnegative against the nef rays).

    Agrees with h0(x) > 0 for every class: the effective cone is dual to
    the nef cone, and in this family every integral point of it carries
    a section.
    """
    if x == ZERO:
        return True
    return all(intersect(lat, x, p) >= 0 for p in cone_data(lat).nef_rays)


def classes_under(lat: PolarizedLattice, upper: DivClass) -> list[DivClass]:
    """All integral x with 0 <= x.N <= upper.N for both nef rays N.

    Contains every class x such that x and upper - x are both effective
    (each pairs nonnegatively with every nef class).  The two nef rays
    are independent so the region is a bounded lattice polytope; it is
    enumerated exhaustively and returned in lexicographic (n, m) order.
    """
    rays = cone_data(lat).nef_rays
    # x.N = n*(H.N) + m*(F.N) in the (H, F) basis
    coeffs = [(deg_h(lat, p), intersect(lat, F, p), intersect(lat, upper, p)) for p in rays]
    (a1, b1, u1), (a2, b2, u2) = coeffs
    if u1 < 0 or u2 < 0:
        return []
    det = a1 * b2 - a2 * b1
    assert det != 0
    # n-range from the polytope vertices in (x.N1, x.N2) coordinates
    corners = [
        Fraction(v1 * b2 - v2 * b1, det) for v1 in (0, u1) for v2 in (0, u2)
    ]
    out = []
    for n in range(math.ceil(min(corners)), math.floor(max(corners)) + 1):
        lo, hi = None, None
        feasible = True
        for a, b, u in coeffs:
            if b == 0:
                if not 0 <= a * n <= u:
                    feasible = False
                    break
                continue
            bounds = (Fraction(-a * n, b), Fraction(u - a * n, b))
            blo, bhi = min(bounds), max(bounds)
            lo = blo if lo is None else max(lo, blo)
            hi = bhi if hi is None else min(hi, bhi)
        if not feasible or lo is None:
            continue
        for m in range(math.ceil(lo), math.floor(hi) + 1):
            out.append(DivClass(n, m))
    return out
