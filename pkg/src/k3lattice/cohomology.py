"""Exact line-bundle cohomology on the rank-2 lattice.

h0 is computed by a deterministic reduction: strip the unique positive
(-2)-class off the fixed part while it pairs negatively, then read the
dimension off the nef moving part (Riemann-Roch for big classes,
pencil count for isotropic ones).  h2 comes from duality, h1 from the
Euler characteristic; h1 is asserted nonnegative rather than assumed,
so a bug in h0 surfaces as an InvariantError instead of a wrong number.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .lattice import (
    F,
    H,
    DivClass,
    PolarizedLattice,
    _check_coeffs,
    cone_data,
    elliptic_pencil_classes,
    intersect,
    is_nef,
    minus_two_classes,
    square,
)


class InvariantError(RuntimeError):
    """Internal consistency violation (negative h1): a bug, not an input error."""


@dataclass(frozen=True)
class CohomologyVector:
    h0: int
    h1: int
    h2: int
    chi: int


class PencilKind(enum.Enum):
    NOT_A_PENCIL = "not_a_pencil"
    ELLIPTIC_PENCIL_MULTIPLE = "elliptic_pencil_multiple"
    HYPERELLIPTIC_EXCEPTION = "hyperelliptic_exception"


@dataclass(frozen=True)
class PositivityReport:
    effective: bool
    nef: bool
    base_point_free: bool
    very_ample: bool
    pencil_kind: PencilKind
    pencil_multiple: Optional[int] = None


@lru_cache(maxsize=None)
def _reduction_data(lat: PolarizedLattice):
    """Constants used by the h0 hot loop.

    Returns (q, hr, fr): q = g/d when the (-2)-class H - qF exists else
    None; (hr, fr) = pairings of the second effective ray with H and F
    when there is no (-2)-class (then nef means nonneg against F and R).
    """
    if minus_two_classes(lat) is not None:
        return (lat.g // lat.d, 0, 0)
    r = cone_data(lat).eff_rays[1]
    return (None, intersect(lat, H, r), intersect(lat, F, r))


def h0(lat: PolarizedLattice, c: DivClass) -> int:
    """Dimension of the space of global sections of n*H + m*F."""
    _check_coeffs(c)
    n, m = c
    if n == 0 and m == 0:
        return 1
    g, d = lat.g, lat.d
    g1 = g - 1
    dh = n * (2 * g1) + m * d
    if dh <= 0:
        # H is ample: only the trivial class has sections at degree <= 0
        return 0
    q, hr, fr = _reduction_data(lat)
    if q is not None:
        # subtract the (-2)-class (1, -q) off the fixed part;
        # degree drops by g-2 >= 1 each step, so this terminates
        gh = g - 2
        while n * gh + m * d < 0:
            n -= 1
            m += q
            dh -= gh
            if n == 0 and m == 0:
                return 1
            if dh <= 0:
                return 0
        if n * d < 0:  # pairing with F
            return 0
    else:
        if n * d < 0 or n * hr + m * fr < 0:
            return 0
    # the residual class is nef
    sq = 2 * n * (n * g1 + m * d)
    assert sq >= 0  # nef classes have nonnegative square
    if sq > 0:
        return sq // 2 + 2  # nef and big: h1 = 0 and h0 = chi
    return math.gcd(abs(n), abs(m)) + 1  # k-fold multiple of a pencil


def euler_char(lat: PolarizedLattice, c: DivClass) -> int:
    return square(lat, c) // 2 + 2


def cohomology(lat: PolarizedLattice, c: DivClass) -> CohomologyVector:
    """(h0, h1, h2, chi) with h2 = h0(-c) by duality and h1 from chi."""
    a = h0(lat, c)
    b = h0(lat, -c)
    chi = euler_char(lat, c)
    h1 = a + b - chi
    if h1 < 0:
        raise InvariantError(f"negative h1 = {h1} for class {tuple(c)} on {lat}")
    return CohomologyVector(a, h1, b, chi)


def _multiple_of(c: DivClass, p: DivClass) -> Optional[int]:
    """k with c == k*p, if any (p nonzero)."""
    if p.n != 0:
        k, rem = divmod(c.n, p.n)
        if rem != 0 or c.m != k * p.m:
            return None
    else:
        if c.n != 0:
            return None
        k, rem = divmod(c.m, p.m)
        if rem != 0:
            return None
    return k


def positivity(lat: PolarizedLattice, c: DivClass) -> PositivityReport:
    """Effectivity, nefness, base-point-freeness and very-ampleness of c.

    A nef effective class fails to be base point free only when it has
    the shape k*P + G with k >= 2, P a pencil class and G a (-2)-class
    with P.G = 1.  In this family P.G = d >= 3, so the exception never
    fires; the test is still performed in full.  Very-ampleness requires
    c^2 >= 4 and excludes: an effective primitive isotropic P with
    P.c <= 2, c = 2B with B^2 = 2, and a (-2)-class orthogonal to c.
    """
    eff = h0(lat, c) > 0
    nef = is_nef(lat, c)
    pencils = elliptic_pencil_classes(lat)
    mt = minus_two_classes(lat)

    exception = False
    if eff and nef and mt is not None:
        gamma = mt[0]
        for p in pencils:
            if intersect(lat, p, gamma) == 1:
                k = _multiple_of(c - gamma, p)
                if k is not None and k >= 2:
                    exception = True
                    break
    bpf = eff and nef and not exception

    kind, mult = PencilKind.NOT_A_PENCIL, None
    if eff:
        for p in pencils:
            k = _multiple_of(c, p)
            if k is not None and k >= 1:
                kind, mult = PencilKind.ELLIPTIC_PENCIL_MULTIPLE, k
                break
        else:
            if exception:
                kind = PencilKind.HYPERELLIPTIC_EXCEPTION

    va = eff and nef and square(lat, c) >= 4
    if va:
        for p in cone_data(lat).isotropic_primitives:
            if intersect(lat, p, c) <= 2:
                va = False
                break
    if va and c.n % 2 == 0 and c.m % 2 == 0:
        if square(lat, DivClass(c.n // 2, c.m // 2)) == 2:
            va = False
    if va and mt is not None and intersect(lat, mt[0], c) == 0:
        va = False

    return PositivityReport(eff, nef, bpf, va, kind, mult)
