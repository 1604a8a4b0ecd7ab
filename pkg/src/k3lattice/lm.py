"""Numerical model of the rank-2 Lazarsfeld-Mukai bundle of a gonality pencil.

For a smooth curve C in |H| (genus g) and a degree-d pencil Z on it, the
associated rank-2 bundle has c1 = H, c2 = d, vanishing h1 and h2, and
h0 = g + 3 - d.  This module computes its invariants, searches for
split presentations 0 -> H-L -> E -> L -> 0 (Donagi-Morrison
candidates), classifies slope stability, and lists the pencil classes
that restrict to gonality pencils on C.

Which pencil actually cuts Z is not lattice data, so the stability
trichotomy takes it as an explicit marker.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import (
    F,
    H,
    ZERO,
    DivClass,
    PolarizedLattice,
    classes_under,
    deg_h,
    elliptic_pencil_classes,
    intersect,
)
from .cohomology import cohomology, h0, positivity
from .acm import classify_acm_initialized


class PencilMarker(enum.Enum):
    """Which class cuts the gonality pencil on the curve."""

    CUT_BY_F = "f"
    CUT_BY_H_MINUS_F = "h-f"
    OTHER = "other"


class StabilityTag(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"


class InvalidMarkerError(ValueError):
    """Marker names a pencil that does not exist on this lattice."""


@dataclass(frozen=True)
class LmInvariants:
    rank: int
    c1: DivClass
    c2: int
    chi: int
    h0: int
    slope_threshold: int


@dataclass(frozen=True)
class StabilityVerdict:
    tag: StabilityTag
    witnesses: tuple[DivClass, ...]


@dataclass(frozen=True)
class DmCandidate:
    sub: DivClass
    quotient: DivClass
    pairing: int
    quotient_is_pencil: bool


def lm_invariants(lat: PolarizedLattice) -> LmInvariants:
    g, d = lat.g, lat.d
    chi = (2 * g - 2) // 2 - d + 4  # rank-2 Riemann-Roch with c1 = H, c2 = d
    return LmInvariants(2, H, d, chi, chi, g - 1)


def dm_candidates(lat: PolarizedLattice, box_radius: int = 20) -> list[DmCandidate]:
    """Quotient classes L admitting 0 -> H-L -> E -> L -> 0 numerically.

    L runs over the ACM initialized classification and must satisfy
    h0(L) >= 2, h1(L) = 0, h0(L - H) = 0, and L.(H-L) = d (the Chern
    class bookkeeping of a rank-2 filtration with c1 = H, c2 = d).
    Candidates are reported for every d, including d < g-1 where no
    converse holds.
    """
    pencils = elliptic_pencil_classes(lat)
    out = []
    for L in classify_acm_initialized(lat, box_radius):
        if h0(lat, L) < 2:
            continue
        if cohomology(lat, L).h1 != 0 or h0(lat, L - H) != 0:
            continue
        pairing = intersect(lat, L, H - L)
        if pairing != lat.d:
            continue
        out.append(DmCandidate(H - L, L, pairing, L in pencils))
    return out


def stability_classify(lat: PolarizedLattice, marker: PencilMarker) -> StabilityVerdict:
    """Slope-stability trichotomy of the bundle, given the pencil marker."""
    g, d = lat.g, lat.d
    if marker is PencilMarker.CUT_BY_H_MINUS_F and d != g - 1:
        raise InvalidMarkerError(
            f"H-F is not an elliptic pencil class on (g, d) = ({g}, {d})"
        )
    if d == g:
        return StabilityVerdict(StabilityTag.STABLE, ())
    if d == g - 1:
        if marker is PencilMarker.OTHER:
            return StabilityVerdict(StabilityTag.STABLE, ())
        return StabilityVerdict(StabilityTag.STRICTLY_SEMISTABLE, (F, H - F))
    if marker is PencilMarker.CUT_BY_F:
        return StabilityVerdict(StabilityTag.UNSTABLE, (H - F,))
    return StabilityVerdict(StabilityTag.STABLE, ())


def destabilizer_search(lat: PolarizedLattice) -> list[DivClass]:
    """Brute-force search for sub-line-bundle classes reaching the slope bound.

    Enumerates effective M with M.H >= g-1 whose numeric quotient H-M is
    base point free and nontrivial with h0 >= 2 and M.(H-M) <= d; this
    is the independent oracle the trichotomy is checked against.
    """
    g = lat.g
    out = []
    for M in classes_under(lat, H):
        if deg_h(lat, M) < g - 1 or h0(lat, M) < 1:
            continue
        quot = H - M
        if quot == ZERO or h0(lat, quot) < 2:
            continue
        if intersect(lat, M, quot) > lat.d:
            continue
        if not positivity(lat, quot).base_point_free:
            continue
        out.append(M)
    return out


def gonality_pencil_classes(lat: PolarizedLattice) -> list[DivClass]:
    """Elliptic pencil classes of degree exactly d (gonality pencils on C)."""
    return [p for p in elliptic_pencil_classes(lat) if deg_h(lat, p) == lat.d]
