"""Clifford index of the polarization via bounded lattice enumeration.

A(H) is the set of classes L with h0(L) >= 2 and h0(H-L) >= 2; mu(H) is
the minimum of L.(H-L) - 2 over A(H), and the Clifford index is
min(mu(H), floor((g-1)/2)), degenerating to the generic bound when A(H)
is empty.  Candidates are enumerated from the polytope
0 <= L.N <= H.N against both nef rays, which provably contains every L
with L and H-L effective.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .lattice import H, DivClass, PolarizedLattice, classes_under, intersect
from .cohomology import cohomology, h0, positivity


@dataclass(frozen=True)
class CliffordReport:
    mu: Optional[int]
    cliff: int
    a0_classes: tuple[DivClass, ...]
    generic_bound: int


def enumerate_A(lat: PolarizedLattice) -> list[DivClass]:
    """All L with h0(L) >= 2 and h0(H-L) >= 2, in lexicographic order."""
    return [
        c
        for c in classes_under(lat, H)
        if h0(lat, c) >= 2 and h0(lat, H - c) >= 2
    ]


def clifford_index(lat: PolarizedLattice) -> CliffordReport:
    bound = (lat.g - 1) // 2
    pairings = [(intersect(lat, c, H - c), c) for c in enumerate_A(lat)]
    if not pairings:
        return CliffordReport(None, bound, (), bound)
    best = min(p for p, _ in pairings)
    mu = best - 2
    a0 = tuple(c for p, c in pairings if p == best)
    return CliffordReport(mu, min(mu, bound), a0, bound)


def check_a0_properties(lat: PolarizedLattice) -> bool:
    """Every minimizer has h1 = 0 and is base point free (vacuous if none)."""
    for c in clifford_index(lat).a0_classes:
        if cohomology(lat, c).h1 != 0:
            return False
        if not positivity(lat, c).base_point_free:
            return False
    return True
