"""ACM and initialized line bundles with respect to the polarization.

A class L is ACM when h1(L + l*H) = 0 for every integer l, and
initialized when h0(L) > 0 but h0(L - H) = 0.  The infinite quantifier
is reduced to a finite window: once L + l*H pairs at least 1 with both
effective rays (and has square >= 2, and is not a multiple of an
isotropic ray) it is nef and big, so h1 vanishes; symmetrically for
-(L + l*H) on the other side by duality.  Inside the window h1 is
checked exactly.

The quartic predicates classify ACM-initialized bundles on a smooth
quartic surface purely numerically; effectivity questions the lattice
cannot answer are taken as boolean inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    H,
    ZERO,
    DivClass,
    PolarizedLattice,
    cone_data,
    deg_h,
    in_effective_cone,
    intersect,
    square,
)
from .cohomology import _multiple_of, cohomology, h0


@dataclass(frozen=True)
class AcmVerdict:
    acm: bool
    initialized: bool
    window: tuple[int, int]
    failures: tuple[tuple[int, int], ...]


def _deep_nef(lat, x) -> bool:
    """Strictly inside the nef cone, big, and off the isotropic rays: h1 = 0."""
    if any(intersect(lat, x, p) < 1 for p in cone_data(lat).eff_rays):
        return False
    if square(lat, x) < 2:
        return False
    return all(_multiple_of(x, p) is None for p in cone_data(lat).isotropic_primitives)


def _vanishing_window(lat, L) -> tuple[int, int]:
    """[l_lo, l_hi] outside of which h1(L + l*H) = 0 is guaranteed."""
    rays = cone_data(lat).eff_rays
    # exact integer ceil/floor of (+-1 - L.P) / H.P
    hi = max(-((intersect(lat, L, p) - 1) // deg_h(lat, p)) for p in rays)
    while not _deep_nef(lat, L + hi * H):
        hi += 1
    lo = min((-1 - intersect(lat, L, p)) // deg_h(lat, p) for p in rays)
    while not _deep_nef(lat, -(L + lo * H)):
        lo -= 1
    return (lo + 1, hi - 1)


def is_acm(lat: PolarizedLattice, L: DivClass) -> AcmVerdict:
    lo, hi = _vanishing_window(lat, L)
    failures = []
    for l in range(lo, hi + 1):
        h1 = cohomology(lat, L + l * H).h1
        if h1 > 0:
            failures.append((l, h1))
    initialized = h0(lat, L) > 0 and h0(lat, L - H) == 0
    return AcmVerdict(not failures, initialized, (lo, hi), tuple(failures))


def classify_acm_initialized(lat: PolarizedLattice, box_radius: int = 20) -> list[DivClass]:
    """All nontrivial ACM initialized classes with |n|, |m| <= box_radius.

    Candidates are pruned to the effective cone minus its H-translate
    (initialized classes are effective with non-effective L - H) before
    the exact window check runs.
    """
    if box_radius < 2:
        raise ValueError("box_radius must be at least 2")
    out = []
    for n in range(-box_radius, box_radius + 1):
        for m in range(-box_radius, box_radius + 1):
            L = DivClass(n, m)
            if L == ZERO or not in_effective_cone(lat, L):
                continue
            if in_effective_cone(lat, L - H):
                continue
            verdict = is_acm(lat, L)
            if verdict.acm and verdict.initialized:
                out.append(L)
    return out


# Candidate (degree, square) pairs for the quotient of a split rank-2
# Lazarsfeld-Mukai bundle on a smooth quartic; pairs with degree <= 2
# have empty movable part and drop out of the classification.
SPLITTING_CANDIDATES = ((1, -2), (2, -2), (5, 2), (3, 0), (4, 0))


def quartic_acm_predicate(
    d2: int, cd: int, has_d_minus_c: bool, has_2c_minus_d: bool
) -> bool:
    """Numeric ACM-initialized test for a nonzero effective class on a quartic.

    d2 = D^2, cd = C.D for the hyperplane class C; the two flags answer
    whether |D - C| and |2C - D| are nonempty.
    """
    if d2 == -2:
        return 1 <= cd <= 3
    if d2 == 0:
        return 3 <= cd <= 4
    if d2 == 2:
        return cd == 5
    if d2 == 4:
        return cd == 6 and not has_d_minus_c and not has_2c_minus_d
    return False


def quartic_splitting_types() -> list[tuple[int, int]]:
    """(L.H, L^2) pairs a split quotient on a quartic can realize."""
    return [pair for pair in SPLITTING_CANDIDATES if pair[0] > 2]
