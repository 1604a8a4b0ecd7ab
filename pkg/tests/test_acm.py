"""ACM window checks, the two-class classification, and quartic predicates."""

import pytest

from k3lattice import (
    F,
    H,
    ZERO,
    DivClass,
    PolarizedLattice,
    classify_acm_initialized,
    cohomology,
    h0,
    is_acm,
    quartic_acm_predicate,
    quartic_splitting_types,
)
from k3lattice.acm import SPLITTING_CANDIDATES, _vanishing_window
from conftest import all_pairs


def test_f_is_acm_and_initialized_everywhere():
    for g, d in all_pairs(25):
        verdict = is_acm(PolarizedLattice(g, d), F)
        assert verdict.acm and verdict.initialized


def test_h_minus_f_is_acm():
    for g, d in all_pairs(25):
        if d <= g - 1:
            assert is_acm(PolarizedLattice(g, d), H - F).acm


def test_2f_fails_at_zero_twist():
    verdict = is_acm(PolarizedLattice(5, 4), 2 * F)
    assert not verdict.acm
    assert (0, 1) in verdict.failures  # h1(2F) = 1


def test_window_guarantee():
    # outside the reported window every twist has vanishing h1
    for g, d in [(3, 3), (6, 3), (5, 4), (11, 5)]:
        lat = PolarizedLattice(g, d)
        for L in [ZERO, F, 2 * F, H - 3 * F, DivClass(-2, 5)]:
            lo, hi = _vanishing_window(lat, L)
            for l in (lo - 2, lo - 1, hi + 1, hi + 2):
                assert cohomology(lat, L + l * H).h1 == 0


def test_window_shifts_with_twisting():
    # the failure set of L + kH is the failure set of L shifted by -k
    lat = PolarizedLattice(6, 3)
    for L in [2 * F, 3 * F, DivClass(2, -4), DivClass(1, 2)]:
        base = {l: h1 for l, h1 in is_acm(lat, L).failures}
        for k in range(-5, 6):
            shifted = {l: h1 for l, h1 in is_acm(lat, L + k * H).failures}
            assert shifted == {l - k: h1 for l, h1 in base.items()}


def test_duality_inside_window():
    lat = PolarizedLattice(7, 3)
    for L in [F, 2 * F, H - 2 * F]:
        lo, hi = _vanishing_window(lat, L)
        for l in range(lo, hi + 1):
            c = L + l * H
            assert cohomology(lat, c).h1 == cohomology(lat, -c).h1


@pytest.mark.parametrize("g,d", [(5, 3), (3, 3), (10, 5), (4, 3), (6, 3)])
def test_classification_is_f_and_h_minus_f(g, d):
    assert classify_acm_initialized(PolarizedLattice(g, d), 20) == [F, H - F]


def test_classification_respects_radius_validation():
    with pytest.raises(ValueError):
        classify_acm_initialized(PolarizedLattice(5, 3), 1)


def test_quartic_predicate_cases():
    assert quartic_acm_predicate(-2, 2, False, False)
    assert quartic_acm_predicate(-2, 1, True, True)
    assert not quartic_acm_predicate(-2, 4, False, False)
    assert quartic_acm_predicate(0, 3, False, False)
    assert quartic_acm_predicate(0, 4, False, False)
    assert not quartic_acm_predicate(0, 5, False, False)
    assert quartic_acm_predicate(2, 5, False, False)
    assert not quartic_acm_predicate(2, 4, False, False)
    assert quartic_acm_predicate(4, 6, False, False)
    assert not quartic_acm_predicate(4, 6, True, False)
    assert not quartic_acm_predicate(4, 6, False, True)
    assert not quartic_acm_predicate(6, 7, False, False)


def test_quartic_splitting_types():
    assert quartic_splitting_types() == [(5, 2), (3, 0), (4, 0)]
    # the degree filter discards exactly the two low-degree candidates
    discarded = [p for p in SPLITTING_CANDIDATES if p not in quartic_splitting_types()]
    assert sorted(discarded) == [(1, -2), (2, -2)]


def test_quartic_predicate_agrees_with_window_oracle():
    # on the quartic lattice (g, d) = (3, 3) the numeric predicate and the
    # exact window test must coincide on every nonzero effective class
    lat = PolarizedLattice(3, 3)
    checked = 0
    for n in range(-10, 11):
        for m in range(-10, 11):
            c = DivClass(n, m)
            if c == ZERO or h0(lat, c) == 0:
                continue
            verdict = is_acm(lat, c)
            numeric = quartic_acm_predicate(
                2 * n * (2 * n + 3 * m),
                4 * n + 3 * m,
                h0(lat, c - H) > 0,
                h0(lat, 2 * H - c) > 0,
            )
            assert numeric == (verdict.acm and verdict.initialized), c
            checked += 1
    assert checked > 100
