"""Lazarsfeld-Mukai invariants, splitting candidates, and the trichotomy."""

import pytest

from k3lattice import (
    F,
    H,
    DivClass,
    InvalidMarkerError,
    PencilMarker,
    PolarizedLattice,
    StabilityTag,
    cohomology,
    deg_h,
    destabilizer_search,
    dm_candidates,
    elliptic_pencil_classes,
    gonality_pencil_classes,
    h0,
    lm_invariants,
    positivity,
    stability_classify,
)
from conftest import all_pairs


@pytest.mark.parametrize(
    "g,d,h0_e,threshold",
    [(4, 3, 4, 3), (3, 3, 3, 2), (5, 4, 4, 4), (7, 3, 7, 6)],
)
def test_invariants(g, d, h0_e, threshold):
    inv = lm_invariants(PolarizedLattice(g, d))
    assert inv.rank == 2
    assert inv.c1 == H
    assert inv.c2 == d
    assert inv.h0 == inv.chi == h0_e == g + 3 - d
    assert inv.slope_threshold == threshold == (2 * g - 2) // 2


def test_dm_candidates_examples():
    lat43 = PolarizedLattice(4, 3)
    cands = dm_candidates(lat43)
    assert [c.quotient for c in cands] == [F, H - F]
    assert all(c.pairing == 3 and c.quotient_is_pencil for c in cands)

    lat33 = PolarizedLattice(3, 3)
    cands33 = dm_candidates(lat33)
    assert len(cands33) == 1
    assert cands33[0].quotient == F
    assert cands33[0].sub == H - F  # the (-2)-class
    assert cands33[0].pairing == 3

    # for d < g-1 both residuals qualify numerically; H - F is big, not a pencil
    cands73 = dm_candidates(PolarizedLattice(7, 3))
    assert [c.quotient for c in cands73] == [F, H - F]
    assert [c.quotient_is_pencil for c in cands73] == [True, False]


def test_dm_candidate_structure():
    for g, d in all_pairs(20):
        lat = PolarizedLattice(g, d)
        pencils = elliptic_pencil_classes(lat)
        for c in dm_candidates(lat):
            assert c.sub + c.quotient == H
            assert c.pairing == d
            L = c.quotient
            # the exactness conditions are re-checked, never assumed
            assert h0(lat, L) >= 2
            assert cohomology(lat, L).h1 == 0
            assert h0(lat, L - H) == 0
            assert positivity(lat, L).base_point_free
            assert c.quotient_is_pencil == (L in pencils)


def test_stability_trichotomy_examples():
    lat33 = PolarizedLattice(3, 3)
    for marker in (PencilMarker.CUT_BY_F, PencilMarker.OTHER):
        v = stability_classify(lat33, marker)
        assert v.tag is StabilityTag.STABLE and v.witnesses == ()

    v = stability_classify(PolarizedLattice(5, 4), PencilMarker.CUT_BY_F)
    assert v.tag is StabilityTag.STRICTLY_SEMISTABLE
    assert set(v.witnesses) == {F, H - F}

    v = stability_classify(PolarizedLattice(7, 4), PencilMarker.CUT_BY_F)
    assert v.tag is StabilityTag.UNSTABLE
    assert v.witnesses == (H - F,)
    assert deg_h(PolarizedLattice(7, 4), H - F) == 8 > 6


def test_stability_marker_validation():
    with pytest.raises(InvalidMarkerError):
        stability_classify(PolarizedLattice(7, 3), PencilMarker.CUT_BY_H_MINUS_F)
    with pytest.raises(InvalidMarkerError):
        stability_classify(PolarizedLattice(3, 3), PencilMarker.CUT_BY_H_MINUS_F)
    # valid exactly in the d = g-1 lattices
    for g, d in [(4, 3), (5, 4)]:
        v = stability_classify(PolarizedLattice(g, d), PencilMarker.CUT_BY_H_MINUS_F)
        assert v.tag is StabilityTag.STRICTLY_SEMISTABLE


def test_destabilizer_search_examples():
    assert destabilizer_search(PolarizedLattice(3, 3)) == []
    assert destabilizer_search(PolarizedLattice(5, 4)) == [F, H - F]
    assert destabilizer_search(PolarizedLattice(7, 3)) == [H - F]


def test_search_agrees_with_trichotomy():
    for g, d in all_pairs(25):
        lat = PolarizedLattice(g, d)
        search = destabilizer_search(lat)
        verdict = stability_classify(lat, PencilMarker.CUT_BY_F)
        assert sorted(verdict.witnesses) == search
        if verdict.tag is StabilityTag.STABLE:
            assert search == []
        elif verdict.tag is StabilityTag.STRICTLY_SEMISTABLE:
            assert search and all(deg_h(lat, m) == g - 1 for m in search)
        else:
            assert any(deg_h(lat, m) > g - 1 for m in search)


def test_gonality_pencils():
    lat43 = PolarizedLattice(4, 3)
    assert gonality_pencil_classes(lat43) == [F, H - F]
    assert gonality_pencil_classes(PolarizedLattice(7, 3)) == [F]
    assert gonality_pencil_classes(PolarizedLattice(5, 4)) == [F, H - F]
    for g, d in all_pairs(40):
        lat = PolarizedLattice(g, d)
        got = gonality_pencil_classes(lat)
        assert len(got) == (2 if d == g - 1 else 1)
        assert all(deg_h(lat, p) == d for p in got)


def test_semistable_wall_is_exactly_two_lattices():
    walls = [(g, d) for g, d in all_pairs(60) if d == g - 1]
    assert walls == [(4, 3), (5, 4)]
