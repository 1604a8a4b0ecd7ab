"""Clifford index: enumeration of A(H), the closed form, and minimizers."""

import pytest

from k3lattice import (
    F,
    H,
    DivClass,
    PolarizedLattice,
    check_a0_properties,
    clifford_index,
    enumerate_A,
    h0,
    intersect,
    square,
)
from conftest import all_pairs


def test_A_membership_examples():
    lat = PolarizedLattice(4, 3)
    assert F in enumerate_A(lat)
    assert H not in enumerate_A(lat)  # h0(H - H) = 1 < 2
    # on (3,3) the residual H - F is the rigid (-2)-class, so A is empty
    lat33 = PolarizedLattice(3, 3)
    assert h0(lat33, H - F) == 1
    assert enumerate_A(lat33) == []


def test_A_defining_condition_holds():
    for g, d in all_pairs(20):
        lat = PolarizedLattice(g, d)
        for c in enumerate_A(lat):
            assert h0(lat, c) >= 2 and h0(lat, H - c) >= 2


def test_A_symmetric_under_residual():
    for g, d in all_pairs(25):
        lat = PolarizedLattice(g, d)
        members = set(enumerate_A(lat))
        for c in members:
            assert H - c in members
            assert intersect(lat, c, H - c) == intersect(lat, H - c, c)


@pytest.mark.parametrize(
    "g,d,cliff,bound",
    [
        (5, 4, 2, 2),
        (4, 3, 1, 1),
        (9, 3, 1, 4),
        (3, 3, 1, 1),
    ],
)
def test_clifford_examples(g, d, cliff, bound):
    rep = clifford_index(PolarizedLattice(g, d))
    assert rep.cliff == cliff
    assert rep.generic_bound == bound


def test_clifford_closed_form_small_sweep():
    for g, d in all_pairs(25):
        rep = clifford_index(PolarizedLattice(g, d))
        assert rep.cliff == d - 2
        if rep.mu is not None:
            assert rep.mu >= 0
            assert rep.cliff == min(rep.mu, rep.generic_bound)
        else:
            assert rep.cliff == rep.generic_bound


def test_minimizers():
    rep = clifford_index(PolarizedLattice(4, 3))
    assert F in rep.a0_classes
    lat = PolarizedLattice(4, 3)
    for c in rep.a0_classes:
        assert intersect(lat, c, H - c) == rep.mu + 2
    # argmin set is closed under L -> H - L and lexicographically sorted
    for g, d in all_pairs(20):
        r = clifford_index(PolarizedLattice(g, d))
        assert list(r.a0_classes) == sorted(r.a0_classes)
        assert {H - c for c in r.a0_classes} == set(r.a0_classes)


def test_a0_properties():
    assert check_a0_properties(PolarizedLattice(4, 3))
    assert check_a0_properties(PolarizedLattice(5, 4))
    assert check_a0_properties(PolarizedLattice(3, 3))  # vacuously
    for g, d in all_pairs(20):
        assert check_a0_properties(PolarizedLattice(g, d))


def test_gonality_witness_matches_degree_formula():
    # the pencil F contributes F.H - F^2 - 2 = d - 2
    for g, d in all_pairs(30):
        lat = PolarizedLattice(g, d)
        assert intersect(lat, F, H) - square(lat, F) - 2 == d - 2
