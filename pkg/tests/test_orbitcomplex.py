import pytest

from scgroups.linalg import iso_odd
from scgroups.orbitcomplex import (
    build_row_complex,
    chain_identities_hold,
    expected_orbit_count,
    orbit_classify,
    projective_points,
    simplicial_homology_vanishes,
)
from scgroups.rings import GF, parse_ring
from scgroups.scissors import context
from scgroups.witt import fundamental_ideal


def test_z1_basis_size_gf7():
    c = build_row_complex(GF(7))
    assert c.d3.shape[0] == 2 * 5  # |G| * |W|


@pytest.mark.parametrize("label", ["gf(7)", "gf(11)", "z/7^2"])
def test_chain_identities(label):
    c = build_row_complex(parse_ring(label))
    assert chain_identities_hold(c)


def test_homology_position_1():
    c = build_row_complex(GF(7))
    assert c.homology_at(1).is_trivial()


def test_homology_position_2_is_fundamental_ideal():
    for label in ["gf(7)", "gf(11)"]:
        ring = parse_ring(label)
        c = build_row_complex(ring)
        h2 = c.homology_at(2)
        i1 = fundamental_ideal(ring)
        assert h2.invariant_factors() == i1.invariant_factors()
        assert h2.free_rank == i1.free_rank
    assert build_row_complex(GF(7)).homology_at(2).invariant_factors() == (2,)


@pytest.mark.parametrize("label", ["gf(7)", "gf(11)", "gf(13)"])
def test_homology_position_3_is_rp1(label):
    ring = parse_ring(label)
    c = build_row_complex(ring)
    assert iso_odd(c.homology_at(3), context(ring).rp1())


def test_projective_points_count():
    assert len(projective_points(GF(7))) == 8


def test_orbit_counts_triples_gf7():
    census = orbit_classify(GF(7), 3)
    assert len(census) == 2 == expected_orbit_count(GF(7), 3)
    assert sum(census.values()) == 8 * 7 * 6


def test_orbit_counts_4tuples_gf5():
    census = orbit_classify(GF(5), 4)
    assert len(census) == 6 == expected_orbit_count(GF(5), 4)


def test_orbit_counts_triples_gf4():
    census = orbit_classify(GF(2, 2), 3)
    assert len(census) == 1 == expected_orbit_count(GF(2, 2), 3)


def test_orbit_counts_5tuples_gf5():
    census = orbit_classify(GF(5), 5)
    assert len(census) == expected_orbit_count(GF(5), 5)


def test_orbit_guard():
    with pytest.raises(ValueError, match="31"):
        orbit_classify(GF(37), 3)


@pytest.mark.parametrize("q,d", [(5, 1), (7, 1)])
def test_simplicial_exactness_small(q, d):
    k = GF(q, d)
    for degree in (1, 2, 3):
        assert simplicial_homology_vanishes(k, degree)


def test_simplicial_exactness_gf4():
    k = GF(2, 2)
    for degree in (1, 2, 3):
        assert simplicial_homology_vanishes(k, degree)
