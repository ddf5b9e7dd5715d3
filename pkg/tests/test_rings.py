import pytest

from scgroups.rings import (
    GF,
    TruncPoly,
    ZMod,
    element_orders,
    make_ring,
    parse_ring,
    prime_power_decompose,
    smallest_irreducible,
    square_classes,
    sufficiently_large,
    unit_group_basis,
)

ALL_RINGS = [
    GF(7),
    GF(11),
    GF(13),
    GF(3, 2),
    GF(2, 2),
    ZMod(7, 2),
    ZMod(11, 2),
    TruncPoly(GF(5), 2),
    TruncPoly(GF(3), 2),
]


def test_make_ring_examples():
    r = make_ring("field", 7, 1)
    assert r.size() == 7 and r.kind == "field"
    r = make_ring("field", 3, 2)
    assert r.size() == 9
    assert r.modulus == (1, 0, 1)  # t^2 + 1
    r = make_ring("zmod", 7, 2)
    assert r.size() == 49


def test_make_ring_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        make_ring("field", 6, 1)
    with pytest.raises(ValueError):
        make_ring("zmod", 4, 1)


def test_smallest_irreducible_is_irreducible():
    # no roots in the base field is necessary; full check is trial division
    for p, d in [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2), (3, 3)]:
        coeffs = smallest_irreducible(p, d)
        assert len(coeffs) == d + 1 and coeffs[-1] == 1
        for x in range(p):
            val = sum(c * x**i for i, c in enumerate(coeffs)) % p
            assert val != 0


def test_unit_counts():
    assert len(GF(7).w_set) == 5
    assert len(ZMod(7, 2).u1) == 7
    assert len(TruncPoly(GF(3), 2).units) == 6


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.label)
def test_units_decompose_into_w_and_u1(ring):
    assert set(ring.units) == set(ring.w_set) | set(ring.u1)
    assert not set(ring.w_set) & set(ring.u1)
    # U1 = 1 + maximal ideal
    nonunits = [x for x in ring.elements if not ring.is_unit(x)]
    u1 = {ring.add(ring.one, m) for m in nonunits}
    assert u1 == set(ring.u1)


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.label)
def test_field_axioms_spotcheck(ring):
    xs = ring.elements[: min(len(ring.elements), 8)]
    for a in xs:
        for b in xs:
            assert ring.add(a, b) == ring.add(b, a)
            assert ring.mul(a, b) == ring.mul(b, a)
            assert ring.add(a, ring.neg(a)) == ring.zero
    for u in ring.units[:8]:
        assert ring.mul(u, ring.inv(u)) == ring.one


def test_square_classes_examples():
    g7 = square_classes(GF(7))
    assert g7.order == 2
    assert g7.class_of(3) != 0
    assert g7.rep(g7.class_of(3)) == 3  # first nonsquare in canonical order
    g4 = square_classes(GF(2, 2))
    assert g4.order == 1
    g49 = square_classes(ZMod(7, 2))
    assert g49.order == 2


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.label)
def test_square_class_multiplicativity(ring):
    g = square_classes(ring)
    for x in ring.units[:10]:
        for y in ring.units[:10]:
            assert g.mul(g.class_of(x), g.class_of(y)) == g.class_of(ring.mul(x, y))
        assert g.class_of(ring.mul(x, x)) == 0


def test_class_of_rejects_nonunit():
    g = square_classes(ZMod(7, 2))
    with pytest.raises(ValueError):
        g.class_of(7)


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.label)
def test_residue_is_ring_map(ring):
    k = ring.residue_field()
    xs = ring.elements[: min(len(ring.elements), 10)]
    for a in xs:
        for b in xs:
            assert ring.residue(ring.add(a, b)) == k.add(ring.residue(a), ring.residue(b))
            assert ring.residue(ring.mul(a, b)) == k.mul(ring.residue(a), ring.residue(b))
    # surjective, and units map exactly onto units
    assert {ring.residue(x) for x in ring.elements} == set(k.elements)
    for x in ring.elements:
        assert ring.is_unit(x) == k.is_unit(ring.residue(x))


def test_sufficiently_large():
    assert sufficiently_large(64) is False
    assert sufficiently_large(11) is True
    assert sufficiently_large(13) is True
    assert sufficiently_large(25) is True
    assert sufficiently_large(9) is False
    with pytest.raises(ValueError):
        sufficiently_large(12)


def test_prime_power_decompose():
    assert prime_power_decompose(49) == (7, 2)
    assert prime_power_decompose(121) == (11, 2)
    assert prime_power_decompose(12) is None
    assert prime_power_decompose(13) == (13, 1)


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.label)
def test_unit_group_basis(ring):
    gens, orders, dlog = unit_group_basis(ring)
    import math

    assert math.prod(orders) == len(ring.units)
    # dlog is a bijection onto the exponent box
    seen = set()
    for u in ring.units:
        e = dlog[u]
        assert len(e) == len(gens)
        assert all(0 <= ei < oi for ei, oi in zip(e, orders))
        seen.add(e)
        # check the exponents reproduce the unit
        x = ring.one
        for g, ei in zip(gens, e):
            x = ring.mul(x, ring.power(g, ei))
        assert x == u
    assert len(seen) == len(ring.units)


def test_unit_group_gf9_t2_not_cyclic():
    ring = TruncPoly(GF(3, 2), 2)
    gens, orders, dlog = unit_group_basis(ring)
    assert sorted(orders) in ([3, 24], [3, 3, 8])


def test_parse_ring():
    assert parse_ring("gf(7)").label == "gf(7)"
    assert parse_ring("gf(3^2)").size() == 9
    assert parse_ring("gf(25)").size() == 25
    assert parse_ring("z/7^2").size() == 49
    assert parse_ring("z/49").size() == 49
    r = parse_ring("gf(5)[t]/t^2")
    assert r.size() == 25 and r.kind == "tpoly"
    with pytest.raises(ValueError):
        parse_ring("gf(6)")
    with pytest.raises(ValueError):
        parse_ring("ring(3)")


def test_element_orders():
    orders = element_orders(GF(7))
    assert orders[1] == 1 and orders[6] == 2
    assert max(orders.values()) == 6
