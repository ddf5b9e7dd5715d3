import random
from fractions import Fraction

import pytest

from scgroups.tree import (
    G0_SIDE,
    G1_SIDE,
    IDENT,
    VertexKey,
    act,
    amalgam_decompose,
    ball,
    ball_is_tree,
    ball_size_formula,
    canonical_vertex,
    distance,
    dot_output,
    epsilon,
    g_pi,
    gamma_membership,
    in_g0,
    in_g1,
    lambda0,
    lambda1,
    mat2,
    mat_det,
    mat_inv,
    mat_mul,
    mat_scale,
    neighbors,
    standard_decomposition,
)


def test_canonical_vertex_examples():
    p = 7
    assert canonical_vertex(mat2(1, 0, 0, 1), p) == VertexKey(0, Fraction(0))
    assert canonical_vertex(mat2(p, 0, 0, 1), p) == VertexKey(1, Fraction(0))
    assert canonical_vertex(mat2(p, 0, 0, p), p) == VertexKey(0, Fraction(0))
    assert canonical_vertex(mat2(p * p, 0, 0, 1), p) == VertexKey(2, Fraction(0))


def test_canonical_vertex_is_class_invariant():
    rng = random.Random(31)
    p = 5
    for _ in range(80):
        m = mat2(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        )
        if mat_det(m) == 0:
            continue
        key = canonical_vertex(m, p)
        # column operations over Z_(p) and homotheties preserve the class
        u = mat2(1, rng.randint(-4, 4), 0, 1)
        assert canonical_vertex(mat_mul(m, u), p) == key
        sw = mat2(0, 1, 1, 0)
        assert canonical_vertex(mat_mul(m, sw), p) == key
        assert canonical_vertex(mat_scale(Fraction(p), m), p) == key
        assert canonical_vertex(mat_scale(Fraction(3), m), p) == key
        # round trip through the key's own basis matrix
        assert canonical_vertex(key.matrix(p), p) == key


def test_distance_examples():
    p = 7
    assert distance(lambda0(), lambda1(), p) == 1
    assert distance(lambda0(), canonical_vertex(mat2(p * p, 0, 0, 1), p), p) == 2
    v = VertexKey(3, Fraction(5))
    assert distance(v, v, p) == 0


def test_distance_symmetry():
    p = 5
    verts = list(ball(p, 2)[0])
    for v in verts:
        for u in verts:
            assert distance(u, v, p) == distance(v, u, p)


def test_neighbors_counts():
    assert len(neighbors(lambda0(), 7)) == 8
    n11 = neighbors(lambda1(), 11)
    assert len(n11) == 12
    assert lambda0() in n11


def test_neighbor_symmetry():
    p = 5
    for v in list(ball(p, 1)[0]):
        for u in neighbors(v, p):
            assert v in neighbors(u, p)


def test_act_and_epsilon():
    p = 7
    gp = g_pi(p)
    assert epsilon(gp, p) == 1
    assert epsilon(mat2(1, 0, 0, 1), p) == 0
    # g_pi moves the base point to a neighbor and swaps it back
    img = act(gp, lambda0(), p)
    assert distance(lambda0(), img, p) == 1
    assert act(gp, img, p) == lambda0()
    # diag(p, 1) sends the base vertex to the canonical (1, 0) vertex
    assert act(mat2(p, 0, 0, 1), lambda0(), p) == lambda1()
    # scalars act trivially
    v = VertexKey(2, Fraction(3))
    assert act(mat2(p, 0, 0, p), v, p) == v


def test_act_g_pi_lands_on_mirror_neighbor():
    # the class of A + pi*A is the mirror neighbor (-1, 0), not (1, 0)
    p = 7
    assert act(g_pi(p), lambda0(), p) == VertexKey(-1, Fraction(0))


def test_standard_decomposition_examples():
    p = 7
    s, r, u, eps = standard_decomposition(mat2(3, 0, 0, 1), p)
    assert (s, r, u, eps) == (0, IDENT, 3, 0)
    s, r, u, eps = standard_decomposition(g_pi(p), p)
    assert (s, u, eps) == (0, 1, 1) and r == IDENT
    s, r, u, eps = standard_decomposition(mat2(p, 0, 0, p), p)
    assert (s, r, u, eps) == (1, IDENT, 1, 0)


def test_standard_decomposition_random():
    rng = random.Random(3)
    p = 5
    for _ in range(40):
        m = mat2(
            Fraction(rng.randint(-20, 20), p ** rng.randint(0, 2)),
            Fraction(rng.randint(-20, 20), p ** rng.randint(0, 2)),
            Fraction(rng.randint(-20, 20), p ** rng.randint(0, 2)),
            Fraction(rng.randint(-20, 20), p ** rng.randint(0, 2)),
        )
        if mat_det(m) == 0:
            continue
        s, r, u, eps = standard_decomposition(m, p)
        assert mat_det(r) == 1
        from scgroups.valuation import vp

        assert vp(u, p) == 0
        assert eps in (0, 1)


def test_parity_law():
    rng = random.Random(12)
    p = 5
    verts = list(ball(p, 2)[0])
    for _ in range(60):
        m = mat2(
            Fraction(rng.randint(-10, 10), p ** rng.randint(0, 1)),
            Fraction(rng.randint(-10, 10), p ** rng.randint(0, 1)),
            Fraction(rng.randint(-10, 10), p ** rng.randint(0, 1)),
            Fraction(rng.randint(-10, 10), p ** rng.randint(0, 1)),
        )
        if mat_det(m) == 0:
            continue
        v = rng.choice(verts)
        d = distance(v, act(m, v, p), p)
        from scgroups.valuation import vp

        assert d % 2 == vp(mat_det(m), p) % 2


def test_stabilizer_of_base_vertex():
    p = 7
    rng = random.Random(9)
    for _ in range(60):
        m = mat2(
            rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(-6, 6)
        )
        if mat_det(m) != 1:
            continue
        assert act(m, lambda0(), p) == lambda0()
    # an SL2 element moving the base point is not p-integral
    g = mat2(1, Fraction(1, p), 0, 1)
    assert act(g, lambda0(), p) != lambda0()
    assert not in_g0(g, p)


@pytest.mark.parametrize("p", [5, 7])
def test_ball_axioms_small(p):
    for r in range(5):
        assert ball_size_formula(p, r) == len(ball(p, r)[0])
    assert ball_is_tree(p, 3)


def test_g1_membership_examples():
    p = 7
    assert in_g1(mat2(1, Fraction(1, 1) * p, 0, 1), p)
    assert in_g1(mat2(1, 0, Fraction(1, p), 1), p)
    assert not in_g1(mat2(1, 1, 0, 1), p)
    # G0 ∩ G1 stabilizes the edge between the base point and (1, 0)
    m = mat2(1, p, 0, 1)
    assert in_g0(m, p) and in_g1(m, p)


def test_amalgam_single_factors():
    p = 7
    w = amalgam_decompose(mat2(1, 1, 0, 1), p)
    assert len(w) == 1 and w.sides() == [G0_SIDE]
    # lower-left 1/p lies in the spec's G1 shape: a single G1 factor
    w = amalgam_decompose(mat2(1, 0, Fraction(1, p), 1), p)
    assert len(w) == 1 and w.sides() == [G1_SIDE]
    assert w.validate(mat2(1, 0, Fraction(1, p), 1))


def test_amalgam_upper_elementary():
    # [[1, 1/p], [0, 1]] moves the base vertex to distance 2 and is not in
    # either side, so the minimal alternating word has d + 1 = 3 factors
    p = 7
    g = mat2(1, Fraction(1, p), 0, 1)
    w = amalgam_decompose(g, p)
    assert w.validate(g)
    d = distance(lambda0(), act(g, lambda0(), p), p)
    assert d == 2
    assert len(w) == d + 1


def test_amalgam_round_trips_seeded():
    rng = random.Random(99)
    p = 5
    count = 0
    while count < 40:
        g = _random_sl2_zp_inv(rng, p, max_den_pow=3)
        w = amalgam_decompose(g, p)
        assert w.validate(g)
        d = distance(lambda0(), act(g, lambda0(), p), p)
        assert len(w) <= d + 1
        # idempotence: decomposing the product returns the same word
        w2 = amalgam_decompose(w.product(), p)
        assert len(w2) == len(w)
        count += 1


def _random_sl2_zp_inv(rng, p, max_den_pow=3):
    """Random element of SL2(Z[1/p]) as a product of elementary matrices."""
    g = IDENT
    for _ in range(rng.randint(1, 6)):
        x = Fraction(rng.randint(-8, 8), p ** rng.randint(0, max_den_pow))
        if rng.random() < 0.5:
            e = mat2(1, x, 0, 1)
        else:
            e = mat2(1, 0, x, 1)
        g = mat_mul(g, e)
    return g


def test_amalgam_rejects_bad_input():
    p = 5
    with pytest.raises(ValueError, match="determinant"):
        amalgam_decompose(mat2(2, 0, 0, 1), p)
    with pytest.raises(ValueError, match="1/p"):
        amalgam_decompose(mat2(1, Fraction(1, 3), 0, 1), p)


def test_gamma_membership_examples():
    p = 7
    m = mat2(1, 0, p, 1)
    assert all(gamma_membership(m, lvl, p) for lvl in (0, 1, 2))
    m = mat2(1, 1, 0, 1)
    assert gamma_membership(m, 0, p)
    assert not gamma_membership(m, 1, p)
    # diag(2, 2^{-1} in Z_(p)): levels 0 and 1 hold; level 2 iff 2 - 1/2 in pZ_(p)
    m = mat2(2, 0, 0, Fraction(1, 2))
    assert gamma_membership(m, 0, p) and gamma_membership(m, 1, p)
    assert not gamma_membership(m, 2, p)  # v_7(3/2) = 0


def test_gamma_membership_level2_positive_case():
    # p = 3: 2 - 1/2 = 3/2 has valuation 1, so level 2 holds
    assert gamma_membership(mat2(2, 0, 0, Fraction(1, 2)), 2, 3)


def test_gamma_membership_rejects_nonintegral():
    with pytest.raises(ValueError):
        gamma_membership(mat2(1, Fraction(1, 5), 0, 1), 0, 5)


def test_dot_output():
    text = dot_output(5, 1)
    assert text.startswith("graph tree {")
    assert text.count("--") == 6
