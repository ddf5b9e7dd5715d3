"""The bottom row of the E^1-page for the SL2 orbit stratification of
tuples of lines: the chain Z[G]Z_2 -> Z[G]Z_1 -> Z[G] -> Z with the
explicit differentials d4: [x,y] -> Y_{x,y}, d3: [x] -> <<x>><<1-x>>, and
d2 the augmentation; its homology; plus a brute-force orbit classifier
for tuples of projective points and an exactness check for the full
simplicial complex of a finite projective line.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .groupring import dbl_bracket, r_mul, r_vector
from .linalg import (
    FpAb,
    hnf_rows,
    left_kernel,
    sparse_rank_and_pivots,
    subquotient,
    zeros,
)
from .rings import GF, Ring
from .scissors import ScissorsContext, context


@dataclass
class RowComplex:
    """Flattened matrices of the bottom row; basis conventions follow the
    scissors context of the ring."""

    ctx: ScissorsContext
    z2_pairs: list
    d4: np.ndarray
    d3: np.ndarray
    d2: np.ndarray

    def homology_at(self, position: int) -> FpAb:
        """Homology of ... -> C2 -> C1 -> Z[G] -> Z -> Z at positions 1..3
        (position 1 uses the zero map out of the degree-1 term)."""
        if position == 1:
            ker = zeros(1, 1)
            ker[0, 0] = 1
            im = [self.d2[i] for i in range(self.d2.shape[0])]
            return subquotient(ker, im)
        if position == 2:
            kerb = left_kernel(self.d2)
            im = hnf_rows(self.d3, self.d3.shape[1])
            return subquotient(kerb, [im[i] for i in range(im.shape[0])])
        if position == 3:
            kerb = left_kernel(self.d3)
            im = hnf_rows(self.d4, self.d4.shape[1])
            return subquotient(kerb, [im[i] for i in range(im.shape[0])])
        raise ValueError("position must be 1, 2 or 3")


def build_row_complex(ring: Ring) -> RowComplex:
    ctx = context(ring)
    G, W = ctx.G, ctx.W
    m = ctx.refined()
    n1 = m.flat_ngens  # |G| * |W|
    ng = G.order

    pairs = [(x, y) for x, y in ctx.five_term_pairs()]
    pidx = {p: i for i, p in enumerate(pairs)}
    n2 = ng * len(pairs)

    d4 = zeros(n2, n1)
    for k, (x, y) in enumerate(pairs):
        rel = ctx.y_relation(x, y)
        for g in range(ng):
            row = zeros(1, n1)[0]
            for (h, a), c in rel.items():
                row[m.flat_index(h ^ g, ctx.windex[a])] += c
            d4[g * len(pairs) + k] = row

    d3 = zeros(n1, ng)
    for i, x in enumerate(W):
        val = r_mul(
            dbl_bracket(G, x), dbl_bracket(G, ctx.ring.sub(ctx.ring.one, x))
        )
        for g in range(ng):
            d3[m.flat_index(g, i)] = r_vector(r_mul({g: 1}, val), ng)

    d2 = zeros(ng, 1)
    for g in range(ng):
        d2[g, 0] = 1

    return RowComplex(ctx=ctx, z2_pairs=pairs, d4=d4, d3=d3, d2=d2)


def chain_identities_hold(c: RowComplex) -> bool:
    z34 = c.d4 @ c.d3
    z23 = c.d3 @ c.d2
    return all(int(x) == 0 for x in z34.ravel()) and all(
        int(x) == 0 for x in z23.ravel()
    )


# ---------------------------------------------------------------------------
# brute-force orbit census


def projective_points(k: GF) -> list:
    """P^1(k) as normalized column representatives (1, x) and (0, 1)."""
    pts = [(k.one, x) for x in k.elements]
    pts.append((k.zero, k.one))
    return pts


def _sl2_elements(k: GF):
    """Deterministic enumeration of SL2(k)."""
    out = []
    for a in k.elements:
        for b in k.elements:
            for c in k.elements:
                for d in k.elements:
                    det = k.sub(k.mul(a, d), k.mul(b, c))
                    if det == k.one:
                        out.append((a, b, c, d))
    return out


def _act_point(g, pt, k: GF):
    a, b, c, d = g
    x, y = pt
    u = k.add(k.mul(a, x), k.mul(b, y))
    v = k.add(k.mul(c, x), k.mul(d, y))
    if u == k.zero:
        return (k.zero, k.one)
    return (k.one, k.mul(v, k.inv(u)))


def orbit_classify(k: GF, tuple_len: int) -> dict:
    """Census of SL2(k)-orbits on tuples of pairwise-distinct projective
    points, by canonical-form hashing under full group enumeration."""
    if tuple_len not in (3, 4, 5):
        raise ValueError("tuple_len must be 3, 4 or 5")
    if k.q > 31:
        raise ValueError("orbit census is guarded to q <= 31")
    pts = projective_points(k)
    index = {p: i for i, p in enumerate(pts)}
    group = _sl2_elements(k)
    # precompute the point permutation of each group element
    perms = []
    for g in group:
        perms.append(tuple(index[_act_point(g, p, k)] for p in pts))
    census: dict = {}
    for tup in itertools.permutations(range(len(pts)), tuple_len):
        canon = min(tuple(perm[i] for i in tup) for perm in perms)
        census[canon] = census.get(canon, 0) + 1
    return census


def expected_orbit_count(ring: GF, tuple_len: int) -> int:
    ctx = context(ring)
    g = ctx.G.order
    if tuple_len == 3:
        return g
    if tuple_len == 4:
        return g * len(ctx.W)
    wset = set(ctx.W)
    pairs = sum(
        1
        for x in ctx.W
        for y in ctx.W
        if ring.mul(x, ring.inv(y)) in wset
    )
    return g * pairs


# ---------------------------------------------------------------------------
# exactness range of the full simplicial complex


def _tuples(npts: int, length: int):
    return itertools.permutations(range(npts), length)


def simplicial_homology_vanishes(k: GF, degree: int) -> bool:
    """Reduced homology of the complex of tuples of pairwise-distinct
    projective points vanishes in the given degree (1 <= degree <= 3),
    verified by exact rank and saturation computations."""
    if degree < 1 or degree > 3:
        raise ValueError("degree must be 1..3")
    npts = k.q + 1

    def boundary_rows(length):
        # rows of the boundary map L_length -> L_{length-1}
        target_index = {t: i for i, t in enumerate(_tuples(npts, length - 1))}
        for t in _tuples(npts, length):
            row = {}
            for i in range(length):
                face = t[:i] + t[i + 1 :]
                j = target_index[face]
                row[j] = row.get(j, 0) + (1 if i % 2 == 0 else -1)
            yield {j: v for j, v in row.items() if v}

    dim_mid = _count_tuples(npts, degree + 1)
    rank_upper, pivots = sparse_rank_and_pivots(
        list(boundary_rows(degree + 2)), dim_mid
    )
    rank_lower, _ = sparse_rank_and_pivots(
        list(boundary_rows(degree + 1)), _count_tuples(npts, degree)
    )
    if rank_upper + rank_lower != dim_mid:
        return False
    # saturation: all staircase pivots 1 gives a unimodular maximal minor,
    # making the image a direct summand of the middle chain group;
    # otherwise fall back to the canonical form
    if all(p == 1 for p in pivots):
        return True
    from .linalg import snf

    upper = hnf_rows(boundary_rows(degree + 2), dim_mid)
    return all(x in (0, 1) for x in snf(upper).diagonal())


def _count_tuples(npts: int, length: int) -> int:
    out = 1
    for i in range(length):
        out *= npts - i
    return out
