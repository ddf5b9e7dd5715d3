"""The integral group ring Z[G] of a square-class group, its augmentation
ideal and idempotents, characters, the ideals R^chi, and the functors
M -> M_chi and M -> e±M on finitely presented Z[G]-modules.

G is an elementary abelian 2-group coordinatized as bitmasks over a chosen
basis (see rings.SqClassGroup); multiplication is xor.  Ring elements are
sparse coefficient dicts {bitmask: int}.  Half-integral idempotents are
never materialized: every construction stays integral and the 1/2 factors
are absorbed by odd-part comparisons downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .linalg import AbMap, FpAb, ab_image, intmat, zeros
from .rings import SqClassGroup

RElem = dict  # bitmask -> integer coefficient


def r_elem(items=()) -> RElem:
    out: RElem = {}
    for g, c in dict(items).items():
        if c:
            out[g] = out.get(g, 0) + c
    return {g: c for g, c in out.items() if c}


def r_one() -> RElem:
    return {0: 1}


def r_add(x: RElem, y: RElem) -> RElem:
    out = dict(x)
    for g, c in y.items():
        out[g] = out.get(g, 0) + c
        if not out[g]:
            del out[g]
    return out


def r_neg(x: RElem) -> RElem:
    return {g: -c for g, c in x.items()}

def r_sub(x: RElem, y: RElem) -> RElem:
    return r_add(x, r_neg(y))


def r_scale(n: int, x: RElem) -> RElem:
    if not n:
        return {}
    return {g: n * c for g, c in x.items()}


def r_mul(x: RElem, y: RElem) -> RElem:
    out: RElem = {}
    for g, c in x.items():
        for h, d in y.items():
            k = g ^ h
            out[k] = out.get(k, 0) + c * d
    return {g: c for g, c in out.items() if c}


def augment(x: RElem) -> int:
    return sum(x.values())


def bracket(G: SqClassGroup, a) -> RElem:
    """The basis element <a> of Z[G]."""
    return {G.class_of(a): 1}


def dbl_bracket(G: SqClassGroup, a) -> RElem:
    """<<a>> = <a> - 1."""
    g = G.class_of(a)
    if g == 0:
        return {}
    return {g: 1, 0: -1}


def p_plus(G: SqClassGroup) -> RElem:
    """p_{-1}^+ = <-1> + 1 (the integral double of the idempotent e_{-1}^+)."""
    g = G.neg_one()
    if g == 0:
        return {0: 2}
    return {g: 1, 0: 1}


def r_vector(x: RElem, order: int) -> np.ndarray:
    out = zeros(1, order)[0]
    for g, c in x.items():
        out[g] = c
    return out


@dataclass(frozen=True)
class Character:
    """A character G -> {±1}, stored by its values on the group basis."""

    values: tuple  # one ±1 per basis element

    def __call__(self, g: int) -> int:
        out = 1
        for i, v in enumerate(self.values):
            if (g >> i) & 1 and v == -1:
                out = -out
        return out

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)


def characters(G: SqClassGroup) -> list[Character]:
    """All 2^rank characters; the trivial character comes first."""
    out = []
    for mask in range(1 << G.rank):
        vals = tuple(-1 if (mask >> i) & 1 else 1 for i in range(G.rank))
        out.append(Character(vals))
    return out


def chi_ideal_rows(G: SqClassGroup, chi: Character) -> np.ndarray:
    """Z-lattice of the ideal R^chi, generated by g - chi(g) over g in G
    (a group basis suffices; the full set keeps the lattice obvious)."""
    n = G.order
    rows = []
    for g in range(n):
        row = [0] * n
        row[g] += 1
        row[0] -= chi(g)
        if any(row):
            rows.append(row)
    return intmat(rows) if rows else zeros(0, n)


class RModPres:
    """Finitely presented Z[G]-module, flattened over the Z-basis
    (group element, generator): index = g * ngens + j."""

    def __init__(self, G: SqClassGroup, ngens: int, relations: Sequence[Sequence[RElem]] = ()):
        self.G = G
        self.ngens = ngens
        self.relations = [list(r) for r in relations]
        for r in self.relations:
            if len(r) != ngens:
                raise ValueError("relation width does not match generator count")
        self._flat: Optional[FpAb] = None

    @property
    def flat_ngens(self) -> int:
        return self.G.order * self.ngens

    def flat_index(self, g: int, j: int) -> int:
        return g * self.ngens + j

    def flat_row(self, rel: Sequence[RElem], translate: int = 0) -> np.ndarray:
        row = zeros(1, self.flat_ngens)[0]
        for j, x in enumerate(rel):
            for g, c in x.items():
                row[self.flat_index(g ^ translate, j)] += c
        return row

    def flat_rows(self) -> list[np.ndarray]:
        """All G-translates of the defining relations (duplicates kept)."""
        rows = []
        for rel in self.relations:
            for t in range(self.G.order):
                rows.append(self.flat_row(rel, t))
        return rows

    def flatten(self) -> FpAb:
        if self._flat is None:
            rows = self.flat_rows()
            rels = np.vstack(rows) if rows else zeros(0, self.flat_ngens)
            self._flat = FpAb(self.flat_ngens, rels)
        return self._flat

    def act_matrix(self, g: int) -> np.ndarray:
        """Permutation matrix of the action of g on the flattened basis."""
        n = self.flat_ngens
        m = zeros(n, n)
        for h in range(self.G.order):
            for j in range(self.ngens):
                m[self.flat_index(h, j), self.flat_index(h ^ g, j)] = 1
        return m

    def chi_localize(self, chi: Character) -> FpAb:
        """M_chi = M / R^chi M, presented directly on the module generators
        by evaluating every group coefficient through chi."""
        rows = []
        for rel in self.relations:
            row = [0] * self.ngens
            for j, x in enumerate(rel):
                for g, c in x.items():
                    row[j] += chi(g) * c
            rows.append(row)
        rels = intmat(rows) if rows else zeros(0, self.ngens)
        return FpAb(self.ngens, rels)

    def _half_part(self, g: int, sign: int) -> FpAb:
        flat = self.flatten()
        mult = self.act_matrix(g)
        for i in range(self.flat_ngens):
            mult[i, i] += sign
        f = AbMap(flat, flat, mult, check=False)
        return ab_image(f)

    def plus_part(self, g: int) -> FpAb:
        """Image of multiplication by (g + 1); its odd part is e_+^g M."""
        return self._half_part(g, +1)

    def minus_part(self, g: int) -> FpAb:
        """Image of multiplication by (g - 1); its odd part is e_-^g M."""
        return self._half_part(g, -1)

    def twist(self, chi: Character) -> "RModPres":
        """The chi-twisted module: <a> acts as chi(a)<a>."""
        new_rels = []
        for rel in self.relations:
            new_rels.append([{g: chi(g) * c for g, c in x.items()} for x in rel])
        return RModPres(self.G, self.ngens, new_rels)

def free_module(G: SqClassGroup, ngens: int) -> RModPres:
    return RModPres(G, ngens, [])


def chi_localize(m: RModPres, chi: Character) -> FpAb:
    return m.chi_localize(chi)


def plus_part(m: RModPres, g: int) -> FpAb:
    return m.plus_part(g)


def minus_part(m: RModPres, g: int) -> FpAb:
    return m.minus_part(g)


def twist(m: RModPres, chi: Character) -> RModPres:
    return m.twist(chi)
