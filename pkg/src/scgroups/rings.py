"""Finite fields GF(p^d) and finite commutative local rings (Z/p^n and
truncated polynomial rings GF(q)[t]/(t^m)) with exact, fully enumerated
arithmetic: units, the set W = {a : a and 1-a invertible}, the one-units
U1 = 1 + m, square classes, and residue maps.

All rings in scope are small (at most a few thousand elements), so every
structure is tabulated once at construction and lookups are O(1).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_decompose(q: int) -> Optional[tuple[int, int]]:
    """Return (p, d) with q = p^d, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p:
            continue
        d = 0
        m = q
        while m % p == 0:
            m //= p
            d += 1
        return (p, d) if m == 1 else None
    return (q, 1)


# |F| values excluded by the size hypothesis (p-1)d > 6
_SMALL_FIELD_SIZES = {2, 3, 4, 5, 7, 8, 9, 16, 27, 32, 64}


def sufficiently_large(q: int) -> bool:
    if prime_power_decompose(q) is None:
        raise ValueError(f"{q} is not a prime power")
    return q not in _SMALL_FIELD_SIZES


class Ring:
    """Base class: a finite commutative local ring with tabulated arithmetic.

    Elements are opaque hashable values; ``elements`` fixes the canonical
    enumeration order used everywhere for reproducibility.
    """

    kind: str
    label: str

    def __init__(self):
        self.elements = self._enumerate()
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.zero = self.elements[0]
        self.one = self._one()
        self.units = [x for x in self.elements if self._inverse(x) is not None]
        self._inv = {u: self._inverse(u) for u in self.units}
        self._unit_set = set(self.units)
        self.w_set = [a for a in self.units if self.sub(self.one, a) in self._unit_set]
        self.u1 = [a for a in self.units if a not in set(self.w_set)]

    # arithmetic to be provided by subclasses
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def _enumerate(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _inverse(self, a):
        raise NotImplementedError

    def residue_field(self) -> "GF":
        raise NotImplementedError

    def residue(self, a):
        """Image of a in the residue field."""
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        r = self._inv.get(a)
        if r is None:
            raise ValueError(f"{a!r} is not a unit of {self.label}")
        return r

    def is_unit(self, a) -> bool:
        return a in self._unit_set

    def neg_one(self):
        return self.neg(self.one)

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        out = self.one
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def from_int(self, n: int):
        """Image of the integer n under Z -> ring."""
        out = self.zero
        step = self.one if n >= 0 else self.neg(self.one)
        for _ in range(abs(n)):
            out = self.add(out, step)
        return out

    def size(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"Ring({self.label})"


def _poly_mul_mod(a: tuple, b: tuple, modulus: tuple, p: int) -> tuple:
    d = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by the monic modulus
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if not c:
            continue
        prod[k] = 0
        for j in range(d):
            prod[k - d + j] = (prod[k - d + j] - c * modulus[j]) % p
    out = prod[:d]
    out += [0] * (d - len(out))
    return tuple(out)


def _poly_is_irreducible(coeffs: tuple, p: int) -> bool:
    """Trial division of the monic polynomial by all monic polynomials of
    degree 1..deg/2 over GF(p)."""
    d = len(coeffs) - 1
    for deg in range(1, d // 2 + 1):
        for enc in range(p**deg):
            div = _decode_poly(enc, p, deg) + (1,)
            if _poly_divides(div, coeffs, p):
                return False
    return True


def _decode_poly(enc: int, p: int, length: int) -> tuple:
    out = []
    for _ in range(length):
        out.append(enc % p)
        enc //= p
    return tuple(out)


def _poly_divides(div: tuple, f: tuple, p: int) -> bool:
    r = list(f)
    dd = len(div) - 1
    inv_lead = pow(div[-1], -1, p)
    while len(r) - 1 >= dd:
        c = (r[-1] * inv_lead) % p
        if c:
            for j in range(dd + 1):
                r[len(r) - 1 - dd + j] = (r[len(r) - 1 - dd + j] - c * div[j]) % p
        r.pop()
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if len(r) == 1:
            break
    return all(x == 0 for x in r)


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, d: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree d over GF(p),
    scanning low-order coefficient vectors in integer-encoding order."""
    if d == 1:
        return (0, 1)
    for enc in range(p**d):
        coeffs = _decode_poly(enc, p, d) + (1,)
        if _poly_is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible modulus found")


class GF(Ring):
    """GF(p^d); elements are coefficient tuples over Z/p (degree-1 fields
    use plain ints)."""

    kind = "field"

    def __init__(self, p: int, d: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.d = d
        self.q = p**d
        self.modulus = smallest_irreducible(p, d) if d > 1 else None
        self.label = f"gf({p})" if d == 1 else f"gf({p}^{d})"
        super().__init__()

    def _enumerate(self):
        if self.d == 1:
            return list(range(self.p))
        return [_decode_poly(e, self.p, self.d) for e in range(self.q)]

    def _one(self):
        if self.d == 1:
            return 1
        return (1,) + (0,) * (self.d - 1)

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.d == 1:
            return (-a) % self.p
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        if self.d == 1:
            return (a * b) % self.p
        return _poly_mul_mod(a, b, self.modulus, self.p)

    def _inverse(self, a):
        if self.d == 1:
            return pow(a, -1, self.p) if a % self.p else None
        if all(x == 0 for x in a):
            return None
        # a^(q-2) in the unit group
        return self.power_nocheck(a, self.q - 2)

    def power_nocheck(self, a, n):
        out = self._one()
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def residue_field(self):
        return self

    def residue(self, a):
        return a


class ZMod(Ring):
    """Z/p^n; elements are ints in [0, p^n)."""

    kind = "zmod"

    def __init__(self, p: int, n: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("exponent must be >= 1")
        self.p = p
        self.n = n
        self.modulus = p**n
        self.label = f"z/{p}" if n == 1 else f"z/{p}^{n}"
        self._res = GF(p, 1)
        super().__init__()

    def _enumerate(self):
        return list(range(self.modulus))

    def _one(self):
        return 1 % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def _inverse(self, a):
        if a % self.p == 0:
            return None
        return pow(a, -1, self.modulus)

    def residue_field(self):
        return self._res

    def residue(self, a):
        return a % self.p


class TruncPoly(Ring):
    """GF(q)[t]/(t^m); elements are m-tuples of base field elements."""

    kind = "tpoly"

    def __init__(self, base: GF, m: int):
        if m < 1:
            raise ValueError("truncation order must be >= 1")
        self.base = base
        self.m = m
        self.p = base.p
        self.label = f"{base.label}[t]/t^{m}"
        super().__init__()

    def _enumerate(self):
        elems = [()]
        for _ in range(self.m):
            elems = [e + (x,) for e in elems for x in self.base.elements]
        # sort by base-index tuples for a stable canonical order
        elems.sort(key=lambda e: tuple(self.base.index[x] for x in e))
        return elems

    def _one(self):
        return (self.base.one,) + (self.base.zero,) * (self.m - 1)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        out = [self.base.zero] * self.m
        for i, x in enumerate(a):
            if x == self.base.zero:
                continue
            for j, y in enumerate(b):
                if i + j >= self.m:
                    break
                out[i + j] = self.base.add(out[i + j], self.base.mul(x, y))
        return tuple(out)

    def _inverse(self, a):
        if a[0] == self.base.zero:
            return None
        # constant-term inverse plus geometric-series correction
        c = self.base._inverse(a[0])
        inv = (c,) + (self.base.zero,) * (self.m - 1)
        # Newton iteration: x -> x*(2 - a*x), quadratic convergence
        for _ in range(self.m):
            ax = self.mul(a, inv)
            two_minus = self.sub(self.add(self._one(), self._one()), ax)
            inv = self.mul(inv, two_minus)
        return inv

    def residue_field(self):
        return self.base

    def residue(self, a):
        return a[0]


def make_ring(kind: str, p: int, extra) -> Ring:
    """Construct a ring: ('field', p, d), ('zmod', p, n), or
    ('tpoly', p, (d, m)) for GF(p^d)[t]/(t^m)."""
    if kind == "field":
        return GF(p, int(extra))
    if kind == "zmod":
        return ZMod(p, int(extra))
    if kind == "tpoly":
        d, m = extra
        return TruncPoly(GF(p, int(d)), int(m))
    raise ValueError(f"unknown ring kind {kind!r}")


_RING_RE = re.compile(
    r"""^\s*(?:
        gf\((?P<p1>\d+)(?:\^(?P<d1>\d+))?\)\s*\[t\]\s*/\s*t\^(?P<m>\d+)
      | gf\((?P<p2>\d+)(?:\^(?P<d2>\d+))?\)
      | z/(?P<p3>\d+)(?:\^(?P<n3>\d+))?
    )\s*$""",
    re.VERBOSE | re.IGNORECASE,
)


def parse_ring(desc: str) -> Ring:
    """Parse ring descriptors: gf(7), gf(3^2), z/7^2, gf(5)[t]/t^2."""
    try:
        return _parse_ring(desc)
    except ValueError as exc:
        raise ValueError(f"bad ring descriptor {desc!r}: {exc}") from None


def _parse_ring(desc: str) -> Ring:
    m = _RING_RE.match(desc)
    if not m:
        raise ValueError("unrecognized grammar")
    if m.group("p1"):
        p = int(m.group("p1"))
        d = int(m.group("d1") or 1)
        return TruncPoly(GF(p, d), int(m.group("m")))
    if m.group("p2"):
        p = int(m.group("p2"))
        d = int(m.group("d2") or 1)
        if not is_prime(p):
            pd = prime_power_decompose(p)
            if pd is None or d != 1:
                raise ValueError(f"{p} is not prime")
            p, d = pd
        return GF(p, d)
    p = int(m.group("p3"))
    n = int(m.group("n3") or 1)
    if not is_prime(p):
        pd = prime_power_decompose(p)
        if pd is None:
            raise ValueError(f"{p} is not a prime power")
        if n != 1:
            raise ValueError("use z/p^n with p prime")
        p, n = pd
    return ZMod(p, n)


@dataclass
class SqClassGroup:
    """The square-class group A^x/(A^x)^2 as an F2-vector space.

    Group elements are bitmasks over ``basis`` (multiplication is xor);
    ``class_of`` sends a unit to its class, ``reps`` picks the canonical
    unit representative of each class.
    """

    ring: Ring
    rank: int
    basis: list
    class_table: dict
    reps: list

    @property
    def order(self) -> int:
        return 1 << self.rank

    def class_of(self, a) -> int:
        try:
            return self.class_table[a]
        except KeyError:
            raise ValueError(f"{a!r} is not a unit of {self.ring.label}") from None

    def mul(self, g: int, h: int) -> int:
        return g ^ h

    def elements(self) -> range:
        return range(self.order)

    def rep(self, g: int):
        return self.reps[g]

    def neg_one(self) -> int:
        return self.class_of(self.ring.neg_one())


def square_classes(ring: Ring) -> SqClassGroup:
    """Partition the units into square classes by brute-force enumeration
    of the squares, then coordinatize the quotient as an F2-space."""
    squares = sorted({ring.index[ring.mul(u, u)] for u in ring.units})
    square_elems = [ring.elements[i] for i in squares]
    class_of_unit: dict = {}
    rep_of_class: list = []
    for u in ring.units:
        if u in class_of_unit:
            continue
        cid = len(rep_of_class)
        rep_of_class.append(u)
        for s in square_elems:
            class_of_unit[ring.mul(u, s)] = cid
    ncls = len(rep_of_class)
    # multiplication on discovery ids
    def cid_mul(i, j):
        return class_of_unit[ring.mul(rep_of_class[i], rep_of_class[j])]

    basis: list[int] = []
    mask_of_cid = {0: 0}  # identity class is discovered first (from ring.one? not guaranteed)
    # ensure identity class id
    ident = class_of_unit[ring.one]
    mask_of_cid = {ident: 0}
    span = [ident]
    for cid in range(ncls):
        if cid in mask_of_cid:
            continue
        bit = 1 << len(basis)
        basis.append(rep_of_class[cid])
        for old in list(mask_of_cid):
            new_cid = cid_mul(cid, old)
            mask_of_cid[new_cid] = mask_of_cid[old] | bit
    assert len(mask_of_cid) == ncls
    class_table = {u: mask_of_cid[c] for u, c in class_of_unit.items()}
    reps = [None] * ncls
    for cid, mask in mask_of_cid.items():
        reps[mask] = rep_of_class[cid]
    rank = len(basis)
    return SqClassGroup(
        ring=ring, rank=rank, basis=basis, class_table=class_table, reps=reps
    )


def class_of(ring: Ring, x) -> int:
    return square_classes(ring).class_of(x)


def units(ring: Ring) -> list:
    return list(ring.units)


def w_elements(ring: Ring) -> list:
    """W = {a : a and 1 - a are both units}."""
    return list(ring.w_set)


def u1_elements(ring: Ring) -> list:
    """U_1 = 1 + maximal ideal."""
    return list(ring.u1)


def residue(ring: Ring, x):
    return ring.residue(x)


def element_orders(ring: Ring) -> dict:
    out = {}
    for u in ring.units:
        n = 1
        x = u
        while x != ring.one:
            x = ring.mul(x, u)
            n += 1
        out[u] = n
    return out


def unit_group_basis(ring: Ring) -> tuple[list, list, dict]:
    """Decompose A^x as a direct sum of cyclic groups.

    Returns (gens, orders, dlog) where dlog maps each unit to its exponent
    tuple with respect to gens.  Greedy maximal-order extraction with
    brute-force representative adjustment; all unit groups in scope are
    tiny, so exhaustive search is exact and fast.
    """
    orders = element_orders(ring)
    gens: list = []
    gen_orders: list[int] = []
    # span: element -> exponent tuple
    span = {ring.one: ()}
    units_in_order = sorted(ring.units, key=lambda u: ring.index[u])
    while len(span) < len(ring.units):
        # order of u modulo the current span, with representative fix-up
        best = None
        for u in units_in_order:
            if u in span:
                continue
            k = 1
            x = u
            while x not in span:
                x = ring.mul(x, u)
                k += 1
            if best is None or k > best[0]:
                best = (k, u)
        k, u = best
        # adjust u by a span element so that its true order equals k
        chosen = None
        for h, exps in span.items():
            cand = ring.mul(u, h)
            if orders.get(cand, None) == k or _order_of(ring, cand) == k:
                chosen = cand
                break
        assert chosen is not None, "structure theorem guarantees a representative"
        gens.append(chosen)
        gen_orders.append(k)
        new_span = {}
        for h, exps in span.items():
            x = h
            for e in range(k):
                new_span[x] = exps + (e,)
                x = ring.mul(x, chosen)
        span = {h: exps for h, exps in new_span.items()}
    dlog = {u: span[u] for u in ring.units}
    # pad exponent tuples of elements recorded before later generators
    r = len(gens)
    for u in list(dlog):
        e = dlog[u]
        if len(e) < r:
            dlog[u] = e + (0,) * (r - len(e))
    return gens, gen_orders, dlog


def _order_of(ring: Ring, u) -> int:
    n = 1
    x = u
    while x != ring.one:
        x = ring.mul(x, u)
        n += 1
    return n
