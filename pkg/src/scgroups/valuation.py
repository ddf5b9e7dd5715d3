"""Symbolic elements of the refined scissors module of Q and their
specialization at a p-adic valuation: the map S_v into the induced module
over GF(p), its components delta_pi / delta_0 through (rho_0, rho_pi), the
sign-twisted variants through rho'_pi, and the eta maps into the tilde
pre-Bloch group of the residue field.

Square classes of Q are (sign, squarefree integer) pairs; module elements
are finite integer combinations of (class, rational parameter) symbols.
All reductions land in the exact presentations from the scissors module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .groupring import p_plus
from .linalg import FpAb, zeros
from .rings import GF, is_prime
from .scissors import ScissorsContext, context as scissors_context, rp_act


def _squarefree_decompose(n: int) -> int:
    """Squarefree part of a positive integer (trial division)."""
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1 if d == 2 else 2
    return out * n


@dataclass(frozen=True)
class QSqClass:
    """A square class of Q: sign and squarefree positive integer."""

    sign: int
    n: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        if self.n < 1 or _squarefree_decompose(self.n) != self.n:
            raise ValueError("representative must be squarefree and positive")

    def mul(self, other: "QSqClass") -> "QSqClass":
        import math

        g = math.gcd(self.n, other.n)
        return QSqClass(self.sign * other.sign, (self.n // g) * (other.n // g))

    def is_one(self) -> bool:
        return self.sign == 1 and self.n == 1

    def value(self) -> Fraction:
        return Fraction(self.sign * self.n)


QONE = QSqClass(1, 1)


def qclass(a) -> QSqClass:
    """Square class of a nonzero rational."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("0 has no square class")
    sign = 1 if a > 0 else -1
    n = _squarefree_decompose(abs(a.numerator)) * _squarefree_decompose(
        abs(a.denominator)
    )
    return QSqClass(sign, _squarefree_decompose(n))


def vp(a, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("0 has no valuation")
    v = 0
    num, den = abs(a.numerator), a.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def unit_part(a, p: int) -> Fraction:
    """The p-adic unit u with a = u * p^v(a)."""
    a = Fraction(a)
    return a / Fraction(p) ** vp(a, p)


# SymRP: finite formal sum over (QSqClass, parameter) with parameter not 0, 1.
SymRP = dict
# RingVal: element of Z[G_Q] with finite support.
RingVal = dict


def sym_gen(a, cls: QSqClass = QONE, coeff: int = 1) -> SymRP:
    a = Fraction(a)
    if a in (0, 1):
        raise ValueError("parameters 0 and 1 are excluded")
    return {(cls, a): coeff}


def sym_add(x: SymRP, y: SymRP) -> SymRP:
    out = dict(x)
    for k, c in y.items():
        out[k] = out.get(k, 0) + c
        if not out[k]:
            del out[k]
    return out


def sym_scale(n: int, x: SymRP) -> SymRP:
    return {k: n * c for k, c in x.items()} if n else {}


def sym_act(r: RingVal, x: SymRP) -> SymRP:
    out: SymRP = {}
    for g, c in r.items():
        for (h, a), d in x.items():
            k = (g.mul(h), a)
            out[k] = out.get(k, 0) + c * d
    return {k: c for k, c in out.items() if c}


def ring_one() -> RingVal:
    return {QONE: 1}


def ring_mul(x: RingVal, y: RingVal) -> RingVal:
    out: RingVal = {}
    for g, c in x.items():
        for h, d in y.items():
            k = g.mul(h)
            out[k] = out.get(k, 0) + c * d
    return {k: c for k, c in out.items() if c}


def ring_add(x: RingVal, y: RingVal) -> RingVal:
    out = dict(x)
    for g, c in y.items():
        out[g] = out.get(g, 0) + c
        if not out[g]:
            del out[g]
    return out


def ring_scale(n: int, x: RingVal) -> RingVal:
    return {g: n * c for g, c in x.items()} if n else {}


def sym_bracket(a) -> RingVal:
    return {qclass(a): 1}


def sym_dbl_bracket(a) -> RingVal:
    """<<a>> = <a> - 1 over the rational square classes."""
    g = qclass(a)
    if g.is_one():
        return {}
    return {g: 1, QONE: -1}


def sym_psi1(a) -> SymRP:
    """psi_1(a) = [a] + <-1>[1/a] for rational a not in {0, 1}; psi_1(1)=0."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("psi_1 needs a nonzero argument")
    if a == 1:
        return {}
    return sym_add(sym_gen(a), sym_gen(1 / a, qclass(-1)))


def sym_psi2(a) -> SymRP:
    a = Fraction(a)
    if a == 0:
        raise ValueError("psi_2 needs a nonzero argument")
    if a == 1:
        return {}
    cls1 = qclass(1 - a)
    return sym_add(
        sym_gen(a, cls1.mul(qclass(a))), sym_gen(1 / a, cls1)
    )


BASE_POINT = Fraction(2)


def sym_big_c() -> SymRP:
    """C over Q from the canonical base point 2: [2] + <-1>[-1] + <<-1>>psi_1(2)."""
    a = BASE_POINT
    out = sym_add(sym_gen(a), sym_gen(1 - a, qclass(-1)))
    return sym_add(out, sym_act(sym_dbl_bracket(1 - a), sym_psi1(a)))


def sym_g(a) -> SymRP:
    """g(a) = p_{-1}^+ [a] + <<1-a>> psi_1(a) for rational a not in {0, 1}."""
    a = Fraction(a)
    if a in (0, 1):
        raise ValueError("g(a) needs a not in {0, 1}")
    pp = ring_add(sym_bracket(-1), ring_one())
    out = sym_act(pp, sym_gen(a))
    return sym_add(out, sym_act(sym_dbl_bracket(1 - a), sym_psi1(a)))


def sym_y_relation(a, b) -> SymRP:
    """The refined five-term relation over Q (same sign convention as the
    finite-ring presentation)."""
    a, b = Fraction(a), Fraction(b)
    for t in (a, b, a / b):
        if t in (0, 1):
            raise ValueError("inadmissible pair")
    t3 = b / a
    t4 = (1 - 1 / a) / (1 - 1 / b)
    t5 = (1 - a) / (1 - b)
    out = sym_gen(a)
    out = sym_add(out, sym_scale(-1, sym_gen(b)))
    out = sym_add(out, sym_gen(t3, qclass(a)))
    out = sym_add(out, sym_scale(-1, sym_gen(t4, qclass(1 / a - 1))))
    out = sym_add(out, sym_gen(t5, qclass(1 - a)))
    return out


# ---------------------------------------------------------------------------
# specialization


class RPtElem:
    """An element of RP~(k), held as a flat coordinate vector."""

    def __init__(self, ctx: "SpecializationContext", vec: np.ndarray):
        self.ctx = ctx
        self.vec = vec

    def is_zero(self) -> bool:
        return self.ctx.rp_tilde.contains(self.vec)

    def __eq__(self, other):
        if not isinstance(other, RPtElem) or other.ctx is not self.ctx:
            return NotImplemented
        return self.ctx.rp_tilde.contains(self.vec - other.vec)

    def __sub__(self, other: "RPtElem") -> "RPtElem":
        return RPtElem(self.ctx, self.vec - other.vec)


class PtElem:
    """An element of P~(k), held as a coordinate vector over W."""

    def __init__(self, ctx: "SpecializationContext", vec: np.ndarray):
        self.ctx = ctx
        self.vec = vec

    def is_zero(self) -> bool:
        return self.ctx.p_tilde.contains(self.vec)

    def __eq__(self, other):
        if not isinstance(other, PtElem) or other.ctx is not self.ctx:
            return NotImplemented
        return self.ctx.p_tilde.contains(self.vec - other.vec)


@dataclass
class IndElem:
    """Image of S_v through (rho_0, rho_pi): a pair of RP~(k) elements."""

    comp0: RPtElem
    comp_pi: RPtElem

    def is_zero(self) -> bool:
        return self.comp0.is_zero() and self.comp_pi.is_zero()


class SpecializationContext:
    """Specialization of symbolic RP(Q) elements at the prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < 11:
            raise ValueError("residue field must be sufficiently large (p >= 11)")
        self.p = p
        self.k: GF = GF(p)
        self.sc: ScissorsContext = scissors_context(self.k)
        tb = self.sc.tilde()
        self.rp_tilde: FpAb = tb.rp_tilde
        self.p_tilde: FpAb = tb.p_tilde
        self._ck_vec = self.sc.rp_vector(self.sc.big_c())

    # residue of a p-adic unit rational, as an element of GF(p)
    def residue(self, a) -> int:
        a = Fraction(a)
        if vp(a, self.p) != 0:
            raise ValueError(f"{a} is not a p-adic unit")
        return (a.numerator * pow(a.denominator, -1, self.p)) % self.p

    def _case_vector(self, a: Fraction) -> np.ndarray:
        """The RP~(k) coordinate of S_v on a single symbol [a]."""
        v = vp(a, self.p)
        if v > 0:
            return self._ck_vec
        if v < 0:
            return -self._ck_vec
        abar = self.residue(a)
        if abar == 1:
            # parameters reducing to 1 specialize to 0 (their classes
            # generate the kernel L_v of S_v)
            return zeros(1, self.rp_tilde.ngens)[0]
        return self.sc.rp_vector({(0, abar): 1})

    def _class_data(self, cls: QSqClass) -> tuple[int, int]:
        """(valuation parity source r, residue class of the unit part)."""
        q = cls.value()
        r = vp(q, self.p)
        u = unit_part(q, self.p)
        ubar = self.residue(u)
        return r, self.sc.G.class_of(ubar)

    def s_v(self, x: SymRP) -> IndElem:
        """S_v followed by (rho_0, rho_pi), reduced in RP~(GF(p))."""
        n = self.rp_tilde.ngens
        c0 = zeros(1, n)[0]
        cpi = zeros(1, n)[0]
        for (cls, a), coeff in x.items():
            base = self._case_vector(Fraction(a))
            r, gbar = self._class_data(cls)
            moved = self._act_vec(gbar, base)
            c0 = c0 + coeff * moved
            if r % 2:
                cpi = cpi + coeff * moved
        return IndElem(RPtElem(self, c0), RPtElem(self, cpi))

    def _act_vec(self, g: int, vec: np.ndarray) -> np.ndarray:
        if g == 0:
            return vec
        perm = self.sc.refined().act_matrix(g)
        return vec @ perm

    def delta_pi(self, x: SymRP) -> RPtElem:
        return self.s_v(x).comp_pi

    def delta_0(self, x: SymRP) -> RPtElem:
        return self.s_v(x).comp0

    def delta_pi_prime(self, x: SymRP) -> RPtElem:
        """rho'_pi composite: <a> (x) m -> (-1)^{v(a)} <u_a-bar> m."""
        n = self.rp_tilde.ngens
        out = zeros(1, n)[0]
        for (cls, a), coeff in x.items():
            base = self._case_vector(Fraction(a))
            r, gbar = self._class_data(cls)
            sign = -1 if r % 2 else 1
            out = out + coeff * sign * self._act_vec(gbar, base)
        return RPtElem(self, out)

    def _to_p_tilde(self, x: RPtElem) -> PtElem:
        mat = self.sc.coinvariants_map()
        return PtElem(self, x.vec @ mat)

    def eta_pi(self, x: SymRP) -> PtElem:
        return self._to_p_tilde(self.delta_pi(x))

    def eta_pi_prime(self, x: SymRP) -> PtElem:
        return self._to_p_tilde(self.delta_pi_prime(x))

    def p_tilde_scale(self, n: int, x: PtElem) -> PtElem:
        return PtElem(self, n * x.vec)

    def reduce_rp_elem(self, x) -> RPtElem:
        """Reduce a finite-ring RPElem of GF(p) in RP~(GF(p))."""
        return RPtElem(self, self.sc.rp_vector(x))

    def surjectivity_witness(self, abar: int) -> tuple[SymRP, bool]:
        """Preimage <<p>> g(a) of g(abar) under delta_pi, with the check
        that it does map onto g(abar) modulo relations."""
        if abar not in self.sc.windex:
            raise ValueError(f"{abar} is not in W of GF({self.p})")
        a = Fraction(int(abar))
        x = sym_act(sym_dbl_bracket(self.p), sym_g(a))
        img = self.delta_pi(x)
        target = self.reduce_rp_elem(self.sc.g_gen(abar))
        return x, img == target


@lru_cache(maxsize=None)
def specialization(p: int) -> SpecializationContext:
    return SpecializationContext(p)
