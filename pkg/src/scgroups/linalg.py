"""Exact integer linear algebra: Hermite/Smith normal forms and a calculus
of finitely presented abelian groups.

Matrices are numpy 2-D arrays.  Public constructors produce ``dtype=object``
arrays holding Python ints, so every computation is exact.  The Hermite
reduction used for large relation matrices runs on an ``int64`` fast path
and promotes a row to ``object`` before any operation that could overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

_INT64_BOUND = 2**62


def intmat(data) -> np.ndarray:
    """Build an exact integer matrix (object dtype, Python ints)."""
    if isinstance(data, np.ndarray) and data.ndim == 2:
        rows, cols = data.shape
        out = np.empty((rows, cols), dtype=object)
        for i in range(rows):
            for j in range(cols):
                out[i, j] = int(data[i, j])
        return out
    data = list(data)
    rows = len(data)
    cols = len(data[0]) if rows else 0
    out = np.empty((rows, cols), dtype=object)
    for i, row in enumerate(data):
        row = list(row)
        if len(row) != cols:
            raise ValueError("ragged matrix data")
        for j, x in enumerate(row):
            out[i, j] = int(x)
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out[...] = 0
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _obj_row(r) -> np.ndarray:
    out = np.empty(len(r), dtype=object)
    for i, x in enumerate(r):
        out[i] = int(x)
    return out


def _row_max(r: np.ndarray) -> int:
    if r.size == 0:
        return 0
    return int(np.abs(r).max())


class _Echelon:
    """Incremental row-echelon basis over Z with exact arithmetic.

    Rows are inserted one at a time; each basis row has its first nonzero
    entry (the pivot) positive.  Rows that reduce to zero are reported via
    the return value of :meth:`insert`, which carries the augmented part
    when ``aug`` columns are attached (used for kernels and transforms).
    """

    def __init__(self, ncols: int, aug: int = 0):
        self.n = ncols
        self.aug = aug
        self.pivots: dict[int, np.ndarray] = {}

    def _first_nonzero(self, r: np.ndarray, start: int) -> Optional[int]:
        nz = np.flatnonzero(r[start : self.n])
        if nz.size == 0:
            return None
        return start + int(nz[0])

    def insert(self, row: np.ndarray) -> Optional[np.ndarray]:
        """Insert a row; return the reduced row if it vanished on the main
        part (its augmented tail is then a kernel/transform witness)."""
        r = row
        start = 0
        while True:
            j = self._first_nonzero(r, start)
            if j is None:
                return r
            b = self.pivots.get(j)
            if b is None:
                if r[j] < 0:
                    r = -r
                self.pivots[j] = r
                return None
            bj, rj = int(b[j]), int(r[j])
            q, rem = divmod(rj, bj)
            if rem == 0:
                r = self._combine(r, -q, b)
            else:
                g, x, y = xgcd(bj, rj)
                new_b = self._combine2(x, b, y, r)
                r = self._combine2(-(rj // g), b, bj // g, r)
                self.pivots[j] = new_b
            start = j + 1

    def _combine(self, r: np.ndarray, q: int, b: np.ndarray) -> np.ndarray:
        # r + q*b, promoting away from int64 when the bound requires it
        if r.dtype == np.int64 or b.dtype == np.int64:
            bound = _row_max(r) + abs(q) * _row_max(b)
            if bound >= _INT64_BOUND:
                r = _obj_row(r)
                b = _obj_row(b)
        return r + q * b

    def _combine2(self, x: int, a: np.ndarray, y: int, b: np.ndarray) -> np.ndarray:
        if a.dtype == np.int64 or b.dtype == np.int64:
            bound = abs(x) * _row_max(a) + abs(y) * _row_max(b)
            if bound >= _INT64_BOUND:
                a = _obj_row(a)
                b = _obj_row(b)
        return x * a + y * b

    def basis(self) -> list[np.ndarray]:
        """Canonical interreduced basis rows, pivots ascending, entries
        above each pivot reduced into [0, pivot)."""
        cols = sorted(self.pivots)
        rows = [self.pivots[j] for j in cols]
        for k, jk in enumerate(cols):
            pk = int(rows[k][jk])
            for i in range(k):
                q = int(rows[i][jk]) // pk
                if q:
                    rows[i] = self._combine(rows[i], -q, rows[k])
        return rows


def _to_sparse_rows(mat, ncols: int) -> list[dict]:
    out = []
    for row in mat:
        if isinstance(row, dict):
            out.append({int(j): int(v) for j, v in row.items() if v})
        else:
            out.append({j: int(v) for j, v in enumerate(row) if v})
    return out


def _sparse_reduce(rows: list[dict], main: int) -> tuple[list[dict], list[dict]]:
    """Unimodular row reduction of sparse rows, eliminating on the columns
    [0, main) with a Markowitz-style pivot rule (fewest entries in the
    column, then smallest absolute pivot value, then sparsest row).

    Columns >= main are carried along untouched (augmentation).  Returns
    (retired, zeroed): ``retired`` pairs each surviving row with its
    retirement column and forms a triangular generating set of the
    lattice; ``zeroed`` are rows whose main part vanished.  This staged
    reduction is what keeps entries small on the large five-term relation
    matrices; naive leftmost-pivot elimination blows up.
    """
    live: dict[int, dict] = {}
    nnz_main: dict[int, int] = {}
    col_rows: dict[int, set] = {}
    zeroed: list[dict] = []
    for rid, r in enumerate(rows):
        r = {j: v for j, v in r.items() if v}
        mains = [j for j in r if j < main]
        if not mains:
            if r:
                zeroed.append(r)
            continue
        live[rid] = r
        nnz_main[rid] = len(mains)
        for j in mains:
            col_rows.setdefault(j, set()).add(rid)

    def row_addmul(rid: int, q: int, src: dict):
        # row[rid] += q * src
        r = live[rid]
        for j, v in src.items():
            nv = r.get(j, 0) + q * v
            if nv:
                if j not in r and j < main:
                    nnz_main[rid] += 1
                    col_rows[j].add(rid)
                r[j] = nv
            elif j in r:
                del r[j]
                if j < main:
                    nnz_main[rid] -= 1
                    col_rows[j].discard(rid)

    retired: list[dict] = []
    import heapq

    heap = [(len(s), j) for j, s in col_rows.items() if s]
    heapq.heapify(heap)
    while heap:
        l, j = heapq.heappop(heap)
        s = col_rows.get(j)
        if not s:
            continue
        if len(s) != l:
            heapq.heappush(heap, (len(s), j))
            continue
        while len(col_rows[j]) > 1:
            rid0 = min(
                col_rows[j],
                key=lambda rid: (abs(live[rid][j]), nnz_main[rid], rid),
            )
            if live[rid0][j] < 0:
                live[rid0] = {c: -v for c, v in live[rid0].items()}
            piv = live[rid0][j]
            src = dict(live[rid0])
            for rid in list(col_rows[j]):
                if rid == rid0:
                    continue
                q = live[rid][j] // piv
                if q:
                    row_addmul(rid, -q, src)
        (rid0,) = col_rows[j]
        r = live.pop(rid0)
        nnz_main.pop(rid0)
        for c in r:
            if c < main:
                col_rows[c].discard(rid0)
        retired.append((j, r))
    for r in live.values():
        if any(c < main for c in r):
            raise AssertionError("sparse reduction left a main-part entry")
        if r:
            zeroed.append(r)
    return retired, zeroed


def _dense_work_row(r: dict, width: int) -> np.ndarray:
    if all(abs(v) < _INT64_BOUND for v in r.values()):
        out = np.zeros(width, dtype=np.int64)
    else:
        out = np.empty(width, dtype=object)
        out[...] = 0
    for j, v in r.items():
        out[j] = v
    return out


def _echelonize(sparse_rows: list[dict], main: int, width: int) -> tuple[list, list]:
    """Canonical echelon pass over pre-reduced rows.  Returns (basis rows,
    rows that died on the main part)."""
    ech = _Echelon(main)
    dead = []
    order = sorted(
        range(len(sparse_rows)),
        key=lambda i: (
            min((j for j in sparse_rows[i] if j < main), default=main),
            len(sparse_rows[i]),
            i,
        ),
    )
    for i in order:
        d = ech.insert(_dense_work_row(sparse_rows[i], width))
        if d is not None:
            dead.append(d)
    return ech.basis(), dead


def sparse_rank_and_pivots(rows, ncols: int) -> tuple[int, list[int]]:
    """Exact rank of the row lattice plus the staircase pivot values of
    the reduction.  The retired rows are triangular on their retirement
    columns (later rows vanish there), so all pivots equal to 1 certifies
    a unimodular maximal minor, i.e. the lattice is a direct summand,
    without computing a canonical form.
    """
    sparse = _to_sparse_rows(rows, ncols)
    retired, _ = _sparse_reduce(sparse, ncols)
    pivots = [abs(int(r[c])) for c, r in retired]
    return len(retired), pivots


def hnf_rows(mat, ncols: Optional[int] = None) -> np.ndarray:
    """Canonical row-style Hermite basis of the row lattice of ``mat``.

    ``mat`` may be a 2-D array or an iterable of rows (dense rows or sparse
    {col: value} dicts).  The result is an r x ncols object matrix in
    echelon form with positive pivots and the entries above each pivot
    reduced into [0, pivot).
    """
    if isinstance(mat, np.ndarray):
        if ncols is None:
            ncols = mat.shape[1]
        rows = _to_sparse_rows(mat, ncols)
    else:
        rows = list(mat)
        if ncols is None:
            if not rows or isinstance(rows[0], dict):
                raise ValueError("ncols is required for sparse or empty input")
            ncols = len(rows[0])
        rows = _to_sparse_rows(rows, ncols)
    retired, _ = _sparse_reduce(rows, ncols)
    basis, _ = _echelonize([r for _, r in retired], ncols, ncols)
    out = zeros(len(basis), ncols)
    for i, r in enumerate(basis):
        for j in range(ncols):
            out[i, j] = int(r[j])
    return out


def hnf(mat) -> np.ndarray:
    """Column-style Hermite normal form (the canonical key convention:
    nonnegative pivots, entries left of each pivot reduced into [0, pivot))."""
    m = mat if isinstance(mat, np.ndarray) else intmat(mat)
    return hnf_rows(m.T.copy()).T.copy()


def hnf_with_transform(mat) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (H, T, K): H the canonical row-Hermite basis, T with
    T @ mat giving the basis rows, and K a basis of the left kernel."""
    m = mat if isinstance(mat, np.ndarray) else intmat(mat)
    nrows, ncols = m.shape
    rows = _to_sparse_rows(m, ncols)
    for i, r in enumerate(rows):
        r[ncols + i] = 1
    width = ncols + nrows
    retired, zeroed = _sparse_reduce(rows, ncols)
    basis, dead = _echelonize([r for _, r in retired], ncols, width)
    kernel_rows = [{j - ncols: v for j, v in r.items()} for r in zeroed]
    kernel_rows += [
        {j: int(v) for j, v in enumerate(r[ncols:]) if v} for r in dead
    ]
    h = zeros(len(basis), ncols)
    t = zeros(len(basis), nrows)
    for i, r in enumerate(basis):
        for j in range(ncols):
            h[i, j] = int(r[j])
        for j in range(nrows):
            t[i, j] = int(r[ncols + j])
    if kernel_rows:
        k = hnf_rows(kernel_rows, nrows)
    else:
        k = zeros(0, nrows)
    return h, t, k


def left_kernel(mat) -> np.ndarray:
    """Basis (canonical HNF rows) of {x : x @ mat = 0}."""
    _, _, k = hnf_with_transform(mat)
    return k


def solve_in_rows(basis: np.ndarray, v) -> Optional[np.ndarray]:
    """Coordinates of v in terms of the echelon basis rows, or None if v
    is not in the row lattice."""
    n = basis.shape[1]
    r = _obj_row(v)
    if len(r) != n:
        raise ValueError("dimension mismatch")
    coeffs = [0] * basis.shape[0]
    piv = []
    for i in range(basis.shape[0]):
        for j in range(n):
            if basis[i, j]:
                piv.append(j)
                break
    for i, j in enumerate(piv):
        q, rem = divmod(int(r[j]), int(basis[i, j]))
        if rem:
            return None
        if q:
            r = r - q * basis[i]
        coeffs[i] = q
    if any(int(x) for x in r):
        return None
    return _obj_row(coeffs)


def row_lattice_contains(basis: np.ndarray, v) -> bool:
    return solve_in_rows(basis, v) is not None


def lattice_intersect(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Canonical basis of (row lattice of a) ∩ (row lattice of b)."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return zeros(0, a.shape[1])
    stacked = np.vstack([a, -b])
    k = left_kernel(stacked)
    ya = k[:, : a.shape[0]]
    rows = ya @ a
    return hnf_rows(rows)


@dataclass
class SmithData:
    """Exact Smith decomposition u @ a @ v = s."""

    s: np.ndarray
    u: np.ndarray
    v: np.ndarray
    rank: int

    def diagonal(self) -> list[int]:
        m, n = self.s.shape
        return [int(self.s[i, i]) for i in range(min(m, n))]


def _pivot_search(a: np.ndarray, t: int) -> Optional[tuple[int, int]]:
    m, n = a.shape
    nnz_row = [sum(1 for j in range(t, n) if a[i, j]) for i in range(m)]
    nnz_col = [sum(1 for i in range(t, m) if a[i, j]) for j in range(n)]
    best = None
    best_key = None
    for i in range(t, m):
        if not nnz_row[i]:
            continue
        for j in range(t, n):
            x = a[i, j]
            if not x:
                continue
            key = (abs(int(x)), (nnz_row[i] - 1) * (nnz_col[j] - 1), i, j)
            if best_key is None or key < best_key:
                best_key = key
                best = (i, j)
    return best


def snf(mat) -> SmithData:
    """Smith normal form with unimodular transforms.

    Pivoting picks the minimal-absolute-value entry with a Markowitz-style
    fill-in tiebreak, which keeps entries small on the sparse relation
    matrices this library produces.
    """
    a = intmat(mat)
    m, n = a.shape
    u = identity(m)
    v = identity(n)
    t = 0
    while t < min(m, n):
        pos = _pivot_search(a, t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            a[[t, i], :] = a[[i, t], :]
            u[[t, i], :] = u[[i, t], :]
        if j != t:
            a[:, [t, j]] = a[:, [j, t]]
            v[:, [t, j]] = v[:, [j, t]]
        while True:
            for i in range(t + 1, m):
                x = int(a[i, t])
                if not x:
                    continue
                p = int(a[t, t])
                q, rem = divmod(x, p)
                if rem == 0:
                    a[i, t:] -= q * a[t, t:]
                    u[i, :] -= q * u[t, :]
                else:
                    g, xx, yy = xgcd(p, x)
                    rt, ri = a[t, t:].copy(), a[i, t:].copy()
                    a[t, t:] = xx * rt + yy * ri
                    a[i, t:] = -(x // g) * rt + (p // g) * ri
                    ut, ui = u[t, :].copy(), u[i, :].copy()
                    u[t, :] = xx * ut + yy * ui
                    u[i, :] = -(x // g) * ut + (p // g) * ui
            for j in range(t + 1, n):
                x = int(a[t, j])
                if not x:
                    continue
                p = int(a[t, t])
                q, rem = divmod(x, p)
                if rem == 0:
                    a[t:, j] -= q * a[t:, t]
                    v[:, j] -= q * v[:, t]
                else:
                    g, xx, yy = xgcd(p, x)
                    ct, cj = a[t:, t].copy(), a[t:, j].copy()
                    a[t:, t] = xx * ct + yy * cj
                    a[t:, j] = -(x // g) * ct + (p // g) * cj
                    vt, vj = v[:, t].copy(), v[:, j].copy()
                    v[:, t] = xx * vt + yy * vj
                    v[:, j] = -(x // g) * vt + (p // g) * vj
            # the row pass just cleared row t; stop once column t survived it
            if all(not a[i, t] for i in range(t + 1, m)):
                break
        t += 1
    rank = t
    # divisibility chain on the nonzero diagonal
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            di, dj = int(a[i, i]), int(a[i + 1, i + 1])
            if dj % di == 0:
                continue
            changed = True
            a[:, i] += a[:, i + 1]
            v[:, i] += v[:, i + 1]
            g, x, y = xgcd(di, dj)
            ri, rj = a[i, :].copy(), a[i + 1, :].copy()
            a[i, :] = x * ri + y * rj
            a[i + 1, :] = -(dj // g) * ri + (di // g) * rj
            ui, uj = u[i, :].copy(), u[i + 1, :].copy()
            u[i, :] = x * ui + y * uj
            u[i + 1, :] = -(dj // g) * ui + (di // g) * uj
            q = int(a[i, i + 1]) // g
            a[:, i + 1] -= q * a[:, i]
            v[:, i + 1] -= q * v[:, i]
    for i in range(rank):
        if a[i, i] < 0:
            a[i, :] = -a[i, :]
            u[i, :] = -u[i, :]
    return SmithData(s=a, u=u, v=v, rank=rank)


def dump_matrix(mat: np.ndarray) -> str:
    """Plain-text row-major dump: 'rows cols' header, then entries."""
    rows, cols = mat.shape
    lines = [f"{rows} {cols}"]
    for i in range(rows):
        lines.append(" ".join(str(int(x)) for x in mat[i]))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    tokens = text.split()
    rows, cols = int(tokens[0]), int(tokens[1])
    vals = tokens[2:]
    if len(vals) != rows * cols:
        raise ValueError("matrix dump has wrong entry count")
    out = zeros(rows, cols)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = int(vals[i * cols + j])
    return out


def odd_part(n: int) -> int:
    """n with every factor of 2 removed (n >= 1)."""
    if n < 1:
        raise ValueError("odd_part needs n >= 1")
    while n % 2 == 0:
        n //= 2
    return n


class FpAb:
    """Finitely presented abelian group Z^ngens / (row lattice of rels)."""

    def __init__(self, ngens: int, rels=None):
        self.ngens = int(ngens)
        if rels is None:
            rels = zeros(0, self.ngens)
        if not isinstance(rels, np.ndarray):
            rels = intmat(rels)
        if rels.shape[1] != self.ngens and rels.shape[0] > 0:
            raise ValueError("relation width does not match generator count")
        if rels.shape[0] == 0:
            rels = zeros(0, self.ngens)
        self.rels = rels
        self._hnf: Optional[np.ndarray] = None
        self._snf: Optional[SmithData] = None
        self._pivots: Optional[list[int]] = None

    @classmethod
    def from_rows(cls, ngens: int, rows) -> "FpAb":
        """Build from an iterable of (possibly sparse) relation rows."""
        basis = hnf_rows(rows, ngens)
        g = cls(ngens, basis)
        g._hnf = basis
        return g

    @property
    def rel_basis(self) -> np.ndarray:
        if self._hnf is None:
            self._hnf = hnf_rows(self.rels, self.ngens)
        return self._hnf

    def _basis_snf(self) -> SmithData:
        if self._snf is None:
            self._snf = snf(self.rel_basis)
        return self._snf

    @property
    def rank_of_relations(self) -> int:
        return self.rel_basis.shape[0]

    @property
    def free_rank(self) -> int:
        return self.ngens - self.rank_of_relations

    def invariant_factors(self) -> tuple[int, ...]:
        """Torsion coefficients > 1, in divisibility order."""
        d = self._basis_snf().diagonal()
        return tuple(x for x in d if x > 1)

    def all_diagonal(self) -> tuple[int, ...]:
        return tuple(self._basis_snf().diagonal())

    def odd_invariants(self) -> tuple[int, ...]:
        out = [odd_part(x) for x in self.invariant_factors()]
        return tuple(sorted(x for x in out if x > 1))

    def order(self) -> Optional[int]:
        """Group order, or None if infinite."""
        if self.free_rank > 0:
            return None
        return math.prod(self.invariant_factors())

    def is_trivial(self) -> bool:
        return self.order() == 1

    def odd_order_trivial(self) -> bool:
        return self.free_rank == 0 and not self.odd_invariants()

    def element_order(self, v) -> Optional[int]:
        """Least n >= 1 with n*v in the relation lattice, or None."""
        v = _obj_row(v)
        if len(v) != self.ngens:
            raise ValueError("vector length does not match generator count")
        sd = self._basis_snf()
        w = v @ sd.v
        d = sd.diagonal()
        n = 1
        for i in range(self.ngens):
            wi = int(w[i])
            di = d[i] if i < len(d) else 0
            if di == 0:
                if wi != 0:
                    return None
            else:
                n = math.lcm(n, di // math.gcd(di, wi))
        return n

    def _pivot_columns(self) -> list[int]:
        if self._pivots is None:
            basis = self.rel_basis
            piv = []
            for i in range(basis.shape[0]):
                for j in range(self.ngens):
                    if basis[i, j]:
                        piv.append(j)
                        break
            self._pivots = piv
        return self._pivots

    def contains(self, v) -> bool:
        """Whether v lies in the relation lattice (i.e. is 0 in the group)."""
        basis = self.rel_basis
        r = _obj_row(v)
        for i, j in enumerate(self._pivot_columns()):
            q, rem = divmod(int(r[j]), int(basis[i, j]))
            if rem:
                return False
            if q:
                r = r - q * basis[i]
        return not any(int(x) for x in r)

    def reduce(self, v) -> np.ndarray:
        """Canonical representative of v modulo the relation lattice."""
        r = _obj_row(v)
        basis = self.rel_basis
        for i, j in enumerate(self._pivot_columns()):
            q = int(r[j]) // int(basis[i, j])
            if q:
                r = r - q * basis[i]
        return r

    def element_odd_trivial(self, v) -> bool:
        """True iff v dies in the group after inverting 2."""
        n = self.element_order(v)
        return n is not None and odd_part(n) == 1

    def describe(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors())
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FpAb({self.describe()})"

    def report(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "invariant_factors": list(self.invariant_factors()),
            "odd_part": list(self.odd_invariants()),
        }


def iso_odd(a: FpAb, b: FpAb) -> bool:
    """Isomorphism test after inverting 2: equal free ranks and equal
    multisets of odd parts of the invariant factors."""
    return a.free_rank == b.free_rank and a.odd_invariants() == b.odd_invariants()


def cokernel(rels, ngens: int) -> FpAb:
    rels = rels if isinstance(rels, np.ndarray) else intmat(rels)
    if rels.shape[0] and rels.shape[1] != ngens:
        raise ValueError("relation width does not match generator count")
    return FpAb(ngens, rels)


def direct_sum(a: FpAb, b: FpAb) -> FpAb:
    n = a.ngens + b.ngens
    ra, rb = a.rel_basis, b.rel_basis
    rows = zeros(ra.shape[0] + rb.shape[0], n)
    rows[: ra.shape[0], : a.ngens] = ra
    rows[ra.shape[0] :, a.ngens :] = rb
    return FpAb(n, rows)


@dataclass
class SubgroupPres:
    """A subgroup of an FpAb: generating lattice rows plus the induced
    presentation.  ``lift`` rows are coordinates in the ambient generators."""

    group: FpAb
    lift: np.ndarray
    ambient: FpAb

    def solve(self, v) -> Optional[np.ndarray]:
        return solve_in_rows(self.lift, v)


class AbMap:
    """Homomorphism of finitely presented abelian groups.

    ``matrix`` has shape (source.ngens, target.ngens); generators map by
    x -> x @ matrix.  Construction checks that the (reduced) source
    relations land in the target relation lattice.
    """

    def __init__(self, source: FpAb, target: FpAb, matrix, check: bool = True):
        self.source = source
        self.target = target
        self.matrix = matrix if isinstance(matrix, np.ndarray) else intmat(matrix)
        if self.matrix.shape != (source.ngens, target.ngens):
            raise ValueError("map matrix has wrong shape")
        if check:
            basis = source.rel_basis
            tb = target.rel_basis
            for i in range(basis.shape[0]):
                img = basis[i] @ self.matrix
                if not row_lattice_contains(tb, img):
                    raise ValueError(
                        f"map does not respect relations (reduced relation {i})"
                    )

    def preimage_lattice(self) -> np.ndarray:
        """Basis of {x in Z^m : x @ matrix lies in the target lattice}."""
        tb = self.target.rel_basis
        if tb.shape[0]:
            stacked = np.vstack([self.matrix, tb])
        else:
            stacked = self.matrix
        k = left_kernel(stacked)
        rows = k[:, : self.source.ngens]
        return hnf_rows(rows, self.source.ngens)

    def kernel_subgroup(self) -> SubgroupPres:
        p = self.preimage_lattice()
        rels = []
        sb = self.source.rel_basis
        for i in range(sb.shape[0]):
            c = solve_in_rows(p, sb[i])
            if c is None:
                raise AssertionError("source relations must lie in the preimage")
            rels.append(c)
        grp = FpAb(p.shape[0], intmat(rels) if rels else zeros(0, p.shape[0]))
        return SubgroupPres(group=grp, lift=p, ambient=self.source)

    def kernel(self) -> FpAb:
        return self.kernel_subgroup().group

    def image(self) -> FpAb:
        return FpAb(self.source.ngens, self.preimage_lattice())

    def apply(self, v) -> np.ndarray:
        return _obj_row(v) @ self.matrix


def ab_kernel(f: AbMap) -> FpAb:
    return f.kernel()


def ab_image(f: AbMap) -> FpAb:
    return f.image()


def ab_quotient(g: FpAb, sub) -> FpAb:
    sub = sub if isinstance(sub, np.ndarray) else intmat(sub)
    if sub.shape[0] == 0:
        return FpAb(g.ngens, g.rels)
    if sub.shape[1] != g.ngens:
        raise ValueError("subgroup rows have wrong width")
    return FpAb(g.ngens, np.vstack([g.rel_basis, sub]))


def subquotient(ker_basis: np.ndarray, num_rows: Iterable) -> FpAb:
    """Present (lattice spanned by ker_basis) / (lattice of num_rows),
    assuming the numerator lies inside the kernel lattice."""
    rels = []
    reduced = hnf_rows(list(num_rows), ker_basis.shape[1])
    for i in range(reduced.shape[0]):
        c = solve_in_rows(ker_basis, reduced[i])
        if c is None:
            raise AssertionError("numerator must lie in the denominator lattice")
        rels.append(c)
    return FpAb(ker_basis.shape[0], intmat(rels) if rels else None)
