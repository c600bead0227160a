"""Bit-packed GF(2) linear algebra and GF(2)[x] polynomial arithmetic.

Vectors and matrix rows are stored as Python ints used as bitsets: bit ``i``
of a row is column ``i``.  Python ints are arbitrary-length words, so the
layout is the little-endian word order "bit i of word j is column j*W + i"
for any word width W.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

NEG_INF = -math.inf


def popcount(v: int) -> int:
    return v.bit_count()


def bits_of(v: int) -> list[int]:
    """Indices of the set bits of ``v`` in increasing order."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits beyond declared length")

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "BitVector":
        values = list(values)
        bits = 0
        for i, b in enumerate(values):
            if b & 1:
                bits |= 1 << i
        return cls(len(values), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise ValueError(f"index {i} out of range for length {length}")
            bits |= 1 << i
        return cls(length, bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits & other.bits)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits | other.bits)

    def _check(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch {self.length} != {other.length}")

    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: "BitVector") -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def support(self) -> list[int]:
        return bits_of(self.bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __repr__(self) -> str:
        return "BitVector(" + "".join(str(b) for b in self.to_list()) + ")"


class BitMatrix:
    """Dense GF(2) matrix; each row is an int bitset over the columns."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int] | None = None):
        if rows is None:
            rows = [0] * nrows
        rows = tuple(rows)
        if len(rows) != nrows:
            raise ValueError("row count mismatch")
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError("row has bits beyond ncols")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def from_dense(cls, data) -> "BitMatrix":
        data = [list(map(int, row)) for row in data]
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        rows = []
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(BitVector.from_list(row).bits)
        return cls(nrows, ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int]) -> "BitMatrix":
        """Build from column bitsets (bit ``r`` of column ``c`` is entry (r, c))."""
        return cls(len(columns), nrows, columns).T

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(idx)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join("".join(str((r >> j) & 1) for j in range(self.ncols)) for r in self.rows)
        return f"BitMatrix({self.nrows}x{self.ncols}: {body})"

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def to_numpy(self):
        import numpy as np

        return np.array(self.to_dense(), dtype=np.uint8).reshape(self.nrows, self.ncols)

    @property
    def T(self) -> "BitMatrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bit = 1 << i
            for j in bits_of(r):
                cols[j] |= bit
        return BitMatrix(self.ncols, self.nrows, cols)

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return BitMatrix(self.nrows, self.ncols, [a ^ b for a, b in zip(self.rows, other.rows)])

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        orows = other.rows
        for r in self.rows:
            acc = 0
            for j in bits_of(r):
                acc ^= orows[j]
            out.append(acc)
        return BitMatrix(self.nrows, other.ncols, out)

    def apply(self, v: BitVector) -> BitVector:
        """Matrix-vector product ``self @ v``."""
        if v.length != self.ncols:
            raise ValueError("vector length does not match column count")
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                out |= 1 << i
        return BitVector(self.nrows, out)

    def __pow__(self, k: int) -> "BitMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = BitMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return BitMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row mismatch")
        s = self.ncols
        return BitMatrix(self.nrows, s + other.ncols, [a | (b << s) for a, b in zip(self.rows, other.rows)])

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.T

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "BitMatrix":
        """Return P H Q where P sends row i to row_perm[i] and Q maps column col_perm[j] to j.

        Entry (row_perm[i], j) of the result equals entry (i, col_perm[j]) of self.
        """
        new_rows = [0] * self.nrows
        for i, r in enumerate(self.rows):
            acc = 0
            for j in range(self.ncols):
                if (r >> col_perm[j]) & 1:
                    acc |= 1 << j
            new_rows[row_perm[i]] = acc
        return BitMatrix(self.nrows, self.ncols, new_rows)


# --- elimination -----------------------------------------------------------


def _echelon(rows: Iterable[int]) -> dict[int, int]:
    """Reduce rows to a basis keyed by leading (highest) bit."""
    piv: dict[int, int] = {}
    for v in rows:
        while v:
            lead = v.bit_length() - 1
            p = piv.get(lead)
            if p is None:
                piv[lead] = v
                break
            v ^= p
    return piv


def rank_rows(rows: Iterable[int]) -> int:
    return len(_echelon(rows))


def rank(m: BitMatrix) -> int:
    return rank_rows(m.rows)


def _rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; pivots are taken at the lowest column first."""
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        sel = None
        for i in range(r, len(work)):
            if work[i] & bit:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        pr = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= pr
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    reduced, pivots = _rref(m.rows, m.ncols)
    pivset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = 1 << f
        for row, p in zip(reduced, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(BitVector(m.ncols, v))
    return basis


class SpanBasis:
    """Incremental row-space basis that remembers how each basis row was formed.

    ``add`` returns None when the vector is new, or the combination mask (over
    insertion indices) that reduces it to zero when it is dependent.
    """

    def __init__(self) -> None:
        self.piv: dict[int, tuple[int, int]] = {}
        self.count = 0

    def add(self, v: int) -> int | None:
        combo = 1 << self.count
        self.count += 1
        while v:
            lead = v.bit_length() - 1
            p = self.piv.get(lead)
            if p is None:
                self.piv[lead] = (v, combo)
                return None
            v ^= p[0]
            combo ^= p[1]
        return combo

    def express(self, v: int) -> int | None:
        """Combination mask of inserted vectors summing to ``v``, or None."""
        combo = 0
        while v:
            lead = v.bit_length() - 1
            p = self.piv.get(lead)
            if p is None:
                return None
            v ^= p[0]
            combo ^= p[1]
        return combo

    def contains(self, v: int) -> bool:
        while v:
            p = self.piv.get(v.bit_length() - 1)
            if p is None:
                return False
            v ^= p[0]
        return True

    @property
    def rank(self) -> int:
        return len(self.piv)


def solve(m: BitMatrix, b: BitVector) -> BitVector | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    if b.length != m.nrows:
        raise ValueError(f"right-hand side has length {b.length}, expected {m.nrows}")
    basis = SpanBasis()
    for col in m.T.rows:
        basis.add(col)
    combo = basis.express(b.bits)
    if combo is None:
        return None
    return BitVector(m.ncols, combo)


# --- polynomials -------------------------------------------------------------


def _pmul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def _pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return a


@dataclass(frozen=True)
class F2Polynomial:
    """Polynomial over GF(2); bit i of ``coeffs`` is the coefficient of x^i."""

    coeffs: int = 0

    def __post_init__(self) -> None:
        if self.coeffs < 0:
            raise ValueError("coefficients must be a non-negative bitset")

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "F2Polynomial":
        c = 0
        for e in exps:
            c ^= 1 << e
        return cls(c)

    @classmethod
    def x(cls) -> "F2Polynomial":
        return cls(2)

    @classmethod
    def one(cls) -> "F2Polynomial":
        return cls(1)

    @property
    def degree(self) -> float | int:
        """Degree; the zero polynomial has degree -inf."""
        return self.coeffs.bit_length() - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def exponents(self) -> list[int]:
        return bits_of(self.coeffs)

    def __add__(self, other: "F2Polynomial") -> "F2Polynomial":
        return F2Polynomial(self.coeffs ^ other.coeffs)

    __sub__ = __add__

    def __mul__(self, other: "F2Polynomial") -> "F2Polynomial":
        return F2Polynomial(_pmul(self.coeffs, other.coeffs))

    def __divmod__(self, other: "F2Polynomial") -> tuple["F2Polynomial", "F2Polynomial"]:
        q, r = _pdivmod(self.coeffs, other.coeffs)
        return F2Polynomial(q), F2Polynomial(r)

    def __floordiv__(self, other: "F2Polynomial") -> "F2Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "F2Polynomial") -> "F2Polynomial":
        return divmod(self, other)[1]

    def __pow__(self, k: int) -> "F2Polynomial":
        out, base = 1, self.coeffs
        while k:
            if k & 1:
                out = _pmul(out, base)
            base = _pmul(base, base)
            k >>= 1
        return F2Polynomial(out)

    def divides(self, other: "F2Polynomial") -> bool:
        return (other % self).is_zero()

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"F2Polynomial({self})"


def poly_gcd(p: F2Polynomial, q: F2Polynomial) -> F2Polynomial:
    """Monic gcd (every nonzero GF(2) polynomial is monic); gcd(0, 0) = 0."""
    return F2Polynomial(_pgcd(p.coeffs, q.coeffs))


def poly_divmod(p: F2Polynomial, q: F2Polynomial) -> tuple[F2Polynomial, F2Polynomial]:
    return divmod(p, q)


def _require_square(m: BitMatrix) -> None:
    if m.nrows != m.ncols:
        raise ValueError(f"matrix must be square, got {m.shape}")


def char_poly(m: BitMatrix) -> F2Polynomial:
    """det(xI + m), via reduction to upper Hessenberg form by GF(2) similarity."""
    _require_square(m)
    n = m.nrows
    h = [[(r >> j) & 1 for j in range(n)] for r in m.rows]
    for j in range(n - 2):
        sel = next((i for i in range(j + 1, n) if h[i][j]), None)
        if sel is None:
            continue
        p = j + 1
        if sel != p:
            h[sel], h[p] = h[p], h[sel]
            for row in h:
                row[sel], row[p] = row[p], row[sel]
        for i in range(j + 2, n):
            if h[i][j]:
                # similarity by E = I + e_i e_p^T (self-inverse over GF(2))
                hi, hp = h[i], h[p]
                for c in range(n):
                    hi[c] ^= hp[c]
                for row in h:
                    row[p] ^= row[i]
    # p_k = (x + h_kk) p_{k-1} + sum_{i<k} h_ik * prod_{m=i+1..k} h_{m,m-1} * p_{i-1}
    polys = [1]
    for k in range(n):
        acc = _pmul(0b10 | h[k][k], polys[k])
        prod = 1
        for i in range(k - 1, -1, -1):
            prod &= h[i + 1][i]
            if not prod:
                break
            if h[i][k]:
                acc ^= polys[i]
        polys.append(acc)
    return F2Polynomial(polys[n])


def invariant_factors(m: BitMatrix) -> list[F2Polynomial]:
    """Nontrivial similarity invariants h1 | h2 | ... from the Smith form of xI + m."""
    _require_square(m)
    n = m.nrows
    a = [[((r >> j) & 1) ^ (0b10 if i == j else 0) for j in range(n)] for i, r in enumerate(m.rows)]
    diag = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    v = a[i][j]
                    if v and (best is None or v.bit_length() < best[0]):
                        best = (v.bit_length(), i, j)
            if best is None:
                break
            _, bi, bj = best
            a[t], a[bi] = a[bi], a[t]
            for row in a:
                row[t], row[bj] = row[bj], row[t]
            piv = a[t][t]
            clean = True
            for i in range(t + 1, n):
                if a[i][t]:
                    q, r = _pdivmod(a[i][t], piv)
                    rt, ri = a[t], a[i]
                    for c in range(t, n):
                        if rt[c]:
                            ri[c] ^= _pmul(q, rt[c])
                    if r:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q, r = _pdivmod(a[t][j], piv)
                    for row in a[t:]:
                        if row[t]:
                            row[j] ^= _pmul(q, row[t])
                    if r:
                        clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if _pdivmod(a[i][j], piv)[1]),
                None,
            )
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for c in range(t, n):
                rt[c] ^= rb[c]
        diag.append(a[t][t])
    return [F2Polynomial(d) for d in diag if d > 1]


def fibonacci_polynomials(n: int) -> list[F2Polynomial]:
    """F_0..F_n with F_0 = 0, F_1 = 1 and F_{k+1} = x F_k + F_{k-1}."""
    fs = [0, 1]
    while len(fs) <= n:
        fs.append(_pmul(2, fs[-1]) ^ fs[-2])
    return [F2Polynomial(f) for f in fs[: n + 1]]


__all__ = [
    "BitVector",
    "BitMatrix",
    "F2Polynomial",
    "SpanBasis",
    "bits_of",
    "char_poly",
    "fibonacci_polynomials",
    "invariant_factors",
    "kernel_basis",
    "poly_divmod",
    "poly_gcd",
    "popcount",
    "rank",
    "rank_rows",
    "solve",
]
