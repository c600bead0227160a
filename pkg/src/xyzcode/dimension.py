"""Code dimension by symplectic rank, by the relation system, and by invariant factors."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import permutations

from .f2core import BitMatrix, F2Polynomial, bits_of, fibonacci_polynomials, invariant_factors, poly_gcd, rank
from .tensor3 import axis_images, cell_of, flat_index
from .xyz_build import XYZCode, relation_count, relation_system_matrix

DIRECT_ROUTE_LIMIT = 20000


@dataclass
class DimensionReport:
    k_bruteforce: int | None
    r: int | None
    s: int | None
    k_formula: int | None
    k1t: int
    k2: int
    k3: int
    agreement: bool
    formula_permutation: tuple[int, int, int] | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["formula_permutation"] is not None:
            d["formula_permutation"] = list(d["formula_permutation"])
        return d


def dimension_bruteforce(code: XYZCode) -> int:
    """N minus the rank of the 2N-column symplectic generator matrix."""
    return code.N - code.symplectic_rank


def _require_square(*ms: BitMatrix) -> None:
    for m in ms:
        if m.nrows != m.ncols:
            raise ValueError(f"matrix must be square, got {m.shape}")


def sylvester_count_direct(a: BitMatrix, b: BitMatrix, c: BitMatrix) -> int:
    """Number of independent 3-tensors X with (a on axis 0) X = (b on axis 1) X = (c on axis 2) X."""
    _require_square(a, b, c)
    shape = (a.nrows, b.nrows, c.nrows)
    size = shape[0] * shape[1] * shape[2]
    imgs = [axis_images(m) for m in (a, b, c)]
    columns = []
    for idx in range(size):
        cell = cell_of(shape, idx)
        parts = []
        for axis in range(3):
            v = 0
            cc = list(cell)
            for r in imgs[axis][cell[axis]]:
                cc[axis] = r
                v ^= 1 << flat_index(shape, *cc)
            parts.append(v)
        columns.append((parts[0] ^ parts[1]) | ((parts[1] ^ parts[2]) << size))
    return size - rank(BitMatrix(size, 2 * size, columns))


def _deg(p: F2Polynomial) -> int:
    d = p.degree
    return 0 if d < 0 else int(d)


def sylvester_count_gcd(a: BitMatrix, b: BitMatrix, c: BitMatrix) -> int:
    """Sum over triples of similarity invariants of deg gcd(h_a, h_b, h_c)."""
    _require_square(a, b, c)
    fa, fb, fc = invariant_factors(a), invariant_factors(b), invariant_factors(c)
    total = 0
    for p in fa:
        for q in fb:
            pq = poly_gcd(p, q)
            if pq.coeffs == 1:
                continue
            for r in fc:
                total += _deg(poly_gcd(pq, r))
    return total


def _is_invertible(m: BitMatrix) -> bool:
    return m.nrows == m.ncols and rank(m) == m.nrows


def dimension_formula(code: XYZCode, bruteforce: bool | None = None) -> DimensionReport:
    """Dimension from the relation count r = s + k_i^T k_j k_k for a valid index order.

    The order (i, j, k) must make H_j H_j^T and H_k H_k^T invertible; s counts
    solutions of the tensor Sylvester system on the three Gram matrices.  The
    relation count is also read off the relation-system kernel when small
    enough, and the symplectic brute force runs unless disabled.
    """
    hs = (code.h1, code.h2, code.h3)
    n, m = code.n, code.m
    base = (n[0] - m[0]) * (n[1] - m[1]) * (n[2] - m[2])
    kt = [hs[i].nrows - rank(hs[i]) for i in range(3)]  # dim ker H_i^T
    kk = [hs[i].ncols - rank(hs[i]) for i in range(3)]  # dim ker H_i
    grams = [h @ h.T for h in hs]
    notes: list[str] = []

    s = None
    k_formula = None
    perm_used = None
    for perm in permutations(range(3)):
        i, j, k = perm
        if _is_invertible(grams[j]) and _is_invertible(grams[k]):
            perm_used = perm
            s = sylvester_count_gcd(grams[0], grams[1], grams[2])
            k_formula = base + s + kt[i] * kk[j] * kk[k]
            break
    if perm_used is None:
        notes.append("formula inapplicable: no index order makes two Gram matrices invertible")

    unknowns = sum(code.check_shapes[c][0] * code.check_shapes[c][1] * code.check_shapes[c][2] for c in "STUV")
    r = None
    if unknowns <= DIRECT_ROUTE_LIMIT:
        r = relation_count(code)
    else:
        notes.append("formula-only: relation system too large for the direct route")

    if bruteforce is None:
        bruteforce = code.N <= DIRECT_ROUTE_LIMIT
    kb = dimension_bruteforce(code) if bruteforce else None

    values = [v for v in (kb, k_formula, None if r is None else base + r) if v is not None]
    agreement = len(set(values)) <= 1
    if k_formula is None and r is None and kb is None and s is not None:
        notes.append(f"bounds only: k >= {base + s}")
    return DimensionReport(
        k_bruteforce=kb,
        r=r,
        s=s,
        k_formula=k_formula,
        k1t=kt[0],
        k2=kk[1],
        k3=kk[2],
        agreement=agreement,
        formula_permutation=None if perm_used is None else tuple(p + 1 for p in perm_used),
        notes=notes,
    )


def modified_chamon_matrix(n: int) -> BitMatrix:
    """1 + Omega_n with its last row deleted: an (n-1) x n matrix."""
    if n < 2:
        raise ValueError("modified Chamon matrix needs n >= 2")
    rows = []
    for r in range(n - 1):
        rows.append((1 << r) | (1 << ((r - 1) % n)))
    return BitMatrix(n - 1, n, rows)


modified_chamon_matrices = modified_chamon_matrix


def fibonacci_polynomial(n: int) -> F2Polynomial:
    return fibonacci_polynomials(n)[n]


__all__ = [
    "DimensionReport",
    "dimension_bruteforce",
    "dimension_formula",
    "fibonacci_polynomial",
    "modified_chamon_matrix",
    "modified_chamon_matrices",
    "relation_system_matrix",
    "sylvester_count_direct",
    "sylvester_count_gcd",
]
