from __future__ import annotations

from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import char_poly_laplace, dense_matmul, dense_rank, poly_mul
from xyzcode.f2core import (
    BitMatrix,
    BitVector,
    F2Polynomial,
    SpanBasis,
    char_poly,
    fibonacci_polynomials,
    invariant_factors,
    kernel_basis,
    poly_gcd,
    rank,
    solve,
)
from xyzcode.dimension import modified_chamon_matrix
from xyzcode.xyz_build import circulant


def dense_matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def square_matrices(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_rank_of_repeated_row():
    assert rank(BitMatrix.from_dense([[1, 1], [1, 1]])) == 1


def test_kernel_of_path_checks():
    ker = kernel_basis(BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]]))
    assert [v.to_list() for v in ker] == [[1, 1, 1]]


def test_char_poly_of_cyclic_shift():
    assert char_poly(circulant([1], 3)) == F2Polynomial.from_exponents([3, 0])


def test_char_poly_of_identity():
    assert char_poly(BitMatrix.identity(2)) == F2Polynomial(0b11) ** 2


def test_char_poly_of_modified_chamon_gram():
    h = modified_chamon_matrix(5)
    assert char_poly(h @ h.T) == F2Polynomial.from_exponents([4, 2, 0])


def test_invariant_factors_of_identity():
    assert invariant_factors(BitMatrix.identity(2)) == [F2Polynomial(0b11), F2Polynomial(0b11)]


def test_gcd_of_coprime_pair():
    assert poly_gcd(F2Polynomial(0b111), F2Polynomial(0b11)) == F2Polynomial(1)


def test_zero_polynomial_degree():
    assert F2Polynomial(0).degree == float("-inf")


def test_char_poly_rejects_rectangular():
    with pytest.raises(ValueError):
        char_poly(BitMatrix.zeros(2, 3))


def test_bitmatrix_rejects_stray_bits():
    with pytest.raises(ValueError):
        BitMatrix(1, 2, [0b100])


def test_matmul_shape_mismatch():
    with pytest.raises(ValueError):
        BitMatrix.zeros(2, 3) @ BitMatrix.zeros(2, 3)


def test_solve_inconsistent_system():
    m = BitMatrix.from_dense([[1, 1], [1, 1]])
    assert solve(m, BitVector.from_list([1, 0])) is None


def test_fibonacci_small_values():
    fs = fibonacci_polynomials(5)
    assert [f.coeffs for f in fs] == [0, 1, 0b10, 0b101, 0b1000, 0b10101]


@settings(max_examples=150, deadline=None)
@given(dense_matrices(7, 7))
def test_rank_matches_dense_oracle(data):
    assert rank(BitMatrix.from_dense(data)) == dense_rank(data)


@settings(max_examples=150, deadline=None)
@given(dense_matrices(6, 7))
def test_rank_nullity(data):
    m = BitMatrix.from_dense(data)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.ncols
    for v in ker:
        assert m.apply(v).weight() == 0
    assert rank(BitMatrix(len(ker), m.ncols, [v.bits for v in ker])) == len(ker)


@settings(max_examples=100, deadline=None)
@given(dense_matrices(5, 5), st.data())
def test_matmul_and_transpose(a, data):
    k = len(a[0])
    c = data.draw(st.integers(1, 5))
    b = data.draw(st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=k, max_size=k))
    prod = BitMatrix.from_dense(a) @ BitMatrix.from_dense(b)
    assert prod.to_dense() == dense_matmul(a, b).tolist()
    assert prod.T == BitMatrix.from_dense(b).T @ BitMatrix.from_dense(a).T


@settings(max_examples=100, deadline=None)
@given(dense_matrices(6, 6), st.data())
def test_solve_returns_solution(data_m, data):
    m = BitMatrix.from_dense(data_m)
    x = BitVector.from_list(data.draw(st.lists(st.integers(0, 1), min_size=m.ncols, max_size=m.ncols)))
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None and m.apply(sol) == b


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 2**8 - 1), min_size=1, max_size=10))
def test_span_basis_membership(vectors):
    basis = SpanBasis()
    for v in vectors:
        basis.add(v)
    assert basis.rank == dense_rank([[(v >> j) & 1 for j in range(8)] for v in vectors])
    for v in vectors:
        word = basis.express(v)
        assert word is not None


@settings(max_examples=80, deadline=None)
@given(square_matrices(6))
def test_char_poly_matches_cofactor_expansion(data):
    m = BitMatrix.from_dense(data)
    assert char_poly(m).coeffs == char_poly_laplace(data)


@settings(max_examples=80, deadline=None)
@given(square_matrices(6))
def test_invariant_factors_divide_and_multiply_to_char_poly(data):
    m = BitMatrix.from_dense(data)
    facs = invariant_factors(m)
    prod = F2Polynomial(1)
    for f in facs:
        prod = prod * f
    assert prod == char_poly(m)
    for a, b in zip(facs, facs[1:]):
        assert a.divides(b)


@settings(max_examples=80, deadline=None)
@given(square_matrices(5))
def test_invariant_factors_are_similarity_invariant(data):
    m = BitMatrix.from_dense(data)
    n = m.nrows
    rng = np.random.default_rng(len(data) + sum(map(sum, data)))
    while True:
        p = BitMatrix.from_dense(rng.integers(0, 2, (n, n)))
        if rank(p) == n:
            break
    pinv_cols = [solve(p, BitVector.from_support(n, [j])) for j in range(n)]
    pinv = BitMatrix.from_columns(n, [c.bits for c in pinv_cols])
    assert p @ pinv == BitMatrix.identity(n)
    assert invariant_factors(p @ m @ pinv) == invariant_factors(m)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**10), st.integers(0, 2**10))
def test_gcd_divides_both(a, b):
    g = poly_gcd(F2Polynomial(a), F2Polynomial(b))
    if a or b:
        assert g.divides(F2Polynomial(a)) and g.divides(F2Polynomial(b))
    assert F2Polynomial(poly_mul(a, b)) == F2Polynomial(a) * F2Polynomial(b)


def test_fibonacci_gcd_law_small():
    fs = fibonacci_polynomials(10)
    for k in range(1, 11):
        for l in range(1, 11):
            assert poly_gcd(fs[k], fs[l]) == fs[gcd(k, l)]
