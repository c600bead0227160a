from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import char_poly_laplace, dense_rank, sylvester_bruteforce
from xyzcode.dimension import (
    dimension_bruteforce,
    dimension_formula,
    fibonacci_polynomial,
    modified_chamon_matrix,
    sylvester_count_direct,
    sylvester_count_gcd,
)
from xyzcode.f2core import BitMatrix, char_poly, rank
from xyzcode.xyz_build import build, circulant

ONE = BitMatrix.identity(1)


def square(max_n=3):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_toy_dimension_routes():
    code = build(ONE, ONE, ONE)
    rep = dimension_formula(code)
    assert dimension_bruteforce(code) == 1
    assert (rep.k_formula, rep.s, rep.k1t, rep.r, rep.agreement) == (1, 1, 0, 1, True)


def test_chamon_345_has_four_logicals():
    code = build(circulant([0, 1], 3), circulant([0, 1], 4), circulant([0, 1], 5))
    assert dimension_bruteforce(code) == 4


def test_3dxyz_555():
    h = circulant([0, 1, -1], 5)
    assert dimension_bruteforce(build(h, h, h)) == 17


def test_3dxyz_5_7_11_formula_route():
    hs = [circulant([0, 1, -1], n) for n in (5, 7, 11)]
    rep = dimension_formula(build(*hs), bruteforce=False)
    assert rep.k_formula == 1 and rep.agreement


def test_modified_chamon_435():
    code = build(*(modified_chamon_matrix(n) for n in (4, 3, 5)))
    rep = dimension_formula(code)
    assert (rep.k1t, rep.s, rep.k_formula, rep.k_bruteforce, rep.r) == (0, 0, 1, 1, 0)


def test_sylvester_examples():
    i2 = BitMatrix.identity(2)
    assert sylvester_count_direct(i2, i2, i2) == 8
    assert sylvester_count_gcd(i2, i2, i2) == 8
    comp = BitMatrix.from_dense([[0, 1], [1, 1]])  # companion of x^2 + x + 1
    assert sylvester_count_direct(comp, i2, i2) == 0
    assert sylvester_count_gcd(comp, i2, i2) == 0
    shift3 = circulant([1], 3)  # characteristic polynomial x^3 + 1
    assert sylvester_count_gcd(shift3, ONE, ONE) == 1
    assert sylvester_count_direct(shift3, ONE, ONE) == 1
    with pytest.raises(ValueError):
        sylvester_count_direct(BitMatrix.zeros(1, 2), ONE, ONE)


def test_modified_chamon_fibonacci_small():
    assert char_poly(modified_chamon_matrix(3) @ modified_chamon_matrix(3).T) == fibonacci_polynomial(3)
    for n in (4, 6):
        h = modified_chamon_matrix(n)
        assert rank(h @ h.T) < n - 1
    with pytest.raises(ValueError):
        modified_chamon_matrix(1)


@settings(max_examples=60, deadline=None)
@given(square(), square(), square())
def test_sylvester_routes_match_dense_oracle(a, b, c):
    ma, mb, mc = (BitMatrix.from_dense(m) for m in (a, b, c))
    ref = sylvester_bruteforce(a, b, c)
    assert sylvester_count_direct(ma, mb, mc) == ref
    assert sylvester_count_gcd(ma, mb, mc) == ref


@settings(max_examples=30, deadline=None)
@given(square(3), square(3), square(3))
def test_dimension_routes_agree(a, b, c):
    code = build(*(BitMatrix.from_dense(m) for m in (a, b, c)))
    rep = dimension_formula(code)
    assert rep.agreement
    assert rep.k_bruteforce == code.N - dense_rank(
        [[(g.x >> q) & 1 for q in range(code.N)] + [(g.z >> q) & 1 for q in range(code.N)]
         for g in code.generators.generators]
    )


def test_fibonacci_matches_cofactor_oracle():
    for n in range(2, 9):
        h = modified_chamon_matrix(n)
        g = (h @ h.T).to_dense()
        assert char_poly_laplace(g) == fibonacci_polynomial(n).coeffs
