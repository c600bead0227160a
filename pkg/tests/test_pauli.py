from __future__ import annotations

import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_paulis, pauli_matrix, symplectic_commute
from xyzcode.f2core import BitMatrix
from xyzcode.pauli import (
    PauliGroup,
    PauliOperator,
    commutes,
    fix_signs,
    group_contains,
    minus_one_in_group,
    pauli_weight_identity,
)
from xyzcode.tensor3 import Tensor3
from xyzcode.xyz_build import build


def matrix_of(p: PauliOperator) -> np.ndarray:
    """Dense matrix of i^phase X^x Z^z, built letter by letter."""
    out = np.array([[1]], dtype=complex)
    X = pauli_matrix("X")
    Z = pauli_matrix("Z")
    for q in range(p.n):
        m = np.eye(2, dtype=complex)
        if (p.x >> q) & 1:
            m = m @ X
        if (p.z >> q) & 1:
            m = m @ Z
        out = np.kron(out, m)
    return (1j ** p.phase) * out


def random_pauli(rng: random.Random, n: int) -> PauliOperator:
    return PauliOperator(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))


def toy_code():
    one = BitMatrix.identity(1)
    return build(one, one, one)


def test_x_times_z_is_minus_i_y():
    p = PauliOperator.from_string("X") * PauliOperator.from_string("Z")
    assert (p.x, p.z) == (1, 1)
    assert str(p) == "-iY"
    assert np.allclose(matrix_of(p), -1j * pauli_matrix("Y"))


def test_sigma_product_is_i():
    p = PauliOperator.from_string("X") * PauliOperator.from_string("Y") * PauliOperator.from_string("Z")
    assert (p.x, p.z, p.phase) == (0, 0, 1)


def test_from_string_matches_dense_matrices():
    for letters in all_paulis(2):
        assert np.allclose(matrix_of(PauliOperator.from_string(letters)), pauli_matrix(letters))


def test_single_qubit_products_exhaustive():
    ops = [PauliOperator(1, x, z, ph) for x in (0, 1) for z in (0, 1) for ph in range(4)]
    for a, b in product(ops, repeat=2):
        assert np.allclose(matrix_of(a * b), matrix_of(a) @ matrix_of(b))


def test_associativity_on_all_single_qubit_triples():
    letters = [PauliOperator.from_string(c) for c in "IXYZ"]
    for a, b, c in product(letters, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_commutation_matches_letter_count():
    for a in all_paulis(2):
        for b in all_paulis(2):
            pa, pb = PauliOperator.from_string(a), PauliOperator.from_string(b)
            assert commutes(pa, pb) == symplectic_commute(a, b)


def test_size_mismatch_raises():
    with pytest.raises(ValueError):
        PauliOperator.from_string("X") * PauliOperator.from_string("XX")
    with pytest.raises(ValueError):
        commutes(PauliOperator.from_string("X"), PauliOperator.from_string("XX"))


def test_square_of_hermitian_is_identity():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 12)
        x, z = rng.getrandbits(n), rng.getrandbits(n)
        p = PauliOperator(n, x, z, (x & z).bit_count() + 2 * rng.randrange(2))
        sq = p * p
        assert (sq.x, sq.z, sq.phase) == (0, 0, 0)


def test_toy_slice_pair_is_not_in_group_but_commutes():
    code = toy_code()
    p = code.block_operator("A", "X", Tensor3.from_cells((1, 1, 1), [(0, 0, 0)]))
    p = p * code.block_operator("D", "X", Tensor3.from_cells((1, 1, 1), [(0, 0, 0)]))
    assert group_contains(code.generators, p).verdict == "not_in_group"
    assert all(commutes(p, g) for g in code.generators.generators)
    # brute force over all 16 products of the four generators
    gens = code.generators.generators
    for mask in range(16):
        prod = PauliOperator.identity(code.N)
        for i in range(4):
            if (mask >> i) & 1:
                prod = prod * gens[i]
        assert (prod.x, prod.z) != (p.x, p.z)


def test_generators_and_css_products_in_group():
    g = PauliGroup([PauliOperator.from_string("XXI"), PauliOperator.from_string("IZZ"), PauliOperator.from_string("ZZI")], 3)
    for gen in g.generators:
        assert group_contains(g, gen).verdict == "in_group"
    prod = g.generators[1] * g.generators[2]
    assert group_contains(g, prod).verdict == "in_group"
    assert group_contains(g, -prod).verdict == "in_group_up_to_phase"
    assert group_contains(g, -prod, respect_phase=False).verdict == "in_group"


def test_minus_one_cases():
    css = PauliGroup([PauliOperator.from_string("XX"), PauliOperator.from_string("ZZ")], 2)
    assert minus_one_in_group(css) is False
    assert minus_one_in_group(PauliGroup([PauliOperator.identity(2, phase=2)], 2)) is True
    # XX, ZZ and YY multiply to -1
    g = PauliGroup([PauliOperator.from_string(s) for s in ("XX", "ZZ", "YY")], 2)
    assert minus_one_in_group(g) is True


def test_fix_signs_cases():
    a, b = PauliOperator.from_string("XX"), PauliOperator.from_string("ZZ")
    indep, signs = fix_signs(PauliGroup([a, b], 2))
    assert indep == [a, b] and signs == [1, 1]
    indep, signs = fix_signs(PauliGroup([a, b, a * b], 2))
    assert len(indep) == 2 and signs == [1, 1, 1]
    with pytest.raises(ValueError):
        fix_signs(PauliGroup([PauliOperator.from_string("X"), PauliOperator.from_string("Z")], 1))


def test_fix_signs_matches_code_dimension():
    code = toy_code()
    indep, _ = fix_signs(code.generators)
    assert code.N - len(indep) == 1


def test_group_contains_random_subsets():
    code = build(BitMatrix.from_dense([[1, 1], [0, 1]]), BitMatrix.identity(2), BitMatrix.from_dense([[1, 1]]))
    gens = code.generators.generators
    rng = random.Random(3)
    for _ in range(1000):
        prod = PauliOperator.identity(code.N)
        for g in gens:
            if rng.random() < 0.5:
                prod = prod * g
        assert group_contains(code.generators, prod).verdict == "in_group"


def test_weight_identity_examples():
    shape = (1, 1, 1)
    one = Tensor3.from_cells(shape, [(0, 0, 0)])
    zero = Tensor3.zeros(shape)
    assert pauli_weight_identity(one, zero, zero) == 1
    assert pauli_weight_identity(one, one, one) == 0
    with pytest.raises(ValueError):
        pauli_weight_identity(one, zero, Tensor3.zeros((1, 1, 2)))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**64 - 1), st.integers(0, 2**64 - 1), st.integers(0, 2**64 - 1))
def test_weight_identity_matches_per_site_analysis(a, b, c):
    shape = (4, 4, 4)
    ax, ay, az = Tensor3(shape, a), Tensor3(shape, b), Tensor3(shape, c)
    direct = 0
    for s in range(64):
        bits = ((a >> s) & 1, (b >> s) & 1, (c >> s) & 1)
        # one or two letters present leave a single Pauli; all three give i times identity
        direct += 1 if 0 < sum(bits) < 3 else 0
    assert pauli_weight_identity(ax, ay, az) == direct
    assert direct == (a | b | c).bit_count() - (a & b & c).bit_count()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.randoms(use_true_random=False))
def test_multiply_matches_dense_matrices(n, rng):
    p, q, r = random_pauli(rng, n), random_pauli(rng, n), random_pauli(rng, n)
    assert np.allclose(matrix_of(p * q), matrix_of(p) @ matrix_of(q))
    assert (p * q) * r == p * (q * r)
    anti = ((p * q).phase - (q * p).phase) % 4 == 2
    assert commutes(p, q) == (not anti)
