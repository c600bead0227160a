from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_matmul, dense_rank
from xyzcode.css_map import CssCode, css_convert, css_dimension, css_distance_capped, format_alist
from xyzcode.dimension import dimension_bruteforce
from xyzcode.f2core import BitMatrix
from xyzcode.pauli import PauliGroup, PauliOperator
from xyzcode.xyz_build import build

ONE = BitMatrix.identity(1)


def matrices(max_rows=2, max_cols=2):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(
        lambda rc: st.lists(
            st.lists(st.integers(0, 1), min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]
        ).map(BitMatrix.from_dense)
    )


def test_toy_conversion():
    code = build(ONE, ONE, ONE)
    css = css_convert(code)
    assert css.n == 16
    assert css_dimension(css) == 2
    assert not dense_matmul(css.hx.to_dense(), css.hz.T.to_dense()).any()


def test_toy_converted_distance():
    css = css_convert(build(ONE, ONE, ONE))
    rep = css_distance_capped(css, 6)
    assert rep.d == 4 and rep.d_x == 4 and rep.d_z == 4
    assert rep.even_per_group


def test_single_x_group():
    css = css_convert(PauliGroup([PauliOperator.from_string("X")], 1))
    assert css.n == 4
    assert set(css.hx.rows) == {0b1111, 0b0011}
    assert set(css.hz.rows) == {0b1111, 0b0011}
    assert css_dimension(css) == 0


def test_noncommuting_input_rejected():
    with pytest.raises(ValueError):
        css_convert([PauliOperator.from_string("X"), PauliOperator.from_string("Z")])


def test_css_condition_enforced():
    bad = CssCode(BitMatrix.from_dense([[1, 0]]), BitMatrix.from_dense([[1, 0]]), 2)
    with pytest.raises(ValueError):
        css_dimension(bad)


def test_empty_hz_dimension():
    hx = BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    css = CssCode(hx, BitMatrix.zeros(0, 3), 3)
    assert css_dimension(css) == 3 - 2


def test_repetition_code_distance():
    hz = BitMatrix.from_dense([[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1]])
    css = CssCode(BitMatrix.zeros(0, 5), hz, 5)
    rep = css_distance_capped(css, 5)
    assert rep.d_x == 5 and rep.d_z == 1 and rep.d == 1


def test_alist_listing():
    m = BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    lines = format_alist(m).splitlines()
    assert lines[0] == "3 2"
    assert lines[1] == "2 2"
    assert lines[4:7] == ["1", "1 2", "2"]


@settings(max_examples=30, deadline=None)
@given(matrices(), matrices(), matrices())
def test_conversion_invariants(h1, h2, h3):
    code = build(h1, h2, h3)
    css = css_convert(code)
    assert css.css_condition()
    prod = dense_matmul(css.hx.to_dense(), css.hz.T.to_dense()) if css.hx.nrows and css.hz.nrows else None
    assert prod is None or not prod.any()
    k = dimension_bruteforce(code)
    assert css.n - dense_rank(css.hx.to_dense()) - dense_rank(css.hz.to_dense()) == 2 * k
    assert css_dimension(css) == 2 * k
    weights = [g.weight() for g in code.generators.generators]
    images = css.hx.rows[code.N:]
    for w, r in zip(weights, images):
        assert r.bit_count() <= 2 * w
