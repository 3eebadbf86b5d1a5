import pytest
from hypothesis import given, strategies as st

from pfhilbert.exact_arith import ParameterError, binomial
from pfhilbert.multiplicity import (
    ALL_METHODS,
    all_multiplicities,
    determinantal_degree,
    dimension,
    gorenstein_codim3,
    herzog_trung,
    herzog_trung_verbatim,
    ht_det,
    mult,
)
from pfhilbert.params import RingParams, grid
from pfhilbert.paths import turn_gf


def test_dimension():
    assert dimension(RingParams(6, 2)) == 14
    assert dimension(RingParams(4, 1)) == 5
    assert dimension(RingParams(5, 0)) == 0
    assert dimension(RingParams(3, 2)) == 3
    for r in range(1, 8):
        assert dimension(RingParams(2 * r + 1, r)) == binomial(2 * r + 1, 2)


def test_spot_values():
    assert mult(RingParams(4, 1)) == 2
    assert mult(RingParams(5, 1)) == 5
    assert mult(RingParams(7, 2)) == 14
    assert ht_det(4, 1) == 2
    for m in ALL_METHODS:
        assert mult(RingParams(6, 2), m) == 3


def test_grassmannian_degrees():
    # r = 1 is the Plucker embedding of G(2, n); its degree is a Catalan number
    for n in range(4, 16):
        k = n - 2
        assert mult(RingParams(n, 1)) == binomial(2 * k, k) // (k + 1)


@pytest.mark.parametrize("p", [p for p in grid(9) if p.r >= 1], ids=str)
def test_closed_forms_match_family_count(p):
    count = turn_gf(p)(1)
    for m, v in all_multiplicities(p).items():
        if v is not None:
            assert v == count, m


@given(st.integers(1, 12), st.integers(0, 12))
def test_all_closed_forms_agree(r, extra):
    n = 2 * r + 2 + extra
    p = RingParams(n, r)
    ref = mult(p)
    assert all(mult(p, m) == ref for m in ("det46", "ht_det", "jlp_det", "ht_product", "herzog_trung"))


def test_herzog_trung_printed_form_is_offset_by_two():
    for p in grid(20):
        if p.n >= 2 * p.r + 2:
            assert herzog_trung_verbatim(p.n - 2, p.r) == mult(p)
    assert herzog_trung(4, 1, verbatim=True) == 14
    assert mult(RingParams(4, 1), "herzog_trung", verbatim=True) != mult(RingParams(4, 1))
    with pytest.raises(ParameterError):
        herzog_trung(4, 2)


def test_boundary_n_equals_2r():
    for r in range(1, 6):
        vals = all_multiplicities(RingParams(2 * r, r))
        assert vals["herzog_trung"] is None
        assert {v for v in vals.values() if v is not None} == {1}


def test_mult_errors():
    with pytest.raises(ParameterError):
        mult(RingParams(3, 2))
    with pytest.raises(ParameterError):
        mult(RingParams(6, 1), "nope")


def test_gorenstein():
    assert [gorenstein_codim3(s) for s in (1, 2, 3)] == [1, 5, 14]
    for s in range(1, 11):
        assert 6 * gorenstein_codim3(s) == s * (s + 1) * (2 * s + 1)
        if s > 1:
            assert gorenstein_codim3(s) == mult(RingParams(2 * s + 1, s - 1))
    with pytest.raises(ParameterError):
        gorenstein_codim3(0)


def test_determinantal_degree():
    assert determinantal_degree(2, 2, 1) == 2
    assert determinantal_degree(3, 3, 2) == 3
    for n in range(1, 7):
        assert determinantal_degree(n, n, n) == 1
        assert determinantal_degree(n, n, n, "product") == 1
    with pytest.raises(ParameterError):
        determinantal_degree(2, 3, 0)
    with pytest.raises(ParameterError):
        determinantal_degree(2, 3, 3)


def test_determinantal_degree_hypersurface_and_segre():
    # corank-one square matrices: degree n hypersurface; rank 1: Segre degree C(m+n-2, m-1)
    for n in range(2, 9):
        assert determinantal_degree(n, n, n - 1) == n
    for m in range(1, 8):
        for n in range(1, 8):
            assert determinantal_degree(m, n, 1) == binomial(m + n - 2, m - 1)


@given(st.integers(1, 9), st.integers(1, 9), st.data())
def test_determinantal_det_equals_product(m, n, data):
    rank = data.draw(st.integers(1, min(m, n)))
    assert determinantal_degree(m, n, rank, "det") == determinantal_degree(m, n, rank, "product")
    assert determinantal_degree(m, n, rank) == determinantal_degree(n, m, rank)
