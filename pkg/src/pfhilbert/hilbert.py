"""Hilbert series and Hilbert function of Pfaffian rings.

Four routes to the numerator of the Hilbert series (the path generating
function and three r x r determinants of binomial sums), three
coefficient formulas for the Hilbert function, two closed forms for the
r = 1 Grassmannian, and the face-count formula.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Callable

from .exact_arith import (
    HilbertSeries,
    IntPolynomial,
    ParameterError,
    binomial,
    int_det,
    poly_det,
    series_coefficient,
    shift_down,
)
from .params import FORMULA_VALID, FULL_POLYNOMIAL, TRIVIAL, RingParams
from . import paths


class NumeratorMethod(str, Enum):
    PATHS = "paths"
    DET1 = "det1"
    DET2 = "det2"
    DET3 = "det3"


class HFunMethod(str, Enum):
    F = "F"
    G = "G"
    H = "H"
    SERIES = "series"
    HODGE1 = "hodge1"
    HODGE2 = "hodge2"


# Each entry function returns the coefficient of z^k in matrix entry (i, j),
# 1-based, for the ring parameters (n, r).
EntryFn = Callable[[int, int, int, int, int], int]


def _entry_det1(n: int, r: int, i: int, j: int, k: int) -> int:
    m = n - 2 * r
    return binomial(m, k + i - j) * binomial(m, k) - binomial(m - 1, k - j) * binomial(m + 1, k + i)


def _entry_det2(n: int, r: int, i: int, j: int, k: int) -> int:
    m = n - 2 * r
    return (binomial(m + i - 1, k + i - j) * binomial(m + j - 1, k)
            - binomial(m - 1, k - j) * binomial(m + i + j - 1, k + i))


def _entry_det3(n: int, r: int, i: int, j: int, k: int) -> int:
    m = n - 2 * r
    return (binomial(m + i - 1, k) * binomial(m + j - 1, k)
            - binomial(m + i + j - 3, k - 1) * binomial(m + 1, k + 1))


ENTRIES: dict[str, EntryFn] = {"det1": _entry_det1, "det2": _entry_det2, "det3": _entry_det3}
COEFF_ENTRIES: dict[str, EntryFn] = {"F": _entry_det1, "G": _entry_det2, "H": _entry_det3}


def _entry_polynomial(entry: EntryFn, n: int, r: int, i: int, j: int) -> IntPolynomial:
    coeffs = {}
    for k in range(-2 * r, n + 1):
        c = entry(n, r, i, j, k)
        if c:
            if k < 0:
                raise AssertionError(f"negative power z^{k} in entry ({i},{j}) for n={n}, r={r}")
            coeffs[k] = c
    # every term beyond the summation window vanishes
    assert entry(n, r, i, j, n + 1) == 0 and entry(n, r, i, j, -2 * r - 1) == 0
    top = max(coeffs, default=-1)
    return IntPolynomial(coeffs.get(k, 0) for k in range(top + 1))


def _coerce_method(method, enum):
    try:
        return enum(method)
    except ValueError:
        raise ParameterError(f"unknown method {method!r}; choose from {[m.value for m in enum]}") from None


@lru_cache(maxsize=None)
def _numerator(n: int, r: int, method: NumeratorMethod) -> IntPolynomial:
    params = RingParams(n, r)
    if method is NumeratorMethod.PATHS:
        return paths.turn_gf(params)
    entry = ENTRIES[method.value]
    matrix = [[_entry_polynomial(entry, n, r, i, j) for j in range(1, r + 1)] for i in range(1, r + 1)]
    det = poly_det(matrix)
    if method is NumeratorMethod.DET3:
        det = shift_down(det, binomial(r, 2))
    return det


def numerator(params: RingParams, method: NumeratorMethod | str = "det1") -> IntPolynomial:
    """Numerator Q(z) of the Hilbert series over (1 - z)^{r(2n-2r-1)}."""
    method = _coerce_method(method, NumeratorMethod)
    params.require_formula_valid()
    if params.r == 0:
        return IntPolynomial.constant(1)
    return _numerator(params.n, params.r, method)


def hilbert_series(params: RingParams, method: NumeratorMethod | str = "det1") -> HilbertSeries:
    kind = params.kind
    if kind == TRIVIAL:
        return HilbertSeries(IntPolynomial.constant(1), 0)
    if kind == FULL_POLYNOMIAL:
        return HilbertSeries(IntPolynomial.constant(1), params.num_variables)
    return HilbertSeries(numerator(params, method), params.d)


def _row_support(entry: EntryFn, n: int, r: int, i: int) -> list[int]:
    return [k for k in range(-r, n + 1) if any(entry(n, r, i, j, k) for j in range(1, r + 1))]


@lru_cache(maxsize=None)
def _coefficients(n: int, r: int, method: str) -> dict[int, int]:
    """All nonzero coefficients F_k (or G_k, H_k) as {k: value}.

    Sums, over tuples (k_1..k_r), the r x r integer determinant whose row i
    is evaluated at k_i; rows that vanish identically at some k_i are skipped.
    """
    entry = COEFF_ENTRIES[method]
    supports = [_row_support(entry, n, r, i) for i in range(1, r + 1)]
    out: dict[int, int] = {}
    for ks in product(*supports):
        rows = [[entry(n, r, i, j, ki) for j in range(1, r + 1)] for i, ki in enumerate(ks, start=1)]
        val = int_det(rows)
        if val:
            total = sum(ks)
            out[total] = out.get(total, 0) + val
    return {k: v for k, v in out.items() if v}


def hfun_coefficients(params: RingParams, method: str = "F") -> dict[int, int]:
    """Nonzero F_k / G_k / H_k as a dict keyed by k."""
    method = _coerce_method(method, HFunMethod).value
    if method not in COEFF_ENTRIES:
        raise ParameterError(f"coefficients exist only for F, G, H, not {method!r}")
    params.require_formula_valid()
    if params.r == 0:
        return {0: 1}
    return dict(_coefficients(params.n, params.r, method))


def hfun_coefficient(params: RingParams, k: int, method: str = "F") -> int:
    return hfun_coefficients(params, method).get(k, 0)


def _lift(ell: int, d: int, k: int) -> int:
    """Coefficient of z^ell in z^k / (1 - z)^d."""
    if d == 0:
        return int(ell == k)
    return binomial(ell + d - k - 1, d - 1)


def hilbert_function(params: RingParams, ell: int, method: HFunMethod | str = "series") -> int:
    """dim_K of the degree-ell component of the Pfaffian ring."""
    method = _coerce_method(method, HFunMethod)
    if ell < 0:
        raise ParameterError("degree must be nonnegative")
    if method is HFunMethod.SERIES:
        return series_coefficient(hilbert_series(params, "det1"), ell)
    if method in (HFunMethod.HODGE1, HFunMethod.HODGE2):
        if params.r != 1:
            raise ParameterError("hodge1/hodge2 apply only for r = 1")
        return hodge_dim(params.n, ell, "Ho1" if method is HFunMethod.HODGE1 else "Ho2")
    if params.kind != FORMULA_VALID and params.kind != TRIVIAL:
        raise ParameterError(f"{method.value}-formula needs n >= 2r, got {params}")
    coeffs = hfun_coefficients(params, method.value)
    d = params.d
    offset = binomial(params.r, 2) if method is HFunMethod.H else 0
    return sum(c * _lift(ell + offset, d, k) for k, c in coeffs.items())


def hodge_dim(n: int, ell: int, variant: str = "Ho1") -> int:
    """Hilbert function of the Grassmannian G(2, n) in its Plucker embedding."""
    if n < 2:
        raise ParameterError("hodge_dim needs n >= 2")
    if ell < 0:
        raise ParameterError("degree must be nonnegative")
    if variant == "Ho1":
        a = ell + n - 2
        return binomial(a, ell) ** 2 - binomial(a, ell - 1) * binomial(a, ell + 1)
    if variant == "Ho2":
        return sum(
            binomial(2 * n + ell - k - 4, ell - k)
            * (binomial(n - 2, k) ** 2 - binomial(n - 3, k - 1) * binomial(n - 1, k + 1))
            for k in range(-1, ell + 1)
        )
    raise ParameterError(f"unknown variant {variant!r} (expected Ho1 or Ho2)")


def face_formula_dim(params: RingParams, ell: int, f: list[int] | None = None) -> int:
    """sum_i C(ell-1, i) f_i from the face numbers; 1 at ell = 0 (the empty face)."""
    if ell < 0:
        raise ParameterError("degree must be nonnegative")
    if ell == 0:
        return 1
    if f is None:
        f = paths.f_vector(params)
    return sum(binomial(ell - 1, i) * fi for i, fi in enumerate(f))
