"""Krull dimension and multiplicity (degree) of Pfaffian rings.

All rational intermediate results are checked for integrality at the
end; nothing is ever rounded.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial

from .exact_arith import ParameterError, binomial, int_det, rational_det, to_integer
from .params import FULL_POLYNOMIAL, TRIVIAL, RingParams
from . import hilbert


class MultMethod(str, Enum):
    PRODUCT45 = "product45"
    DET46 = "det46"
    HERZOG_TRUNG = "herzog_trung"
    HT_DET = "ht_det"
    HT_PRODUCT = "ht_product"
    JLP_DET = "jlp_det"
    SERIES = "series"


ALL_METHODS = tuple(m.value for m in MultMethod)


def dimension(params: RingParams) -> int:
    kind = params.kind
    if kind == TRIVIAL:
        return 0
    if kind == FULL_POLYNOMIAL:
        return params.num_variables
    return params.d


def product45(n: int, r: int) -> int:
    """prod_{1<=i<=j<=n-2r-1} (2r+i+j)/(i+j)."""
    acc = Fraction(1)
    top = n - 2 * r - 1
    for i in range(1, top + 1):
        for j in range(i, top + 1):
            acc *= Fraction(2 * r + i + j, i + j)
    return to_integer(acc, "product formula")


def det46(n: int, r: int) -> int:
    a = 2 * n - 4 * r
    m = n - 2 * r
    return int_det([
        [binomial(a, m - i + j) - binomial(a, m - i - j + 1) for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ])


def herzog_trung_verbatim(n: int, r: int) -> int:
    """det_{1<=i,j<=r} [C(2n-4r+2, n-2r-i+j+1) - C(2n-4r+2, n-2r-i-j+1)], as printed.

    This gives the multiplicity for matrix order n + 2, not n.
    """
    a = 2 * n - 4 * r + 2
    m = n - 2 * r
    return int_det([
        [binomial(a, m - i + j + 1) - binomial(a, m - i - j + 1) for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ])


def herzog_trung(n: int, r: int, verbatim: bool = False) -> int:
    if verbatim:
        return herzog_trung_verbatim(n, r)
    if n < 2 * r + 1:
        raise ParameterError("shifted herzog_trung determinant needs n >= 2r+1")
    return herzog_trung_verbatim(n - 2, r)


def _half_power(e: int) -> Fraction:
    return Fraction(1, 2 ** e) if e >= 0 else Fraction(2 ** -e)


def ht_det(n: int, r: int) -> int:
    """2^{-C(n-2r,2)} det_{1<=i,j<=n-2r-1} C(n, n-2r+j-2i)."""
    size = max(n - 2 * r - 1, 0)
    m = n - 2 * r
    det = rational_det([[binomial(n, m + j - 2 * i) for j in range(1, size + 1)] for i in range(1, size + 1)])
    return to_integer(_half_power(binomial(m, 2)) * det, "Chern-class determinant")


def jlp_det(n: int, r: int) -> int:
    """2^{-C(n-2r,2)} det_{1<=i,j<=n-2r-1} C(n+2j-i-1, 2j-i)."""
    size = max(n - 2 * r - 1, 0)
    m = n - 2 * r
    det = rational_det([[binomial(n + 2 * j - i - 1, 2 * j - i) for j in range(1, size + 1)] for i in range(1, size + 1)])
    return to_integer(_half_power(binomial(m, 2)) * det, "Segre-class determinant")


def ht_product(n: int, r: int) -> int:
    """2^{-(n-2r-1)} prod_{i=0}^{n-2r-2} C(n+i, 2r+2i+1) / C(2i+1, i).

    The power of 2 counts the factors of the product, so it is clamped at 0
    when the product is empty (n = 2r).
    """
    factors = max(n - 2 * r - 1, 0)
    acc = Fraction(1, 2 ** factors)
    for i in range(factors):
        acc *= Fraction(binomial(n + i, 2 * r + 2 * i + 1), binomial(2 * i + 1, i))
    return to_integer(acc, "binomial product")


def mult(params: RingParams, method: MultMethod | str = "product45", verbatim: bool = False) -> int:
    """Multiplicity e(R) by the selected formula.

    ``verbatim`` only affects ``herzog_trung``: True evaluates the printed
    determinant at n itself instead of at n - 2.
    """
    try:
        method = MultMethod(method)
    except ValueError:
        raise ParameterError(f"unknown multiplicity method {method!r}") from None
    params.require_formula_valid()
    n, r = params.n, params.r
    if method is MultMethod.PRODUCT45:
        return product45(n, r)
    if method is MultMethod.DET46:
        return det46(n, r)
    if method is MultMethod.HERZOG_TRUNG:
        return herzog_trung(n, r, verbatim=verbatim)
    if method is MultMethod.HT_DET:
        return ht_det(n, r)
    if method is MultMethod.JLP_DET:
        return jlp_det(n, r)
    if method is MultMethod.HT_PRODUCT:
        return ht_product(n, r)
    return hilbert.numerator(params, "det1")(1)


def gorenstein_codim3(s: int) -> int:
    """Multiplicity of the generic codimension-3 Gorenstein ideal: s(s+1)(2s+1)/6."""
    if s < 1:
        raise ParameterError("s must be >= 1")
    return to_integer(Fraction(s * (s + 1) * (2 * s + 1), 6))


def determinantal_degree(m: int, n: int, rank: int, method: str = "det") -> int:
    """Degree of the projective variety of m x n matrices of rank <= ``rank``."""
    if not (1 <= rank <= min(m, n)):
        raise ParameterError(f"rank must satisfy 1 <= rank <= min(m, n), got {rank}")
    if method == "det":
        size = n - rank
        return int_det([[binomial(m, m - rank + j - i) for j in range(1, size + 1)] for i in range(1, size + 1)])
    if method == "product":
        acc = Fraction(1)
        for i in range(n - rank):
            acc *= Fraction(factorial(m + i) * factorial(i), factorial(rank + i) * factorial(m - rank + i))
        return to_integer(acc, "determinantal degree product")
    raise ParameterError(f"unknown method {method!r}")


def all_multiplicities(params: RingParams) -> dict[str, int | None]:
    """Every method's value; None where a method does not apply."""
    out: dict[str, int | None] = {}
    for m in ALL_METHODS:
        try:
            out[m] = mult(params, m)
        except ParameterError:
            out[m] = None
    return out
