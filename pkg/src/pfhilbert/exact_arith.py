"""Exact integer/rational arithmetic, dense integer polynomials, determinants.

Nothing in this module rounds.  Integers are Python ints, rationals are
:class:`fractions.Fraction` (always in lowest terms with positive
denominator).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence


class ParameterError(ValueError):
    """Input outside the domain of an operation."""


class ExactnessError(ArithmeticError):
    """A division or shift that must be exact was not (signals a bug)."""


BigRational = Fraction


@lru_cache(maxsize=None)
def binomial(a: int, b: int) -> int:
    """Binomial coefficient under the counting convention.

    Zero whenever ``b < 0``, ``a < 0`` or ``a < b``; no generalized
    (negative upper index) values.
    """
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


def to_integer(q: Fraction | int, what: str = "value") -> int:
    """Return ``q`` as an int, raising if it is not integral."""
    q = Fraction(q)
    if q.denominator != 1:
        raise ExactnessError(f"{what} is not integral: {q}")
    return q.numerator


class IntPolynomial:
    """Dense univariate polynomial in z with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``z**k``.  Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        if k < 0:
            raise ParameterError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def z(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ParameterError("negative power")
        result = IntPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate at ``x`` (int, Fraction, ...) by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient ``self / other``, raising unless the division is exact in Z[z]."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < dd:
            if any(rem):
                raise ExactnessError(f"{self} not divisible by {other}")
            return IntPolynomial()
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ExactnessError(f"{self} not divisible by {other}")
            quot[k - dd] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dd + j] -= q * b
        if any(rem):
            raise ExactnessError(f"{self} not divisible by {other}")
        return IntPolynomial(quot)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


def shift_down(p: IntPolynomial, k: int) -> IntPolynomial:
    """Divide ``p`` by ``z**k``; the ``k`` lowest coefficients must vanish."""
    if k < 0:
        raise ParameterError("shift must be nonnegative")
    low = p.coeffs[:k]
    if any(low):
        raise ExactnessError(f"cannot divide {p} exactly by z^{k}")
    return IntPolynomial(p.coeffs[k:])


def _check_square(m: Sequence[Sequence]) -> int:
    size = len(m)
    for row in m:
        if len(row) != size:
            raise ParameterError("matrix is not square")
    return size


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(m: Sequence[Sequence]):
    """Determinant by the permutation expansion.  Works for any ring
    elements supporting ``+``/``*``; only usable for small sizes."""
    size = _check_square(m)
    total = 0
    for p in permutations(range(size)):
        term = _perm_sign(p)
        for i, j in enumerate(p):
            term = term * m[i][j]
        total = total + term
    return total


def det_cofactor(m: Sequence[Sequence]):
    """Determinant by Laplace expansion along the first row."""
    size = _check_square(m)
    if size == 0:
        return 1
    if size == 1:
        return m[0][0]
    total = 0
    for j in range(size):
        entry = m[0][j]
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in (list(r) for r in m[1:])]
        term = entry * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(m: Sequence[Sequence], div=None):
    """Fraction-free Gaussian elimination (Bareiss).

    ``div(a, b)`` must perform exact division in the entry ring; it
    defaults to integer floor division with an exactness check.
    """
    size = _check_square(m)
    if size == 0:
        return 1
    if div is None:
        def div(a, b):
            q, r = divmod(a, b)
            if r:
                raise ExactnessError("Bareiss division was not exact")
            return q
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = div(a[i][j] * pivot - a[i][k] * a[k][j], prev)
            a[i][k] = 0
        prev = pivot
    return a[-1][-1] if sign > 0 else -a[-1][-1]


def int_det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix."""
    return int(det_bareiss([[int(x) for x in row] for row in m]))


def rational_det(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a matrix of rationals (Gaussian elimination over Q)."""
    size = _check_square(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(size):
        piv = next((i for i in range(k, size) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, size):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, size):
                    a[i][j] -= f * a[k][j]
    return det


COFACTOR_MAX = 6


def poly_det(entries: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Exact determinant of a square matrix of integer polynomials.

    Cofactor expansion up to size 6, fraction-free elimination over Z[z]
    above that.
    """
    size = _check_square(entries)
    if size == 0:
        return IntPolynomial.constant(1)
    m = [[IntPolynomial._coerce(x) for x in row] for row in entries]
    if size <= COFACTOR_MAX:
        return IntPolynomial._coerce(det_cofactor(m))
    return IntPolynomial._coerce(det_bareiss(m, div=lambda a, b: a.exact_div(b)))


class HilbertSeries:
    """The rational function ``numerator(z) / (1 - z)**denom_exponent``."""

    __slots__ = ("numerator", "denom_exponent")

    def __init__(self, numerator: IntPolynomial, denom_exponent: int):
        if denom_exponent < 0:
            raise ParameterError("denominator exponent must be nonnegative")
        object.__setattr__(self, "numerator", IntPolynomial._coerce(numerator))
        object.__setattr__(self, "denom_exponent", int(denom_exponent))

    def __setattr__(self, name, value):
        raise AttributeError("HilbertSeries is immutable")

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return (self.numerator, self.denom_exponent) == (other.numerator, other.denom_exponent)

    def __hash__(self):
        return hash((self.numerator, self.denom_exponent))

    def __repr__(self):
        return f"HilbertSeries({self.numerator!r}, {self.denom_exponent})"

    def __str__(self):
        return f"({self.numerator}) / (1 - z)^{self.denom_exponent}"

    @property
    def dimension(self) -> int:
        return self.denom_exponent

    @property
    def multiplicity(self) -> int:
        return self.numerator(1)

    @property
    def h_vector(self) -> tuple[int, ...]:
        return self.numerator.coeffs


def series_coefficient(s: HilbertSeries, l: int) -> int:
    """Coefficient of z^l in the power-series expansion of ``s``."""
    d = s.denom_exponent
    if l < 0:
        return 0
    if d == 0:
        return s.numerator[l]
    return sum(c * binomial(l - k + d - 1, d - 1) for k, c in enumerate(s.numerator.coeffs) if k <= l)


def series_coefficients(s: HilbertSeries, L: int) -> list[int]:
    """Coefficients of z^0..z^L in the power-series expansion of ``s``."""
    return [series_coefficient(s, l) for l in range(L + 1)]
