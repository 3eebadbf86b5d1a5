"""Ring parameters (n, r) for the Pfaffian ring K[X]/I_{r+1}(X)."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import ParameterError, binomial

TRIVIAL = "trivial-ring"
FULL_POLYNOMIAL = "full-polynomial-ring"
FORMULA_VALID = "formula-valid"


@dataclass(frozen=True, order=True)
class RingParams:
    """Order ``n`` of the generic skew-symmetric matrix and rank parameter ``r``.

    The ideal is generated by the (2r+2)-Pfaffians, so the ring has
    "Pfaffian rank" at most 2r.
    """

    n: int
    r: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.r, int):
            raise ParameterError("n and r must be integers")
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if self.r < 0:
            raise ParameterError(f"r must be >= 0, got {self.r}")

    @property
    def kind(self) -> str:
        if self.r == 0:
            return TRIVIAL
        if self.n <= 2 * self.r - 1:
            return FULL_POLYNOMIAL
        return FORMULA_VALID

    @property
    def formula_valid(self) -> bool:
        """True when the lattice-path and determinant formulas apply (n >= 2r)."""
        return self.n >= 2 * self.r

    @property
    def num_variables(self) -> int:
        return binomial(self.n, 2)

    @property
    def d(self) -> int:
        """r(2n-2r-1): Krull dimension for n >= 2r."""
        return self.r * (2 * self.n - 2 * self.r - 1)

    def require_formula_valid(self) -> None:
        if not self.formula_valid:
            raise ParameterError(f"{self} requires n >= 2r")

    def __str__(self) -> str:
        return f"(n={self.n}, r={self.r})"


def grid(max_n: int, min_n: int = 1, r_max: int | None = None):
    """All formula-valid RingParams with min_n <= n <= max_n, ordered by (n, r)."""
    for n in range(max(min_n, 1), max_n + 1):
        top = n // 2 if r_max is None else min(n // 2, r_max)
        for r in range(0, top + 1):
            yield RingParams(n, r)
