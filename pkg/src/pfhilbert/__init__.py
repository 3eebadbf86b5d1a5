"""Hilbert series, Hilbert function and multiplicity of Pfaffian rings,
computed exactly by several independent formulas and combinatorial oracles."""

__version__ = "0.1.0"

from .exact_arith import (  # noqa: E402
    ExactnessError,
    HilbertSeries,
    IntPolynomial,
    ParameterError,
    binomial,
    poly_det,
    series_coefficients,
    shift_down,
)
from .params import RingParams  # noqa: E402
from .hilbert import (  # noqa: E402
    face_formula_dim,
    hfun_coefficient,
    hilbert_function,
    hilbert_series,
    hodge_dim,
    numerator,
)
from .multiplicity import (  # noqa: E402
    determinantal_degree,
    dimension,
    gorenstein_codim3,
    mult,
)
