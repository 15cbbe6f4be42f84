"""Nonclassicality diagnostics of the three-mode squeeze operator."""

from .ladder import (
    CoherentState,
    InputState,
    LadderPolynomial,
    NumberState,
    expectation,
    normal_order,
)
from .moments import (
    MomentTable,
    QuadratureSelector,
    UndefinedMomentError,
    a1_moments_closed,
    cauchy_schwarz,
    g2,
    moment_table,
    squeezing,
    squeezing_symmetric_closed,
    subpoisson_certificate,
    transformed_mode,
)
from .quasiprob import (
    PFunctionSingularError,
    QuasiprobGrid,
    WignerAux,
    WindowSelectionError,
    char_fn,
    fock_limit_wigner,
    laguerre,
    wigner_aux,
    wigner_closed,
    wigner_excited,
    wigner_numeric,
    wigner_origin,
    wigner_vacuum,
)
from .symplectic import (
    BogoliubovCoeffs,
    SqueezeParams,
    SymplecticReport,
    bogoliubov_coeffs,
    coupling_matrix,
    symmetric_coeffs_closed,
    symplectic_check,
)

__all__ = [
    "BogoliubovCoeffs",
    "CoherentState",
    "InputState",
    "LadderPolynomial",
    "MomentTable",
    "NumberState",
    "PFunctionSingularError",
    "QuadratureSelector",
    "QuasiprobGrid",
    "SqueezeParams",
    "SymplecticReport",
    "UndefinedMomentError",
    "WignerAux",
    "WindowSelectionError",
    "a1_moments_closed",
    "bogoliubov_coeffs",
    "cauchy_schwarz",
    "char_fn",
    "coupling_matrix",
    "expectation",
    "fock_limit_wigner",
    "g2",
    "laguerre",
    "moment_table",
    "normal_order",
    "squeezing",
    "squeezing_symmetric_closed",
    "subpoisson_certificate",
    "symmetric_coeffs_closed",
    "symplectic_check",
    "transformed_mode",
    "wigner_aux",
    "wigner_closed",
    "wigner_excited",
    "wigner_numeric",
    "wigner_origin",
    "wigner_vacuum",
]

__version__ = "0.1.0"
