"""Minimal-discriminant models of elliptic and superelliptic curves over Q."""

from .arith import Factorization, factorize, max_power_unit, valuation
from .elliptic import (
    CInvariants,
    Transformation,
    WeierstrassEquation,
    c_invariants,
    laska_minimize,
    step2_admissible_set,
    transform,
)
from .errors import DomainError, NonIntegralError, SingularCurveError
from .forms import BinaryForm, GL2Matrix, act, discriminant, evaluate, transvectant
from .superelliptic import (
    FactoredIdeal,
    ScalingReduction,
    SuperellipticCurve,
    curve_discriminant,
    global_minimal_discriminant,
    minimality_certificate,
    reduce,
    scaling_exponent_at,
)

__version__ = "0.1.0"
