"""
Superelliptic curves y^n = f(x) over Z and their scaling reduction.

The scaling by u is the substitution x = u^n X, y = u^d Y followed by
division by u^(nd); it sends the coefficient a_i of x^i to a_i / u^(n(d-i))
and the discriminant to Delta / u^(n d (d-1)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .arith import Factorization, factorize, valuation
from .errors import DomainError, NonIntegralError, SingularCurveError
from .forms import BinaryForm, discriminant

CERTIFIED = "certified_minimal"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SuperellipticCurve:
    """y^n = f(x, 1) with f integral, of degree d >= 3 and nonzero discriminant.

    ``point`` is an optional marked rational point; it plays no role in
    the reduction and is carried along unchanged.
    """

    n: int
    f: BinaryForm
    point: Optional[tuple] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"exponent n must be an integer >= 2, got {self.n!r}")
        if self.f.degree < 3:
            raise DomainError(f"degree must be >= 3, got {self.f.degree}")
        if not self.f.is_integral():
            raise DomainError("equation is not integral")
        if self.f.coeffs[0] == 0:
            raise DomainError("degenerate leading coefficient")
        if discriminant(self.f) == 0:
            raise SingularCurveError("singular model: f has a repeated root")

    @classmethod
    def from_ascending(cls, n: int, coeffs, point=None) -> SuperellipticCurve:
        """``coeffs`` = [a_0, a_1, ..., a_d], constant term first."""
        return cls(n, BinaryForm.from_ascending(coeffs), point)

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Affine coefficients a_0 .. a_d (a_i multiplies x^i)."""
        return tuple(c.numerator for c in self.f.ascending())

    @property
    def genus(self) -> int:
        n, d = self.n, self.degree
        return ((n - 1) * (d - 1) - gcd(n, d) + 1) // 2

    @property
    def weight(self) -> int:
        """n d (d - 1): the exponent of u in the discriminant scaling."""
        d = self.degree
        return self.n * d * (d - 1)

    def scaled(self, u: int) -> SuperellipticCurve:
        """Apply the scaling by u; raises if the result is not integral."""
        n, d = self.n, self.degree
        new = []
        for i, a in enumerate(self.coeffs):
            c = Fraction(a, u ** (n * (d - i)))
            if c.denominator != 1:
                raise NonIntegralError(f"scaling by {u} leaves integral model at x^{i}")
            new.append(c.numerator)
        return SuperellipticCurve.from_ascending(n, new, self.point)

    def inflated(self, u: int) -> SuperellipticCurve:
        """Inverse of :meth:`scaled`: a_i -> a_i * u^(n(d-i))."""
        n, d = self.n, self.degree
        return SuperellipticCurve.from_ascending(
            n, [a * u ** (n * (d - i)) for i, a in enumerate(self.coeffs)], self.point
        )


@dataclass(frozen=True)
class ScalingReduction:
    u: int
    old_delta: int
    new_delta: int


@dataclass(frozen=True)
class FactoredIdeal:
    """The ideal prod p^e in Z; ``sign`` is kept for reporting only."""

    sign: int
    factors: dict[int, int] = field(default_factory=dict)

    @classmethod
    def from_factorization(cls, fac: Factorization) -> FactoredIdeal:
        return cls(fac.sign, dict(sorted(fac.factors.items())))

    @property
    def generator(self) -> int:
        out = 1
        for p, e in self.factors.items():
            out *= p**e
        return out

    def __str__(self):
        if not self.factors:
            return "(1)"
        return "(" + " * ".join(f"{p}^{e}" for p, e in sorted(self.factors.items())) + ")"


def curve_discriminant(C: SuperellipticCurve) -> int:
    delta = discriminant(C.f)
    if delta == 0:
        raise SingularCurveError("singular model")
    return delta.numerator


def scaling_exponent_at(C: SuperellipticCurve, p: int) -> int:
    """Largest e such that scaling by p^e keeps the model integral."""
    n, d = C.n, C.degree
    e = min(
        valuation(a, p) // (n * (d - i)) for i, a in enumerate(C.coeffs[:-1]) if a
    )
    assert e <= valuation(curve_discriminant(C), p) // C.weight
    return e


def _candidate_primes(C: SuperellipticCurve) -> list[int]:
    # any prime admitting a scaling divides every nonzero lower coefficient
    g = 0
    for a in C.coeffs[:-1]:
        g = gcd(g, a)
    return factorize(g).primes()


def reduce(C: SuperellipticCurve) -> tuple[SuperellipticCurve, ScalingReduction]:
    """Divide out the largest scaling that keeps the model integral."""
    old = curve_discriminant(C)
    u = 1
    for p in _candidate_primes(C):
        u *= p ** scaling_exponent_at(C, p)
    reduced = C.scaled(u) if u > 1 else C
    new = curve_discriminant(reduced)
    assert new * u**C.weight == old
    return reduced, ScalingReduction(u, old, new)


def certificate_at(C: SuperellipticCurve, p: int) -> str:
    if valuation(curve_discriminant(C), p) < C.weight:
        return CERTIFIED
    return INCONCLUSIVE


def minimality_certificate(C: SuperellipticCurve) -> dict[int, str]:
    """Status at every prime dividing the discriminant.

    Primes not listed have v_p = 0 and are trivially certified.  The test is
    sufficient only, so a prime that fails it is reported as inconclusive.
    """
    w = C.weight
    fac = factorize(curve_discriminant(C))
    return {p: CERTIFIED if e < w else INCONCLUSIVE for p, e in sorted(fac.factors.items())}


def global_minimal_discriminant(C: SuperellipticCurve) -> FactoredIdeal:
    reduced, _ = reduce(C)
    return FactoredIdeal.from_factorization(factorize(curve_discriminant(reduced)))
