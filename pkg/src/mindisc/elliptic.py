"""
Long Weierstrass equations over Z and Laska's minimal-model reduction.

A transformation (u, r, s, t) is the substitution

    x = u^2 x' + r,    y = u^3 y' + u^2 s x' + t

and maps a model with discriminant D to one with discriminant D / u^12.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors_from, factorize, valuation
from .errors import DomainError, NonIntegralError, SingularCurveError


@dataclass(frozen=True)
class WeierstrassEquation:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integer a-invariants."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            if not isinstance(getattr(self, name), int):
                raise DomainError(f"{name} must be an integer, got {getattr(self, name)!r}")
        if self.discriminant == 0:
            raise SingularCurveError(f"singular curve {self.ainvs}")

    @property
    def ainvs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self) -> tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = a1 * a3 + 2 * a4
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def discriminant(self) -> int:
        c4, c6 = c4_c6(self.ainvs)
        q, r = divmod(c4**3 - c6**2, 1728)
        assert r == 0, "c4^3 - c6^2 not divisible by 1728"
        return q


@dataclass(frozen=True)
class CInvariants:
    c4: int
    c6: int
    delta: int


@dataclass(frozen=True)
class Transformation:
    u: int
    r: int = 0
    s: int = 0
    t: int = 0

    def __post_init__(self):
        if self.u == 0:
            raise DomainError("u must be nonzero")

    def then(self, other: Transformation) -> Transformation:
        """Composite of applying ``self`` first and ``other`` second."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = other.u, other.r, other.s, other.t
        return Transformation(
            u1 * u2,
            r1 + u1 * u1 * r2,
            s1 + u1 * s2,
            t1 + u1**3 * t2 + u1 * u1 * s1 * r2,
        )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.u, self.r, self.s, self.t)


def c4_c6(ainvs) -> tuple[int, int]:
    a1, a2, a3, a4, a6 = ainvs
    b2 = a1 * a1 + 4 * a2
    b4 = a1 * a3 + 2 * a4
    b6 = a3 * a3 + 4 * a6
    return b2 * b2 - 24 * b4, -(b2**3) + 36 * b2 * b4 - 216 * b6


def c_invariants(E: WeierstrassEquation) -> CInvariants:
    c4, c6 = c4_c6(E.ainvs)
    delta, r = divmod(c4**3 - c6**2, 1728)
    if r:
        raise ArithmeticError("c4^3 - c6^2 not divisible by 1728")
    if delta == 0:
        raise SingularCurveError("singular curve")
    return CInvariants(c4, c6, delta)


def transformed_coefficients(ainvs, T: Transformation) -> tuple[Fraction, ...]:
    """The a-invariants after ``T``, as exact rationals."""
    a1, a2, a3, a4, a6 = ainvs
    u, r, s, t = T.as_tuple()
    u = Fraction(u)
    return (
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u**2,
        (a3 + r * a1 + 2 * t) / u**3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4,
        (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - r * t * a1 - t * t) / u**6,
    )


def transform(E: WeierstrassEquation, T: Transformation) -> WeierstrassEquation:
    new = transformed_coefficients(E.ainvs, T)
    for name, c in zip(("a1", "a2", "a3", "a4", "a6"), new):
        if c.denominator != 1:
            raise NonIntegralError(
                f"transformation leaves integral model: {name}' = {c}"
            )
    return WeierstrassEquation(*(c.numerator for c in new))


def inflate(E: WeierstrassEquation, T: Transformation) -> WeierstrassEquation:
    """The model F with transform(F, T) == E.

    Solves the transformation relations for the unprimed coefficients; the
    result is always integral.
    """
    a1p, a2p, a3p, a4p, a6p = E.ainvs
    u, r, s, t = T.as_tuple()
    a1 = u * a1p - 2 * s
    a2 = u**2 * a2p + s * a1 - 3 * r + s * s
    a3 = u**3 * a3p - r * a1 - 2 * t
    a4 = u**4 * a4p + s * a3 - 2 * r * a2 + (t + r * s) * a1 - 3 * r * r + 2 * s * t
    a6 = u**6 * a6p - r * a4 - r * r * a2 - r**3 + t * a3 + r * t * a1 + t * t
    return WeierstrassEquation(a1, a2, a3, a4, a6)


def step2_admissible_set(c: CInvariants) -> list[int]:
    """Positive u with u^4 | c4, u^6 | c6 and u^12 | delta, ascending."""
    if c.c4 == 0 and c.c6 == 0:
        raise SingularCurveError("c4 = c6 = 0")
    if c.delta == 0:
        # formal input: only the c4/c6 divisibility can be used
        base = c.c4 if c.c4 else c.c6
    else:
        base = c.delta
    bound: dict[int, int] = {}
    for p in factorize(base).factors:
        limits = []
        if c.c4:
            limits.append(valuation(c.c4, p) // 4)
        if c.c6:
            limits.append(valuation(c.c6, p) // 6)
        if c.delta:
            limits.append(valuation(c.delta, p) // 12)
        e = min(limits)
        if e:
            bound[p] = e
    return divisors_from(bound)


def _step4_candidates(xu: int, yu: int):
    """(a1', a2', a3') with a1', a3' in {0, 1}, a2' in {-1, 0, 1}.

    Candidates meeting a1'^4 = xu (mod 8) and a2'^3 = -a1'^6 - yu (mod 3)
    come first; the rest follow so that an exhaustive scan is possible.
    """
    all_ = list(itertools.product((0, 1), (-1, 0, 1), (0, 1)))

    def preferred(c):
        a1, a2, _ = c
        return (a1**4 - xu) % 8 == 0 and (a2**3 + a1**6 + yu) % 3 == 0

    return [c for c in all_ if preferred(c)] + [c for c in all_ if not preferred(c)]


def _reduce_at(E: WeierstrassEquation, u: int, xu: int, yu: int):
    a1, a2, a3 = E.a1, E.a2, E.a3
    for a1p, a2p, a3p in _step4_candidates(xu, yu):
        # Step 5: a4', a6' from the c-invariant formulas
        b2 = a1p * a1p + 4 * a2p
        num4 = b2 * b2 - xu - 24 * a1p * a3p
        if num4 % 48:
            continue
        a4p = num4 // 48
        b4 = a1p * a3p + 2 * a4p
        num6 = -(b2**3) + 36 * b2 * b4 - yu - 216 * a3p * a3p
        if num6 % 864:
            continue
        # Step 6: s, r, t in turn
        num_s = u * a1p - a1
        if num_s % 2:
            continue
        s = num_s // 2
        num_r = u * u * a2p - a2 + s * a1 + s * s
        if num_r % 3:
            continue
        r = num_r // 3
        num_t = u**3 * a3p - a3 - r * a1
        if num_t % 2:
            continue
        t = num_t // 2
        T = Transformation(u, r, s, t)
        try:
            Ep = transform(E, T)
        except NonIntegralError:
            continue
        if Ep.ainvs != (a1p, a2p, a3p, a4p, num6 // 864):
            continue
        return Ep, T
    return None


def laska_minimize(
    E: WeierstrassEquation, translations: bool = True
) -> tuple[WeierstrassEquation, Transformation]:
    """Minimal model of E over Z and the transformation reaching it.

    With ``translations=False`` only pure scalings (u, 0, 0, 0) are tried.
    """
    if not isinstance(E, WeierstrassEquation):
        raise DomainError("expected a WeierstrassEquation")
    c = c_invariants(E)
    S = step2_admissible_set(c)
    # try the largest u first and descend on failure
    for u in reversed(S):
        if not translations:
            try:
                return transform(E, Transformation(u)), Transformation(u)
            except NonIntegralError:
                continue
        found = _reduce_at(E, u, c.c4 // u**4, c.c6 // u**6)
        if found is not None:
            return found
    raise AssertionError("no reduction found, even at u = 1")

