"""
Binary forms f(X, Z) = a0 X^d + a1 X^(d-1) Z + ... + ad Z^d.

Coefficients are kept as ``Fraction`` in descending powers of X.  The
GL2 action, the discriminant and transvectants are all exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm

from .errors import DomainError


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


@dataclass(frozen=True)
class GL2Matrix:
    """Integer matrix [[a, b], [c, d]] acting by (X, Z) -> (aX + bZ, cX + dZ)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det == 0:
            raise DomainError("singular matrix")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: GL2Matrix) -> GL2Matrix:
        return GL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @classmethod
    def identity(cls) -> GL2Matrix:
        return cls(1, 0, 0, 1)


@dataclass(frozen=True, init=False)
class BinaryForm:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise DomainError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_ascending(cls, coeffs) -> BinaryForm:
        """Build from coefficients of f(x, 1) listed constant term first."""
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def ascending(self) -> tuple[Fraction, ...]:
        return self.coeffs[::-1]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise DomainError(f"form has non-integral coefficients: {self}")
        return tuple(c.numerator for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return BinaryForm(_poly_mul(self.coeffs, other.coeffs))
        return BinaryForm(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __add__(self, other: BinaryForm) -> BinaryForm:
        if other.degree != self.degree:
            raise DomainError("cannot add forms of different degree")
        return BinaryForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> BinaryForm:
        return BinaryForm(-c for c in self.coeffs)

    def __str__(self):
        d = self.degree
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("X", d - i), ("Z", i)) if e
            )
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms) if terms else "0"

    def derivative_x(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            return BinaryForm([0])
        return BinaryForm((d - i) * c for i, c in enumerate(self.coeffs[:-1]))

    def derivative_z(self) -> BinaryForm:
        if self.degree == 0:
            return BinaryForm([0])
        return BinaryForm(i * c for i, c in enumerate(self.coeffs) if i)


def evaluate(f: BinaryForm, x, z) -> Fraction:
    x, z = Fraction(x), Fraction(z)
    d = f.degree
    acc = Fraction(0)
    zpow = Fraction(1)
    for i, c in enumerate(f.coeffs):
        acc += c * x ** (d - i) * zpow
        zpow *= z
    return acc


def act(f: BinaryForm, M: GL2Matrix) -> BinaryForm:
    """f^M(X, Z) = f(aX + bZ, cX + dZ)."""
    if M.det == 0:
        raise DomainError("singular matrix")
    d = f.degree
    lx = [M.a, M.b]
    lz = [M.c, M.d]
    xpow = [[1]]
    zpow = [[1]]
    for _ in range(d):
        xpow.append(_poly_mul(xpow[-1], lx))
        zpow.append(_poly_mul(zpow[-1], lz))
    out = [Fraction(0)] * (d + 1)
    for i, c in enumerate(f.coeffs):
        if c:
            for k, t in enumerate(_poly_mul(xpow[d - i], zpow[i])):
                out[k] += c * t
    return BinaryForm(out)


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix."""
    m = [row[:] for row in m]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(p: list[int], q: list[int]) -> list[list[int]]:
    """Sylvester matrix of two polynomials given with leading coefficient first."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(p) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(q) + [0] * (size - n - 1 - i))
    return rows


def resultant(p: list[int], q: list[int]) -> int:
    """Res(p, q) for integer polynomials, leading coefficient first."""
    if len(p) == 1 and len(q) == 1:
        return 1
    return _bareiss_det(sylvester_matrix(p, q))


def discriminant(f: BinaryForm) -> Fraction:
    """a0^(2d-2) * prod_{i<j} (alpha_i - alpha_j)^2 over the roots of f(x, 1).

    Computed as (-1)^(d(d-1)/2) Res(f, f') / a0 on an integer rescaling of f.
    Homogeneous of degree 2d - 2 in the coefficients, so for integral f the
    result is an integer.
    """
    d = f.degree
    if d < 2:
        raise DomainError(f"discriminant needs degree >= 2, got {d}")
    if f.coeffs[0] == 0:
        raise DomainError("degenerate leading coefficient")
    den = lcm(*(c.denominator for c in f.coeffs))
    p = [(c * den).numerator for c in f.coeffs]
    dp = [(d - i) * c for i, c in enumerate(p[:-1])]
    res = resultant(p, dp)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, p[0])
    assert r == 0
    return Fraction(q, den ** (2 * d - 2))


def transvectant(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant (f, g)^r via the Omega process.

    (f,g)^r = (m-r)!(n-r)!/(m!n!) * sum_k (-1)^k C(r,k)
              * d^r f / dX^(r-k) dZ^k * d^r g / dX^k dZ^(r-k)
    """
    m, n = f.degree, g.degree
    if r < 0 or r > min(m, n):
        raise DomainError(f"transvectant order r={r} outside 0..{min(m, n)}")

    def partials(h: BinaryForm) -> list[BinaryForm]:
        # partials(h)[k] = d^r h / dX^(r-k) dZ^k
        out = []
        for k in range(r + 1):
            p = h
            for _ in range(r - k):
                p = p.derivative_x()
            for _ in range(k):
                p = p.derivative_z()
            out.append(p)
        return out

    fp, gp = partials(f), partials(g)
    total = BinaryForm([0] * (m + n - 2 * r + 1))
    for k in range(r + 1):
        term = fp[k] * gp[r - k]
        total = total + term * ((-1) ** k * comb(r, k))
    scale = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    return total * scale
