"""
Exact integer kernel: primality, factorization and p-adic valuations.

Everything is built on Python ints (arbitrary precision) and
``fractions.Fraction`` for rationals; nothing here touches floating point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

Rational = Fraction

TRIAL_BOUND = 10**6

# Miller-Rabin with these bases is exact for n < 3317044064679887385961981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXACT_BOUND = 3317044064679887385961981


@lru_cache(maxsize=1)
def small_primes(limit: int = TRIAL_BOUND) -> tuple[int, ...]:
    """All primes below ``limit`` (sieve of Eratosthenes)."""
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return tuple(i for i in range(limit) if sieve[i])


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while _jacobi(D, n) != -1:
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x: int) -> int:
        x %= n
        return (x + n) // 2 if x % 2 else x // 2

    U, V, Qk = 0, 2, 1
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Exact for n < 3.3e24 (Miller-Rabin with the first 13 prime bases);
    above that a Baillie-PSW test, for which no counterexample is known.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_EXACT_BOUND:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0 (Newton iteration)."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int]:
    """(r, k) with r**k == n and k maximal among primes tried."""
    for k in small_primes()[: n.bit_length()]:
        if k > n.bit_length():
            break
        r = _iroot(n, k)
        if r**k == n:
            root, kk = _perfect_power(r)
            return root, k * kk
    return n, 1


def _split(n: int, out: dict[int, int], rng: random.Random) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root, k = _perfect_power(m)
        if k > 1:
            stack.extend([root] * k)
            continue
        g = _brent_rho(m, rng)
        stack.extend((g, m // g))


@dataclass(frozen=True)
class Factorization:
    """``sign * prod(p**e for p, e in factors.items())``."""

    sign: int
    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        for p, e in self.factors.items():
            if e < 1:
                raise DomainError(f"exponent of {p} must be positive, got {e}")

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors.items():
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return sorted(self.factors)

    def __str__(self):
        if not self.factors:
            return str(self.sign)
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(self.factors.items())]
        body = " * ".join(parts)
        return f"-1 * {body}" if self.sign < 0 else body


def factorize(n: int, seed: int = 0) -> Factorization:
    """Prime factorization of a nonzero integer.

    Trial division by primes below 10**6, then Brent's variant of Pollard
    rho on what is left.  Every reported factor passes :func:`is_prime`, so
    the result does not depend on the random walk.
    """
    if n == 0:
        raise DomainError("zero has no factorization")
    sign = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}

    for i, p in enumerate(small_primes()):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
        # bail out of the long loop once the cofactor is itself prime
        if i == 200 and is_prime(m):
            break

    if m > 1:
        _split(m, found, random.Random(seed))
    return Factorization(sign, dict(sorted(found.items())))


def valuation(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in the nonzero integer (or rational) ``n``."""
    if n == 0:
        raise DomainError("valuation of zero is infinite")
    if p < 2:
        raise DomainError(f"{p} is not a prime")
    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p)
    n = abs(n)
    v = 0
    # square the modulus while it keeps dividing, for large exponents
    while n % p == 0:
        pk, k = p, 1
        while n % (pk * pk) == 0:
            pk *= pk
            k *= 2
        n //= pk
        v += k
    return v


def max_power_unit(n: int, k: int) -> int:
    """Largest u > 0 with u**k dividing n."""
    if n == 0:
        raise DomainError("every integer power divides zero")
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    u = 1
    for p, e in factorize(n).factors.items():
        u *= p ** (e // k)
    return u


def is_integral(x) -> bool:
    return isinstance(x, int) or x.denominator == 1


def as_int(x) -> int:
    """Convert an integral ``Fraction`` (or int) to int, else raise."""
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise DomainError(f"{x} is not an integer")
    return x.numerator


def divisors_from(factors: dict[int, int]) -> list[int]:
    """All positive divisors of prod(p**e), ascending."""
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
