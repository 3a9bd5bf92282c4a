"""Exact integer, rational and modular arithmetic.

Primality, modular powers, the topological-generator test for 1 + pZ_p,
and Bernoulli numbers kept as reduced rationals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

BERNOULLI_MAX_INDEX = 64

# Deterministic for n < 3.3e24, which covers the 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"prime_factors needs n >= 1, got {n}")
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out.append(n)
    return out


def powmod(base: int, exp: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exp, modulus)


def is_one_plus_p_generator(ell: int, p: int) -> bool:
    """True iff ell / teichmuller(ell) topologically generates 1 + pZ_p.

    Uses the equivalent criterion p^2 does not divide ell^(p-1) - 1.
    """
    if ell % p == 0:
        raise ValueError(f"ell={ell} must be prime to p={p}")
    return pow(ell, p - 1, p * p) != 1


@dataclass(frozen=True)
class BernoulliValue:
    index: int
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0 or gcd(self.numerator, self.denominator) != 1:
            raise ValueError("BernoulliValue must be stored reduced with positive denominator")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


def _check_index(k: int) -> None:
    if k < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if k > BERNOULLI_MAX_INDEX:
        raise ValueError(f"Bernoulli index {k} exceeds the supported bound {BERNOULLI_MAX_INDEX}")


@lru_cache(maxsize=1)
def _bernoulli_table() -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0, so B_1 = -1/2
    table = [Fraction(1)]
    for m in range(1, BERNOULLI_MAX_INDEX + 1):
        acc = sum(comb(m + 1, j) * table[j] for j in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli_recursive(k: int) -> Fraction:
    _check_index(k)
    return _bernoulli_table()[k]


def bernoulli_akiyama_tanigawa(k: int) -> Fraction:
    """Independent route; the algorithm yields B_1 = +1/2, flipped here."""
    _check_index(k)
    a = [Fraction(0)] * (k + 1)
    for m in range(k + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    value = a[0]
    return -value if k == 1 else value


def bernoulli(k: int) -> BernoulliValue:
    b = bernoulli_recursive(k)
    return BernoulliValue(k, b.numerator, b.denominator)


class Residue(enum.Enum):
    """Non-residue outcomes of a reduction mod p."""

    P_IN_DENOMINATOR = "p-in-denominator"


def bernoulli_mod_p(k: int, p: int) -> int | Residue:
    """B_k mod p, or Residue.P_IN_DENOMINATOR when B_k is not p-integral."""
    b = bernoulli(k)
    if b.denominator % p == 0:
        return Residue.P_IN_DENOMINATOR
    return b.numerator * pow(b.denominator, -1, p) % p


def von_staudt_clausen_denominator(k: int) -> int:
    """Product of primes q with (q - 1) | k, for even k >= 2."""
    if k < 2 or k % 2:
        raise ValueError("defined for even k >= 2")
    out = 1
    for q in primes_up_to(k + 1):
        if k % (q - 1) == 0:
            out *= q
    return out


def default_unobstructed_indices(p: int, a: int) -> tuple[int, int]:
    return (a + 1, p - a)


@dataclass(frozen=True)
class UnobstructednessEvidence:
    """Outcome of the Bernoulli test for 1 + omega_p^a with N = 1.

    ``values`` maps each Bernoulli index to its residue mod p (or the
    p-in-denominator flag). An index passes when p does not divide the
    numerator of B_k, so a p-in-denominator value counts as a p-unit
    up to the power of p in the denominator, never as a zero.
    """

    p: int
    a: int
    indices: tuple[int, ...]
    values: dict = field(compare=False)
    unobstructed: bool
    inferred_pattern: bool = True

    def __bool__(self):
        return self.unobstructed

    def describe(self) -> str:
        parts = []
        for k in self.indices:
            v = self.values[k]
            shown = v.value if isinstance(v, Residue) else str(v)
            parts.append(f"B_{k} mod {self.p} = {shown}")
        return ", ".join(parts)


def check_unobstructed_bernoulli(p: int, a: int, indices=None) -> UnobstructednessEvidence:
    if not (p >= 3 and is_prime(p)):
        raise ValueError(f"p={p} must be an odd prime")
    if a % 2 == 0:
        raise ValueError("the exponent a must be odd (chi must be odd)")
    if not 1 <= a <= p - 2:
        raise ValueError(f"need 1 <= a <= p - 2, got a={a}")
    inferred = indices is None
    if indices is None:
        indices = default_unobstructed_indices(p, a)
    indices = tuple(indices)
    values = {k: bernoulli_mod_p(k, p) for k in indices}
    ok = all(v == Residue.P_IN_DENOMINATOR or v != 0 for v in values.values())
    return UnobstructednessEvidence(p, a, indices, values, ok, inferred)


@dataclass(frozen=True)
class HypothesisContext:
    p: int
    N: int = 1
    a: int = 1
    ell: int | None = None

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p={self.p} must be an odd prime")
        if self.N < 1 or gcd(self.N, self.p) != 1:
            raise ValueError(f"N={self.N} must be positive and prime to p")
        if self.ell is not None:
            if not is_prime(self.ell):
                raise ValueError(f"ell={self.ell} is not prime")
            if (self.N * self.p) % self.ell == 0:
                raise ValueError(f"ell={self.ell} divides Np")

    def as_dict(self) -> dict:
        return {"p": self.p, "N": self.N, "a": self.a, "ell": self.ell}
