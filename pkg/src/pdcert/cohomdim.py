"""Dimension bookkeeping for Galois cohomology of 2-dimensional reducible
residual representations: Euler characteristic, Kummer counts, level-raising
deltas, tangent-space formulas.

Base H^1 dimensions are inputs; formulas only run when their hypotheses are
flagged, otherwise an ``Unestablished`` record comes back instead of a number.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd
from typing import NamedTuple

from .arith import check_unobstructed_bernoulli, is_prime, prime_factors


class InconsistentInput(ValueError):
    """Input dimensions contradict a formula's own conclusions."""


@dataclass(frozen=True)
class Unestablished:
    """Returned in place of a number when hypotheses are missing."""

    operation: str
    missing: tuple[str, ...]

    def __bool__(self):
        return False

    def __str__(self):
        return f"{self.operation}: hypothesis not established ({', '.join(self.missing)})"


@dataclass(frozen=True)
class CharacterData:
    """chi = omega_p^a, evaluated in the N = 1 mode."""

    p: int
    a: int
    N: int = 1

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p={self.p} must be an odd prime")
        if self.N < 1 or gcd(self.N, self.p) != 1:
            raise ValueError("N must be positive and prime to p")
        object.__setattr__(self, "a", self.a % (self.p - 1))

    @property
    def is_odd(self) -> bool:
        # omega_p(complex conjugation) = -1 and p - 1 is even
        return self.a % 2 == 1

    def frobenius_value(self, q: int) -> int:
        if (self.N * self.p) % q == 0:
            raise ValueError(f"{q} is ramified for chi")
        return pow(q, self.a, self.p)

    def inverse(self) -> CharacterData:
        return CharacterData(self.p, -self.a, self.N)


def _check_unramified(chi: CharacterData, ell: int) -> None:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if (chi.N * chi.p) % ell == 0:
        raise ValueError(f"ell={ell} divides Np={chi.N * chi.p}")


def restriction_is_cyclotomic(chi: CharacterData, i: int, ell: int) -> bool:
    """chi^i restricted to the decomposition group at ell equals omega_p there."""
    if i not in (1, -1):
        raise ValueError("i must be 1 or -1")
    _check_unramified(chi, ell)
    p = chi.p
    return pow(ell, (i * chi.a - 1) % (p - 1), p) == 1


@dataclass(frozen=True)
class CohomProfile:
    """(k, m, n) = dims of H^1(G, 1), H^1(G, chi), H^1(G, chi^-1) plus H^2 data."""

    k: int
    m: int
    n: int
    h2_chi: int | None = None
    h2_chi_inv: int | None = None
    h2_triv: int | None = None
    p_nmid_phi_N: bool = False
    chi_odd: bool = False
    unobstructed: bool = False
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for name in ("k", "m", "n"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.chi_odd:
            if self.h2_chi is None:
                object.__setattr__(self, "h2_chi", self.m - 1)
            if self.h2_chi_inv is None:
                object.__setattr__(self, "h2_chi_inv", self.n - 1)
            if self.h2_chi != self.m - 1 or self.h2_chi_inv != self.n - 1:
                raise InconsistentInput("odd chi forces dim H^2 = dim H^1 - 1")
        if self.p_nmid_phi_N and self.h2_triv is None:
            object.__setattr__(self, "h2_triv", 0)

    @classmethod
    def unobstructed_case(cls) -> CohomProfile:
        return cls(1, 1, 1, p_nmid_phi_N=True, chi_odd=True, unobstructed=True)

    @classmethod
    def from_bernoulli(cls, p: int, a: int) -> CohomProfile | Unestablished:
        """The (1, 1, 1) profile, populated only when the Bernoulli test passes."""
        evidence = check_unobstructed_bernoulli(p, a)
        if not evidence.unobstructed:
            return Unestablished("from_bernoulli", (f"unobstructed: {evidence.describe()}",))
        return replace(cls.unobstructed_case(), notes=(evidence.describe(),))

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "h2_chi": self.h2_chi,
            "h2_chi_inv": self.h2_chi_inv,
            "h2_triv": self.h2_triv,
            "p_nmid_phi_N": self.p_nmid_phi_N,
            "chi_odd": self.chi_odd,
            "unobstructed": self.unobstructed,
        }


def euler_h2(m: int, chi_odd: bool) -> int | Unestablished:
    """dim H^2(G, chi) = dim H^1(G, chi) - 1 for odd chi."""
    if not chi_odd:
        return Unestablished("euler_h2", ("chi odd",))
    if m <= 0:
        raise InconsistentInput("odd chi forces dim H^1(G, chi) > 0")
    return m - 1


def kummer_h1_omega(N: int, p: int) -> int:
    """dim H^1(G_{Q,Np}, omega_p) = 1 + number of distinct primes dividing N."""
    if N % p == 0:
        raise ValueError("p must not divide N")
    return 1 + len(prime_factors(N))


class Delta(NamedTuple):
    value: int
    exact: bool


def level_raising_delta(chi: CharacterData, ell: int, base_dim_is_one: bool) -> Delta:
    """Increase of dim H^1(chi) when ell is added to the ramification set.

    Exact (0 or 1) when the base dimension is 1; otherwise only the bound 1.
    """
    _check_unramified(chi, ell)
    if (ell - 1) % chi.p == 0:
        raise ValueError("p | ell - 1 is outside the supported hypotheses")
    if not base_dim_is_one:
        return Delta(1, False)
    return Delta(int(restriction_is_cyclotomic(chi, 1, ell)), True)


def pseudo_tangent_dim(profile: CohomProfile) -> int | Unestablished:
    """dim tan of the pseudo-deformation ring: 2k + mn, given H^2(G, 1) = 0."""
    if profile.h2_triv != 0:
        return Unestablished("pseudo_tangent_dim", ("H^2(G, 1) = 0",))
    return 2 * profile.k + profile.m * profile.n


def borel_tangent_bound(profile: CohomProfile) -> int:
    return profile.m + profile.n + 2 * profile.k - 1


def adjoint_h2(
    h1_ad: int, *, rho_odd: bool = False, end_is_scalar: bool = False, p_nmid_phi_N: bool = False
) -> int | Unestablished:
    """dim H^2(G, ad rho) = dim H^1(G, ad rho) - 3."""
    missing = tuple(
        name
        for name, flag in (
            ("rho odd", rho_odd),
            ("End(rho) = F", end_is_scalar),
            ("p does not divide phi(N)", p_nmid_phi_N),
        )
        if not flag
    )
    if missing:
        return Unestablished("adjoint_h2", missing)
    if h1_ad < 3:
        raise InconsistentInput("dim H^1(G, ad rho) must be at least 3")
    return h1_ad - 3


def representability_necessity(m: int, n: int, h2_triv_zero: bool = True) -> bool | Unestablished:
    """Necessary condition for the universal pseudo-character to be a trace: min(m, n) = 1."""
    if not h2_triv_zero:
        return Unestablished("representability_necessity", ("H^2(G, 1) = 0",))
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    return (m - 1) * (n - 1) == 0


def level_raised_profile(chi: CharacterData, ell: int, base: CohomProfile) -> CohomProfile:
    """Profile after adding ell, from an unobstructed base via the exact deltas."""
    if not base.unobstructed:
        raise ValueError("exact level raising needs an unobstructed base profile")
    dm = level_raising_delta(chi, ell, True).value
    dn = level_raising_delta(chi.inverse(), ell, True).value
    return CohomProfile(
        base.k,
        base.m + dm,
        base.n + dn,
        p_nmid_phi_N=(ell - 1) % chi.p != 0,
        chi_odd=base.chi_odd,
    )


repnprop_necessity = representability_necessity
