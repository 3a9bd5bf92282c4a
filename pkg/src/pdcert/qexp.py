"""Truncated q-expansions over Q and F_p with Hecke, V and theta operators."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping

from .arith import bernoulli_recursive, is_prime, prime_factors


class PrecisionError(ValueError):
    """Raised when an operation would need coefficients beyond the reliable range."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


def _reduce(c, p: int) -> int:
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise ValueError(f"coefficient {c} is not {p}-integral")
        return c.numerator * pow(c.denominator, -1, p) % p
    return c % p


@dataclass(frozen=True)
class QExpansion:
    """a_0 + a_1 q + ... + a_P q^P with every listed coefficient trusted.

    ``modulus`` is None for exact (integer or rational) coefficients and
    a prime p for coefficients stored as residues in [0, p).
    """

    coeffs: tuple
    weight: int
    level: int = 1
    modulus: int | None = None

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a q-expansion needs at least the constant term")
        if self.modulus is not None:
            object.__setattr__(self, "coeffs", tuple(_reduce(c, self.modulus) for c in self.coeffs))
        else:
            object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n < 0 or n > self.precision:
            raise IndexError(f"a_{n} is beyond reliable precision {self.precision}")
        return self.coeffs[n]

    def _like(self, coeffs, **changes) -> QExpansion:
        kw = dict(weight=self.weight, level=self.level, modulus=self.modulus)
        kw.update(changes)
        return QExpansion(tuple(coeffs), **kw)

    def _check_compatible(self, other: QExpansion) -> None:
        if self.modulus != other.modulus:
            raise ValueError("cannot combine expansions with different coefficient rings")

    def truncate(self, precision: int) -> QExpansion:
        if precision > self.precision:
            raise PrecisionError(
                f"requested precision {precision} exceeds reliable precision {self.precision}",
                precision,
            )
        return self._like(self.coeffs[: precision + 1])

    def __add__(self, other: QExpansion) -> QExpansion:
        self._check_compatible(other)
        P = min(self.precision, other.precision)
        level = lcm(self.level, other.level)
        return self._like((self.coeffs[n] + other.coeffs[n] for n in range(P + 1)), level=level)

    def __neg__(self) -> QExpansion:
        return self._like(-c for c in self.coeffs)

    def __sub__(self, other: QExpansion) -> QExpansion:
        return self + (-other)

    def scale(self, c) -> QExpansion:
        return self._like(c * a for a in self.coeffs)

    def __mul__(self, other: QExpansion) -> QExpansion:
        self._check_compatible(other)
        P = min(self.precision, other.precision)
        out = _mul_trunc(self.coeffs, other.coeffs, P)
        return self._like(
            out, weight=self.weight + other.weight, level=lcm(self.level, other.level)
        )

    def reduce_mod(self, p: int) -> QExpansion:
        if self.modulus is not None and self.modulus != p:
            raise ValueError(f"already reduced mod {self.modulus}")
        return self._like(self.coeffs, modulus=p)

    def is_zero(self, up_to: int | None = None) -> bool:
        up_to = self.precision if up_to is None else up_to
        return all(c == 0 for c in self.coeffs[: up_to + 1])

    def to_text(self) -> str:
        mod = "none" if self.modulus is None else str(self.modulus)
        lines = [f"weight {self.weight} level {self.level} modulus {mod} precision {self.precision}"]
        lines.extend(f"{n} {c}" for n, c in enumerate(self.coeffs))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> QExpansion:
        rows = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        m = re.fullmatch(
            r"weight (-?\d+) level (\d+) modulus (none|\d+) precision (\d+)", rows[0]
        )
        if not m:
            raise ValueError(f"malformed header: {rows[0]!r}")
        weight, level, P = int(m[1]), int(m[2]), int(m[4])
        modulus = None if m[3] == "none" else int(m[3])
        coeffs = [None] * (P + 1)
        for row in rows[1:]:
            n_str, c_str = row.split()
            n = int(n_str)
            coeffs[n] = Fraction(c_str) if "/" in c_str else int(c_str)
        if any(c is None for c in coeffs):
            raise ValueError("missing coefficient lines")
        return cls(tuple(coeffs), weight, level, modulus)


def _mul_trunc(a, b, P: int) -> list:
    out = [0] * (P + 1)
    for i, ai in enumerate(a[: P + 1]):
        if ai == 0:
            continue
        for j in range(P + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def sigma(k: int, n: int) -> int:
    """Sum of d^k over the positive divisors d of n."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def eisenstein(k: int, precision: int) -> QExpansion:
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n over Q, level 1."""
    if k < 4 or k % 2:
        raise ValueError("Eisenstein series needs even weight k >= 4")
    c = Fraction(-2 * k) / bernoulli_recursive(k)
    coeffs = [Fraction(1)] + [c * sigma(k - 1, n) for n in range(1, precision + 1)]
    return QExpansion(tuple(coeffs), k, 1)


def euler_product(precision: int) -> list[int]:
    """prod (1 - q^n) via the pentagonal number theorem."""
    out = [0] * (precision + 1)
    out[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > precision:
            break
        sign = -1 if k % 2 else 1
        out[g1] += sign
        g2 = k * (3 * k + 1) // 2
        if g2 <= precision:
            out[g2] += sign
        k += 1
    return out


def delta(precision: int) -> QExpansion:
    """q prod (1 - q^n)^24 with integer coefficients."""
    if precision < 2:
        raise ValueError("delta needs precision >= 2")
    base = euler_product(precision - 1)
    result = [1] + [0] * (precision - 1)
    e = 24
    while e:
        if e & 1:
            result = _mul_trunc(result, base, precision - 1)
        e >>= 1
        if e:
            base = _mul_trunc(base, base, precision - 1)
    return QExpansion(tuple([0] + result), 12, 1)


def v_map(ell: int, f: QExpansion, precision: int | None = None) -> QExpansion:
    """f(q^ell), at level ell * level(f).

    The substituted series is known up to ell * (P + 1) - 1; ``precision``
    defaults to the input precision.
    """
    available = ell * (f.precision + 1) - 1
    precision = f.precision if precision is None else precision
    if precision > available:
        raise PrecisionError(
            f"V_{ell} of a series known to q^{f.precision} is reliable only to q^{available}",
            -(-(precision + 1) // ell) - 1,
        )
    zero = 0
    coeffs = [f.coeffs[n // ell] if n % ell == 0 else zero for n in range(precision + 1)]
    return f._like(coeffs, level=f.level * ell)


def theta(f: QExpansion) -> QExpansion:
    """q d/dq on a mod-p expansion; weight goes up by p + 1."""
    if f.modulus is None:
        raise ValueError("theta is defined here only for mod-p expansions")
    return f._like((n * c for n, c in enumerate(f.coeffs)), weight=f.weight + f.modulus + 1)


def _power_coeff(q: int, e: int, f: QExpansion):
    if f.modulus is not None:
        return pow(q, e, f.modulus)
    return Fraction(q) ** e


def hecke_T(q: int, f: QExpansion) -> QExpansion:
    """T_q for q prime to the level: a_n -> a_{nq} + q^(k-1) a_{n/q}."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if f.level % q == 0:
        raise ValueError(f"{q} divides the level {f.level}; use hecke_U instead")
    P = f.precision // q
    w = _power_coeff(q, f.weight - 1, f)
    out = []
    for n in range(P + 1):
        c = f.coeffs[n * q]
        if n % q == 0:
            c = c + w * f.coeffs[n // q]
        out.append(c)
    return f._like(out)


def hecke_U(ell: int, f: QExpansion) -> QExpansion:
    """U_ell for ell dividing the level: a_n -> a_{n ell}."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if f.level % ell:
        raise ValueError(f"{ell} is prime to the level {f.level}; use hecke_T instead")
    P = f.precision // ell
    return f._like(f.coeffs[n * ell] for n in range(P + 1))


def diamond_S(q: int, f: QExpansion) -> QExpansion:
    """S_q with trivial character: multiplication by q^(k-2)."""
    if f.level % q == 0:
        raise ValueError(f"S_{q} needs q prime to the level")
    return f.scale(_power_coeff(q, f.weight - 2, f))


def sturm_bound(k: int, M: int) -> int:
    """floor(k * [SL_2(Z) : Gamma_0(M)] / 12)."""
    index = M
    for q in prime_factors(M):
        index = index // q * (q + 1)
    return k * index // 12


def f_ell(p: int, ell: int, precision: int) -> QExpansion:
    """Mod-p reduction of the weight p-1, level ell form built from E_{p-1}.

    The rational scalar cancels against the Eisenstein normalisation,
    leaving (1/2) sum sigma_{p-2}(n) (q^n - q^{ell n}).
    """
    if ell == p:
        raise ValueError("ell must differ from p")
    half = pow(2, -1, p)
    coeffs = [0]
    for n in range(1, precision + 1):
        c = sigma(p - 2, n)
        if n % ell == 0:
            c -= sigma(p - 2, n // ell)
        coeffs.append(c * half % p)
    return QExpansion(tuple(coeffs), p - 1, ell, p)


def f_ell_rational(p: int, ell: int, precision: int) -> QExpansion:
    """The same form over Q, straight from -B_{p-1}/(4(p-1)) (E(q) - E(q^ell))."""
    E = eisenstein(p - 1, precision)
    scalar = -bernoulli_recursive(p - 1) / (4 * (p - 1))
    return (E - v_map(ell, E)).scale(scalar)


def level_raised_eisenstein(k: int, ell: int, precision: int) -> QExpansion:
    """E_k(q) - ell^(k-1) E_k(q^ell), the U_ell-eigenvalue-1 stabilisation."""
    E = eisenstein(k, precision)
    return E - v_map(ell, E).scale(Fraction(ell) ** (k - 1))


_TAG = re.compile(r"([TUS])_?(\d+)")


def apply_operator(tag: str, f: QExpansion) -> QExpansion:
    m = _TAG.fullmatch(tag)
    if not m:
        raise ValueError(f"unknown operator tag {tag!r}")
    kind, q = m[1], int(m[2])
    if kind == "T":
        return hecke_T(q, f)
    if kind == "U":
        return hecke_U(q, f)
    return diamond_S(q, f)


def image_precision(tag: str, P: int) -> int:
    kind, q = _TAG.fullmatch(tag)[1], int(_TAG.fullmatch(tag)[2])
    return P if kind == "S" else P // q


@dataclass(frozen=True)
class OperatorCheck:
    tag: str
    eigenvalue: object
    passed: bool
    first_discrepancy: int | None
    checked_up_to: int


@dataclass(frozen=True)
class EigenReport:
    checks: tuple[OperatorCheck, ...]
    up_to: int
    sturm: int
    weight: int
    level: int

    @property
    def covers_sturm(self) -> bool:
        return self.up_to >= self.sturm

    @property
    def passed(self) -> bool:
        return self.covers_sturm and all(c.passed for c in self.checks)


def _same(a, b, modulus) -> bool:
    if modulus is None:
        return a == b
    return (a - b) % modulus == 0


def verify_eigensystem(f: QExpansion, expected: Mapping[str, object], up_to: int) -> EigenReport:
    if f.is_zero(min(up_to, f.precision)):
        raise ValueError("an eigenvector must be nonzero")
    checks = []
    for tag, lam in expected.items():
        avail = image_precision(tag, f.precision)
        if avail < up_to:
            kind, q = _TAG.fullmatch(tag)[1], int(_TAG.fullmatch(tag)[2])
            need = up_to if kind == "S" else up_to * q + q - 1
            raise PrecisionError(
                f"{tag} image is reliable only to q^{avail}; need input precision {need}", need
            )
        image = apply_operator(tag, f)
        bad = None
        for n in range(up_to + 1):
            if not _same(image.coeffs[n], lam * f.coeffs[n], f.modulus):
                bad = n
                break
        checks.append(OperatorCheck(tag, lam, bad is None, bad, up_to))
    return EigenReport(tuple(checks), up_to, sturm_bound(f.weight, f.level), f.weight, f.level)


def eigenvalue(tag: str, f: QExpansion):
    """Eigenvalue of an operator on f read off and confirmed on all reliable terms.

    Returns None when f is not an eigenvector to the available precision.
    """
    image = apply_operator(tag, f)
    P = image.precision
    lead = next((n for n in range(P + 1) if f.coeffs[n] != 0), None)
    if lead is None:
        raise ValueError("an eigenvector must be nonzero")
    if f.modulus is None:
        lam = Fraction(image.coeffs[lead]) / f.coeffs[lead]
    else:
        lam = image.coeffs[lead] * pow(f.coeffs[lead], -1, f.modulus) % f.modulus
    ok = all(_same(image.coeffs[n], lam * f.coeffs[n], f.modulus) for n in range(P + 1))
    return lam if ok else None
