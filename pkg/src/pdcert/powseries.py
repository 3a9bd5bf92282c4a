"""Truncated multivariate power series, the extension by s = sqrt(1 + UV),
and the h-polynomial family governing powers of the tame inertia matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

Exponent = tuple[int, ...]


def _normalize(c, modulus):
    if modulus is None:
        return c
    if isinstance(c, Fraction):
        if c.denominator % modulus == 0:
            raise ValueError(f"{c} is not {modulus}-integral")
        return c.numerator * pow(c.denominator, -1, modulus) % modulus
    return c % modulus


class TruncatedSeries:
    """Power series in named variables, all terms of total degree > D dropped.

    Coefficients are exact integers/rationals, or residues when ``modulus``
    is a prime. Zero coefficients are never stored.
    """

    __slots__ = ("variables", "degree", "modulus", "coeffs")

    def __init__(self, variables, coeffs=None, degree: int = 8, modulus: int | None = None):
        self.variables = tuple(variables)
        self.degree = degree
        self.modulus = modulus
        n = len(self.variables)
        clean = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match variables {self.variables}")
            if sum(e) > degree:
                continue
            c = _normalize(c, modulus)
            if c != 0:
                clean[e] = c
        self.coeffs = clean

    # constructors

    @classmethod
    def constant(cls, c, variables, degree=8, modulus=None):
        return cls(variables, {(0,) * len(variables): c}, degree, modulus)

    @classmethod
    def var(cls, name, variables, degree=8, modulus=None):
        variables = tuple(variables)
        e = tuple(int(v == name) for v in variables)
        if sum(e) != 1:
            raise ValueError(f"{name} is not one of {variables}")
        return cls(variables, {e: 1}, degree, modulus)

    def _new(self, coeffs) -> TruncatedSeries:
        return TruncatedSeries(self.variables, coeffs, self.degree, self.modulus)

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if (other.variables, other.degree, other.modulus) != (
                self.variables,
                self.degree,
                self.modulus,
            ):
                raise ValueError("series must share variables, truncation degree and modulus")
            return other
        return TruncatedSeries.constant(other, self.variables, self.degree, self.modulus)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        D = self.degree
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > D:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedSeries.constant(1, self.variables, self.degree, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self.variables, self.degree, self.modulus, self.coeffs) == (
            other.variables,
            other.degree,
            other.modulus,
            other.coeffs,
        )

    def __hash__(self):
        return hash((self.variables, self.degree, self.modulus, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"TruncatedSeries({self.render()!r}, D={self.degree}, mod={self.modulus})"

    # structure

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.variables), 0)

    def homogeneous_part(self, d: int) -> TruncatedSeries:
        return self._new({e: c for e, c in self.coeffs.items() if sum(e) == d})

    def min_degree(self) -> int | None:
        return min((sum(e) for e in self.coeffs), default=None)

    def drop_multiples_of(self, monomial: dict[str, int]) -> TruncatedSeries:
        """Image modulo the monomial ideal generated by ``monomial``."""
        idx = [(self.variables.index(v), k) for v, k in monomial.items()]
        return self._new(
            {e: c for e, c in self.coeffs.items() if not all(e[i] >= k for i, k in idx)}
        )

    def divide_by_monomial(self, monomial: dict[str, int]) -> TruncatedSeries | None:
        """Exact quotient by a monomial, or None if some term is not divisible."""
        idx = [(self.variables.index(v), k) for v, k in monomial.items()]
        out = {}
        for e, c in self.coeffs.items():
            if not all(e[i] >= k for i, k in idx):
                return None
            e2 = list(e)
            for i, k in idx:
                e2[i] -= k
            out[tuple(e2)] = c
        return self._new(out)

    def embed(self, variables) -> TruncatedSeries:
        """Same series viewed in a larger variable list."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.coeffs.items():
            e2 = [0] * len(variables)
            for i, k in zip(pos, e):
                e2[i] = k
            out[tuple(e2)] = c
        return TruncatedSeries(variables, out, self.degree, self.modulus)

    def reduce_mod(self, p: int) -> TruncatedSeries:
        return TruncatedSeries(self.variables, self.coeffs, self.degree, p)

    def with_degree(self, D: int) -> TruncatedSeries:
        return TruncatedSeries(self.variables, self.coeffs, D, self.modulus)

    def terms(self):
        """Terms in graded lexicographic order (higher degree last)."""

        def key(item):
            e = item[0]
            return (sum(e), tuple(-k for k in e))

        return sorted(self.coeffs.items(), key=key)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f + g


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


UV = ("U", "V")


class SqrtExtSeries:
    """a + b*s with a, b series in U, V and s^2 = 1 + UV."""

    __slots__ = ("a_part", "s_part")

    def __init__(self, a_part: TruncatedSeries, s_part: TruncatedSeries):
        if a_part.variables != UV or s_part.variables != UV:
            raise ValueError("the s-extension lives over the variables (U, V)")
        self.a_part = a_part
        self.s_part = s_part

    @classmethod
    def constant(cls, c, degree=8, modulus=None):
        return cls(
            TruncatedSeries.constant(c, UV, degree, modulus),
            TruncatedSeries(UV, {}, degree, modulus),
        )

    @classmethod
    def s(cls, degree=8, modulus=None):
        return cls(
            TruncatedSeries(UV, {}, degree, modulus),
            TruncatedSeries.constant(1, UV, degree, modulus),
        )

    @property
    def degree(self):
        return self.a_part.degree

    @property
    def modulus(self):
        return self.a_part.modulus

    def _one_plus_uv(self):
        return TruncatedSeries(UV, {(0, 0): 1, (1, 1): 1}, self.degree, self.modulus)

    def _coerce(self, other):
        if isinstance(other, SqrtExtSeries):
            return other
        if isinstance(other, TruncatedSeries):
            return SqrtExtSeries(other, TruncatedSeries(UV, {}, self.degree, self.modulus))
        return SqrtExtSeries.constant(other, self.degree, self.modulus)

    def __add__(self, other):
        other = self._coerce(other)
        return SqrtExtSeries(self.a_part + other.a_part, self.s_part + other.s_part)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExtSeries(-self.a_part, -self.s_part)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b, c, d = self.a_part, self.s_part, other.a_part, other.s_part
        return SqrtExtSeries(a * c + b * d * self._one_plus_uv(), a * d + b * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a_part == other.a_part and self.s_part == other.s_part

    def __hash__(self):
        return hash((self.a_part, self.s_part))

    def __repr__(self):
        return f"SqrtExtSeries(a={self.a_part.render()!r}, s={self.s_part.render()!r})"

    def is_zero(self):
        return self.a_part.is_zero() and self.s_part.is_zero()

    def at_s_equal_one(self) -> TruncatedSeries:
        """Specialisation UV -> 0 (which forces s -> 1)."""
        return (self.a_part + self.s_part).drop_multiples_of({"U": 1, "V": 1})

    def expand(self) -> TruncatedSeries:
        """Replace s by its binomial series sum binom(1/2, k) (UV)^k."""
        return self.a_part + self.s_part * sqrt_one_plus_uv(self.degree, self.modulus)


def sqrt_one_plus_uv(degree=8, modulus=None) -> TruncatedSeries:
    coeffs = {}
    half = Fraction(1, 2)
    for k in range(degree // 2 + 1):
        binom = Fraction(1)
        for j in range(k):
            binom *= (half - j) / (j + 1)
        coeffs[(k, k)] = binom
    return TruncatedSeries(UV, coeffs, degree, modulus)


def h_sequence(n: int, degree: int = 8, modulus: int | None = None) -> list[SqrtExtSeries]:
    """[h_0, ..., h_n] from h_{i+1} = 2 s h_i - h_{i-1}, h_0 = 0, h_1 = 1."""
    if n < 0 or n > 10000:
        raise ValueError("h index must lie in [0, 10000]")
    two_s = SqrtExtSeries.s(degree, modulus) * 2
    seq = [SqrtExtSeries.constant(0, degree, modulus), SqrtExtSeries.constant(1, degree, modulus)]
    while len(seq) <= n:
        seq.append(two_s * seq[-1] - seq[-2])
    return seq[: n + 1]


def h_polynomial(i: int, degree: int = 8, modulus: int | None = None) -> SqrtExtSeries:
    return h_sequence(i, degree, modulus)[i]


@dataclass(frozen=True)
class CongruenceWitness:
    """Evidence for h_ell = ell mod (UV)."""

    ell: int
    holds: bool
    s_part: TruncatedSeries
    difference: TruncatedSeries
    quotient: TruncatedSeries | None  # (a_part - ell) / (UV) when it exists


def h_congruence_check(ell: int, degree: int = 8, modulus: int | None = None) -> CongruenceWitness:
    h = h_polynomial(ell, degree, modulus)
    diff = h.a_part - ell
    quotient = diff.divide_by_monomial({"U": 1, "V": 1})
    holds = h.s_part.is_zero() and quotient is not None
    return CongruenceWitness(ell, holds, h.s_part, diff, quotient)


XYUV = ("X", "Y", "U", "V")


def relation_factors(p: int, ell: int, degree: int = 8) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(1+X) + h_ell (1+Y) and (1+Y) + h_ell (1+X) over F_p in X, Y, U, V."""
    if (ell + 1) % p:
        raise ValueError(f"need p | ell + 1, got p={p}, ell={ell}")
    h = h_polynomial(ell, degree, p).expand().embed(XYUV)
    one_x = 1 + TruncatedSeries.var("X", XYUV, degree, p)
    one_y = 1 + TruncatedSeries.var("Y", XYUV, degree, p)
    return one_x + h * one_y, one_y + h * one_x


def relation_elements(p: int, ell: int, degree: int = 8) -> tuple[TruncatedSeries, TruncatedSeries]:
    """U((1+X) + h_ell(1+Y)) and V((1+Y) + h_ell(1+X)) over F_p."""
    first, second = relation_factors(p, ell, degree)
    U = TruncatedSeries.var("U", XYUV, degree, p)
    V = TruncatedSeries.var("V", XYUV, degree, p)
    return U * first, V * second


Matrix2 = tuple[SqrtExtSeries, SqrtExtSeries, SqrtExtSeries, SqrtExtSeries]


def _mat_mul(A: Matrix2, B: Matrix2) -> Matrix2:
    a, b, c, d = A
    e, f, g, h = B
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def inertia_matrix(degree: int = 8, modulus: int | None = None) -> Matrix2:
    s = SqrtExtSeries.s(degree, modulus)
    zero = TruncatedSeries(UV, {}, degree, modulus)
    U = SqrtExtSeries(TruncatedSeries.var("U", UV, degree, modulus), zero)
    V = SqrtExtSeries(TruncatedSeries.var("V", UV, degree, modulus), zero)
    return (s, U, V, s)


def matrix_power_check(n: int, degree: int = 8, modulus: int | None = None) -> bool:
    """M^n == h_n M - h_{n-1} I for M = [[s, U], [V, s]], by repeated multiplication."""
    if n < 1 or n > 10000:
        raise ValueError("n must lie in [1, 10000]")
    M = inertia_matrix(degree, modulus)
    power = M
    for _ in range(n - 1):
        power = _mat_mul(power, M)
    hs = h_sequence(n, degree, modulus)
    hn, hm = hs[n], hs[n - 1]
    target = (hn * M[0] - hm, hn * M[1], hn * M[2], hn * M[3] - hm)
    return all(x == y for x, y in zip(power, target))


def all_exponents(nvars: int, degree: int):
    """Every exponent vector of total degree <= degree."""
    for e in product(range(degree + 1), repeat=nvars):
        if sum(e) <= degree:
            yield e


defstr_factors = relation_factors
defstr_relation_elements = relation_elements
