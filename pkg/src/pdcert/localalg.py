"""Structure of F[[x_1..x_n]]/I for monomial ideals I.

Minimal primes, Krull dimension, reducedness, tangent dimension, minimal
generator counts, intersections and complete-intersection certificates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

Monomial = tuple[int, ...]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(monomials) -> tuple[Monomial, ...]:
    uniq = sorted(set(monomials), key=lambda m: (sum(m), tuple(-k for k in m)))
    kept: list[Monomial] = []
    for m in uniq:
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal kept as its unique minimal generating set."""

    variables: tuple[str, ...]
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise ValueError(f"repeated variable names in {self.variables}")
        gens = [tuple(g) for g in self.generators]
        for g in gens:
            if len(g) != n or any(k < 0 for k in g):
                raise ValueError(f"bad exponent vector {g} for variables {self.variables}")
        object.__setattr__(self, "generators", _minimalize(gens))

    @classmethod
    def parse(cls, variables, text: str) -> MonomialIdeal:
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        variables = tuple(variables)
        gens = [parse_monomial(variables, chunk) for chunk in text.split(",") if chunk.strip()]
        return cls(variables, tuple(gens))

    @classmethod
    def generated_by_variables(cls, variables, subset) -> MonomialIdeal:
        variables = tuple(variables)
        gens = [tuple(int(v == w) for v in variables) for w in subset]
        return cls(variables, tuple(gens))

    @classmethod
    def unit(cls, variables) -> MonomialIdeal:
        return cls(tuple(variables), ((0,) * len(variables),))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, monomial: Monomial) -> bool:
        return any(_divides(g, monomial) for g in self.generators)

    def support(self, g: Monomial) -> frozenset[str]:
        return frozenset(v for v, k in zip(self.variables, g) if k)

    def render_monomial(self, g: Monomial) -> str:
        if sum(g) == 0:
            return "1"
        return "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, g) if k)

    def render(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(self.render_monomial(g) for g in self.generators) + ")"

    def __str__(self):
        return self.render()


_POWER = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:(?:\^|\*\*)\s*(\d+))?\s*$")


def parse_monomial(variables, text: str) -> Monomial:
    """Parse ``X1^2*Y`` (or ``X1**2*Y``) into an exponent vector."""
    variables = tuple(variables)
    exps = [0] * len(variables)
    text = text.strip()
    if text == "1":
        return tuple(exps)
    # protect ** before splitting on *
    for factor in text.replace("**", "^").split("*"):
        m = _POWER.match(factor)
        if not m:
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        name, power = m[1], int(m[2] or 1)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r} in {text!r}")
        exps[variables.index(name)] += power
    return tuple(exps)


def minimal_generators(variables, monomials) -> MonomialIdeal:
    return MonomialIdeal(tuple(variables), tuple(tuple(m) for m in monomials))


def mu(I: MonomialIdeal) -> int:
    """Minimal number of generators."""
    return len(I.generators)


def minimal_primes(I: MonomialIdeal) -> list[frozenset[str]]:
    """Minimal primes as variable subsets: the minimal hitting sets of the supports."""
    if I.is_unit:
        return []
    supports = [I.support(g) for g in I.generators]
    if not supports:
        return [frozenset()]
    candidates = sorted(set().union(*supports), key=I.variables.index)
    found: list[frozenset[str]] = []
    for size in range(1, len(candidates) + 1):
        for subset in combinations(candidates, size):
            s = frozenset(subset)
            if any(f <= s for f in found):
                continue
            if all(s & sup for sup in supports):
                found.append(s)
    return found


def krull_dimension(I: MonomialIdeal) -> int:
    primes = minimal_primes(I)
    if not primes:
        raise ValueError("the unit ideal has no Krull dimension")
    return I.n - min(len(P) for P in primes)


def height(I: MonomialIdeal) -> int:
    return I.n - krull_dimension(I)


def is_reduced(I: MonomialIdeal) -> bool:
    """A monomial ideal is radical iff all its minimal generators are squarefree."""
    return all(max(g, default=0) <= 1 for g in I.generators)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.variables != J.variables:
        raise ValueError("ideals live in different variable sets")
    lcms = [tuple(max(a, b) for a, b in zip(g, h)) for g in I.generators for h in J.generators]
    return MonomialIdeal(I.variables, tuple(lcms))


def intersect_all(ideals) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersect_all needs at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.variables, tuple(tuple(min(k, 1) for k in g) for g in I.generators))


def prime_ideal(I: MonomialIdeal, P: frozenset[str]) -> MonomialIdeal:
    return MonomialIdeal.generated_by_variables(I.variables, sorted(P, key=I.variables.index))


@dataclass(frozen=True)
class CICertificate:
    is_ci: bool
    mu: int
    height: int


def is_complete_intersection(I: MonomialIdeal) -> CICertificate:
    """CI test mu(I) == height(I), valid once I lies in m^2."""
    if I.is_unit:
        raise ValueError("the unit ideal presents the zero ring")
    linear = [g for g in I.generators if sum(g) == 1]
    if linear:
        names = ", ".join(I.render_monomial(g) for g in linear)
        raise ValueError(
            f"degree-1 generators ({names}) present; eliminate those variables first"
        )
    m, h = mu(I), height(I)
    return CICertificate(m == h, m, h)


def tangent_dimension(n: int, I: MonomialIdeal) -> int:
    """dim m/m^2 of the quotient: n minus the number of linear generators."""
    if n != I.n:
        raise ValueError(f"ideal has {I.n} variables, not {n}")
    if I.is_unit:
        raise ValueError("the unit ideal presents the zero ring")
    return n - sum(1 for g in I.generators if sum(g) == 1)


@dataclass(frozen=True)
class RingPresentation:
    name: str
    ideal: MonomialIdeal
    line: int = 0


def parse_presentations(text: str) -> list[RingPresentation]:
    """Parse a presentation file.

    Blocks look like::

        ring reduced_fiber
        variables: X, Y, Z, T1, T2
        ideal: T1*T2, T1*Z, T2*Z

    ``#`` starts a comment; an empty or missing ``ideal`` line is the zero ideal.
    Errors are ValueError messages prefixed with the offending line number.
    """
    out = []
    current = None

    def finish():
        if current is None:
            return
        if current["variables"] is None:
            raise ValueError(f"line {current['line']}: ring {current['name']!r} has no variables line")
        try:
            ideal = MonomialIdeal.parse(current["variables"], current["ideal"] or "")
        except ValueError as exc:
            raise ValueError(f"line {current['ideal_line'] or current['line']}: {exc}") from None
        out.append(RingPresentation(current["name"], ideal, current["line"]))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring"):
            finish()
            name = line[4:].strip() or f"ring{len(out) + 1}"
            current = {"name": name, "variables": None, "ideal": None, "line": lineno, "ideal_line": None}
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("variables", "ideal"):
            raise ValueError(f"line {lineno}: expected 'ring NAME', 'variables: ...' or 'ideal: ...'")
        if current is None:
            current = {"name": f"ring{len(out) + 1}", "variables": None, "ideal": None, "line": lineno, "ideal_line": None}
        if key == "variables":
            names = [v.strip() for v in value.split(",") if v.strip()]
            bad = [v for v in names if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v)]
            if bad or not names:
                raise ValueError(f"line {lineno}: bad variable list {value.strip()!r}")
            current["variables"] = names
        else:
            current["ideal"] = value
            current["ideal_line"] = lineno
    finish()
    if not out:
        raise ValueError("line 1: no ring presentations found")
    return out


@dataclass(frozen=True)
class RingAnalysis:
    name: str
    ideal: MonomialIdeal
    mu: int
    minimal_primes: tuple[tuple[str, ...], ...]
    krull_dimension: int
    reduced: bool
    ci: CICertificate | None
    ci_note: str
    tangent_dimension: int

    @property
    def is_domain(self) -> bool:
        return len(self.minimal_primes) == 1 and self.reduced


def analyze(name: str, I: MonomialIdeal) -> RingAnalysis:
    primes = minimal_primes(I)
    ordered = tuple(
        sorted(
            (tuple(sorted(P, key=I.variables.index)) for P in primes),
            key=lambda t: (len(t), [I.variables.index(v) for v in t]),
        )
    )
    try:
        ci, note = is_complete_intersection(I), ""
    except ValueError as exc:
        ci, note = None, str(exc)
    return RingAnalysis(
        name,
        I,
        mu(I),
        ordered,
        krull_dimension(I),
        is_reduced(I),
        ci,
        note,
        tangent_dimension(I.n, I),
    )
