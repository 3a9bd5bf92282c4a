from itertools import chain, combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdcert.localalg import (
    MonomialIdeal,
    analyze,
    intersect,
    intersect_all,
    is_complete_intersection,
    is_reduced,
    krull_dimension,
    height,
    minimal_generators,
    minimal_primes,
    mu,
    parse_monomial,
    parse_presentations,
    prime_ideal,
    radical,
    tangent_dimension,
)

VARS4 = ("A", "B", "C", "D")


def monomials_up_to(n, degree):
    return [e for e in product(range(degree + 1), repeat=n) if sum(e) <= degree]


def brute_member(gens, m):
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def brute_minimal_primes(I):
    """Every variable subset containing I, keeping the inclusion-minimal ones."""
    subsets = chain.from_iterable(combinations(I.variables, k) for k in range(I.n + 1))
    containing = [frozenset(s) for s in subsets if all(I.support(g) & frozenset(s) for g in I.generators)]
    return {P for P in containing if not any(Q < P for Q in containing)}


gens4 = st.lists(st.tuples(*[st.integers(0, 2)] * 4), min_size=1, max_size=5).filter(
    lambda gs: all(sum(g) > 0 for g in gs)
)
ideals4 = gens4.map(lambda gs: MonomialIdeal(VARS4, tuple(gs)))


def test_minimal_generators_drop_multiples():
    I = minimal_generators(("X", "Y"), [(1, 0), (2, 1), (0, 2), (1, 2)])
    assert I.generators == ((1, 0), (0, 2))
    assert mu(I) == 2


def test_parse_monomial():
    v = ("X1", "X2", "Y")
    assert parse_monomial(v, "X1^2*Y") == (2, 0, 1)
    assert parse_monomial(v, "X1**3 * X1") == (4, 0, 0)
    assert parse_monomial(v, "1") == (0, 0, 0)
    with pytest.raises(ValueError):
        parse_monomial(v, "Z")
    with pytest.raises(ValueError):
        parse_monomial(v, "X1^")


def test_render():
    I = MonomialIdeal.parse("X, Y", "X^2*Y, Y^3")
    assert I.render() == "(X^2*Y, Y^3)"
    assert MonomialIdeal(("X",), ()).render() == "(0)"
    assert str(MonomialIdeal.unit(("X",))) == "(1)"


def test_bad_ideals_refused():
    with pytest.raises(ValueError):
        MonomialIdeal(("X", "X"), ())
    with pytest.raises(ValueError):
        MonomialIdeal(("X", "Y"), ((1,),))
    with pytest.raises(ValueError):
        MonomialIdeal(("X",), ((-1,),))


def test_three_lines_in_five_variables():
    I = MonomialIdeal.parse("X, Y, Z, T1, T2", "T1*T2, T1*Z, T2*Z")
    assert krull_dimension(I) == 3
    assert set(minimal_primes(I)) == {frozenset(p) for p in [("Z", "T1"), ("Z", "T2"), ("T1", "T2")]}
    assert is_reduced(I)
    cert = is_complete_intersection(I)
    assert (cert.mu, cert.height, cert.is_ci) == (3, 2, False)


def test_hypersurface_in_four_variables():
    I = MonomialIdeal.parse("X1, X2, X3, X4", "X2*X4")
    assert krull_dimension(I) == 3
    assert is_complete_intersection(I).is_ci


def test_intersection_identity_against_membership():
    v = ("Y", "X1", "X2")
    parts = [MonomialIdeal.generated_by_variables(v, s) for s in (("Y", "X1"), ("Y", "X2"), ("X1", "X2"))]
    J = intersect_all(parts)
    assert J == MonomialIdeal.parse(v, "Y*X1, Y*X2, X1*X2")
    for m in monomials_up_to(3, 4):
        assert J.contains(m) == all(brute_member(P.generators, m) for P in parts)


@settings(max_examples=60)
@given(ideals4, ideals4)
def test_intersect_matches_membership_oracle(I, J):
    K = intersect(I, J)
    for m in monomials_up_to(4, 4):
        assert K.contains(m) == (brute_member(I.generators, m) and brute_member(J.generators, m))


@settings(max_examples=80)
@given(ideals4)
def test_minimal_primes_match_brute_force(I):
    assert set(minimal_primes(I)) == brute_minimal_primes(I)
    assert krull_dimension(I) + height(I) == 4


@settings(max_examples=80)
@given(ideals4)
def test_radical_is_intersection_of_minimal_primes(I):
    R = intersect_all(prime_ideal(I, P) for P in minimal_primes(I))
    assert R == radical(I)
    assert is_reduced(I) == (radical(I) == I)


@settings(max_examples=80)
@given(ideals4)
def test_ci_iff_pairwise_coprime_generators(I):
    if any(sum(g) == 1 for g in I.generators):
        return
    coprime = all(not (I.support(g) & I.support(h)) for g, h in combinations(I.generators, 2))
    assert is_complete_intersection(I).is_ci == coprime


def test_ci_refuses_linear_generators_and_unit():
    with pytest.raises(ValueError, match="degree-1"):
        is_complete_intersection(MonomialIdeal.parse("X, Y", "X, Y^2"))
    with pytest.raises(ValueError):
        is_complete_intersection(MonomialIdeal.unit(("X",)))


def test_tangent_dimension():
    assert tangent_dimension(3, MonomialIdeal.parse("X, Y, Z", "X, Y*Z")) == 2
    assert tangent_dimension(3, MonomialIdeal.parse("X, Y, Z", "Y*Z")) == 3
    with pytest.raises(ValueError):
        tangent_dimension(2, MonomialIdeal.parse("X, Y, Z", "Y*Z"))


def test_zero_and_unit_ideals():
    Z = MonomialIdeal(("X", "Y"), ())
    assert minimal_primes(Z) == [frozenset()]
    assert krull_dimension(Z) == 2 and Z.is_zero
    U = MonomialIdeal.unit(("X", "Y"))
    assert minimal_primes(U) == []
    with pytest.raises(ValueError):
        krull_dimension(U)


def test_intersect_errors():
    with pytest.raises(ValueError):
        intersect(MonomialIdeal(("X",), ()), MonomialIdeal(("Y",), ()))
    with pytest.raises(ValueError):
        intersect_all([])


def test_analyze_domain():
    a = analyze("line", MonomialIdeal.parse("X, Y", "X^2"))
    assert not a.reduced and not a.is_domain
    b = analyze("plane", MonomialIdeal(("X", "Y"), ()))
    assert b.is_domain and b.ci.is_ci and b.krull_dimension == 2
    c = analyze("lin", MonomialIdeal.parse("X, Y", "X"))
    assert c.ci is None and "degree-1" in c.ci_note


def test_parse_presentations():
    text = """
    # two rings
    ring first
    variables: X, Y
    ideal: X*Y

    ring second
    variables: A
    """
    pres = parse_presentations(text)
    assert [p.name for p in pres] == ["first", "second"]
    assert pres[1].ideal.is_zero


@pytest.mark.parametrize(
    "text, line",
    [
        ("ring a\nideal: X\n", 1),
        ("ring a\nvariables: X\nideal: W\n", 3),
        ("ring a\nvariables: 1X\n", 2),
        ("ring a\nvariables: X\nbogus line\n", 3),
        ("# only a comment\n", 1),
    ],
)
def test_parse_presentation_errors(text, line):
    with pytest.raises(ValueError, match=f"^line {line}:"):
        parse_presentations(text)
