from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdcert.arith import (
    BERNOULLI_MAX_INDEX,
    HypothesisContext,
    Residue,
    bernoulli,
    bernoulli_akiyama_tanigawa,
    bernoulli_mod_p,
    bernoulli_recursive,
    check_unobstructed_bernoulli,
    is_one_plus_p_generator,
    is_prime,
    powmod,
    prime_factors,
    primes_up_to,
    von_staudt_clausen_denominator,
)

# frozen from an independent computer algebra system
KNOWN_BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    20: Fraction(-174611, 330),
    24: Fraction(-236364091, 2730),
    30: Fraction(8615841276005, 14322),
    40: Fraction(-261082718496449122051, 13530),
}


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.mark.parametrize("k, value", sorted(KNOWN_BERNOULLI.items()))
def test_bernoulli_known_values(k, value):
    assert bernoulli(k).fraction == value
    assert bernoulli_akiyama_tanigawa(k) == value


def test_odd_bernoulli_vanish():
    assert all(bernoulli(k).numerator == 0 for k in range(3, 40, 2))


def test_bernoulli_two_routes_agree_everywhere():
    for k in range(BERNOULLI_MAX_INDEX + 1):
        assert bernoulli_recursive(k) == bernoulli_akiyama_tanigawa(k), k


def test_bernoulli_index_bounds():
    with pytest.raises(ValueError):
        bernoulli(-1)
    with pytest.raises(ValueError):
        bernoulli(BERNOULLI_MAX_INDEX + 1)


@given(st.integers(1, BERNOULLI_MAX_INDEX // 2))
def test_von_staudt_clausen(half):
    k = 2 * half
    b = bernoulli(k)
    assert b.denominator == von_staudt_clausen_denominator(k)
    frac = b.fraction + sum(Fraction(1, q) for q in primes_up_to(k + 1) if k % (q - 1) == 0)
    assert frac.denominator == 1


def test_bernoulli_mod_p():
    assert bernoulli_mod_p(4, 13) == (-pow(30, -1, 13)) % 13
    assert bernoulli_mod_p(10, 13) == 5 * pow(66, -1, 13) % 13
    assert bernoulli_mod_p(4, 5) is Residue.P_IN_DENOMINATOR
    # 691 | B_12: irregular pair (691, 12)
    assert bernoulli_mod_p(12, 691) == 0
    # 37 is irregular at 32
    assert bernoulli_mod_p(32, 37) == 0


@given(st.integers(0, 3000))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == trial_division(n)


@pytest.mark.parametrize("n", [3215031751, 341550071728321, 3825123056546413051, 561, 1105])
def test_strong_pseudoprimes_rejected(n):
    assert not is_prime(n)


def test_large_primes():
    assert is_prime(2**61 - 1)
    assert is_prime(1_000_000_007)


def test_primes_up_to_matches_oracle():
    assert primes_up_to(1000) == [n for n in range(1001) if trial_division(n)]
    assert primes_up_to(1) == []


@given(st.integers(1, 10**6))
def test_prime_factors_multiply_back(n):
    fs = prime_factors(n)
    assert fs == sorted(set(fs))
    assert all(trial_division(q) for q in fs)
    m = n
    for q in fs:
        while m % q == 0:
            m //= q
    assert m == 1


@given(st.integers(-50, 50), st.integers(0, 200), st.integers(1, 500))
def test_powmod(b, e, m):
    assert powmod(b, e, m) == (b**e) % m


def test_powmod_rejects_bad_input():
    with pytest.raises(ValueError):
        powmod(2, -1, 5)
    with pytest.raises(ValueError):
        powmod(2, 3, 0)


@settings(max_examples=50)
@given(st.sampled_from([3, 5, 7, 11, 13, 17]), st.integers(1, 2000))
def test_one_plus_p_generator_criterion(p, ell):
    if ell % p == 0:
        return
    # ell / teich(ell) = ell^(p-1) up to a (p-1)-th root of unity; it generates
    # 1 + pZ_p iff its image in (1 + pZ)/(1 + p^2 Z) is nontrivial
    u = pow(ell, p - 1, p**3)
    assert u % p == 1
    assert is_one_plus_p_generator(ell, p) == (u % (p * p) != 1)


def test_one_plus_p_generator_examples():
    assert is_one_plus_p_generator(5, 13)
    assert pow(5, 4, 13) == 1
    assert (5**12 - 1) % 169 != 0
    # Wieferich-type failure: 3^10 = 1 mod 121
    assert not is_one_plus_p_generator(3, 11)
    with pytest.raises(ValueError):
        is_one_plus_p_generator(13, 13)


def test_unobstructed_at_13_3():
    ev = check_unobstructed_bernoulli(13, 3)
    assert ev.unobstructed and ev.indices == (4, 10)
    assert ev.values == {4: 3, 10: 5}
    assert ev.inferred_pattern
    assert "B_4 mod 13 = 3" in ev.describe()


def test_unobstructed_at_p_equal_a_plus_one_pattern():
    ev = check_unobstructed_bernoulli(5, 1)
    assert ev.unobstructed
    assert ev.values[4] is Residue.P_IN_DENOMINATOR


def test_obstructed_example():
    # 37 divides B_32; a + 1 = 32 means a = 31
    ev = check_unobstructed_bernoulli(37, 31)
    assert not ev.unobstructed


def test_unobstructed_explicit_indices():
    ev = check_unobstructed_bernoulli(13, 3, indices=(4,))
    assert ev.indices == (4,) and not ev.inferred_pattern


@pytest.mark.parametrize("p, a", [(4, 1), (13, 2), (13, 13), (13, -1)])
def test_unobstructed_rejects_bad_input(p, a):
    with pytest.raises(ValueError):
        check_unobstructed_bernoulli(p, a)


def test_hypothesis_context():
    ctx = HypothesisContext(13, 1, 3, 5)
    assert ctx.as_dict() == {"p": 13, "N": 1, "a": 3, "ell": 5}
    for bad in [dict(p=9), dict(p=13, N=13), dict(p=13, ell=13), dict(p=13, ell=6)]:
        with pytest.raises(ValueError):
            HypothesisContext(**bad)
