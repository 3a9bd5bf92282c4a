"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also collected into the
pytest terminal summary by conftest.py). Run directly with
``python tests/test_acceptance.py`` for the lines alone.
"""

import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from pdcert import workflows
from pdcert.arith import bernoulli, bernoulli_akiyama_tanigawa, bernoulli_mod_p, bernoulli_recursive
from pdcert.cohomdim import CohomProfile, pseudo_tangent_dim, representability_necessity
from pdcert.localalg import (
    MonomialIdeal,
    intersect_all,
    is_complete_intersection,
    is_reduced,
    krull_dimension,
    minimal_primes,
    mu,
)
from pdcert.powseries import h_congruence_check, h_sequence, matrix_power_check
from pdcert.pseudorep import (
    CATALOG_GROUPS,
    CATALOG_RINGS,
    build_gma_from_rep,
    catalog_group,
    catalog_ring,
    free_rank_one_transport,
    ideal_reduction_is_reducible,
    random_representation,
    residual_characters,
    verify_pseudo_axioms,
)
from pdcert.qexp import eisenstein, f_ell, f_ell_rational

TIME_LIMIT = 10.0
RESULTS = {}


@contextmanager
def criterion(number, title, limit=TIME_LIMIT):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit:.0f}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({elapsed:.2f}s)"
        RESULTS[number] = line
        print(line)


def test_criterion_01_bernoulli():
    with criterion(1, "B_4 = -1/30 and B_10 = 5/66 by two routes; both nonzero mod 13"):
        assert bernoulli(4).fraction == Fraction(-1, 30)
        assert bernoulli(10).fraction == Fraction(5, 66)
        for k in (4, 10):
            assert bernoulli_recursive(k) == bernoulli_akiyama_tanigawa(k)
        assert bernoulli_mod_p(4, 13) != 0 and bernoulli_mod_p(10, 13) != 0
        assert (bernoulli_mod_p(4, 13), bernoulli_mod_p(10, 13)) == (3, 5)


def test_criterion_02_hunt():
    with criterion(2, "hunt lists ell = 5 for (13, 3) and ell = 293 for (17, 3), all pass"):
        assert pow(5, 4, 13) == 1
        assert (5**12 - 1) % 169 != 0
        for p, ell in ((13, 5), (17, 293)):
            listed = [r for r in workflows.hunt(p, 3, 1000, "split") if workflows.ell_hypotheses_pass(r)]
            hit = next(r for r in listed if r.context["ell"] == ell)
            assert hit.verdict and not hit.conditional
            assert all(c.status in ("pass", "cited-not-checked") for c in hit.checks)


def test_criterion_03_eigenform():
    with criterion(3, "weight 2p eigenforms at level 2 for p = 5, 7, 11 with exclusions"):
        rep = workflows.verify_level_raised_eigenform(5, 2, 60)
        assert rep.verdict
        checks = {c.name: c for c in rep.checks}
        assert checks["F is nonzero mod p"].status == "pass"
        for name in ("T3 eigenvalue 4", "U2 eigenvalue 1", "T5 eigenvalue 0"):
            assert checks[name].status == "pass"
            assert "to q^10" in checks[name].evidence
        assert rep.facts["sturm bound"] == 2 and rep.facts["checked up to"] == 10
        assert checks["Eisenstein exclusion"].status == "pass"
        assert f"T_5 = {1 + 5**9}" in checks["Eisenstein exclusion"].evidence and (1 + 5**9) % 5 != 0
        for p in (7, 11):
            rep = workflows.verify_level_raised_eigenform(p, 2)
            assert rep.verdict, rep.to_text()
        delta = {c.name: c for c in rep.checks}["Delta exclusion"]
        assert delta.status == "pass"
        assert "tau(2) = -24" in delta.evidence and "= 9 mod 11" in delta.evidence
        assert -24 % 11 == 9 != 3


def test_criterion_04_eisenstein_and_f_ell():
    with criterion(4, "E_(p-1) = 1 mod p to q^100; f_ell two routes agree to q^60"):
        for p in (5, 7, 11, 13, 17):
            E = eisenstein(p - 1, 100).reduce_mod(p)
            assert E.coeffs == (1,) + (0,) * 100
        for p, ell in ((5, 2), (7, 2), (11, 2)):
            assert f_ell(p, ell, 60).coeffs == f_ell_rational(p, ell, 60).reduce_mod(p).coeffs


def test_criterion_05_h_family():
    with criterion(5, "h_0, h_1, h_3; h_ell = ell mod UV; determinant identity; matrix powers"):
        hs = h_sequence(51, 8)
        assert hs[0].is_zero() and hs[1] == 1
        assert hs[3].s_part.is_zero()
        assert hs[3].a_part.coeffs == {(0, 0): 3, (1, 1): 4}
        for ell in (3, 5, 7, 11, 13):
            w = h_congruence_check(ell)
            assert w.holds and w.s_part.is_zero()
        for n in range(1, 51):
            assert hs[n + 1] * hs[n - 1] - hs[n] * hs[n] == -1
        for n in range(1, 21):
            assert matrix_power_check(n, 8)


def test_criterion_06_ring_structure():
    with criterion(6, "(T1T2, T1Z, T2Z): dim 3, three planes, reduced, not CI; (X2X4): dim 3, CI"):
        I = MonomialIdeal.parse("X, Y, Z, T1, T2", "T1*T2, T1*Z, T2*Z")
        assert krull_dimension(I) == 3
        assert set(minimal_primes(I)) == {frozenset(s) for s in ({"Z", "T1"}, {"Z", "T2"}, {"T1", "T2"})}
        assert is_reduced(I)
        cert = is_complete_intersection(I)
        assert mu(I) == 3 and cert.height == 2 and not cert.is_ci
        J = MonomialIdeal.parse("X1, X2, X3, X4", "X2*X4")
        assert krull_dimension(J) == 3 and is_complete_intersection(J).is_ci
        (rep,) = workflows.ring_analyze("ring r\nvariables: X, Y, Z, T1, T2\nideal: T1*T2, T1*Z, T2*Z\n")
        assert rep.facts["complete intersection"] is False


def test_criterion_07_intersection():
    with criterion(7, "(Y,X1) n (Y,X2) n (X1,X2) = (YX1, YX2, X1X2), cross-checked to degree 4"):
        v = ("Y", "X1", "X2")
        parts = [MonomialIdeal.generated_by_variables(v, s) for s in (("Y", "X1"), ("Y", "X2"), ("X1", "X2"))]
        J = intersect_all(parts)
        assert J == MonomialIdeal.parse(v, "Y*X1, Y*X2, X1*X2")
        for e in np.ndindex(5, 5, 5):
            if sum(e) > 4:
                continue
            in_all = all(any(e[v.index(x)] > 0 for x in s) for s in (("Y", "X1"), ("Y", "X2"), ("X1", "X2")))
            assert J.contains(tuple(e)) == in_all


def test_criterion_08_cohomdim():
    with criterion(8, "tangent dims 3/4/6; min(m, n) = 1 boundary on the 10 x 10 grid"):
        dims = [pseudo_tangent_dim(CohomProfile(k, m, n, p_nmid_phi_N=True, chi_odd=True))
                for k, m, n in ((1, 1, 1), (1, 2, 1), (1, 2, 2))]
        assert dims == [3, 4, 6]
        for m in range(1, 11):
            for n in range(1, 11):
                assert representability_necessity(m, n) == ((m - 1) * (n - 1) <= 0)


def _catalog_samples(count, seed):
    rng = np.random.default_rng(seed)
    pairs = [(r, g) for r in CATALOG_RINGS for g in CATALOG_GROUPS]
    for i in range(count):
        r, g = pairs[i % len(pairs)]
        yield random_representation(catalog_group(g), catalog_ring(r), rng)


def test_criterion_09a_axioms():
    with criterion("9a", "10^4 random representations over the catalog satisfy the axioms"):
        failures = [i for i, rep in enumerate(_catalog_samples(10_000, 2024))
                    if not verify_pseudo_axioms(rep.pseudo_character()).ok]
        assert failures == []


def test_criterion_09b_gma():
    with criterion("9b", "GMA traces reducible modulo the pairing ideal; free rank one transport exact"):
        built = transported = 0
        for rep in _catalog_samples(4_000, 77):
            split = residual_characters(rep.pseudo_character())
            if split is None or (split[0] == split[1]).all():
                continue
            build = build_gma_from_rep(rep)
            assert build.valid
            assert ideal_reduction_is_reducible(build.representation)
            built += 1
            if build.gma.B.free_rank_one_generator() is not None:
                moved = free_rank_one_transport(build.representation)
                pc = rep.pseudo_character()
                assert (moved.trace == pc.t).all() and (moved.det == pc.d).all()
                transported += 1
        assert built >= 1000 and transported >= 20, (built, transported)


SUITE = [
    ["examples", "--json"],
    ["hunt", "--p", "13", "--a", "3", "--bound", "1000", "--json"],
    ["verify-eigensystem", "--p", "11", "--ell", "2", "--json"],
    ["h-poly", "--ell", "13", "--json"],
    ["pseudo-check", "--ring", "F3[x,y]", "--group", "Dih(C3xC3)", "--samples", "60", "--json"],
    ["pseudo-check", "--ring", "Z/9", "--group", "S3", "--samples", "60", "--json"],
]


def _suite_bytes():
    out = b""
    for argv in SUITE:
        proc = subprocess.run([sys.executable, "-m", "pdcert.cli", *argv], capture_output=True, check=False)
        assert proc.returncode == 0, (argv, proc.stderr)
        out += proc.stdout
    return out


def test_criterion_10_determinism():
    with criterion(10, "two runs of the report suite give byte-identical JSON", limit=30.0):
        first, second = _suite_bytes(), _suite_bytes()
        assert first and first == second


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
