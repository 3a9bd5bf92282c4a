"""End-to-end certification runs behind the command-line tool.

Each function returns Report objects; nothing here prints.
"""

from __future__ import annotations

import numpy as np

from . import qexp
from .arith import (
    HypothesisContext,
    Residue,
    bernoulli,
    bernoulli_akiyama_tanigawa,
    bernoulli_mod_p,
    bernoulli_recursive,
    check_unobstructed_bernoulli,
    is_one_plus_p_generator,
    is_prime,
    primes_up_to,
)
from .cohomdim import CharacterData, restriction_is_cyclotomic
from .localalg import analyze, parse_presentations
from .powseries import (
    relation_factors,
    h_congruence_check,
    h_polynomial,
    h_sequence,
    matrix_power_check,
)
from .report import CITED, NOT_APPLICABLE, PASS, Check, Report

# -- bernoulli ---------------------------------------------------------------


def bernoulli_report(k: int, p: int | None = None) -> Report:
    value = bernoulli(k)
    rec, at = bernoulli_recursive(k), bernoulli_akiyama_tanigawa(k)
    rep = Report("bernoulli", {"k": k, "mod": p})
    rep.facts["B_k"] = str(value)
    rep.add(Check.of(
        "recursion and Akiyama-Tanigawa agree", rec == at,
        f"recursion {rec}, Akiyama-Tanigawa {at}",
        "exact Bernoulli values by two routes",
    ))
    if p is not None:
        r = bernoulli_mod_p(k, p)
        shown = r.value if isinstance(r, Residue) else r
        rep.facts[f"B_k mod {p}"] = shown
    return rep


# -- hunt --------------------------------------------------------------------

GLOBAL_CHECK = "unobstructed"


def _unobstructed_check(p: int, a: int) -> Check:
    ev = check_unobstructed_bernoulli(p, a)
    note = " (index pattern a+1, p-a inferred)" if ev.inferred_pattern else ""
    return Check.of(GLOBAL_CHECK, ev.unobstructed, ev.describe() + note,
                    "unobstructedness from Bernoulli numbers for 1 + omega^a")


def hypothesis_report(p: int, a: int, ell: int, mode: str = "split") -> Report:
    """All hypotheses for level raising at ell, checked or cited."""
    if mode not in ("split", "nonsplit"):
        raise ValueError("mode is 'split' or 'nonsplit'")
    ctx = HypothesisContext(p, 1, a, ell)
    rep = Report(f"hypotheses at ell={ell}", {**ctx.as_dict(), "mode": mode})
    unob = rep.add(_unobstructed_check(p, a))
    rep.conditional = unob.status != PASS
    rep.add(Check(
        "ell prime to Np", PASS, f"{ell} does not divide {p}", "hypothesis: ell does not divide Np",
    ))
    chi = CharacterData(p, a)
    if mode == "split":
        r = (ell * ell - 1) % p
        rep.add(Check.of(
            "p does not divide ell^2 - 1", r != 0, f"ell^2 - 1 = {r} mod {p}",
            "hypothesis: p does not divide ell^2 - 1",
        ))
        hits = [i for i in (1, -1) if restriction_is_cyclotomic(chi, i, ell)]
        rep.add(Check.of(
            "chi^i at ell is cyclotomic", bool(hits),
            f"i in {hits}" if hits else f"neither ell^(a-1) nor ell^(-a-1) is 1 mod {p}",
            "hypothesis: chi^i restricted to G_ell equals omega_p for i = 1 or -1",
        ))
    else:
        rep.add(Check.of(
            "p divides ell + 1", (ell + 1) % p == 0, f"ell + 1 = {(ell + 1) % p} mod {p}",
            "hypothesis: p divides ell + 1",
        ))
        rep.add(Check.of(
            "p^2 does not divide ell + 1", (ell + 1) % (p * p) != 0,
            f"ell + 1 = {(ell + 1) % (p * p)} mod {p * p}",
            "hypothesis: p^2 does not divide ell + 1",
        ))
        ok = restriction_is_cyclotomic(chi, 1, ell)
        rep.add(Check.of(
            "chi at ell is cyclotomic", ok, f"ell^(a-1) = {pow(ell, (a - 1) % (p - 1), p)} mod {p}",
            "hypothesis: chi restricted to G_ell equals omega_p",
        ))
    t = pow(ell, p - 1, p * p)
    rep.add(Check.of(
        "ell / Teichmuller(ell) generates 1 + pZ_p", is_one_plus_p_generator(ell, p),
        f"ell^(p-1) = {t} mod {p * p}",
        "hypothesis: p^2 does not divide ell^(p-1) - 1",
    ))
    rep.add(Check(
        "an eigenform new at ell lifts the residual representation", CITED,
        "existence is a level-raising theorem; not checked here",
        "hypothesis: level-raising existence (cited)",
    ))
    return rep


def ell_hypotheses_pass(rep: Report) -> bool:
    return rep.passes_except({GLOBAL_CHECK})


def hunt(p: int, a: int, bound: int, mode: str = "split") -> list[Report]:
    """Reports for every prime ell <= bound with ell != p, ascending."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    check_unobstructed_bernoulli(p, a)  # validates p and a up front
    return [hypothesis_report(p, a, ell, mode) for ell in primes_up_to(bound) if ell != p]


# -- the weight 2p eigenform -------------------------------------------------

DELTA_PRIME = 11


def default_precision(p: int, ell: int) -> int:
    up_to = max(qexp.sturm_bound(2 * p, ell), 10)
    return 2 * (up_to + 1) * max(p, ell, 3)


def verify_level_raised_eigenform(p: int, ell: int, precision: int | None = None) -> Report:
    """F = theta(f_ell mod p) is a mod-p eigenform of weight 2p, level ell with
    T_q = 1 + q, U_ell = 1, T_p = 0, not explained by Eisenstein series or Delta."""
    if p not in (5, 7, 11):
        raise ValueError("p must be 5, 7 or 11")
    if not is_prime(ell) or ell == p:
        raise ValueError("ell must be a prime different from p")
    P = default_precision(p, ell) if precision is None else precision
    ctx = {**HypothesisContext(p, 1, 1, ell).as_dict(), "precision": P}
    rep = Report(f"weight {2 * p} eigenform at level {ell}", ctx)

    r = ell % p
    rep.add(Check.of(
        "ell is not +-1 mod p", r not in (1, p - 1), f"ell = {r} mod {p}",
        "hypothesis: ell is not congruent to 1 or -1 mod p",
    ))
    t = pow(ell, p - 1, p * p)
    rep.add(Check.of(
        "p^2 does not divide ell^(p-1) - 1", t != 1, f"ell^(p-1) = {t} mod {p * p}",
        "hypothesis: ell / Teichmuller(ell) generates 1 + pZ_p",
    ))
    if any(c.status != PASS for c in rep.checks):
        rep.applicable = False
        return rep
    rep.add(_unobstructed_check(p, 1))

    sturm = qexp.sturm_bound(2 * p, ell)
    up_to = max(sturm, 10)
    need = 2 * ell * sturm
    if P < need:
        raise qexp.PrecisionError(f"precision {P} is below 2 * ell * sturm = {need}", need)
    f = qexp.f_ell(p, ell, P)
    F = qexp.theta(f)
    rep.facts["sturm bound"] = sturm
    rep.facts["checked up to"] = up_to
    rep.facts["F coefficients"] = " ".join(str(c) for c in F.coeffs[: up_to + 1])

    cross = min(P, 60)
    rational = qexp.f_ell_rational(p, ell, cross).reduce_mod(p)
    rep.add(Check.of(
        "f_ell matches its defining formula", rational.coeffs == f.truncate(cross).coeffs,
        f"closed form vs -B_(p-1)/(4(p-1)) (E - E|V_ell) mod {p}, to q^{cross}",
        "construction of f_ell from E_(p-1)",
    ))
    nz = next((n for n in range(up_to + 1) if F.coeffs[n]), None)
    rep.add(Check.of(
        "F is nonzero mod p", nz is not None,
        f"a_{nz}(F) = {F.coeffs[nz]}" if nz is not None else f"zero to q^{up_to}",
        "F = theta(f_ell) is nonzero",
    ))

    qs = [q for q in primes_up_to(P // up_to) if q not in (ell, p)]
    expected = {f"T{q}": (1 + q) % p for q in qs}
    expected[f"U{ell}"] = 1
    expected[f"T{p}"] = 0
    eig = qexp.verify_eigensystem(F, expected, up_to)
    for c in eig.checks:
        where = "" if c.passed else f"; first mismatch at q^{c.first_discrepancy}"
        if c.tag.startswith("U"):
            anchor = "U_ell F = F"
        elif c.tag == f"T{p}":
            anchor = "T_p F = 0"
        else:
            anchor = "T_q F = (1 + q) F"
        rep.add(Check.of(
            f"{c.tag} eigenvalue {c.eigenvalue}", c.passed,
            f"coefficients agree to q^{c.checked_up_to}{where}", anchor,
        ))
    rep.add(Check.of(
        "Sturm bound covered", eig.covers_sturm, f"checked to {up_to} >= sturm {sturm}",
        "Sturm bound for weight 2p and level ell",
    ))

    # Eisenstein exclusion: the U_ell = 1 stabilisation of E_2p has T_p = 1 + p^(2p-1)
    E = qexp.level_raised_eisenstein(2 * p, ell, 4 * p * ell)
    lam_u = qexp.eigenvalue(f"U{ell}", E)
    lam_p = qexp.eigenvalue(f"T{p}", E)
    target = 1 + p ** (2 * p - 1)
    rep.add(Check.of(
        "Eisenstein exclusion", lam_u == 1 and lam_p == target and target % p != 0,
        f"U_{ell} = {lam_u}, T_{p} = {lam_p} = 1 + {p}^{2 * p - 1}, which is {target % p} mod {p}",
        "the level-raised Eisenstein series has T_p eigenvalue 1 + p^(2p-1), a unit mod p",
    ))
    if p == DELTA_PRIME:
        D = qexp.delta(12)
        DE = (D * qexp.eisenstein(10, 12)).reduce_mod(p)
        tau2 = D.coeffs[2]
        a2 = DE.coeffs[2]
        ok = a2 == tau2 % p and a2 != 3 % p
        rep.add(Check.of(
            "Delta exclusion", ok,
            f"tau(2) = {tau2}, a_2(Delta E_10) = {a2} mod {p}, 1 + 2 = 3",
            "Delta E_10 has a_2 = tau(2), not 1 + 2, mod 11",
        ))
    rep.add(Check(
        "F lifts to characteristic zero", CITED,
        "Deligne-Serre lifting lemma; not checked here",
        "lifting of mod-p eigenforms (cited)",
    ))
    return rep


# -- ring structure ------------------------------------------------------------


def ring_reports(text: str) -> list[Report]:
    out = []
    for pres in parse_presentations(text):
        a = analyze(pres.name, pres.ideal)
        rep = Report(f"ring {pres.name}", {"variables": list(pres.ideal.variables)})
        rep.facts.update({
            "ideal": pres.ideal.render(),
            "mu": a.mu,
            "minimal primes": ["(" + ", ".join(P) + ")" for P in a.minimal_primes],
            "krull dimension": a.krull_dimension,
            "reduced": a.reduced,
            "domain": a.is_domain,
            "complete intersection": a.ci.is_ci if a.ci else None,
            "height": a.ci.height if a.ci else None,
            "tangent dimension": a.tangent_dimension,
        })
        if a.ci_note:
            rep.facts["ci note"] = a.ci_note
        out.append(rep)
    return out


ring_analyze = ring_reports


# -- h polynomials -------------------------------------------------------------


def h_poly_report(ell: int, degree: int = 6, modulus: int | None = None) -> Report:
    if ell < 0:
        raise ValueError("ell must be non-negative")
    rep = Report(f"h_{ell}", {"ell": ell, "degree": degree, "mod": modulus})
    h = h_polynomial(ell, degree, modulus)
    rep.facts["h_ell"] = (
        h.a_part.render() if h.s_part.is_zero() else f"({h.s_part.render()})*s + {h.a_part.render()}"
    )
    if ell % 2 == 1:
        w = h_congruence_check(ell, degree, modulus)
        rep.add(Check.of(
            "h_ell = ell mod (UV)", w.holds,
            f"s-part {w.s_part.render()}, h_ell - ell = {w.difference.render()}",
            "h_ell is a power series congruent to ell mod UV for odd ell",
        ))
    else:
        rep.add(Check(
            "h_ell = ell mod (UV)", NOT_APPLICABLE, "even index carries a factor of s",
            "h_ell is a power series congruent to ell mod UV for odd ell",
        ))
    hs = h_sequence(max(ell, 2), degree, modulus)
    bad = [n for n in range(1, max(ell, 2))
           if (hs[n + 1] * hs[n - 1] - hs[n] * hs[n]) != -1]
    rep.add(Check.of(
        "h_(n+1) h_(n-1) - h_n^2 = -1", not bad,
        f"for 1 <= n < {max(ell, 2)}" + (f"; fails at n = {bad[0]}" if bad else ""),
        "determinant of M^n",
    ))
    if ell >= 1:
        rep.add(Check.of(
            "M^ell = h_ell M - h_(ell-1) I", matrix_power_check(ell, degree, modulus),
            "M = [[s, U], [V, s]], s^2 = 1 + UV", "powers of the tame inertia matrix",
        ))
    if modulus is not None and ell > 0 and (ell + 1) % modulus == 0:
        first, second = relation_factors(modulus, ell, degree)
        rep.facts["(1+X) + h_ell (1+Y)"] = first.render()
        rep.facts["(1+Y) + h_ell (1+X)"] = second.render()
    return rep


# -- pseudo-representations ------------------------------------------------------


def pseudo_check(ring_tag: str, group_tag: str, budget: int | None = None,
                 samples: int = 200, seed: int = 0) -> Report:
    from .pseudorep import (
        DEFAULT_BUDGET,
        arises_from_representation,
        build_gma_from_rep,
        catalog_group,
        catalog_ring,
        catalog_specimens,
        characters,
        check_axioms,
        find_breaking_perturbation,
        free_rank_one_transport,
        from_characters,
        ideal_reduction_is_reducible,
        is_reducible,
        nakayama_bound,
        random_representation,
        residual_characters,
    )

    budget = DEFAULT_BUDGET if budget is None else budget
    R, G = catalog_ring(ring_tag), catalog_group(group_tag)
    rng = np.random.default_rng(seed)
    ctx = {"ring": R.tag, "group": G.tag, "samples": samples, "seed": seed, "budget": budget}
    rep = Report(f"pseudo-characters of {G.tag} over {R.tag}", ctx)
    rep.facts["|R|"] = R.size
    rep.facts["|G|"] = G.order

    reps = [random_representation(G, R, rng) for _ in range(samples)]
    bad = [i for i, r in enumerate(reps) if not check_axioms(r.pseudo_character())]
    rep.add(Check.of(
        "traces of representations satisfy the axioms", not bad,
        f"{samples - len(bad)}/{samples} random representations",
        "traces of representations are pseudo-characters",
    ))

    chars = characters(R, G)
    pairs_ok = True
    for e1 in chars:
        for e2 in chars:
            pc = from_characters(R, G, e1, e2)
            if not (check_axioms(pc) and is_reducible(pc)):
                pairs_ok = False
    rep.add(Check.of(
        "sums of characters are reducible pseudo-characters", pairs_ok,
        f"{len(chars) ** 2} ordered pairs of {len(chars)} characters",
        "t = eta1 + eta2 is a reducible pseudo-character",
    ))

    if R.size > R.p:
        pert = find_breaking_perturbation(reps[0].pseudo_character())
        if pert is None:
            rep.add(Check(
                "a maximal-ideal perturbation breaks the axioms", NOT_APPLICABLE,
                "no single-value perturbation breaks the trace identity here",
                "axiom checker detects perturbed tables",
            ))
        else:
            g, delta, report = pert
            rep.add(Check.of(
                "a maximal-ideal perturbation breaks the axioms", not report.ok,
                f"t({G.labels[g]}) += {R.labels[delta]}: {report.describe(G)}",
                "axiom checker detects perturbed tables",
            ))

    built = skipped = 0
    build_fail, red_mismatch, nak_fail, ann_fail, transport_fail, transported = [], [], [], [], [], 0
    searched = found = over = 0
    for i, r in enumerate(reps):
        try:
            b = build_gma_from_rep(r)
        except ValueError:
            skipped += 1
            continue
        built += 1
        grep = b.representation
        if not b.valid or not ideal_reduction_is_reducible(grep):
            build_fail.append(i)
        zero_ideal = len(b.gma.pairing_ideal()) == 1
        if bool(is_reducible(r.pseudo_character())) != zero_ideal:
            red_mismatch.append(i)
        if not nakayama_bound(grep, b.chi1, b.chi2).holds:
            nak_fail.append(i)
        if not b.gma.annihilator_condition():
            ann_fail.append(i)
        if b.gma.B.free_rank_one_generator() is not None:
            transported += 1
            tr = free_rank_one_transport(grep)
            if not (tr.trace == r.trace).all():
                transport_fail.append(i)
        if searched < 20:
            searched += 1
            res = arises_from_representation(r.pseudo_character(), budget)
            found += res.status == "found"
            over += res.status == "budget"

    def gma_check(name, failures, evidence, anchor):
        if built == 0:
            rep.add(Check(name, NOT_APPLICABLE, "no residually multiplicity-free samples", anchor))
        else:
            rep.add(Check.of(name, not failures, evidence, anchor))

    gma_check("GMA built from each representation is valid", build_fail,
              f"{built} GMAs ({skipped} samples residually scalar or irreducible)",
              "GMA from a representation with multiplicity-free residual")
    gma_check("t reducible iff the pairing ideal vanishes", red_mismatch,
              f"{built - len(red_mismatch)}/{built} agree",
              "reducibility ideal is the image of B x C")
    gma_check("minimal generators of B, C bounded by Ext^1", nak_fail,
              f"{built - len(nak_fail)}/{built} within the bound",
              "mu(B) <= dim H^1(G, chi1/chi2)")
    gma_check("y B = 0 implies y m(B, C) = 0", ann_fail,
              f"{built - len(ann_fail)}/{built}", "annihilator of B kills the pairing image")
    if transported:
        rep.add(Check.of(
            "free rank one transport preserves traces", not transport_fail,
            f"{transported - len(transport_fail)}/{transported} samples with B free of rank one",
            "GMA with B free of rank one embeds in M_2(R)",
        ))
    if searched:
        rep.add(Check.of(
            "traces of representations are recovered by search", found + over == searched,
            f"{found}/{searched} recovered, {over} over budget",
            "representability search is complete",
        ))
        if over:
            rep.facts["budget shortfalls"] = over

    for sp in catalog_specimens():
        if sp.ring_tag != R.tag or sp.group_tag != G.tag:
            continue
        pc = sp.pseudo_character()
        res = arises_from_representation(pc, budget)
        if res.status == "budget":
            rep.facts["budget shortfalls"] = rep.facts.get("budget shortfalls", 0) + 1
        got = res.representable
        rep.add(Check.of(
            f"specimen {sp.name}: representable = {sp.representable}", got == sp.representable,
            f"{sp.description}; search {res.status} over a space of {res.search_space} generator tuples ({res.searched} matrices examined)",
            "exhaustive search over normalized generator images",
        ))
        if sp.gma_rep is not None:
            chi = residual_characters(pc)
            nb = nakayama_bound(sp.gma_rep, *chi)
            rep.add(Check.of(
                f"specimen {sp.name}: Ext^1 dimensions", nb.h1_B >= 2 and nb.h1_C >= 2 and nb.holds,
                f"mu(B) = {nb.mu_B} <= {nb.h1_B}, mu(C) = {nb.mu_C} <= {nb.h1_C}",
                "non-representability needs both Ext^1 of dimension at least 2",
            ))
            rep.add(Check.of(
                f"specimen {sp.name}: reducible modulo the pairing ideal",
                ideal_reduction_is_reducible(sp.gma_rep), "t mod I splits as two characters",
                "t modulo the pairing ideal is reducible",
            ))
    return rep


def budget_shortfall(rep: Report) -> bool:
    return bool(rep.facts.get("budget shortfalls"))


reproduce_lemma_5_3 = verify_level_raised_eigenform
