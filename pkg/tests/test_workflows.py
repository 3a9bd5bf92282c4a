import json

import pytest

from pdcert import workflows
from pdcert.qexp import PrecisionError
from pdcert.report import CITED, FAIL, NOT_APPLICABLE, PASS, Check, Report, exit_code, render_json, render_text


def oracle_hits(p, a, bound, mode):
    """Primes meeting the local hypotheses, recomputed from first principles."""
    out = []
    for ell in range(2, bound + 1):
        if ell == p or any(ell % d == 0 for d in range(2, int(ell**0.5) + 1)):
            continue
        if pow(ell, p - 1, p * p) == 1:
            continue
        if mode == "split":
            if (ell * ell - 1) % p == 0:
                continue
            # chi^i(Frob_ell) = omega(Frob_ell) for i = 1 or -1
            if not any(pow(ell, (i * a) % (p - 1), p) == ell % p for i in (1, -1)):
                continue
        else:
            if (ell + 1) % p or (ell + 1) % (p * p) == 0 or pow(ell, a, p) != ell % p:
                continue
        out.append(ell)
    return out


@pytest.mark.parametrize("p, a, mode", [(13, 3, "split"), (17, 3, "split"), (13, 3, "nonsplit"),
                                        (7, 1, "split"), (11, 5, "split"), (7, 1, "nonsplit")])
def test_hunt_matches_oracle(p, a, mode):
    reps = workflows.hunt(p, a, 600, mode)
    assert [r.context["ell"] for r in reps] == sorted(r.context["ell"] for r in reps)
    hits = [r.context["ell"] for r in reps if workflows.ell_hypotheses_pass(r)]
    assert hits == oracle_hits(p, a, 600, mode)


def test_hunt_examples():
    five = next(r for r in workflows.hunt(13, 3, 1000) if r.context["ell"] == 5)
    assert five.verdict and not five.conditional
    assert pow(5, 4, 13) == 1 and (5**12 - 1) % 169
    ell293 = next(r for r in workflows.hunt(17, 3, 1000) if r.context["ell"] == 293)
    assert ell293.verdict


def test_hunt_with_obstructed_character_is_conditional():
    reps = workflows.hunt(37, 31, 50)
    assert reps and all(r.conditional for r in reps)
    passing = [r for r in reps if workflows.ell_hypotheses_pass(r)]
    assert passing and not any(r.verdict for r in passing)


def test_hunt_input_errors():
    with pytest.raises(ValueError):
        workflows.hunt(13, 2, 100)
    with pytest.raises(ValueError):
        workflows.hunt(13, 3, 1)
    with pytest.raises(ValueError):
        workflows.hypothesis_report(13, 3, 5, "sideways")


def test_bernoulli_report():
    rep = workflows.bernoulli_report(10, 13)
    assert rep.verdict
    assert rep.facts == {"B_k": "5/66", "B_k mod 13": 5}
    assert workflows.bernoulli_report(4, 5).facts["B_k mod 5"] == "p-in-denominator"


@pytest.mark.parametrize("p, precision", [(5, 60), (7, None), (11, None)])
def test_eigenform_reports(p, precision):
    rep = workflows.verify_level_raised_eigenform(p, 2, precision)
    assert rep.verdict and rep.applicable
    names = {c.name: c for c in rep.checks}
    assert names["U2 eigenvalue 1"].status == PASS
    assert names[f"T{p} eigenvalue 0"].status == PASS
    assert names["Eisenstein exclusion"].status == PASS
    assert names["F lifts to characteristic zero"].status == CITED
    if p == 11:
        assert "tau(2) = -24" in names["Delta exclusion"].evidence
        assert "9 mod 11" in names["Delta exclusion"].evidence


def test_eigenform_report_p5_details():
    rep = workflows.verify_level_raised_eigenform(5, 2, 60)
    assert rep.facts["sturm bound"] == 2 and rep.facts["checked up to"] == 10
    assert rep.facts["F coefficients"] == "0 3 3 2 3 0 2 4 3 4 0"
    names = [c.name for c in rep.checks]
    assert "T3 eigenvalue 4" in names
    ev = next(c for c in rep.checks if c.name == "Eisenstein exclusion").evidence
    assert "1953126" in ev and str(1 + 5**9) in ev


def test_eigenform_not_applicable_when_ell_is_minus_one():
    rep = workflows.verify_level_raised_eigenform(7, 13)
    assert not rep.applicable and rep.status == NOT_APPLICABLE and not rep.verdict


def test_eigenform_precision_shortfall():
    with pytest.raises(PrecisionError) as exc:
        workflows.verify_level_raised_eigenform(5, 2, 5)
    assert exc.value.required == 8
    with pytest.raises(PrecisionError):
        workflows.verify_level_raised_eigenform(7, 2, 60)


def test_eigenform_input_errors():
    with pytest.raises(ValueError):
        workflows.verify_level_raised_eigenform(13, 2)
    with pytest.raises(ValueError):
        workflows.verify_level_raised_eigenform(5, 5)


def test_h_poly_report():
    rep = workflows.h_poly_report(5, 6, 3)
    assert rep.verdict
    assert any(k.startswith("(1+X)") for k in rep.facts)
    even = workflows.h_poly_report(4)
    assert any(c.status == NOT_APPLICABLE for c in even.checks) and even.verdict


def test_ring_reports():
    text = "ring a\nvariables: X1, X2, X3, X4\nideal: X2*X4\n"
    (rep,) = workflows.ring_analyze(text)
    assert rep.facts["krull dimension"] == 3
    assert rep.facts["complete intersection"] is True


def test_pseudo_check_report():
    rep = workflows.pseudo_check("F3[e]", "S3", samples=40)
    assert rep.verdict
    assert not workflows.budget_shortfall(rep)
    assert any("specimen nonsplit-triangular" in c.name for c in rep.checks)


def test_report_rendering():
    rep = Report("demo", {"x": 1, "flag": True, "none": None})
    rep.add(Check.of("ok", True, "fine", "why"))
    rep.add(Check("cited", CITED, "later", "elsewhere"))
    assert rep.verdict and rep.status == PASS
    text = render_text([rep])
    assert text.startswith("== demo [x=1 flag=yes none=-]")
    assert "verdict: pass" in text
    assert render_text([]) == "(no reports)\n"
    data = json.loads(render_json([rep]))
    assert data[0]["checks"][1]["status"] == CITED
    rep.add(Check.of("bad", False, "broken", "why"))
    assert not rep.verdict and rep.status == FAIL and exit_code([rep]) == 1
    assert rep.passes_except({"bad"})


def test_check_requires_anchor_and_known_status():
    with pytest.raises(ValueError):
        Check("x", PASS, "e", " ")
    with pytest.raises(ValueError):
        Check("x", "maybe", "e", "a")


def test_conditional_marker_in_text():
    rep = Report("c", {})
    rep.conditional = True
    assert "conditional" in rep.to_text()
