"""Nilradical, semisimple quotient, model probes, and the conjecture probe."""

import json
from fractions import Fraction

import pytest

from hni.cyclotomic import CyclotomicNumber

from hni.algebra import in_span, same_span
from hni.quotient import build_hni
from hni.radical import conjecture_probe, conjecture_probe_json, \
    h1_grassmann_report, h1_radical_report, h2_matrix_model_report, \
    h2_radical_report, nilradical, radical_report, semisimple_quotient


def _all_pass(checks):
    bad = [c for c in checks if c["status"] != "pass"]
    assert not bad, bad


@pytest.mark.parametrize("n,expected_dim", [(1, 6), (2, 6)])
def test_radical_dimensions(n, expected_dim):
    assert len(nilradical(build_hni(n))) == expected_dim


def test_h1_radical_is_spanned_by_nilpotent_named_elements():
    from hni.quotient import named_basis

    bc = named_basis(1)
    algebra = build_hni(1)
    rad = nilradical(algebra)
    named_rad = [bc.to_source(bc.transport().basis_element(l).coeffs)
                 for l in ("E0", "E1", "F0", "F1", "C0", "C1")]
    assert same_span(rad, named_rad)


def test_h1_quotient_is_two_copies_of_the_scalars():
    algebra = build_hni(1)
    quotient = semisimple_quotient(algebra, nilradical(algebra))
    assert quotient.dim == 2
    assert quotient.check_unit() and quotient.check_associativity()
    # (1 + K)/2 and (1 - K)/2 descend to two orthogonal idempotents
    half = CyclotomicNumber.from_rational(Fraction(1, 2), quotient.order)
    one, k = quotient.unit_element(), quotient.basis_element("K")
    p0 = (one + k).scale(half)
    p1 = (one - k).scale(half)
    assert p0 * p0 == p0 and p1 * p1 == p1
    assert (p0 * p1).is_zero()
    assert p0 + p1 == one


def test_structured_reports_pass():
    _all_pass(h1_radical_report())
    _all_pass(h2_radical_report())


def test_grassmann_model_all_64_products():
    checks = h1_grassmann_report()
    _all_pass([c for c in checks if c["status"] != "paper-mismatch"])
    assert any("64" in c["name"] and c["status"] == "pass" for c in checks)


def test_matrix_model_relations_and_span():
    _all_pass(h2_matrix_model_report())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_radical_contained_in_trace_form_kernels(n):
    rep = radical_report(n)
    assert all(rep.containment_flags.values())
    assert rep.dim_radical == 6 if n <= 2 else rep.dim_radical >= 0


def test_conjecture_probe_structure_and_determinism():
    text1 = conjecture_probe_json(2)
    text2 = conjecture_probe_json(2)
    assert text1 == text2
    probe = json.loads(text1)
    assert set(probe) >= {"probe", "n_max", "reports"}
    assert probe["n_max"] == 2
    assert len(probe["reports"]) == 2
    for rep in probe["reports"]:
        assert all(rep["containment_flags"].values())
