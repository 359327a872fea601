"""Star operation, adjoint representation, and the two trace forms."""

from fractions import Fraction

import pytest

from hni.algebra import same_span
from hni.cyclotomic import CyclotomicNumber
from hni.quotient import build_hni, named_basis
from hni.radical import nilradical
from hni.representations import adjoint_is_multiplicative, adjoint_matrices, \
    adjoint_of_vector, adjoint_trace_vector, compare_adjoint_h1, \
    compare_adjoint_h2, gram_lambda, gram_mu, lambda_form_h1_report, \
    lambda_form_h2_report, star_map


@pytest.mark.parametrize("n", [1, 2])
def test_star_is_an_involutive_antiautomorphism(n):
    star = star_map(n)
    assert star.is_involutive()
    assert star.is_antimultiplicative()


def test_star_swaps_e_f_and_inverts_k():
    algebra = build_hni(2)
    star = star_map(2)

    def eq(u, v):
        return all((a - b).is_zero() for a, b in zip(u, v))

    e = algebra.basis_element("E").coeffs
    f = algebra.basis_element("F").coeffs
    assert eq(star.apply(e), f)
    assert eq(star.apply(f), e)
    k = algebra.basis_element("K").coeffs
    k_inv = algebra.basis_element("K^3").coeffs  # K^4 = 1, so K^{-1} = K^3
    assert eq(star.apply(k), k_inv)


@pytest.mark.parametrize("n", [1, 2])
def test_adjoint_is_a_representation(n):
    assert adjoint_is_multiplicative(n)


def test_adjoint_trace_h1():
    labels = named_basis(1).target_labels
    trace = adjoint_trace_vector(1, basis="named")
    values = {l: t for l, t in zip(labels, trace)}
    four = CyclotomicNumber.from_rational(Fraction(4), 4)
    assert (values["e0"] - four).is_zero()
    assert (values["e1"] - four).is_zero()
    assert all(values[l].is_zero() for l in labels if l not in ("e0", "e1"))


def test_lambda_form_signature_h1():
    sig = gram_lambda(1).signature()
    assert (sig.n_plus, sig.n_zero, sig.n_minus) == (2, 6, 0)
    assert len(gram_lambda(1).kernel()) == 6


def test_mu_form_kernel_is_nilradical_h1():
    algebra = build_hni(1)
    kernel = gram_mu(1).kernel()
    assert same_span(kernel, nilradical(algebra))


def test_compare_adjoint_h1_two_known_typos():
    checks = compare_adjoint_h1()
    assert not [c for c in checks if c["status"] == "fail"]
    mismatches = sorted(c["name"] for c in checks if c["status"] == "paper-mismatch")
    assert mismatches == ["mu(C0)e1", "mu(F1)e1"]


def test_compare_adjoint_h2_internally_consistent():
    checks = compare_adjoint_h2()
    assert not [c for c in checks if c["status"] == "fail"]
    assert any(c["status"] == "paper-mismatch" for c in checks)
    passing = [c["name"] for c in checks if c["status"] == "pass"]
    assert "mu vanishes on the odd block" in passing


def test_lambda_form_reports_pass():
    for report in (lambda_form_h1_report(), lambda_form_h2_report()):
        assert not [c for c in report if c["status"] == "fail"], report


def test_adjoint_of_casimir_commutes_with_everything():
    from hni.quotient import casimir_vector

    _, mats = adjoint_matrices(1)
    m = adjoint_of_vector(1, casimir_vector(1))
    assert all(m @ g == g @ m for g in mats)
