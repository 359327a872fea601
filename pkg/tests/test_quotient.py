"""The quotient algebras H_N^i: PBW build, basis changes, center."""

from fractions import Fraction

import pytest

from hni.cyclotomic import CyclotomicNumber, field_order
from hni.quotient import build_hni, casimir_vector, center_check, fourier_basis, \
    is_central, named_basis, normal_form, u_commutator, u_gen, u_mul


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dimension_and_field(n):
    algebra = build_hni(n)
    assert algebra.dim == 8 * n
    assert algebra.order == field_order(n)
    assert algebra.check_unit()
    assert algebra.check_associativity()


def test_defining_relations_pre_quotient():
    # KE = -EK and KF = -FK at q = i; [E, F] = (K - K^{-1}) / (i - i^{-1})
    order = 4
    k, e, f = u_gen("K", order), u_gen("E", order), u_gen("F", order)
    ke = u_mul(k, e, order)
    ek = u_mul(e, k, order)
    assert all((ke.get(w, CyclotomicNumber.zero(order)) + c).is_zero()
               for w, c in ek.items())
    comm = u_commutator(e, f, order)
    i = CyclotomicNumber.i(order)
    two_i_inv = (i - i.inv()).inv()
    expected = {(0, 1, 0): two_i_inv, (0, -1, 0): -two_i_inv}
    assert set(comm) == set(expected)
    assert all((comm[w] - expected[w]).is_zero() for w in comm)


@pytest.mark.parametrize("n", [1, 2])
def test_quotient_relations(n):
    # E^2 = 0, F^2 = 0, K^{2N} = 1 in the quotient
    assert all(c.is_zero() for c in normal_form(("E",) * 2, n))
    assert all(c.is_zero() for c in normal_form(("F",) * 2, n))
    high = normal_form(("K",) * (2 * n), n)
    assert (high[0] - CyclotomicNumber.one(field_order(n))).is_zero()
    assert all(c.is_zero() for c in high[1:])


@pytest.mark.parametrize("n", [1, 2])
def test_basis_changes_are_algebra_isomorphisms(n):
    for bc in (fourier_basis(n), named_basis(n)):
        target = bc.transport()
        assert target.check_unit()
        assert target.check_associativity()
        assert bc.matrix.rank() == 8 * n
        # transporting respects products on a spot check
        src = build_hni(n)
        x, y = src.basis_element(src.basis_labels[1]), \
            src.basis_element(src.basis_labels[2])
        lhs = bc.to_target(src.mul_vectors(x.coeffs, y.coeffs))
        rhs = target.mul_vectors(bc.to_target(x.coeffs), bc.to_target(y.coeffs))
        assert all((a - b).is_zero() for a, b in zip(lhs, rhs))


def test_named_basis_labels():
    assert named_basis(1).target_labels == \
        ["e0", "e1", "E0", "E1", "F0", "F1", "C0", "C1"]
    labels2 = named_basis(2).target_labels
    assert labels2[:8] == ["e0", "e2", "E0", "E2", "F0", "F2", "P0", "P2"]
    assert labels2[8:] == ["e1", "e3", "E1", "E3", "F1", "F3", "P1", "P3"]


def test_named_basis_idempotents_and_nilpotents():
    algebra = named_basis(1).transport()
    e0 = algebra.basis_element("e0")
    e1 = algebra.basis_element("e1")
    assert e0 * e0 == e0
    assert e1 * e1 == e1
    assert (e0 * e1).is_zero()
    assert (e0 + e1) == algebra.unit_element()
    for l in ("E0", "E1", "F0", "F1", "C0", "C1"):
        x = algebra.basis_element(l)
        assert (x * x).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_casimir_is_central(n):
    algebra = build_hni(n)
    assert is_central(algebra, algebra.element(casimir_vector(n)))


def test_center_check_report():
    report = center_check(1)
    assert all(report["pre_quotient_central"].values())
    assert report["K2_central"] and report["casimir_central"]
