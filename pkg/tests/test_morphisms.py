"""Automorphism, idempotent, and star families of H_1^i (fast spot checks).

The large seeded property sweeps run in the acceptance suite; here each
family is exercised with a handful of samples plus targeted algebraic facts.
"""

import random

import pytest

from hni import morphisms as M


def _no_fail(checks):
    bad = [c for c in checks if c["status"] == "fail"]
    assert not bad, bad


def test_flip_is_an_involutive_automorphism():
    kappa = M.flip()
    ok, witness = M.is_algebra_automorphism(kappa)
    assert ok, witness
    assert kappa @ kappa == kappa.power(2)
    _no_fail(M.flip_report())


def test_idempotent_family_members_square_to_themselves():
    rng = random.Random(7)
    for _ in range(25):
        kind = rng.randrange(2)
        params = [M._random_scalar(rng) for _ in range(4)]
        vec = M.idempotent_element(kind, *params)
        assert M.is_idempotent(vec)
        assert M.lambda_rank(vec) == 4


def test_idempotent_printed_sign_variant_fails():
    # with (C1 - C0) in place of (C0 - C1) the element is not idempotent
    checks = M.idempotent_report(samples=10, seed=0)
    _no_fail(checks)
    assert any(c["status"] == "paper-mismatch" and "C1 - C0" in c["name"] + c["detail"]
               for c in checks)


def test_automorphism_constraints_accept_and_reject():
    p = M.make_params("I", mu0=1, tau0=1, mu1=1, nu1=0, sigma1=0, tau1=1, lam=1)
    assert M.constraint_failures(p) == []
    assert M.entailed_relations_hold(p)
    m = M.automorphism_from_params(p)
    ok, witness = M.is_algebra_automorphism(m)
    assert ok, witness

    degenerate = M.make_params("I", mu0=1, tau0=1, mu1=0, nu1=0, sigma1=0, tau1=0, lam=1)
    assert M.constraint_failures(degenerate)
    with pytest.raises(ValueError):
        M.automorphism_from_params(degenerate)


def test_sampled_automorphisms_small_sweep():
    rng = random.Random(3)
    for _ in range(10):
        for kind in ("I", "II"):
            p = M.sample_params(rng, kind=kind)
            assert M.constraint_failures(p) == []
            m = M.automorphism_from_params(p)
            ok, witness = M.is_algebra_automorphism(m)
            assert ok, witness
            assert M.entailed_relations_hold(p)


def test_inner_automorphism_matches_closed_form():
    checks = M.inner_report(samples=5, seed=1)
    _no_fail(checks)
    p = M.make_invertible(a0=2, a1=1)
    inner = M.inner_automorphism(p)
    ok, witness = M.is_algebra_automorphism(inner)
    assert ok, witness
    with pytest.raises(ValueError):
        M.inner_automorphism(M.make_invertible(a0=0, a1=1))


def test_s_commuting_families():
    checks = M.s_commuting_report(samples=10, seed=0)
    _no_fail(checks)
    assert any(c["status"] == "paper-mismatch" for c in checks)


def test_star_families():
    base = M.base_star()
    assert base.is_involutive()
    assert base.is_antimultiplicative()
    assert M.is_hopf_star(base)
    checks = M.star_report(samples=10, seed=0)
    _no_fail(checks)
    with pytest.raises(ValueError):
        M.star_family("I", 2, 0, 0, 1)


def test_aggregate_report_statuses():
    checks = M.morphisms_report(samples=20, star_samples=5, seed=0)
    _no_fail(checks)
    mismatch = {c["name"] for c in checks if c["status"] == "paper-mismatch"}
    assert len(mismatch) == 4
