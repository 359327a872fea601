"""Hopf structure of H_N^i: coproduct, counit, antipode, axiom checks.

The three maps are assembled from their generator-level definitions
(Delta(K) = K (x) K, Delta(E) = E (x) 1 + K (x) E, Delta(F) = F (x) K^-1 + 1 (x) F,
 eps(K) = 1, eps(E) = eps(F) = 0, S(K) = K^-1, S(E) = -K^-1 E, S(F) = -F K)
and verified as exact matrix identities.  Tensor-square coordinates use
row-major Kronecker indexing (i, j) -> i*dim + j.
"""

from dataclasses import dataclass
from fractions import Fraction

from hni.cyclotomic import CyclotomicNumber, field_order
from hni.algebra import LinearMap
from hni import fixtures
from hni.quotient import (
    BasisChange,
    build_hni,
    named_basis,
    normal_form,
    pbw_indices,
    u_gen,
    u_mul,
    u_scale,
    u_sub,
)


@dataclass
class HopfStructure:
    algebra: object
    coproduct: LinearMap  # dim^2 x dim
    counit: LinearMap  # 1 x dim
    antipode: LinearMap  # dim x dim

    @property
    def dim(self):
        return self.algebra.dim


def _tensor_mul(a, b, algebra):
    """Product of sparse tensors {(i, j): c} in A (x) A (componentwise)."""
    out = {}
    zero = CyclotomicNumber.zero(algebra.order)
    dim = algebra.dim

    def basis_vec(t):
        v = [zero] * dim
        v[t] = CyclotomicNumber.one(algebra.order)
        return v

    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            left = algebra.tensor[i1][i2]
            right = algebra.tensor[j1][j2]
            c = c1 * c2
            for li, lv in enumerate(left):
                if lv.is_zero():
                    continue
                clv = c * lv
                for ri, rv in enumerate(right):
                    if rv.is_zero():
                        continue
                    key = (li, ri)
                    out[key] = out.get(key, zero) + clv * rv
    return {k: v for k, v in out.items() if not v.is_zero()}


def _vec_to_sparse(vec):
    return {t: c for t, c in enumerate(vec) if not c.is_zero()}


def _tensor_of_vectors(u, v, order):
    zero = CyclotomicNumber.zero(order)
    out = {}
    for i, a in enumerate(u):
        if a.is_zero():
            continue
        for j, b in enumerate(v):
            if b.is_zero():
                continue
            out[(i, j)] = a * b
    return out


_HOPF_CACHE = {}


def build_hopf(n):
    """Delta, eps, S of H_N^i as exact matrices over the PBW basis."""
    if n in _HOPF_CACHE:
        return _HOPF_CACHE[n]
    algebra = build_hni(n)
    order = algebra.order
    dim = algebra.dim
    zero = CyclotomicNumber.zero(order)
    one = CyclotomicNumber.one(order)
    idx = pbw_indices(n)
    pos = {key: t for t, key in enumerate(idx)}

    def vec_of(word):
        return normal_form(word, n)

    k_vec = vec_of(["K"])
    kinv_vec = vec_of(["Kinv"])
    e_vec = vec_of(["E"])
    f_vec = vec_of(["F"])
    unit_vec = list(algebra.unit)

    # generator coproducts as sparse tensors over the PBW basis
    d_one = _tensor_of_vectors(unit_vec, unit_vec, order)
    d_k = _tensor_of_vectors(k_vec, k_vec, order)
    d_e = {
        **_tensor_of_vectors(e_vec, unit_vec, order),
    }
    for key, c in _tensor_of_vectors(k_vec, e_vec, order).items():
        d_e[key] = d_e.get(key, zero) + c
    d_f = _tensor_of_vectors(f_vec, kinv_vec, order)
    for key, c in _tensor_of_vectors(unit_vec, f_vec, order).items():
        d_f[key] = d_f.get(key, zero) + c

    s_e = algebra.mul_vectors([-c for c in kinv_vec], e_vec)
    s_f = algebra.mul_vectors([-c for c in f_vec], k_vec)

    cop_cols = []
    cnt_row = []
    ant_cols = []
    for p, k, q in idx:
        # coproduct: Delta(F)^p Delta(K)^k Delta(E)^q
        t = d_one
        for _ in range(p):
            t = _tensor_mul(t, d_f, algebra)
        for _ in range(k):
            t = _tensor_mul(t, d_k, algebra)
        for _ in range(q):
            t = _tensor_mul(t, d_e, algebra)
        col = [zero] * (dim * dim)
        for (i, j), c in t.items():
            col[i * dim + j] = c
        cop_cols.append(col)
        # counit: multiplicative, eps(E) = eps(F) = 0, eps(K) = 1
        cnt_row.append(one if (p == 0 and q == 0) else zero)
        # antipode: anti-multiplicative, S(F^p K^k E^q) = S(E)^q S(K)^k S(F)^p
        v = unit_vec
        for _ in range(q):
            v = algebra.mul_vectors(v, s_e)
        for _ in range(k):
            v = algebra.mul_vectors(v, kinv_vec)
        for _ in range(p):
            v = algebra.mul_vectors(v, s_f)
        ant_cols.append(v)

    coproduct = LinearMap([[cop_cols[j][r] for j in range(dim)] for r in range(dim * dim)])
    counit = LinearMap([cnt_row])
    antipode = LinearMap([[ant_cols[j][r] for j in range(dim)] for r in range(dim)])
    h = HopfStructure(algebra, coproduct, counit, antipode)
    _HOPF_CACHE[n] = h
    return h


def _coproduct_sparse(h, j):
    dim = h.dim
    out = {}
    for r in range(dim * dim):
        c = h.coproduct.entries[r][j]
        if not c.is_zero():
            out[(r // dim, r % dim)] = c
    return out


def verify_hopf_axioms(h):
    """Coassociativity, counit and antipode axioms, and (anti)multiplicativity."""
    algebra = h.algebra
    dim = h.dim
    order = algebra.order
    zero = CyclotomicNumber.zero(order)
    checks = []

    def record(name, ok, witness=None):
        checks.append({"name": name, "status": "pass" if ok else "fail", "witness": witness})

    # coassociativity and counit/antipode axioms per basis element
    coassoc_ok, coassoc_w = True, None
    counit_ok, counit_w = True, None
    antipode_ok, antipode_w = True, None
    for j in range(dim):
        d = _coproduct_sparse(h, j)
        # (Delta (x) id) Delta vs (id (x) Delta) Delta as sparse triple tensors
        left, right = {}, {}
        for (r, s), c in d.items():
            dr = _coproduct_sparse(h, r)
            for (a, b), c2 in dr.items():
                key = (a, b, s)
                left[key] = left.get(key, zero) + c * c2
            ds = _coproduct_sparse(h, s)
            for (a, b), c2 in ds.items():
                key = (r, a, b)
                right[key] = right.get(key, zero) + c * c2
        keys = set(left) | set(right)
        if any(not (left.get(k, zero) - right.get(k, zero)).is_zero() for k in keys):
            coassoc_ok, coassoc_w = False, algebra.basis_labels[j]
        # counit axiom
        lvec = [zero] * dim
        rvec = [zero] * dim
        for (r, s), c in d.items():
            lvec[s] = lvec[s] + c * h.counit.entries[0][r]
            rvec[r] = rvec[r] + c * h.counit.entries[0][s]
        ej = [zero] * dim
        ej[j] = CyclotomicNumber.one(order)
        if lvec != ej or rvec != ej:
            counit_ok, counit_w = False, algebra.basis_labels[j]
        # antipode axiom: m(S (x) id)Delta = eta eps = m(id (x) S)Delta
        sleft = [zero] * dim
        sright = [zero] * dim
        for (r, s), c in d.items():
            sr = [h.antipode.entries[t][r] for t in range(dim)]
            ss = [h.antipode.entries[t][s] for t in range(dim)]
            es = [zero] * dim
            es[s] = CyclotomicNumber.one(order)
            er = [zero] * dim
            er[r] = CyclotomicNumber.one(order)
            v1 = algebra.mul_vectors(sr, es)
            v2 = algebra.mul_vectors(er, ss)
            sleft = [a + c * b for a, b in zip(sleft, v1)]
            sright = [a + c * b for a, b in zip(sright, v2)]
        target = [c * h.counit.entries[0][j] for c in algebra.unit]
        if sleft != target or sright != target:
            antipode_ok, antipode_w = False, algebra.basis_labels[j]
    record("coassociativity", coassoc_ok, coassoc_w)
    record("counit-axiom", counit_ok, counit_w)
    record("antipode-axiom", antipode_ok, antipode_w)

    # Delta multiplicative, eps multiplicative, S anti-multiplicative on basis pairs
    mult_ok, mult_w = True, None
    eps_ok, eps_w = True, None
    anti_ok, anti_w = True, None
    sparse = [_coproduct_sparse(h, j) for j in range(dim)]
    for i in range(dim):
        for j in range(dim):
            prod = algebra.tensor[i][j]
            d_prod = {}
            for t, c in enumerate(prod):
                if not c.is_zero():
                    for key, c2 in sparse[t].items():
                        d_prod[key] = d_prod.get(key, zero) + c * c2
            d_ij = _tensor_mul(sparse[i], sparse[j], algebra)
            keys = set(d_prod) | set(d_ij)
            if any(not (d_prod.get(k, zero) - d_ij.get(k, zero)).is_zero() for k in keys):
                mult_ok, mult_w = False, (algebra.basis_labels[i], algebra.basis_labels[j])
            eps_prod = zero
            for t, c in enumerate(prod):
                eps_prod = eps_prod + c * h.counit.entries[0][t]
            if eps_prod != h.counit.entries[0][i] * h.counit.entries[0][j]:
                eps_ok, eps_w = False, (algebra.basis_labels[i], algebra.basis_labels[j])
            s_prod = [zero] * dim
            for t, c in enumerate(prod):
                if not c.is_zero():
                    for r in range(dim):
                        s_prod[r] = s_prod[r] + c * h.antipode.entries[r][t]
            si = [h.antipode.entries[t][i] for t in range(dim)]
            sj = [h.antipode.entries[t][j] for t in range(dim)]
            if s_prod != algebra.mul_vectors(sj, si):
                anti_ok, anti_w = False, (algebra.basis_labels[i], algebra.basis_labels[j])
    record("coproduct-multiplicative", mult_ok, mult_w)
    record("counit-multiplicative", eps_ok, eps_w)
    record("antipode-antimultiplicative", anti_ok, anti_w)
    return checks


def verify_hopf_ideal(n):
    """Eq-level Hopf-ideal identities for E^2, F^2, K^{2N}-1 in U_i(sl2) itself."""
    order = field_order(n)
    one = u_gen("1", order)
    e = u_gen("E", order)
    f = u_gen("F", order)

    def t_mul(a, b):
        out = {}
        for (m1, m2), c1 in a.items():
            for (m3, m4), c2 in b.items():
                left = u_mul({m1: CyclotomicNumber.one(order)}, {m3: CyclotomicNumber.one(order)}, order)
                right = u_mul({m2: CyclotomicNumber.one(order)}, {m4: CyclotomicNumber.one(order)}, order)
                for k1, v1 in left.items():
                    for k2, v2 in right.items():
                        key = (k1, k2)
                        out[key] = out.get(key, CyclotomicNumber.zero(order)) + c1 * c2 * v1 * v2
        return {k: v for k, v in out.items() if not v.is_zero()}

    def t_of(a, b):
        out = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                out[(k1, k2)] = v1 * v2
        return out

    def t_sub(a, b):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, CyclotomicNumber.zero(order)) - v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def t_add(a, b):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, CyclotomicNumber.zero(order)) + v
        return {k: v for k, v in out.items() if not v.is_zero()}

    kpow = lambda m: u_gen("K", order, m) if m else dict(one)
    e2 = u_mul(e, e, order)
    f2 = u_mul(f, f, order)
    k2n_minus_1 = u_sub(kpow(2 * n), one, order)

    d_k = t_of(kpow(1), kpow(1))
    d_e = t_add(t_of(e, one), t_of(kpow(1), e))
    d_f = t_add(t_of(f, kpow(-1)), t_of(one, f))
    d_e2 = t_mul(d_e, d_e)
    d_f2 = t_mul(d_f, d_f)
    d_k2n = d_k
    for _ in range(2 * n - 1):
        d_k2n = t_mul(d_k2n, d_k)

    checks = []

    def record(name, computed, expected):
        checks.append({"name": name, "status": "pass" if not t_sub(computed, expected) else "fail"})

    record("Delta(E^2) = E^2 (x) 1 + K^2 (x) E^2", d_e2, t_add(t_of(e2, one), t_of(kpow(2), e2)))
    record("Delta(F^2) = F^2 (x) K^-2 + 1 (x) F^2", d_f2, t_add(t_of(f2, kpow(-2)), t_of(one, f2)))
    record(
        "Delta(K^2N - 1) = K^2N (x) (K^2N - 1) + (K^2N - 1) (x) 1",
        t_sub(d_k2n, t_of(one, one)),
        t_add(t_of(kpow(2 * n), k2n_minus_1), t_of(k2n_minus_1, one)),
    )

    # counit: eps is multiplicative with eps(K^m) = 1, eps(E) = eps(F) = 0
    def eps(a):
        acc = CyclotomicNumber.zero(order)
        for (p, m, q), c in a.items():
            if p == 0 and q == 0:
                acc = acc + c
        return acc

    checks.append({"name": "eps(E^2) = 0", "status": "pass" if eps(e2).is_zero() else "fail"})
    checks.append({"name": "eps(F^2) = 0", "status": "pass" if eps(f2).is_zero() else "fail"})
    checks.append({"name": "eps(K^2N - 1) = 0", "status": "pass" if eps(k2n_minus_1).is_zero() else "fail"})

    # antipode: anti-multiplicative from the generator images
    s_e = u_scale(u_mul(kpow(-1), e, order), -1)
    s_f = u_scale(u_mul(f, kpow(1), order), -1)
    s_e2 = u_mul(s_e, s_e, order)
    s_f2 = u_mul(s_f, s_f, order)
    s_k2n_minus_1 = u_sub(kpow(-2 * n), one, order)
    record_u = lambda name, a, b: checks.append(
        {"name": name, "status": "pass" if not u_sub(a, b, order) else "fail"}
    )
    record_u("S(E^2) = -K^-2 E^2", s_e2, u_scale(u_mul(kpow(-2), e2, order), -1))
    record_u("S(F^2) = -F^2 K^2", s_f2, u_scale(u_mul(f2, kpow(2), order), -1))
    # the printed identity S(K^2N - 1) = K^-2N (K^2N - 1) has the wrong sign:
    # the recomputed value is the negative (ideal membership holds either way)
    printed = u_mul(kpow(-2 * n), k2n_minus_1, order)
    if not u_sub(s_k2n_minus_1, printed, order):
        status = "pass"
    elif not u_add_is_zero(s_k2n_minus_1, printed, order):
        status = "fail"
    else:
        status = "paper-mismatch"
    checks.append(
        {
            "name": "S(K^2N - 1) = K^-2N (K^2N - 1)",
            "status": status,
            "detail": "recomputed S(K^2N - 1) = K^-2N - 1 = -K^-2N (K^2N - 1); sign differs from the printed identity"
            if status == "paper-mismatch"
            else None,
        }
    )
    return checks


def u_add_is_zero(a, b, order):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, CyclotomicNumber.zero(order)) + v
    return not {k: v for k, v in out.items() if not v.is_zero()}


def hopf_in_named_basis(n):
    """Delta, S, eps transported to the named basis of H_1^i or H_2^i."""
    h = build_hopf(n)
    bc = named_basis(n)
    p = bc.matrix
    pinv = bc.inverse
    coproduct = (pinv.kron(pinv)) @ h.coproduct @ p
    antipode = pinv @ h.antipode @ p
    counit = h.counit @ p
    return bc.target_labels, coproduct, counit, antipode


def _fixture_scalar(obj, order):
    return fixtures.scalar(obj, order)


def compare_hopf_formulas(n):
    """Diff the transported Hopf maps against the printed basis formulas.

    Ground truth is the generator-level build; entries report pass or
    paper-mismatch with the recomputed expression.
    """
    labels, coproduct, counit, antipode = hopf_in_named_basis(n)
    order = build_hni(n).order
    dim = len(labels)
    zero = CyclotomicNumber.zero(order)
    fx = fixtures.load("hopf")
    checks = []

    def tensor_str(sparse):
        terms = []
        for (a, b), c in sorted(sparse.items()):
            terms.append(f"({c}) {labels[a]}(x){labels[b]}")
        return " + ".join(terms) if terms else "0"

    def vec_str(vec):
        terms = [f"({c}) {labels[t]}" for t, c in enumerate(vec) if not c.is_zero()]
        return " + ".join(terms) if terms else "0"

    def coproduct_sparse(j):
        out = {}
        for r in range(dim * dim):
            c = coproduct.entries[r][j]
            if not c.is_zero():
                out[(r // dim, r % dim)] = c
        return out

    if n == 1:
        for label, terms in fx["coproduct-h1"].items():
            expected = {}
            for l1, l2, c in terms:
                key = (labels.index(l1), labels.index(l2))
                expected[key] = expected.get(key, zero) + _fixture_scalar(c, order)
            got = coproduct_sparse(labels.index(label))
            keys = set(expected) | set(got)
            ok = all((expected.get(k, zero) - got.get(k, zero)).is_zero() for k in keys)
            checks.append(
                {
                    "name": f"coproduct-h1 Delta({label})",
                    "status": "pass" if ok else "paper-mismatch",
                    "computed": tensor_str(got),
                }
            )
        for label, image in fx["antipode-h1"].items():
            expected = fixtures.sparse_vector(image, labels, order)
            j = labels.index(label)
            got = [antipode.entries[t][j] for t in range(dim)]
            checks.append(
                {
                    "name": f"antipode-h1 S({label})",
                    "status": "pass" if got == expected else "paper-mismatch",
                    "computed": vec_str(got),
                }
            )
        for label, val in fx["counit-h1"].items():
            expected = _fixture_scalar(val, order)
            got = counit.entries[0][labels.index(label)]
            checks.append(
                {
                    "name": f"counit-h1 eps({label})",
                    "status": "pass" if got == expected else "paper-mismatch",
                    "computed": str(got),
                }
            )
        return checks

    # N = 2: generic coproduct formulas (printed with a global 1/4), then
    # the antipode and counit tables
    i_scalar = CyclotomicNumber.i(order)

    def ipow(e):
        e %= 4
        out = CyclotomicNumber.one(order)
        for _ in range(e):
            out = out * i_scalar
        return out

    for family in ("e", "E", "F", "P"):
        for m in range(4):
            label = f"{family}{m}"
            expected = {}
            for term in fx["coproduct-h2"][family]:
                for k in range(4):
                    c = CyclotomicNumber.from_rational(Fraction(*term["scale"]), order)
                    c = c * ipow(term["ipow_m"] * m + term["ipow_k"] * k)
                    if term["negpow_k"] and k % 2 == 1:
                        c = -c
                    lf, ls = term["left"]
                    rf, rs = term["right"]
                    li = k if ls == "k" else (m - k) % 4
                    ri = k if rs == "k" else (m - k) % 4
                    key = (labels.index(f"{lf}{li}"), labels.index(f"{rf}{ri}"))
                    expected[key] = expected.get(key, zero) + c
            got = coproduct_sparse(labels.index(label))
            keys = set(expected) | set(got)
            exact = all((expected.get(k, zero) - got.get(k, zero)).is_zero() for k in keys)
            # the recomputed coproduct is exactly 4x the printed formula
            four = CyclotomicNumber.from_rational(4, order)
            up_to_prefactor = all(
                (expected.get(k, zero) * four - got.get(k, zero)).is_zero() for k in keys
            )
            if exact:
                status = "pass"
            elif up_to_prefactor:
                status = "paper-mismatch"
            else:
                status = "fail"
            checks.append(
                {
                    "name": f"coproduct-h2 Delta({label})",
                    "status": status,
                    "detail": "printed global prefactor 1/4; recomputed coproduct is 4x the printed formula"
                    if status == "paper-mismatch"
                    else None,
                    "computed": tensor_str(got),
                }
            )
    for label, image in fx["antipode-h2"].items():
        expected = fixtures.sparse_vector(image, labels, order)
        j = labels.index(label)
        got = [antipode.entries[t][j] for t in range(dim)]
        status = "pass" if got == expected else "paper-mismatch"
        detail = None
        if status == "paper-mismatch":
            # known typo: the printed delta-correction terms of S(P_m) carry
            # the wrong sign (the printed proof expands FE = EF - e1 + e3)
            flipped = [
                -c if labels[t] in ("e1", "e3") else c for t, c in enumerate(expected)
            ]
            if got == flipped:
                detail = "printed correction term has the opposite sign; recomputed value shown"
        checks.append(
            {
                "name": f"antipode-h2 S({label})",
                "status": status,
                "detail": detail,
                "computed": vec_str(got),
            }
        )
    for label, val in fx["counit-h2"].items():
        expected = _fixture_scalar(val, order)
        got = counit.entries[0][labels.index(label)]
        checks.append(
            {
                "name": f"counit-h2 eps({label})",
                "status": "pass" if got == expected else "paper-mismatch",
                "computed": str(got),
            }
        )
    return checks


def antipode_order(h, cap=64):
    s = h.antipode
    power = s
    for k in range(1, cap + 1):
        if power == LinearMap.identity(h.dim, h.algebra.order):
            return k
        power = power @ s
    raise ValueError(f"antipode order exceeds {cap}")


def antipode_spectrum(n):
    """Exact eigenvalues of S with eigenspace bases.

    Candidate eigenvalues are the roots of unity whose order divides ord(S),
    tested by exact kernel computation in a field containing them.
    """
    h = build_hopf(n)
    ord_s = antipode_order(h)
    m0 = h.algebra.order
    from math import gcd

    m = m0 * ord_s // gcd(m0, ord_s)
    if m % 4:
        m *= 4 // gcd(m, 4)
    dim = h.dim
    s = LinearMap([[e.promote(m) for e in row] for row in h.antipode.entries])
    eigen = {}
    total = 0
    for j in range(ord_s):
        zeta = CyclotomicNumber.root(m, (m // ord_s) * j)
        shifted = LinearMap(
            [
                [s.entries[r][c] - (zeta if r == c else CyclotomicNumber.zero(m)) for c in range(dim)]
                for r in range(dim)
            ]
        )
        kern = shifted.kernel()
        if kern:
            eigen[j] = {"eigenvalue": zeta, "eigenvectors": kern}
            total += len(kern)
    return {"order": ord_s, "eigenspaces": eigen, "total_multiplicity": total, "field_order": m}
