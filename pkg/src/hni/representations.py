"""Star operation, left-regular and adjoint representations, and trace forms."""

from fractions import Fraction

from hni import fixtures
from hni.algebra import GramMatrix, LinearMap, same_span, span_rank
from hni.cyclotomic import CyclotomicNumber, field_order
from hni.fixtures import formulas
from hni.hopf import _coproduct_sparse, build_hopf
from hni.quotient import build_hni, named_basis, pbw_indices


class StarMap:
    """An antilinear involution x -> x*, stored as matrix . conjugate."""

    def __init__(self, algebra, matrix):
        self.algebra = algebra
        self.matrix = matrix

    def apply(self, vec):
        return self.matrix.apply([c.conj() for c in vec])

    def is_involutive(self):
        dim = self.algebra.dim
        ident = LinearMap.identity(dim, self.algebra.order)
        return self.matrix @ self.matrix.conjugate() == ident

    def is_antimultiplicative(self):
        alg = self.algebra
        for i in range(alg.dim):
            a = [row[i] for row in self.matrix.entries]
            for j in range(alg.dim):
                b = [row[j] for row in self.matrix.entries]
                lhs = self.apply(alg.tensor[i][j])
                rhs = alg.mul_vectors(b, a)
                if any(not (x - y).is_zero() for x, y in zip(lhs, rhs)):
                    return False
        return True


def star_map(n, basis="pbw"):
    """The involution with E* = F, F* = E, K* = K^-1 on H_N^i.

    It fixes every idempotent e_k, and K* = K when N = 1.  On the monomial
    basis it permutes F^p K^k E^q -> F^q K^-k E^p; on the named basis it is
    obtained by transporting that permutation.
    """
    order = field_order(n)
    algebra = build_hni(n)
    labels = pbw_indices(n)
    dim = algebra.dim
    perm = LinearMap.zeros(dim, dim, order)
    one = CyclotomicNumber.one(order)
    for col, (p, k, q) in enumerate(labels):
        row = labels.index((q, (-k) % (2 * n), p))
        perm.entries[row][col] = one
    if basis == "pbw":
        return StarMap(algebra, perm)
    if basis == "named":
        bc = named_basis(n)
        matrix = bc.inverse @ perm @ bc.matrix.conjugate()
        return StarMap(bc.transport(), matrix)
    raise ValueError(f"unknown basis {basis!r}")


_ADJOINT_CACHE = {}


def adjoint_matrices(n, basis="pbw"):
    """Matrices of mu(b) x = sum b_(1) x S(b_(2)) for every basis element b."""
    key = (n, basis)
    if key in _ADJOINT_CACHE:
        return _ADJOINT_CACHE[key]
    algebra = build_hni(n)
    h = build_hopf(n)
    dim = algebra.dim
    mats = []
    for j in range(dim):
        cols = [algebra.zero_vector() for _ in range(dim)]
        for (r, s), c in _coproduct_sparse(h, j).items():
            s_vec = [h.antipode.entries[t][s] for t in range(dim)]
            for x in range(dim):
                term = algebra.mul_vectors(algebra.tensor[r][x], s_vec)
                col = cols[x]
                for t, v in enumerate(term):
                    if not v.is_zero():
                        col[t] = col[t] + c * v
        mats.append(LinearMap([[cols[x][t] for x in range(dim)] for t in range(dim)]))
    if basis == "named":
        bc = named_basis(n)
        pinv, p = bc.inverse, bc.matrix
        named_mats = []
        for i in range(dim):
            combo = LinearMap.zeros(dim, dim, algebra.order)
            for jj in range(dim):
                c = p.entries[jj][i]
                if not c.is_zero():
                    combo = combo + mats[jj].scale(c)
            named_mats.append(pinv @ combo @ p)
        mats = named_mats
        algebra = bc.transport()
    elif basis != "pbw":
        raise ValueError(f"unknown basis {basis!r}")
    _ADJOINT_CACHE[key] = (algebra, mats)
    return algebra, mats


def adjoint_of_vector(n, vec, basis="pbw"):
    algebra, mats = adjoint_matrices(n, basis)
    acc = LinearMap.zeros(algebra.dim, algebra.dim, algebra.order)
    for j, c in enumerate(vec):
        if not c.is_zero():
            acc = acc + mats[j].scale(c)
    return acc


def adjoint_is_multiplicative(n, basis="pbw"):
    """Check mu(b_i b_j) = mu(b_i) mu(b_j) on all basis pairs."""
    algebra, mats = adjoint_matrices(n, basis)
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            prod = adjoint_of_vector(n, algebra.tensor[i][j], basis)
            if prod != mats[i] @ mats[j]:
                return False
    return True


def adjoint_trace_vector(n, basis="pbw"):
    _, mats = adjoint_matrices(n, basis)
    return [m.trace() for m in mats]


def _trace_form(algebra, trace_vec, star, scale):
    dim = algebra.dim
    entries = []
    star_cols = [[row[i] for row in star.matrix.entries] for i in range(dim)]
    for i in range(dim):
        row = []
        for j in range(dim):
            ej = algebra.zero_vector()
            ej[j] = CyclotomicNumber.one(algebra.order)
            prod = algebra.mul_vectors(star_cols[i], ej)
            acc = CyclotomicNumber.zero(algebra.order)
            for k, c in enumerate(prod):
                if not c.is_zero():
                    acc = acc + c * trace_vec[k]
            row.append(acc * scale)
        entries.append(row)
    return GramMatrix(entries)


def gram_lambda(n, basis="pbw"):
    """<a, b> = Tr lambda(a* b) with lambda the left regular representation."""
    star = star_map(n, basis)
    return _trace_form(star.algebra, star.algebra.trace_vector(), star, Fraction(1))


def gram_mu(n, basis="pbw", scale=Fraction(1, 4)):
    """<a, b> = scale * Tr mu(a* b) with mu the adjoint representation."""
    star = star_map(n, basis)
    return _trace_form(star.algebra, adjoint_trace_vector(n, basis), star, scale)


def _vec_str(labels, vec):
    parts = [f"{c} {lab}" for lab, c in zip(labels, vec) if not c.is_zero()]
    return " + ".join(parts) if parts else "0"


def _record(checks, name, computed, expected, labels):
    ok = all((x - y).is_zero() for x, y in zip(computed, expected))
    checks.append(
        {
            "name": name,
            "status": "pass" if ok else "paper-mismatch",
            "detail": None
            if ok
            else f"computed {_vec_str(labels, computed)}; printed {_vec_str(labels, expected)}",
        }
    )


def compare_adjoint_h1():
    """Diff the computed N=1 adjoint action, trace, and form against the printed tables."""
    data = fixtures.load("adjoint")
    algebra, mats = adjoint_matrices(1, "named")
    labels = algebra.basis_labels
    order = algebra.order
    checks = []
    table = data["mu_table_h1"]
    for i, a in enumerate(table["basis"]):
        for j, x in enumerate(table["basis"]):
            computed = [mats[i].entries[r][j] for r in range(algebra.dim)]
            expected = fixtures.sparse_vector(table["rows"][a][x], labels, order)
            _record(checks, f"mu({a}){x}", computed, expected, labels)
    trace = adjoint_trace_vector(1, "named")
    expected_trace = [fixtures.scalar(v, order) for v in data["trace_mu_h1"]["values"]]
    _record(checks, "Tr_mu table (N=1)", trace, expected_trace, labels)
    gram = gram_mu(1, "named")
    expected_gram = _gram_from_fixture(data["gram_mu_h1"], order)
    ok = gram.matrix() == expected_gram
    checks.append(
        {
            "name": "mu-form table (N=1)",
            "status": "pass" if ok else "paper-mismatch",
            "detail": None if ok else "computed (1/4)Tr_mu(a*b) differs from the printed table",
        }
    )
    return checks


def _gram_from_fixture(fixture, order):
    basis = fixture["basis"]
    dim = len(basis)
    mat = LinearMap.zeros(dim, dim, order)
    for key, val in fixture["nonzero"].items():
        a, b = key.split(",")
        mat.entries[basis.index(a)][basis.index(b)] = fixtures.scalar(val, order)
    return mat


def _family(label):
    return label[0], int(label[1:])


def compare_adjoint_h2():
    """Diff the computed N=2 adjoint action against every printed table and formula."""
    data = fixtures.load("adjoint")
    algebra, mats = adjoint_matrices(2, "named")
    labels = algebra.basis_labels
    order = algebra.order
    checks = []

    def column(i, j):
        return [mats[i].entries[r][j] for r in range(algebra.dim)]

    # Printed block tables (rows a in the even block).
    for part in ("mu_table_h2_even", "mu_table_h2_odd"):
        table = data[part]
        for a in table["row_basis"]:
            for x in table["col_basis"]:
                computed = column(labels.index(a), labels.index(x))
                expected = fixtures.sparse_vector(table["rows"][a][x], labels, order)
                _record(checks, f"mu({a}){x}", computed, expected, labels)

    # Vanishing of mu on the odd block.
    odd = [lab for lab in labels if int(lab[1:]) % 2 == 1]
    vanish = all(mats[labels.index(lab)].is_zero() for lab in odd)
    checks.append(
        {
            "name": "mu vanishes on the odd block",
            "status": "pass" if vanish else "fail",
            "detail": None,
        }
    )

    # Generic formulas on the idempotent basis.
    for a in labels:
        fam_a, m = _family(a)
        for x in labels:
            fam_x, j = _family(x)
            expected = algebra.zero_vector()
            for lab, c in formulas.adjoint_on_idempotent_basis(fam_a, m, fam_x, j).items():
                expected[labels.index(lab)] = c
            computed = column(labels.index(a), labels.index(x))
            _record(checks, f"generic mu({a}){x}", computed, expected, labels)

    # Generator-level formulas mu(E), mu(F), mu(EF).
    e_vec = algebra.zero_vector()
    f_vec = algebra.zero_vector()
    for k in range(4):
        e_vec[labels.index(f"E{k}")] = CyclotomicNumber.one(order)
        f_vec[labels.index(f"F{k}")] = CyclotomicNumber.one(order)
    named_vecs = {"E": e_vec, "F": f_vec}
    gen_mats = {
        "E": adjoint_of_vector(2, e_vec, "named"),
        "F": adjoint_of_vector(2, f_vec, "named"),
    }
    gen_mats["EF"] = gen_mats["E"] @ gen_mats["F"]
    for gen in ("E", "F", "EF"):
        for x in labels:
            fam_x, j = _family(x)
            if gen == "EF":
                printed = formulas.adjoint_of_ef(fam_x, j)
            else:
                printed = formulas.adjoint_of_generator(gen, fam_x, j)
            expected = algebra.zero_vector()
            for lab, c in printed.items():
                expected[labels.index(lab)] = c
            computed = [gen_mats[gen].entries[r][labels.index(x)] for r in range(algebra.dim)]
            _record(checks, f"generator mu({gen}){x}", computed, expected, labels)

    # Trace and form tables.
    trace = adjoint_trace_vector(2, "named")
    expected_trace = [fixtures.scalar(v, order) for v in data["trace_mu_h2"]["values"]]
    _record(checks, "Tr_mu table (N=2)", trace, expected_trace, labels)
    gram = gram_mu(2, "named")
    expected_gram = _gram_from_fixture(data["gram_mu_h2"], order)
    ok = gram.matrix() == expected_gram
    checks.append(
        {
            "name": "mu-form table (N=2)",
            "status": "pass" if ok else "paper-mismatch",
            "detail": None if ok else "computed (1/4)Tr_mu(a*b) differs from the printed table",
        }
    )

    # Null space of the mu-form: nilpotent part of the even block plus the odd block.
    kernel = gram.kernel()
    claimed = []
    for lab in ("E0", "E2", "F0", "F2", "P0", "P2") + tuple(odd):
        v = algebra.zero_vector()
        v[labels.index(lab)] = CyclotomicNumber.one(order)
        claimed.append(v)
    ok = len(kernel) == 14 and same_span(kernel, claimed)
    checks.append(
        {
            "name": "mu-form null space = even nilpotents + odd block (dim 14)",
            "status": "pass" if ok else "fail",
            "detail": f"kernel dimension {len(kernel)}",
        }
    )
    return checks


def _fixture_gram(fixture, order):
    return GramMatrix(
        [
            [
                fixtures.scalar(v if isinstance(v, (list, dict)) else [v, 1], order)
                for v in row
            ]
            for row in fixture["entries"]
        ]
    )


def lambda_form_h1_report():
    """Checks for the trace form Tr lambda(a* b) on H_1^i."""
    gram = gram_lambda(1, "named")
    algebra = star_map(1, "named").algebra
    labels = algebra.basis_labels
    checks = []
    sig = gram.signature().as_tuple()
    checks.append(
        {
            "name": "H1 lambda-form signature (2,6,0)",
            "status": "pass" if sig == (2, 6, 0) else "fail",
            "detail": f"computed signature {sig}",
        }
    )
    kernel = gram.kernel()
    nil = []
    for lab in ("E0", "E1", "F0", "F1", "C0", "C1"):
        v = algebra.zero_vector()
        v[labels.index(lab)] = CyclotomicNumber.one(algebra.order)
        nil.append(v)
    ok = len(kernel) == 6 and same_span(kernel, nil)
    checks.append(
        {
            "name": "H1 lambda-form null space = nilradical span",
            "status": "pass" if ok else "fail",
            "detail": f"kernel dimension {len(kernel)}",
        }
    )
    return checks


def lambda_form_h2_report():
    """Checks for the lambda trace form of H_2^i, diffed against the printed odd-block tables."""
    data = fixtures.load("tables")
    gram = gram_lambda(2, "named")
    algebra = star_map(2, "named").algebra
    labels = algebra.basis_labels
    order = algebra.order
    checks = []

    ok = all(
        gram.entries[i][j].is_zero() for i in range(8) for j in range(8, 16)
    )
    checks.append(
        {
            "name": "even/odd blocks lambda-orthogonal",
            "status": "pass" if ok else "fail",
            "detail": None,
        }
    )

    odd_labels = data["trace_lambda_h2_odd"]["basis"]
    trace = algebra.trace_vector()
    computed_trace = [trace[labels.index(lab)] for lab in odd_labels]
    printed_trace = [
        fixtures.scalar(v, order) for v in data["trace_lambda_h2_odd"]["values"]
    ]
    _record(
        checks, "Tr_lambda on the odd block", computed_trace, printed_trace, odd_labels
    )

    idx = [labels.index(lab) for lab in odd_labels]
    computed_odd = GramMatrix([[gram.entries[i][j] for j in idx] for i in idx])
    printed_odd = _fixture_gram(data["gram_lambda_h2_odd"], order)
    ok = computed_odd.matrix() == printed_odd.matrix()
    computed_sig = computed_odd.signature().as_tuple()
    checks.append(
        {
            "name": "odd-block lambda Gram table",
            "status": "pass" if ok else "paper-mismatch",
            "detail": None
            if ok
            else (
                "computed Tr lambda(a*b) is nondegenerate on the semisimple odd "
                f"block with signature {computed_sig}; the printed table is not a "
                "representation trace form (its functional is non-tracial)"
            ),
        }
    )

    # Internal claims about the printed table itself.
    sig = printed_odd.signature().as_tuple()
    checks.append(
        {
            "name": "printed odd Gram has signature (3,4,1)",
            "status": "pass" if sig == (3, 4, 1) else "fail",
            "detail": f"signature of the printed table {sig}",
        }
    )

    def vec(*pairs):
        v = [CyclotomicNumber.zero(order) for _ in odd_labels]
        for lab, sc in pairs:
            v[odd_labels.index(lab)] = CyclotomicNumber.from_rational(
                Fraction(sc), order
            )
        return v

    half = Fraction(1, 2)
    trio = [
        vec(("e1", half), ("P1", -half)),
        vec(("e3", half), ("P3", half)),
        vec(("F1", 1)),
    ]
    sub = printed_odd.restrict(trio)
    ok = sub.matrix() == LinearMap.identity(3, order)
    checks.append(
        {
            "name": "printed table: (e1-P1)/2, (e3+P3)/2, F1 orthonormal",
            "status": "pass" if ok else "fail",
            "detail": None,
        }
    )
    f3 = printed_odd.restrict([vec(("F3", 1))]).entries[0][0]
    ok = f3 == CyclotomicNumber.from_rational(Fraction(-1), order)
    checks.append(
        {
            "name": "printed table: <F3,F3> = -1",
            "status": "pass" if ok else "fail",
            "detail": f"value {f3}",
        }
    )
    null_claim = [
        vec(("e1", half), ("P1", half)),
        vec(("e3", half), ("P3", -half)),
        vec(("E1", 1)),
        vec(("E3", 1)),
    ]
    kernel = printed_odd.kernel()
    ok = len(kernel) == 4 and same_span(kernel, null_claim)
    checks.append(
        {
            "name": "printed table: null space spanned by (e1+P1)/2, (e3-P3)/2, E1, E3",
            "status": "pass" if ok else "fail",
            "detail": f"kernel dimension {len(kernel)}",
        }
    )
    return checks
