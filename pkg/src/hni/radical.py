"""Nilradical, semisimple quotient, model-isomorphism probes, and the conjecture probe."""

import json
from dataclasses import dataclass
from fractions import Fraction

from hni.algebra import LinearMap, StructureConstants, in_span, same_span
from hni.cyclotomic import CyclotomicNumber, field_order
from hni.quotient import build_hni, named_basis
from hni.representations import gram_lambda, gram_mu


def trace_pairing(algebra):
    """The bilinear form (x, y) -> Tr lambda(xy) as a matrix."""
    trace = algebra.trace_vector()
    dim = algebra.dim
    entries = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc = CyclotomicNumber.zero(algebra.order)
            for k, c in enumerate(algebra.tensor[i][j]):
                if not c.is_zero():
                    acc = acc + c * trace[k]
            row.append(acc)
        entries.append(row)
    return LinearMap(entries)


def nilradical(algebra):
    """Radical basis via the characteristic-zero trace criterion.

    rad(A) is the kernel of (x, y) -> Tr lambda(xy); the result is verified
    to be a two-sided nilpotent ideal.
    """
    basis = trace_pairing(algebra).kernel()
    if not _is_ideal(algebra, basis):
        raise AssertionError("radical candidate is not a two-sided ideal")
    if not _is_nilpotent_ideal(algebra, basis):
        raise AssertionError("radical candidate is not nilpotent")
    return basis


def _is_ideal(algebra, basis):
    dim = algebra.dim
    for r in basis:
        for i in range(dim):
            ei = algebra.zero_vector()
            ei[i] = CyclotomicNumber.one(algebra.order)
            for prod in (algebra.mul_vectors(ei, r), algebra.mul_vectors(r, ei)):
                if any(not c.is_zero() for c in prod) and not in_span(prod, basis):
                    return False
    return True


def _is_nilpotent_ideal(algebra, basis):
    current = list(basis)
    for _ in range(algebra.dim + 1):
        if not current:
            return True
        nxt = []
        for x in current:
            for r in basis:
                prod = algebra.mul_vectors(x, r)
                if any(not c.is_zero() for c in prod):
                    nxt.append(prod)
        # reduce to an independent spanning set
        reduced = []
        for v in nxt:
            if not in_span(v, reduced):
                reduced.append(v)
        if len(reduced) >= len(current) and same_span(reduced, current):
            return False
        current = reduced
    return not current


def _complement_indices(algebra, basis):
    """Standard basis indices completing the given vectors to the whole space."""
    chosen = list(basis)
    indices = []
    for i in range(algebra.dim):
        ei = algebra.zero_vector()
        ei[i] = CyclotomicNumber.one(algebra.order)
        if not in_span(ei, chosen):
            chosen.append(ei)
            indices.append(i)
    return indices


def semisimple_quotient(algebra, radical_basis):
    """Structure constants of A / rad(A) on a standard-basis complement."""
    indices = _complement_indices(algebra, radical_basis)
    labels = [algebra.basis_labels[i] for i in indices]
    dim = len(indices)
    order = algebra.order
    # columns: radical vectors then complement unit vectors
    cols = list(radical_basis)
    for i in indices:
        ei = algebra.zero_vector()
        ei[i] = CyclotomicNumber.one(order)
        cols.append(ei)
    change = LinearMap(
        [[cols[j][i] for j in range(algebra.dim)] for i in range(algebra.dim)]
    ).inverse()

    def project(vec):
        full = change.apply(vec)
        return full[len(radical_basis):]

    tensor = []
    for a in range(dim):
        row = []
        ea = algebra.zero_vector()
        ea[indices[a]] = CyclotomicNumber.one(order)
        for b in range(dim):
            eb = algebra.zero_vector()
            eb[indices[b]] = CyclotomicNumber.one(order)
            row.append(project(algebra.mul_vectors(ea, eb)))
        tensor.append(row)
    unit = project(algebra.unit)
    quotient = StructureConstants(labels, tensor, unit, order)
    quotient.check_unit()
    quotient.check_associativity()
    return quotient


def h1_radical_report():
    """Nilradical of H_1^i: the stated span, with quotient C + C."""
    algebra = named_basis(1).transport()
    labels = algebra.basis_labels
    rad = nilradical(algebra)
    claimed = []
    for lab in ("E0", "E1", "F0", "F1", "C0", "C1"):
        v = algebra.zero_vector()
        v[labels.index(lab)] = CyclotomicNumber.one(algebra.order)
        claimed.append(v)
    checks = [
        {
            "name": "H1 nilradical = span{E0,E1,F0,F1,C0,C1}",
            "status": "pass" if len(rad) == 6 and same_span(rad, claimed) else "fail",
            "detail": f"radical dimension {len(rad)}",
        }
    ]
    quotient = semisimple_quotient(algebra, rad)
    ok = quotient.dim == 2 and _is_two_orthogonal_idempotents(quotient)
    checks.append(
        {
            "name": "H1 quotient is two orthogonal idempotents (C + C)",
            "status": "pass" if ok else "fail",
            "detail": f"quotient basis {quotient.basis_labels}",
        }
    )
    return checks


def _is_two_orthogonal_idempotents(quotient):
    if quotient.dim != 2:
        return False
    one = CyclotomicNumber.one(quotient.order)
    for i in range(2):
        for j in range(2):
            prod = quotient.tensor[i][j]
            want_diag = one if i == j else None
            for k, c in enumerate(prod):
                expected = want_diag if (i == j and k == i) else None
                if expected is None:
                    if not c.is_zero():
                        return False
                elif c != expected:
                    return False
    return True


def h2_radical_report():
    """Nilradical of H_2^i: six-dimensional, inside the even block."""
    algebra = named_basis(2).transport()
    labels = algebra.basis_labels
    rad = nilradical(algebra)
    claimed = []
    for lab in ("E0", "E2", "F0", "F2", "P0", "P2"):
        v = algebra.zero_vector()
        v[labels.index(lab)] = CyclotomicNumber.one(algebra.order)
        claimed.append(v)
    return [
        {
            "name": "H2 nilradical = span{E0,E2,F0,F2,P0,P2} (dim 6)",
            "status": "pass" if len(rad) == 6 and same_span(rad, claimed) else "fail",
            "detail": f"radical dimension {len(rad)}",
        }
    ]


# ---------------------------------------------------------------------------
# Model isomorphism probes


class GrassmannModel:
    """(M_2 tensor L)^+ with L = L1 tensor L1, both gradings multiplied.

    Basis elements are (l, k, g) -> matrix unit e_lk tensor the Grassmann
    monomial g in {1, E, F, EF}; the two Grassmann generators commute with
    each other (ordinary tensor product) and square to zero.
    """

    MONOMIALS = ("1", "E", "F", "EF")

    @staticmethod
    def mul_monomials(g, h):
        if g == "1":
            return h, 1
        if h == "1":
            return g, 1
        if g == "E" and h == "F":
            return "EF", 1
        if g == "F" and h == "E":
            return "EF", 1
        return None, 0

    @classmethod
    def mul(cls, a, b):
        """Multiply sparse {(l, k, g): coeff} elements."""
        out = {}
        for (l1, k1, g1), c1 in a.items():
            for (l2, k2, g2), c2 in b.items():
                if k1 != l2:
                    continue
                g, sign = cls.mul_monomials(g1, g2)
                if sign == 0:
                    continue
                key = (l1, k2, g)
                val = out.get(key)
                term = c1 * c2
                out[key] = term if val is None else val + term
        return {k: v for k, v in out.items() if not v.is_zero()}


def h1_grassmann_report():
    """Product-by-product probe of the H_1^i Grassmann-model correspondence."""
    algebra = named_basis(1).transport()
    labels = algebra.basis_labels
    order = algebra.order
    one = CyclotomicNumber.one(order)
    corrected = {
        "e0": (0, 0, "1"),
        "e1": (1, 1, "1"),
        "E0": (0, 1, "E"),
        "E1": (1, 0, "E"),
        "F0": (0, 1, "F"),
        "F1": (1, 0, "F"),
        "C0": (0, 0, "EF"),
        "C1": (1, 1, "EF"),
    }
    printed = dict(corrected, F0=(0, 0, "F"), F1=(1, 1, "F"))

    def count_matches(mapping):
        matches = 0
        for i, a in enumerate(labels):
            for j, b in enumerate(labels):
                model = GrassmannModel.mul({mapping[a]: one}, {mapping[b]: one})
                expected = {}
                for k, c in enumerate(algebra.tensor[i][j]):
                    if not c.is_zero():
                        expected[mapping[labels[k]]] = c
                if model == expected:
                    matches += 1
        return matches

    good = count_matches(corrected)
    bad = count_matches(printed)
    checks = [
        {
            "name": "H1 Grassmann model: all 64 products match (F0=e01, F1=e10 tensor F)",
            "status": "pass" if good == 64 else "fail",
            "detail": f"{good}/64 products match",
        },
        {
            "name": "printed F0=e00, F1=e11 tensor F mapping",
            "status": "paper-mismatch" if bad < 64 else "pass",
            "detail": (
                f"only {bad}/64 products match under the printed mapping; the "
                "printed images are odd in the total grading, so they cannot "
                "lie in the even part"
            ),
        },
    ]
    return checks


def _matrix_model():
    order = field_order(2)
    zero = CyclotomicNumber.zero(order)
    one = CyclotomicNumber.one(order)
    i = CyclotomicNumber.i(order)

    def mat(entries):
        m = LinearMap.zeros(4, 4, order)
        for (r, c), v in entries.items():
            m.entries[r][c] = v
        return m

    k = mat({(0, 0): -i, (1, 1): i, (2, 2): -i, (3, 3): i})
    e = mat({(0, 1): -one, (3, 2): one})
    f = mat({(1, 0): one, (2, 3): one})
    return k, e, f, order


def h2_matrix_model_report():
    """Probe of the 4x4 matrix model of the odd block of H_2^i."""
    k, e, f, order = _matrix_model()
    ident = LinearMap.identity(4, order)
    i = CyclotomicNumber.i(order)
    kinv = k.power(3)
    checks = []

    def record(name, ok):
        checks.append({"name": name, "status": "pass" if ok else "fail", "detail": None})

    record("K^4 = 1", k.power(4) == ident)
    record("K^2 = -1 (the odd-block constraint)", k.power(2) == ident.scale(-1))
    record("KE = -EK", k @ e == (e @ k).scale(-1))
    record("KF = -FK", k @ f == (f @ k).scale(-1))
    record("E^2 = 0", (e @ e).is_zero())
    record("F^2 = 0", (f @ f).is_zero())
    commutator = e @ f - f @ e
    rhs = (k - kinv).scale(
        CyclotomicNumber.from_rational(Fraction(1, 2), order) * i.inv()
    )
    record("[E,F] = (K - K^-1)/2i", commutator == rhs)

    # span of the generated algebra
    words = [ident]
    frontier = [ident]
    gens = [k, e, f]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                cand = w @ g
                flat = [c for row in cand.entries for c in row]
                if any(not c.is_zero() for c in flat):
                    basis = [[c for row in m.entries for c in row] for m in words]
                    if not in_span(flat, basis):
                        words.append(cand)
                        new.append(cand)
        frontier = new
    record("generated span has rank 8", len(words) == 8)
    return checks


# ---------------------------------------------------------------------------
# Conjecture probe


@dataclass
class RadicalReport:
    """Exact semisimplicity/positivity evidence for one H_N^i."""

    n: int
    dim_algebra: int
    dim_radical: int
    radical_basis: list
    quotient_constants: StructureConstants
    trace_kernel_dims: dict
    containment_flags: dict
    signatures: dict

    def to_json(self):
        return {
            "n": self.n,
            "dim_algebra": self.dim_algebra,
            "dim_radical": self.dim_radical,
            "radical_basis": [[c.to_json() for c in v] for v in self.radical_basis],
            "quotient_constants": self.quotient_constants.to_json(),
            "trace_kernel_dims": dict(self.trace_kernel_dims),
            "containment_flags": dict(self.containment_flags),
            "signatures": {k: list(v) for k, v in self.signatures.items()},
        }


def radical_report(n):
    """Radical, trace-form kernels, containments, and signatures for H_N^i."""
    algebra = build_hni(n)
    rad = nilradical(algebra)
    quotient = semisimple_quotient(algebra, rad)

    forms = {
        "lambda": gram_lambda(n, "pbw"),
        "mu": gram_mu(n, "pbw"),
    }
    kernel_dims = {}
    containment = {}
    signatures = {}
    complement = _complement_indices(algebra, rad)
    for name, gram in forms.items():
        kernel = gram.kernel()
        kernel_dims[name] = len(kernel)
        containment[name] = all(in_span(r, kernel) for r in rad) if kernel else not rad
        signatures[name] = gram.signature().as_tuple()
        comp_vectors = []
        for i in complement:
            v = algebra.zero_vector()
            v[i] = CyclotomicNumber.one(algebra.order)
            comp_vectors.append(v)
        signatures[name + "_on_radical_complement"] = (
            gram.restrict(comp_vectors).signature().as_tuple()
        )
    return RadicalReport(
        n=n,
        dim_algebra=algebra.dim,
        dim_radical=len(rad),
        radical_basis=rad,
        quotient_constants=quotient,
        trace_kernel_dims=kernel_dims,
        containment_flags=containment,
        signatures=signatures,
    )


def conjecture_probe(n_max):
    """Structured evidence for the semisimplicity/positivity question, N = 1..n_max."""
    reports = [radical_report(n) for n in range(1, n_max + 1)]
    return {
        "probe": "radical-vs-trace-forms",
        "n_max": n_max,
        "reports": [r.to_json() for r in reports],
    }


def conjecture_probe_json(n_max):
    return json.dumps(conjecture_probe(n_max), indent=2, sort_keys=True)
