"""Construction of H_N^i = U_i(sl2) / (E^2, F^2, K^{2N}-1).

Words in the generators K, K^-1, E, F are rewritten to the PBW normal form
F^p K^n E^q (p,q in {0,1}, n mod 2N after the quotient).  The same rewriting,
without the quotient reductions, gives exact normal forms in U_i(sl2) itself,
which is what the Hopf-ideal and centrality checks run on.
"""

from fractions import Fraction

from hni.cyclotomic import CyclotomicNumber, field_order
from hni.algebra import AlgebraElement, LinearMap, StructureConstants

# ---------------------------------------------------------------------------
# normal forms in U_i(sl2): elements are dicts {(p, n, q): CyclotomicNumber}
# meaning coeff * F^p K^n E^q with p, q >= 0 and n any integer.
# ---------------------------------------------------------------------------


def _letters(p, n, q):
    word = [("F", 1)] * p
    if n:
        word.append(("K", n))
    word += [("E", 1)] * q
    return word


def u_normal_form(word, coeff, order=4):
    """Normal form in U_i(sl2) of coeff * word.

    word is a sequence of (symbol, exponent) pairs with symbol in {K, E, F};
    E and F exponents must be 1 (expand repeats), K exponents any integer.
    Returns {(p, n, q): CyclotomicNumber}.
    """
    i = CyclotomicNumber.i(order)
    half_over_i = 1 / (2 * i)
    out = {}
    stack = [(list(word), coeff)]
    while stack:
        w, c = stack.pop()
        # merge adjacent K letters
        merged = []
        for sym, e in w:
            if merged and merged[-1][0] == "K" and sym == "K":
                merged[-1] = ("K", merged[-1][1] + e)
                if merged[-1][1] == 0:
                    merged.pop()
            else:
                merged.append((sym, e))
        w = merged
        pos = None
        for idx in range(len(w) - 1):
            a, b = w[idx], w[idx + 1]
            if a[0] == "E" and b[0] == "K":
                pos = (idx, "EK")
                break
            if a[0] == "K" and b[0] == "F":
                pos = (idx, "KF")
                break
            if a[0] == "E" and b[0] == "F":
                pos = (idx, "EF")
                break
        if pos is None:
            p = sum(1 for sym, _ in w if sym == "F")
            q = sum(1 for sym, _ in w if sym == "E")
            n = sum(e for sym, e in w if sym == "K")
            key = (p, n, q)
            out[key] = out.get(key, CyclotomicNumber.zero(order)) + c
            continue
        idx, kind = pos
        head, tail = w[:idx], w[idx + 2 :]
        if kind == "EK":
            n = w[idx + 1][1]
            sign = 1 if n % 2 == 0 else -1
            stack.append((head + [("K", n), ("E", 1)] + tail, c * sign))
        elif kind == "KF":
            n = w[idx][1]
            sign = 1 if n % 2 == 0 else -1
            stack.append((head + [("F", 1), ("K", n)] + tail, c * sign))
        else:  # EF -> FE + (1/2i)(K - K^{-1})
            stack.append((head + [("F", 1), ("E", 1)] + tail, c))
            stack.append((head + [("K", 1)] + tail, c * half_over_i))
            stack.append((head + [("K", -1)] + tail, -c * half_over_i))
    return {k: v for k, v in out.items() if not v.is_zero()}


def u_mul(a, b, order=4):
    """Product of two normal-form dicts in U_i(sl2)."""
    out = {}
    for (p1, n1, q1), c1 in a.items():
        for (p2, n2, q2), c2 in b.items():
            word = _letters(p1, n1, q1) + _letters(p2, n2, q2)
            for key, c in u_normal_form(word, c1 * c2, order).items():
                out[key] = out.get(key, CyclotomicNumber.zero(order)) + c
    return {k: v for k, v in out.items() if not v.is_zero()}


def u_scale(a, c):
    return {k: v * c for k, v in a.items() if not (v * c).is_zero()}


def u_add(a, b, order=4):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, CyclotomicNumber.zero(order)) + v
    return {k: v for k, v in out.items() if not v.is_zero()}


def u_sub(a, b, order=4):
    return u_add(a, u_scale(b, -1), order)


def u_gen(sym, order=4, exp=1):
    """Generator monomial of U_i(sl2): one of 1, K^exp, E, F."""
    if sym == "1":
        return {(0, 0, 0): CyclotomicNumber.one(order)}
    if sym == "K":
        return {(0, exp, 0): CyclotomicNumber.one(order)}
    if sym == "E":
        return {(0, 0, 1): CyclotomicNumber.one(order)}
    if sym == "F":
        return {(1, 0, 0): CyclotomicNumber.one(order)}
    raise ValueError(f"unknown generator {sym}")


def u_commutator(a, b, order=4):
    return u_sub(u_mul(a, b, order), u_mul(b, a, order), order)


# ---------------------------------------------------------------------------
# the quotient H_N^i
# ---------------------------------------------------------------------------


def pbw_indices(n):
    return [(p, k, q) for p in (0, 1) for k in range(2 * n) for q in (0, 1)]


def pbw_label(p, k, q):
    parts = []
    if p:
        parts.append("F")
    if k == 1:
        parts.append("K")
    elif k > 1:
        parts.append(f"K^{k}")
    if q:
        parts.append("E")
    return "".join(parts) if parts else "1"


def reduce_to_quotient(u_elem, n, order):
    """Project a U_i(sl2) normal form onto the PBW basis of H_N^i."""
    out = {}
    for (p, kk, q), c in u_elem.items():
        if p >= 2 or q >= 2:
            continue
        key = (p, kk % (2 * n), q)
        out[key] = out.get(key, CyclotomicNumber.zero(order)) + c
    return {k: v for k, v in out.items() if not v.is_zero()}


def normal_form(word, n, coeff=1, order=None):
    """PBW coefficients in H_N^i of coeff * word.

    word is a sequence over {"K", "Kinv", "E", "F"} (strings).
    Returns the dense coefficient vector over pbw_indices(n).
    """
    if order is None:
        order = field_order(n)
    letters = []
    for sym in word:
        if sym == "K":
            letters.append(("K", 1))
        elif sym == "Kinv":
            letters.append(("K", -1))
        elif sym in ("E", "F"):
            letters.append((sym, 1))
        else:
            raise ValueError(f"unknown letter {sym}")
    if not isinstance(coeff, CyclotomicNumber):
        coeff = CyclotomicNumber.from_rational(Fraction(coeff), order)
    nf = u_normal_form(letters, coeff, order)
    reduced = reduce_to_quotient(nf, n, order)
    idx = pbw_indices(n)
    return [reduced.get(key, CyclotomicNumber.zero(order)) for key in idx]


_HNI_CACHE = {}


def build_hni(n):
    """Structure constants of H_N^i in the PBW basis F^p K^k E^q."""
    if n in _HNI_CACHE:
        return _HNI_CACHE[n]
    order = field_order(n)
    idx = pbw_indices(n)
    labels = [pbw_label(*key) for key in idx]
    pos = {key: t for t, key in enumerate(idx)}
    zero = CyclotomicNumber.zero(order)
    tensor = []
    for key1 in idx:
        row = []
        for key2 in idx:
            word = _letters(*key1) + _letters(*key2)
            prod = reduce_to_quotient(u_normal_form(word, CyclotomicNumber.one(order), order), n, order)
            vec = [zero] * len(idx)
            for key, c in prod.items():
                vec[pos[key]] = c
            row.append(vec)
        tensor.append(row)
    unit = [zero] * len(idx)
    unit[pos[(0, 0, 0)]] = CyclotomicNumber.one(order)
    algebra = StructureConstants(labels, tensor, unit, order)
    _HNI_CACHE[n] = algebra
    return algebra


class BasisChange:
    """An invertible change of basis; matrix columns are the target basis in source coordinates."""

    def __init__(self, source, target_labels, matrix):
        self.source = source
        self.target_labels = list(target_labels)
        self.matrix = matrix
        self.inverse = matrix.inverse()

    def transport(self):
        """Structure constants in the target basis."""
        src = self.source
        dim = src.dim
        cols = [[self.matrix.entries[i][j] for i in range(dim)] for j in range(dim)]
        tensor = []
        for i in range(dim):
            row = []
            for j in range(dim):
                prod = src.mul_vectors(cols[i], cols[j])
                row.append(self.inverse.apply(prod))
            tensor.append(row)
        unit = self.inverse.apply(src.unit)
        return StructureConstants(self.target_labels, tensor, unit, src.order)

    def to_target(self, vec):
        return self.inverse.apply(vec)

    def to_source(self, vec):
        return self.matrix.apply(vec)


def root_of_unity_u(n):
    """u = e^{2 i pi / 2N} inside Q(zeta_M), M = field_order(N)."""
    m = field_order(n)
    return CyclotomicNumber.root(m, m // (2 * n))


def fourier_vector(n, k):
    """e_k = (1/2N) sum_j u^{kj} K^j as a PBW coefficient vector."""
    order = field_order(n)
    m = order
    idx = pbw_indices(n)
    pos = {key: t for t, key in enumerate(idx)}
    vec = [CyclotomicNumber.zero(order)] * len(idx)
    inv2n = Fraction(1, 2 * n)
    for j in range(2 * n):
        vec[pos[(0, j, 0)]] = CyclotomicNumber.root(m, (m // (2 * n)) * ((k * j) % (2 * n))) * inv2n
    return vec


def fourier_basis(n):
    """Basis change from the PBW basis to the basis F^p e_k E^q."""
    algebra = build_hni(n)
    order = algebra.order
    dim = algebra.dim
    targets = []
    labels = []
    e_vecs = {k: fourier_vector(n, k) for k in range(2 * n)}
    gen = {
        "E": normal_form(["E"], n),
        "F": normal_form(["F"], n),
    }
    for p in (0, 1):
        for k in range(2 * n):
            for q in (0, 1):
                vec = e_vecs[k]
                if q:
                    vec = algebra.mul_vectors(vec, gen["E"])
                if p:
                    vec = algebra.mul_vectors(gen["F"], vec)
                targets.append(vec)
                label = ("F" if p else "") + f"e{k}" + ("E" if q else "")
                labels.append(label)
    matrix = LinearMap([[targets[j][i] for j in range(dim)] for i in range(dim)])
    return BasisChange(algebra, labels, matrix)


def named_basis(n):
    """The block-diagonal named bases of H_1^i and H_2^i.

    N=1: (e0, e1, E0, E1, F0, F1, C0, C1) with X_k = e_k X, C_k = e_k E F.
    N=2: even block (e0, e2, E0, E2, F0, F2, P0, P2) then odd block
         (e1, e3, E1, E3, F1, F3, P1, P3), with P_k = e_k E F.
    """
    if n not in (1, 2):
        raise ValueError("named basis exists only for N in {1, 2}")
    algebra = build_hni(n)
    dim = algebra.dim
    e_vecs = {k: fourier_vector(n, k) for k in range(2 * n)}
    ev = normal_form(["E"], n)
    fv = normal_form(["F"], n)
    efv = algebra.mul_vectors(ev, fv)

    def block(k):
        ek = e_vecs[k]
        return [
            ek,
            algebra.mul_vectors(ek, ev),
            algebra.mul_vectors(ek, fv),
            algebra.mul_vectors(ek, efv),
        ]

    if n == 1:
        b0, b1 = block(0), block(1)
        targets = [b0[0], b1[0], b0[1], b1[1], b0[2], b1[2], b0[3], b1[3]]
        labels = ["e0", "e1", "E0", "E1", "F0", "F1", "C0", "C1"]
    else:
        targets = []
        labels = []
        for pair in ((0, 2), (1, 3)):
            blocks = {k: block(k) for k in pair}
            ka, kb = pair
            targets += [blocks[ka][0], blocks[kb][0]]
            labels += [f"e{ka}", f"e{kb}"]
            targets += [blocks[ka][1], blocks[kb][1]]
            labels += [f"E{ka}", f"E{kb}"]
            targets += [blocks[ka][2], blocks[kb][2]]
            labels += [f"F{ka}", f"F{kb}"]
            targets += [blocks[ka][3], blocks[kb][3]]
            labels += [f"P{ka}", f"P{kb}"]
    matrix = LinearMap([[targets[j][i] for j in range(dim)] for i in range(dim)])
    return BasisChange(algebra, labels, matrix)


def casimir_vector(n):
    """C = FE + (K - K^{-1})/(4i) as a PBW coefficient vector."""
    order = field_order(n)
    i = CyclotomicNumber.i(order)
    quarter = 1 / (4 * i)
    idx = pbw_indices(n)
    pos = {key: t for t, key in enumerate(idx)}
    vec = [CyclotomicNumber.zero(order)] * len(idx)
    vec[pos[(1, 0, 1)]] = CyclotomicNumber.one(order)
    vec[pos[(0, 1, 0)]] = vec[pos[(0, 1, 0)]] + quarter
    j = (2 * n - 1) % (2 * n)
    vec[pos[(0, j, 0)]] = vec[pos[(0, j, 0)]] - quarter
    return vec


def casimir(n):
    algebra = build_hni(n)
    return AlgebraElement(algebra, casimir_vector(n))


def is_central(algebra, element):
    for j in range(algebra.dim):
        b = algebra.element(
            [CyclotomicNumber.one(algebra.order) if t == j else CyclotomicNumber.zero(algebra.order) for t in range(algebra.dim)]
        )
        if not (element * b - b * element).is_zero():
            return False
    return True


def center_check(n):
    """Centrality report: E^2, F^2, K^2 central in U_i(sl2); K^2, C central in H_N^i."""
    order = field_order(n)
    e2 = u_mul(u_gen("E", order), u_gen("E", order), order)
    f2 = u_mul(u_gen("F", order), u_gen("F", order), order)
    k2 = u_gen("K", order, 2)
    gens = {sym: u_gen(sym, order) for sym in ("K", "E", "F")}
    pre_quotient = {}
    for name, elem in (("E^2", e2), ("F^2", f2), ("K^2", k2)):
        for gname, g in gens.items():
            pre_quotient[f"[{name},{gname}]"] = not u_commutator(elem, g, order)
    algebra = build_hni(n)
    k2_vec = normal_form(["K", "K"], n)
    report = {
        "pre_quotient_central": pre_quotient,
        "K2_central": is_central(algebra, algebra.element(k2_vec)),
        "casimir_central": is_central(algebra, casimir(n)),
    }
    return report
