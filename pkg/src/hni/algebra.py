"""Finite-dimensional associative algebras given by structure constants.

Elements, linear maps, Hermitian forms, and exact dense linear algebra
(rank, kernel, inverse, inertia) over a cyclotomic field.
"""

from dataclasses import dataclass
from fractions import Fraction

from hni.cyclotomic import CyclotomicNumber


def _zero(order):
    return CyclotomicNumber.zero(order)


def _one(order):
    return CyclotomicNumber.one(order)


class LinearMap:
    """A rows x cols matrix of CyclotomicNumber."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(n, order=4):
        return LinearMap(
            [[_one(order) if i == j else _zero(order) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(rows, cols, order=4):
        return LinearMap([[_zero(order) for _ in range(cols)] for _ in range(rows)])

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return LinearMap(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return LinearMap([[e * c for e in row] for row in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in composition")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = None
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    term = a * other.entries[k][j]
                    acc = term if acc is None else acc + term
                row.append(acc if acc is not None else _zero(4))
            out.append(row)
        return LinearMap(out)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            acc = _zero(4)
            for k in range(self.cols):
                a = self.entries[i][k]
                if not a.is_zero():
                    acc = acc + a * vec[k]
            out.append(acc)
        return out

    def transpose(self):
        return LinearMap(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def conjugate(self):
        return LinearMap([[e.conj() for e in row] for row in self.entries])

    def kron(self, other):
        """Kronecker product with row-major indexing (i, j) -> i*dim + j."""
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                row = []
                for j in range(self.cols):
                    for l in range(other.cols):
                        row.append(self.entries[i][j] * other.entries[k][l])
                out.append(row)
        return LinearMap(out)

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        acc = _zero(4)
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def power(self, k):
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        result = LinearMap.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def _echelon(self):
        """Row echelon form by exact Gaussian elimination; returns (rows, pivot_cols)."""
        mat = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot_row = None
            for i in range(r, self.rows):
                if not mat[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
            inv = mat[r][c].inv()
            mat[r] = [e * inv for e in mat[r]]
            for i in range(self.rows):
                if i != r and not mat[i][c].is_zero():
                    f = mat[i][c]
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return mat, pivots

    def rank(self):
        return len(self._echelon()[1])

    def kernel(self):
        """Basis of the null space (list of coefficient vectors)."""
        mat, pivots = self._echelon()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [_zero(4) for _ in range(self.cols)]
            vec[fc] = _one(4)
            for r, pc in enumerate(pivots):
                vec[pc] = -mat[r][fc]
            basis.append(vec)
        return basis

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = LinearMap(
            [list(self.entries[i]) + list(LinearMap.identity(n).entries[i]) for i in range(n)]
        )
        mat, pivots = aug._echelon()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return LinearMap([row[n:] for row in mat])

    def __repr__(self):
        return f"LinearMap({self.rows}x{self.cols})"


def solve(matrix, rhs):
    """Solve matrix @ x = rhs exactly; returns None if inconsistent."""
    n = matrix.rows
    aug = LinearMap([list(matrix.entries[i]) + [rhs[i]] for i in range(n)])
    mat, pivots = aug._echelon()
    if any(p == matrix.cols for p in pivots):
        return None
    x = [_zero(4) for _ in range(matrix.cols)]
    for r, pc in enumerate(pivots):
        x[pc] = mat[r][matrix.cols]
    return x


def span_rank(vectors):
    if not vectors:
        return 0
    return LinearMap(vectors).rank()


def in_span(vec, vectors):
    return span_rank(list(vectors) + [vec]) == span_rank(vectors)


def same_span(a, b):
    return span_rank(a) == span_rank(b) == span_rank(list(a) + list(b))


class StructureConstants:
    """An associative algebra with a fixed basis and multiplication tensor.

    tensor[i][j] is the coefficient vector of basis_i * basis_j.
    """

    def __init__(self, basis_labels, tensor, unit, order):
        self.basis_labels = list(basis_labels)
        self.dim = len(self.basis_labels)
        self.tensor = tensor
        self.unit = list(unit)
        self.order = order
        if len(tensor) != self.dim or any(len(row) != self.dim for row in tensor):
            raise ValueError("tensor shape mismatch")

    def zero_vector(self):
        return [_zero(self.order) for _ in range(self.dim)]

    def basis_element(self, label):
        vec = self.zero_vector()
        vec[self.basis_labels.index(label)] = _one(self.order)
        return AlgebraElement(self, vec)

    def element(self, coeffs):
        return AlgebraElement(self, list(coeffs))

    def unit_element(self):
        return AlgebraElement(self, list(self.unit))

    def from_dict(self, d):
        """Element from a {label: scalar} mapping."""
        vec = self.zero_vector()
        for label, c in d.items():
            vec[self.basis_labels.index(label)] = (
                c if isinstance(c, CyclotomicNumber) else CyclotomicNumber.from_rational(c, self.order)
            )
        return AlgebraElement(self, vec)

    def mul_vectors(self, a, b):
        out = self.zero_vector()
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if bj.is_zero():
                    continue
                c = ai * bj
                for k, t in enumerate(self.tensor[i][j]):
                    if not t.is_zero():
                        out[k] = out[k] + c * t
        return out

    def left_mul_matrix(self, a):
        """Matrix of x -> a*x; columns are a * basis_j."""
        cols = []
        for j in range(self.dim):
            ej = self.zero_vector()
            ej[j] = _one(self.order)
            cols.append(self.mul_vectors(a.coeffs, ej))
        return LinearMap([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def right_mul_matrix(self, a):
        cols = []
        for j in range(self.dim):
            ej = self.zero_vector()
            ej[j] = _one(self.order)
            cols.append(self.mul_vectors(ej, a.coeffs))
        return LinearMap([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def trace_vector(self):
        """t[j] = Tr of left multiplication by basis_j."""
        out = []
        for j in range(self.dim):
            acc = _zero(self.order)
            for k in range(self.dim):
                acc = acc + self.tensor[j][k][k]
            out.append(acc)
        return out

    def check_unit(self):
        one = self.unit_element()
        for j in range(self.dim):
            b = self.element([_one(self.order) if k == j else _zero(self.order) for k in range(self.dim)])
            if (one * b).coeffs != b.coeffs or (b * one).coeffs != b.coeffs:
                return False
        return True

    def check_associativity(self):
        """(b_i b_j) b_k == b_i (b_j b_k) for all basis triples."""
        basis = []
        for j in range(self.dim):
            v = self.zero_vector()
            v[j] = _one(self.order)
            basis.append(v)
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.tensor[i][j]
                for k in range(self.dim):
                    left = self.mul_vectors(ij, basis[k])
                    right = self.mul_vectors(basis[i], self.tensor[j][k])
                    if left != right:
                        return False, (i, j, k)
        return True, None

    def to_json(self):
        table = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                cell = {}
                for k, c in enumerate(self.tensor[i][j]):
                    if not c.is_zero():
                        cell[self.basis_labels[k]] = c.to_json()
                row.append(cell)
            table.append(row)
        return {"basis": list(self.basis_labels), "table": table}


class AlgebraElement:
    """A coefficient vector over the basis of a StructureConstants algebra."""

    def __init__(self, algebra, coeffs):
        if len(coeffs) != algebra.dim:
            raise ValueError("coefficient vector length mismatch")
        self.algebra = algebra
        self.coeffs = [
            c if isinstance(c, CyclotomicNumber) else CyclotomicNumber.from_rational(c, algebra.order)
            for c in coeffs
        ]

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coeffs])

    def scale(self, c):
        return AlgebraElement(self.algebra, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.algebra, self.algebra.mul_vectors(self.coeffs, other.coeffs))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def power(self, k):
        result = self.algebra.unit_element()
        for _ in range(k):
            result = result * self
        return result

    def commutator(self, other):
        return self * other - other * self

    def __repr__(self):
        terms = []
        for label, c in zip(self.algebra.basis_labels, self.coeffs):
            if not c.is_zero():
                terms.append(f"({c})*{label}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class SignatureTriple:
    n_plus: int
    n_zero: int
    n_minus: int

    def as_tuple(self):
        return (self.n_plus, self.n_zero, self.n_minus)


class GramMatrix:
    """A Hermitian form; the hermitian property is verified at construction."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.dim = len(self.entries)
        for i in range(self.dim):
            for j in range(self.dim):
                if self.entries[j][i] != self.entries[i][j].conj():
                    raise ValueError(f"matrix is not hermitian at ({i},{j})")

    def matrix(self):
        return LinearMap(self.entries)

    def kernel(self):
        return self.matrix().kernel()

    def restrict(self, vectors):
        """Gram matrix of the form on the span of the given coordinate vectors."""
        out = []
        for v in vectors:
            row = []
            for w in vectors:
                acc = _zero(4)
                for i, vi in enumerate(v):
                    if vi.is_zero():
                        continue
                    for j, wj in enumerate(w):
                        if not wj.is_zero():
                            acc = acc + vi.conj() * self.entries[i][j] * wj
                row.append(acc)
            out.append(row)
        return GramMatrix(out)

    def signature(self):
        """Exact inertia (n_plus, n_zero, n_minus).

        The Hermitian form is realified on a doubled space
        [[Re, -Im], [Im, Re]] and the real symmetric inertia halved.
        """
        d = self.dim
        re = [[self.entries[i][j].real_part() for j in range(d)] for i in range(d)]
        im = [[self.entries[i][j].imag_part() for j in range(d)] for i in range(d)]
        n = 2 * d
        a = [[None] * n for _ in range(n)]
        for i in range(d):
            for j in range(d):
                a[i][j] = re[i][j]
                a[i][j + d] = -im[i][j]
                a[i + d][j] = im[i][j]
                a[i + d][j + d] = re[i][j]
        pos = neg = zero = 0
        idx = list(range(n))
        while idx:
            pivot = None
            for k in idx:
                if not a[k][k].is_zero():
                    pivot = k
                    break
            if pivot is None:
                off = None
                for k in idx:
                    for l in idx:
                        if l != k and not a[k][l].is_zero():
                            off = (k, l)
                            break
                    if off:
                        break
                if off is None:
                    zero += len(idx)
                    break
                k, l = off
                # congruence e_k <- e_k + e_l turns the zero diagonal nonzero
                for j in idx:
                    a[k][j] = a[k][j] + a[l][j]
                for i in idx:
                    a[i][k] = a[i][k] + a[i][l]
                pivot = k
            p = a[pivot][pivot]
            if p.sign() > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in idx if i != pivot]
            pinv = p.inv()
            factors = {i: a[i][pivot] * pinv for i in rest}
            for i in rest:
                fi = factors[i]
                if fi.is_zero():
                    continue
                for j in rest:
                    a[i][j] = a[i][j] - fi * a[pivot][j]
            idx = rest
        assert pos % 2 == 0 and neg % 2 == 0 and zero % 2 == 0
        return SignatureTriple(pos // 2, zero // 2, neg // 2)

    def to_json(self):
        return {
            "dim": self.dim,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }
