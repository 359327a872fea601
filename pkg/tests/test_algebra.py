"""Linear algebra and structure-constant machinery over exact scalars."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hni.algebra import GramMatrix, LinearMap, StructureConstants, in_span, \
    same_span, solve, span_rank
from hni.cyclotomic import CyclotomicNumber


def _c(x):
    return CyclotomicNumber.from_rational(Fraction(x), 4)


def _mat(rows):
    return LinearMap([[_c(x) for x in row] for row in rows])


small_ints = st.integers(min_value=-5, max_value=5)


def matrices(n=3):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n),
                    min_size=n, max_size=n).map(_mat)


@given(matrices(), matrices())
@settings(max_examples=40, deadline=None)
def test_transpose_antihomomorphism(a, b):
    assert (a @ b).transpose() == b.transpose() @ a.transpose()


@given(matrices())
@settings(max_examples=40, deadline=None)
def test_rank_plus_nullity(a):
    assert a.rank() + len(a.kernel()) == 3


@given(matrices())
@settings(max_examples=30, deadline=None)
def test_inverse_roundtrip(a):
    if a.rank() < 3:
        return
    assert a @ a.inverse() == LinearMap.identity(3)


@given(matrices(2), matrices(2))
@settings(max_examples=30, deadline=None)
def test_kron_multiplicative(a, b):
    assert a.kron(a) @ b.kron(b) == (a @ b).kron(a @ b)


def test_solve_consistent_and_inconsistent():
    a = _mat([[1, 2], [2, 4]])
    assert solve(a, [_c(1), _c(2)]) is not None
    assert solve(a, [_c(1), _c(1)]) is None


def test_span_utilities():
    v1 = [_c(1), _c(0), _c(1)]
    v2 = [_c(0), _c(1), _c(0)]
    assert span_rank([v1, v2, [a + b for a, b in zip(v1, v2)]]) == 2
    assert in_span([_c(2), _c(3), _c(2)], [v1, v2])
    assert not in_span([_c(0), _c(0), _c(1)], [v1, v2])
    assert same_span([v1, v2], [[a + b for a, b in zip(v1, v2)], v2])


def test_gram_signature_exact():
    g = GramMatrix([[_c(2), _c(0), _c(0)],
                    [_c(0), _c(-3), _c(0)],
                    [_c(0), _c(0), _c(0)]])
    sig = g.signature()
    assert sig.as_tuple() == (1, 1, 1)
    assert len(g.kernel()) == 1


def test_gram_indefinite_off_diagonal():
    # hyperbolic plane: signature (1, 0, 1)
    g = GramMatrix([[_c(0), _c(1)], [_c(1), _c(0)]])
    assert g.signature().as_tuple() == (1, 0, 1)


def _group_algebra_z2():
    order = 4
    zero, one = CyclotomicNumber.zero(order), CyclotomicNumber.one(order)
    tensor = [[[one, zero], [zero, one]], [[zero, one], [one, zero]]]
    return StructureConstants(["g0", "g1"], tensor, [one, zero], order)


def test_structure_constants_axioms():
    alg = _group_algebra_z2()
    assert alg.check_unit()
    assert alg.check_associativity()
    x = alg.basis_element("g1")
    assert (x * x) == alg.unit_element()
    assert alg.left_mul_matrix(x).power(2) == LinearMap.identity(2)


def test_structure_constants_json_shape():
    import json

    alg = _group_algebra_z2()
    blob = alg.to_json()
    assert blob["basis"] == ["g0", "g1"]
    json.dumps(blob)  # must be directly serializable
