import pytest

from conftest import DATA, alg, mutated_m7, random_invertible, random_vector

from leibnizkit.core import (
    FormatError,
    bracket,
    change_of_basis,
    direct_sum,
    dumps,
    leibniz_residual,
    loads,
    right_operator,
)
from leibnizkit.linalg import (
    Matrix,
    SingularMatrixError,
    basis_vec,
    inverse,
    span_echelon,
    zero_vec,
)
from leibnizkit.scalars import Scalar


def e(n, i):
    return basis_vec(n, i)


def test_bracket_m7_chain():
    m7 = alg("M", 7)
    y1 = e(8, 0)
    assert bracket(m7, y1, y1) == e(8, 1)          # [y1, y1] = y2


def test_bracket_right_zero():
    m7 = alg("M", 7)
    assert bracket(m7, e(8, 0), zero_vec(8)) == zero_vec(8)


def test_bracket_l1_mixed_argument():
    # [e1 + f2, e1] = [e1, e1] = e2 since f2 never multiplies e1 from the left
    l1 = alg("L1", 7)
    x = [a + b for a, b in zip(e(7, 0), e(7, l1.index("f2")))]
    assert bracket(l1, x, e(7, 0)) == e(7, 1)


def test_bracket_bilinearity_randomized(rng):
    l1 = alg("L1", 7)
    for _ in range(60):
        x, y, z = (random_vector(rng, 7) for _ in range(3))
        a, b = Scalar(rng.randint(-3, 3)), Scalar(rng.randint(-3, 3))
        ax_bz = [a * u + b * v for u, v in zip(x, z)]
        lhs = bracket(l1, ax_bz, y)
        rhs = [a * u + b * v for u, v in zip(bracket(l1, x, y), bracket(l1, z, y))]
        assert lhs == rhs


def test_residual_empty_for_m7():
    assert leibniz_residual(alg("M", 7)) == []


def test_residual_empty_for_abelian():
    assert leibniz_residual(alg("abelian", 4)) == []


def test_residual_nonempty_for_mutated_m7():
    bad = mutated_m7()
    res = leibniz_residual(bad)
    assert res
    triples = {(i, j, k) for (i, j, k, _vec) in res}
    assert all(0 <= t < 8 for trip in triples for t in trip)


def test_right_operator_of_top_vector_is_zero():
    m7 = alg("M", 7)
    assert right_operator(m7, e(8, 6)).is_zero()      # y_n never on the right


def test_right_operator_linear_in_x():
    m7 = alg("M", 7)
    assert right_operator(m7, zero_vec(8)).is_zero()


def test_right_operator_l1_image():
    l1 = alg("L1", 7)
    op = right_operator(l1, e(7, 0))
    image = span_echelon([op.column(c) for c in range(7)], 7)
    expected = span_echelon([e(7, 1), e(7, 2), e(7, 3)], 7)
    assert image.rank == 3
    assert image.basis_rows() == expected.basis_rows()


def test_right_operator_matches_bracket(rng):
    m7 = alg("M", 7)
    for _ in range(40):
        x = random_vector(rng, 8)
        y = random_vector(rng, 8)
        assert right_operator(m7, x).mul_vec(y) == bracket(m7, y, x)


def test_change_of_basis_identity():
    m7 = alg("M", 7)
    assert change_of_basis(m7, Matrix.identity(8)) == m7


def test_change_of_basis_round_trip(rng):
    m7 = alg("M", 7)
    for _ in range(10):
        p = random_invertible(rng, 8)
        assert change_of_basis(change_of_basis(m7, p), inverse(p)) == m7


def test_change_of_basis_rescaling_preserves_residual():
    # y1 -> 2 y1, everything else fixed: the transported law stays Leibniz;
    # [u1, u1] = 4 [y1, y1] = 4 y2 and y2 is unscaled, so the new
    # coefficient is exactly 4
    m7 = alg("M", 7)
    p = Matrix.identity(8)
    p.data[0][0] = Scalar(2)
    moved = change_of_basis(m7, p)
    assert leibniz_residual(moved) == []
    v = zero_vec(8)
    v[1] = Scalar(4)
    assert list(moved.gamma_vec(0, 0)) == v


def test_change_of_basis_rejects_singular():
    with pytest.raises(SingularMatrixError):
        change_of_basis(alg("M", 7), Matrix.zero(8, 8))


def test_direct_sum_with_zero_dim_is_identity():
    m7 = alg("M", 7)
    assert direct_sum(m7, alg("abelian", 0)) == m7


def test_direct_sum_dims_add():
    s = direct_sum(alg("NGF1", 8), alg("abelian", 2))
    assert s.dim == 10
    assert leibniz_residual(s) == []


def test_direct_sum_kf4_plus_line_is_leibniz():
    s = direct_sum(alg("KF4", 9), alg("abelian", 1))
    assert leibniz_residual(s) == []


def test_direct_sum_associative_up_to_relabeling():
    a, b, c = alg("M", 7), alg("abelian", 2), alg("NGF1", 7)
    left = direct_sum(direct_sum(a, b), c)
    right = direct_sum(a, direct_sum(b, c))
    assert left.dim == right.dim
    assert len(leibniz_residual(left)) == len(leibniz_residual(right)) == 0
    assert sorted(left.gamma) == sorted(right.gamma)


def test_direct_sum_renames_label_collisions():
    s = direct_sum(alg("NGF1", 4), alg("NGF1", 4))
    assert len(set(s.labels)) == 8
    assert "e1'" in s.labels


def test_json_round_trip_all_families():
    for family, n in [("M", 7), ("M1alpha", 7), ("N", 7), ("L1", 8), ("KF4", 8),
                      ("KF5", 7), ("NGF1", 7), ("nullfiliform-ml", 5), ("abelian", 3)]:
        a = alg(family, n, **({"alpha": Scalar(1)} if family == "M1alpha" else {}))
        assert loads(dumps(a)) == a


def test_json_golden_m7():
    with open(f"{DATA}/m7.json", "rb") as fh:
        assert fh.read() == dumps(alg("M", 7)).encode()


def test_json_omitted_products_are_zero():
    a = loads('{"dim": 2, "basis": ["a", "b"], "products": []}')
    assert bracket(a, basis_vec(2, 0), basis_vec(2, 1)) == zero_vec(2)


@pytest.mark.parametrize("doc,fragment", [
    ('{"dim": 2, "basis": ["a", "a"]}', "duplicate"),
    ('{"dim": 3, "basis": ["a", "b"]}', "dim"),
    ('{"dim": 1, "basis": ["a"], "products": [{"left": "x", "right": "a", "result": []}]}', "'x'"),
    ('{"dim": 1, "basis": ["a"], "products": [{"left": "a", "right": "a", "result": [["a", "1/0"]]}]}', "1/0"),
    ('{"dim": 1, "basis": ["a"], "products": [{"left": "a", "right": "a", "result": [["b", "1"]]}]}', "'b'"),
    ('{"basis": ["a"]}', "dim"),
    ('[1, 2]', "object"),
], ids=["dup-label", "dim-mismatch", "bad-left", "zero-den", "bad-term", "no-dim", "not-object"])
def test_json_errors_name_the_offender(doc, fragment):
    with pytest.raises(FormatError) as err:
        loads(doc)
    assert fragment in str(err.value)


def test_json_duplicate_product_rejected():
    doc = ('{"dim": 2, "basis": ["a", "b"], "products": ['
           '{"left": "a", "right": "a", "result": [["b", "1"]]},'
           '{"left": "a", "right": "a", "result": [["b", "2"]]}]}')
    with pytest.raises(FormatError) as err:
        loads(doc)
    assert "duplicate product" in str(err.value)


def test_residual_invariant_under_change_of_basis(rng):
    m7 = alg("M", 7)
    for _ in range(5):
        p = random_invertible(rng, 8)
        assert leibniz_residual(change_of_basis(m7, p)) == []
