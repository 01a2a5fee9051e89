import pytest

from conftest import DATA, alg, mutated_m7, random_invertible

from oracles import oracle_rank, oracle_series_dims

from leibnizkit.core import Algebra, bracket, change_of_basis, leibniz_residual
from leibnizkit.invariants import (
    CharSeq,
    NotLeibnizError,
    center,
    central_series,
    characteristic_sequence,
    fingerprint,
    natural_graded,
    p_filiform_class,
    right_annihilator,
)
from leibnizkit.linalg import NotNilpotentError, basis_vec, span_echelon
from leibnizkit.scalars import ONE, Scalar


def _contains(vectors, dim, target):
    return span_echelon(vectors, dim).contains({c: v for c, v in enumerate(target) if v})


def test_series_abelian():
    s = central_series(alg("abelian", 3))
    assert s.dims == (3,)
    assert s.nilindex == 1
    assert len(s.subspace_bases[0]) == 3


def test_series_m7_against_brute_force():
    m7 = alg("M", 7)
    assert oracle_series_dims(m7) == (8, 5, 3, 2, 1)
    s = central_series(m7)
    assert s.dims == (8, 5, 3, 2, 1)
    assert s.nilindex == 5


def test_series_l1_nilindex():
    assert central_series(alg("L1", 7)).nilindex == 4    # n - 3


def test_series_strictly_decreasing_for_catalog():
    for family, n in [("M", 8), ("N", 9), ("KF4", 8), ("KF5", 9), ("NGF1", 8), ("L1", 9)]:
        dims = central_series(alg(family, n)).dims
        assert all(a > b for a, b in zip(dims, dims[1:]))


def test_series_detects_non_nilpotent():
    # [e1, e1] = e1 stabilizes at dimension 1
    a = Algebra(["e1", "e2"], {(0, 0): (ONE, Scalar(0))})
    s = central_series(a)
    assert s.nilindex is None
    assert not s.is_nilpotent


def test_right_annihilator_abelian_is_everything():
    assert len(right_annihilator(alg("abelian", 3))) == 3


def test_right_annihilator_l1_membership():
    l1 = alg("L1", 7)
    rann = right_annihilator(l1)
    assert len(rann) == 5
    for label in ("e2", "e3", "e4", "f3"):
        assert _contains(rann, 7, basis_vec(7, l1.index(label)))


def test_right_annihilator_m7_dim():
    m7 = alg("M", 7)
    rann = right_annihilator(m7)
    # oracle: stack the left-multiplication matrices and row-reduce
    from leibnizkit.core import left_operator

    rows = []
    for i in range(8):
        rows.extend(left_operator(m7, basis_vec(8, i)).data)
    assert len(rann) == 8 - oracle_rank(rows) == 6


def test_center_abelian_is_everything():
    assert len(center(alg("abelian", 3))) == 3


def test_center_l1_contains_top_vector():
    l1 = alg("L1", 7)
    assert _contains(center(l1), 7, basis_vec(7, l1.index("e4")))   # e_{n-3}


def test_center_m7_membership():
    m7 = alg("M", 7)
    c = center(m7)
    assert _contains(c, 8, basis_vec(8, m7.index("y7")))            # y_n
    assert _contains(c, 8, basis_vec(8, m7.index("y5")))            # y_{n-2}
    assert len(c) == 2


def test_annihilator_and_center_are_ideals(rng):
    m7 = alg("M", 7)
    for name, vectors in (("rann", right_annihilator(m7)), ("center", center(m7))):
        span = span_echelon(vectors, 8)
        for v in vectors:
            for j in range(8):
                w = bracket(m7, v, basis_vec(8, j))
                assert span.contains({c: x for c, x in enumerate(w) if x}), name
                w = bracket(m7, basis_vec(8, j), v)
                assert span.contains({c: x for c, x in enumerate(w) if x}), name


def test_charseq_m7():
    cs = characteristic_sequence(alg("M", 7))
    assert cs.parts == (5, 1, 1, 1)                       # (n-2, 1, 1, 1): 3-filiform
    assert list(cs.witness) == basis_vec(8, 0)            # witnessed by y1


def test_charseq_abelian():
    cs = characteristic_sequence(alg("abelian", 4))
    assert cs.parts == (1, 1, 1, 1)


def test_charseq_l1():
    assert characteristic_sequence(alg("L1", 7)).parts == (4, 1, 1, 1)


def test_charseq_rejects_non_nilpotent():
    a = Algebra(["e1"], {(0, 0): (ONE,)})
    with pytest.raises(NotNilpotentError):
        characteristic_sequence(a)


def test_charseq_rejects_zero_trials():
    with pytest.raises(ValueError):
        characteristic_sequence(alg("abelian", 2), trials=0)


def test_charseq_invariant_under_change_of_basis(rng):
    m7 = alg("M", 7)
    base = characteristic_sequence(m7).parts
    for _ in range(8):
        p = random_invertible(rng, 8)
        moved = change_of_basis(m7, p)
        assert characteristic_sequence(moved).parts == base


@pytest.mark.parametrize("parts,p", [
    ((5, 1, 1, 1), 3),
    ((4,), 0),
    ((3, 2), None),
    ((1,), 0),
    ((6, 1), 1),
])
def test_p_filiform_class(parts, p):
    assert p_filiform_class(CharSeq(parts, ())) == p


def test_family_p_classes():
    # advertised p for the Leibniz families; N is the exception: its computed
    # characteristic sequence (n-2, 2, 1) is not of p-filiform shape at all
    for n in range(7, 13):
        for family, p in (("L1", 3), ("M", 3), ("NGF1", 1), ("KF4", 2), ("KF5", 2)):
            cs = characteristic_sequence(alg(family, n))
            assert p_filiform_class(cs) == p, (family, n, cs.parts)
        cs = characteristic_sequence(alg("M1alpha", n, alpha=Scalar(1)))
        assert p_filiform_class(cs) == 3
    for n in (7, 9):
        cs = characteristic_sequence(alg("N", n))
        assert cs.parts == (n - 2, 2, 1)
        assert p_filiform_class(cs) is None


def test_natural_graded_l1_component_dims():
    gr, dims = natural_graded(alg("L1", 7))
    assert dims == (3, 2, 1, 1)
    assert leibniz_residual(gr) == []


def test_natural_graded_abelian_is_identity():
    a = alg("abelian", 4)
    gr, dims = natural_graded(a)
    assert gr == a
    assert dims == (4,)


def test_natural_graded_m7_is_leibniz():
    gr, dims = natural_graded(alg("M", 7))
    assert leibniz_residual(gr) == []
    assert sum(dims) == 8


def test_natural_graded_dims_sum_for_catalog():
    for family, n in [("M", 8), ("KF4", 8), ("KF5", 8), ("NGF1", 8), ("N", 9)]:
        a = alg(family, n)
        gr, dims = natural_graded(a)
        assert sum(dims) == a.dim
        assert leibniz_residual(gr) == []


def test_natural_graded_rejects_non_nilpotent():
    a = Algebra(["e1"], {(0, 0): (ONE,)})
    with pytest.raises(NotNilpotentError):
        natural_graded(a)


def test_fingerprint_golden_records():
    with open(f"{DATA}/fingerprints.txt") as fh:
        golden = dict(line.strip().split(" ", 1) for line in fh if line.strip())
    assert fingerprint(alg("M", 7)).record() == golden["M7"]
    assert fingerprint(alg("M1alpha", 7, alpha=Scalar(1))).record() == golden["M1a1_7"]
    assert fingerprint(alg("N", 7)).record() == golden["N7"]
    assert fingerprint(alg("L1", 7)).record() == golden["L1_7"]


def test_fingerprint_separates_m_from_m1alpha():
    fp_m = fingerprint(alg("M", 7))
    fp_a = fingerprint(alg("M1alpha", 7, alpha=Scalar(1)))
    assert fp_m != fp_a
    assert fp_m.dim_der == 13 and fp_a.dim_der == 12     # n+6 vs n+5


def test_fingerprint_alpha_independent():
    one = fingerprint(alg("M1alpha", 7, alpha=Scalar(1)))
    two = fingerprint(alg("M1alpha", 7, alpha=Scalar(2)))
    assert one == two


def test_fingerprint_invariant_under_change_of_basis(rng):
    l1 = alg("L1", 7)
    base = fingerprint(l1)
    for _ in range(3):
        p = random_invertible(rng, 7)
        assert fingerprint(change_of_basis(l1, p)) == base


def test_fingerprint_rejects_non_leibniz():
    with pytest.raises(NotLeibnizError):
        fingerprint(mutated_m7())
