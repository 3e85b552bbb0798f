import pytest
from hypothesis import given
from hypothesis import strategies as st

from sobranch.errors import DomainError
from sobranch.weights import (
    SignedPermutation,
    Weight,
    apply,
    interlace,
    is_dominant,
    iter_dominant_weights,
    make_root_data,
    restrict,
    tilde,
    weyl_elements,
    weyl_group,
)

w = Weight.of_ints


def test_weight_storage_and_arithmetic():
    a = w([3, 2, 1])
    assert a.rank == 3
    assert a.coords2 == (6, 4, 2)
    assert a.to_ints() == (3, 2, 1)
    assert (a - w([1, 1, 1])).to_ints() == (2, 1, 0)
    assert (-a).to_ints() == (-3, -2, -1)
    assert a.scaled(2).to_ints() == (6, 4, 2)
    assert a.shift_last(3).coords2 == (6, 4, 5)
    assert not a.shift_last(1).is_integral
    with pytest.raises(DomainError):
        a + w([1, 1])
    with pytest.raises(DomainError):
        a.shift_last(1).to_ints()


def test_root_data_family_B():
    rd = make_root_data("B", 2)
    assert len(rd.positive_roots_g) == 9
    assert rd.rho_g == Weight((5, 3, 1))
    assert rd.rho_k == w([1, 0])
    assert rd.rho_h == Weight((0, 0, 1))
    assert sorted(x.to_ints() for x in rd.sigma) == sorted(
        [(1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1), (1, 0, 0), (0, 1, 0)]
    )
    assert set(rd.sigma_double_prime) == set(rd.sigma_prime) | {Weight((0, 0, -2))}
    assert len(rd.positive_roots_k) == 2  # D_2


def test_root_data_family_D():
    rd = make_root_data("D", 1)
    assert len(rd.positive_roots_g) == 6  # (n+2)(n+1) at n=1
    assert sorted(x.to_ints() for x in rd.sigma) == sorted(
        [(1, 1), (1, -1), (1, 0), (0, -1)]
    )
    assert len(rd.sigma) == 4
    assert rd.rho_g == w([2, 1, 0])
    assert rd.rho_k == Weight((1,))  # B_1 Weyl vector is 1/2
    rd2 = make_root_data("D", 2)
    assert len(rd2.positive_roots_g) == 12
    assert rd2.rho_g == w([3, 2, 1, 0])


def test_root_data_rejects_small_n():
    with pytest.raises(DomainError):
        make_root_data("B", 1)
    with pytest.raises(DomainError):
        make_root_data("D", 0)
    with pytest.raises(DomainError):
        make_root_data("A", 2)


def test_weyl_group_counts_and_uniqueness():
    b3 = list(weyl_group("B", 3))
    assert len(b3) == 48 and len(set(b3)) == 48
    d3 = list(weyl_group("D", 3))
    assert len(d3) == 24 and len(set(d3)) == 24
    assert all(len(om.flips) % 2 == 0 for om in d3)
    assert SignedPermutation.identity(3).sign == 1


def test_apply_examples():
    rho = Weight((5, 3, 1))
    s3 = SignedPermutation.reflection(3, 2)
    assert s3.apply(rho) == Weight((5, 3, -1))
    assert SignedPermutation.identity(3).apply(rho) == rho
    p23 = SignedPermutation.transposition(3, 1, 2)
    assert apply(p23, w([7, 8, 9])) == w([7, 9, 8])
    with pytest.raises(DomainError):
        s3.apply(w([1, 2]))


def test_apply_preserves_coordinate_multiset_up_to_sign():
    v = w([4, 2, -1])
    for om in weyl_elements("B", 3):
        image = om.apply(v)
        assert sorted(abs(c) for c in image.coords2) == sorted(
            abs(c) for c in v.coords2
        )


@given(
    st.integers(min_value=2, max_value=4).flatmap(
        lambda r: st.tuples(
            st.permutations(range(r)),
            st.sets(st.integers(0, r - 1)),
            st.permutations(range(r)),
            st.sets(st.integers(0, r - 1)),
        )
    )
)
def test_sign_is_a_homomorphism(data):
    p1, f1, p2, f2 = data
    a = SignedPermutation(tuple(p1), frozenset(f1))
    b = SignedPermutation(tuple(p2), frozenset(f2))
    assert a.compose(b).sign == a.sign * b.sign


@given(
    st.integers(min_value=2, max_value=4).flatmap(
        lambda r: st.tuples(
            st.permutations(range(r)),
            st.sets(st.integers(0, r - 1)),
            st.lists(st.integers(-3, 3), min_size=r, max_size=r),
        )
    )
)
def test_composition_matches_sequential_application(data):
    p1, f1, coords = data
    a = SignedPermutation(tuple(p1), frozenset(f1))
    b = SignedPermutation.transposition(a.rank, 0, a.rank - 1)
    v = w(coords)
    assert a.compose(b).apply(v) == a.apply(b.apply(v))


def test_dominant_weight_is_lex_max_of_its_orbit():
    for rank in (2, 3, 4):
        for lam in iter_dominant_weights("B", rank, 2):
            orbit = {om.apply(lam) for om in weyl_elements("B", rank)}
            assert max(orbit) == lam


def test_dominance():
    assert is_dominant("B", w([2, 1, 0]))
    assert not is_dominant("B", w([2, 1, -1]))
    assert is_dominant("D", w([2, 1, -1]))
    assert not is_dominant("D", w([2, 1, -2]))
    assert is_dominant("D", w([5]))


def test_interlace_simple():
    assert interlace("simple", "B", w([1, 0, 0]), w([0, 0]))
    assert not interlace("simple", "B", w([1, 0, 0]), w([1, 1]))
    assert interlace("simple", "B", w([2, 1, 1]), w([2, -1]))
    assert interlace("simple", "D", w([2, 1, 0]), w([1]))
    assert not interlace("simple", "D", w([2, 2, 0]), w([1]))


def test_interlace_triple():
    # lam_1 >= mu_1 >= lam_4 = 0 and lam_2 >= |mu_2|
    assert interlace("triple", "B", w([2, 1, 0]), w([1, -1]))
    assert not interlace("triple", "B", w([2, 1, 0]), w([2, 2]))
    assert interlace("triple", "D", w([2, 1, 1]), w([2]))
    assert not interlace("triple", "D", w([2, 1, 1]), w([3]))
    # family D, n=2: lam_1 >= mu_1 >= |lam_4| and lam_2 >= mu_2
    assert interlace("triple", "D", w([2, 2, 1, -1]), w([1, 1]))
    assert not interlace("triple", "D", w([2, 2, 1, -1]), w([0, 0]))


def test_interlace_rejects_non_dominant_inputs():
    # the mu side here is not dominant for SO(4), so this is a domain error
    with pytest.raises(DomainError):
        interlace("triple", "B", w([2, 1, 0]), w([0, -1]))
    with pytest.raises(DomainError):
        interlace("simple", "B", w([0, 1, 0]), w([0, 0]))
    with pytest.raises(DomainError):
        interlace("cubic", "B", w([1, 0, 0]), w([0, 0]))


def test_tilde():
    assert tilde("B", w([2, -1])) == w([2, 1])
    assert tilde("D", w([3, 1, -1])) == w([3, 1, 1])
    assert tilde("B", w([2, 0])) == w([2, 0])
    v = w([3, 1, -1])
    assert tilde("D", tilde("D", v)) == v


def test_restrict():
    assert restrict("B", w([3, 2, 1])) == w([3, 2, 1])
    assert restrict("D", w([5, 7, 9])) == w([5, 9])
    assert restrict("D", w([3, 2, 1, 0])) == w([3, 2, 0])


def test_iter_dominant_weights():
    b = list(iter_dominant_weights("B", 2, 1))
    assert [x.to_ints() for x in b] == [(1, 1), (1, 0), (0, 0)]
    d = list(iter_dominant_weights("D", 2, 1))
    assert [x.to_ints() for x in d] == [(1, 1), (1, -1), (1, 0), (0, 0)]
