import pytest

from sobranch.errors import DomainError
from sobranch.oracle import (
    CharacterMap,
    MultiplicityTable,
    branch_oracle as oracle,
    weight_multiplicities,
    weyl_dim,
    xi,
)
from sobranch.weights import (
    SignedPermutation,
    Weight,
    algebra_positive_roots,
    algebra_rho,
    make_root_data,
    weyl_elements,
)

w = Weight.of_ints


def test_weight_multiplicities_standard_reps():
    cm = weight_multiplicities(("B", 3), w([1, 0, 0]))
    assert len(cm) == 7
    assert cm.get(w([0, 0, 0])) == 1
    assert cm.get(w([0, -1, 0])) == 1
    cm_d = weight_multiplicities(("D", 2), w([1, 0]))
    assert sorted(x.to_ints() for x, _ in cm_d.items()) == [
        (-1, 0),
        (0, -1),
        (0, 1),
        (1, 0),
    ]


def test_weight_multiplicities_adjoint_B2():
    cm = weight_multiplicities(("B", 2), w([1, 1]))
    assert cm.get(w([0, 0])) == 2
    assert cm.get(w([1, 1])) == 1
    assert cm.get(w([1, 0])) == 1
    assert cm.total() == 10
    assert weyl_dim(("B", 2), w([1, 1])) == 10


def test_weight_multiplicities_weyl_invariance():
    cm = weight_multiplicities(("B", 2), w([2, 1]))
    for om in weyl_elements("B", 2):
        assert cm.transformed(om) == cm


def test_weight_multiplicities_rejects_bad_input():
    with pytest.raises(DomainError):
        weight_multiplicities(("B", 3), w([0, 1, 0]))
    with pytest.raises(DomainError):
        weight_multiplicities(("D", 1), w([1]))
    with pytest.raises(DomainError):
        weight_multiplicities(("B", 3), Weight((1, 0, 0)))


def test_weyl_dim_examples():
    assert weyl_dim(("B", 3), w([1, 0, 0])) == 7
    assert weyl_dim(("B", 3), w([0, 0, 0])) == 1
    assert weyl_dim(("D", 3), w([1, 0, 0])) == 6
    assert weyl_dim(("D", 3), w([1, 1, 1])) == 10
    assert weyl_dim(("D", 3), w([1, 1, -1])) == 10


def test_weyl_dim_matches_weight_system_total():
    for alg, lam in ((("B", 2), w([2, 1])), (("D", 3), w([2, 1, 1])), (("B", 1), w([4]))):
        assert weight_multiplicities(alg, lam).total() == weyl_dim(alg, lam)


def test_xi_examples():
    # rank one: two terms at +-1/2
    assert xi(("B", 1), Weight((1,))) == CharacterMap({(1,): 1, (-1,): -1})
    # a weight fixed by a reflection cancels completely
    assert not xi(("B", 2), w([1, 0]))
    assert not xi(("D", 2), w([1, 1]))  # fixed by the coordinate swap
    # strictly dominant regular: |W| distinct terms
    rho = algebra_rho("B", 2)
    assert len(xi(("B", 2), rho)) == 8


def test_xi_antisymmetry_under_simple_reflections():
    rho = algebra_rho("B", 3)
    x = xi(("B", 3), rho + w([2, 1, 0]))
    flip_last = SignedPermutation.reflection(3, 2)
    swap = SignedPermutation.transposition(3, 0, 1)
    minus = CharacterMap({k.coords2: -v for k, v in x.items()})
    assert x.transformed(flip_last) == minus
    assert x.transformed(swap) == minus


def test_weyl_denominator_product_form():
    for alg in (("B", 2), ("D", 3)):
        rho = algebra_rho(*alg)
        product = CharacterMap({(0,) * alg[1]: 1})
        for alpha in algebra_positive_roots(*alg):
            half = tuple(c // 2 for c in alpha.coords2)  # doubled coords of alpha/2
            product = product * CharacterMap({half: 1, tuple(-c for c in half): -1})
        assert product == xi(alg, rho)


def test_weyl_character_identity_spot():
    for family, n, lam in (("B", 2, w([2, 1, 0])), ("D", 1, w([2, 1, -1]))):
        rd = make_root_data(family, n)
        galg = rd.g_algebra
        char = weight_multiplicities(galg, lam)
        assert char * xi(galg, rd.rho_g) == xi(galg, lam + rd.rho_g)


def test_branch_oracle_examples():
    table = oracle("B", 2, w([1, 0, 0]))
    assert table == MultiplicityTable({((1, 0), 0): 1, ((0, 0), 1): 1})
    assert oracle("B", 2, w([0, 0, 0])) == MultiplicityTable({((0, 0), 0): 1})
    assert oracle("D", 1, w([1, 0, 0])) == MultiplicityTable({((1,), 0): 1, ((0,), 1): 1})


def test_branch_oracle_adjoint_B():
    # 21-dimensional adjoint of SO(7) over SO(4) x SO(3)
    table = oracle("B", 2, w([1, 1, 0]))
    assert table.get((1, 1), 0) == 1
    assert table.get((1, -1), 0) == 1
    assert table.get((1, 0), 1) == 1
    assert table.get((0, 0), 1) == 1
    assert len(table) == 4


def test_branch_oracle_conservation():
    for family, n, lam in (
        ("B", 2, w([2, 1, 1])),
        ("D", 1, w([2, 2, -1])),
        ("D", 2, w([1, 1, 1, -1])),
    ):
        rd = make_root_data(family, n)
        table = oracle(family, n, lam)
        total = sum(
            m * weyl_dim(rd.k_algebra, w(mu)) * (2 * k + 1)
            for (mu, k), m in table.items()
        )
        assert total == weyl_dim(rd.g_algebra, lam)


def test_branch_oracle_rows_are_dominant():
    for (mu, k), m in oracle("B", 2, w([2, 2, 1])).items():
        assert mu[0] >= abs(mu[1]) and k >= 0 and m > 0


def test_branch_oracle_rejects_bad_input():
    with pytest.raises(DomainError):
        oracle("B", 2, w([0, 1, 0]))
    with pytest.raises(DomainError):
        oracle("B", 1, w([1, 0]))
