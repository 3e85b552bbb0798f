import pytest

from sobranch.clebsch_gordan import closed_form_B
from sobranch.errors import DomainError, InterlacingError
from sobranch.kostant import (
    BranchingQuery,
    kostant_terms,
    multiplicity_kostant_full,
    multiplicity_kostant_reduced,
)
from sobranch.weights import (
    SignedPermutation,
    Weight,
    interlace,
    iter_dominant_weights,
    tilde,
)

w = Weight.of_ints


def q_B(lam, mu, k):
    return BranchingQuery("B", 2, w(lam), w(mu), k)


def q_D(lam, mu, k):
    return BranchingQuery("D", 1, w(lam), w(mu), k)


def test_query_validation():
    with pytest.raises(DomainError):
        BranchingQuery("B", 1, w([1, 0]), w([0]), 0)
    with pytest.raises(DomainError):
        q_B([0, 1, 0], [0, 0], 0)
    with pytest.raises(DomainError):
        q_B([1, 0, 0], [0, 0], -1)
    with pytest.raises(DomainError):
        BranchingQuery("B", 2, w([1, 0, 0]), w([0]), 0)


def test_full_sum_examples():
    # the 7-dimensional standard representation splits as C^4 + C^3
    assert multiplicity_kostant_full(q_B([1, 0, 0], [0, 0], 1)) == 1
    assert multiplicity_kostant_full(q_B([1, 0, 0], [0, 0], 0)) == 0
    assert multiplicity_kostant_full(q_B([0, 0, 0], [0, 0], 0)) == 1
    assert multiplicity_kostant_full(q_B([1, 0, 0], [1, 0], 0)) == 1


def test_reduced_examples():
    assert multiplicity_kostant_reduced(q_B([1, 0, 0], [0, 0], 1)) == 1
    assert multiplicity_kostant_reduced(q_D([1, 0, 0], [0], 1)) == 1
    assert multiplicity_kostant_reduced(q_D([1, 0, 0], [0], 0)) == 0
    # cross-check against the closed form, which gives a single tau_1
    assert closed_form_B(w([2, 1, 1]), w([2, 1])).mult(1) == 1
    assert multiplicity_kostant_reduced(q_B([2, 1, 1], [2, 1], 1)) == 1


def test_reduced_requires_simple_interlacing():
    with pytest.raises(InterlacingError):
        multiplicity_kostant_reduced(q_B([2, 2, 0], [1, 0], 0))


def test_reduced_equals_full_on_interlacing_grid():
    for family, n, grank, kfam in (("B", 2, 3, "D"), ("D", 1, 3, "B")):
        for lam in iter_dominant_weights(family, grank, 2):
            for mu in iter_dominant_weights(kfam, n, 2):
                if not interlace("simple", family, lam, mu):
                    continue
                for k in range(sum(abs(c) for c in lam.to_ints()) + 1):
                    q = BranchingQuery(family, n, lam, mu, k)
                    assert multiplicity_kostant_reduced(q) == multiplicity_kostant_full(q)


def test_weyl_lemma_support_family_B():
    allowed = {SignedPermutation.identity(3), SignedPermutation.reflection(3, 2)}
    for lam in iter_dominant_weights("B", 3, 2):
        for mu in iter_dominant_weights("D", 2, 2):
            if mu.coords2[-1] < 0 or not interlace("simple", "B", lam, mu):
                continue
            for k in range(sum(lam.to_ints()) + 1):
                for omega, _, _ in kostant_terms(BranchingQuery("B", 2, lam, mu, k)):
                    assert omega in allowed


def test_weyl_lemma_support_family_D():
    identity = SignedPermutation.identity(3)
    flip_two = SignedPermutation(tuple(range(3)), frozenset({1, 2}))
    swap = SignedPermutation.transposition(3, 1, 2)
    allowed = {identity, flip_two, swap, flip_two.compose(swap)}
    for lam in iter_dominant_weights("D", 3, 2):
        if lam.coords2[-1] < 0:
            continue
        for mu in iter_dominant_weights("B", 1, 2):
            if not interlace("simple", "D", lam, mu):
                continue
            for k in range(sum(abs(c) for c in lam.to_ints()) + 1):
                for omega, _, _ in kostant_terms(BranchingQuery("D", 1, lam, mu, k)):
                    assert omega in allowed


def test_tilde_invariance():
    for mu in ([2, 1], [2, 2], [1, 1]):
        for k in range(4):
            plain = multiplicity_kostant_full(q_B([2, 2, 1], mu, k))
            twisted = multiplicity_kostant_full(
                BranchingQuery("B", 2, w([2, 2, 1]), tilde("B", w(mu)), k)
            )
            assert plain == twisted
    for lam in ([2, 1, 1], [2, 2, 2], [1, 1, 1]):
        for k in range(4):
            plain = multiplicity_kostant_full(q_D(lam, [1], k))
            twisted = multiplicity_kostant_full(
                BranchingQuery("D", 1, tilde("D", w(lam)), w([1]), k)
            )
            assert plain == twisted


def test_vanishing_outside_triple_interlacing():
    for lam in iter_dominant_weights("B", 3, 2):
        for mu in iter_dominant_weights("D", 2, 3):
            if interlace("triple", "B", lam, mu):
                continue
            for k in range(sum(lam.to_ints()) + 1):
                assert multiplicity_kostant_full(BranchingQuery("B", 2, lam, mu, k)) == 0
