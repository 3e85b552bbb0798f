"""Branching multiplicities via Kostant's branching formula.

Two independent code paths: the full alternating sum over the whole ambient
Weyl group, and the reduced forms (two terms under family B, four terms
under family D) that the interlacing hypotheses justify.  They share only
the partition-function evaluator; agreement between them, the generating
function route and the character oracle is the package's main invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, InterlacingError, InternalInconsistencyError
from .partition import count_vector_partitions
from .weights import (
    FAMILY_B,
    FAMILY_D,
    SignedPermutation,
    Weight,
    check_family_n,
    g_rank,
    interlace,
    is_g_dominant,
    is_k_dominant,
    make_root_data,
    restrict,
    tilde,
    weyl_elements,
)


@dataclass(frozen=True)
class BranchingQuery:
    """One branching question: how often does the subgroup irreducible with
    highest weight ``mu`` tensored with the (2k+1)-dimensional SO(3)
    representation occur in the ambient irreducible with highest weight
    ``lam``."""

    family: str
    n: int
    lam: Weight
    mu: Weight
    k: int

    def __post_init__(self) -> None:
        check_family_n(self.family, self.n)
        if self.mu.rank != self.n:
            raise DomainError(f"mu must have rank {self.n}, got {self.mu.rank}")
        if self.lam.rank != g_rank(self.family, self.n):
            raise DomainError(
                f"lam must have rank {g_rank(self.family, self.n)}, got {self.lam.rank}"
            )
        if not self.lam.is_integral or not self.mu.is_integral:
            raise DomainError("highest weights must have integral coordinates")
        if not is_g_dominant(self.family, self.n, self.lam):
            raise DomainError(f"lam={self.lam} is not dominant (family {self.family})")
        if not is_k_dominant(self.family, self.n, self.mu):
            raise DomainError(f"mu={self.mu} is not dominant (family {self.family})")
        if self.k < 0:
            raise DomainError("k must be non-negative")

    def normalized(self) -> "BranchingQuery":
        """Tilde-normalize: last coordinate of mu (family B) or lam (family D)
        made non-negative.  Multiplicities are invariant under this."""
        if self.family == FAMILY_B and self.mu.coords2[-1] < 0:
            return BranchingQuery(self.family, self.n, self.lam, tilde(FAMILY_B, self.mu), self.k)
        if self.family == FAMILY_D and self.lam.coords2[-1] < 0:
            return BranchingQuery(self.family, self.n, tilde(FAMILY_D, self.lam), self.mu, self.k)
        return self


def kostant_terms(q: BranchingQuery) -> Iterator[tuple[SignedPermutation, int, int]]:
    """Yield (omega, sign, partition count) for every Weyl group element
    whose term in the alternating sum is non-zero."""
    rd = make_root_data(q.family, q.n)
    lam_rho = q.lam + rd.rho_g
    mu_ext = Weight(q.mu.coords2 + (2 * q.k,))
    for omega in weyl_elements(q.family, rd.g_rank):
        shifted = omega.apply(lam_rho) - rd.rho_g
        target = restrict(q.family, shifted) - mu_ext
        value = count_vector_partitions(rd.sigma, target)
        if value:
            yield omega, omega.sign, value


def multiplicity_kostant_full(q: BranchingQuery) -> int:
    """The full alternating Weyl sum, evaluated exactly with no pruning."""
    total = sum(sign * value for _, sign, value in kostant_terms(q))
    if total < 0:
        raise InternalInconsistencyError(
            f"negative alternating sum {total} for {q}"
        )
    return total


def multiplicity_kostant_reduced(q: BranchingQuery) -> int:
    """The reduced expressions valid under simple interlacing, after
    tilde-normalization: a two-term difference for family B, a four-term
    signed sum for family D."""
    q = q.normalized()
    if not interlace("simple", q.family, q.lam, q.mu):
        raise InterlacingError(
            f"mu={q.mu} does not simply interlace lam={q.lam} (family {q.family})"
        )
    rd = make_root_data(q.family, q.n)
    lam_bar = restrict(q.family, q.lam)
    mu_ext = Weight(q.mu.coords2 + (0,))
    base = lam_bar - mu_ext

    def p(target: Weight) -> int:
        return count_vector_partitions(rd.sigma, target)

    if q.family == FAMILY_B:
        total = p(base.shift_last(-2 * q.k)) - p(base.shift_last(2 * (q.k + 1)))
    else:
        l = q.lam.to_ints()
        second_last, last = l[q.n], l[q.n + 1]
        total = (
            p(base.shift_last(-2 * q.k))
            + p(base.shift_last(-2 * (2 * last + q.k)))
            - p(base.shift_last(2 * (second_last - last + 1 - q.k)))
            - p(base.shift_last(-2 * (second_last + last + 1 + q.k)))
        )
    if total < 0:
        raise InternalInconsistencyError(f"negative reduced sum {total} for {q}")
    return total
