"""Root data and signed-permutation Weyl groups for the orthogonal pairs
SO(2n+3) > SO(2n) x SO(3) (family B) and SO(2n+4) > SO(2n+1) x SO(3)
(family D).

Everything lives in the standard epsilon-basis of the relevant Cartan dual.
Coordinates are stored as doubled integers so half-integral data (Weyl
vectors of odd orthogonal algebras, half-integer exponents) stays exact;
no floating point is used anywhere.

Rank conventions used throughout the package, for parameter n:

==========  ===============  ===============  ==================
family      ambient G        subgroup K       restricted torus
==========  ===============  ===============  ==================
B (n >= 2)  SO(2n+3), B_n+1  SO(2n),   D_n    rank n+1 (identity)
D (n >= 1)  SO(2n+4), D_n+2  SO(2n+1), B_n    rank n+1 (drops one slot)
==========  ===============  ===============  ==================

In restricted (rank n+1) coordinates the last slot always carries the
SO(3) torus coordinate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError

FAMILY_B = "B"
FAMILY_D = "D"
_FAMILIES = (FAMILY_B, FAMILY_D)

#: smallest parameter n admitted by each family
FAMILY_MIN_N = {FAMILY_B: 2, FAMILY_D: 1}


def check_family(family: str) -> None:
    if family not in _FAMILIES:
        raise DomainError(f"unknown family {family!r}; expected 'B' or 'D'")


def check_family_n(family: str, n: int) -> None:
    check_family(family)
    if n < FAMILY_MIN_N[family]:
        raise DomainError(
            f"family {family} requires n >= {FAMILY_MIN_N[family]}, got n={n}"
        )


@dataclass(frozen=True, slots=True, order=True)
class Weight:
    """A vector of exact half-integer coordinates in the epsilon-basis.

    ``coords2[i]`` holds twice the i-th coordinate.  Weights compare
    lexicographically, first coordinate most significant.
    """

    coords2: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.coords2, tuple):
            object.__setattr__(self, "coords2", tuple(self.coords2))
        for c in self.coords2:
            if not isinstance(c, int):
                raise DomainError("doubled coordinates must be plain integers")

    @classmethod
    def of_ints(cls, coords: Iterable[int]) -> "Weight":
        """Weight with the given integer coordinates."""
        return cls(tuple(2 * int(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, index: int) -> "Weight":
        """The basis vector epsilon_{index+1} (0-based index)."""
        if not 0 <= index < rank:
            raise DomainError(f"basis index {index} out of range for rank {rank}")
        c = [0] * rank
        c[index] = 2
        return cls(tuple(c))

    @property
    def rank(self) -> int:
        return len(self.coords2)

    @property
    def is_integral(self) -> bool:
        return all(c % 2 == 0 for c in self.coords2)

    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.coords2)

    def to_ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise DomainError(f"{self} has non-integral coordinates")
        return tuple(c // 2 for c in self.coords2)

    def _require_same_rank(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise DomainError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._require_same_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._require_same_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords2))

    def scaled(self, m: int) -> "Weight":
        return Weight(tuple(m * a for a in self.coords2))

    def shift_last(self, delta2: int) -> "Weight":
        """Add ``delta2``/2 to the last coordinate."""
        return Weight(self.coords2[:-1] + (self.coords2[-1] + delta2,))

    def with_last_negated(self) -> "Weight":
        return Weight(self.coords2[:-1] + (-self.coords2[-1],))

    def drop_index(self, index: int) -> "Weight":
        return Weight(self.coords2[:index] + self.coords2[index + 1 :])

    def __repr__(self) -> str:
        parts = []
        for c in self.coords2:
            parts.append(str(c // 2) if c % 2 == 0 else f"{c}/2")
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True, slots=True)
class SignedPermutation:
    """A Weyl group element: permute the coordinates, then negate the
    coordinates listed in ``flips``.

    ``perm[i]`` is the image slot of basis vector i, so the j-th coordinate
    of the image of w is +/- the perm^{-1}(j)-th coordinate of w.
    """

    perm: tuple[int, ...]
    flips: frozenset[int]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))):
            raise DomainError(f"{self.perm} is not a permutation of 0..{len(self.perm)-1}")
        if not all(0 <= f < len(self.perm) for f in self.flips):
            raise DomainError("flip index out of range")

    @classmethod
    def identity(cls, rank: int) -> "SignedPermutation":
        return cls(tuple(range(rank)), frozenset())

    @classmethod
    def reflection(cls, rank: int, index: int) -> "SignedPermutation":
        """Sign change of the single coordinate ``index`` (0-based)."""
        return cls(tuple(range(rank)), frozenset((index,)))

    @classmethod
    def transposition(cls, rank: int, i: int, j: int) -> "SignedPermutation":
        p = list(range(rank))
        p[i], p[j] = p[j], p[i]
        return cls(tuple(p), frozenset())

    @property
    def rank(self) -> int:
        return len(self.perm)

    @property
    def sign(self) -> int:
        """Determinant of the signed permutation matrix."""
        inv = 0
        p = self.perm
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    inv += 1
        return (-1) ** (inv + len(self.flips))

    def apply(self, w: Weight) -> Weight:
        if w.rank != self.rank:
            raise DomainError(f"rank mismatch: element has rank {self.rank}, weight {w.rank}")
        out = [0] * self.rank
        for i, c in enumerate(w.coords2):
            j = self.perm[i]
            out[j] = -c if j in self.flips else c
        return Weight(tuple(out))

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other, i.e. (self.compose(other)).apply == self.apply(other.apply(.))."""
        if other.rank != self.rank:
            raise DomainError("rank mismatch in composition")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.rank))
        flips = self.flips.symmetric_difference(self.perm[j] for j in other.flips)
        return SignedPermutation(perm, frozenset(flips))


def apply(omega: SignedPermutation, w: Weight) -> Weight:
    """Apply a Weyl group element to a weight."""
    return omega.apply(w)


def weyl_group(family: str, rank: int) -> Iterator[SignedPermutation]:
    """Yield every element of the hyperoctahedral group (family B: all sign
    patterns) or its even-sign-pattern subgroup (family D), exactly once."""
    check_family(family)
    if rank < 1:
        raise DomainError("rank must be positive")
    indices = range(rank)
    for perm in itertools.permutations(indices):
        for size in range(rank + 1):
            if family == FAMILY_D and size % 2:
                continue
            for subset in itertools.combinations(indices, size):
                yield SignedPermutation(perm, frozenset(subset))


@lru_cache(maxsize=None)
def weyl_elements(family: str, rank: int) -> tuple[SignedPermutation, ...]:
    """The full Weyl group as a cached tuple (for repeated sweeps)."""
    return tuple(weyl_group(family, rank))


def is_dominant(family: str, w: Weight) -> bool:
    """Dominance for the algebra type: B_r needs a weakly decreasing
    non-negative chain, D_r allows a negative last coordinate bounded by the
    one before it."""
    check_family(family)
    c = w.coords2
    if not c:
        raise DomainError("rank must be positive")
    if family == FAMILY_B:
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1)) and c[-1] >= 0
    if len(c) == 1:
        return True
    head = all(c[i] >= c[i + 1] for i in range(len(c) - 2))
    return head and c[-2] >= abs(c[-1])


def iter_dominant_weights(family: str, rank: int, max_first: int) -> Iterator[Weight]:
    """All dominant integral weights whose first coordinate is at most
    ``max_first``, in decreasing lexicographic order."""
    check_family(family)
    if rank < 1:
        raise DomainError("rank must be positive")

    def rec(length: int, bound: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for v in range(bound, -1, -1):
            for rest in rec(length - 1, v):
                yield (v,) + rest

    for tup in rec(rank, max_first):
        yield Weight.of_ints(tup)
        if family == FAMILY_D and tup[-1] > 0:
            yield Weight.of_ints(tup[:-1] + (-tup[-1],))


def g_rank(family: str, n: int) -> int:
    check_family_n(family, n)
    return n + 1 if family == FAMILY_B else n + 2


def is_g_dominant(family: str, n: int, lam: Weight) -> bool:
    if lam.rank != g_rank(family, n):
        raise DomainError(f"family {family}, n={n} needs rank {g_rank(family, n)}, got {lam.rank}")
    return is_dominant(family, lam)


def is_k_dominant(family: str, n: int, mu: Weight) -> bool:
    check_family_n(family, n)
    if mu.rank != n:
        raise DomainError(f"subgroup weight must have rank {n}, got {mu.rank}")
    # K is SO(2n) (type D) under family B and SO(2n+1) (type B) under family D
    return is_dominant(FAMILY_D if family == FAMILY_B else FAMILY_B, mu)


def _check_pair(family: str, lam: Weight, mu: Weight) -> int:
    n = mu.rank
    if not is_g_dominant(family, n, lam):
        raise DomainError(f"{lam} is not dominant for the ambient group (family {family}, n={n})")
    if not is_k_dominant(family, n, mu):
        raise DomainError(f"{mu} is not dominant for the subgroup (family {family}, n={n})")
    return n


def interlace(kind: str, family: str, lam: Weight, mu: Weight) -> bool:
    """Interlacing predicates between ambient and subgroup highest weights.

    kind='simple': family B requires lam_i >= |mu_i| >= lam_{i+1}; family D
    requires lam_i >= mu_i >= lam_{i+1}, for 1 <= i <= n.

    kind='triple' is the non-vanishing pattern, three steps wide: family B
    requires lam_i >= mu_i >= lam_{i+3} for i <= n-1 (missing coordinates
    read as 0) together with lam_n >= |mu_n|; family D requires
    lam_i >= mu_i >= lam_{i+3} for i <= n-2, lam_{n-1} >= mu_{n-1} >=
    |lam_{n+2}| when n >= 2, and lam_n >= mu_n.
    """
    if kind not in ("simple", "triple"):
        raise DomainError(f"unknown interlacing kind {kind!r}")
    n = _check_pair(family, lam, mu)
    l2 = lam.coords2
    m2 = mu.coords2
    if kind == "simple":
        if family == FAMILY_B:
            return all(l2[i] >= abs(m2[i]) >= l2[i + 1] for i in range(n))
        return all(l2[i] >= m2[i] >= l2[i + 1] for i in range(n))
    if family == FAMILY_B:
        ext = l2 + (0, 0)
        head = all(l2[i] >= m2[i] >= ext[i + 3] for i in range(n - 1))
        return head and l2[n - 1] >= abs(m2[n - 1])
    head = all(l2[i] >= m2[i] >= l2[i + 3] for i in range(n - 2))
    middle = n < 2 or l2[n - 2] >= m2[n - 2] >= abs(l2[n + 1])
    return head and middle and l2[n - 1] >= m2[n - 1]


def tilde(family: str, w: Weight) -> Weight:
    """Negate the last coordinate.  Under family B this maps a subgroup
    highest weight to its outer twist; under family D it twists the ambient
    highest weight.  Branching multiplicities are invariant under it."""
    check_family(family)
    return w.with_last_negated()


def restrict(family: str, w: Weight) -> Weight:
    """Restrict from the ambient torus to the subgroup-times-SO(3) torus:
    the identity under family B, removal of the next-to-last coordinate
    under family D."""
    check_family(family)
    if family == FAMILY_B:
        return w
    if w.rank < 2:
        raise DomainError("family D restriction needs rank >= 2")
    return w.drop_index(w.rank - 2)


def algebra_positive_roots(family: str, rank: int) -> tuple[Weight, ...]:
    """Positive roots of B_rank (e_i +- e_j, i<j, and all e_i) or of D_rank
    (e_i +- e_j only), in the lexicographic positive system."""
    check_family(family)
    if rank < 1 or (family == FAMILY_D and rank < 2):
        raise DomainError(f"no {family}_{rank} root system here")
    roots = []
    for i in range(rank):
        for j in range(i + 1, rank):
            roots.append(Weight.basis(rank, i) - Weight.basis(rank, j))
            roots.append(Weight.basis(rank, i) + Weight.basis(rank, j))
    if family == FAMILY_B:
        for i in range(rank):
            roots.append(Weight.basis(rank, i))
    return tuple(roots)


def algebra_rho(family: str, rank: int) -> Weight:
    """Half the sum of the positive roots: coordinates rank-i+1/2 (type B)
    or rank-i (type D) at position i."""
    check_family(family)
    if family == FAMILY_B:
        return Weight(tuple(2 * (rank - i) + 1 for i in range(1, rank + 1)))
    return Weight(tuple(2 * (rank - i) for i in range(1, rank + 1)))


@dataclass(frozen=True)
class RootData:
    """All root-theoretic data needed by the branching algorithms for one
    family and one parameter n.

    The multisets ``sigma`` (restricted ambient positive roots minus the
    subgroup's), ``sigma_prime`` (the paired generators e_i +- e_last) and
    ``sigma_double_prime`` (sigma_prime plus -e_last) live in the restricted
    rank n+1 coordinates whose last slot is the SO(3) direction.
    """

    family: str
    n: int
    positive_roots_g: tuple[Weight, ...]
    positive_roots_k: tuple[Weight, ...]
    positive_roots_h: tuple[Weight, ...]
    rho_g: Weight
    rho_k: Weight
    rho_h: Weight
    sigma: tuple[Weight, ...]
    sigma_prime: tuple[Weight, ...]
    sigma_double_prime: tuple[Weight, ...]

    @property
    def g_rank(self) -> int:
        return self.rho_g.rank

    @property
    def s_rank(self) -> int:
        return self.n + 1

    @property
    def g_algebra(self) -> tuple[str, int]:
        return (self.family, self.g_rank)

    @property
    def k_algebra(self) -> tuple[str, int]:
        k_family = FAMILY_D if self.family == FAMILY_B else FAMILY_B
        return (k_family, self.n)


@lru_cache(maxsize=None)
def make_root_data(family: str, n: int) -> RootData:
    """Build the root data for one family and parameter n (family B needs
    n >= 2, family D needs n >= 1)."""
    check_family_n(family, n)
    s_rank = n + 1
    e = lambda i: Weight.basis(s_rank, i)
    last = s_rank - 1
    sigma_prime = tuple(
        e(i) + e(last).scaled(s) for i in range(n) for s in (1, -1)
    )
    sigma_double_prime = sigma_prime + (-e(last),)
    sigma = sigma_prime + tuple(e(i) for i in range(n))
    if family == FAMILY_D:
        sigma = sigma + (-e(last),)
    grank = g_rank(family, n)
    k_family = FAMILY_D if family == FAMILY_B else FAMILY_B
    return RootData(
        family=family,
        n=n,
        positive_roots_g=algebra_positive_roots(family, grank),
        positive_roots_k=algebra_positive_roots(k_family, n),
        positive_roots_h=(e(last),),
        rho_g=algebra_rho(family, grank),
        rho_k=algebra_rho(k_family, n),
        rho_h=Weight((0,) * n + (1,)),
        sigma=sigma,
        sigma_prime=sigma_prime,
        sigma_double_prime=sigma_double_prime,
    )
