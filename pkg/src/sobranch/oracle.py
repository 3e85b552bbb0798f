"""Brute-force branching oracle, independent of every closed formula in the
package: Freudenthal weight multiplicities, alternating Weyl-orbit sums,
character restriction, and greedy highest-weight stripping over the product
subgroup.

Algebras are designated by (family, rank) pairs with family 'B' or 'D'; all
arithmetic is exact on doubled-integer tuples.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import DomainError, InternalInconsistencyError
from .weights import (
    FAMILY_B,
    FAMILY_D,
    SignedPermutation,
    Weight,
    algebra_positive_roots,
    algebra_rho,
    check_family,
    check_family_n,
    g_rank,
    is_dominant,
    is_g_dominant,
    iter_dominant_weights,
    restrict,
    weyl_elements,
)

Algebra = tuple[str, int]


def _check_algebra(algebra: Algebra) -> Algebra:
    family, rank = algebra
    check_family(family)
    if rank < 1 or (family == FAMILY_D and rank < 2):
        raise DomainError(f"unsupported algebra {family}_{rank}")
    return family, rank


class CharacterMap:
    """Sparse integer-valued map on the weight lattice (signed values are
    allowed, so alternating orbit sums fit too).  Immutable."""

    __slots__ = ("_data",)

    def __init__(self, data=None):
        mapping: dict[tuple[int, ...], int] = {}
        items = data.items() if isinstance(data, dict) else (data or ())
        for key, value in items:
            key = key.coords2 if isinstance(key, Weight) else tuple(key)
            if value:
                mapping[key] = mapping.get(key, 0) + value
                if not mapping[key]:
                    del mapping[key]
        self._data = mapping

    def get(self, w: Weight) -> int:
        return self._data.get(w.coords2, 0)

    def items(self) -> list[tuple[Weight, int]]:
        return [(Weight(k), v) for k, v in sorted(self._data.items())]

    def items2(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self._data.items())

    def total(self) -> int:
        return sum(self._data.values())

    def transformed(self, omega: SignedPermutation) -> "CharacterMap":
        return CharacterMap(
            {_apply2(omega.perm, omega.flips, k): v for k, v in self._data.items()}
        )

    def __mul__(self, other: "CharacterMap") -> "CharacterMap":
        out: dict[tuple[int, ...], int] = {}
        for k1, v1 in self._data.items():
            for k2, v2 in other._data.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + v1 * v2
        return CharacterMap(out)

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterMap):
            return NotImplemented
        return self._data == other._data

    def __repr__(self) -> str:
        inner = ", ".join(f"{Weight(k)}: {v}" for k, v in sorted(self._data.items()))
        return "{" + inner + "}"


class MultiplicityTable:
    """Finite map (subgroup highest weight, SO(3) label) -> multiplicity,
    the complete answer of one branching problem."""

    __slots__ = ("_entries",)

    def __init__(self, entries: dict[tuple[tuple[int, ...], int], int]):
        for (mu, k), m in entries.items():
            if k < 0 or m <= 0:
                raise DomainError(f"bad table entry ({mu}, {k}) -> {m}")
        self._entries = dict(entries)

    def get(self, mu, k: int) -> int:
        mu_key = tuple(mu.to_ints()) if isinstance(mu, Weight) else tuple(mu)
        return self._entries.get((mu_key, k), 0)

    def items(self) -> list[tuple[tuple[tuple[int, ...], int], int]]:
        return sorted(self._entries.items())

    def rows(self) -> dict[tuple[int, ...], dict[int, int]]:
        out: dict[tuple[int, ...], dict[int, int]] = {}
        for (mu, k), m in self._entries.items():
            out.setdefault(mu, {})[k] = m
        return out

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplicityTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        inner = ", ".join(f"({mu}, {k}): {m}" for (mu, k), m in self.items())
        return "{" + inner + "}"


def _apply2(perm, flips, t2: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(t2)
    for i, c in enumerate(t2):
        j = perm[i]
        out[j] = -c if j in flips else c
    return tuple(out)


def _ip2(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    """Four times the inner product in which the epsilon-basis is
    orthonormal (both arguments doubled)."""
    return sum(a * b for a, b in zip(u, v))


def _dominant_rep2(family: str, t2: tuple[int, ...]) -> tuple[int, ...]:
    s = sorted((abs(c) for c in t2), reverse=True)
    if family == FAMILY_D:
        negatives = sum(1 for c in t2 if c < 0)
        if negatives % 2 and s[-1]:
            s[-1] = -s[-1]
    return tuple(s)


def _in_positive_root_span(family: str, d: tuple[int, ...]) -> bool:
    """Whether an integer vector is a non-negative integer combination of the
    simple roots of B_r / D_r."""
    r = len(d)
    prefix = []
    s = 0
    for v in d:
        s += v
        prefix.append(s)
    if family == FAMILY_B:
        return all(x >= 0 for x in prefix)
    if r < 2:
        return d[0] == 0
    if any(prefix[j] < 0 for j in range(r - 2)):
        return False
    s_r = prefix[-1]
    s_rm2 = prefix[r - 3] if r >= 3 else 0
    if s_r % 2 or s_r < 0:
        return False
    return s_rm2 + d[r - 2] - d[r - 1] >= 0


@lru_cache(maxsize=None)
def _dominant_mults(family: str, rank: int, lam2: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Freudenthal's recursion on the dominant weights of the irreducible
    with highest weight lam (integral, dominant)."""
    roots2 = tuple(a.coords2 for a in algebra_positive_roots(family, rank))
    rho2 = algebra_rho(family, rank).coords2
    lam_ints = tuple(c // 2 for c in lam2)
    top2 = tuple(a + b for a, b in zip(lam2, rho2))
    top_norm = _ip2(top2, top2)

    candidates = []
    for eta in iter_dominant_weights(family, rank, lam_ints[0]):
        d = tuple(a - b for a, b in zip(lam_ints, eta.to_ints()))
        if _in_positive_root_span(family, d):
            candidates.append(eta.coords2)
    candidates.sort(
        key=lambda e2: _ip2(
            tuple(a + b for a, b in zip(e2, rho2)), tuple(a + b for a, b in zip(e2, rho2))
        ),
        reverse=True,
    )
    if not candidates or candidates[0] != lam2:
        raise InternalInconsistencyError("highest weight missing from its own weight system")

    mults: dict[tuple[int, ...], int] = {lam2: 1}
    for eta2 in candidates[1:]:
        num = 0
        for a2 in roots2:
            j = 1
            while True:
                xi2 = tuple(e + j * a for e, a in zip(eta2, a2))
                m = mults.get(_dominant_rep2(family, xi2))
                if not m:
                    break
                num += m * _ip2(xi2, a2)
                j += 1
        eta_rho2 = tuple(a + b for a, b in zip(eta2, rho2))
        denom = top_norm - _ip2(eta_rho2, eta_rho2)
        if denom <= 0:
            raise InternalInconsistencyError("non-positive Freudenthal denominator")
        quot, rem = divmod(2 * num, denom)
        if rem or quot <= 0:
            raise InternalInconsistencyError(
                f"Freudenthal failed at {eta2}: 2*{num}/{denom}"
            )
        mults[eta2] = quot
    return tuple(sorted(mults.items()))


@lru_cache(maxsize=None)
def _char_items(family: str, rank: int, lam2: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """The full weight system with multiplicities, expanded over the Weyl
    orbits of the dominant weights."""
    out: dict[tuple[int, ...], int] = {}
    elements = weyl_elements(family, rank)
    for eta2, m in _dominant_mults(family, rank, lam2):
        seen = set()
        for w in elements:
            img = _apply2(w.perm, w.flips, eta2)
            if img not in seen:
                seen.add(img)
                out[img] = m
    return tuple(sorted(out.items()))


def _require_dominant_integral(algebra: Algebra, lam: Weight) -> Algebra:
    family, rank = _check_algebra(algebra)
    if lam.rank != rank:
        raise DomainError(f"weight rank {lam.rank} does not match algebra rank {rank}")
    if not lam.is_integral:
        raise DomainError(f"{lam} is not integral")
    if not is_dominant(family, lam):
        raise DomainError(f"{lam} is not dominant for {family}_{rank}")
    return family, rank


def weight_multiplicities(algebra: Algebra, lam: Weight) -> CharacterMap:
    """Exact weight multiplicities of the irreducible with highest weight
    lam, by Freudenthal's recursion."""
    family, rank = _require_dominant_integral(algebra, lam)
    return CharacterMap(dict(_char_items(family, rank, lam.coords2)))


def weyl_dim(algebra: Algebra, lam: Weight) -> int:
    """Dimension by the Weyl product formula."""
    family, rank = _require_dominant_integral(algebra, lam)
    rho2 = algebra_rho(family, rank).coords2
    top2 = tuple(a + b for a, b in zip(lam.coords2, rho2))
    num = 1
    den = 1
    for a in algebra_positive_roots(family, rank):
        num *= _ip2(top2, a.coords2)
        den *= _ip2(rho2, a.coords2)
    quot, rem = divmod(num, den)
    if rem:
        raise InternalInconsistencyError("Weyl dimension is not an integer")
    return quot


def xi(algebra: Algebra, eta: Weight) -> CharacterMap:
    """The alternating Weyl-orbit sum of e^eta as a signed map."""
    family, rank = _check_algebra(algebra)
    if eta.rank != rank:
        raise DomainError(f"weight rank {eta.rank} does not match algebra rank {rank}")
    out: dict[tuple[int, ...], int] = {}
    for w in weyl_elements(family, rank):
        key = _apply2(w.perm, w.flips, eta.coords2)
        out[key] = out.get(key, 0) + w.sign
    return CharacterMap(out)


def _k_algebra(family: str, n: int) -> Algebra:
    return (FAMILY_D, n) if family == FAMILY_B else (FAMILY_B, n)


def branch_oracle(family: str, n: int, lam: Weight) -> MultiplicityTable:
    """Complete branching table of the ambient irreducible over the product
    subgroup: restrict the character, then repeatedly strip the product
    character of the lexicographically maximal remaining weight.

    Purely character-theoretic; shares nothing with the partition-function
    or generating-function routes.
    """
    check_family_n(family, n)
    if not is_g_dominant(family, n, lam):
        raise DomainError(f"lam={lam} is not dominant (family {family}, n={n})")
    if not lam.is_integral:
        raise DomainError(f"lam={lam} is not integral")
    galg = (family, g_rank(family, n))
    kalg = _k_algebra(family, n)
    kfam, _ = kalg

    residual: dict[tuple[int, ...], int] = {}
    for w2, m in _char_items(galg[0], galg[1], lam.coords2):
        key = restrict(family, Weight(w2)).coords2
        residual[key] = residual.get(key, 0) + m

    entries: dict[tuple[tuple[int, ...], int], int] = {}
    while residual:
        top = max(residual)
        m_top = residual[top]
        mu2, k2 = top[:n], top[n]
        if m_top < 0 or k2 < 0 or k2 % 2 or not is_dominant(kfam, Weight(mu2)):
            raise InternalInconsistencyError(
                f"stripping reached non-dominant leader {top} (x{m_top})"
            )
        k = k2 // 2
        mu = Weight(mu2)
        for kw2, km in _char_items(kalg[0], kalg[1], mu2):
            dec = m_top * km
            for j2 in range(-k2, k2 + 1, 2):
                key = kw2 + (j2,)
                rem = residual.get(key, 0) - dec
                if rem < 0:
                    raise InternalInconsistencyError(
                        f"negative residual at {key} while stripping ({mu}, {k})"
                    )
                if rem:
                    residual[key] = rem
                else:
                    residual.pop(key, None)
        entries[(mu.to_ints(), k)] = m_top

    total = sum(
        m * weyl_dim(kalg, Weight.of_ints(mu)) * (2 * k + 1)
        for (mu, k), m in entries.items()
    )
    if total != weyl_dim(galg, lam):
        raise InternalInconsistencyError(
            f"dimension check failed: {total} != dim of {lam}"
        )
    return MultiplicityTable(entries)
