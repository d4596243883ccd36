"""Canonical integer ranks for k-subsets and permutations.

Subsets of {1..n} are ranked by the colexicographic combinadic: with
0-based elements e_1 < e_2 < ... < e_k (= label - 1),

    rank = sum_t C(e_t, t)    in [0, C(n,k)).

Permutations of {1..k} use the Lehmer (factorial-base) rank, identity = 0.
These are the minimal-length canonical indices used by the two-part codec's
bit accounting.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Sequence

from .errors import DomainError

__all__ = [
    "ceil_log2",
    "rank_subset",
    "unrank_subset",
    "rank_permutation",
    "unrank_permutation",
]


def ceil_log2(x: int) -> int:
    """Smallest b with 2**b >= x; the whole-bit cost of one index in [0, x)."""
    if x < 1:
        raise DomainError(f"ceil_log2 requires x >= 1, got {x}")
    return (x - 1).bit_length()


def rank_subset(members: Sequence[int], n: int) -> int:
    """Colex combinadic rank of a sorted subset of {1..n}."""
    k = len(members)
    if any(not (1 <= v <= n) for v in members):
        raise DomainError(f"subset {tuple(members)} not within 1..{n}")
    if any(a >= b for a, b in zip(members, members[1:])):
        raise DomainError("subset must be strictly increasing")
    return sum(comb(v - 1, t) for t, v in enumerate(members, start=1))


def unrank_subset(rank: int, n: int, k: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_subset`."""
    total = comb(n, k)
    if not (0 <= rank < total):
        raise DomainError(f"subset rank must be in [0, C({n},{k})={total}), got {rank}")
    out = []
    r = rank
    for t in range(k, 0, -1):
        # largest e with C(e, t) <= r
        e = t - 1
        while comb(e + 1, t) <= r:
            e += 1
        out.append(e + 1)
        r -= comb(e, t)
    return tuple(reversed(out))


def rank_permutation(perm: Sequence[int]) -> int:
    """Lehmer rank of a permutation of {1..k}."""
    k = len(perm)
    if sorted(perm) != list(range(1, k + 1)):
        raise DomainError(f"{tuple(perm)} is not a permutation of 1..{k}")
    rank = 0
    for i in range(k):
        smaller_later = sum(1 for j in range(i + 1, k) if perm[j] < perm[i])
        rank += smaller_later * factorial(k - 1 - i)
    return rank


def unrank_permutation(rank: int, k: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_permutation`."""
    total = factorial(k)
    if not (0 <= rank < total):
        raise DomainError(f"permutation rank must be in [0, {k}!={total}), got {rank}")
    available = list(range(1, k + 1))
    out = []
    r = rank
    for i in range(k):
        f = factorial(k - 1 - i)
        idx, r = divmod(r, f)
        out.append(available.pop(idx))
    return tuple(out)
