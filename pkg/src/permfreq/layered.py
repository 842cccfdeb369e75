"""Dynamic program for the maximum number of ``1(l+1)l...2`` copies.

For the pattern ``q = 1(l+1)l...2`` (a singleton layer followed by a
descending block of length ``l``), some optimal n-permutation is always
layered, and removing its last layer leaves an optimal permutation.
Writing ``M_n`` for the maximum copy count this gives the recursion

    M_n = max over 1 <= k < n of ( M_k + k * C(n - k, l) )

with ``M_j = 0`` for ``j <= l``.  ``k_n`` denotes the largest maximizing
``k``; ``c_{n,i} = M_i + i * C(n - i, l)`` is the value of the candidate
with leftmost part of length ``i``; ``l_n`` is the least ``i > k_n``
where the candidate sequence stops decreasing (``n - 1`` if it never
does).  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .perms import require_profile

__all__ = ["OptimalTable", "build_table", "c_ni", "optimal_profile"]


@dataclass(frozen=True)
class OptimalTable:
    """Tables ``M_n``, ``k_n`` and ``l_n`` for one pattern parameter ``l``.

    ``M[n]`` is defined for ``0 <= n <= n_max``; ``k[n]`` and ``lvec[n]``
    are defined for ``l + 1 <= n <= n_max`` and are ``None`` below that.
    """

    l: int
    n_max: int
    M: tuple[int, ...]
    k: tuple[Optional[int], ...]
    lvec: tuple[Optional[int], ...]

    def k_at(self, n: int) -> int:
        if not self.l + 1 <= n <= self.n_max:
            raise IndexError(f"k_n is defined for {self.l + 1} <= n <= {self.n_max}, got n={n}")
        value = self.k[n]
        assert value is not None
        return value

    def l_at(self, n: int) -> int:
        if not self.l + 1 <= n <= self.n_max:
            raise IndexError(f"l_n is defined for {self.l + 1} <= n <= {self.n_max}, got n={n}")
        value = self.lvec[n]
        assert value is not None
        return value


def build_table(l: int, n_max: int) -> OptimalTable:
    """Evaluate the recursion up to ``n_max`` for pattern parameter ``l``.

    Ties in the maximizer are resolved to the largest ``k``.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    if n_max < l + 1:
        raise ValueError(f"n_max must be at least l + 1 = {l + 1}")

    M: list[int] = [0] * (n_max + 1)
    k: list[Optional[int]] = [None] * (n_max + 1)
    lvec: list[Optional[int]] = [None] * (n_max + 1)

    for n in range(l + 1, n_max + 1):
        best = -1
        best_k = 0
        for i in range(1, n):
            value = M[i] + i * comb(n - i, l)
            if value >= best:  # >= keeps the largest maximizer
                best = value
                best_k = i
        M[n] = best
        k[n] = best_k

    for n in range(l + 1, n_max + 1):
        kn = k[n]
        assert kn is not None
        valley = n - 1
        for i in range(kn + 1, n - 1):
            if M[i] + i * comb(n - i, l) <= M[i + 1] + (i + 1) * comb(n - i - 1, l):
                valley = i
                break
        lvec[n] = valley

    return OptimalTable(l=l, n_max=n_max, M=tuple(M), k=tuple(k), lvec=tuple(lvec))


def c_ni(table: OptimalTable, n: int, i: int) -> int:
    """Copy count of the candidate whose leftmost part has length ``i``.

    Equals ``M_i + i * C(n - i, l)``.  Requires ``1 <= i <= n - 1`` and
    ``n <= n_max``.
    """
    if not (1 <= i <= n - 1 and n <= table.n_max):
        raise IndexError(f"c_ni needs 1 <= i <= n-1 <= n_max-1, got n={n}, i={i}, n_max={table.n_max}")
    return table.M[i] + i * comb(n - i, table.l)


def optimal_profile(table: OptimalTable, n: int) -> tuple[int, ...]:
    """Layer profile of the canonical optimal layered n-permutation.

    Follows the ``k_n`` chain: the last layer has length ``n - k_n`` and
    the prefix is the canonical optimal ``k_n``-permutation.  Below the
    pattern length the copy count is zero and the chain bottoms out in
    singleton layers.
    """
    if not 1 <= n <= table.n_max:
        raise IndexError(f"optimal_profile needs 1 <= n <= n_max={table.n_max}, got {n}")
    tail: list[int] = []
    cur = n
    while cur > table.l:
        kcur = table.k[cur]
        assert kcur is not None
        tail.append(cur - kcur)
        cur = kcur
    profile = (1,) * cur + tuple(reversed(tail))
    return require_profile(profile)
