"""Permutations in one-line notation, layered structure, and pattern counting.

Permutations are tuples of the integers ``1..n``.  A *copy* of a pattern
``q`` (itself a permutation) inside ``p`` is a subsequence of ``p`` whose
entries are in the same relative order as ``q``; for example ``41523``
contains exactly two copies of ``132``, namely the subsequences ``152``
and ``153``.

A permutation is *layered* when it is a concatenation of strictly
decreasing blocks (the layers) whose values increase from one block to
the next, e.g. ``321 54 876 9``.  A layered permutation is determined by
its layer-length profile, here ``(3, 2, 3, 1)``.

All counts are plain Python integers, so arithmetic is exact and cannot
silently overflow.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Optional, Sequence

__all__ = [
    "require_permutation",
    "parse_permutation",
    "format_permutation",
    "require_profile",
    "parse_profile",
    "format_profile",
    "identity",
    "descending",
    "reverse_complement",
    "count_occurrences",
    "count_monotone",
    "count_inversions",
    "is_layered",
    "from_layers",
    "count_q_in_layered",
]


def require_permutation(word: Iterable[int]) -> tuple[int, ...]:
    """Return ``word`` as a tuple, checking it is a bijection on ``1..n``.

    >>> require_permutation([3, 1, 2])
    (3, 1, 2)
    """
    w = tuple(int(v) for v in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse a permutation word.

    Words of length at most 9 may be written without separators
    (``"41523"``); longer ones use comma-separated values.

    >>> parse_permutation("41523")
    (4, 1, 5, 2, 3)
    >>> parse_permutation("10,1,2,3,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        values = [int(part) for part in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"malformed permutation word: {text!r}")
        values = [int(ch) for ch in text]
    return require_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    """Inverse of :func:`parse_permutation` (digits for n <= 9, else CSV)."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def require_profile(lengths: Iterable[int]) -> tuple[int, ...]:
    """Return a validated layer profile (nonempty, all entries >= 1)."""
    prof = tuple(int(a) for a in lengths)
    if not prof or any(a < 1 for a in prof):
        raise ValueError(f"invalid layer profile: {prof!r}")
    return prof


def parse_profile(text: str) -> tuple[int, ...]:
    """Parse a comma-separated layer profile such as ``"3,2,3,1"``."""
    try:
        return require_profile(int(part) for part in text.strip().split(","))
    except ValueError:
        raise ValueError(f"malformed layer profile: {text!r}") from None


def format_profile(profile: Sequence[int]) -> str:
    return ",".join(str(a) for a in profile)


def identity(n: int) -> tuple[int, ...]:
    """The increasing permutation ``12...n``."""
    return tuple(range(1, n + 1))


def descending(n: int) -> tuple[int, ...]:
    """The decreasing permutation ``n(n-1)...1``."""
    return tuple(range(n, 0, -1))


def reverse_complement(p: Sequence[int]) -> tuple[int, ...]:
    """Reverse the positions and complement the values of ``p``.

    Applying this map to both a permutation and a pattern preserves the
    number of copies.

    >>> reverse_complement((4, 1, 5, 2, 3))
    (3, 4, 1, 5, 2)
    """
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def count_occurrences(p: Sequence[int], q: Sequence[int]) -> int:
    """Number of subsequences of ``p`` in the same relative order as ``q``.

    Backtracks over candidate positions left to right, pruning branches
    that cannot be completed.  Intended for desk-scale inputs (the cost
    grows like ``C(n, l)``).

    >>> count_occurrences((4, 1, 5, 2, 3), (1, 3, 2))
    2
    >>> count_occurrences((3, 2, 1), (1, 2, 3))
    0
    """
    n, l = len(p), len(q)
    if l < 1:
        raise ValueError("pattern must have length at least 1")
    if l > n:
        return 0
    # gt[t][s] says whether pattern slot t must exceed slot s.
    gt = [tuple(q[t] > q[s] for s in range(t)) for t in range(l)]
    chosen = [0] * l

    def extend(t: int, start: int) -> int:
        if t == l:
            return 1
        total = 0
        need = gt[t]
        for i in range(start, n - (l - t) + 1):
            v = p[i]
            if all((v > chosen[s]) == need[s] for s in range(t)):
                chosen[t] = v
                total += extend(t + 1, i + 1)
        return total

    return extend(0, 0)


def count_monotone(p: Sequence[int], l: int) -> int:
    """Number of increasing subsequences of length ``l`` in ``p``.

    Equals ``count_occurrences(p, (1, 2, ..., l))`` but runs in
    ``O(n^2 l)`` time via a length-indexed dynamic program.

    >>> count_monotone((2, 1, 3, 4), 3)
    2
    >>> count_monotone((4, 3, 2, 1), 2)
    0
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    n = len(p)
    if l > n:
        return 0
    # ways[j] = number of increasing chains of the current length ending at j
    ways = [1] * n
    for _ in range(l - 1):
        nxt = [0] * n
        for j in range(n):
            vj = p[j]
            acc = 0
            for i in range(j):
                if p[i] < vj:
                    acc += ways[i]
            nxt[j] = acc
        ways = nxt
    return sum(ways)


def count_inversions(p: Sequence[int]) -> int:
    """Number of pairs appearing in decreasing order.

    >>> count_inversions((3, 1, 2))
    2
    """
    n = len(p)
    return sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))


def is_layered(p: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Return the layer profile of ``p`` if it is layered, else ``None``.

    >>> is_layered((3, 2, 1, 5, 4, 8, 7, 6, 9))
    (3, 2, 3, 1)
    >>> is_layered((2, 3, 1)) is None
    True
    """
    n = len(p)
    if n == 0:
        return None
    runs = []
    run = 1
    for i in range(1, n):
        if p[i] < p[i - 1]:
            run += 1
        else:
            runs.append(run)
            run = 1
    runs.append(run)
    profile = tuple(runs)
    return profile if from_layers(profile) == tuple(p) else None


def from_layers(profile: Sequence[int]) -> tuple[int, ...]:
    """The unique layered permutation with the given layer lengths.

    >>> from_layers((1, 4))
    (1, 5, 4, 3, 2)
    >>> from_layers((3, 2, 3, 1))
    (3, 2, 1, 5, 4, 8, 7, 6, 9)
    """
    prof = require_profile(profile)
    word: list[int] = []
    top = 0
    for a in prof:
        top += a
        word.extend(range(top, top - a, -1))
    return tuple(word)


def count_q_in_layered(profile: Sequence[int], l: int) -> int:
    """Copies of the pattern ``1(l+1)l...2`` inside a layered permutation.

    Every copy takes one element from some layer and ``l`` elements from
    a later layer, so the count is ``sum over i < j of a_i * C(a_j, l)``.

    >>> count_q_in_layered((1, 4), 3)
    4
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    prof = require_profile(profile)
    total = 0
    earlier = 0
    for a in prof:
        total += earlier * comb(a, l)
        earlier += a
    return total
