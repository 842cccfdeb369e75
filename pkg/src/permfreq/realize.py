"""Constructive permutations with a prescribed number of pattern copies.

Two constructions are provided.

``inversions_no_132(n, c)`` builds an n-permutation with exactly ``c``
inversions and no 132-copies: append ``n`` while ``c`` fits inside the
prefix, otherwise prepend ``n`` (which adds ``n - 1`` inversions and no
132s).

``realize_132(n, c)`` builds an n-permutation with exactly ``c`` copies
of 132, or reports failure when no such permutation exists.  The top
layer of an optimal layered permutation contributes ``k`` copies per
inversion placed in it, so writing ``c = k*s + t`` with ``t`` realizable
in S_k and ``s`` at most ``C(n - k, 2)`` lets the construction recurse:
take a ``t``-realizing prefix on ``1..k`` and stack a 132-free block with
``s`` inversions on top.  The decomposition is scanned deterministically:
``k`` starts at the recursion maximizer ``k_n`` and then widens (larger
``k`` first, then smaller), and within each ``k`` the inversion load
``s`` is scanned from the largest feasible value downward, keeping ``t``
small.  Results for ``n <= 8`` come from a shipped table that was
generated by this same scan, with exhaustive search filling the few
realizable values the scan cannot reach.  Failure is a first-class
result: it certifies that the scan found no decomposition, and for
``n <= 10`` it happens exactly at the internal zeros of the frequency
sequence.

Every successful construction is re-counted before being returned.
"""

from __future__ import annotations

import json
from importlib import resources
from math import comb
from typing import Callable, Optional

from .layered import OptimalTable, build_table
from .perms import (
    count_monotone,
    count_occurrences,
    descending,
    format_permutation,
    parse_permutation,
)

__all__ = [
    "BASE_TABLE_MAX_N",
    "inversions_no_132",
    "realize_132",
    "monotone_second_best",
    "rebuild_base_table",
]

BASE_TABLE_MAX_N = 8

_PATTERN_132 = (1, 3, 2)

_table_cache: dict[str, OptimalTable] = {}


def _table132(n: int) -> OptimalTable:
    table = _table_cache.get("t")
    if table is None or table.n_max < n:
        table = build_table(2, max(16, n))
        _table_cache["t"] = table
    return table


def _max_132(n: int) -> int:
    if n <= 2:
        return 0
    return _table132(n).M[n]


def inversions_no_132(n: int, c: int) -> tuple[int, ...]:
    """An n-permutation with exactly ``c`` inversions and no 132-copies."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= c <= comb(n, 2):
        raise ValueError(f"c must satisfy 0 <= c <= C({n},2) = {comb(n, 2)}, got {c}")
    return _assemble_no132(n, c)


def _assemble_no132(n: int, c: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    if c <= comb(n - 1, 2):
        return _assemble_no132(n - 1, c) + (n,)
    return (n,) + _assemble_no132(n - 1, c - (n - 1))


def _scan_decompositions(
    n: int,
    c: int,
    fetch: Callable[[int, int], Optional[tuple[int, ...]]],
) -> Optional[tuple[int, ...]]:
    """Find ``c = k*s + t`` with a realizable ``t`` and build the result.

    ``fetch(k, t)`` supplies a ``t``-realizing permutation of ``1..k`` or
    ``None``.  Scan order is deterministic: ``k = k_n``, then upward to
    ``n - 1``, then downward to 1; within each ``k``, ``s`` descends from
    the largest feasible value.
    """
    kn = _table132(n).k_at(n)
    order = [kn, *range(kn + 1, n), *range(kn - 1, 0, -1)]
    for k in order:
        m = n - k
        cap = _max_132(k)
        s = min(comb(m, 2), c // k)
        while s >= 0:
            t = c - k * s
            if t > cap:
                break  # t only grows as s shrinks
            prefix = fetch(k, t)
            if prefix is not None:
                top = tuple(v + k for v in inversions_no_132(m, s))
                return prefix + top
            s -= 1
    return None


def _construct_132(
    n: int,
    c: int,
    fetch: Callable[[int, int], Optional[tuple[int, ...]]],
) -> Optional[tuple[int, ...]]:
    if c == 0:
        return descending(n)
    if n <= 2:
        return None  # only c = 0 exists below length 3
    return _scan_decompositions(n, c, fetch)


def _load_base_table() -> dict[int, dict[int, tuple[int, ...]]]:
    table = _table_cache.get("base")
    if table is not None:
        return table  # type: ignore[return-value]
    raw = resources.files(__package__).joinpath("data/realize132_base.json").read_text()
    payload = json.loads(raw)
    if payload.get("version") != 1:
        raise RuntimeError("unsupported realize table version")
    table = {
        int(n): {int(c): parse_permutation(word) for c, word in row.items()}
        for n, row in payload["witnesses"].items()
    }
    _table_cache["base"] = table  # type: ignore[assignment]
    return table


def realize_132(n: int, c: int) -> Optional[tuple[int, ...]]:
    """An n-permutation with exactly ``c`` copies of 132, or ``None``.

    ``None`` certifies that the decomposition scan found no construction;
    for ``n <= 10`` this coincides with the internal zeros of the
    frequency sequence.  Successful results are verified by recounting.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    best = _max_132(n)
    if not 0 <= c <= best:
        raise ValueError(f"c must satisfy 0 <= c <= M_{n} = {best}, got {c}")

    if n <= BASE_TABLE_MAX_N:
        result = _load_base_table().get(n, {}).get(c)
    else:
        result = _construct_132(n, c, lambda k, t: realize_132(k, t))
    if result is None:
        return None
    found = count_occurrences(result, _PATTERN_132)
    if found != c:
        raise RuntimeError(f"self-check failed: built {result} with {found} copies, wanted {c}")
    return result


def monotone_second_best(n: int, l: int) -> tuple[tuple[int, ...], int]:
    """The adjacent transposition ``21 34...n`` and its monotone copy count.

    For the increasing pattern of length ``l >= 3`` this is the largest
    copy count below the maximum ``C(n, l)``, namely
    ``C(n-1, l) + C(n-2, l-1)``.
    """
    if not n >= l >= 3:
        raise ValueError("need n >= l >= 3")
    p = (2, 1) + tuple(range(3, n + 1))
    value = comb(n - 1, l) + comb(n - 2, l - 1)
    if count_monotone(p, l) != value:
        raise RuntimeError("self-check failed for the adjacent transposition count")
    return p, value


def rebuild_base_table(max_n: int = BASE_TABLE_MAX_N) -> dict:
    """Regenerate the shipped witness table for ``n <= max_n``.

    Entries are produced by the decomposition scan whenever it succeeds
    (bootstrapping on smaller lengths), so runtime outputs are identical
    with or without the table.  Realizable values the scan cannot reach
    are filled with the lexicographically least witness found by
    exhaustive search; genuinely unrealizable values are absent.
    """
    import itertools

    known: dict[int, dict[int, tuple[int, ...]]] = {}
    for n in range(1, max_n + 1):
        row: dict[int, tuple[int, ...]] = {}
        for c in range(_max_132(n) + 1):
            built = _construct_132(n, c, lambda k, t: known.get(k, {}).get(t))
            if built is None:
                built = next(
                    (
                        p
                        for p in itertools.permutations(range(1, n + 1))
                        if count_occurrences(p, _PATTERN_132) == c
                    ),
                    None,
                )
            if built is not None:
                assert count_occurrences(built, _PATTERN_132) == c
                row[c] = built
        known[n] = row
    return {
        "version": 1,
        "max_n": max_n,
        "pattern": "132",
        "witnesses": {
            str(n): {str(c): format_permutation(p) for c, p in sorted(row.items())}
            for n, row in sorted(known.items())
        },
    }
