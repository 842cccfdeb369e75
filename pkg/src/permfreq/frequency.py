"""Exhaustive frequency sequences over the symmetric group.

For a fixed pattern ``q`` the frequency sequence of ``n`` is the
histogram of copy counts over all ``n!`` permutations: entry ``c`` is the
number of n-permutations containing exactly ``c`` copies of ``q``.  An
*internal zero* is a zero entry with nonzero entries both below and
above it.  Sequences with ``n`` below the pattern length consist of a
single bucket at zero copies and are classified as trivial.

Enumeration is partitioned by first element into ``n`` independent work
units processed in lexicographic order, so results are deterministic and
the units may run in parallel.  Patterns that are monotone or of the
shape ``1(l+1)l...2`` use vectorized batch counters; anything else falls
back to the generic per-permutation counter.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .layered import build_table
from .perms import count_occurrences, is_layered, require_permutation

__all__ = [
    "DEFAULT_ENUM_BOUND",
    "EnumerationBoundError",
    "FrequencySequence",
    "IZReport",
    "frequency_sequence",
    "internal_zeros",
    "max_count_bruteforce",
    "permutations_with_count",
]

DEFAULT_ENUM_BOUND = 12

# Rough single-core enumeration throughput used only for refusal messages.
_PERMS_PER_SECOND = 500_000

_CHUNK = 60_000


class EnumerationBoundError(ValueError):
    """Raised when an exhaustive scan of S_n is refused as too large."""

    def __init__(self, n: int, bound: int):
        total = math.factorial(n)
        secs = total / _PERMS_PER_SECOND
        super().__init__(
            f"n={n} exceeds the enumeration bound {bound}: S_{n} holds "
            f"{total:,} permutations (roughly {secs:,.0f} s single-threaded); "
            f"pass a larger bound explicitly to proceed"
        )
        self.n = n
        self.bound = bound


@dataclass(frozen=True)
class FrequencySequence:
    """Histogram of copy counts of ``pattern`` over all of S_n.

    ``counts[c]`` is the number of n-permutations with exactly ``c``
    copies; the vector is trimmed so that its last entry is nonzero.
    """

    n: int
    pattern: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def max_count(self) -> int:
        return len(self.counts) - 1


@dataclass(frozen=True)
class IZReport:
    """Internal-zero classification of one frequency sequence."""

    n: int
    pattern: tuple[int, ...]
    classification: str  # "trivial" | "NIZ" | "IZ"
    zero_positions: tuple[int, ...]
    max_count: int


def internal_zeros(seq: FrequencySequence) -> IZReport:
    """Classify ``seq`` and list its internal zeros.

    A sequence is trivial when ``n`` is smaller than the pattern length.
    """
    if seq.n < len(seq.pattern):
        return IZReport(seq.n, seq.pattern, "trivial", (), seq.max_count)
    counts = seq.counts
    first_nonzero = next(c for c, v in enumerate(counts) if v)
    # the last entry is nonzero by construction, so anything after
    # first_nonzero has nonzero entries on both sides
    zeros = tuple(c for c in range(first_nonzero + 1, len(counts) - 1) if counts[c] == 0)
    kind = "IZ" if zeros else "NIZ"
    return IZReport(seq.n, seq.pattern, kind, zeros, seq.max_count)


# ---------------------------------------------------------------------------
# batch counters


def _pattern_kind(q: tuple[int, ...]) -> tuple[str, int]:
    profile = is_layered(q)
    if profile is None:
        return ("generic", 0)
    if all(a == 1 for a in profile):
        return ("inc", len(q))
    if len(profile) == 1:
        return ("dec", len(q))
    if profile == (1, len(q) - 1):
        return ("one-desc", len(q) - 1)
    return ("generic", 0)


def _expected_max(n: int, kind: str, param: int) -> Optional[int]:
    """Known maximum copy count, used to pre-size histograms."""
    if kind in ("inc", "dec"):
        return math.comb(n, param)
    if kind == "one-desc":
        if n <= param:
            return 0
        return build_table(param, n).M[n]
    return None


def _batch_counts(arr: np.ndarray, kind: str, param: int) -> np.ndarray:
    """Copy counts for every row of ``arr`` (one permutation per row)."""
    b, n = arr.shape
    if param > n:
        return np.zeros(b, dtype=np.int64)
    tri = np.triu(np.ones((n, n), dtype=bool), 1)
    left = arr[:, :, None]
    right = arr[:, None, :]
    if kind == "inc":
        step = ((left < right) & tri).astype(np.int32)
    else:
        step = ((left > right) & tri).astype(np.int32)

    if kind in ("inc", "dec"):
        chains = np.ones((b, n, 1), dtype=np.int32)
        for _ in range(param - 1):
            chains = step @ chains
        return chains.sum(axis=(1, 2), dtype=np.int64)

    # kind == "one-desc": count pairs (anchor, descending chain of length
    # param to its right with all entries above the anchor value).
    # desc[b, j, v] = descending chains of the current length starting at
    # position j whose entries all exceed v.
    thresholds = np.arange(n + 1, dtype=arr.dtype)
    desc = (arr[:, :, None] > thresholds[None, None, :]).astype(np.int32)
    for _ in range(param - 1):
        desc = step @ desc
    suffix = np.flip(np.cumsum(np.flip(desc, axis=1), axis=1), axis=1) - desc
    anchor_vals = arr.astype(np.int64)[:, :, None]
    per_anchor = np.take_along_axis(suffix, anchor_vals, axis=2)[:, :, 0]
    return per_anchor.sum(axis=1, dtype=np.int64)


def _iter_blocks(n: int, first: int, chunk: int = _CHUNK):
    rest = [v for v in range(1, n + 1) if v != first]
    perms = itertools.permutations(rest)
    while True:
        block = list(itertools.islice(perms, chunk))
        if not block:
            return
        yield block


def _block_array(n: int, first: int, block: list[tuple[int, ...]]) -> np.ndarray:
    arr = np.empty((len(block), n), dtype=np.int8)
    arr[:, 0] = first
    if n > 1:
        arr[:, 1:] = np.asarray(block, dtype=np.int8)
    return arr


def _unit_histogram(n: int, first: int, pattern: tuple[int, ...], kind: str, param: int) -> np.ndarray:
    """Histogram of copy counts over the unit of permutations starting with ``first``."""
    hist = np.zeros(1, dtype=np.int64)
    for block in _iter_blocks(n, first):
        if kind == "generic":
            counts = np.fromiter(
                (count_occurrences((first,) + rest, pattern) for rest in block),
                dtype=np.int64,
                count=len(block),
            )
        else:
            counts = _batch_counts(_block_array(n, first, block), kind, param)
        bucketed = np.bincount(counts)
        if len(bucketed) > len(hist):
            grown = np.zeros(len(bucketed), dtype=np.int64)
            grown[: len(hist)] = hist
            hist = grown
        hist[: len(bucketed)] += bucketed
    return hist


def _unit_job(args: tuple[int, int, tuple[int, ...], str, int]) -> np.ndarray:
    return _unit_histogram(*args)


def _check_bound(n: int, bound: Optional[int]) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = DEFAULT_ENUM_BOUND if bound is None else bound
    if n > limit:
        raise EnumerationBoundError(n, limit)


def frequency_sequence(
    n: int,
    pattern: Sequence[int],
    *,
    bound: Optional[int] = None,
    workers: int = 1,
    progress: Optional[Callable[[int, int], None]] = None,
) -> FrequencySequence:
    """Exact histogram of copy counts of ``pattern`` over all of S_n.

    Refuses ``n`` above ``bound`` (default 12).  With ``workers > 1`` the
    first-element units run in separate processes; the merged histogram
    is identical to the sequential one.
    """
    q = require_permutation(pattern)
    _check_bound(n, bound)
    if n == 0:
        return FrequencySequence(0, q, (1,))

    kind, param = _pattern_kind(q)
    jobs = [(n, first, q, kind, param) for first in range(1, n + 1)]
    partials: list[np.ndarray] = []
    workers = max(1, min(workers, n))
    if workers == 1:
        for idx, job in enumerate(jobs):
            partials.append(_unit_job(job))
            if progress is not None:
                progress(idx + 1, len(jobs))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for idx, part in enumerate(pool.map(_unit_job, jobs)):
                partials.append(part)
                if progress is not None:
                    progress(idx + 1, len(jobs))

    hint = _expected_max(n, kind, param)
    size = max(len(part) for part in partials)
    if hint is not None:
        size = max(size, hint + 1)
    merged = np.zeros(size, dtype=np.int64)
    for part in partials:
        merged[: len(part)] += part

    last = int(np.max(np.nonzero(merged)[0]))
    counts = tuple(int(v) for v in merged[: last + 1])
    if sum(counts) != math.factorial(n):
        raise RuntimeError("histogram mass does not equal n!; enumeration is broken")
    return FrequencySequence(n, q, counts)


def max_count_bruteforce(
    n: int,
    pattern: Sequence[int],
    *,
    bound: Optional[int] = None,
) -> tuple[int, tuple[int, ...]]:
    """Maximum copy count over S_n together with its first witness.

    The witness is the lexicographically least permutation attaining the
    maximum.
    """
    q = require_permutation(pattern)
    _check_bound(n, bound)
    if n == 0:
        return 0, ()
    kind, param = _pattern_kind(q)
    best = -1
    witness: tuple[int, ...] = ()
    for first in range(1, n + 1):
        for block in _iter_blocks(n, first):
            if kind == "generic":
                for rest in block:
                    p = (first,) + rest
                    c = count_occurrences(p, q)
                    if c > best:
                        best, witness = c, p
            else:
                arr = _block_array(n, first, block)
                counts = _batch_counts(arr, kind, param)
                idx = int(np.argmax(counts))
                if int(counts[idx]) > best:
                    best = int(counts[idx])
                    witness = tuple(int(v) for v in arr[idx])
    return best, witness


def permutations_with_count(
    n: int,
    pattern: Sequence[int],
    target: int,
    *,
    bound: Optional[int] = None,
) -> list[tuple[int, ...]]:
    """All n-permutations with exactly ``target`` copies, in lex order."""
    q = require_permutation(pattern)
    _check_bound(n, bound)
    if n == 0:
        return [()] if target == 0 else []
    kind, param = _pattern_kind(q)
    found: list[tuple[int, ...]] = []
    for first in range(1, n + 1):
        for block in _iter_blocks(n, first):
            if kind == "generic":
                found.extend(
                    (first,) + rest
                    for rest in block
                    if count_occurrences((first,) + rest, q) == target
                )
            else:
                arr = _block_array(n, first, block)
                counts = _batch_counts(arr, kind, param)
                for idx in np.nonzero(counts == target)[0]:
                    found.append(tuple(int(v) for v in arr[idx]))
    return found
