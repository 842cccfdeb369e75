"""Finite strict posets: ordinal sums, antichains, and pattern counting.

Elements are labeled ``0..size-1``.  The order is stored as bitmask
down-sets: ``below[x]`` is the set of elements strictly less than ``x``.
Construction validates irreflexivity, antisymmetry and transitivity.

The poset of a permutation ``p`` has one element per value, with
``v < w`` exactly when ``v`` appears before ``w`` in ``p`` and ``v < w``
as integers.  These are precisely the posets of order dimension at most
two.  The only pattern poset counted here is the "claw" ``A_1 (+) A_l``
(a unique minimum below ``l`` pairwise incomparable elements), which is
the poset of the permutation pattern ``1(l+1)l...2``; its copies are
recognized structurally, so no general isomorphism machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .perms import require_permutation

__all__ = [
    "Poset",
    "Decomposition",
    "antichain",
    "ordinal_sum",
    "poset_from_permutation",
    "poset_from_covers",
    "covers",
    "down_set",
    "max_elements",
    "strip_max",
    "is_lot",
    "is_layered_poset",
    "mu",
    "count_pattern",
    "reassign",
    "find_l_decomposition",
]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """Strict partial order on ``0..size-1`` via down-set bitmasks."""

    size: int
    below: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.size
        if n < 0 or len(self.below) != n:
            raise ValueError("below must list one mask per element")
        full = (1 << n) - 1
        for x, mask in enumerate(self.below):
            if mask & ~full:
                raise ValueError(f"down-set of {x} mentions elements outside 0..{n - 1}")
            if mask >> x & 1:
                raise ValueError(f"order is not irreflexive at {x}")
        for y, mask in enumerate(self.below):
            for x in _bits(mask):
                if self.below[x] >> y & 1:
                    raise ValueError(f"order is not antisymmetric on ({x}, {y})")
                if self.below[x] & ~mask:
                    raise ValueError(f"order is not transitive below {y}")

    def less(self, x: int, y: int) -> bool:
        return bool(self.below[y] >> x & 1)


@dataclass(frozen=True)
class Decomposition:
    """An ordinal split ``P = parts[0] (+) parts[1]``.

    ``split_index`` is the size of the lower part.  The upper part is
    layered and no claw copy uses more than one lower-part element.
    """

    split_index: int
    parts: tuple[Poset, Poset]


def _above_masks(p: Poset) -> list[int]:
    above = [0] * p.size
    for y, mask in enumerate(p.below):
        for x in _bits(mask):
            above[x] |= 1 << y
    return above


def antichain(n: int) -> Poset:
    """``n`` mutually incomparable elements."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poset(n, (0,) * n)


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """Stack ``q`` entirely above ``p`` (labels of ``q`` shift up)."""
    low = (1 << p.size) - 1
    below = list(p.below) + [(mask << p.size) | low for mask in q.below]
    return Poset(p.size + q.size, tuple(below))


def poset_from_permutation(word: Sequence[int]) -> Poset:
    """The poset of a permutation; element ``v - 1`` stands for value ``v``."""
    p = require_permutation(word)
    n = len(p)
    position = {v: i for i, v in enumerate(p)}
    below = []
    for v in range(1, n + 1):
        mask = 0
        for w in range(1, v):
            if position[w] < position[v]:
                mask |= 1 << (w - 1)
        below.append(mask)
    return Poset(n, tuple(below))


def covers(p: Poset) -> list[tuple[int, int]]:
    """Cover pairs ``(x, y)`` with ``x < y`` and nothing in between."""
    above = _above_masks(p)
    pairs = []
    for y in range(p.size):
        for x in _bits(p.below[y]):
            if not p.below[y] & above[x]:
                pairs.append((x, y))
    return pairs


def poset_from_covers(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Rebuild a poset from cover pairs by taking the transitive closure."""
    below = [0] * n
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"cover ({x}, {y}) outside 0..{n - 1}")
        below[y] |= 1 << x
    changed = True
    while changed:
        changed = False
        for y in range(n):
            merged = below[y]
            for x in _bits(below[y]):
                merged |= below[x]
            if merged != below[y]:
                below[y] = merged
                changed = True
    return Poset(n, tuple(below))


def down_set(p: Poset, x: int) -> set[int]:
    """The open down-set ``{y : y < x}``."""
    if not 0 <= x < p.size:
        raise ValueError(f"no element {x}")
    return set(_bits(p.below[x]))


def max_elements(p: Poset) -> set[int]:
    above = _above_masks(p)
    return {x for x in range(p.size) if above[x] == 0}


def _induced(p: Poset, mask: int) -> Poset:
    keep = list(_bits(mask))
    index = {x: i for i, x in enumerate(keep)}
    below = []
    for x in keep:
        sub = 0
        for y in _bits(p.below[x] & mask):
            sub |= 1 << index[y]
        below.append(sub)
    return Poset(len(keep), tuple(below))


def strip_max(p: Poset) -> Poset:
    """The poset with all maximal elements removed (relabeled in order)."""
    above = _above_masks(p)
    mask = 0
    for x in range(p.size):
        if above[x]:
            mask |= 1 << x
    return _induced(p, mask)


def is_lot(p: Poset) -> bool:
    """Whether ``p`` equals (non-maximal part) (+) (maximal antichain)."""
    above = _above_masks(p)
    nonmax = 0
    for x in range(p.size):
        if above[x]:
            nonmax |= 1 << x
    return all(p.below[x] == nonmax for x in range(p.size) if not above[x])


def _layered_profile(p: Poset, mask: int) -> Optional[tuple[int, ...]]:
    """Layer sizes of the induced subposet on ``mask``, or ``None``."""
    above = _above_masks(p)
    reversed_sizes = []
    remaining = mask
    while remaining:
        tops = 0
        for x in _bits(remaining):
            if above[x] & remaining == 0:
                tops |= 1 << x
        rest = remaining & ~tops
        for x in _bits(tops):
            if p.below[x] & remaining != rest:
                return None
        reversed_sizes.append(tops.bit_count())
        remaining = rest
    return tuple(reversed(reversed_sizes))


def is_layered_poset(p: Poset) -> Optional[tuple[int, ...]]:
    """Layer profile if ``p`` is an ordinal sum of antichains, else ``None``."""
    if p.size == 0:
        return None
    return _layered_profile(p, (1 << p.size) - 1)


def mu(p: Poset) -> int:
    """Largest number of maximal elements sharing one open down-set.

    Equals ``|max P|`` exactly when ``p`` is layered on top.
    """
    if p.size == 0:
        raise ValueError("mu needs a nonempty poset")
    groups: dict[int, int] = {}
    for x in max_elements(p):
        groups[p.below[x]] = groups.get(p.below[x], 0) + 1
    return max(groups.values())


def _antichains(mask: int, l: int, comp: Sequence[int]) -> int:
    if l == 0:
        return 1
    if mask.bit_count() < l:
        return 0
    total = 0
    while mask:
        low = mask & -mask
        mask ^= low
        v = low.bit_length() - 1
        total += _antichains(mask & ~comp[v], l - 1, comp)
    return total


def _claw_copies(p: Poset, l: int, allowed: int) -> int:
    above = _above_masks(p)
    comp = [p.below[x] | above[x] for x in range(p.size)]
    total = 0
    for bottom in _bits(allowed):
        total += _antichains(above[bottom] & allowed, l, comp)
    return total


def count_pattern(
    p: Poset,
    l: int,
    require: Iterable[int] = (),
    forbid: Iterable[int] = (),
) -> int:
    """Induced copies of the claw ``A_1 (+) A_l`` inside ``p``.

    A copy is an ``l + 1``-subset with a unique minimum below all others
    and the remaining ``l`` elements pairwise incomparable.  When
    ``require`` is nonempty only copies meeting it are counted; copies
    touching ``forbid`` are never counted.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    req = 0
    for x in require:
        req |= 1 << x
    forb = 0
    for x in forbid:
        forb |= 1 << x
    full = (1 << p.size) - 1
    if (req | forb) & ~full:
        raise ValueError("require/forbid mention elements outside the poset")
    if req & forb:
        raise ValueError("require and forbid must be disjoint")
    allowed = full & ~forb
    total = _claw_copies(p, l, allowed)
    if req:
        total -= _claw_copies(p, l, allowed & ~req)
    return total


def reassign(p: Poset, x: int, y: int) -> Poset:
    """Give the maximal element ``x`` the down-set of the maximal ``y``.

    All other down-sets are unchanged; the result is validated.
    """
    tops = max_elements(p)
    if x == y or x not in tops or y not in tops:
        raise ValueError("reassign needs two distinct maximal elements")
    below = list(p.below)
    below[x] = p.below[y]
    return Poset(p.size, tuple(below))


def find_l_decomposition(p: Poset, l: int) -> Optional[Decomposition]:
    """Split ``p`` as lower (+) upper with a layered upper part.

    Scans the ordinal cuts from the largest possible upper part downward
    (the trivial cuts included) and returns the first split where the
    upper part is layered and every claw copy meets the lower part in at
    most one element; ``None`` when no cut qualifies.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    n = p.size
    full = (1 << n) - 1
    sizes = [p.below[x].bit_count() for x in range(n)]
    total = _claw_copies(p, l, full)
    for d in range(n + 1):
        low_mask = 0
        for x in range(n):
            if sizes[x] < d:
                low_mask |= 1 << x
        if low_mask.bit_count() != d:
            continue
        if any(low_mask & ~p.below[u] for u in _bits(full & ~low_mask)):
            continue
        up_mask = full & ~low_mask
        if up_mask and _layered_profile(p, up_mask) is None:
            continue
        # copies must take at most one element from the lower part
        inside = _claw_copies(p, l, up_mask)
        crossing = sum(
            _claw_copies(p, l, up_mask | (1 << x)) - inside for x in _bits(low_mask)
        )
        if total != inside + crossing:
            continue
        return Decomposition(d, (_induced(p, low_mask), _induced(p, up_mask)))
    return None
