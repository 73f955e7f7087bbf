"""Bijections on S_n that swap the occurrence counts of paired mesh patterns.

Every transform here sends a permutation pi to a permutation pi' such that
the number of occurrences of the first pattern in pi equals the number of
occurrences of the second pattern in pi', and vice versa.  Each transform
belongs to a family keyed by the structure of the shading it supports;
:func:`transform_for` dispatches a catalog family record to a callable and
:func:`verify_pair` checks the swap property exhaustively over S_n.

Families and their parameters:

============================  =================================================
``direct``                    boundary-triple swaps, one rule per pair_id 1-11
``oth1``                      swap the tail of the unique occurrence rooted at
                              each left-to-right minimum
``complement_after_one``      complement the values 2..n when pi starts with 1
``len2_reduction``            strip a forced leading 1, run the length-2 sweep
``ltr_interval_complement``   complement values inside each gap between
                              consecutive left-to-right minima
``per_interval_len2``         length-2 sweep on each rectangle hanging off a
                              left-to-right minimum
``pair_swap``                 transpose the adjacent tail of every occurrence
``a1_complement``             complement the interval block of occurrence tails
``nine_box``                  block-structured max-swap sweep
``per_interval_nine_box``     the same sweep, occurrences confined to minima
                              rectangles
============================  =================================================
"""
from __future__ import annotations

import dataclasses
from collections.abc import Callable, Sequence

from . import engine
from .mesh import MeshPattern, ShadingSet, occurrence_box_mask, occurrences
from .perms import (
    Perm,
    complement,
    complement_on_set,
    enumerate_sn,
    left_to_right_minima,
    lex_rank,
    reverse,
    standardize,
)

FAMILY_NAMES = (
    "direct",
    "oth1",
    "complement_after_one",
    "len2_reduction",
    "ltr_interval_complement",
    "per_interval_len2",
    "pair_swap",
    "a1_complement",
    "nine_box",
    "per_interval_nine_box",
)

#: Families whose transform is its own inverse.
INVOLUTION_FAMILIES = frozenset(
    ("direct", "oth1", "complement_after_one", "ltr_interval_complement", "pair_swap", "a1_complement")
)


class UnsupportedShadingError(ValueError):
    """Raised when a transform is asked to handle a shading outside its family."""


def _pair_for(shading: ShadingSet) -> tuple[MeshPattern, MeshPattern]:
    return MeshPattern((1, 2, 3), shading), MeshPattern((1, 3, 2), shading)


def _pair_occurrences(p: Sequence[int], shading: ShadingSet) -> list[tuple[int, ...]]:
    p1, p2 = _pair_for(shading)
    return sorted(occurrences(p, p1) + occurrences(p, p2))


# ---------------------------------------------------------------------------
# direct boundary-triple rules (pairs 1-11)

_FULL3 = ShadingSet.full(3)
_DIRECT_SEARCH_SHADINGS = {
    6: ShadingSet(3, _FULL3.mask & ~ShadingSet.from_boxes(3, [(0, 3), (3, 0)]).mask),
    7: ShadingSet(3, _FULL3.mask & ~ShadingSet.from_boxes(3, [(0, 3), (3, 0), (3, 3)]).mask),
    8: ShadingSet(3, _FULL3.mask & ~ShadingSet.from_boxes(3, [(0, 0), (0, 3), (3, 0)]).mask),
}


def direct_transform(p: Sequence[int], pair_id: int) -> Perm:
    """One-rule bijections for the eleven heavily shaded pairs.

    Each rule swaps the unique way the two patterns can occur: a boundary
    triple of extreme values, or every disjoint consecutive-triple
    occurrence for pair_ids 6-8.
    """
    p = tuple(p)
    n = len(p)
    if pair_id == 1:
        if p == (1, 2, 3):
            return (1, 3, 2)
        if p == (1, 3, 2):
            return (1, 2, 3)
        return p
    if pair_id == 2:
        if n >= 3 and p[:3] in ((1, 2, 3), (1, 3, 2)):
            return (p[0], p[2], p[1], *p[3:])
        return p
    if pair_id == 3:
        if n >= 3 and p[-3:] in ((n - 2, n - 1, n), (n - 2, n, n - 1)):
            return (*p[:-2], p[-1], p[-2])
        return p
    if pair_id == 4:
        if n >= 3 and p[0] == 1 and (p[1], p[-1]) in ((2, n), (n, 2)):
            return (p[0], p[-1], *p[2:-1], p[1])
        return p
    if pair_id == 5:
        if n >= 3 and p[0] == 1 and {p[-2], p[-1]} == {n - 1, n}:
            return (*p[:-2], p[-1], p[-2])
        return p
    if pair_id in (6, 7, 8):
        out = list(p)
        for occ in _pair_occurrences(p, _DIRECT_SEARCH_SHADINGS[pair_id]):
            b, c = occ[1], occ[2]
            out[b - 1], out[c - 1] = out[c - 1], out[b - 1]
        return tuple(out)
    if pair_id in (9, 10, 11):
        if n >= 3 and {p[-2], p[-1]} == {n - 1, n}:
            return (*p[:-2], p[-1], p[-2])
        return p
    raise ValueError(f"no direct rule for pair id {pair_id}")


# ---------------------------------------------------------------------------
# minima-rooted occurrence swap (pair 12)

_OTH1_SHADING = ShadingSet.from_boxes(
    3, [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
)


def _occurrence_rooted_at(host: Sequence[int], pattern: MeshPattern, first: int) -> tuple[int, ...] | None:
    """Lexicographically first occurrence whose first position is ``first``."""
    n = len(host)
    shading = pattern.shading
    for b in range(first + 1, n):
        for c in range(b + 1, n + 1):
            positions = (first, b, c)
            sub = (host[first - 1], host[b - 1], host[c - 1])
            if standardize(sub) != pattern.tau:
                continue
            if occurrence_box_mask(host, positions).disjoint_from(shading):
                return positions
    return None


def oth1_transform(p: Sequence[int]) -> Perm:
    """Swap the tail of the occurrence rooted at each left-to-right minimum.

    Minima are processed in position order; at most one occurrence of either
    pattern starts at each minimum of the current permutation, and its second
    and third values are exchanged.  The swaps never move a minimum, so the
    root positions are fixed up front.
    """
    p1, p2 = _pair_for(_OTH1_SHADING)
    cur = list(p)
    for pos in left_to_right_minima(p):
        occ = _occurrence_rooted_at(cur, p1, pos) or _occurrence_rooted_at(cur, p2, pos)
        if occ is not None:
            b, c = occ[1], occ[2]
            cur[b - 1], cur[c - 1] = cur[c - 1], cur[b - 1]
    return tuple(cur)


# ---------------------------------------------------------------------------
# complement after a forced leading 1 (pairs 13-18)


def complement_after_one(p: Sequence[int]) -> Perm:
    """Complement the values 2..n in place when the permutation starts with 1.

    >>> complement_after_one((1, 2, 4, 3, 5))
    (1, 5, 3, 4, 2)
    """
    p = tuple(p)
    if not p or p[0] != 1:
        return p
    return complement_on_set(p, range(2, len(p) + 1))


def _is_complement_after_one_shading(shading: ShadingSet) -> bool:
    """Occurrences must be rooted at a leading 1 and the stripped shading
    must be value-symmetric, so that complementing the tail swaps the pair."""
    if shading.k != 3:
        return False
    boxes = set(shading.boxes())
    if not (_COL0_K3 | _ROW0_REST_K3) <= boxes:
        return False
    inner = {(i - 1, j - 1) for i, j in boxes if i >= 1 and j >= 1}
    if boxes != _COL0_K3 | _ROW0_REST_K3 | _shift_up(inner):
        return False
    return inner == {(i, 2 - j) for i, j in inner}


# ---------------------------------------------------------------------------
# length-2 sweep and its two reductions (pairs 19-22, 30, 31)

_L2_BASE = ((0, 0), (0, 1), (1, 0), (1, 1))
_L2_TAIL = (2, 2)


def _k2_box_map(symmetry: str | None) -> Callable[[tuple[int, int]], tuple[int, int]]:
    if symmetry is None:
        return lambda b: b
    if symmetry == "reverse":
        return lambda b: (2 - b[0], b[1])
    if symmetry == "complement":
        return lambda b: (b[0], 2 - b[1])
    return lambda b: (2 - b[0], 2 - b[1])  # reverse then complement


def _len2_frames() -> dict[int, tuple[str | None, bool]]:
    frames: dict[int, tuple[str | None, bool]] = {}
    for symmetry in (None, "reverse", "complement", "rc"):
        f = _k2_box_map(symmetry)
        for tail in (False, True):
            boxes = _L2_BASE + ((_L2_TAIL,) if tail else ())
            frames[ShadingSet.from_boxes(2, map(f, boxes)).mask] = (symmetry, tail)
    return frames


#: mask of a supported length-2 shading -> (host symmetry, tail box present)
_LEN2_FRAMES = _len2_frames()


def _host_sym(p: Sequence[int], symmetry: str | None) -> Perm:
    if symmetry is None:
        return tuple(p)
    if symmetry == "reverse":
        return reverse(p)
    if symmetry == "complement":
        return complement(p)
    return reverse(complement(p))


def _sweep_lower(vals: Sequence[int], tail_box: bool) -> tuple[int, ...]:
    """Canonical length-2 sweep for the lower 2x2 frame.

    A pair of positions i < j is live when every other position before j
    holds a value above max(w_i, w_j), and, with the tail box, every
    position after j holds a value below that max.  Repeatedly the live pair
    with the largest second position below the previous swap is transposed.
    """
    w = list(vals)
    m = len(w)
    jcap = m - 1
    while jcap >= 1:
        found = None
        for j in range(jcap, 0, -1):
            for i in range(j):
                hi = max(w[i], w[j])
                if any(w[t] < hi for t in range(j) if t != i):
                    continue
                if tail_box and any(w[t] > hi for t in range(j + 1, m)):
                    continue
                found = (i, j)
                break
            if found:
                break
        if not found:
            break
        i, j = found
        w[i], w[j] = w[j], w[i]
        jcap = j - 1
    return tuple(w)


def len2_swap_transform(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Length-2 sweep for any of the eight supported frames.

    The four rotations of the lower 2x2 frame, each with or without its
    opposite tail box, are handled by conjugating the host with the matching
    symmetry and running the canonical sweep.
    """
    if shading.k != 2 or shading.mask not in _LEN2_FRAMES:
        raise UnsupportedShadingError(f"length-2 sweep does not support shading {shading.boxes()}")
    symmetry, tail = _LEN2_FRAMES[shading.mask]
    return _host_sym(_sweep_lower(_host_sym(p, symmetry), tail), symmetry)


_COL0_K3 = frozenset((0, j) for j in range(4))
_ROW0_REST_K3 = frozenset((i, 0) for i in range(1, 4))


def _shift_up(boxes: frozenset[tuple[int, int]] | set[tuple[int, int]]) -> set[tuple[int, int]]:
    return {(i + 1, j + 1) for i, j in boxes}


def _reduce_prepend_one(shading: ShadingSet) -> ShadingSet | None:
    """Length-2 shading left after stripping a forced minimal first element."""
    boxes = set(shading.boxes())
    if not (_COL0_K3 | _ROW0_REST_K3) <= boxes:
        return None
    inner = {(i - 1, j - 1) for i, j in boxes if i >= 1 and j >= 1}
    if boxes != _COL0_K3 | _ROW0_REST_K3 | _shift_up(inner):
        return None
    reduced = ShadingSet.from_boxes(2, inner)
    return reduced if reduced.mask in _LEN2_FRAMES else None


def len2_reduction_transform(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Strip the forced leading 1 and sweep the standardized remainder.

    Occurrences of the supported shadings must start at a first entry equal
    to 1, so permutations not starting with 1 are fixed points.
    """
    reduced = _reduce_prepend_one(shading)
    if reduced is None:
        raise UnsupportedShadingError(f"not a prepend-one reducible shading: {shading.boxes()}")
    p = tuple(p)
    if len(p) < 3 or p[0] != 1:
        return p
    image = len2_swap_transform(standardize(p[1:]), reduced)
    return (1, *(v + 1 for v in image))


_L5_K3 = frozenset({(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)})


def _reduce_interval(shading: ShadingSet) -> ShadingSet | None:
    """Length-2 shading left after rooting occurrences at left-to-right minima."""
    boxes = set(shading.boxes())
    if not _L5_K3 <= boxes:
        return None
    inner = {(i - 1, j - 1) for i, j in boxes if i >= 1 and j >= 1}
    if boxes != _L5_K3 | _shift_up(inner):
        return None
    reduced = ShadingSet.from_boxes(2, inner)
    return reduced if reduced.mask in _LEN2_FRAMES else None


def _minimum_rectangles(p: Sequence[int]):
    """Yield (positions, values) of the rectangle hanging off each minimum.

    For consecutive left-to-right minima x at position s and x' at position
    s' (sentinels n+1 on both sides), the rectangle holds the entries at
    positions strictly between s and s' whose values lie strictly between x
    and the previous minimum.
    """
    mins = left_to_right_minima(p)
    n = len(p)
    for t, pos in enumerate(mins):
        lo = p[pos - 1]
        hi = p[mins[t - 1] - 1] if t else n + 1
        end = mins[t + 1] if t + 1 < len(mins) else n + 1
        sel = [q for q in range(pos + 1, end) if lo < p[q - 1] < hi]
        if sel:
            yield sel, [p[q - 1] for q in sel]


def per_interval_len2(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Run the length-2 sweep independently on each minimum's rectangle."""
    reduced = _reduce_interval(shading)
    if reduced is None:
        raise UnsupportedShadingError(f"not an interval-reducible shading: {shading.boxes()}")
    out = list(p)
    for sel, vals in _minimum_rectangles(p):
        if len(vals) < 2:
            continue
        image = len2_swap_transform(standardize(vals), reduced)
        ordered = sorted(vals)
        for q, v in zip(sel, image):
            out[q - 1] = ordered[v - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# interval complement (pairs 23-29, 32-38, 40)

_NE_BLOCK = frozenset((i, j) for i in (1, 2, 3) for j in (1, 2, 3))
_NE_CROSS = frozenset({(1, 2), (2, 1), (2, 3), (3, 2)})
_NE_CORNERS = frozenset({(1, 1), (1, 3), (3, 1), (3, 3)})
_NE_EXTRAS = (
    frozenset(),
    frozenset({(2, 2)}),
    _NE_CROSS,
    _NE_CORNERS,
    _NE_CROSS | {(2, 2)},
    _NE_CORNERS | {(2, 2)},
    _NE_BLOCK - {(2, 2)},
    _NE_BLOCK,
)
_L3_K3 = frozenset({(0, 0), (0, 2), (2, 0)})

_LTR_SHADING_MASKS = frozenset(
    ShadingSet.from_boxes(3, base | extra).mask
    for base in (_L5_K3, _L3_K3)
    for extra in _NE_EXTRAS
)


def ltr_interval_complement(p: Sequence[int]) -> Perm:
    """Complement the values between consecutive left-to-right minima.

    With minima values n+1 > x_1 > x_2 > ... the entries whose values lie in
    (x_i, x_{i-1}) are complemented within that interval, wherever they sit.

    >>> ltr_interval_complement((3, 1, 2))
    (3, 1, 2)
    >>> ltr_interval_complement((2, 3, 1))
    (2, 3, 1)
    """
    out = list(p)
    prev = len(p) + 1
    for pos in left_to_right_minima(p):
        x = p[pos - 1]
        for q, w in enumerate(p):
            if x < w < prev:
                out[q] = x + prev - w
        prev = x
    return tuple(out)


# ---------------------------------------------------------------------------
# tail transposition and tail-value complement (pairs 39, 44 and 41-43, 45)

_L3C_K3 = frozenset({(0, 0), (0, 2), (0, 3), (2, 0), (3, 0)})

_PAIR_SWAP_MASKS = frozenset(
    ShadingSet.from_boxes(3, base | extra).mask
    for base, extra in ((_L3_K3, _NE_BLOCK - {(3, 3)}), (_L3C_K3, _NE_BLOCK - {(3, 3)}))
)

_A1_MASKS = frozenset(
    ShadingSet.from_boxes(3, _L3C_K3 | extra).mask
    for extra in (_NE_CROSS, _NE_CROSS | {(2, 2)}, _NE_BLOCK - {(2, 2)}, _NE_BLOCK)
)


def pair_swap_transform(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Transpose the last two values of every occurrence.

    For the supported shadings the second and third entries of an occurrence
    are adjacent in position with consecutive values.  Several occurrences
    may hang off the same tail pair (one per eligible root), so the swaps
    are deduplicated by position pair; distinct pairs never overlap.
    """
    if shading.k != 3 or shading.mask not in _PAIR_SWAP_MASKS:
        raise UnsupportedShadingError(f"pair_swap does not support shading {shading.boxes()}")
    out = list(p)
    for b, c in {(occ[1], occ[2]) for occ in _pair_occurrences(p, shading)}:
        out[b - 1], out[c - 1] = out[c - 1], out[b - 1]
    return tuple(out)


def _a1_complement_raw(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Complement, as a set, the values serving as second or third entries.

    This naive reading of the tail-complement rule swaps the counts for small
    n but is not a bijection in general; it is kept so that
    :func:`verify_pair` can demonstrate the failure on the refuted shadings.
    """
    values = {p[q - 1] for occ in _pair_occurrences(p, shading) for q in occ[1:]}
    if not values:
        return tuple(p)
    return complement_on_set(p, values)


def _largest_block(p: Sequence[int], lo_a: int, hi_a: int, lo_b: int, hi_b: int) -> tuple[int, int] | None:
    """Longest position interval [a, b] with a in [lo_a, hi_a] and b in
    [lo_b, hi_b] whose values form an interval, or None."""
    best = None
    for a in range(lo_a, hi_a + 1):
        for b in range(max(lo_b, a + 1), hi_b + 1):
            window = sorted(p[a - 1 : b])
            if window[-1] - window[0] == b - a and (best is None or b - a > best[1] - best[0]):
                best = (a, b)
    return best


def a1_complement(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Complement the interval block holding the occurrence tails.

    Every second and third entry of every occurrence lies inside a factor of
    ``p`` whose values form an interval, placed after the global minimum.
    Complementing that block swaps the two patterns' occurrences.  The block
    is the longest such factor; when no single factor covers all the tails,
    the tails split into groups no occurrence straddles, and each group's
    block is complemented on its own.
    """
    if shading.k != 3 or shading.mask not in _A1_MASKS:
        raise UnsupportedShadingError(f"a1_complement does not support shading {shading.boxes()}")
    occs = _pair_occurrences(p, shading)
    if not occs:
        return tuple(p)
    n = len(p)
    min_pos = p.index(1) + 1
    tail_lo = min(occ[1] for occ in occs)
    tail_hi = max(occ[2] for occ in occs)
    merged = _largest_block(p, min_pos + 1, tail_lo, tail_hi, n)
    if merged is not None:
        a, b = merged
        return complement_on_set(p, set(p[a - 1 : b]))
    sets = _DisjointSets(n + 1)
    tails = set()
    for occ in occs:
        sets.unite(occ[1], occ[2])
        tails.update(occ[1:])
    grouped: dict[int, list[int]] = {}
    for q in sorted(tails):
        grouped.setdefault(sets.find(q), []).append(q)
    groups = sorted(grouped.values())
    spans = []
    for group in groups:
        a, b = group[0], group[-1]
        while True:
            window = p[a - 1 : b]
            lo, hi = min(window), max(window)
            grew = False
            for value in range(lo, hi + 1):
                pos = p.index(value) + 1
                if pos < a:
                    a, grew = pos, True
                elif pos > b:
                    b, grew = pos, True
            if not grew:
                break
        spans.append((a, b))
    out = tuple(p)
    for i, (a, b) in enumerate(spans):
        left = spans[i - 1][1] + 1 if i else min_pos + 1
        right = spans[i + 1][0] - 1 if i + 1 < len(spans) else n
        block = _largest_block(p, left, a, b, right)
        if block is None or block[0] <= min_pos <= block[1]:
            raise UnsupportedShadingError(
                f"a1_complement found no tail block in {p} for shading {shading.boxes()}"
            )
        out = complement_on_set(out, set(p[block[0] - 1 : block[1]]))
    return out


# ---------------------------------------------------------------------------
# block max-swap sweep (pairs 46-75)

_SQ_CORE = frozenset({(2, 2), (2, 3), (3, 2), (3, 3)})
_SQ_EXTRA = frozenset({(0, 0), (0, 1), (1, 0), (1, 1)})
_SQ2_CORE = _NE_BLOCK - {(1, 1)}
_SQ22_CORE = frozenset({(0, 2), (0, 3), (2, 0), (2, 2), (2, 3), (3, 0), (3, 2), (3, 3)})

#: (mandatory core, allowed additions) for the block sweep families.
_BLOCK_SWEEP_RULES = (
    (_NE_BLOCK, _L5_K3),
    (_SQ2_CORE, _L5_K3),
    (_SQ_CORE, _SQ_EXTRA),
    (_SQ22_CORE, _SQ_EXTRA),
)

_PER_INTERVAL_BLOCK_MASKS = frozenset(
    ShadingSet.from_boxes(3, _L5_K3 | _SQ_CORE | extra).mask for extra in (frozenset(), frozenset({(1, 1)}))
)


def _is_block_sweep_shading(shading: ShadingSet) -> bool:
    boxes = set(shading.boxes())
    return any(core <= boxes and boxes - core <= extra for core, extra in _BLOCK_SWEEP_RULES)


class _DisjointSets:
    """Union-find over 0..n-1 with path compression."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def unite(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)


def _occurrence_blocks(p: Sequence[int], shading: ShadingSet) -> list[list[int]]:
    """Group occurrences that share a second or third entry; return each
    block's sorted second-and-third positions.

    A root may start occurrences in several blocks: only the swept tail
    entries tie occurrences together, never the shared root.
    """
    occs = _pair_occurrences(p, shading)
    if not occs:
        return []
    sets = _DisjointSets(len(occs))
    owner: dict[int, int] = {}
    for t, occ in enumerate(occs):
        for q in occ[1:]:
            if q in owner:
                sets.unite(t, owner[q])
            else:
                owner[q] = t
    grouped: dict[int, set[int]] = {}
    for t, occ in enumerate(occs):
        grouped.setdefault(sets.find(t), set()).update(occ[1:])
    return sorted((sorted(g) for g in grouped.values()), key=lambda g: g[0])


def _block_sweep_raw(p: Sequence[int], shading: ShadingSet) -> Perm:
    out = list(p)
    for positions in _occurrence_blocks(p, shading):
        for a in range(len(positions) - 1):
            rest = positions[a + 1 :]
            m = max(rest, key=lambda q: out[q - 1])
            out[positions[a] - 1], out[m - 1] = out[m - 1], out[positions[a] - 1]
    return tuple(out)


def _block_sweep_raw_inverse(p: Sequence[int], shading: ShadingSet) -> Perm:
    out = list(p)
    for positions in _occurrence_blocks(p, shading):
        for a in range(len(positions) - 2, -1, -1):
            rest = positions[a + 1 :]
            m = max(rest, key=lambda q: out[q - 1])
            out[positions[a] - 1], out[m - 1] = out[m - 1], out[positions[a] - 1]
    return tuple(out)


def nine_box_transform(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Within each block of entangled occurrences, repeatedly swap the
    leftmost tail position with the maximum value to its right.

    Entangled means sharing a second or third entry (a shared root alone
    does not tie occurrences together); the sweep runs over the sorted
    second-and-third positions of each block.  The sweep is not self-inverse
    by construction, so :func:`nine_box_inverse` undoes it explicitly with
    the mirrored sweep.
    """
    if shading.k != 3 or not _is_block_sweep_shading(shading):
        raise UnsupportedShadingError(f"nine_box does not support shading {shading.boxes()}")
    return _block_sweep_raw(p, shading)


def nine_box_inverse(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Inverse of :func:`nine_box_transform` (the same sweep, right to left)."""
    if shading.k != 3 or not _is_block_sweep_shading(shading):
        raise UnsupportedShadingError(f"nine_box does not support shading {shading.boxes()}")
    return _block_sweep_raw_inverse(p, shading)


def per_interval_nine_box(p: Sequence[int], shading: ShadingSet) -> Perm:
    """Block sweep for the shadings whose occurrences live in the rectangle
    below and right of each left-to-right minimum.

    Occurrences of these shadings never straddle two rectangles, so the
    global block sweep computes the per-rectangle one.
    """
    if shading.k != 3 or shading.mask not in _PER_INTERVAL_BLOCK_MASKS:
        raise UnsupportedShadingError(f"per_interval_nine_box does not support shading {shading.boxes()}")
    return _block_sweep_raw(p, shading)


# ---------------------------------------------------------------------------
# dispatch and exhaustive verification


def transform_for(family: dict, shading: ShadingSet) -> Callable[[Sequence[int]], Perm]:
    """Resolve a catalog family record to the transform for ``shading``.

    Raises :class:`UnsupportedShadingError` when the shading does not have
    the structure the family requires, and ValueError for unknown names.
    """
    name = family.get("name")
    if name == "direct":
        pair_id = family["pair_id"]
        if not 1 <= pair_id <= 11:
            raise ValueError(f"no direct rule for pair id {pair_id}")
        return lambda p: direct_transform(p, pair_id)
    if name == "oth1":
        if shading != _OTH1_SHADING:
            raise UnsupportedShadingError(f"oth1 supports only {_OTH1_SHADING.boxes()}")
        return oth1_transform
    if name == "complement_after_one":
        if not _is_complement_after_one_shading(shading):
            raise UnsupportedShadingError(
                f"complement_after_one does not support shading {shading.boxes()}"
            )
        return complement_after_one
    if name == "len2_reduction":
        if shading.k == 2:
            return lambda p: len2_swap_transform(p, shading)
        if _reduce_prepend_one(shading) is None:
            raise UnsupportedShadingError(f"not a prepend-one reducible shading: {shading.boxes()}")
        return lambda p: len2_reduction_transform(p, shading)
    if name == "ltr_interval_complement":
        if shading.mask not in _LTR_SHADING_MASKS:
            raise UnsupportedShadingError(
                f"ltr_interval_complement does not support shading {shading.boxes()}"
            )
        return ltr_interval_complement
    if name == "per_interval_len2":
        if _reduce_interval(shading) is None:
            raise UnsupportedShadingError(f"not an interval-reducible shading: {shading.boxes()}")
        return lambda p: per_interval_len2(p, shading)
    if name == "pair_swap":
        if shading.k != 3 or shading.mask not in _PAIR_SWAP_MASKS:
            raise UnsupportedShadingError(f"pair_swap does not support shading {shading.boxes()}")
        return lambda p: pair_swap_transform(p, shading)
    if name == "a1_complement":
        if shading.k != 3 or shading.mask not in _A1_MASKS:
            raise UnsupportedShadingError(
                f"a1_complement does not support shading {shading.boxes()}"
            )
        return lambda p: a1_complement(p, shading)
    if name == "nine_box":
        if shading.k != 3 or not _is_block_sweep_shading(shading):
            raise UnsupportedShadingError(f"nine_box does not support shading {shading.boxes()}")
        return lambda p: nine_box_transform(p, shading)
    if name == "per_interval_nine_box":
        if shading.k != 3 or shading.mask not in _PER_INTERVAL_BLOCK_MASKS:
            raise UnsupportedShadingError(
                f"per_interval_nine_box does not support shading {shading.boxes()}"
            )
        return lambda p: per_interval_nine_box(p, shading)
    raise ValueError(f"unknown bijection family {name!r}")


def frame_tail_box(name: str, shading: ShadingSet) -> bool | None:
    """Whether the length-2 frame behind a reduction family has its tail box.

    Returns None when the shading is not reducible for that family.
    """
    if shading.k == 2:
        reduced: ShadingSet | None = shading
    elif name == "len2_reduction":
        reduced = _reduce_prepend_one(shading)
    elif name == "per_interval_len2":
        reduced = _reduce_interval(shading)
    else:
        return None
    if reduced is None or reduced.mask not in _LEN2_FRAMES:
        return None
    return _LEN2_FRAMES[reduced.mask][1]


def apply_family(entry, p: Sequence[int]) -> Perm:
    """Apply a catalog entry's bijection to a permutation."""
    if entry.family is None:
        raise ValueError(f"catalog entry {entry.id} carries no bijection family")
    pattern1, _ = entry.patterns()
    return transform_for(entry.family, pattern1.shading)(tuple(p))


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive check over S_n.

    A flag is None when the run stopped (fail_fast) before deciding it, or
    when the check was not requested.  ``counterexample`` is the
    lexicographically first permutation violating any requested property.
    """

    n: int
    bijective: bool | None
    joint_swap: bool | None
    involution: bool | None
    counterexample: Perm | None

    def ok(self, *, expect_involution: bool = False) -> bool:
        good = self.bijective is True and self.joint_swap is True
        if expect_involution:
            good = good and self.involution is True
        return good

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bijective": self.bijective,
            "joint_swap": self.joint_swap,
            "involution": self.involution,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def verify_pair(
    pattern1: MeshPattern,
    pattern2: MeshPattern,
    transform: Callable[[Sequence[int]], Perm],
    n: int,
    *,
    check_involution: bool = True,
    fail_fast: bool = False,
) -> VerificationReport:
    """Check over all of S_n that ``transform`` is a bijection carrying the
    joint occurrence counts of (pattern1, pattern2) to their swap.

    With ``fail_fast`` the scan stops at the first violation; checks not yet
    decided are reported as None.
    """
    if n > engine._SINGLE_BLOCK_MAX:
        raise ValueError(f"verify_pair supports n <= {engine._SINGLE_BLOCK_MAX}")
    occ1 = engine.count_vector(n, pattern1)
    occ2 = engine.count_vector(n, pattern2)
    seen = bytearray(len(occ1))
    bijective = joint = True
    involution: bool | None = True if check_involution else None
    witness: Perm | None = None
    stopped = False
    for r, p in enumerate(enumerate_sn(n)):
        image = transform(p)
        s = lex_rank(image)
        bad = False
        if len(image) != n or seen[s]:
            bijective = False
            bad = True
        else:
            seen[s] = 1
        if occ1[r] != occ2[s] or occ2[r] != occ1[s]:
            joint = False
            bad = True
        if check_involution and involution and transform(image) != p:
            involution = False
            bad = True
        if bad and witness is None:
            witness = p
            if fail_fast:
                stopped = True
                break
    if stopped:
        # undecided checks stay unknown
        return VerificationReport(
            n,
            False if not bijective else None,
            False if not joint else None,
            (False if not involution else None) if check_involution else None,
            witness,
        )
    return VerificationReport(n, bijective, joint, involution, witness)


def verify_entry(entry, n: int, **kwargs) -> VerificationReport:
    """Run :func:`verify_pair` on a catalog entry with its own family."""
    pattern1, pattern2 = entry.patterns()
    transform = transform_for(entry.family, pattern1.shading)
    return verify_pair(pattern1, pattern2, transform, n, **kwargs)
