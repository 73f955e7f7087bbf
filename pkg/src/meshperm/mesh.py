"""Mesh patterns: a classical pattern together with a set of shaded boxes.

A mesh pattern of length k is a pair (tau, R) where tau is a permutation of
1..k and R is a set of boxes (i, j) with 0 <= i, j <= k.  An occurrence of
(tau, R) in a host permutation is a subsequence that is order-isomorphic to
tau and whose shaded regions contain no other host entry: box (i, j) is the
open rectangle strictly between the i-th and (i+1)-st chosen positions and
strictly between the j-th and (j+1)-st chosen values (index 0 and k denote
the outside of the occurrence).

Shading sets are stored as bitmasks of width (k+1)^2 so that the occurrence
test reduces to one integer AND.
"""
from __future__ import annotations

import dataclasses
import itertools
import json
from collections.abc import Iterable, Sequence

from .perms import Perm, as_perm, complement as perm_complement, inverse as perm_inverse, reverse as perm_reverse

Box = tuple[int, int]

#: Symmetry names accepted by :func:`transform_pattern`.
SYMMETRIES = ("reverse", "complement", "inverse")


def box_bit(i: int, j: int, k: int) -> int:
    """Bit index of box (i, j) in the mask of a length-k pattern."""
    if not (0 <= i <= k and 0 <= j <= k):
        raise ValueError(f"box ({i},{j}) out of range for length {k}")
    return i * (k + 1) + j


@dataclasses.dataclass(frozen=True)
class ShadingSet:
    """An immutable set of boxes for patterns of length ``k``, as a bitmask."""

    k: int
    mask: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("pattern length must be non-negative")
        if not 0 <= self.mask < 1 << (self.k + 1) ** 2:
            raise ValueError(f"mask {self.mask:#x} out of range for length {self.k}")

    @classmethod
    def from_boxes(cls, k: int, boxes: Iterable[Box]) -> "ShadingSet":
        mask = 0
        for i, j in boxes:
            mask |= 1 << box_bit(i, j, k)
        return cls(k, mask)

    @classmethod
    def empty(cls, k: int) -> "ShadingSet":
        return cls(k, 0)

    @classmethod
    def full(cls, k: int) -> "ShadingSet":
        return cls(k, (1 << (k + 1) ** 2) - 1)

    def boxes(self) -> tuple[Box, ...]:
        """Sorted tuple of shaded boxes."""
        side = self.k + 1
        return tuple(
            (b // side, b % side) for b in range(side * side) if self.mask >> b & 1
        )

    def __contains__(self, box: Box) -> bool:
        return bool(self.mask >> box_bit(box[0], box[1], self.k) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.boxes())

    def union(self, other: "ShadingSet") -> "ShadingSet":
        if other.k != self.k:
            raise ValueError("cannot combine shadings of different lengths")
        return ShadingSet(self.k, self.mask | other.mask)

    def with_boxes(self, boxes: Iterable[Box]) -> "ShadingSet":
        return self.union(ShadingSet.from_boxes(self.k, boxes))

    def disjoint_from(self, other: "ShadingSet") -> bool:
        return not self.mask & other.mask

    def transposed(self) -> "ShadingSet":
        """Reflect every box across the main diagonal: (i, j) -> (j, i)."""
        return ShadingSet.from_boxes(self.k, ((j, i) for i, j in self.boxes()))


@dataclasses.dataclass(frozen=True)
class MeshPattern:
    """A classical pattern ``tau`` plus a :class:`ShadingSet` of the same length."""

    tau: Perm
    shading: ShadingSet

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", as_perm(self.tau))
        if self.shading.k != len(self.tau):
            raise ValueError("shading length does not match the pattern length")

    @classmethod
    def of(cls, tau: Sequence[int], boxes: Iterable[Box] = ()) -> "MeshPattern":
        tau = as_perm(tau)
        return cls(tau, ShadingSet.from_boxes(len(tau), boxes))

    def __len__(self) -> int:
        return len(self.tau)


def occurrence_box_mask(host: Sequence[int], positions: Sequence[int]) -> ShadingSet:
    """Boxes of the grid spanned by ``positions`` that contain another host entry.

    ``positions`` are 1-based and strictly increasing.  The result has
    k = len(positions); a subsequence is an occurrence of a mesh pattern
    exactly when this mask is disjoint from the pattern's shading.

    >>> occurrence_box_mask((1, 2, 4, 3), (1, 2, 3)).boxes()
    ((3, 2),)
    >>> occurrence_box_mask((2, 1, 3), (1, 3)).boxes()
    ((1, 0),)
    """
    k = len(positions)
    pos = list(positions)
    if pos != sorted(set(pos)) or not pos or pos[0] < 1 or pos[-1] > len(host):
        raise ValueError(f"positions must be increasing and within the host: {positions!r}")
    vals = sorted(host[q - 1] for q in pos)
    chosen = set(pos)
    mask = 0
    for q, w in enumerate(host, 1):
        if q in chosen:
            continue
        i = sum(1 for t in pos if t < q)
        j = sum(1 for u in vals if u < w)
        mask |= 1 << (i * (k + 1) + j)
    return ShadingSet(k, mask)


def _matches_tau(host: Sequence[int], positions: Sequence[int], tau: Perm) -> bool:
    sub = [host[q - 1] for q in positions]
    order = sorted(sub)
    return all(order[t - 1] == v for t, v in zip(tau, sub))


def is_occurrence(host: Sequence[int], pattern: MeshPattern, positions: Sequence[int]) -> bool:
    """Test whether the subsequence at ``positions`` is an occurrence of ``pattern``."""
    if len(positions) != len(pattern):
        return False
    if not _matches_tau(host, positions, pattern.tau):
        return False
    return occurrence_box_mask(host, positions).disjoint_from(pattern.shading)


def occurrences(host: Sequence[int], pattern: MeshPattern) -> list[tuple[int, ...]]:
    """All occurrences of ``pattern`` in ``host`` as 1-based position tuples.

    The list is ordered lexicographically by position tuple.
    """
    n = len(host)
    k = len(pattern)
    out = []
    for positions in itertools.combinations(range(1, n + 1), k):
        if _matches_tau(host, positions, pattern.tau) and occurrence_box_mask(
            host, positions
        ).disjoint_from(pattern.shading):
            out.append(positions)
    return out


def count_occurrences(host: Sequence[int], pattern: MeshPattern) -> int:
    """Number of occurrences of ``pattern`` in ``host``."""
    return len(occurrences(host, pattern))


def avoids(host: Sequence[int], pattern: MeshPattern) -> bool:
    """True when ``host`` contains no occurrence of ``pattern``."""
    n = len(host)
    k = len(pattern)
    for positions in itertools.combinations(range(1, n + 1), k):
        if _matches_tau(host, positions, pattern.tau) and occurrence_box_mask(
            host, positions
        ).disjoint_from(pattern.shading):
            return False
    return True


def transform_pattern(pattern: MeshPattern, symmetry: str) -> MeshPattern:
    """Apply one of the square symmetries to a mesh pattern.

    ``reverse`` flips positions, ``complement`` flips values, ``inverse``
    transposes the diagram.  Each conjugates occurrence counting:
    count(host, p) == count(symmetry(host), transform_pattern(p, symmetry)).
    """
    k = len(pattern)
    if symmetry == "reverse":
        tau = perm_reverse(pattern.tau)
        boxes = ((k - i, j) for i, j in pattern.shading.boxes())
    elif symmetry == "complement":
        tau = perm_complement(pattern.tau)
        boxes = ((i, k - j) for i, j in pattern.shading.boxes())
    elif symmetry == "inverse":
        tau = perm_inverse(pattern.tau)
        boxes = ((j, i) for i, j in pattern.shading.boxes())
    else:
        raise ValueError(f"unknown symmetry {symmetry!r}; expected one of {SYMMETRIES}")
    return MeshPattern(tau, ShadingSet.from_boxes(k, boxes))


def is_antidiagonal_symmetric(shading: ShadingSet) -> bool:
    """True when the shading is unchanged by the inverse symmetry.

    In the diagram of a pattern whose underlying permutation equals its own
    inverse, this is reflection of the shading across the box diagonal
    (i, j) -> (j, i).

    >>> is_antidiagonal_symmetric(ShadingSet.from_boxes(3, [(0, 1), (1, 0)]))
    True
    >>> is_antidiagonal_symmetric(ShadingSet.from_boxes(3, [(0, 3)]))
    False
    """
    return shading.transposed() == shading


def symmetric_shadings(k: int = 3) -> list[ShadingSet]:
    """All shadings of length ``k`` fixed by the inverse symmetry, sorted by mask.

    >>> len(symmetric_shadings(3))
    1024
    """
    orbits = []
    for i in range(k + 1):
        for j in range(i, k + 1):
            orbits.append(((i, j),) if i == j else ((i, j), (j, i)))
    out = []
    for include in itertools.product((False, True), repeat=len(orbits)):
        boxes = [b for flag, orbit in zip(include, orbits) for b in orbit if flag]
        out.append(ShadingSet.from_boxes(k, boxes))
    out.sort(key=lambda s: s.mask)
    return out


def parse_boxes(text: str, k: int) -> ShadingSet:
    """Parse a shading literal like ``"0/0,0/1,1/0"`` (empty string allowed)."""
    boxes = []
    for part in (s.strip() for s in text.split(",")):
        if not part:
            continue
        try:
            i_s, j_s = part.split("/")
            boxes.append((int(i_s), int(j_s)))
        except ValueError:
            raise ValueError(f"bad box literal {part!r}; expected i/j") from None
    return ShadingSet.from_boxes(k, boxes)


def boxes_literal(shading: ShadingSet) -> str:
    """Inverse of :func:`parse_boxes`."""
    return ",".join(f"{i}/{j}" for i, j in shading.boxes())


def parse_pattern(text: str) -> MeshPattern:
    """Parse a pattern literal like ``"123|0/0,0/1,1/0"``.

    The part before the bar is the underlying permutation, written either as
    digits or comma-separated; the part after is the shading (may be empty).
    """
    tau_part, sep, box_part = text.partition("|")
    tau_part = tau_part.strip()
    if "," in tau_part:
        tau = as_perm(int(s) for s in tau_part.split(",") if s.strip())
    elif tau_part.isdigit():
        tau = as_perm(int(c) for c in tau_part)
    else:
        raise ValueError(f"bad pattern literal {text!r}")
    shading = parse_boxes(box_part, len(tau)) if sep else ShadingSet.empty(len(tau))
    return MeshPattern(tau, shading)


def pattern_literal(pattern: MeshPattern) -> str:
    """Inverse of :func:`parse_pattern`."""
    tau = "".join(map(str, pattern.tau)) if len(pattern) < 10 else ",".join(map(str, pattern.tau))
    return f"{tau}|{boxes_literal(pattern.shading)}"


def pattern_to_json(pattern: MeshPattern) -> str:
    return json.dumps({"tau": list(pattern.tau), "boxes": [list(b) for b in pattern.shading.boxes()]})


def pattern_from_json(text: str) -> MeshPattern:
    data = json.loads(text)
    return MeshPattern.of(data["tau"], (tuple(b) for b in data["boxes"]))
