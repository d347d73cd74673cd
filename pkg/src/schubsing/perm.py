"""
Permutations of [1, n] in one-line notation, their graphs, and the
Bruhat-Chevalley order.

Conventions used throughout the package:

- A permutation is wrapped in :class:`Perm`; ``w(i)`` is the image of i and
  ``w.inv(q)`` the position of the value q, both 1-indexed.
- The graph of w is the point set {(i, w(i))} drawn with the abscissa i
  growing eastward and the ordinate w(i) growing northward, so "north-west
  of (p, q)" means smaller abscissa and larger ordinate.
- Products act on values: ``(u * v)(x) = u(v(x))``.  Multiplying on the left
  by the transposition (i, j) swaps the values i and j wherever they occur.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

GraphPoint = tuple[int, int]


def is_permutation(word: Sequence[int]) -> bool:
    """
    Check that word is a rearrangement of 1, ..., n where n = len(word).

    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 3), (1, 1, 2)]]
    [True, True, True, False, False]
    """
    return sorted(word) == list(range(1, len(word) + 1))


class Perm:
    """A permutation of [1, n], applied with 1-indexed positions and values.

    >>> w = Perm((3, 1, 2))
    >>> w(1), w.inv(3), w.length
    (3, 1, 2)
    >>> w.inverse().word
    (2, 3, 1)
    >>> (w * w).word
    (2, 3, 1)
    """

    __slots__ = ("word", "_inv", "_rank")

    def __init__(self, word: Iterable[int]):
        word = tuple(word)
        if not is_permutation(word):
            raise ValueError(f"not a permutation of [1,{len(word)}]: {word}")
        self.word = word
        inv = [0] * len(word)
        for i, v in enumerate(word, 1):
            inv[v - 1] = i
        self._inv = tuple(inv)
        self._rank: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Perm":
        """The transposition of the values i and j in S_n."""
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"invalid transposition ({i},{j}) in S_{n}")
        word = list(range(1, n + 1))
        word[i - 1], word[j - 1] = j, i
        return cls(word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.word):
            raise ValueError(f"position {i} out of range [1,{len(self.word)}]")
        return self.word[i - 1]

    def inv(self, q: int) -> int:
        """Position of the value q, i.e. w^{-1}(q)."""
        if not 1 <= q <= len(self.word):
            raise ValueError(f"value {q} out of range [1,{len(self.word)}]")
        return self._inv[q - 1]

    def inverse(self) -> "Perm":
        return Perm(self._inv)

    @property
    def length(self) -> int:
        """Number of inversions; equals the dimension of the Schubert cell."""
        return length(self)

    def graph(self) -> tuple[GraphPoint, ...]:
        return tuple((i, v) for i, v in enumerate(self.word, 1))

    def __mul__(self, other: "Perm") -> "Perm":
        if not isinstance(other, Perm):
            return NotImplemented
        if len(self.word) != len(other.word):
            raise ValueError("size mismatch in product")
        return Perm(self.word[x - 1] for x in other.word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Perm{self.word}"

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.word) + ")"


def length(w: Perm) -> int:
    """
    Number of inversions #{i < j : w(i) > w(j)}.

    >>> length(Perm.identity(4))
    0
    >>> length(Perm((2, 1)))
    1
    """
    word = w.word
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def rank(w: Perm, p: int, q: int) -> int:
    """
    The rank function r_w(p, q) = #{i <= p : w(i) <= q}.

    >>> rank(Perm((5, 10, 7, 2, 9, 8, 1, 6, 3, 4)), 3, 7)
    2
    """
    if not (1 <= p <= w.n and 1 <= q <= w.n):
        raise ValueError(f"({p},{q}) out of range [1,{w.n}]^2")
    return rank_matrix(w)[p - 1][q - 1]


def rank_matrix(w: Perm) -> tuple[tuple[int, ...], ...]:
    """All values r_w(p, q), as a tuple of rows indexed by p - 1, q - 1."""
    if w._rank is None:
        n = w.n
        rows = []
        prev = [0] * n
        for p in range(1, n + 1):
            v = w.word[p - 1]
            row = [prev[q - 1] + (1 if v <= q else 0) for q in range(1, n + 1)]
            rows.append(tuple(row))
            prev = row
        w._rank = tuple(rows)
    return w._rank


def bruhat_leq(v: Perm, w: Perm) -> bool:
    """
    Bruhat-Chevalley order via rank functions: v <= w iff
    r_v(p, q) >= r_w(p, q) for all p, q.

    >>> bruhat_leq(Perm((1, 3, 2)), Perm((3, 1, 2)))
    True
    >>> bruhat_leq(Perm((3, 1, 2)), Perm((1, 3, 2)))
    False
    """
    if v.n != w.n:
        raise ValueError("size mismatch in Bruhat comparison")
    if v.word == w.word:
        return True
    rv, rw = rank_matrix(v), rank_matrix(w)
    for rowv, roww in zip(rv, rw):
        for a, b in zip(rowv, roww):
            if a < b:
                return False
    return True


def transposition_length_delta(v: Perm, i: int, j: int) -> int:
    """
    Length change when passing from v to (i, j) v, assuming i < j and the
    value i sits east of the value j (so the product is shorter):

        l((i,j)v) - l(v) = -1 - 2 #{i < k < j : v^{-1}(j) < v^{-1}(k) < v^{-1}(i)}.
    """
    if not i < j:
        raise ValueError(f"need i < j, got ({i},{j})")
    pi, pj = v.inv(i), v.inv(j)
    if not pi > pj:
        raise ValueError(f"values {i},{j} are not inverted in {v}")
    between = sum(1 for k in range(i + 1, j) if pj < v.inv(k) < pi)
    return -1 - 2 * between


def drop_agreements(v: Perm, w: Perm) -> tuple[Perm, Perm]:
    """
    Delete the positions where v and w agree and renumber positions and
    values monotonically.  Bruhat comparability is preserved both ways.

    >>> a, b = drop_agreements(Perm((1, 3, 2, 4)), Perm((1, 4, 3, 2)))
    >>> a.word, b.word
    ((2, 1, 3), (3, 2, 1))
    """
    if v.n != w.n:
        raise ValueError("size mismatch")
    keep = [i for i in range(1, v.n + 1) if v(i) != w(i)]
    vals = sorted(v(i) for i in keep)
    renum = {val: k for k, val in enumerate(vals, 1)}
    return Perm(renum[v(i)] for i in keep), Perm(renum[w(i)] for i in keep)


def demazure_star(i: int, v: Perm) -> Perm:
    """
    The Demazure product s_i * v = max(v, s_i v) in Bruhat order, where
    s_i v swaps the values i and i + 1 of v.

    >>> demazure_star(1, Perm.identity(3)).word
    (2, 1, 3)
    """
    if not 1 <= i <= v.n - 1:
        raise ValueError(f"generator index {i} out of range [1,{v.n - 1}]")
    if v.inv(i) < v.inv(i + 1):
        return Perm.transposition(v.n, i, i + 1) * v
    return v


PATTERNS = {
    "4231": lambda wa, wb, wc, wd: wd < wb < wc < wa,
    "3412": lambda wc2, wd2, wa2, wb2: wc2 < wd2 < wa2 < wb2,
}


def pattern_occurrences(w: Perm, pattern: int | str) -> list[tuple[int, int, int, int]]:
    """
    All index quadruples a < b < c < d realizing the pattern, in
    lexicographic order.  For 4231 the condition is w(d) < w(b) < w(c) < w(a),
    for 3412 it is w(c) < w(d) < w(a) < w(b).

    >>> pattern_occurrences(Perm((3, 4, 1, 2)), 3412)
    [(1, 2, 3, 4)]
    """
    key = str(pattern)
    if key not in ("4231", "3412"):
        raise ValueError(f"unsupported pattern {pattern!r}")
    word = w.word
    out = []
    for a, b, c, d in combinations(range(1, w.n + 1), 4):
        wa, wb, wc, wd = word[a - 1], word[b - 1], word[c - 1], word[d - 1]
        if key == "4231":
            if wd < wb < wc < wa:
                out.append((a, b, c, d))
        else:
            if wc < wd < wa < wb:
                out.append((a, b, c, d))
    return out


def avoids_3412(w: Perm) -> bool:
    """True iff w has no 3412 occurrence (w is covexillary)."""
    word = w.word
    for a, b, c, d in combinations(range(1, w.n + 1), 4):
        if word[c - 1] < word[d - 1] < word[a - 1] < word[b - 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# Parabolic subgroups of S_n, given by a set of simple-generator indices.
# The subgroup generated by {s_i : i in gens} permutes values inside the
# maximal intervals of consecutive generators ("blocks").


def parabolic_blocks(gens: Iterable[int], n: int) -> list[tuple[int, int]]:
    """Maximal value intervals [lo, hi] permuted by the subgroup <s_i : i in gens>."""
    gens = sorted(set(gens))
    if gens and not (1 <= gens[0] and gens[-1] <= n - 1):
        raise ValueError(f"generators {gens} out of range [1,{n - 1}]")
    blocks: list[tuple[int, int]] = []
    for g in gens:
        if blocks and g == blocks[-1][1]:
            blocks[-1] = (blocks[-1][0], g + 1)
        else:
            blocks.append((g, g + 1))
    return blocks


def longest_in_parabolic(gens: Iterable[int], n: int) -> Perm:
    """
    Longest element of the parabolic subgroup generated by {s_i : i in gens}:
    order reversal on each block of consecutive values, identity elsewhere.

    >>> longest_in_parabolic({2, 3}, 5).word
    (1, 4, 3, 2, 5)
    """
    word = list(range(1, n + 1))
    for lo, hi in parabolic_blocks(gens, n):
        word[lo - 1 : hi] = range(hi, lo - 1, -1)
    return Perm(word)


def coset_rep(w: Perm, gens: Iterable[int], which: str = "min") -> Perm:
    """
    The minimal or maximal length representative of the coset S_I w, where
    S_I = <s_i : i in gens> acts on values.  The minimal representative has
    the values of each block placed in increasing position order, the
    maximal one in decreasing order.
    """
    if which not in ("min", "max"):
        raise ValueError(f"which must be 'min' or 'max', got {which!r}")
    word = list(w.word)
    for lo, hi in parabolic_blocks(gens, w.n):
        positions = sorted(w.inv(v) for v in range(lo, hi + 1))
        values = range(lo, hi + 1) if which == "min" else range(hi, lo - 1, -1)
        for pos, val in zip(positions, values):
            word[pos - 1] = val
    return Perm(word)


# ---------------------------------------------------------------------------
# Quadrants, rectangles and staircase frontiers in the square [1, n]^2.


@dataclass(frozen=True)
class Quadrant:
    """One of the four closed/half-open quadrants attached to a corner (p, q).

    NO = {i <= p, j > q}, SO = {i <= p, j <= q},
    NE = {i > p, j > q},  SE = {i > p, j <= q}.
    """

    kind: str
    corner: tuple[int, int]

    def __post_init__(self):
        if self.kind not in ("NO", "SO", "NE", "SE"):
            raise ValueError(f"unknown quadrant kind {self.kind!r}")

    def __contains__(self, point: GraphPoint) -> bool:
        x, y = point
        p, q = self.corner
        west, south = x <= p, y <= q
        return {
            "NO": west and not south,
            "SO": west and south,
            "NE": not west and not south,
            "SE": not west and south,
        }[self.kind]


@dataclass(frozen=True)
class Rect:
    """An axis-aligned cell rectangle with inclusive bounds."""

    xmin: int
    xmax: int
    ymin: int
    ymax: int

    @classmethod
    def open_between(cls, a: GraphPoint, b: GraphPoint) -> "Rect":
        """Open rectangle ]x_a, x_b[ x ]y_a, y_b[ (coordinates in any order)."""
        (x1, y1), (x2, y2) = a, b
        return cls(min(x1, x2) + 1, max(x1, x2) - 1, min(y1, y2) + 1, max(y1, y2) - 1)

    @classmethod
    def closed_between(cls, a: GraphPoint, b: GraphPoint) -> "Rect":
        (x1, y1), (x2, y2) = a, b
        return cls(min(x1, x2), max(x1, x2), min(y1, y2), max(y1, y2))

    def __contains__(self, point: GraphPoint) -> bool:
        x, y = point
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    def cells(self) -> Iterator[GraphPoint]:
        for x in range(self.xmin, self.xmax + 1):
            for y in range(self.ymin, self.ymax + 1):
                yield (x, y)


def quadrant_split(
    points: Iterable[GraphPoint], p: int, q: int
) -> dict[str, list[GraphPoint]]:
    """Partition points among the four quadrants at the corner (p, q)."""
    parts: dict[str, list[GraphPoint]] = {"NO": [], "SO": [], "NE": [], "SE": []}
    for x, y in points:
        if x <= p:
            parts["NO" if y > q else "SO"].append((x, y))
        else:
            parts["NE" if y > q else "SE"].append((x, y))
    return parts


def _frontier(points: Iterable[GraphPoint], dx: int, dy: int) -> list[GraphPoint]:
    # Keep the points P such that no other point lies strictly in the
    # direction (dx, dy) from P; the survivors form a staircase antichain.
    pts = sorted(points)
    out = []
    for x, y in pts:
        dominated = any(
            (u - x) * dx > 0 and (v - y) * dy > 0 for u, v in pts if (u, v) != (x, y)
        )
        if not dominated:
            out.append((x, y))
    return out


def se_frontier(points: Iterable[GraphPoint]) -> list[GraphPoint]:
    """Points with no other point strictly south-east; sorted by abscissa."""
    return _frontier(points, +1, -1)


def nw_frontier(points: Iterable[GraphPoint]) -> list[GraphPoint]:
    return _frontier(points, -1, +1)


def sw_frontier(points: Iterable[GraphPoint]) -> list[GraphPoint]:
    return _frontier(points, -1, -1)


def ne_frontier(points: Iterable[GraphPoint]) -> list[GraphPoint]:
    return _frontier(points, +1, +1)
