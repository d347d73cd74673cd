"""
Independent brute-force ground truth.

Nothing here goes through the configuration machinery: the Bruhat order is
rebuilt from scratch, singular points are detected by counting tangent
directions #{transpositions t : t v <= w}, and the singular locus is
recovered as the set of Bruhat-maximal singular points.  The harness
compares this against the configuration-based components permutation by
permutation.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .perm import Perm, bruhat_leq, length
from .singlocus import singular_components


class SnTable:
    """
    Precomputed data for one symmetric group: all permutations, the full
    Bruhat order as a boolean matrix (via rank-function domination), the
    lengths, and the index table of all transposition left-products.
    """

    def __init__(self, n: int):
        self.n = n
        self.words = sorted(permutations(range(1, n + 1)))
        self.index = {word: k for k, word in enumerate(self.words)}
        arr = np.array(self.words, dtype=np.int8)
        m = arr.shape[0]
        onehot = np.zeros((m, n, n), dtype=np.int8)
        onehot[np.arange(m)[:, None], np.arange(n)[None, :], arr - 1] = 1
        ranks = onehot.cumsum(axis=1).cumsum(axis=2)
        flat = ranks.reshape(m, n * n)
        # leq[v, w] == True iff rank_v >= rank_w everywhere, i.e. v <= w
        chunk = max(1, 2**24 // max(1, m * n * n))
        leq = np.zeros((m, m), dtype=bool)
        for lo in range(0, m, chunk):
            hi = min(lo + chunk, m)
            leq[lo:hi] = np.all(flat[lo:hi, None, :] >= flat[None, :, :], axis=2)
        self.leq = leq
        self.lengths = np.array([length(Perm(word)) for word in self.words])
        trans = list(combinations(range(n), 2))
        self.transpositions = trans
        tmul = np.empty((m, len(trans)), dtype=np.int32)
        for k, word in enumerate(self.words):
            for t, (i, j) in enumerate(trans):
                moved = list(word)
                pi, pj = word.index(i + 1), word.index(j + 1)
                moved[pi], moved[pj] = j + 1, i + 1
                tmul[k, t] = self.index[tuple(moved)]
        self.tmul = tmul

    def idx(self, w: Perm) -> int:
        return self.index[w.word]

    def perm(self, k: int) -> Perm:
        return Perm(self.words[k])

    def tangent_dims(self, w: Perm) -> np.ndarray:
        """Tangent dimension of every v at once (meaningful where v <= w)."""
        return self.leq[self.tmul, self.idx(w)].sum(axis=1)

    def interval_below(self, w: Perm) -> np.ndarray:
        return np.flatnonzero(self.leq[:, self.idx(w)])

    def maximal_elements(self, idxs) -> list[int]:
        idxs = list(idxs)
        return [
            k
            for k in idxs
            if not any(j != k and self.leq[k, j] for j in idxs)
        ]


@lru_cache(maxsize=4)
def sn_table(n: int) -> SnTable:
    """Cached per-n table; n <= 7 is the intended range."""
    return SnTable(n)


def tangent_dim(v: Perm, w: Perm) -> int:
    """
    #{transpositions t : t v <= w}; equals l(w) exactly at the smooth
    points e_v of X_w.  Requires v <= w.
    """
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w}")
    n = v.n
    count = 0
    for i, j in combinations(range(1, n + 1), 2):
        if bruhat_leq(Perm.transposition(n, i, j) * v, w):
            count += 1
    return count


def interval_below(w: Perm) -> set[Perm]:
    """The full Bruhat interval [id, w], collected by walking covers downward."""
    n = w.n
    seen = {w}
    frontier = [w]
    while frontier:
        new = []
        for v in frontier:
            lv = v.length
            for i, j in combinations(range(1, n + 1), 2):
                if v.inv(i) > v.inv(j):
                    u = Perm.transposition(n, i, j) * v
                    if u.length == lv - 1 and u not in seen:
                        seen.add(u)
                        new.append(u)
        frontier = new
    return seen


def singular_locus_brute(w: Perm) -> list[Perm]:
    """
    Bruhat-maximal v <= w with tangent dimension exceeding l(w), sorted by
    one-line word.  Since the singular points form a downward closed subset
    of [id, w], maximality only needs the covers above each candidate.
    """
    if w.n <= 7:
        table = sn_table(w.n)
        wi = table.idx(w)
        td = table.tangent_dims(w)
        lw = int(table.lengths[wi])
        sing = [k for k in table.interval_below(w) if td[k] > lw]
        singset = set(sing)
        out = []
        for k in sing:
            lk = table.lengths[k]
            above = [
                j
                for j in table.tmul[k]
                if table.lengths[j] == lk + 1 and table.leq[j, wi]
            ]
            if not any(j in singset for j in above):
                out.append(table.perm(k))
        return sorted(out, key=lambda p: p.word)

    lw = w.length
    singular = {v for v in interval_below(w) if tangent_dim(v, w) > lw}
    out = []
    n = w.n
    for v in singular:
        lv = v.length
        maximal = True
        for i, j in combinations(range(1, n + 1), 2):
            if v.inv(i) < v.inv(j):
                u = Perm.transposition(n, i, j) * v
                if u.length == lv + 1 and u in singular:
                    maximal = False
                    break
        if maximal:
            out.append(v)
    return sorted(out, key=lambda p: p.word)


def maximal_lower_bounds(bounds: list[Perm]) -> list[Perm]:
    """Bruhat-maximal z with z <= every member of bounds (small n only)."""
    if not bounds:
        raise ValueError("need at least one bound")
    table = sn_table(bounds[0].n)
    common = None
    for b in bounds:
        col = table.leq[:, table.idx(b)]
        common = col.copy() if common is None else (common & col)
    idxs = np.flatnonzero(common)
    return sorted(
        (table.perm(k) for k in table.maximal_elements(idxs)),
        key=lambda p: p.word,
    )


# ---------------------------------------------------------------------------
# Vectorized full-interval verification, for single permutations too large
# for the group table (the interval [id, w] can run to millions of elements).


def _np_ranks(arr: np.ndarray) -> np.ndarray:
    m, n = arr.shape
    onehot = np.zeros((m, n, n), dtype=np.int16)
    onehot[np.arange(m)[:, None], np.arange(n)[None, :], arr - 1] = 1
    return onehot.cumsum(axis=1).cumsum(axis=2).reshape(m, n * n)


def _np_interval_levels(w: Perm, chunk: int = 1 << 16):
    """Yield the interval [id, w] level by level, walking covers downward."""
    n = w.n
    level = np.array([w.word], dtype=np.int8)
    yield level
    while True:
        m = level.shape[0]
        inv = np.argsort(level, axis=1)
        outs = []
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                pi, pj = inv[:, i - 1], inv[:, j - 1]
                mask = pi > pj
                if i + 1 < j and mask.any():
                    between = np.zeros(m, dtype=np.int16)
                    for k in range(i + 1, j):
                        pk = inv[:, k - 1]
                        between += (pj < pk) & (pk < pi)
                    mask &= between == 0
                if not mask.any():
                    continue
                sub = level[mask].copy()
                rows = np.arange(sub.shape[0])
                sub[rows, inv[mask, i - 1]] = j
                sub[rows, inv[mask, j - 1]] = i
                outs.append(sub)
        if not outs:
            return
        level = np.unique(np.concatenate(outs), axis=0)
        yield level


def verify_components_on_interval(w: Perm, chunk: int = 1 << 15) -> tuple[int, int]:
    """
    Exhaustively check, over every v in [id, w], that the tangent-space
    test (#{t : t v <= w} > l(w)) holds exactly when v lies below one of
    the configuration-based components.  Returns (interval size, number of
    mismatching elements); a second value of 0 certifies the component
    list on this w.
    """
    n = w.n
    lw = w.length
    rw = _np_ranks(np.array([w.word], dtype=np.int8))[0]
    comps = [c.v for c in singular_components(w)]
    rcomps = (
        np.stack([_np_ranks(np.array([v.word], dtype=np.int8))[0] for v in comps])
        if comps
        else np.zeros((0, n * n), dtype=np.int16)
    )
    pairs = list(combinations(range(n), 2))
    total = 0
    bad = 0
    for level in _np_interval_levels(w):
        for lo in range(0, level.shape[0], chunk):
            batch = level[lo : lo + chunk]
            m = batch.shape[0]
            total += m
            inv = np.argsort(batch, axis=1)
            rows = np.arange(m)
            td = np.zeros(m, dtype=np.int32)
            for i, j in pairs:
                moved = batch.copy()
                moved[rows, inv[:, i]] = j + 1
                moved[rows, inv[:, j]] = i + 1
                td += np.all(_np_ranks(moved) >= rw, axis=1)
            ranks = _np_ranks(batch)
            below_any = np.zeros(m, dtype=bool)
            for rc in rcomps:
                below_any |= np.all(ranks >= rc, axis=1)
            bad += int(np.count_nonzero((td > lw) != below_any))
    return total, bad


@dataclass
class HarnessReport:
    n: int
    tested: int
    mismatches: list[tuple[Perm, list[Perm], list[Perm]]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "OK" if self.ok else f"{len(self.mismatches)} MISMATCHES"
        return (
            f"n={self.n}: {self.tested} permutations checked in "
            f"{self.seconds:.1f}s: {status}"
        )


def equivalence_harness(
    n: int, sample: int | None = None, seed: int = 0
) -> HarnessReport:
    """
    For each tested w in S_n, compare the configuration-based components
    with the brute-force maximal singular points.  sample=None means all
    of S_n (use n <= 7); otherwise that many distinct permutations drawn
    with the given seed.
    """
    start = time.monotonic()
    table = sn_table(n)
    words = table.words
    if sample is not None and sample < len(words):
        rng = random.Random(seed)
        words = rng.sample(words, sample)
    report = HarnessReport(n=n, tested=len(words))
    for word in words:
        w = Perm(word)
        fast = sorted((comp.v for comp in singular_components(w)), key=lambda p: p.word)
        brute = singular_locus_brute(w)
        if fast != brute:
            report.mismatches.append((w, fast, brute))
    report.seconds = time.monotonic() - start
    return report
