"""
Maximal elements below prescribed bounds.

Two constructions are implemented.  The first describes the irreducible
components of a reinforced incidence condition: given a cell (p, q) with
r_w(p, q) < min(p, q), the permutations tau built from frontier pairs of
the NO and SE quadrants at (p, q) are exactly the maximal z with z <= w
satisfying r_z(p, q) >= r_w(p, q) + 1.  The second classifies, for z with
an ascent of the values j, j + 1, the maximal permutations below z having
j as a left descent; they come in north-west, south-east and mixed kinds.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cograssmann import Cobigrassmannian
from .configs import ConfigI, apply_value_cycle, is_3412, is_incompressible, tau
from .perm import (
    GraphPoint,
    Perm,
    Rect,
    ne_frontier,
    nw_frontier,
    quadrant_split,
    rank,
    se_frontier,
    sw_frontier,
)


@dataclass(frozen=True)
class Bordage:
    """A pair of frontier points around an anchor cell."""

    anchor: tuple[int, int]
    p_plus: GraphPoint
    p_minus: GraphPoint


def reinforcement_quadruple(w: Perm, p: int, q: int) -> Cobigrassmannian:
    """
    The cobigrassmannian whose rank condition at (p, q) has threshold
    r_w(p, q); requires r_w(p, q) >= 1.  Its iterate encodes the
    reinforced condition r(p, q) >= r_w(p, q) + 1.
    """
    r = rank(w, p, q)
    return Cobigrassmannian(p - r, r, w.n - (p + q) + r, q - r)


def reinforced_bound(w: Perm, p: int, q: int) -> Cobigrassmannian:
    """The cobigrassmannian with anchor (p, q) and threshold r_w(p, q) + 1."""
    r = rank(w, p, q)
    if not r < min(p, q):
        raise ValueError(
            f"r_w({p},{q}) = {r} is not below min(p, q); nothing to reinforce"
        )
    return Cobigrassmannian(p - r - 1, r + 1, w.n - (p + q) + r + 1, q - r - 1)


def frontier_pairs(w: Perm, p: int, q: int) -> list[Bordage]:
    """All pairs in the SE frontier of NO_w(p, q) times the NW frontier of SE_w(p, q)."""
    parts = quadrant_split(w.graph(), p, q)
    return [
        Bordage((p, q), pp, pm)
        for pp in se_frontier(parts["NO"])
        for pm in nw_frontier(parts["SE"])
    ]


def config_at_bordage(w: Perm, bordage: Bordage) -> ConfigI:
    """
    The type I configuration spanned by a frontier pair: NE suite = the
    south-west frontier of NE_w(p, q) inside the open spanned rectangle,
    SO suite = the north-east frontier of SO_w(p, q) inside it.
    """
    p, q = bordage.anchor
    parts = quadrant_split(w.graph(), p, q)
    rect = Rect.open_between(bordage.p_plus, bordage.p_minus)
    ne_pts = [pt for pt in parts["NE"] if pt in rect]
    so_pts = [pt for pt in parts["SO"] if pt in rect]
    return ConfigI(
        p_plus=bordage.p_plus,
        p_minus=bordage.p_minus,
        ne_suite=tuple(reversed(sw_frontier(ne_pts))),
        so_suite=tuple(ne_frontier(so_pts)),
    )


def lambda_max(w: Perm, p: int, q: int) -> list[Perm]:
    """
    The maximal z such that z <= w and r_z(p, q) >= r_w(p, q) + 1, i.e. the
    maximal elements below both w and the iterated cobigrassmannian bound.
    Requires r_w(p, q) < min(p, q).  Output deduplicated and sorted by
    one-line word.
    """
    reinforced_bound(w, p, q)  # validates the precondition
    out: dict[Perm, None] = {}
    for bordage in frontier_pairs(w, p, q):
        conf = config_at_bordage(w, bordage)
        t_perm, region = tau(w, conf)
        if (p, q) not in region:
            raise AssertionError(
                f"rank-shift region at bordage {bordage} misses the anchor ({p},{q})"
            )
        out.setdefault(t_perm, None)
    return sorted(out, key=lambda z: z.word)


# ---------------------------------------------------------------------------
# Maximal elements below z with a prescribed left descent.


@dataclass(frozen=True)
class DescentMaxElement:
    """
    One maximal tau < z with s_j tau < tau.  kind is 'NW', 'SE' or 'mixed';
    the anchors are the frontier points generating it.
    """

    kind: str
    anchors: tuple[GraphPoint, ...]
    perm: Perm


def _nw_cycle(z: Perm, j: int, b2: int, beta2: int) -> tuple[int, ...]:
    # ordinate cycle (beta', j+1, y_1, ..., y_s) with the y_k read off the
    # SW frontier of the graph between the value j+1 and the point (b', beta')
    rect = Rect.open_between((z.inv(j + 1), j + 1), (b2, beta2))
    inside = [pt for pt in z.graph() if pt in rect]
    ys = [y for _, y in sw_frontier(inside)]
    return (beta2, j + 1, *sorted(ys))


def _se_cycle(z: Perm, j: int, c2: int, gamma2: int) -> tuple[int, ...]:
    rect = Rect.open_between((z.inv(j), j), (c2, gamma2))
    inside = [pt for pt in z.graph() if pt in rect]
    ys = [y for _, y in ne_frontier(inside)]
    return (j, *sorted(ys, reverse=True), gamma2)


def max_below_with_descent(z: Perm, j: int) -> list[DescentMaxElement]:
    """
    The maximal tau with tau < z and s_j tau < tau, for z with
    z^{-1}(j) < z^{-1}(j+1):

    - north-west kind, one per point (b', beta') of the SE frontier of
      the graph restricted to {p < z^{-1}(j), q > j + 1};
    - south-east kind, one per point (c', gamma') of the NW frontier of
      the graph restricted to {p > z^{-1}(j+1), q < j};
    - mixed kind, one per pair of graph points (b', beta'), (c', gamma')
      with z^{-1}(j) < b' < c' < z^{-1}(j+1), gamma' < j, beta' > j + 1
      and no graph point in the open rectangle they span.
    """
    if not 1 <= j <= z.n - 1:
        raise ValueError(f"descent index {j} out of range [1,{z.n - 1}]")
    pj, pj1 = z.inv(j), z.inv(j + 1)
    if not pj < pj1:
        raise ValueError(f"{j} is not a left ascent of {z}")
    graph = z.graph()
    out = []
    nw_region = [(x, y) for x, y in graph if x < pj and y > j + 1]
    for b2, beta2 in se_frontier(nw_region):
        perm = apply_value_cycle(_nw_cycle(z, j, b2, beta2), z)
        out.append(DescentMaxElement("NW", ((b2, beta2),), perm))
    se_region = [(x, y) for x, y in graph if x > pj1 and y < j]
    for c2, gamma2 in nw_frontier(se_region):
        perm = apply_value_cycle(_se_cycle(z, j, c2, gamma2), z)
        out.append(DescentMaxElement("SE", ((c2, gamma2),), perm))
    for b2, beta2 in graph:
        if not (pj < b2 < pj1 and beta2 > j + 1):
            continue
        for c2, gamma2 in graph:
            if not (b2 < c2 < pj1 and gamma2 < j):
                continue
            rect = Rect.open_between((b2, beta2), (c2, gamma2))
            if any(pt in rect for pt in graph):
                continue
            # the two cycles touch disjoint value ranges; apply both to z
            perm = apply_value_cycle(_nw_cycle(z, j, b2, beta2), z)
            perm = apply_value_cycle(_se_cycle(z, j, c2, gamma2), perm)
            out.append(
                DescentMaxElement("mixed", ((b2, beta2), (c2, gamma2)), perm)
            )
    return out


# ---------------------------------------------------------------------------
# The smallest element of the reinforcement family, used in tests.


def bigrassmannian(n0: int, n1: int, n2: int, n3: int) -> Perm:
    """
    The permutation (1..n1, n1+n3+1..n1+n3+n0, n1+1..n1+n3, n1+n3+n0+1..n);
    the least w whose rank at (n0+n1, n1+n3) equals n1 with equality forced.
    """
    word = (
        list(range(1, n1 + 1))
        + list(range(n1 + n3 + 1, n1 + n3 + n0 + 1))
        + list(range(n1 + 1, n1 + n3 + 1))
        + list(range(n1 + n3 + n0 + 1, n0 + n1 + n2 + n3 + 1))
    )
    return Perm(word)
