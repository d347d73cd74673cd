"""
Cobigrassmannian permutations and the corectrix description of the
Bruhat-Chevalley order.

A cobigrassmannian is a permutation with exactly one ascent whose inverse
also has exactly one ascent.  It is encoded by a quadruple of integers
(n0, n1, n2, n3) with n1, n2 >= 1 and n0 + n1 + n2 + n3 = n, and realizes
the largest permutation c with r_c(n0 + n1, n1 + n3) >= n1.  Comparing an
arbitrary w against c therefore amounts to one rank inequality, and the
minimal cobigrassmannians above w (its corectrices) pin w down completely.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perm import Perm, bruhat_leq, rank

CoessentialPoint = tuple[int, int]


@dataclass(frozen=True)
class Cobigrassmannian:
    n0: int
    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        if self.n0 < 0 or self.n3 < 0 or self.n1 < 1 or self.n2 < 1:
            raise ValueError(f"invalid quadruple {self.quadruple}")

    @property
    def quadruple(self) -> tuple[int, int, int, int]:
        return (self.n0, self.n1, self.n2, self.n3)

    @property
    def n(self) -> int:
        return self.n0 + self.n1 + self.n2 + self.n3

    @property
    def anchor(self) -> tuple[int, int]:
        """The cell (p, q) whose rank condition r(p, q) >= n1 cuts out X_c."""
        return (self.n0 + self.n1, self.n1 + self.n3)

    def realize(self) -> Perm:
        """
        One-line form: cut (n, n-1, ..., 1) into consecutive blocks of sizes
        n0, n2, n1, n3 and swap the two middle blocks, so the result carries
        blocks of sizes n0, n1, n2, n3.  This is the largest permutation
        whose rank at the anchor is at least n1.

        >>> Cobigrassmannian(1, 1, 1, 1).realize().word
        (4, 2, 3, 1)
        """
        n = self.n
        desc = list(range(n, 0, -1))
        b0 = desc[: self.n0]
        b2 = desc[self.n0 : self.n0 + self.n2]
        b1 = desc[self.n0 + self.n2 : self.n0 + self.n2 + self.n1]
        b3 = desc[self.n0 + self.n2 + self.n1 :]
        return Perm(b0 + b1 + b2 + b3)

    @property
    def iterable(self) -> bool:
        return self.n0 >= 1 and self.n3 >= 1

    def iterate(self) -> "Cobigrassmannian":
        """
        The reinforcement c^1 with quadruple (n0-1, n1+1, n2+1, n3-1): same
        anchor cell, rank threshold raised by one, hence realize(c^1) is
        strictly below realize(c).
        """
        if not self.iterable:
            raise ValueError(f"quadruple {self.quadruple} is not iterable")
        return Cobigrassmannian(self.n0 - 1, self.n1 + 1, self.n2 + 1, self.n3 - 1)


def all_cobigrassmannians(n: int) -> list[Cobigrassmannian]:
    """All quadruples of total n, in lexicographic order."""
    out = []
    for n0 in range(n - 1):
        for n1 in range(1, n - n0):
            for n2 in range(1, n - n0 - n1 + 1):
                n3 = n - n0 - n1 - n2
                if n3 >= 0:
                    out.append(Cobigrassmannian(n0, n1, n2, n3))
    return out


def leq_cobigrassmannian(w: Perm, c: Cobigrassmannian) -> bool:
    """
    w <= realize(c) iff w([1, n0+n1]) meets [1, n1+n3] in at least n1 values,
    i.e. r_w at the anchor is at least the threshold n1.
    """
    if w.n != c.n:
        raise ValueError("size mismatch")
    p, q = c.anchor
    return rank(w, p, q) >= c.n1


def coessential_set(w: Perm) -> list[CoessentialPoint]:
    """
    All (p, q) with w(p-1) <= q < w(p) and w^{-1}(q) <= p-1 < w^{-1}(q+1),
    in lexicographic order.  Boundary conventions: w(0) = 0 and
    w^{-1}(n+1) = n+1, which make the scan total (no point ever has p = 1
    or q = n).
    """
    n = w.n
    out = []
    for p in range(1, n + 1):
        lo = w(p - 1) if p > 1 else 0
        hi = w(p)
        for q in range(max(lo, 1), hi):
            pos_q = w.inv(q)
            pos_q1 = w.inv(q + 1) if q < n else n + 1
            if pos_q <= p - 1 < pos_q1:
                out.append((p, q))
    return out


def corectrix_at(w: Perm, point: CoessentialPoint) -> Cobigrassmannian:
    """
    The corectrix attached to the coessential point (p, q): the rank
    condition lives at the corner (p-1, q), with threshold r = r_w(p-1, q),
    giving the quadruple (p-1-r, r, n-(p-1)-q+r, q-r).
    """
    p, q = point
    r = rank(w, p - 1, q)
    return Cobigrassmannian(p - 1 - r, r, w.n - (p - 1) - q + r, q - r)


def corectrices(w: Perm) -> list[Cobigrassmannian]:
    """
    The minimal cobigrassmannians above w, one per coessential point, in
    the lexicographic order of the coessential points.
    """
    return [corectrix_at(w, pt) for pt in coessential_set(w)]


def minimal_cobigrassmannians_above(w: Perm) -> list[Cobigrassmannian]:
    """Brute force over all quadruples; used to cross-check corectrices()."""
    above = [c for c in all_cobigrassmannians(w.n) if leq_cobigrassmannian(w, c)]
    reals = {c: c.realize() for c in above}
    out = [
        c
        for c in above
        if not any(
            d is not c and bruhat_leq(reals[d], reals[c]) and reals[d] != reals[c]
            for d in above
        )
    ]
    return out
