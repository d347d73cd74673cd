"""
Decorated point sets on the graph of a permutation ("configurations") and
the shorter permutations they index.

A configuration of type I consists of two anchor points P+ (north-west) and
P- (south-east) on the graph of w together with two staircase suites inside
the open rectangle they span; applying one cycle to the ordinates of its
points produces a permutation tau <= w.  A configuration of type II hangs
the same kind of data on an incompressible 3412 occurrence and produces a
permutation sigma <= w.  Both constructions shift the rank function of w up
by the characteristic function of an explicit cell region, which is what
makes their length drops and Bruhat inequalities checkable.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .perm import (
    GraphPoint,
    Perm,
    Rect,
    ne_frontier,
    nw_frontier,
    quadrant_split,
    rank_matrix,
    se_frontier,
    sw_frontier,
)


class ConfigurationError(ValueError):
    """Raised when a point set is not a valid configuration of w."""


@dataclass(frozen=True)
class Region:
    """An explicit set of lattice cells in [1, n]^2."""

    cells: frozenset[GraphPoint]

    def chi(self, p: int, q: int) -> int:
        return 1 if (p, q) in self.cells else 0

    def __contains__(self, cell: GraphPoint) -> bool:
        return cell in self.cells


@dataclass(frozen=True)
class ConfigI:
    """
    Anchors P+ = (x_inf, y_inf), P- = (x_minf, y_minf) plus the NE suite
    (x_1, y_1), ..., (x_s, y_s) listed with x decreasing, and the SO suite
    (x_-1, y_-1), ..., (x_-t, y_-t) listed with x increasing.
    """

    p_plus: GraphPoint
    p_minus: GraphPoint
    ne_suite: tuple[GraphPoint, ...] = ()
    so_suite: tuple[GraphPoint, ...] = ()

    @property
    def s(self) -> int:
        return len(self.ne_suite)

    @property
    def t(self) -> int:
        return len(self.so_suite)

    @property
    def degenerate(self) -> bool:
        return self.s == 0 or self.t == 0

    def points(self) -> frozenset[GraphPoint]:
        return frozenset((self.p_plus, self.p_minus, *self.ne_suite, *self.so_suite))

    def abscissae(self) -> tuple[int, ...]:
        return tuple(sorted(x for x, _ in self.points()))

    def cycle(self) -> tuple[int, ...]:
        """Ordinate cycle (y_inf, y_-1, ..., y_-t, y_-inf, y_1, ..., y_s)."""
        return (
            self.p_plus[1],
            *(y for _, y in self.so_suite),
            self.p_minus[1],
            *(y for _, y in self.ne_suite),
        )


@dataclass(frozen=True)
class ConfigII:
    """
    An incompressible 3412 occurrence with abscissae a < b < c < d, its
    central suite (c_1, d_1), ..., (c_r, d_r) listed with c increasing, the
    NE suite listed with x decreasing and the SO suite with x increasing.
    """

    abcd: tuple[int, int, int, int]
    central: tuple[GraphPoint, ...] = ()
    ne_suite: tuple[GraphPoint, ...] = ()
    so_suite: tuple[GraphPoint, ...] = ()

    @property
    def r(self) -> int:
        return len(self.central)

    @property
    def s(self) -> int:
        return len(self.ne_suite)

    @property
    def t(self) -> int:
        return len(self.so_suite)

    @property
    def mixte(self) -> bool:
        return self.r == 0

    @property
    def pure(self) -> bool:
        return self.r >= 1 and self.s == 0 and self.t == 0

    def corners(self, w: Perm) -> tuple[GraphPoint, GraphPoint, GraphPoint, GraphPoint]:
        a, b, c, d = self.abcd
        return ((a, w(a)), (b, w(b)), (c, w(c)), (d, w(d)))

    def points(self, w: Perm) -> frozenset[GraphPoint]:
        return frozenset(
            (*self.corners(w), *self.central, *self.ne_suite, *self.so_suite)
        )

    def cycle(self, w: Perm) -> tuple[int, ...]:
        """Ordinate cycle (w(a), y_-1, ..., y_-t, w(c), w(d), y_1, ..., y_s, w(b))."""
        a, b, c, d = self.abcd
        return (
            w(a),
            *(y for _, y in self.so_suite),
            w(c),
            w(d),
            *(y for _, y in self.ne_suite),
            w(b),
        )


def apply_value_cycle(cycle: tuple[int, ...], w: Perm) -> Perm:
    """Left multiplication of w by the cycle on values (c_0 -> c_1 -> ...)."""
    image = {cycle[k]: cycle[(k + 1) % len(cycle)] for k in range(len(cycle))}
    return Perm(image.get(v, v) for v in w.word)


# ---------------------------------------------------------------------------
# Type I


def validate_config_I(w: Perm, conf: ConfigI) -> None:
    graph = set(w.graph())
    if not conf.points() <= graph:
        raise ConfigurationError(f"points of {conf} are not all on the graph of {w}")
    xs = [conf.p_plus[0]] + [x for x, _ in conf.so_suite]
    xs += [x for x, _ in reversed(conf.ne_suite)] + [conf.p_minus[0]]
    if xs != sorted(set(xs)):
        raise ConfigurationError("abscissa chain violated")
    ys = [conf.p_minus[1]] + [y for _, y in reversed(conf.so_suite)]
    ys += [y for _, y in conf.ne_suite] + [conf.p_plus[1]]
    if ys != sorted(set(ys)):
        raise ConfigurationError("ordinate chain violated")
    rect = Rect.open_between(conf.p_plus, conf.p_minus)
    for x, y in graph:
        if (x, y) not in rect:
            continue
        covered = any(x >= xi and y >= yi for xi, yi in conf.ne_suite) or any(
            x <= xi and y <= yi for xi, yi in conf.so_suite
        )
        if not covered:
            raise ConfigurationError(
                f"graph point {(x, y)} in the spanned rectangle escapes the suites"
            )


def region_I(conf: ConfigI, n: int) -> Region:
    """
    Cells of the closed spanned rectangle minus the strict south-west
    quadrants of the SO suite, the weak north-east quadrants of the NE
    suite, the row of P+ and the column of P-.
    """
    x_inf, y_inf = conf.p_plus
    x_minf, y_minf = conf.p_minus
    cells = set()
    for x in range(x_inf, x_minf):
        for y in range(y_minf, y_inf):
            if any(x < xi and y < yi for xi, yi in conf.so_suite):
                continue
            if any(x >= xi and y >= yi for xi, yi in conf.ne_suite):
                continue
            cells.add((x, y))
    return Region(frozenset(cells))


def tau(w: Perm, conf: ConfigI) -> tuple[Perm, Region]:
    """
    The permutation tau = gamma(conf) w and its rank-shift region D, with
    r_tau = r_w + chi_D and l(tau) = l(w) - (s + t + 1).
    """
    validate_config_I(w, conf)
    t_perm = apply_value_cycle(conf.cycle(), w)
    region = region_I(conf, w.n)
    _check_rank_shift(w, t_perm, region)
    drop = w.length - t_perm.length
    if drop != conf.s + conf.t + 1:
        raise AssertionError(
            f"length drop {drop} != s+t+1 = {conf.s + conf.t + 1} for {conf}"
        )
    return t_perm, region


def enumerate_config_I(w: Perm, include_degenerate: bool = True) -> list[ConfigI]:
    """
    All type I configurations of w: scan every corner (p, q), pair the
    south-east frontier of the NO quadrant with the north-west frontier of
    the SE quadrant, and read the suites off the NE and SO quadrants inside
    the spanned rectangle.  Distinct corners yielding the same anchors and
    suites are identified.
    """
    graph = w.graph()
    seen: dict[ConfigI, None] = {}
    for p in range(1, w.n):
        for q in range(1, w.n):
            parts = quadrant_split(graph, p, q)
            if not parts["NO"] or not parts["SE"]:
                continue
            for p_plus in se_frontier(parts["NO"]):
                for p_minus in nw_frontier(parts["SE"]):
                    rect = Rect.open_between(p_plus, p_minus)
                    ne_pts = [pt for pt in parts["NE"] if pt in rect]
                    so_pts = [pt for pt in parts["SO"] if pt in rect]
                    conf = ConfigI(
                        p_plus=p_plus,
                        p_minus=p_minus,
                        ne_suite=tuple(reversed(sw_frontier(ne_pts))),
                        so_suite=tuple(ne_frontier(so_pts)),
                    )
                    seen.setdefault(conf, None)
    out = [
        conf
        for conf in seen
        if include_degenerate or not conf.degenerate
    ]
    out.sort(key=lambda c: (c.p_plus[0], c.p_minus[0], c.abscissae(), c.so_suite))
    return out


# ---------------------------------------------------------------------------
# Type II


def is_3412(w: Perm, a: int, b: int, c: int, d: int) -> bool:
    return w(c) < w(d) < w(a) < w(b)


def is_incompressible(w: Perm, a: int, b: int, c: int, d: int) -> bool:
    """
    No other 3412 occurrence (x, y, c, d) with (x, w(x)) weakly south-east
    of (a, w(a)) and (y, w(y)) weakly south-east of (b, w(b)), and none
    (a, b, x, y) with (x, w(x)) weakly north-west of (c, w(c)) and
    (y, w(y)) weakly north-west of (d, w(d))).
    """
    if not is_3412(w, a, b, c, d):
        raise ConfigurationError(f"{(a, b, c, d)} is not a 3412 occurrence of {w}")
    alpha, beta, gamma, delta = w(a), w(b), w(c), w(d)
    for x in range(a, c):
        if w(x) > alpha:
            continue
        for y in range(max(x + 1, b), c):
            if (x, y) == (a, b) or w(y) > beta:
                continue
            if delta < w(x) < w(y):
                return False
    for x in range(b + 1, c + 1):
        if w(x) < gamma:
            continue
        for y in range(x + 1, d + 1):
            if (x, y) == (c, d) or w(y) < delta:
                continue
            if w(x) < w(y) < alpha:
                return False
    return True


def config_II_at(w: Perm, a: int, b: int, c: int, d: int) -> ConfigII:
    """
    Build the configuration II carried by an incompressible 3412 occurrence:
    central suite = graph points in the open central zone, NE suite = the
    south-west frontier of the graph inside [c,d] x [w(a),w(b)], SO suite =
    the north-east frontier inside [a,b] x [w(c),w(d)].
    """
    if not is_incompressible(w, a, b, c, d):
        raise ConfigurationError(f"{(a, b, c, d)} is compressible in {w}")
    alpha, beta, gamma, delta = w(a), w(b), w(c), w(d)
    graph = w.graph()
    central = sorted(pt for pt in graph if b < pt[0] < c and delta < pt[1] < alpha)
    # the zone corners carry the values gamma, delta, alpha, beta, so graph
    # points inside the closed NE and SO zones have strictly interior x
    ne_pts = [pt for pt in graph if c <= pt[0] <= d and alpha <= pt[1] <= beta]
    so_pts = [pt for pt in graph if a <= pt[0] <= b and gamma <= pt[1] <= delta]
    conf = ConfigII(
        abcd=(a, b, c, d),
        central=tuple(central),
        ne_suite=tuple(reversed(sw_frontier(ne_pts))),
        so_suite=tuple(ne_frontier(so_pts)),
    )
    # consequences of incompressibility, asserted as internal invariants
    ds = [y for _, y in central]
    if ds != sorted(ds, reverse=True):
        raise AssertionError(f"central suite of {conf} is not NW/SE ordered")
    for x, y in graph:
        in_mn = b < x < c and alpha <= y <= beta
        in_ms = b < x < c and gamma <= y <= delta
        in_mo = a <= x <= b and delta < y < alpha
        in_me = c <= x <= d and delta < y < alpha
        if in_mn or in_ms or in_mo or in_me:
            raise AssertionError(f"median zone of {conf} meets the graph at {(x, y)}")
    return conf


def validate_config_II(w: Perm, conf: ConfigII) -> None:
    a, b, c, d = conf.abcd
    if not (1 <= a < b < c < d <= w.n):
        raise ConfigurationError(f"bad abscissae {conf.abcd}")
    if config_II_at(w, a, b, c, d) != conf:
        raise ConfigurationError(f"{conf} is not the configuration II of {w} at {conf.abcd}")


def region_II(w: Perm, conf: ConfigII) -> Region:
    a, b, c, d = conf.abcd
    alpha, beta, gamma, delta = w(a), w(b), w(c), w(d)
    cells = set()
    for x in range(a, d):
        for y in range(gamma, beta):
            if x < b and y >= alpha:
                continue
            if x >= c and y < delta:
                continue
            if any(x < xi and y < yi for xi, yi in conf.so_suite):
                continue
            if any(x >= xi and y >= yi for xi, yi in conf.ne_suite):
                continue
            cells.add((x, y))
    return Region(frozenset(cells))


def sigma(w: Perm, conf: ConfigII) -> tuple[Perm, Region]:
    """
    The permutation sigma = gamma(conf) w and its rank-shift region, with
    r_sigma = r_w + chi and l(sigma) = l(w) - (2r + s + t + 3).
    """
    validate_config_II(w, conf)
    s_perm = apply_value_cycle(conf.cycle(w), w)
    region = region_II(w, conf)
    _check_rank_shift(w, s_perm, region)
    drop = w.length - s_perm.length
    expect = 2 * conf.r + conf.s + conf.t + 3
    if drop != expect:
        raise AssertionError(f"length drop {drop} != 2r+s+t+3 = {expect} for {conf}")
    return s_perm, region


def enumerate_config_II(w: Perm) -> list[ConfigII]:
    """All configurations II of w, in lexicographic order of (a, b, c, d)."""
    out = []
    for a, b, c, d in combinations(range(1, w.n + 1), 4):
        if is_3412(w, a, b, c, d) and is_incompressible(w, a, b, c, d):
            out.append(config_II_at(w, a, b, c, d))
    return out


def component_of(w: Perm, conf: ConfigI | ConfigII) -> Perm:
    """The permutation indexed by a configuration of either type."""
    if isinstance(conf, ConfigI):
        return tau(w, conf)[0]
    return sigma(w, conf)[0]


def _check_rank_shift(w: Perm, v: Perm, region: Region) -> None:
    rw, rv = rank_matrix(w), rank_matrix(v)
    for p in range(1, w.n + 1):
        for q in range(1, w.n + 1):
            if rv[p - 1][q - 1] - rw[p - 1][q - 1] != region.chi(p, q):
                raise AssertionError(
                    f"rank shift of {v} over {w} disagrees with region at {(p, q)}"
                )
