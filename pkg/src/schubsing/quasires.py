"""
Quasi-resolution combinatorics for a permutation containing a 3412 pattern.

A well-filled 3412 occurrence of minimal amplitude is fixed; its ordinate
span [delta', alpha'] (after a monotone extension) produces, for each
i = 1..h with h = alpha - delta, a parabolic pair (I, J_i) and a shorter
permutation w_i with dim P_I x^{P_{J_i}} X_{w_i} = l(w).  The locus where
the natural birational map to X_w collapses has irreducible components of
north-west, south-east and mixed kinds, read off the graph of w; singular
components of X_{w_i} transport to configurations of w unless they stay
inside the collapsed locus.
"""
from __future__ import annotations

from dataclasses import dataclass

from .configs import (
    ConfigI,
    ConfigII,
    ConfigurationError,
    component_of,
    config_II_at,
    is_3412,
    is_incompressible,
    sigma,
    tau,
)
from .perm import (
    GraphPoint,
    Perm,
    Rect,
    avoids_3412,
    bruhat_leq,
    coset_rep,
    longest_in_parabolic,
    ne_frontier,
    nw_frontier,
    pattern_occurrences,
    se_frontier,
    sw_frontier,
)


class CovexillaryError(ValueError):
    """Raised when w avoids 3412, so no quasi-resolution frame exists."""


@dataclass(frozen=True)
class Frame3412:
    """A 3412 occurrence a < b < c < d with its ordinates and measurements."""

    abcd: tuple[int, int, int, int]
    ordinates: tuple[int, int, int, int]  # alpha, beta, gamma, delta

    @property
    def alpha(self) -> int:
        return self.ordinates[0]

    @property
    def beta(self) -> int:
        return self.ordinates[1]

    @property
    def gamma(self) -> int:
        return self.ordinates[2]

    @property
    def delta(self) -> int:
        return self.ordinates[3]

    @property
    def hauteur(self) -> int:
        return self.alpha - self.delta

    @property
    def amplitude(self) -> int:
        return self.beta - self.gamma


def is_well_filled(w: Perm, a: int, b: int, c: int, d: int) -> bool:
    """Every value strictly between w(d) and w(a) sits at a position in ]b, c[."""
    alpha, delta = w(a), w(d)
    return all(b < w.inv(v) < c for v in range(delta + 1, alpha))


def select_frame(w: Perm) -> Frame3412:
    """
    Among the well-filled 3412 occurrences of w, one of minimal amplitude;
    ties broken by lexicographically largest (a, b, c, d).  Such an
    occurrence is automatically incompressible.
    """
    best: tuple[int, tuple[int, ...], tuple[int, int, int, int]] | None = None
    for a, b, c, d in pattern_occurrences(w, 3412):
        if not is_well_filled(w, a, b, c, d):
            continue
        key = (w(b) - w(c), (-a, -b, -c, -d), (a, b, c, d))
        if best is None or key < best:
            best = key
    if best is None:
        raise CovexillaryError(f"{w} avoids 3412; no frame to resolve")
    a, b, c, d = best[2]
    if not is_incompressible(w, a, b, c, d):
        raise AssertionError(f"selected frame {best[2]} is compressible in {w}")
    return Frame3412(abcd=best[2], ordinates=(w(a), w(b), w(c), w(d)))


def ordinate_extension(w: Perm, frame: Frame3412) -> tuple[int, int]:
    """
    (alpha', delta'): alpha' is the largest q >= alpha reached from alpha by
    steps with strictly decreasing positions, delta' the least q <= delta
    reached downward the same way.
    """
    alpha, delta = frame.alpha, frame.delta
    a_p = alpha
    while a_p < w.n and w.inv(a_p + 1) < w.inv(a_p):
        a_p += 1
    d_p = delta
    while d_p > 1 and w.inv(d_p - 1) > w.inv(d_p):
        d_p -= 1
    return a_p, d_p


@dataclass(frozen=True)
class QuasiResolution:
    """The data attached to one index i in [1, h]."""

    i: int
    alpha_p: int
    delta_p: int
    k: int
    I: frozenset[int]
    J: frozenset[int]
    w_i: Perm


def build_quasi_resolutions(w: Perm) -> list[QuasiResolution]:
    """
    For i = 1..h: the generator k_i = delta' + alpha' - alpha + i - 1, the
    parabolic sets I = {delta', ..., alpha'-1} and J_i = I minus {k_i}, and
    w_i = w_{J_i} w_I w.
    """
    frame = select_frame(w)
    alpha_p, delta_p = ordinate_extension(w, frame)
    gens_i = frozenset(range(delta_p, alpha_p))
    w_I = longest_in_parabolic(gens_i, w.n)
    if coset_rep(w, gens_i, "max") != w:
        raise AssertionError(f"{w} is not maximal in its coset for I = {set(gens_i)}")
    out = []
    for i in range(1, frame.hauteur + 1):
        k = delta_p + alpha_p - frame.alpha + i - 1
        gens_j = gens_i - {k}
        w_J = longest_in_parabolic(gens_j, w.n)
        w_i = w_J * (w_I * w)
        if coset_rep(w_i, gens_j, "max") != w_i:
            raise AssertionError(f"w_{i} = {w_i} is not maximal in its J_i coset")
        model_dim = w_I.length - w_J.length + w_i.length
        if model_dim != w.length:
            raise AssertionError(
                f"quasi-resolution {i} of {w} has dimension {model_dim} != {w.length}"
            )
        out.append(
            QuasiResolution(
                i=i, alpha_p=alpha_p, delta_p=delta_p, k=k, I=gens_i, J=gens_j, w_i=w_i
            )
        )
    return out


@dataclass(frozen=True)
class ExceptionalComponent:
    """
    One irreducible component of the image of the collapsed locus of the
    i-th quasi-resolution.  kind is 'NW', 'SE' or 'mixed'; anchors hold the
    generating frontier point(s); config is the underlying configuration
    (type I for NW/SE, a height-one type II for mixed).
    """

    kind: str
    anchors: tuple[GraphPoint, ...]
    perm: Perm
    config: ConfigI | ConfigII


def exceptional_components(w: Perm, i: int) -> list[ExceptionalComponent]:
    """
    Components of the image of the collapsed locus of pi_i, for i in [1, h]:

    - north-west kind t^i(b') for (b', beta') on the SE frontier of the
      graph over {p < w^{-1}(alpha-i+1), q > alpha'};
    - south-east kind t_i(c') for (c', gamma') on the NW frontier of the
      graph over {p > w^{-1}(alpha-i), q < delta'};
    - mixed kind m_i(b', c') for incompressible height-one 3412 occurrences
      w^{-1}(alpha-i+1) < b' < c' < w^{-1}(alpha-i).
    """
    frame = select_frame(w)
    alpha = frame.alpha
    if not 1 <= i <= frame.hauteur:
        raise ValueError(f"index {i} out of range [1,{frame.hauteur}]")
    alpha_p, delta_p = ordinate_extension(w, frame)
    pos_hi = w.inv(alpha - i + 1)
    pos_lo = w.inv(alpha - i)
    graph = w.graph()
    out = []

    no_region = [(x, y) for x, y in graph if x < pos_hi and y > alpha_p]
    no_frontier = se_frontier(no_region)
    for b2, beta2 in no_frontier:
        a_tilde = max(
            v for v in range(alpha - i + 1, alpha_p + 1) if b2 < w.inv(v)
        )
        so_suite = tuple((w.inv(v), v) for v in range(a_tilde, alpha - i, -1))
        strip = [
            (x, y) for x, y in graph if pos_hi < x < pos_lo and alpha_p < y < beta2
        ]
        conf = ConfigI(
            p_plus=(b2, beta2),
            p_minus=(pos_lo, alpha - i),
            ne_suite=tuple(reversed(sw_frontier(strip))),
            so_suite=so_suite,
        )
        out.append(
            ExceptionalComponent("NW", ((b2, beta2),), tau(w, conf)[0], conf)
        )

    se_region = [(x, y) for x, y in graph if x > pos_lo and y < delta_p]
    se_front = nw_frontier(se_region)
    for c2, gamma2 in se_front:
        d_tilde = min(
            v for v in range(delta_p, alpha - i + 1) if w.inv(v) < c2
        )
        ne_suite = tuple((w.inv(v), v) for v in range(d_tilde, alpha - i + 1))
        strip = [
            (x, y) for x, y in graph if pos_hi < x < pos_lo and gamma2 < y < delta_p
        ]
        conf = ConfigI(
            p_plus=(pos_hi, alpha - i + 1),
            p_minus=(c2, gamma2),
            ne_suite=ne_suite,
            so_suite=tuple(ne_frontier(strip)),
        )
        out.append(
            ExceptionalComponent("SE", ((c2, gamma2),), tau(w, conf)[0], conf)
        )

    for b2 in range(pos_hi + 1, pos_lo):
        if w(b2) <= alpha - i + 1:
            continue
        for c2 in range(b2 + 1, pos_lo):
            if not is_3412(w, pos_hi, b2, c2, pos_lo):
                continue
            if not is_incompressible(w, pos_hi, b2, c2, pos_lo):
                continue
            conf2 = config_II_at(w, pos_hi, b2, c2, pos_lo)
            out.append(
                ExceptionalComponent(
                    "mixed", ((b2, w(b2)), (c2, w(c2))), sigma(w, conf2)[0], conf2
                )
            )

    # structural facts: extreme indices force nondegenerate type I data,
    # and for the inner indices the frame corner is the extreme frontier point
    for comp in out:
        if i == 1 and comp.kind == "NW" and comp.config.degenerate:
            raise AssertionError(f"NW component of the first index degenerate: {comp}")
        if i == frame.hauteur and comp.kind == "SE" and comp.config.degenerate:
            raise AssertionError(f"SE component of the last index degenerate: {comp}")
    b, c = frame.abcd[1], frame.abcd[2]
    if i > 1 and (not no_frontier or no_frontier[0] != (b, frame.beta)):
        raise AssertionError(f"westernmost NW frontier point is not (b, beta) at i={i}")
    if i < frame.hauteur and (not se_front or se_front[-1] != (c, frame.gamma)):
        raise AssertionError(f"easternmost SE frontier point is not (c, gamma) at i={i}")
    return out


@dataclass(frozen=True)
class GoodFamilyWitness:
    """Indices i < j and the nested anchors certifying a good family."""

    i: int
    j: int
    b_j: int
    c_i: int
    bounds: tuple[int, int]
    config: ConfigII
    sigma: Perm


def good_family_witness(
    w: Perm, family: list[ExceptionalComponent]
) -> GoodFamilyWitness:
    """
    Given one exceptional component per index, each of NW or SE kind with a
    degenerate underlying configuration, find indices i < j with the i-th
    member of SE kind at (c_i, gamma_i), the j-th of NW kind at
    (b_j, beta_j), and w^{-1}(alpha-i+1) < b_j < c_i < w^{-1}(alpha-j).
    The spanned occurrence is an incompressible 3412 whose permutation
    bounds the intersection of the family.
    """
    frame = select_frame(w)
    h, alpha = frame.hauteur, frame.alpha
    alpha_p, delta_p = ordinate_extension(w, frame)
    if len(family) != h:
        raise ValueError(f"family must have one member per index, expected {h}")
    for member in family:
        if member.kind == "mixed":
            raise ValueError("mixed members already sit inside the singular locus")
        if not isinstance(member.config, ConfigI) or not member.config.degenerate:
            raise ValueError(
                "nondegenerate members already sit inside the singular locus"
            )
    for i in range(1, h + 1):
        vi = family[i - 1]
        if vi.kind != "SE":
            continue
        c_i = vi.anchors[0][0]
        for j in range(i + 1, h + 1):
            vj = family[j - 1]
            if vj.kind != "NW":
                continue
            b_j = vj.anchors[0][0]
            lo, hi = w.inv(alpha - i + 1), w.inv(alpha - j)
            if lo < b_j < c_i < hi:
                alpha_j = min(
                    v for v in range(delta_p, alpha_p + 1) if w.inv(v) < b_j
                )
                delta_i = max(
                    v for v in range(delta_p, alpha_p + 1) if w.inv(v) > c_i
                )
                conf = config_II_at(w, w.inv(alpha_j), b_j, c_i, w.inv(delta_i))
                sig, _ = sigma(w, conf)
                return GoodFamilyWitness(
                    i=i, j=j, b_j=b_j, c_i=c_i, bounds=(lo, hi), config=conf, sigma=sig
                )
    raise AssertionError(f"no good pair found in the family for {w}")


@dataclass(frozen=True)
class TransportResult:
    """Outcome of pushing a configuration of w_i through the i-th map."""

    exceptional: bool
    config: ConfigI | ConfigII | None = None
    component: Perm | None = None


def transport_configuration(
    w: Perm, i: int, conf: ConfigI | ConfigII
) -> TransportResult:
    """
    Push a configuration of w_i indexing a component of Sing X_{w_i} down
    to X_w.  The image of its bundle is the Schubert variety of the
    I-maximal representative of the coset of v; the bundle sits inside the
    collapsed locus exactly when that representative is bounded by one of
    the exceptional components of the same index.  Otherwise the points
    (x, w(x)) over the same abscissae form a configuration of w of the
    same type, indexing the component w_I w_{J_i} v of Sing X_w.
    """
    qrs = build_quasi_resolutions(w)
    if not 1 <= i <= len(qrs):
        raise ValueError(f"index {i} out of range [1,{len(qrs)}]")
    qr = qrs[i - 1]
    v = component_of(qr.w_i, conf)
    v2 = coset_rep(v, qr.I, "max")
    if any(
        bruhat_leq(v2, exc.perm) for exc in exceptional_components(w, i)
    ):
        return TransportResult(exceptional=True)
    w_I = longest_in_parabolic(qr.I, w.n)
    w_J = longest_in_parabolic(qr.J, w.n)
    if v2 != w_I * (w_J * v) or v2.length != v.length + w_I.length - w_J.length:
        raise AssertionError(f"transported {v} does not gain the full coset length")
    if isinstance(conf, ConfigI):
        moved = ConfigI(
            p_plus=(conf.p_plus[0], w(conf.p_plus[0])),
            p_minus=(conf.p_minus[0], w(conf.p_minus[0])),
            ne_suite=tuple((x, w(x)) for x, _ in conf.ne_suite),
            so_suite=tuple((x, w(x)) for x, _ in conf.so_suite),
        )
    else:
        moved = config_II_at(w, *conf.abcd)
        if {x for x, _ in moved.points(w)} != {x for x, _ in conf.points(qr.w_i)}:
            raise AssertionError(
                f"transported abscissae of {conf.abcd} changed under the move"
            )
    v_check = component_of(w, moved)
    if v_check != v2:
        raise AssertionError(
            f"transported configuration indexes {v_check}, expected {v2}"
        )
    return TransportResult(exceptional=False, config=moved, component=v2)
