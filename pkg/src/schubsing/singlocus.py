"""
Assembly of the singular locus of a Schubert variety X_w: the irreducible
components, the generic singularity transverse to each, and the attached
Kazhdan-Lusztig polynomial and multiplicity.

The components are indexed by the type I configurations with both suites
nonempty and by the type II configurations that are mixte (no central
suite) or pure (central suite only).  The transverse slice is a rank <= 1
matrix cone C_{s+1,t+1} or C_{s+t+2,2}, or a nondegenerate quadratic cone
of odd dimension 2r + 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .configs import (
    ConfigI,
    ConfigII,
    enumerate_config_I,
    enumerate_config_II,
    sigma,
    tau,
)
from .perm import Perm, bruhat_leq, pattern_occurrences


@dataclass(frozen=True)
class RankOneCone:
    """The variety of (rows x cols) matrices of rank at most 1."""

    rows: int
    cols: int

    @property
    def dimension(self) -> int:
        return self.rows + self.cols - 1

    @property
    def label(self) -> str:
        return f"C_{{{self.rows},{self.cols}}}"


@dataclass(frozen=True)
class QuadraticCone:
    """A nondegenerate quadratic cone of odd dimension."""

    dim: int

    @property
    def dimension(self) -> int:
        return self.dim

    @property
    def label(self) -> str:
        return f"K_{{{self.dim}}}"


Transversal = RankOneCone | QuadraticCone


@dataclass(frozen=True)
class KLPolynomial:
    """Polynomial in q with the coefficient of q^k at index k."""

    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                head = "" if a == 1 else f"{a}*"
                terms.append(f"{head}q" if k == 1 else f"{head}q^{k}")
        return "+".join(terms) if terms else "0"


def kl_and_mult(t: Transversal) -> tuple[KLPolynomial, int]:
    """
    Kazhdan-Lusztig polynomial and multiplicity read off the transverse
    slice: for C_{i+1,j+1} they are 1 + q + ... + q^min(i,j) and binom(i+j, i);
    for a quadratic cone of dimension 2k + 1 they are 1 + q^k and 2.
    """
    if isinstance(t, RankOneCone):
        if t.rows < 2 or t.cols < 2:
            raise ValueError(f"{t.label} is smooth, no singularity data")
        i, j = t.rows - 1, t.cols - 1
        return KLPolynomial((1,) * (min(i, j) + 1)), comb(i + j, i)
    if t.dim < 3 or t.dim % 2 == 0:
        raise ValueError(f"K_{t.dim} is not an odd-dimensional singular cone")
    k = (t.dim - 1) // 2
    return KLPolynomial((1,) + (0,) * (k - 1) + (1,)), 2


@dataclass(frozen=True)
class SingularComponent:
    """One irreducible component X_v of the singular locus of X_w."""

    v: Perm
    transversal: Transversal
    codim: int
    kl: KLPolynomial
    mult: int
    sources: tuple[ConfigI | ConfigII, ...]

    @property
    def category(self) -> str:
        """'I', 'IIm' or 'IIp', from the first source configuration."""
        conf = self.sources[0]
        if isinstance(conf, ConfigI):
            return "I"
        return "IIm" if conf.mixte else "IIp"


def is_smooth(w: Perm) -> bool:
    """
    X_w is smooth iff w avoids 4231 and 3412.

    >>> is_smooth(Perm((3, 4, 1, 2)))
    False
    """
    return not pattern_occurrences(w, 4231) and not pattern_occurrences(w, 3412)


def _source_key(conf: ConfigI | ConfigII) -> tuple:
    if isinstance(conf, ConfigI):
        return (0, (conf.p_plus[0], conf.p_minus[0]), conf.abscissae())
    return (1 if conf.mixte else 2, conf.abcd, conf.abcd)


def singular_components(w: Perm) -> list[SingularComponent]:
    """
    The irreducible components of the singular locus of X_w, ordered like
    the component table: type I rows first, then mixte, then pure, each
    group by its anchor abscissae.  Configurations indexing the same
    permutation are merged into one component.
    """
    found: dict[Perm, list[tuple[ConfigI | ConfigII, Transversal]]] = {}
    for conf in enumerate_config_I(w, include_degenerate=False):
        v, _ = tau(w, conf)
        found.setdefault(v, []).append((conf, RankOneCone(conf.s + 1, conf.t + 1)))
    for conf in enumerate_config_II(w):
        if not (conf.mixte or conf.pure):
            continue
        v, _ = sigma(w, conf)
        trans: Transversal
        if conf.mixte:
            trans = RankOneCone(conf.s + conf.t + 2, 2)
        else:
            trans = QuadraticCone(2 * conf.r + 3)
        found.setdefault(v, []).append((conf, trans))

    components = []
    for v, entries in found.items():
        entries.sort(key=lambda e: _source_key(e[0]))
        conf0, trans = entries[0]
        codim = w.length - v.length
        if codim != trans.dimension:
            raise AssertionError(
                f"codimension {codim} of {v} differs from transversal {trans.label}"
            )
        kl, mult = kl_and_mult(trans)
        components.append(
            SingularComponent(
                v=v,
                transversal=trans,
                codim=codim,
                kl=kl,
                mult=mult,
                sources=tuple(conf for conf, _ in entries),
            )
        )
    components.sort(key=lambda comp: (_source_key(comp.sources[0]), comp.v.word))
    return components


@dataclass(frozen=True)
class ContainmentEntry:
    """A type II configuration whose point sits inside larger components."""

    config: ConfigII
    sigma: Perm
    containers: tuple[tuple[ConfigI, Perm, RankOneCone], ...]


def containment_report(w: Perm) -> list[ContainmentEntry]:
    """
    For every configuration II with a central suite and at least one outer
    suite (hence not itself a component), the one or two type I components
    containing it: for rt != 0 the configuration on (a, w(a)), (c, w(c)),
    the SO suite and the central suite; for rs != 0 the one on (b, w(b)),
    (d, w(d)), the central suite and the NE suite.
    """
    component_perms = {comp.v for comp in singular_components(w)}
    out = []
    for conf in enumerate_config_II(w):
        if conf.r == 0 or conf.s + conf.t == 0:
            continue
        a, b, c, d = conf.abcd
        sig, _ = sigma(w, conf)
        containers = []
        if conf.t >= 1:
            inner = ConfigI(
                p_plus=(a, w(a)),
                p_minus=(c, w(c)),
                ne_suite=tuple(reversed(conf.central)),
                so_suite=conf.so_suite,
            )
            containers.append((inner, RankOneCone(conf.r + 1, conf.t + 1)))
        if conf.s >= 1:
            inner = ConfigI(
                p_plus=(b, w(b)),
                p_minus=(d, w(d)),
                ne_suite=conf.ne_suite,
                so_suite=conf.central,
            )
            containers.append((inner, RankOneCone(conf.s + 1, conf.r + 1)))
        resolved = []
        for inner, trans in containers:
            t_perm, _ = tau(w, inner)
            if not bruhat_leq(sig, t_perm):
                raise AssertionError(f"{sig} not below its container {t_perm}")
            expected_drop = trans.rows + trans.cols - 1
            if w.length - t_perm.length != expected_drop:
                raise AssertionError(f"container of {conf.abcd} has wrong codimension")
            if t_perm not in component_perms:
                raise AssertionError(f"container {t_perm} is not a component")
            resolved.append((inner, t_perm, trans))
        out.append(ContainmentEntry(config=conf, sigma=sig, containers=tuple(resolved)))
    return out
