import random
from itertools import combinations

import pytest

from schubsing.configs import (
    ConfigI,
    ConfigurationError,
    config_II_at,
    enumerate_config_I,
    enumerate_config_II,
    is_3412,
    is_incompressible,
    sigma,
    tau,
)
from schubsing.perm import Perm, bruhat_leq, rank_matrix

W10 = Perm((5, 10, 7, 2, 9, 8, 1, 6, 3, 4))
W18 = Perm((11, 12, 17, 7, 3, 5, 16, 10, 1, 9, 2, 6, 15, 4, 18, 13, 8, 14))


def random_perm(rng, n):
    word = list(range(1, n + 1))
    rng.shuffle(word)
    return Perm(word)


class TestEnumerateConfigI:
    def test_identity_empty(self):
        assert enumerate_config_I(Perm.identity(5)) == []

    def test_w10_well_bordered_points(self):
        confs = enumerate_config_I(W10)
        nondeg = [c for c in confs if not c.degenerate]
        # the two nondegenerate configurations hang off P+ = (2, 10) with
        # P- of abscissa 7 and 8
        assert sorted((c.p_plus, c.p_minus) for c in nondeg) == [
            ((2, 10), (7, 1)),
            ((2, 10), (8, 6)),
        ]
        # the three bordages at the corner (4, 5) appear, all degenerate
        expected = [
            ConfigI(p_plus=(3, 7), p_minus=(7, 1), so_suite=((4, 2),)),
            ConfigI(p_plus=(3, 7), p_minus=(9, 3), ne_suite=((8, 6),)),
            ConfigI(p_plus=(3, 7), p_minus=(10, 4), ne_suite=((8, 6),)),
        ]
        for conf in expected:
            assert conf in confs
            assert conf.degenerate

    def test_point_set_determines_nondegenerate_configuration(self, s6):
        # among configurations with both suites nonempty the full point set
        # is a complete key; degenerate ones can collide (a single middle
        # chain reads as either suite)
        for w in s6:
            seen = {}
            for conf in enumerate_config_I(w, include_degenerate=False):
                key = conf.points()
                assert key not in seen, (w, conf, seen[key])
                seen[key] = conf

    def test_emptiness_inclusion_holds(self):
        rng = random.Random(17)
        for _ in range(30):
            w = random_perm(rng, 7)
            for conf in enumerate_config_I(w):
                rect_pts = [
                    (x, y)
                    for x, y in w.graph()
                    if conf.p_plus[0] < x < conf.p_minus[0]
                    and conf.p_minus[1] < y < conf.p_plus[1]
                ]
                for x, y in rect_pts:
                    assert any(
                        x <= xi and y <= yi for xi, yi in conf.so_suite
                    ) or any(x >= xi and y >= yi for xi, yi in conf.ne_suite)


class TestTau:
    def test_table_row_one(self):
        conf = next(
            c
            for c in enumerate_config_I(W10)
            if c.p_plus == (2, 10) and c.p_minus == (7, 1)
        )
        t, _ = tau(W10, conf)
        assert t.word == (5, 7, 2, 1, 10, 9, 8, 6, 3, 4)
        assert W10.length - t.length == 5
        assert (conf.s, conf.t) == (2, 2)

    def test_table_row_two(self):
        conf = next(
            c
            for c in enumerate_config_I(W10)
            if c.p_plus == (2, 10) and c.p_minus == (8, 6)
        )
        t, _ = tau(W10, conf)
        assert t.word == (5, 7, 6, 2, 10, 9, 1, 8, 3, 4)
        assert W10.length - t.length == 4

    def test_invalid_configuration_rejected(self):
        conf = ConfigI(p_plus=(1, 5), p_minus=(2, 10))
        with pytest.raises(ConfigurationError):
            tau(W10, conf)

    def test_rank_shift_and_length_drop(self, s6):
        for w in s6:
            for conf in enumerate_config_I(w):
                t, region = tau(w, conf)
                assert bruhat_leq(t, w)
                assert w.length - t.length == conf.s + conf.t + 1
                rw, rt = rank_matrix(w), rank_matrix(t)
                for p in range(1, 7):
                    for q in range(1, 7):
                        assert rt[p - 1][q - 1] == rw[p - 1][q - 1] + region.chi(p, q)


class TestIncompressibility:
    def test_w10_golden_list(self):
        occs = [
            t
            for t in combinations(range(1, 11), 4)
            if is_3412(W10, *t) and is_incompressible(W10, *t)
        ]
        assert occs == [
            (1, 3, 4, 9),
            (1, 3, 4, 10),
            (1, 6, 7, 9),
            (1, 6, 7, 10),
            (1, 8, 9, 10),
            (3, 6, 7, 8),
            (3, 6, 9, 10),
        ]

    def test_s18_example(self):
        assert is_incompressible(W18, 2, 7, 11, 17)

    def test_not_3412_rejected(self):
        with pytest.raises(ConfigurationError):
            is_incompressible(W10, 1, 2, 3, 4)


class TestEnumerateConfigII:
    def test_identity_empty(self):
        assert enumerate_config_II(Perm.identity(6)) == []

    def test_w10_types(self):
        confs = enumerate_config_II(W10)
        assert len(confs) == 7
        assert [c.abcd for c in confs if c.pure] == [(3, 6, 9, 10)]
        assert sum(1 for c in confs if c.mixte) == 6

    def test_s18_suites(self):
        conf = config_II_at(W18, 2, 7, 11, 17)
        assert (conf.r, conf.s, conf.t) == (2, 2, 2)
        assert conf.central == ((8, 10), (10, 9))
        assert conf.ne_suite == ((16, 13), (13, 15))
        assert conf.so_suite == ((4, 7), (6, 5))

    def test_central_suite_ordering(self):
        rng = random.Random(23)
        for _ in range(40):
            w = random_perm(rng, 8)
            for conf in enumerate_config_II(w):
                cs = [x for x, _ in conf.central]
                ds = [y for _, y in conf.central]
                assert cs == sorted(cs)
                assert ds == sorted(ds, reverse=True)


class TestSigma:
    def test_s18_golden(self):
        conf = config_II_at(W18, 2, 7, 11, 17)
        s, _ = sigma(W18, conf)
        assert s.word == (11, 7, 17, 5, 3, 2, 12, 10, 1, 9, 8, 6, 16, 4, 18, 15, 13, 14)

    def test_smallest_3412(self):
        w = Perm((3, 4, 1, 2))
        conf = enumerate_config_II(w)[0]
        s, _ = sigma(w, conf)
        assert s.word == (1, 3, 2, 4)
        assert s.length == 1

    def test_w10_pure(self):
        conf = config_II_at(W10, 3, 6, 9, 10)
        s, _ = sigma(W10, conf)
        assert s.word == (5, 10, 3, 2, 9, 7, 1, 6, 4, 8)
        assert W10.length - s.length == 5

    def test_rank_shift_and_length_drop(self, s6):
        for w in s6:
            for conf in enumerate_config_II(w):
                s, region = sigma(w, conf)
                assert bruhat_leq(s, w)
                assert w.length - s.length == 2 * conf.r + conf.s + conf.t + 3
                rw, rs = rank_matrix(w), rank_matrix(s)
                for p in range(1, 7):
                    for q in range(1, 7):
                        assert rs[p - 1][q - 1] == rw[p - 1][q - 1] + region.chi(p, q)
