import pytest

from schubsing.cograssmann import (
    Cobigrassmannian,
    all_cobigrassmannians,
    coessential_set,
    corectrices,
    corectrix_at,
    leq_cobigrassmannian,
    minimal_cobigrassmannians_above,
)
from schubsing.perm import Perm, bruhat_leq

W10 = Perm((5, 10, 7, 2, 9, 8, 1, 6, 3, 4))


class TestRealize:
    def test_smallest(self):
        assert Cobigrassmannian(0, 1, 1, 0).realize() == Perm((1, 2))

    def test_one_one_one_one(self):
        assert Cobigrassmannian(1, 1, 1, 1).realize().word == (4, 2, 3, 1)

    def test_unequal_middle_blocks(self):
        # forced by the rank criterion: the largest w with r_w(3, 2) >= 2
        assert Cobigrassmannian(1, 2, 1, 0).realize().word == (4, 2, 1, 3)

    def test_invalid_quadruple(self):
        with pytest.raises(ValueError):
            Cobigrassmannian(1, 0, 1, 2)

    def test_single_ascent_both_sides(self):
        for n in range(2, 9):
            for c in all_cobigrassmannians(n):
                r = c.realize()
                for u in (r, r.inverse()):
                    ascents = sum(1 for i in range(1, n) if u(i) < u(i + 1))
                    assert ascents == 1


class TestIterate:
    def test_arithmetic(self):
        assert Cobigrassmannian(1, 1, 1, 1).iterate().quadruple == (0, 2, 2, 0)

    def test_not_iterable(self):
        with pytest.raises(ValueError):
            Cobigrassmannian(0, 1, 1, 0).iterate()

    def test_strictly_decreases(self):
        for n in range(2, 8):
            for c in all_cobigrassmannians(n):
                if not c.iterable:
                    continue
                lower, upper = c.iterate().realize(), c.realize()
                assert lower != upper
                assert bruhat_leq(lower, upper)


class TestComparison:
    def test_identity_below_everything(self):
        for c in all_cobigrassmannians(5):
            assert leq_cobigrassmannian(Perm.identity(5), c)

    def test_counting_example(self):
        assert not leq_cobigrassmannian(
            Perm((3, 4, 1, 2)), Cobigrassmannian(1, 1, 1, 1)
        )

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            leq_cobigrassmannian(Perm((1, 2)), Cobigrassmannian(1, 1, 1, 1))

    def test_agrees_with_bruhat(self, s5):
        for c in all_cobigrassmannians(5):
            r = c.realize()
            for w in s5:
                assert leq_cobigrassmannian(w, c) == bruhat_leq(w, r)


class TestCoessential:
    def test_identity(self):
        # the scan formula admits the staircase corners (p, p-1); they carry
        # the non-iterable corectrices that pin the identity down
        assert coessential_set(Perm.identity(4)) == [(2, 1), (3, 2), (4, 3)]

    def test_longest_element_empty(self):
        assert coessential_set(Perm((2, 1))) == []
        assert coessential_set(Perm((4, 3, 2, 1))) == []

    def test_w10(self):
        pts = coessential_set(W10)
        assert [pt for pt in pts if pt[0] == 5] == [(5, 2), (5, 5), (5, 7)]
        assert {(5, 5), (5, 7)} <= set(pts)


class TestCorectrices:
    def test_matches_minimal_elements(self, s5):
        for n in range(2, 5):
            from itertools import permutations

            for word in permutations(range(1, n + 1)):
                w = Perm(word)
                mine = sorted(c.quadruple for c in corectrices(w))
                brute = sorted(
                    c.quadruple for c in minimal_cobigrassmannians_above(w)
                )
                assert mine == brute, w
        for w in s5:
            mine = sorted(c.quadruple for c in corectrices(w))
            brute = sorted(c.quadruple for c in minimal_cobigrassmannians_above(w))
            assert mine == brute, w

    def test_pairwise_incomparable(self, s5):
        for w in s5:
            cs = [c.realize() for c in corectrices(w)]
            for i, a in enumerate(cs):
                for j, b in enumerate(cs):
                    if i != j:
                        assert not bruhat_leq(a, b)

    def test_upper_set_embedding(self, s5):
        # v <= w iff every quadruple above w is above v
        quads = all_cobigrassmannians(5)
        upper = {
            w: {c.quadruple for c in quads if leq_cobigrassmannian(w, c)}
            for w in s5
        }
        for v in s5:
            for w in s5:
                assert bruhat_leq(v, w) == (upper[w] <= upper[v])

    def test_reinforcement_correspondence(self, s6):
        # each corectrix bounds w, and its iterate does not
        for w in s6:
            for pt in coessential_set(w):
                c = corectrix_at(w, pt)
                assert leq_cobigrassmannian(w, c)
                if c.iterable:
                    assert not leq_cobigrassmannian(w, c.iterate())
