import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import equilateral, example38
from oracles import brute_balls, brute_is_ultrametric
from ultraballean import (
    Ball,
    Space,
    closed_ball,
    diam,
    format_dist,
    parse_dist,
    random_space,
    smallest_enclosing_ball,
    validate,
)
from ultraballean.errors import (
    EmptySubsetError,
    InvalidSpaceError,
    NotUltrametricError,
)


@pytest.mark.parametrize("text,value", [
    ("2", Fraction(2)), ("0.5", Fraction(1, 2)), ("1/3", Fraction(1, 3)),
    (" 0.125 ", Fraction(1, 8)), (3, Fraction(3)),
])
def test_parse_dist(text, value):
    assert parse_dist(text) == value


@pytest.mark.parametrize("bad", [0.5, "-1", "abc", None, True])
def test_parse_dist_rejects(bad):
    with pytest.raises(InvalidSpaceError):
        parse_dist(bad)


@given(st.fractions(min_value=0, max_value=10**6))
def test_format_roundtrip(q):
    assert parse_dist(format_dist(q)) == q


def test_format_shapes():
    assert format_dist(Fraction(2)) == "2"
    assert format_dist(Fraction(1, 4)) == "0.25"
    assert format_dist(Fraction(1, 3)) == "1/3"
    assert format_dist(Fraction(21, 20)) == "1.05"


class TestSpaceStructure:
    def test_asymmetric(self):
        with pytest.raises(InvalidSpaceError):
            Space.from_rows("ab", [["0", "1"], ["2", "0"]])

    def test_zero_between_distinct(self):
        with pytest.raises(InvalidSpaceError):
            Space.from_rows("ab", [["0", "0"], ["0", "0"]])

    def test_nonzero_diagonal(self):
        with pytest.raises(InvalidSpaceError):
            Space.from_rows("ab", [["1", "1"], ["1", "0"]])

    def test_duplicate_points(self):
        with pytest.raises(InvalidSpaceError):
            Space.from_rows("aa", [["0", "1"], ["1", "0"]])

    def test_ragged(self):
        with pytest.raises(InvalidSpaceError):
            Space.from_rows("ab", [["0", "1"], ["1"]])

    def test_one_point_is_legal(self):
        s = Space.from_rows(["a"], [["0"]])
        assert validate(s).is_ultrametric
        assert diam(s, [0]) == 0


class TestValidate:
    def test_equilateral(self):
        rep = validate(equilateral(3))
        assert rep.is_metric and rep.is_ultrametric and rep.witness is None

    def test_metric_not_ultrametric(self):
        s = Space.from_rows("abc", [["0", "1", "2"], ["1", "0", "1"], ["2", "1", "0"]])
        rep = validate(s)
        assert rep.is_metric and not rep.is_ultrametric
        assert rep.witness == (0, 2, 1)

    def test_not_metric(self):
        s = Space.from_rows("abc", [["0", "1", "3"], ["1", "0", "1"], ["3", "1", "0"]])
        rep = validate(s)
        assert not rep.is_metric and not rep.is_ultrametric
        x, y, z = rep.witness
        m = s.matrix
        assert m[x][y] > m[x][z] + m[z][y]

    def test_example38(self, ex38):
        assert validate(ex38).is_ultrametric

    def test_agrees_with_brute_force(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(1, 7)
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    rows[i][j] = rows[j][i] = Fraction(rng.choice([1, 2, 3, 4]))
            s = Space.from_rows([str(i) for i in range(n)], rows)
            rep = validate(s)
            assert rep.is_ultrametric == brute_is_ultrametric(s)
            if not rep.is_ultrametric and rep.is_metric:
                x, y, z = rep.witness
                assert s.matrix[x][y] > max(s.matrix[x][z], s.matrix[z][y])


class TestBalls:
    def test_diam(self, ex38):
        assert diam(ex38, [0]) == 0
        assert diam(ex38, [0, 2]) == 1
        assert diam(ex38, range(4)) == 2
        with pytest.raises(EmptySubsetError):
            diam(ex38, [])

    def test_closed_ball(self, ex38):
        assert closed_ball(ex38, 0, 0).members == (0,)
        assert closed_ball(ex38, 0, "1").members == (0, 2)
        assert closed_ball(ex38, 0, 2).members == (0, 1, 2, 3)
        # radius need not be a realized distance
        assert closed_ball(ex38, 1, "3/2").members == (1, 3)

    def test_ball_identity_is_members(self):
        assert Ball((0, 1), Fraction(1)) == Ball((0, 1), Fraction(5))
        assert len({Ball((0,)), Ball((0,))}) == 1

    def test_closed_ball_needs_ultrametric(self):
        s = Space.from_rows("abc", [["0", "1", "2"], ["1", "0", "1"], ["2", "1", "0"]])
        with pytest.raises(NotUltrametricError):
            closed_ball(s, 0, 1)

    def test_smallest_enclosing(self, ex38):
        assert smallest_enclosing_ball(ex38, [2]).members == (2,)
        assert smallest_enclosing_ball(ex38, [0, 1]).members == (0, 1, 2, 3)
        assert smallest_enclosing_ball(ex38, [1, 3]).members == (1, 3)
        # a pair at the diameter spans everything
        s = equilateral(5)
        assert smallest_enclosing_ball(s, [0, 4]).members == tuple(range(5))


ultrametric_spaces = st.builds(
    lambda n, seed: random_space(n, seed=seed),
    st.integers(1, 9), st.integers(0, 2**32),
)


@settings(max_examples=60, deadline=None)
@given(ultrametric_spaces)
def test_center_independence_and_radius(space):
    n = len(space)
    for c in range(n):
        for r in space.distance_values:
            b = closed_ball(space, c, r)
            for c2 in b.members:
                assert closed_ball(space, c2, b.diameter) == b
                assert max(space.d(x, c2) for x in b.members) == b.diameter


@settings(max_examples=60, deadline=None)
@given(ultrametric_spaces, st.randoms(use_true_random=False))
def test_eccentricity_equals_diameter(space, rnd):
    n = len(space)
    subset = rnd.sample(range(n), rnd.randint(1, n))
    for a in subset:
        assert max(space.d(x, a) for x in subset) == diam(space, subset)
    b = smallest_enclosing_ball(space, subset)
    assert set(subset) <= set(b.members)
    for c in range(n):
        for r in space.distance_values:
            other = closed_ball(space, c, r)
            if set(subset) <= set(other.members):
                assert set(b.members) <= set(other.members)


@settings(max_examples=60, deadline=None)
@given(ultrametric_spaces)
def test_chain_and_equality(space):
    balls = [Ball(tuple(sorted(b)), diam(space, b)) for b in brute_balls(space)]
    for a, b in itertools.combinations(balls, 2):
        if a.intersects(b):
            assert a.issubset(b) or b.issubset(a)
            assert (a == b) == (a.diameter == b.diameter)


def test_chain_property_characterizes_ultrametric():
    rng = random.Random(11)
    seen = {True: 0, False: 0}
    for _ in range(300):
        n = rng.randint(2, 6)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                rows[i][j] = rows[j][i] = Fraction(rng.choice([2, 3, 4]))
        s = Space.from_rows([str(i) for i in range(n)], rows)
        balls = brute_balls(s)
        chain = all(not (a & b) or a <= b or b <= a for a in balls for b in balls)
        assert validate(s).is_ultrametric == chain
        seen[chain] += 1
    assert seen[True] and seen[False]
