import random
from fractions import Fraction

import pytest

from ultraballean import build_tree, check_tree, random_space, random_tree, validate


@pytest.mark.parametrize("leaves", [1, 2, 5, 12])
def test_random_tree_is_admissible(leaves):
    rng = random.Random(leaves)
    for _ in range(50):
        t = random_tree(leaves, labels=["1", "2", "7/2"], rng=rng)
        assert len(t.leaves()) == leaves
        assert check_tree(t, 0).passed
        assert set(t.labels) <= {Fraction(0), Fraction(1), Fraction(2), Fraction(7, 2)}


def test_random_space_seeded():
    a = random_space(8, seed=3)
    assert a == random_space(8, seed=3)
    assert validate(a).is_ultrametric
    assert sorted(a.points) == sorted(f"p{i}" for i in range(8))


def test_shapes_vary():
    depths = set()
    for seed in range(60):
        t = build_tree(random_space(10, seed=seed))
        depths.add(max(t.depth(v) for v in range(len(t))))
    assert len(depths) >= 3


@pytest.mark.parametrize("labels", [[], ["0", "1"]])
def test_bad_labels(labels):
    with pytest.raises(ValueError):
        random_tree(3, labels=labels)
