"""Reproducible random labeled trees and ultrametric spaces.

Trees are grown bottom-up: walking up an increasing run of labels, random
groups of the current clusters merge under a new vertex carrying the
current label.  Every merge joins at least two clusters and labels increase
toward the root, so each tree is the representing tree of some space.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .core import Space, parse_dist
from .tree import RootedTree, space_from_tree

DEFAULT_LABELS = ("1/3", "1/2", "1", "3/2", "2", "5/2", "3", "4")


def _labels(labels) -> list[Fraction]:
    vals = sorted({parse_dist(v) for v in labels})
    if not vals or vals[0] <= 0:
        raise ValueError("labels must be positive")
    return vals


def random_tree(
    leaves: int,
    labels: Sequence = DEFAULT_LABELS,
    rng: Optional[random.Random] = None,
    names: Optional[Sequence[str]] = None,
) -> RootedTree:
    """A random labeled tree on ``leaves`` leaves with internal labels drawn
    from ``labels``; vertices are numbered in preorder.
    """
    if leaves < 1:
        raise ValueError("need at least one leaf")
    rng = rng or random.Random()
    vals = _labels(labels)
    names = list(names) if names is not None else [f"p{i}" for i in range(leaves)]
    if len(names) != leaves:
        raise ValueError("one name per leaf required")

    # nodes: (label, children-as-node-refs, name)
    clusters = [(Fraction(0), (), nm) for nm in names]
    rng.shuffle(clusters)
    levels = sorted(rng.sample(vals, rng.randint(1, len(vals))))
    for i, lab in enumerate(levels):
        if len(clusters) == 1:
            break
        if i == len(levels) - 1:
            clusters = [(lab, tuple(clusters), None)]
            break
        rng.shuffle(clusters)
        merged = []
        rest = clusters
        while rest:
            k = min(len(rest), rng.randint(1, max(2, len(rest) // 2)))
            group, rest = rest[:k], rest[k:]
            merged.append((lab, tuple(group), None) if len(group) > 1 else group[0])
        clusters = merged
    (root,) = clusters

    children: list[list[int]] = []
    labs: list[Fraction] = []
    tags: list = []
    stack = [(root, None)]
    while stack:
        (lab, kids, name), parent = stack.pop()
        v = len(children)
        children.append([])
        labs.append(lab)
        tags.append((name,) if name is not None else None)
        if parent is not None:
            children[parent].append(v)
        for k in reversed(kids):
            stack.append((k, v))
    return RootedTree(tuple(tuple(c) for c in children), tuple(labs), tuple(tags))


def random_space(
    leaves: int,
    labels: Sequence = DEFAULT_LABELS,
    seed: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> Space:
    """A random ultrametric space on ``leaves`` points named ``p0, p1, ...``.

    Points are listed in a random order, not in tree order.
    """
    rng = rng or random.Random(seed)
    space = space_from_tree(random_tree(leaves, labels, rng))
    order = list(range(len(space)))
    rng.shuffle(order)
    return space.permuted(order)
