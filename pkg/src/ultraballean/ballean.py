"""Balleans, the Hausdorff ultrametric on them, and their iterates.

The balls of a finite ultrametric space are exactly the vertices of its
representing tree, and the Hausdorff distance between two distinct balls is
the diameter of their union.  Iterating "take all balls, measure them with
the Hausdorff distance" grows the tree by one leaf under every internal
vertex per step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .core import Ball, Space, _check_subset, closed_ball, diam, require_ultrametric
from .errors import (
    DepthLimitError,
    EmptySubsetError,
    EqualBallsError,
    NotABallError,
    PartitionUndefinedError,
)
from .tree import RepTree, RootedTree, build_tree, diametrical_partition

MAX_DEPTH = 6

def _plain(name: str) -> bool:
    """True if ``name`` splits unambiguously at top-level commas."""
    if not name or '"' in name or "\\" in name:
        return False
    depth = 0
    for ch in name:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return False
        elif ch == "," and depth == 0:
            return False
    return depth == 0


def ball_id(space: Space, members) -> str:
    """Name a ball by its member list, e.g. ``{x1,x3}``.

    Names nest under iteration (``{{x1,x3},{x1},{x3}}``).  A point name that
    would make the top-level comma split ambiguous is JSON-quoted, so
    distinct balls never share a name.
    """
    parts = []
    for i in members:
        p = space.points[i]
        parts.append(p if _plain(p) else json.dumps(p))
    return "{" + ",".join(parts) + "}"


def enumerate_balls(space: Space) -> list[Ball]:
    """All closed balls, in preorder of the representing tree."""
    tree = build_tree(space)
    return [Ball(b, lab) for b, lab in zip(tree.balls, tree.labels)]


def _as_members(space: Space, s) -> tuple[int, ...]:
    try:
        return _check_subset(space, s)
    except EmptySubsetError:
        raise EmptySubsetError("Hausdorff distance needs nonempty sets") from None


def hausdorff(space: Space, a, b) -> Fraction:
    """Hausdorff distance between two nonempty point sets, by definition."""
    a = _as_members(space, a)
    b = _as_members(space, b)
    m = space.matrix
    a_to_b = max(min(m[p][q] for q in b) for p in a)
    b_to_a = max(min(m[p][q] for p in a) for q in b)
    return max(a_to_b, b_to_a)


def _require_ball(space: Space, members: tuple[int, ...]) -> None:
    if closed_ball(space, members[0], diam(space, members)).members != members:
        raise NotABallError("set is not a ball", witness=space.names(members))


def hausdorff_fast(space: Space, a, b) -> Fraction:
    """Hausdorff distance between two distinct balls as ``diam(a | b)``."""
    require_ultrametric(space)
    a = _as_members(space, a)
    b = _as_members(space, b)
    if a == b:
        raise EqualBallsError("balls are equal", witness=space.names(a))
    _require_ball(space, a)
    _require_ball(space, b)
    return diam(space, set(a) | set(b))


@dataclass(frozen=True)
class BalleanSpace:
    base: Space
    balls: tuple[Ball, ...]
    hspace: Space

    @property
    def ids(self) -> tuple[str, ...]:
        return self.hspace.points


def _ballean(space: Space, tree: RepTree) -> BalleanSpace:
    balls = tuple(Ball(b, lab) for b, lab in zip(tree.balls, tree.labels))
    n = len(balls)
    # d_H of distinct balls is the label of their deepest common ancestor
    anc = [tree.ancestors(v) for v in range(n)]
    anc_sets = [set(a) for a in anc]
    labels = tree.labels
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            top = next(w for w in anc[j] if w in anc_sets[i])
            rows[i][j] = rows[j][i] = labels[top]
    ids = [ball_id(space, b.members) for b in balls]
    return BalleanSpace(space, balls, Space.from_rows(ids, rows))


def ballean_space(space: Space) -> BalleanSpace:
    return _ballean(space, build_tree(space))


def iterate_ballean(space: Space, n: int, limit: int = MAX_DEPTH) -> Space:
    """The ``n``-th iterated ballean; ``n = 0`` returns ``space`` itself."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise DepthLimitError(f"iteration depth {n} exceeds limit {limit}", witness=n)
    require_ultrametric(space)
    for _ in range(n):
        space = ballean_space(space).hspace
    return space


def add_leaf_transform(tree: RootedTree) -> RootedTree:
    """Attach one fresh leaf to every internal vertex; the result is unlabeled.

    Vertices are renumbered in preorder with each fresh leaf placed before the
    original children.  A fresh leaf under a vertex tagged ``B`` is tagged
    ``{B}``.
    """
    children: list[list[int]] = []
    tags: list = []

    def tag_of(v):
        return tree.tags[v] if tree.tags is not None else None

    stack = [(tree.root, None, False)]
    while stack:
        v, parent, fresh = stack.pop()
        new = len(children)
        children.append([])
        if parent is not None:
            children[parent].append(new)
        if fresh:
            t = tag_of(v)
            tags.append(None if t is None else ("{" + ",".join(t) + "}",))
            continue
        tags.append(tag_of(v))
        kids = tree.children[v]
        if kids:
            for c in reversed(kids):
                stack.append((c, new, False))
            stack.append((v, new, True))
    has_tags = tree.tags is not None
    return RootedTree(tuple(tuple(c) for c in children), None, tuple(tags) if has_tags else None)


@dataclass(frozen=True)
class DiametricalCheck:
    passed: bool
    parts: tuple[tuple[str, ...], ...]
    expected: tuple[tuple[str, ...], ...]
    diam_preserved: bool


def ballean_diametrical_check(space: Space) -> DiametricalCheck:
    """Compare the diametrical partition of the ballean with the prediction
    ``{X}`` plus the ballean of each part of the base partition.
    """
    require_ultrametric(space)
    if len(space) < 2:
        raise PartitionUndefinedError("need at least two points")
    bs = ballean_space(space)
    h = bs.hspace
    got = diametrical_partition(h).parts
    got_named = {frozenset(h.names(p)) for p in got}

    whole = ball_id(space, range(len(space)))
    expected = [(whole,)]
    for part in diametrical_partition(space).parts:
        sub = space.subspace(part)
        # a ball of a part, mapped back to indices of the full space
        ids = tuple(
            ball_id(space, [part[i] for i in b.members]) for b in enumerate_balls(sub)
        )
        expected.append(ids)
    passed = got_named == {frozenset(e) for e in expected} and len(got) == len(expected)
    same_diam = diam(h, range(len(h))) == diam(space, range(len(space)))
    return DiametricalCheck(
        passed and same_diam,
        tuple(tuple(h.names(p)) for p in got),
        tuple(expected),
        same_diam,
    )
