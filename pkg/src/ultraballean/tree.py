"""Representing trees of finite ultrametric spaces.

The tree of a space has the whole space as its root, labeled with its
diameter; the children of a vertex are the parts of its diametrical graph,
and the recursion stops at singletons (label 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .core import Space, _check_subset, diam, require_ultrametric
from .errors import (
    MalformedTreeError,
    NotRepresentableError,
    PartitionUndefinedError,
    UnknownPointError,
    UnlabeledTreeError,
)


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree stored as child lists indexed by vertex id.

    ``labels`` is optional (``None`` for a plain rooted tree).  ``tags`` holds
    an optional tuple of strings per vertex; for trees built from a space it
    is the vertex's ball as point names.
    """

    children: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[Fraction, ...]] = None
    tags: Optional[tuple[Optional[tuple[str, ...]], ...]] = None
    root: int = 0

    def __post_init__(self):
        children = tuple(tuple(c) for c in self.children)
        object.__setattr__(self, "children", children)
        n = len(children)
        if n == 0:
            raise MalformedTreeError("a tree needs at least one vertex")
        if not 0 <= self.root < n:
            raise MalformedTreeError("root out of range")
        if self.labels is not None:
            labels = tuple(Fraction(v) for v in self.labels)
            if len(labels) != n:
                raise MalformedTreeError("one label per vertex required")
            if any(v < 0 for v in labels):
                raise MalformedTreeError("labels must be nonnegative")
            object.__setattr__(self, "labels", labels)
        if self.tags is not None:
            tags = tuple(None if t is None else tuple(t) for t in self.tags)
            if len(tags) != n:
                raise MalformedTreeError("one tag per vertex required")
            object.__setattr__(self, "tags", tags)
        parent = [-1] * n
        for u, kids in enumerate(children):
            for v in kids:
                if not 0 <= v < n or v == self.root or parent[v] != -1:
                    raise MalformedTreeError(f"vertex {v} has a bad parent link", witness=v)
                parent[v] = u
        seen = 0
        stack = [self.root]
        while stack:
            u = stack.pop()
            seen += 1
            stack.extend(children[u])
        if seen != n:
            raise MalformedTreeError("tree is not connected from its root")
        object.__setattr__(self, "_parent", tuple(parent))

    def __len__(self) -> int:
        return len(self.children)

    @property
    def parent(self) -> tuple[int, ...]:
        return self._parent

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def out_degree(self, v: int) -> int:
        return len(self.children[v])

    def preorder(self) -> list[int]:
        out, stack = [], [self.root]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children[u]))
        return out

    def leaves(self) -> list[int]:
        """Leaves in the order points are assigned by :func:`space_from_tree`."""
        return [v for v in self.preorder() if not self.children[v]]

    def internal(self) -> list[int]:
        return [v for v in self.preorder() if self.children[v]]

    def ancestors(self, v: int) -> list[int]:
        """``v`` and its ancestors, bottom-up."""
        out = [v]
        while self._parent[v] != -1:
            v = self._parent[v]
            out.append(v)
        return out

    def depth(self, v: int) -> int:
        return len(self.ancestors(v)) - 1

    def leaf_name(self, v: int) -> str:
        tag = self.tags[v] if self.tags is not None else None
        if tag is not None and len(tag) == 1:
            return tag[0]
        return f"v{v}"

    def plain(self) -> "RootedTree":
        """Drop any subclass extras, keeping children/labels/tags/root."""
        return RootedTree(self.children, self.labels, self.tags, self.root)

    def unlabeled(self) -> "RootedTree":
        return RootedTree(self.children, None, self.tags, self.root)


@dataclass(frozen=True)
class RepTree(RootedTree):
    """The representing tree of ``space``; vertex ``v`` is the ball ``balls[v]``."""

    space: Space = field(default=None, compare=False, repr=False)
    balls: tuple[tuple[int, ...], ...] = ()

    @cached_property
    def leaf_of(self) -> dict[int, int]:
        return {b[0]: v for v, b in enumerate(self.balls) if len(b) == 1}

    def leaves(self) -> list[int]:
        # point order of the source space, so space_from_tree inverts build_tree
        return [self.leaf_of[i] for i in range(len(self.space))]

    def vertex_of(self, members) -> int:
        members = tuple(sorted(members))
        for v, b in enumerate(self.balls):
            if b == members:
                return v
        raise UnknownPointError("no vertex with that ball", witness=list(members))


@dataclass(frozen=True)
class Partition:
    parts: tuple[tuple[int, ...], ...]


def _components_below(space: Space, idx: tuple[int, ...], bound: Fraction):
    """Connected components of ``idx`` under edges with ``d < bound``."""
    m = space.matrix
    left = set(idx)
    parts = []
    for start in idx:
        if start not in left:
            continue
        left.discard(start)
        comp, stack = [start], [start]
        while stack:
            u = stack.pop()
            row = m[u]
            near = [v for v in left if row[v] < bound]
            for v in near:
                left.discard(v)
            comp.extend(near)
            stack.extend(near)
        parts.append(tuple(sorted(comp)))
    return tuple(parts)


def diametrical_partition(space: Space, subset=None) -> Partition:
    """Split ``subset`` into the parts of its diametrical graph.

    Points in different parts are at distance exactly ``diam(subset)``; within
    a part all distances are smaller.  Parts are ordered by smallest index.
    """
    require_ultrametric(space)
    idx = tuple(range(len(space))) if subset is None else _check_subset(space, subset)
    if len(idx) < 2:
        raise PartitionUndefinedError("need at least two points to partition")
    return Partition(_components_below(space, idx, diam(space, idx)))


def build_tree(space: Space) -> RepTree:
    require_ultrametric(space)
    children: list[list[int]] = []
    labels: list[Fraction] = []
    balls: list[tuple[int, ...]] = []

    def grow(idx: tuple[int, ...]) -> int:
        v = len(balls)
        balls.append(idx)
        children.append([])
        if len(idx) == 1:
            labels.append(Fraction(0))
            return v
        top = diam(space, idx)
        labels.append(top)
        children[v] = [grow(part) for part in _components_below(space, idx, top)]
        return v

    grow(tuple(range(len(space))))
    return RepTree(
        children=tuple(tuple(c) for c in children),
        labels=tuple(labels),
        tags=tuple(tuple(space.points[i] for i in b) for b in balls),
        space=space,
        balls=tuple(balls),
    )


def path_max_label(tree: RootedTree, u: int, v: int) -> Fraction:
    """Largest label on the tree path joining vertices ``u`` and ``v``."""
    if tree.labels is None:
        raise UnlabeledTreeError("labeled mode on an unlabeled tree")
    up = tree.ancestors(u)
    on_u = set(up)
    path = []
    for w in tree.ancestors(v):
        path.append(w)
        if w in on_u:
            path.extend(up[: up.index(w)])
            break
    return max(tree.labels[w] for w in path)


def tree_distance(tree: RepTree, x: int, y: int) -> Fraction:
    for p in (x, y):
        if p not in tree.leaf_of:
            raise UnknownPointError(f"unknown point index {p!r}", witness=p)
    if x == y:
        return Fraction(0)
    return path_max_label(tree, tree.leaf_of[x], tree.leaf_of[y])


@dataclass(frozen=True)
class TreeCheck:
    """Outcome of :func:`check_tree`; ``violations`` holds ``(vertex, rule, detail)``."""

    n: int
    violations: tuple[tuple[int, str, str], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations


def check_tree(tree: RootedTree, n: int = 0) -> TreeCheck:
    """Check the realizability conditions for the ``n``-th iterated ballean.

    * ``degree``: out-degree is not in ``{1, ..., n + 1}``;
    * ``label``: labels strictly decrease toward the leaves and are 0 exactly
      at leaves (skipped for unlabeled trees);
    * ``leaf-children``: every internal vertex has at least ``n`` leaf children.

    With ``n = 0`` this is the condition for being the tree of some finite
    ultrametric space.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    bad = []
    labels = tree.labels
    for u in tree.preorder():
        kids = tree.children[u]
        k = len(kids)
        if 1 <= k <= n + 1:
            bad.append((u, "degree", f"out-degree {k} in 1..{n + 1}"))
        if labels is not None:
            if (k == 0) != (labels[u] == 0):
                what = "leaf with nonzero label" if k == 0 else "internal vertex labeled 0"
                bad.append((u, "label", what))
            for v in kids:
                if not labels[v] < labels[u]:
                    bad.append((u, "label", f"child {v} label not below parent"))
        if k:
            leafy = sum(1 for v in kids if not tree.children[v])
            if leafy < n:
                bad.append((u, "leaf-children", f"{leafy} leaf children, need {n}"))
    return TreeCheck(n, tuple(bad))


def space_from_tree(tree: RootedTree) -> Space:
    """The ultrametric on the leaves: ``d(x, y)`` is the least label among the
    common ancestors of ``x`` and ``y``.
    """
    if tree.labels is None:
        raise UnlabeledTreeError("labeled mode on an unlabeled tree")
    report = check_tree(tree, 0)
    if not report.passed:
        v, rule, detail = report.violations[0]
        raise NotRepresentableError(f"vertex {v}: {detail}", witness=v)
    leaves = tree.leaves()
    ancestors = [set(tree.ancestors(v)) for v in leaves]
    labels = tree.labels
    rows = []
    for a, sa in enumerate(ancestors):
        row = []
        for b, sb in enumerate(ancestors):
            row.append(Fraction(0) if a == b else min(labels[w] for w in sa & sb))
        rows.append(row)
    return Space.from_rows([tree.leaf_name(v) for v in leaves], rows)


def leaf_sets(tree: RootedTree) -> list[frozenset[str]]:
    """For each vertex, the names of the leaves at or below it."""
    out: list[frozenset[str]] = [frozenset()] * len(tree)
    for v in reversed(tree.preorder()):
        kids = tree.children[v]
        if kids:
            out[v] = frozenset().union(*(out[c] for c in kids))
        else:
            out[v] = frozenset([tree.leaf_name(v)])
    return out
