"""JSON and DOT documents for spaces, trees, families and balleans.

Distances are always strings (``"2"``, ``"0.5"``, ``"1/3"``) so nothing
passes through a binary float.
"""

from __future__ import annotations

import json
from typing import Any

from .ballean import BalleanSpace
from .core import Space, format_dist, parse_dist
from .errors import InvalidSpaceError, SchemaError
from .laminar import SetFamily
from .tree import RootedTree


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _dist(value) -> Any:
    _expect(isinstance(value, (str, int)) and not isinstance(value, bool),
            f"distance must be a string, got {value!r}")
    try:
        return parse_dist(value)
    except InvalidSpaceError as e:
        raise SchemaError(e.message) from None


def space_to_json(space: Space) -> dict:
    return {
        "points": list(space.points),
        "matrix": [[format_dist(v) for v in row] for row in space.matrix],
    }


def space_from_json(doc) -> Space:
    _expect(isinstance(doc, dict), "space document must be an object")
    _expect(set(doc) >= {"points", "matrix"}, "space needs 'points' and 'matrix'")
    points, matrix = doc["points"], doc["matrix"]
    _expect(isinstance(points, list) and all(isinstance(p, str) for p in points),
            "'points' must be a list of strings")
    _expect(isinstance(matrix, list) and all(isinstance(r, list) for r in matrix),
            "'matrix' must be a list of rows")
    return Space.from_rows(points, [[_dist(v) for v in row] for row in matrix])


def tree_to_json(tree: RootedTree) -> dict:
    docs: list = [None] * len(tree)
    for v in reversed(tree.preorder()):
        node: dict = {}
        if tree.tags is not None and tree.tags[v] is not None:
            node["ball"] = list(tree.tags[v])
        if tree.labels is not None:
            node["label"] = format_dist(tree.labels[v])
        node["children"] = [docs[c] for c in tree.children[v]]
        docs[v] = node
    return docs[tree.root]


def tree_from_json(doc) -> RootedTree:
    """Parse a recursive tree document; vertices are numbered in preorder."""
    _expect(isinstance(doc, dict), "tree document must be an object")
    children: list[list[int]] = []
    labels: list = []
    tags: list = []
    stack = [(doc, None)]
    while stack:
        node, parent = stack.pop()
        _expect(isinstance(node, dict), "tree node must be an object")
        kids = node.get("children", [])
        _expect(isinstance(kids, list), "'children' must be a list")
        v = len(children)
        children.append([])
        if parent is not None:
            children[parent].append(v)
        labels.append(_dist(node["label"]) if node.get("label") is not None else None)
        ball = node.get("ball")
        _expect(ball is None or (isinstance(ball, list) and all(isinstance(p, str) for p in ball)),
                "'ball' must be a list of strings")
        tags.append(tuple(ball) if ball is not None else None)
        for k in reversed(kids):
            stack.append((k, v))
    have = [lab is not None for lab in labels]
    _expect(all(have) or not any(have), "either every vertex has a label or none does")
    return RootedTree(
        tuple(tuple(c) for c in children),
        tuple(labels) if all(have) else None,
        tuple(tags) if any(t is not None for t in tags) else None,
    )


def family_to_json(f: SetFamily) -> dict:
    return {"points": list(f.universe), "family": [f.names(m) for m in f.family]}


def family_from_json(doc) -> SetFamily:
    _expect(isinstance(doc, dict), "family document must be an object")
    _expect(set(doc) >= {"points", "family"}, "family needs 'points' and 'family'")
    points, fam = doc["points"], doc["family"]
    _expect(isinstance(points, list) and all(isinstance(p, str) for p in points),
            "'points' must be a list of strings")
    _expect(isinstance(fam, list) and all(isinstance(m, list) for m in fam),
            "'family' must be a list of lists")
    for m in fam:
        _expect(all(isinstance(p, str) for p in m), "family members list point names")
        _expect(len(set(m)) == len(m), "repeated point inside a family member")
    return SetFamily.from_names(points, fam)


def ballean_to_json(bs: BalleanSpace) -> dict:
    h = bs.hspace
    return {
        "base": space_to_json(bs.base),
        "balls": [
            {"id": bid, "members": bs.base.names(b.members), "diameter": format_dist(b.diameter)}
            for bid, b in zip(h.points, bs.balls)
        ],
        "hmatrix": [[format_dist(v) for v in row] for row in h.matrix],
    }


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def tree_to_dot(tree: RootedTree, name: str = "T") -> str:
    """DOT digraph, one node per vertex captioned ``{members} : label``."""
    lines = [f"digraph {name} {{"]
    for v in tree.preorder():
        tag = tree.tags[v] if tree.tags is not None else None
        cap = "{" + ",".join(tag) + "}" if tag is not None else f"v{v}"
        if tree.labels is not None:
            cap += " : " + format_dist(tree.labels[v])
        lines.append(f"  n{v} [label={_dot_quote(cap)}];")
    for v in tree.preorder():
        for c in tree.children[v]:
            lines.append(f"  n{v} -> n{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
