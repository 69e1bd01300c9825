"""Canonical forms for rooted trees and isometry of ultrametric spaces.

Each vertex is encoded as ``(`` + label + sorted child encodings + ``)``;
the label (a reduced ``p/q`` fraction) is present only in labeled mode.
Vertex names and child order never enter the encoding.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .core import Space, fraction_str, require_ultrametric
from .errors import UnlabeledTreeError
from .tree import RootedTree, build_tree


@dataclass(frozen=True)
class CanonicalForm:
    encoding: str
    labeled: bool

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.encoding.encode()).hexdigest()


def canonical_form(tree: RootedTree, labeled: bool = False) -> CanonicalForm:
    if labeled and tree.labels is None:
        raise UnlabeledTreeError("labeled mode on an unlabeled tree")
    enc: list = [None] * len(tree)
    for v in reversed(tree.preorder()):
        kids = sorted(enc[c] for c in tree.children[v])
        head = fraction_str(tree.labels[v]) if labeled else ""
        enc[v] = "(" + head + "".join(kids) + ")"
    return CanonicalForm(enc[tree.root], labeled)


def is_isomorphic(t1: RootedTree, t2: RootedTree, labeled: bool = False) -> bool:
    return canonical_form(t1, labeled).encoding == canonical_form(t2, labeled).encoding


def is_isometric(s1: Space, s2: Space) -> bool:
    require_ultrametric(s1)
    require_ultrametric(s2)
    if len(s1) != len(s2):
        return False
    return is_isomorphic(build_tree(s1), build_tree(s2), labeled=True)
