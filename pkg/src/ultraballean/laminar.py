"""Set families that are balleans of some ultrametric.

A family on a finite set is the ballean of an ultrametric exactly when it
contains the whole set and every singleton, and any two intersecting
members are nested.  Such a family is realized by the "size of the smallest
member containing both points, minus one" ultrametric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ballean import enumerate_balls
from .core import Space
from .errors import InvalidFamilyError, SchemaError


@dataclass(frozen=True)
class SetFamily:
    universe: tuple[str, ...]
    family: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        universe = tuple(str(p) for p in self.universe)
        if not universe:
            raise SchemaError("universe is empty")
        if len(set(universe)) != len(universe):
            raise SchemaError("duplicate universe points")
        n = len(universe)
        family = []
        for member in self.family:
            m = tuple(sorted(set(member)))
            if not m:
                raise SchemaError("family members must be nonempty")
            if any(not isinstance(i, int) or not 0 <= i < n for i in m):
                raise SchemaError(f"member {list(member)!r} leaves the universe")
            family.append(m)
        if len(set(family)) != len(family):
            raise SchemaError("duplicate family members")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "family", tuple(family))

    @classmethod
    def from_names(cls, universe, members) -> "SetFamily":
        pos = {p: i for i, p in enumerate(universe)}
        try:
            fam = [[pos[p] for p in m] for m in members]
        except KeyError as e:
            raise SchemaError(f"unknown point {e.args[0]!r} in family") from None
        return cls(tuple(universe), tuple(tuple(m) for m in fam))

    def as_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.family)

    def names(self, member) -> list[str]:
        return [self.universe[i] for i in member]


@dataclass(frozen=True)
class ValidationReport:
    missing_singletons: tuple[tuple[int, ...], ...] = ()
    missing_universe: bool = False
    crossing_pair: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    @property
    def is_ballean(self) -> bool:
        return not self.missing_singletons and not self.missing_universe and self.crossing_pair is None


def validate_family(f: SetFamily) -> ValidationReport:
    """Report every missing singleton, a missing universe, and the first
    crossing pair in sorted order of the members.
    """
    have = f.as_set()
    n = len(f.universe)
    missing = tuple((i,) for i in range(n) if (i,) not in have)
    no_universe = tuple(range(n)) not in have
    ordered = sorted(f.family)
    sets = [frozenset(m) for m in ordered]
    crossing = None
    for a in range(len(sets)):
        sa = sets[a]
        for b in range(a + 1, len(sets)):
            sb = sets[b]
            if sa & sb and not (sa <= sb or sb <= sa):
                crossing = (ordered[a], ordered[b])
                break
        if crossing:
            break
    return ValidationReport(missing, no_universe, crossing)


def reconstruct(f: SetFamily) -> Space:
    """Realize ``f`` as a ballean: ``d(x, y) = |smallest member with x, y| - 1``."""
    report = validate_family(f)
    if not report.is_ballean:
        witness = None
        if report.crossing_pair:
            witness = [f.names(m) for m in report.crossing_pair]
        raise InvalidFamilyError("family is not a ballean", report=report, witness=witness)
    n = len(f.universe)
    rows = [[Fraction(0)] * n for _ in range(n)]
    size = [[n] * n for _ in range(n)]
    for m in f.family:
        k = len(m)
        for a, x in enumerate(m):
            for y in m[a + 1 :]:
                if k < size[x][y]:
                    size[x][y] = k
    for x in range(n):
        for y in range(x + 1, n):
            rows[x][y] = rows[y][x] = Fraction(size[x][y] - 1)
    return Space.from_rows(f.universe, rows)


def family_of(space: Space) -> SetFamily:
    return SetFamily(space.points, tuple(b.members for b in enumerate_balls(space)))
