"""Finite metric spaces with exact rational distances.

Every distance in the library is a :class:`fractions.Fraction`; nothing is
ever compared with a floating-point tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Optional, Sequence

from .errors import (
    EmptySubsetError,
    InvalidSpaceError,
    NotUltrametricError,
    UnknownPointError,
)

Dist = Fraction


def parse_dist(value) -> Fraction:
    """Parse a distance from a decimal/fraction string or an exact number.

    Binary floats are refused: ``0.1`` cannot be represented exactly.
    """
    if isinstance(value, bool):
        raise InvalidSpaceError(f"not a distance: {value!r}")
    if isinstance(value, float):
        raise InvalidSpaceError(
            f"binary float {value!r} is not exact; pass a decimal string"
        )
    if isinstance(value, (int, Rational)):
        d = Fraction(value)
    elif isinstance(value, str):
        try:
            d = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidSpaceError(f"cannot parse distance {value!r}") from None
    else:
        raise InvalidSpaceError(f"not a distance: {value!r}")
    if d < 0:
        raise InvalidSpaceError(f"negative distance {value!r}")
    return d


def format_dist(d: Fraction) -> str:
    """Shortest exact string: ``"2"``, ``"0.25"`` or ``"1/3"``."""
    d = Fraction(d)
    if d.denominator == 1:
        return str(d.numerator)
    q = d.denominator
    twos = fives = 0
    while q % 2 == 0:
        q //= 2
        twos += 1
    while q % 5 == 0:
        q //= 5
        fives += 1
    if q != 1:
        return f"{d.numerator}/{d.denominator}"
    places = max(twos, fives)
    scaled = d * 10**places
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled.numerator)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def fraction_str(d: Fraction) -> str:
    """Reduced ``p/q`` form; used wherever string equality must mean equality."""
    d = Fraction(d)
    return f"{d.numerator}/{d.denominator}"


@dataclass(frozen=True)
class Space:
    """A finite point set with a symmetric distance matrix.

    The matrix need not be ultrametric; see :func:`validate`.
    """

    points: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        points = tuple(str(p) for p in self.points)
        matrix = tuple(tuple(parse_dist(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "matrix", matrix)
        n = len(points)
        if n == 0:
            raise InvalidSpaceError("a space needs at least one point")
        if len(set(points)) != n:
            dupes = sorted({p for p in points if points.count(p) > 1})
            raise InvalidSpaceError("duplicate point identifiers", witness=dupes)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise InvalidSpaceError(f"matrix must be {n}x{n}")
        for i in range(n):
            if matrix[i][i] != 0:
                raise InvalidSpaceError(
                    "nonzero self-distance", witness=[points[i], points[i]]
                )
            for j in range(i + 1, n):
                if matrix[i][j] != matrix[j][i]:
                    raise InvalidSpaceError(
                        "matrix is not symmetric", witness=[points[i], points[j]]
                    )
                if matrix[i][j] == 0:
                    raise InvalidSpaceError(
                        "distinct points at distance 0",
                        witness=[points[i], points[j]],
                    )

    @classmethod
    def from_rows(cls, points: Sequence[str], rows) -> "Space":
        return cls(tuple(points), tuple(tuple(r) for r in rows))

    def __len__(self) -> int:
        return len(self.points)

    def d(self, i: int, j: int) -> Fraction:
        return self.matrix[i][j]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownPointError(f"unknown point {name!r}", witness=name) from None

    def indices(self, names: Iterable[str]) -> tuple[int, ...]:
        return tuple(sorted({self.index(n) for n in names}))

    def names(self, idx: Iterable[int]) -> list[str]:
        return [self.points[i] for i in idx]

    def subspace(self, idx: Iterable[int]) -> "Space":
        """Restriction of the metric to the given points (kept in index order)."""
        idx = _check_subset(self, idx)
        return Space(
            tuple(self.points[i] for i in idx),
            tuple(tuple(self.matrix[i][j] for j in idx) for i in idx),
        )

    def permuted(self, order: Sequence[int]) -> "Space":
        """Same space with points listed in ``order`` (a permutation of indices)."""
        if sorted(order) != list(range(len(self))):
            raise ValueError("order must be a permutation of the point indices")
        return Space(
            tuple(self.points[i] for i in order),
            tuple(tuple(self.matrix[i][j] for j in order) for i in order),
        )

    def renamed(self, names: Sequence[str]) -> "Space":
        return Space(tuple(names), self.matrix)

    @cached_property
    def report(self) -> "MetricReport":
        return _validate(self)

    @cached_property
    def distance_values(self) -> tuple[Fraction, ...]:
        """Sorted distinct distances, including 0."""
        vals = {v for row in self.matrix for v in row}
        return tuple(sorted(vals))


@dataclass(frozen=True, eq=False)
class Ball:
    """A nonempty point-index set with its diameter.

    Identity is the member set alone: a ball has many (center, radius) names.
    """

    members: tuple[int, ...]
    diameter: Fraction = field(default=Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, Ball):
            return NotImplemented
        return self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self._set

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    def issubset(self, other: "Ball") -> bool:
        return self._set <= other._set

    def intersects(self, other: "Ball") -> bool:
        return not self._set.isdisjoint(other._set)

    @property
    def is_singular(self) -> bool:
        return len(self.members) == 1


@dataclass(frozen=True)
class MetricReport:
    is_metric: bool
    is_ultrametric: bool
    witness: Optional[tuple[int, int, int]] = None


def _check_subset(space: Space, subset) -> tuple[int, ...]:
    if isinstance(subset, Ball):
        subset = subset.members
    idx = tuple(sorted(set(subset)))
    if not idx:
        raise EmptySubsetError("subset is empty")
    n = len(space)
    for i in idx:
        if not isinstance(i, int) or not 0 <= i < n:
            raise UnknownPointError(f"point index {i!r} out of range", witness=i)
    return idx


def _subdominant_matches(space: Space) -> bool:
    """True iff every distance equals the minimax path distance.

    The minimax (single-linkage) distance is the largest ultrametric below
    ``d``; ``d`` is ultrametric exactly when it coincides with it.  Prim's
    algorithm gives the spanning tree and the minimax values in O(n^2).
    """
    m = space.matrix
    n = len(m)
    if n <= 2:
        return True
    best = list(m[0])
    link = [0] * n
    in_tree = [False] * n
    in_tree[0] = True
    order = [0]
    minimax = [[Fraction(0)] * n for _ in range(n)]
    for _ in range(n - 1):
        v = min((i for i in range(n) if not in_tree[i]), key=best.__getitem__)
        p, w = link[v], best[v]
        for u in order:
            val = w if u == p else max(w, minimax[p][u])
            if val != m[v][u]:
                return False
            minimax[v][u] = minimax[u][v] = val
        in_tree[v] = True
        order.append(v)
        row = m[v]
        for i in range(n):
            if not in_tree[i] and row[i] < best[i]:
                best[i] = row[i]
                link[i] = v
    return True


def _find_violation(space: Space, strong: bool) -> Optional[tuple[int, int, int]]:
    m = space.matrix
    n = len(m)
    for x in range(n):
        for y in range(x + 1, n):
            dxy = m[x][y]
            for z in range(n):
                if z == x or z == y:
                    continue
                bound = max(m[x][z], m[z][y]) if strong else m[x][z] + m[z][y]
                if dxy > bound:
                    return (x, y, z)
    return None


def _validate(space: Space) -> MetricReport:
    if _subdominant_matches(space):
        return MetricReport(True, True)
    broken = _find_violation(space, strong=False)
    if broken is not None:
        return MetricReport(False, False, broken)
    return MetricReport(True, False, _find_violation(space, strong=True))


def validate(space: Space) -> MetricReport:
    """Check the triangle and strong triangle inequalities.

    The witness ``(x, y, z)`` satisfies ``d(x, y) > d(x, z) + d(z, y)`` when the
    space is not a metric, otherwise ``d(x, y) > max(d(x, z), d(z, y))`` when
    it is not ultrametric.
    """
    return space.report


def require_ultrametric(space: Space) -> None:
    rep = space.report
    if not rep.is_ultrametric:
        witness = list(space.names(rep.witness)) if rep.witness else None
        raise NotUltrametricError("space is not ultrametric", witness=witness)


def diam(space: Space, subset) -> Fraction:
    idx = _check_subset(space, subset)
    m = space.matrix
    best = Fraction(0)
    for a, i in enumerate(idx):
        row = m[i]
        for j in idx[a + 1 :]:
            if row[j] > best:
                best = row[j]
    return best


def closed_ball(space: Space, center: int, radius) -> Ball:
    """The ball ``{x : d(x, center) <= radius}``."""
    require_ultrametric(space)
    (center,) = _check_subset(space, [center])
    radius = parse_dist(radius)
    row = space.matrix[center]
    members = tuple(i for i in range(len(space)) if row[i] <= radius)
    return Ball(members, diam(space, members))


def smallest_enclosing_ball(space: Space, subset) -> Ball:
    idx = _check_subset(space, subset)
    return closed_ball(space, idx[0], diam(space, idx))
