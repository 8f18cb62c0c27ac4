"""Isotropic lines and Fano planes of W(5,2), with signs and plane classes.

The space has 63 points (the observables), 315 totally isotropic lines and
135 Fano planes, with 15 lines and 15 planes through every point and 3
planes through every line.  Every line and plane carries the sign of the
product of its observables, and every plane falls into one of four classes:

* ``negative``  -- plane sign -1; its affine part is all type C and it
  contains exactly three concurrent negative lines;
* ``a``         -- positive, affine part 1 A + 3 C, with negative lines
  (always four, no three concurrent);
* ``b``         -- positive, affine part 1 A + 3 C, no negative lines;
* ``c``         -- positive, affine part 3 A + 1 C.

Classification failures raise :class:`TaxonomyViolation`: these facts are
structural, so a violation signals a bug, never bad input.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .pauli import (
    COMMUTE_MASK,
    OBSERVABLES,
    TYPE_OF,
    Observable,
    ObservableType,
    fold_phase,
    sign_from_phase,
)

__all__ = [
    "Line",
    "Plane",
    "PlaneClass",
    "Space",
    "TaxonomyViolation",
    "LineNotInPlane",
    "UnknownId",
    "enumerate_lines",
    "enumerate_planes",
    "affine_part",
    "classify_plane",
]

_ALL_POINTS_MASK = ((1 << 64) - 1) & ~1


class TaxonomyViolation(RuntimeError):
    """A structural fact of the space failed to hold; indicates a bug."""


class LineNotInPlane(ValueError):
    """The given line does not lie in the given plane."""


class UnknownId(KeyError):
    """No point/line/plane with the requested id."""


class PlaneClass(enum.Enum):
    NEGATIVE = "negative"
    POS_A = "a"
    POS_B = "b"
    POS_C = "c"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Line:
    """A totally isotropic line: three mutually commuting points closed under XOR."""

    line_id: int
    points: tuple[int, int, int]  # sorted point ids
    sign: int

    @property
    def mask(self) -> int:
        a, b, c = self.points
        return (1 << a) | (1 << b) | (1 << c)


@dataclass(frozen=True)
class Plane:
    """A Fano plane: seven mutually commuting points forming a 2-subspace."""

    plane_id: int
    points: tuple[int, ...]  # 7 sorted point ids
    lines: tuple[int, ...]  # 7 line ids, sorted
    sign: int
    b_line: int  # line id of the three collinear type-B points
    plane_class: PlaneClass

    @property
    def mask(self) -> int:
        m = 0
        for p in self.points:
            m |= 1 << p
        return m


def _mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def _sign_of_points(points: Sequence[int]) -> int:
    k, xor = fold_phase(points)
    if xor:
        raise TaxonomyViolation(f"points {points} are not closed under XOR")
    return sign_from_phase(k)


def enumerate_lines() -> tuple[Line, ...]:
    """All 315 isotropic lines, sorted by point triple; ids are the ranks."""
    triples = set()
    for a in range(1, 64):
        mask = COMMUTE_MASK[a] >> (a + 1)
        b = a + 1
        while mask:
            if mask & 1:
                triples.add(tuple(sorted((a, b, a ^ b))))
            mask >>= 1
            b += 1
    lines = tuple(
        Line(i, pts, _sign_of_points(pts)) for i, pts in enumerate(sorted(triples))
    )
    if len(lines) != 315:
        raise TaxonomyViolation(f"expected 315 lines, found {len(lines)}")
    return lines


def enumerate_planes(lines: Sequence[Line]) -> tuple[Plane, ...]:
    """All 135 Fano planes, sorted by point tuple; ids are the ranks.

    Each line is extended by every point commuting with both generators and
    closed under XOR; duplicates collapse by point set.
    """
    line_id_by_mask = {line.mask: line.line_id for line in lines}
    seen: dict[int, tuple[int, ...]] = {}
    for line in lines:
        a, b, c = line.points
        cand = COMMUTE_MASK[a] & COMMUTE_MASK[b] & ~line.mask & _ALL_POINTS_MASK
        while cand:
            low = cand & -cand
            cand ^= low
            d = low.bit_length() - 1
            pts = (a, b, c, d, a ^ d, b ^ d, c ^ d)
            mask = _mask_of(pts)
            if mask not in seen:
                seen[mask] = tuple(sorted(pts))
    planes = []
    for plane_id, pts in enumerate(sorted(seen.values())):
        line_ids = set()
        for i, p in enumerate(pts):
            for q in pts[i + 1 :]:
                line_ids.add(line_id_by_mask[(1 << p) | (1 << q) | (1 << (p ^ q))])
        line_ids = tuple(sorted(line_ids))
        if len(line_ids) != 7:
            raise TaxonomyViolation(f"plane {pts} does not contain exactly 7 lines")
        sign = _sign_of_points(pts)
        b_line = _b_line_of(pts, line_id_by_mask)
        plane_class = _classify(pts, line_ids, sign, b_line, lines)
        planes.append(Plane(plane_id, pts, line_ids, sign, b_line, plane_class))
    if len(planes) != 135:
        raise TaxonomyViolation(f"expected 135 planes, found {len(planes)}")
    return tuple(planes)


def _b_line_of(points: Sequence[int], line_id_by_mask: dict[int, int]) -> int:
    b_points = [p for p in points if TYPE_OF[p] is ObservableType.B]
    if len(b_points) != 3:
        raise TaxonomyViolation(f"plane {points} has {len(b_points)} type-B points, not 3")
    mask = _mask_of(b_points)
    try:
        return line_id_by_mask[mask]
    except KeyError:
        raise TaxonomyViolation(f"type-B points {b_points} are not collinear") from None


def _common_points(lines: Sequence[Line], line_ids: Iterable[int]) -> set[int]:
    sets = [set(lines[lid].points) for lid in line_ids]
    return set.intersection(*sets)


def _classify(
    points: Sequence[int],
    line_ids: Sequence[int],
    sign: int,
    b_line: int,
    lines: Sequence[Line],
) -> PlaneClass:
    b_points = set(lines[b_line].points)
    affine = [p for p in points if p not in b_points]
    counts = Counter(TYPE_OF[p] for p in affine)
    n_a, n_c = counts[ObservableType.A], counts[ObservableType.C]
    negative = [lid for lid in line_ids if lines[lid].sign < 0]
    if sign < 0:
        if n_a != 0 or n_c != 4:
            raise TaxonomyViolation(
                f"negative plane {points} has affine types {n_a}A/{n_c}C, expected 0A/4C"
            )
        if len(negative) != 3 or len(_common_points(lines, negative)) != 1:
            raise TaxonomyViolation(
                f"negative plane {points} lacks exactly 3 concurrent negative lines"
            )
        return PlaneClass.NEGATIVE
    if n_a == 1 and n_c == 3:
        if not negative:
            return PlaneClass.POS_B
        if len(negative) != 4:
            raise TaxonomyViolation(
                f"positive plane {points} has {len(negative)} negative lines, expected 0 or 4"
            )
        for skip in range(4):
            triple = [lid for i, lid in enumerate(negative) if i != skip]
            if _common_points(lines, triple):
                raise TaxonomyViolation(
                    f"plane {points}: three of its negative lines are concurrent"
                )
        return PlaneClass.POS_A
    if n_a == 3 and n_c == 1:
        return PlaneClass.POS_C
    raise TaxonomyViolation(
        f"positive plane {points} has affine types {n_a}A/{n_c}C, outside the taxonomy"
    )


def classify_plane(space: "Space", plane: Plane) -> PlaneClass:
    """Recompute a plane's class from scratch, checking every structural claim."""
    return _classify(plane.points, plane.lines, plane.sign, plane.b_line, space.lines)


def affine_part(plane: Plane, line: Line) -> tuple[int, int, int, int]:
    """The four points of the plane not on the line (an affine plane of order two)."""
    if line.line_id not in plane.lines:
        raise LineNotInPlane(f"line {line.line_id} does not lie in plane {plane.plane_id}")
    return tuple(p for p in plane.points if p not in line.points)  # type: ignore[return-value]


class Space:
    """The fully indexed labeled polar space: points, lines, planes, incidence.

    Construction enumerates everything once; afterwards the object is
    immutable in practice and safe to share.
    """

    points: tuple[Observable, ...]
    lines: tuple[Line, ...]
    planes: tuple[Plane, ...]

    def __init__(self) -> None:
        self.points = OBSERVABLES
        self.lines = enumerate_lines()
        self.planes = enumerate_planes(self.lines)
        self.line_masks = tuple(line.mask for line in self.lines)
        self.plane_masks = tuple(plane.mask for plane in self.planes)
        self._line_id_by_mask = {m: i for i, m in enumerate(self.line_masks)}
        self._plane_id_by_mask = {m: i for i, m in enumerate(self.plane_masks)}
        lines_by_point: list[list[int]] = [[] for _ in range(64)]
        for line in self.lines:
            for p in line.points:
                lines_by_point[p].append(line.line_id)
        planes_by_point: list[list[int]] = [[] for _ in range(64)]
        planes_by_line: list[list[int]] = [[] for _ in range(315)]
        for plane in self.planes:
            for p in plane.points:
                planes_by_point[p].append(plane.plane_id)
            for lid in plane.lines:
                planes_by_line[lid].append(plane.plane_id)
        self._lines_by_point = tuple(tuple(v) for v in lines_by_point)
        self._planes_by_point = tuple(tuple(v) for v in planes_by_point)
        self._planes_by_line = tuple(tuple(v) for v in planes_by_line)

    # -- incidence queries ---------------------------------------------------

    def lines_through(self, point_id: int) -> tuple[int, ...]:
        self._check_point(point_id)
        return self._lines_by_point[point_id]

    def planes_through(self, point_id: int) -> tuple[int, ...]:
        self._check_point(point_id)
        return self._planes_by_point[point_id]

    def planes_on_line(self, line_id: int) -> tuple[int, ...]:
        if not isinstance(line_id, int) or not 0 <= line_id < 315:
            raise UnknownId(f"no line with id {line_id!r}")
        return self._planes_by_line[line_id]

    def line_id_of(self, points: Iterable[int | Observable]) -> int:
        mask = _mask_of(self._as_ids(points))
        try:
            return self._line_id_by_mask[mask]
        except KeyError:
            raise UnknownId(f"no line with point set {sorted(self._as_ids(points))}") from None

    def plane_id_of(self, points: Iterable[int | Observable]) -> int:
        mask = _mask_of(self._as_ids(points))
        try:
            return self._plane_id_by_mask[mask]
        except KeyError:
            raise UnknownId(f"no plane with point set {sorted(self._as_ids(points))}") from None

    def plane_spanned_by(
        self, a: int | Observable, b: int | Observable, c: int | Observable
    ) -> int:
        """Plane id of the closure of three independent commuting points."""
        ia, ib, ic = self._as_ids((a, b, c))
        pts = {ia, ib, ic, ia ^ ib, ia ^ ic, ib ^ ic, ia ^ ib ^ ic}
        if 0 in pts or len(pts) != 7:
            raise ValueError("generators are not independent")
        return self.plane_id_of(pts)

    @staticmethod
    def _as_ids(points: Iterable[int | Observable]) -> list[int]:
        return [p.point_id if isinstance(p, Observable) else p for p in points]

    @staticmethod
    def _check_point(point_id: int) -> None:
        if not isinstance(point_id, int) or not 1 <= point_id <= 63:
            raise UnknownId(f"no point with id {point_id!r}")
