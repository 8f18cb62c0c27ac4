"""Fano pentads and the two contextual sets every pentad hosts.

A Fano pentad is a set of five Fano planes of W(5,2) whose pairwise
intersections are ten distinct single points, such that inside each plane
the four shared points are the complement of one of its lines (the
*distinguished* line).  Each pentad yields

* a Mermin pentagram: the 10 meet points on 5 four-element contexts (the
  distinguished affine quadruples), and
* a 25-observable / 30-context configuration: keep all 35 plane points
  (25 after identification) and take the 6 non-distinguished lines of each
  plane as contexts.

Enumeration is an ordered depth-first clique search on the 135 planes,
restricted to pairs meeting in exactly one point, pruning as soon as a meet
point repeats; the affine-complement condition is tested on completed
5-sets.  The canonical output order is lexicographic on the sorted plane
id 5-tuples, and pentad ids are the ranks in that order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .geometry import Space, TaxonomyViolation
from .pauli import (
    Observable,
    fold_phase,
    parse_observable,
    sign_from_phase,
    _symplectic_bits,
)

__all__ = [
    "Pentad",
    "Pentagram",
    "ContextualConfig",
    "NotAPentagram",
    "ClosureNotIsotropicPlane",
    "enumerate_pentads",
    "pentad_from_planes",
    "pentad_to_pentagram",
    "pentad_to_config",
    "pentagram_from_edges",
    "pentagram_to_pentad",
]

# positions of the 10 unordered pairs within a sorted plane 5-tuple
_PAIRS = ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


class NotAPentagram(ValueError):
    """The context set is not a Mermin pentagram."""


class ClosureNotIsotropicPlane(ValueError):
    """An edge's XOR closure is not a totally isotropic Fano plane."""


@dataclass(frozen=True)
class Pentad:
    """Five planes with ten distinct single-point meets and affine shared parts.

    ``meet_points`` lists the pairwise intersection points in the fixed pair
    order (0,1), (0,2), ..., (3,4) over the sorted ``planes`` tuple, and
    ``distinguished_lines[i]`` is the line of ``planes[i]`` whose complement
    is that plane's four shared points.  ``pentad_id`` is the census rank and
    is excluded from equality so that reconstructed pentads compare equal to
    enumerated ones.
    """

    planes: tuple[int, int, int, int, int]
    meet_points: tuple[int, int, int, int, int, int, int, int, int, int]
    distinguished_lines: tuple[int, int, int, int, int]
    pentad_id: int | None = field(default=None, compare=False)

    def meet(self, plane_a: int, plane_b: int) -> int:
        """The single intersection point of two of the pentad's planes."""
        i, j = self.planes.index(plane_a), self.planes.index(plane_b)
        if i > j:
            i, j = j, i
        return self.meet_points[_PAIRS.index((i, j))]

    def shared_points(self, plane_id: int) -> tuple[int, int, int, int]:
        """The four meet points lying in the given plane, sorted."""
        pos = self.planes.index(plane_id)
        pts = [m for (i, j), m in zip(_PAIRS, self.meet_points) if pos in (i, j)]
        return tuple(sorted(pts))  # type: ignore[return-value]

    def distinguished_line(self, plane_id: int) -> int:
        """Line id whose complement in the plane equals the shared points."""
        return self.distinguished_lines[self.planes.index(plane_id)]


@dataclass(frozen=True)
class Pentagram:
    """Ten observables on five 4-element contexts, each observable on two."""

    observables: tuple[int, ...]  # 10 sorted point ids
    edges: tuple[tuple[int, int, int, int], ...]  # 5 sorted quadruples, sorted
    edge_signs: tuple[int, int, int, int, int]  # aligned with edges

    @property
    def negative_edges(self) -> int:
        return sum(1 for s in self.edge_signs if s < 0)


@dataclass(frozen=True)
class ContextualConfig:
    """Twenty-five observables on thirty 3-element contexts (isotropic lines)."""

    observables: tuple[int, ...]  # 25 sorted point ids
    contexts: tuple[tuple[int, int, int], ...]  # 30 sorted triples, sorted
    context_signs: tuple[int, ...]  # aligned with contexts

    @property
    def negative_contexts(self) -> int:
        return sum(1 for s in self.context_signs if s < 0)


# ---------------------------------------------------------------------------
# enumeration


def _meet_tables(space: Space) -> tuple[list[int], list[list[int]]]:
    """Per-plane bitmask of single-point partners and the meet-point table."""
    masks = space.plane_masks
    n = len(masks)
    single = [0] * n
    meet = [[-1] * n for _ in range(n)]
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            inter = mi & masks[j]
            if inter and inter.bit_count() == 1:
                p = inter.bit_length() - 1
                meet[i][j] = meet[j][i] = p
                single[i] |= 1 << j
                single[j] |= 1 << i
    return single, meet


def _build_pentad(
    space: Space, plane_ids: Sequence[int], pentad_id: int | None = None
) -> Pentad | None:
    """Assemble a Pentad from five plane ids, or None if they are not one."""
    ids = tuple(plane_ids)
    if len(ids) != 5 or list(ids) != sorted(set(ids)):
        return None
    masks = [space.plane_masks[p] for p in ids]
    meets = []
    seen = 0
    for i, j in _PAIRS:
        inter = masks[i] & masks[j]
        if inter.bit_count() != 1 or seen & inter:
            return None
        seen |= inter
        meets.append(inter.bit_length() - 1)
    distinguished = []
    for pos in range(5):
        shared = 0
        for (i, j), m in zip(_PAIRS, meets):
            if pos in (i, j):
                shared |= 1 << m
        line_id = space._line_id_by_mask.get(masks[pos] ^ shared)
        if line_id is None:
            return None
        distinguished.append(line_id)
    return Pentad(ids, tuple(meets), tuple(distinguished), pentad_id)


def _search(space: Space, roots: Iterable[int]) -> list[Pentad]:
    single, meet = _meet_tables(space)
    n = len(space.plane_masks)
    above = [~((1 << (j + 1)) - 1) & ((1 << n) - 1) for j in range(n)]
    out: list[Pentad] = []

    def extend(chosen: list[int], cand: int, used: int) -> None:
        depth = len(chosen)
        while cand:
            low = cand & -cand
            cand ^= low
            j = low.bit_length() - 1
            bits = 0
            for c in chosen:
                b = 1 << meet[c][j]
                if (used | bits) & b:
                    break
                bits |= b
            else:
                if depth == 4:
                    pentad = _build_pentad(space, chosen + [j])
                    if pentad is not None:
                        out.append(pentad)
                else:
                    extend(chosen + [j], cand & single[j] & above[j], used | bits)

    for i in roots:
        extend([i], single[i] & above[i], 0)
    return out


def _worker_search(roots: list[int]) -> list[Pentad]:
    global _WORKER_SPACE
    if _WORKER_SPACE is None:
        _WORKER_SPACE = Space()
    return _search(_WORKER_SPACE, roots)


_WORKER_SPACE: Space | None = None


def enumerate_pentads(space: Space, workers: int = 1) -> tuple[Pentad, ...]:
    """All Fano pentads, in lexicographic order of their plane 5-tuples.

    With ``workers > 1`` the search is partitioned by smallest plane id and
    run on a process pool; the merged result is identical to the sequential
    one, so output is deterministic regardless of worker count.
    """
    if workers <= 1:
        found = _search(space, range(len(space.plane_masks)))
    else:
        n = len(space.plane_masks)
        chunks = [list(range(start, n, workers)) for start in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_worker_search, chunks))
        found = sorted(
            (p for part in parts for p in part), key=lambda p: p.planes
        )
    return tuple(replace(p, pentad_id=i) for i, p in enumerate(found))


def pentad_from_planes(
    space: Space, plane_ids: Sequence[int], pentad_id: int | None = None
) -> Pentad:
    """Validate five plane ids as a Fano pentad and assemble it."""
    pentad = _build_pentad(space, sorted(plane_ids), pentad_id)
    if pentad is None:
        raise ValueError(f"planes {sorted(plane_ids)} do not form a Fano pentad")
    return pentad


# ---------------------------------------------------------------------------
# derived contextual sets


def pentad_to_pentagram(space: Space, pentad: Pentad) -> Pentagram:
    """The Mermin pentagram on the pentad's ten meet points.

    Edges are the five distinguished affine quadruples, listed in
    lexicographic order.
    """
    edges = []
    for plane_id in pentad.planes:
        quad = pentad.shared_points(plane_id)
        k, xor = fold_phase(quad)
        if xor or k & 1:
            raise TaxonomyViolation(f"shared points {quad} do not multiply to +/-identity")
        edges.append((quad, sign_from_phase(k)))
    edges.sort()
    observables = tuple(sorted(pentad.meet_points))
    signs = tuple(s for _, s in edges)
    if sum(1 for s in signs if s < 0) % 2 == 0:
        raise TaxonomyViolation(f"pentagram of pentad {pentad.planes} has even negative count")
    return Pentagram(observables, tuple(q for q, _ in edges), signs)


def pentad_to_config(space: Space, pentad: Pentad) -> ContextualConfig:
    """The 25-observable / 30-context configuration hosted by the pentad.

    Contexts are the six non-distinguished lines of each plane, in line-id
    order; observables are all plane points, the ten meet points occurring
    in six contexts each and the fifteen distinguished-line points in two.
    """
    line_ids = []
    points_mask = 0
    for pos, plane_id in enumerate(pentad.planes):
        plane = space.planes[plane_id]
        points_mask |= plane.mask
        skip = pentad.distinguished_lines[pos]
        line_ids.extend(lid for lid in plane.lines if lid != skip)
    line_ids.sort()
    if len(set(line_ids)) != 30:
        raise TaxonomyViolation(f"pentad {pentad.planes} yields repeated contexts")
    observables = _mask_points(points_mask)
    if len(observables) != 25:
        raise TaxonomyViolation(
            f"pentad {pentad.planes} covers {len(observables)} points, expected 25"
        )
    contexts = tuple(space.lines[lid].points for lid in line_ids)
    signs = tuple(space.lines[lid].sign for lid in line_ids)
    _check_config_profile(pentad, observables, contexts, signs)
    return ContextualConfig(observables, contexts, signs)


def _mask_points(mask: int) -> tuple[int, ...]:
    pts = []
    while mask:
        low = mask & -mask
        mask ^= low
        pts.append(low.bit_length() - 1)
    return tuple(pts)


def _check_config_profile(
    pentad: Pentad,
    observables: Sequence[int],
    contexts: Sequence[tuple[int, int, int]],
    signs: Sequence[int],
) -> None:
    counts = {p: 0 for p in observables}
    for ctx in contexts:
        for p in ctx:
            counts[p] += 1
    meets = set(pentad.meet_points)
    for p, c in counts.items():
        expected = 6 if p in meets else 2
        if c != expected:
            raise TaxonomyViolation(
                f"point {p} occurs in {c} contexts, expected {expected}"
            )
    if sum(1 for s in signs if s < 0) % 2 == 0:
        raise TaxonomyViolation(f"config of pentad {pentad.planes} has even negative count")


# ---------------------------------------------------------------------------
# pentagram round trip


def _normalize_edges(
    edges: Iterable[Iterable[Observable | str]],
) -> list[tuple[int, ...]]:
    rows = []
    for edge in edges:
        ids = []
        for o in edge:
            if isinstance(o, str):
                o = parse_observable(o)
            ids.append(o.point_id)
        rows.append(tuple(sorted(ids)))
    rows.sort()
    return rows


def _validate_pentagram_edges(rows: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], list[int]]:
    if len(rows) != 5:
        raise NotAPentagram(f"expected 5 edges, got {len(rows)}")
    counts: dict[int, int] = {}
    signs = []
    for row in rows:
        if len(row) != 4 or len(set(row)) != 4:
            raise NotAPentagram(f"edge {row} is not four distinct observables")
        for i, a in enumerate(row):
            counts[a] = counts.get(a, 0) + 1
            for b in row[i + 1 :]:
                if _symplectic_bits(a, b):
                    raise NotAPentagram(f"edge {row} is not mutually commuting")
        k, xor = fold_phase(row)
        if xor:
            raise NotAPentagram(f"edge {row} does not multiply to +/-identity")
        signs.append(sign_from_phase(k))
    if len(counts) != 10 or any(c != 2 for c in counts.values()):
        raise NotAPentagram("occurrence profile is not 10 observables twice each")
    if sum(1 for s in signs if s < 0) % 2 == 0:
        raise NotAPentagram("number of negative edges is even")
    return tuple(sorted(counts)), signs


def pentagram_from_edges(edges: Iterable[Iterable[Observable | str]]) -> Pentagram:
    """Build a Pentagram from five 4-element contexts, validating everything."""
    rows = _normalize_edges(edges)
    observables, signs = _validate_pentagram_edges(rows)
    return Pentagram(observables, tuple(rows), tuple(signs))


def pentagram_to_pentad(space: Space, pentagram: Pentagram) -> Pentad:
    """Close each edge under XOR into a Fano plane and assemble the pentad.

    Inverts :func:`pentad_to_pentagram`; the input is revalidated from its
    edges, so a hand-built Pentagram is checked before being trusted.
    """
    rows = [tuple(sorted(edge)) for edge in pentagram.edges]
    _validate_pentagram_edges(sorted(rows))
    plane_ids = []
    for row in rows:
        a, b, c, d = row
        pts = {a, b, c, d, a ^ b, a ^ c, a ^ d}
        if len(pts) != 7 or 0 in pts:
            raise ClosureNotIsotropicPlane(f"closure of edge {row} is degenerate")
        plane_mask = 0
        for p in pts:
            plane_mask |= 1 << p
        plane_id = space._plane_id_by_mask.get(plane_mask)
        if plane_id is None:
            raise ClosureNotIsotropicPlane(
                f"closure of edge {row} is not a totally isotropic plane"
            )
        plane_ids.append(plane_id)
    pentad = _build_pentad(space, sorted(plane_ids))
    if pentad is None:
        raise NotAPentagram(f"edge closures {sorted(plane_ids)} do not form a Fano pentad")
    return pentad
