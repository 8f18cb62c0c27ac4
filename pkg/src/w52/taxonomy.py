"""Classification of the pentad configurations into their 47 types.

Every pentad's configuration gets a signature: the number of negative
contexts, the A/B/C distribution of its 25 observables, the class
partition of its five planes, plus the signature of the pentagram living
in the same pentad (negative edges, A/B/C distribution of the ten
pentagram observables, and how many of its type-A observables touch a
negative edge).  Grouping the 12,096 signatures yields exactly 47 types in
eight families keyed by negative-context count.

Census ordinals are assigned by a canonical sort of the signatures and are
not claimed to match the reference table's numbering; agreement with the
published classification is established by comparing the multiset of
8-parameter rows instead.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .geometry import PlaneClass, Space
from .pauli import TYPE_OF, ObservableType
from .pentads import (
    ContextualConfig,
    Pentad,
    Pentagram,
    pentad_to_config,
    pentad_to_pentagram,
)

__all__ = [
    "PentagramSignature",
    "ConfigSignature",
    "TypeRecord",
    "Census",
    "TypeCountMismatch",
    "config_signature",
    "classify_census",
    "Table1Row",
    "table1_fixture",
    "Table1Diff",
    "compare_with_table1",
    "LawViolation",
    "LawReport",
    "structural_laws",
    "LAW_DESCRIPTIONS",
]


@dataclass(frozen=True)
class PentagramSignature:
    """Parameters of a Mermin pentagram: negative edges, observable types,
    and the count of its type-A observables incident with a negative edge."""

    negative_edges: int
    obs_a: int
    obs_b: int
    obs_c: int
    a_on_negative: int

    def __post_init__(self) -> None:
        if self.obs_a + self.obs_b + self.obs_c != 10:
            raise ValueError("pentagram observable types must sum to 10")
        if self.negative_edges % 2 == 0 or not 1 <= self.negative_edges <= 5:
            raise ValueError("negative edge count must be odd in 1..5")

    @property
    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.negative_edges, self.obs_a, self.obs_b, self.obs_c, self.a_on_negative)


@dataclass(frozen=True)
class ConfigSignature:
    """Full type signature of a pentad configuration."""

    negative_contexts: int
    obs_a: int
    obs_b: int
    obs_c: int
    neg_planes: int
    planes_a: int
    planes_b: int
    planes_c: int
    pentagram: PentagramSignature

    def __post_init__(self) -> None:
        if self.obs_a + self.obs_b + self.obs_c != 25:
            raise ValueError("observable types must sum to 25")
        if self.neg_planes + self.planes_a + self.planes_b + self.planes_c != 5:
            raise ValueError("plane classes must sum to 5")
        if self.negative_contexts % 2 == 0:
            raise ValueError("negative context count must be odd")

    @property
    def table_row(self) -> tuple[int, int, int, int, int, int, int, int]:
        """The 8 parameters printed in the reference table."""
        return (
            self.negative_contexts,
            self.obs_a,
            self.obs_b,
            self.obs_c,
            self.neg_planes,
            self.planes_a,
            self.planes_b,
            self.planes_c,
        )

    @property
    def sort_key(self) -> tuple:
        return (
            -self.negative_contexts,
            self.obs_a,
            self.obs_b,
            self.neg_planes,
            self.planes_a,
            self.planes_b,
            self.planes_c,
            self.pentagram.as_tuple,
        )


@dataclass(frozen=True)
class TypeRecord:
    assigned_type: int
    signature: ConfigSignature
    multiplicity: int
    example_pentad: int


@dataclass(frozen=True)
class Census:
    """The aggregated classification: one record per type, canonical order."""

    records: tuple[TypeRecord, ...]
    total: int

    @property
    def family_sizes(self) -> dict[int, int]:
        """Number of types per negative-context count."""
        sizes: Counter[int] = Counter(
            r.signature.negative_contexts for r in self.records
        )
        return dict(sorted(sizes.items()))


class TypeCountMismatch(RuntimeError):
    """The signature grouping did not produce the expected 47 types.

    Carries the offending census so callers can inspect witnesses.
    """

    def __init__(self, census: Census):
        super().__init__(
            f"classification produced {len(census.records)} types, expected 47"
        )
        self.census = census


def config_signature(
    space: Space,
    pentad: Pentad,
    pentagram: Pentagram | None = None,
    config: ContextualConfig | None = None,
) -> ConfigSignature:
    """Compute the full signature of one pentad; derived objects may be
    passed in to avoid recomputation."""
    if pentagram is None:
        pentagram = pentad_to_pentagram(space, pentad)
    if config is None:
        config = pentad_to_config(space, pentad)

    obs_types = Counter(TYPE_OF[p] for p in config.observables)
    plane_classes = Counter(space.planes[pid].plane_class for pid in pentad.planes)

    pent_types = Counter(TYPE_OF[p] for p in pentagram.observables)
    on_negative: set[int] = set()
    for edge, sign in zip(pentagram.edges, pentagram.edge_signs):
        if sign < 0:
            on_negative.update(edge)
    a_on_negative = sum(
        1 for p in pentagram.observables if TYPE_OF[p] is ObservableType.A and p in on_negative
    )
    pent_sig = PentagramSignature(
        pentagram.negative_edges,
        pent_types[ObservableType.A],
        pent_types[ObservableType.B],
        pent_types[ObservableType.C],
        a_on_negative,
    )
    return ConfigSignature(
        config.negative_contexts,
        obs_types[ObservableType.A],
        obs_types[ObservableType.B],
        obs_types[ObservableType.C],
        plane_classes[PlaneClass.NEGATIVE],
        plane_classes[PlaneClass.POS_A],
        plane_classes[PlaneClass.POS_B],
        plane_classes[PlaneClass.POS_C],
        pent_sig,
    )


def classify_census(space: Space, pentads: Sequence[Pentad]) -> Census:
    """Group all pentads by full signature and assign canonical ordinals.

    Raises :class:`TypeCountMismatch` (with the census attached) if the
    number of distinct signatures is not 47.
    """
    groups: dict[ConfigSignature, list[int]] = {}
    for pentad in pentads:
        sig = config_signature(space, pentad)
        groups.setdefault(sig, []).append(pentad.pentad_id)
    records = tuple(
        TypeRecord(i + 1, sig, len(ids), min(ids))
        for i, (sig, ids) in enumerate(
            sorted(groups.items(), key=lambda item: item[0].sort_key)
        )
    )
    census = Census(records, sum(r.multiplicity for r in records))
    if len(records) != 47:
        raise TypeCountMismatch(census)
    return census


# ---------------------------------------------------------------------------
# reference table


class Table1Row(NamedTuple):
    type_id: int
    negative_contexts: int
    obs_a: int
    obs_b: int
    obs_c: int
    neg_planes: int
    planes_a: int
    planes_b: int
    planes_c: int
    pentagram_type: str  # documentation only; not used in comparisons

    @property
    def table_row(self) -> tuple[int, int, int, int, int, int, int, int]:
        return self[1:9]


# The published 47-type classification: (T, C-, O_A, O_B, O_C, F-, F+a, F+b,
# F+c, pentagram type).  The last column is kept for documentation only.
_TABLE1 = (
    (1, 17, 2, 11, 12, 3, 2, 0, 0, "5"),
    (2, 15, 0, 15, 10, 5, 0, 0, 0, "1"),
    (3, 15, 1, 15, 9, 3, 2, 0, 0, "2"),
    (4, 13, 0, 11, 14, 5, 0, 0, 0, "4"),
    (5, 13, 1, 10, 14, 4, 1, 0, 0, "21"),
    (6, 13, 1, 11, 13, 3, 2, 0, 0, "9"),
    (7, 13, 2, 11, 12, 3, 1, 1, 0, "6"),
    (8, 13, 3, 10, 12, 2, 2, 1, 0, "22"),
    (9, 11, 1, 10, 14, 4, 0, 1, 0, "3"),
    (10, 11, 2, 10, 13, 2, 2, 1, 0, "14"),
    (11, 11, 2, 11, 12, 3, 1, 1, 0, "24"),
    (12, 11, 3, 11, 11, 3, 1, 0, 1, "10"),
    (13, 11, 4, 10, 11, 2, 2, 0, 1, "30"),
    (14, 11, 5, 11, 9, 1, 2, 1, 1, "28b"),
    (15, 9, 1, 11, 13, 3, 0, 2, 0, "11"),
    (16, 9, 2, 10, 13, 2, 1, 2, 0, "31"),
    (17, 9, 2, 11, 12, 3, 0, 2, 0, "7"),
    (18, 9, 2, 11, 12, 1, 2, 2, 0, "17"),
    (19, 9, 3, 10, 12, 2, 1, 2, 0, "23"),
    (20, 9, 3, 11, 11, 3, 0, 1, 1, "12"),
    (21, 9, 4, 10, 11, 2, 1, 1, 1, "15"),
    (22, 9, 4, 10, 11, 2, 1, 1, 1, "32"),
    (23, 9, 4, 11, 10, 1, 2, 1, 1, "18"),
    (24, 9, 4, 11, 10, 1, 2, 1, 1, "36"),
    (25, 9, 5, 10, 10, 2, 1, 0, 2, "16"),
    (26, 9, 1, 15, 9, 3, 0, 2, 0, "8"),
    (27, 9, 5, 11, 9, 3, 0, 0, 2, "13"),
    (28, 9, 5, 11, 9, 1, 2, 0, 2, "20"),
    (29, 9, 5, 11, 9, 1, 2, 1, 1, "28a"),
    (30, 9, 3, 15, 7, 1, 2, 1, 1, "19"),
    (31, 7, 1, 11, 13, 3, 0, 2, 0, "25"),
    (32, 7, 3, 11, 11, 3, 0, 1, 1, "26"),
    (33, 7, 4, 11, 10, 1, 1, 2, 1, "37b"),
    (34, 7, 5, 10, 10, 2, 1, 0, 2, "34"),
    (35, 7, 5, 11, 9, 3, 0, 0, 2, "27"),
    (36, 7, 6, 10, 9, 0, 2, 1, 2, "41"),
    (37, 5, 4, 10, 11, 2, 0, 2, 1, "33"),
    (38, 5, 4, 11, 10, 1, 1, 2, 1, "37a"),
    (39, 5, 5, 10, 10, 2, 0, 1, 2, "35"),
    (40, 5, 5, 11, 9, 1, 1, 1, 2, "39"),
    (41, 5, 6, 11, 8, 1, 1, 0, 3, "43"),
    (42, 3, 5, 11, 9, 1, 0, 3, 1, "29"),
    (43, 3, 5, 11, 9, 1, 0, 2, 2, "40"),
    (44, 3, 6, 10, 9, 0, 1, 2, 2, "42"),
    (45, 3, 6, 11, 8, 1, 0, 1, 3, "44"),
    (46, 3, 3, 15, 7, 1, 0, 3, 1, "38"),
    (47, 3, 6, 15, 4, 1, 0, 0, 4, "45"),
)


def table1_fixture() -> tuple[Table1Row, ...]:
    """The 47 rows of the published classification table."""
    return tuple(Table1Row(*row) for row in _TABLE1)


@dataclass(frozen=True)
class Table1Diff:
    """Multiset difference between census rows and the reference rows."""

    missing: tuple[tuple[tuple[int, ...], int], ...]  # in reference, not in census
    unexpected: tuple[tuple[tuple[int, ...], int], ...]  # in census, not in reference

    @property
    def ok(self) -> bool:
        return not self.missing and not self.unexpected

    def render(self) -> str:
        if self.ok:
            return "census matches all 47 reference rows"
        lines = []
        for row, count in self.missing:
            lines.append(f"missing from census (x{count}): {row}")
        for row, count in self.unexpected:
            lines.append(f"not in reference table (x{count}): {row}")
        return "\n".join(lines)


def compare_with_table1(census: Census) -> Table1Diff:
    """Compare the census 8-parameter rows, with multiplicity, against the
    reference table.  Pentagram refinements and type numbering are excluded
    from the comparison on purpose."""
    ours = Counter(r.signature.table_row for r in census.records)
    reference = Counter(row.table_row for row in table1_fixture())
    missing = tuple(sorted((row, n) for row, n in (reference - ours).items()))
    unexpected = tuple(sorted((row, n) for row, n in (ours - reference).items()))
    return Table1Diff(missing, unexpected)


# ---------------------------------------------------------------------------
# structural laws


LAW_DESCRIPTIONS = {
    "L1": "one type-A observable: positive planes of exactly one class",
    "L2": "two type-A observables: no positive plane of class c",
    "L3": "four type-A observables: exactly one positive plane of class c",
    "L4": "type-B observable count and negative plane count have equal parity",
    "L5": "negative context count is odd and lies in 3..17",
}


def _row_violations(row: tuple[int, int, int, int, int, int, int, int]) -> list[str]:
    c_minus, o_a, _o_b, _o_c, f_minus, f_a, f_b, f_c = row
    broken = []
    if o_a == 1 and sum(1 for f in (f_a, f_b, f_c) if f) != 1:
        broken.append("L1")
    if o_a == 2 and f_c != 0:
        broken.append("L2")
    if o_a == 4 and f_c != 1:
        broken.append("L3")
    if (_o_b % 2) != (f_minus % 2):
        broken.append("L4")
    if c_minus % 2 == 0 or not 3 <= c_minus <= 17:
        broken.append("L5")
    return broken


@dataclass(frozen=True)
class LawViolation:
    law: str
    description: str
    row: tuple[int, ...]
    example_pentad: int


@dataclass(frozen=True)
class LawReport:
    violations: tuple[LawViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        lines = []
        for law, description in LAW_DESCRIPTIONS.items():
            hits = [v for v in self.violations if v.law == law]
            if hits:
                for v in hits:
                    lines.append(
                        f"{law} VIOLATED by row {v.row} (pentad {v.example_pentad}): {description}"
                    )
            else:
                lines.append(f"{law} satisfied: {description}")
        return "\n".join(lines)


def structural_laws(census: Census) -> LawReport:
    """Evaluate the five structural laws over every census record."""
    violations = []
    for record in census.records:
        row = record.signature.table_row
        for law in _row_violations(row):
            violations.append(
                LawViolation(law, LAW_DESCRIPTIONS[law], row, record.example_pentad)
            )
    return LawReport(tuple(violations))
