"""Pentad enumeration and the pentagram / configuration derivations."""

import itertools

import pytest

from w52.pentads import (
    ClosureNotIsotropicPlane,
    NotAPentagram,
    Pentagram,
    enumerate_pentads,
    pentad_from_planes,
    pentad_to_pentagram,
    pentagram_from_edges,
    pentagram_to_pentad,
)

from conftest import dense_sign

# the worked-example pentagram on a GHZ-style observable set; the last edge
# is the negative one
CANONICAL_EDGES = [
    ["XII", "IYI", "IIY", "XYY"],
    ["YII", "IXI", "IIY", "YXY"],
    ["YII", "IYI", "IIX", "YYX"],
    ["XII", "IXI", "IIX", "XXX"],
    ["XYY", "YXY", "YYX", "XXX"],
]


class TestEnumeration:
    def test_count_is_12096(self, pentads):
        assert len(pentads) == 12096

    def test_ids_are_ranks_in_lexicographic_order(self, pentads):
        tuples = [p.planes for p in pentads]
        assert tuples == sorted(tuples)
        assert [p.pentad_id for p in pentads] == list(range(12096))

    def test_meet_points_pairwise_distinct(self, pentads):
        for p in pentads:
            assert len(set(p.meet_points)) == 10

    def test_pairwise_single_point_intersections(self, space, pentads):
        for p in pentads[:200]:
            for a, b in itertools.combinations(p.planes, 2):
                inter = space.plane_masks[a] & space.plane_masks[b]
                assert inter.bit_count() == 1
                assert inter == 1 << p.meet(a, b)

    def test_shared_points_complement_distinguished_line(self, space, pentads):
        for p in pentads[:200]:
            for plane_id in p.planes:
                plane = space.planes[plane_id]
                line = space.lines[p.distinguished_line(plane_id)]
                shared = p.shared_points(plane_id)
                assert set(plane.points) - set(line.points) == set(shared)

    def test_rerun_is_identical(self, space, pentads):
        assert enumerate_pentads(space) == pentads

    def test_pentad_from_planes_round_trip(self, space, pentads):
        sample = pentads[4321]
        rebuilt = pentad_from_planes(space, sample.planes, pentad_id=sample.pentad_id)
        assert rebuilt == sample

    def test_pentad_from_planes_rejects_non_pentads(self, space):
        with pytest.raises(ValueError):
            pentad_from_planes(space, [0, 1, 2, 3, 4])
        with pytest.raises(ValueError):
            pentad_from_planes(space, [0, 0, 1, 2, 3])


class TestPentagrams:
    def test_every_observable_on_exactly_two_edges(self, pentagrams):
        for g in pentagrams:
            counts = {}
            for edge in g.edges:
                for p in edge:
                    counts[p] = counts.get(p, 0) + 1
            assert set(counts) == set(g.observables)
            assert all(c == 2 for c in counts.values())

    def test_negative_edge_count_is_odd(self, pentagrams):
        for g in pentagrams:
            assert g.negative_edges % 2 == 1
            assert 1 <= g.negative_edges <= 5

    def test_edge_signs_sampled_against_oracle(self, pentagrams):
        for g in pentagrams[::481]:
            for edge, sign in zip(g.edges, g.edge_signs):
                assert dense_sign(edge) == sign

    def test_bijection_onto_distinct_pentagrams(self, pentagrams):
        assert len(set(pentagrams)) == 12096


class TestConfigs:
    def test_25_observables_30_contexts(self, configs):
        for c in configs:
            assert len(c.observables) == 25
            assert len(c.contexts) == 30

    def test_occurrence_profile_10_by_6_and_15_by_2(self, pentads, configs):
        for pentad, config in zip(pentads, configs):
            counts = {p: 0 for p in config.observables}
            for ctx in config.contexts:
                for p in ctx:
                    counts[p] += 1
            meets = set(pentad.meet_points)
            assert sum(1 for p, n in counts.items() if n == 6) == 10
            assert sum(1 for p, n in counts.items() if n == 2) == 15
            for p, n in counts.items():
                assert n == (6 if p in meets else 2)

    def test_observables_are_meets_plus_distinguished_points(self, space, pentads, configs):
        for pentad, config in zip(pentads[:300], configs[:300]):
            meets = set(pentad.meet_points)
            line_pts = set()
            for plane_id in pentad.planes:
                line_pts.update(space.lines[pentad.distinguished_line(plane_id)].points)
            assert len(line_pts) == 15
            assert not (meets & line_pts)
            assert meets | line_pts == set(config.observables)

    def test_contexts_are_30_distinct_lines(self, space, configs):
        line_ids = {line.points: line.line_id for line in space.lines}
        for c in configs[:300]:
            ids = {line_ids[ctx] for ctx in c.contexts}
            assert len(ids) == 30

    def test_negative_context_count_odd_between_3_and_17(self, configs):
        seen = set()
        for c in configs:
            n = c.negative_contexts
            assert n % 2 == 1
            assert 3 <= n <= 17
            seen.add(n)
        assert seen == {3, 5, 7, 9, 11, 13, 15, 17}

    def test_context_signs_sampled_against_oracle(self, configs):
        for c in configs[::1511]:
            for ctx, sign in zip(c.contexts, c.context_signs):
                assert dense_sign(ctx) == sign


class TestCanonicalPentagram:
    def test_edge_signs_against_oracle(self):
        g = pentagram_from_edges(CANONICAL_EDGES)
        for edge, sign in zip(g.edges, g.edge_signs):
            assert dense_sign(edge) == sign
        assert g.negative_edges == 1

    def test_maps_to_a_census_pentad_and_back(self, space, pentads):
        g = pentagram_from_edges(CANONICAL_EDGES)
        pentad = pentagram_to_pentad(space, g)
        assert pentad_to_pentagram(space, pentad) == g
        by_planes = {p.planes: p for p in pentads}
        assert pentad.planes in by_planes
        assert by_planes[pentad.planes] == pentad  # pentad_id excluded from equality


class TestRoundTrip:
    def test_pentad_pentagram_pentad_identity_for_all(self, space, pentads, pentagrams):
        for pentad, g in zip(pentads, pentagrams):
            assert pentagram_to_pentad(space, g) == pentad


class TestPentagramValidation:
    def test_wrong_edge_count(self):
        with pytest.raises(NotAPentagram):
            pentagram_from_edges(CANONICAL_EDGES[:4])

    def test_non_commuting_edge(self):
        bad = [list(e) for e in CANONICAL_EDGES]
        bad[0] = ["XII", "ZII", "IIY", "XYY"]
        with pytest.raises(NotAPentagram):
            pentagram_from_edges(bad)

    def test_broken_occurrence_profile(self):
        bad = [list(e) for e in CANONICAL_EDGES[:4]] + [["XYY", "YXY", "YYX", "XXX"]]
        bad[0][0] = "ZII"  # no longer closed either
        with pytest.raises(NotAPentagram):
            pentagram_from_edges(bad)

    def test_closure_checked_when_bypassing_the_validator(self, space):
        # a hand-built Pentagram with a tampered edge must not survive
        g = pentagram_from_edges(CANONICAL_EDGES)
        tampered = Pentagram(g.observables, g.edges[:4] + ((1, 2, 3, 4),), g.edge_signs)
        with pytest.raises((NotAPentagram, ClosureNotIsotropicPlane)):
            pentagram_to_pentad(space, tampered)
