import itertools
import json

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from auglab.diagram import build_faces, parse_pd
from auglab.planner import (
    ArcSystem,
    AugmentationArc,
    CapExceeded,
    HypothesisFailure,
    Infeasible,
    InvalidPair,
    InvalidSystem,
    build_augmented_link,
    build_dual,
    candidate_pairs,
    enumerate_shortest_routes,
    maximal_system,
    min_puncture_route,
    realize_disjoint_system,
    verify_system,
)

import oracles
from conftest import CORPUS, load

SMALL = ["figure_eight", "knot_5_2", "knot_6_1", "knot_6_2", "knot_6_3",
         "borromean", "kinked_trefoil", "trefoil_sum_trefoil"]


def setup(name):
    d = load(name)
    f = build_faces(d)
    return d, f, build_dual(f)


def adjacency(d, f):
    return {frozenset(s) for s in oracles.edge_sides(f, d).values()}


class TestDual:
    @pytest.mark.parametrize("name,nodes,edges", [
        ("trefoil", 5, 6), ("figure_eight", 6, 8), ("kink", 3, 2)])
    def test_counts(self, name, nodes, edges):
        _, _, dual = setup(name)
        assert (dual.node_count, dual.edge_count) == (nodes, edges)

    def test_matches_face_boundaries(self, corpus):
        for d in corpus.values():
            f = build_faces(d)
            dual = build_dual(f)
            sides = oracles.edge_sides(f, d)
            assert {e: frozenset(pq) for e, pq in dual.edges.items()} == \
                {e: frozenset(pq) for e, pq in sides.items()}
            assert dual.edge_count == 2 * d.crossing_count


class TestCandidates:
    def test_trefoil(self):
        d, f, _ = setup("trefoil")
        got = candidate_pairs(f)
        # the three bigons are pairwise non-adjacent, and so are the two triangles
        assert [(a, b) for a, b, _ in got] == [(0, 2), (0, 4), (1, 3), (2, 4)]
        assert all(dist == 2 for *_, dist in got)
        sizes = f.sizes()
        assert sorted((sizes[a], sizes[b]) for a, b, _ in got) == [(2, 2)] * 3 + [(3, 3)]

    def test_against_adjacency_table(self, corpus):
        for d in corpus.values():
            f = build_faces(d)
            adj = adjacency(d, f)
            expect = [(a, b) for a, b in itertools.combinations(range(len(f)), 2)
                      if frozenset((a, b)) not in adj]
            got = candidate_pairs(f)
            assert [(a, b) for a, b, _ in got] == expect
            assert all(a != b and dist >= 2 for a, b, dist in got)

    def test_figure_eight_nonempty(self, figure_eight):
        assert len(candidate_pairs(build_faces(figure_eight))) == 7


class TestRoutes:
    def test_bfs_matches_floyd_warshall(self, corpus):
        for d in corpus.values():
            f = build_faces(d)
            dual = build_dual(f)
            dist = oracles.floyd_warshall(len(f), oracles.edge_sides(f, d).values())
            for a, b, n in candidate_pairs(f, dual):
                arc = min_puncture_route(dual, a, b)
                assert arc.punctures == n == dist[a][b] >= 2
                back = min_puncture_route(dual, b, a)
                assert back.punctures == arc.punctures

    def test_trefoil_bigons(self):
        _, f, dual = setup("trefoil")
        assert min_puncture_route(dual, 0, 2).punctures == 2

    def test_figure_eight_kinds(self):
        _, f, dual = setup("figure_eight")
        kinds = {(a, b): min_puncture_route(dual, a, b).kind for a, b, _ in candidate_pairs(f)}
        assert kinds[0, 2] == "classical"
        assert kinds[2, 5] == "generalized"
        assert min_puncture_route(dual, 2, 5).route == (1, 4, 7)

    def test_generalized_in_larger_diagram(self):
        _, f, dual = setup("knot_6_2")
        far = [(a, b) for a, b, n in candidate_pairs(f, dual) if n == 3]
        assert far
        assert min_puncture_route(dual, *far[0]).kind == "generalized"

    def test_enumeration_is_exhaustive_and_sorted(self, corpus):
        for d in corpus.values():
            f = build_faces(d)
            dual = build_dual(f)
            sides = oracles.edge_sides(f, d)
            for a, b, n in candidate_pairs(f, dual):
                got = [arc.route for arc in enumerate_shortest_routes(dual, a, b, 10_000)]
                assert got == oracles.all_routes(sides, a, b, n)
                assert enumerate_shortest_routes(dual, a, b, 1)[0] == min_puncture_route(dual, a, b)

    def test_trefoil_cap(self):
        d, f, dual = setup("trefoil")
        routes = enumerate_shortest_routes(dual, 0, 2, cap=10)
        assert [r.route for r in routes] == oracles.all_routes(oracles.edge_sides(f, d), 0, 2, 2)
        assert len(enumerate_shortest_routes(dual, 0, 2, cap=1)) == 1

    def test_walks_are_simple(self, corpus):
        for d in corpus.values():
            f = build_faces(d)
            dual = build_dual(f)
            for a, b, _ in candidate_pairs(f, dual):
                for arc in enumerate_shortest_routes(dual, a, b):
                    assert len(set(arc.faces)) == len(arc.faces)


def assert_sound(d, f, system):
    assert oracles.polyline_crossings(d, f, system.arcs, system.edge_orders) == 0
    verify_system(build_dual(f), system)
    assert len({frozenset(p) for p in system.pairs}) == len(system.pairs)


class TestRealize:
    def test_empty_and_single(self, figure_eight):
        f = build_faces(figure_eight)
        assert realize_disjoint_system(f, []).arcs == ()
        for a, b, _ in candidate_pairs(f):
            s = realize_disjoint_system(f, [(a, b)])
            assert isinstance(s, ArcSystem)
            assert_sound(figure_eight, f, s)

    def test_grid_diagonals_infeasible(self):
        req = json.loads((CORPUS / "requests" / "grid_crossing_diagonals.json").read_text())
        d = parse_pd(req["diagram"])
        f = build_faces(d)
        res = realize_disjoint_system(f, req["pairs"])
        assert isinstance(res, Infeasible)
        assert res.certificate == ((1, 11), (6, 9))
        assert oracles.every_drawing_crosses(d, f, req["pairs"])

    @pytest.mark.parametrize("name", SMALL + ["weave_2x3", "wheel_4", "knot_7_1"])
    def test_maximal_systems_are_sound(self, name):
        d, f, dual = setup(name)
        s = maximal_system(f)
        assert_sound(d, f, s)
        chosen = {frozenset(p) for p in s.pairs}
        for a, b, _ in candidate_pairs(f, dual):
            if frozenset((a, b)) not in chosen:
                assert isinstance(realize_disjoint_system(f, s.pairs + [(a, b)]), Infeasible)

    def test_figure_eight_maximal(self, figure_eight):
        f = build_faces(figure_eight)
        s = maximal_system(f)
        # every candidate pair fits at once
        assert sorted(s.pairs) == [(a, b) for a, b, _ in candidate_pairs(f)]
        assert [a.punctures for a in s.arcs] == [2, 2, 2, 2, 2, 2, 3]

    @settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.sampled_from(SMALL), st.data())
    def test_results_match_brute_force(self, name, data):
        d, f, dual = setup(name)
        cands = [(a, b) for a, b, _ in candidate_pairs(f, dual)]
        pairs = data.draw(st.lists(st.sampled_from(cands), min_size=2, max_size=3, unique=True))
        res = realize_disjoint_system(f, pairs)
        if isinstance(res, ArcSystem):
            assert_sound(d, f, res)
            assert res.pairs == [tuple(sorted(p)) for p in pairs]
        else:
            assert oracles.every_drawing_crosses(d, f, res.pairs)

    @pytest.mark.parametrize("pairs,match", [
        ([(0, 0)], "repeats"),
        ([(0, 1)], "share an edge"),
        ([(0, 99)], "out of range"),
        ([(0, 2), (2, 0)], "twice"),
    ])
    def test_invalid_pairs(self, figure_eight, pairs, match):
        with pytest.raises(InvalidPair, match=match):
            realize_disjoint_system(build_faces(figure_eight), pairs)

    def test_cap_exceeded(self):
        _, f, dual = setup("weave_2x3")
        assert len(enumerate_shortest_routes(dual, 0, 7, 100)) > 1
        # only the first route of (0, 7) is tried, and it blocks (4, 5)
        with pytest.raises(CapExceeded) as err:
            realize_disjoint_system(f, [(0, 7), (4, 5)], cap=1)
        assert err.value.cap == 1 and err.value.truncated == [(0, 7)]
        assert isinstance(realize_disjoint_system(f, [(0, 7), (4, 5)]), ArcSystem)

    def test_bad_cap(self, figure_eight):
        with pytest.raises(ValueError):
            realize_disjoint_system(build_faces(figure_eight), [(0, 2)], cap=0)


class TestAugmentedLink:
    def test_classical_and_generalized(self, figure_eight):
        f = build_faces(figure_eight)
        link = build_augmented_link(figure_eight, realize_disjoint_system(f, [(0, 2)]))
        assert link.classification == ["classical"] and link.hyperbolic
        link = build_augmented_link(figure_eight, realize_disjoint_system(f, [(2, 5)]))
        assert link.classification == ["generalized"]
        cert = link.to_dict()["certificate"]
        assert cert["hyperbolic"] and cert["hypotheses"]["passes"]

    def test_trefoil_rejected(self, trefoil):
        f = build_faces(trefoil)
        s = realize_disjoint_system(f, [(0, 2)])
        with pytest.raises(HypothesisFailure) as err:
            build_augmented_link(trefoil, s)
        assert err.value.report.two_braid

    def test_invalid_system(self, figure_eight):
        f = build_faces(figure_eight)
        s = realize_disjoint_system(f, [(0, 2)])
        arc = s.arcs[0]
        broken = ArcSystem((AugmentationArc(arc.endpoints, arc.route[::-1], arc.faces),),
                           s.edge_orders, s.segments)
        with pytest.raises(InvalidSystem):
            build_augmented_link(figure_eight, broken)

    def test_wrong_orders_rejected(self):
        d, f, _ = setup("knot_6_1")
        s = maximal_system(f)
        flipped = {e: o[::-1] for e, o in s.edge_orders.items()}
        bad = ArcSystem(s.arcs, flipped, s.segments)
        if oracles.polyline_crossings(d, f, bad.arcs, bad.edge_orders):
            with pytest.raises(InvalidSystem):
                verify_system(build_dual(f), bad)
