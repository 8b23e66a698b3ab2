# File: tests/test_sampler.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import numpy as np
import pytest

from src.graph import MultiGraph, build_graph, generate
from src.sampler import (Classification, ClassificationFailure, LevelBudgets,
                         LevelState, NodeProgress, Params, absorb, classify,
                         derive_budgets, draw_queries, explore, run_trial,
                         sampler, second_step, settle, trial_stream)
from src.verify import check_stretch


def budgets(threshold: int, trials: int = 4, samples: int = 10, level: int = 0) -> LevelBudgets:
    return LevelBudgets(
        level=level,
        trial_count=trials,
        samples_per_trial=samples,
        neighbor_threshold=threshold,
        center_prob=0.5,
    )


class TestDrawQueries:
    def test_full_scan_when_budget_covers_pool(self):
        rng = np.random.default_rng(0)
        assert draw_queries({5, 1, 3}, 3, rng) == [1, 3, 5]
        assert draw_queries({5, 1, 3}, 100, rng) == [1, 3, 5]

    def test_sampling_with_replacement(self):
        pool = set(range(50))
        hits = draw_queries(pool, 10, trial_stream(1, 0, 0, 0))
        assert hits == sorted(hits)
        assert 1 <= len(hits) <= 10
        assert set(hits) <= pool

    def test_two_edges_with_ten_samples(self):
        # uniform draws would miss one with probability 2 * 2^-10; the scan never does
        both = sum(len(draw_queries({0, 1}, 10, trial_stream(seed, 0, 0, 0))) == 2 for seed in range(1000))
        assert both == 1000

    def test_distinct_hits_follow_uniform_draws(self):
        # 10 draws over 11 edges hit 11 * (1 - (10/11)^10) = 6.76 of them on average
        hits = [len(draw_queries(set(range(11)), 10, trial_stream(seed, 0, 0, 0))) for seed in range(1000)]
        assert 6.5 <= sum(hits) / len(hits) <= 7.0


class TestAbsorb:
    def test_lowest_parallel_edge_is_kept(self):
        progress = NodeProgress(0, 0, [0, 1, 2])
        fresh = absorb(progress, {2: (1, frozenset({0, 2})), 0: (1, frozenset({0, 2}))})
        assert fresh == {1: 0}
        assert progress.accepted == {1: 0}
        assert progress.unexplored == {1}
        assert progress.trials == 1

    def test_shared_edges_leave_even_when_not_hit(self):
        progress = NodeProgress(0, 0, [0, 1, 2])
        absorb(progress, {2: (1, frozenset({0, 2}))})
        assert progress.accepted == {1: 2}
        assert progress.unexplored == {1}

    def test_known_neighbour_is_not_accepted_twice(self):
        progress = NodeProgress(0, 0, [0, 1])
        progress.accepted[1] = 7
        assert absorb(progress, {0: (1, frozenset({0}))}) == {}
        assert progress.accepted == {1: 7}

    def test_missing_answer_only_drops_the_edge(self):
        progress = NodeProgress(0, 0, [0, 1])
        absorb(progress, {0: None})
        assert progress.unexplored == {1}
        assert progress.accepted == {}


class TestClassify:
    def test_isolated_node_is_light(self):
        assert classify(NodeProgress(0, 0, []), 5, 0) is Classification.LIGHT

    def test_heavy_at_threshold(self):
        progress = NodeProgress(0, 0, [9])
        progress.accepted = {1: 1, 2: 2, 3: 3}
        assert classify(progress, 3, 0) is Classification.HEAVY

    def test_failure_below_threshold(self):
        progress = NodeProgress(0, 4, [9])
        progress.accepted = {1: 1}
        with pytest.raises(ClassificationFailure) as caught:
            classify(progress, 3, 2)
        assert caught.value.host == 4
        assert caught.value.as_event().kind == "classification_failure"

    def test_settle_records_instead_of_raising(self):
        progress = NodeProgress(0, 0, [9])
        failures = []
        assert settle(progress, budgets(threshold=3), failures) is Classification.FAILED
        assert progress.classification is Classification.FAILED
        assert [event.queried for event in failures] == [0]

    def test_trial_loop_guard(self):
        progress = NodeProgress(0, 0, [1, 2])
        limits = budgets(threshold=2, trials=2)
        assert progress.wants_trial(limits)
        progress.trials = 2
        assert not progress.wants_trial(limits)
        progress.trials = 0
        progress.accepted = {1: 1, 2: 2}
        assert not progress.wants_trial(limits)


class TestLevel:
    def test_single_edge_trial(self, single_edge):
        state = LevelState(0, single_edge, [0, 1])
        fresh = run_trial(state, 0, derive_budgets(Params(n=2, k=1, h=1, c=4), 0), seed=0)
        assert fresh == {1: 0}
        assert state.progress[0].unexplored == set()

    def test_full_scan_queries_everything_in_one_trial(self, k16):
        state = LevelState(0, k16, list(k16.nodes()))
        limits = derive_budgets(Params(n=16, k=1, h=4, c=4), 0)
        explore(state, limits, seed=3)
        assert all(p.trials == 1 for p in state.progress)
        assert state.count(Classification.LIGHT) == 16
        assert state.accepted_edges() == sorted(e for e in k16.edge_ids() for _ in range(2))

    def test_every_node_a_center(self, small_gnp):
        p = Params(n=small_gnp.node_count, k=1, h=3, c=4, center_prob_override=1.0)
        state = LevelState(0, small_gnp, list(small_gnp.nodes()))
        explore(state, derive_budgets(p, 0), p.seed)
        clustering = second_step(state, p)
        assert clustering.centers == list(small_gnp.nodes())
        assert len(clustering.partition) == small_gnp.node_count
        assert clustering.joined == {}

    def test_no_centers(self, small_gnp):
        p = Params(n=small_gnp.node_count, k=1, h=3, c=4, center_prob_override=0.0)
        state = LevelState(0, small_gnp, list(small_gnp.nodes()))
        explore(state, derive_budgets(p, 0), p.seed)
        clustering = second_step(state, p)
        assert len(clustering.partition) == 0
        assert clustering.unclustered == list(small_gnp.nodes())
        # light nodes without a center are not failures
        assert state.failures == []

    def test_star_joins_the_hub(self, star6):
        p = Params(n=6, k=1, h=3, c=4)
        state = LevelState(0, star6, list(star6.nodes()))
        explore(state, derive_budgets(p, 0), p.seed)
        clustering = second_step(state, p, centers=[0])
        assert clustering.partition.clusters == (frozenset(range(6)),)
        assert clustering.joined == {v: (0, v - 1) for v in range(1, 6)}

    def test_lowest_center_wins(self, triangle):
        p = Params(n=3, k=1, h=2, c=4)
        state = LevelState(0, triangle, [0, 1, 2])
        explore(state, derive_budgets(p, 0), p.seed)
        clustering = second_step(state, p, centers=[1, 2])
        assert clustering.joined == {0: (1, 0)}


class TestSampler:
    def test_single_edge(self, single_edge):
        result, assignment = sampler(single_edge, Params(n=2, k=1, h=1, c=4))
        assert result.spanner_edges == [0]
        assert result.stretch_bound == 5

    def test_tree_keeps_every_edge(self):
        g = generate("path", 32)[0]
        result, _ = sampler(g, Params(n=32, k=1, h=5, c=4, seed=2))
        assert result.spanner_edges == g.edge_ids()

    def test_single_node(self):
        result, assignment = sampler(MultiGraph(1, []), Params(n=1, k=1, h=1, c=4))
        assert result.spanner_edges == []
        assert assignment.final_clusters()[0][2] == [0]

    @pytest.mark.parametrize("seed", range(3))
    def test_complete_graph_stretch(self, seed):
        g = generate("complete", 64)[0]
        p = Params(n=64, k=1, h=6, c=4, seed=seed)
        result, _ = sampler(g, p)
        assert not result.failures
        assert not check_stretch(g, result.spanner_edges, p.stretch_bound).violations

    def test_deterministic(self, small_gnp):
        p = Params(n=small_gnp.node_count, k=2, h=3, c=4, seed=11)
        first, first_assignment = sampler(small_gnp, p)
        again, again_assignment = sampler(small_gnp, p)
        assert first.model_dump_json() == again.model_dump_json()
        assert first_assignment.model_dump_json() == again_assignment.model_dump_json()

    def test_level_accounting(self, small_gnp):
        p = Params(n=small_gnp.node_count, k=2, h=3, c=4, seed=1)
        result, assignment = sampler(small_gnp, p)
        assert len(result.levels) == 3
        assert result.node_counts[0] == small_gnp.node_count
        for stats, level in zip(result.levels[:-1], assignment.levels[:-1]):
            assert stats.centers + stats.satellites + stats.unclustered == stats.nodes
            assert len(level.centers) == stats.centers
        for stats, following in zip(result.levels, result.levels[1:]):
            assert following.nodes == stats.centers
        assert result.levels[-1].unclustered == result.levels[-1].nodes

    def test_partial_sampling_records_events(self):
        g = generate("complete", 48)[0]
        p = Params(n=48, k=1, h=2, c=1, seed=4, budget_scale=0.001)
        result, _ = sampler(g, p)
        assert not result.faithful
        assert set(result.spanner_edges) <= set(g.edge_ids())
        failed = sum(stats.failed for stats in result.levels)
        assert failed == sum(1 for event in result.failures if event.kind == "classification_failure")
        for stats in result.levels:
            assert stats.light + stats.heavy + stats.failed == stats.nodes

    def test_rejects_wrong_node_count(self, single_edge):
        with pytest.raises(ValueError):
            sampler(single_edge, Params(n=3, k=1, h=1, c=4))


def test_satellites_join_through_their_accepted_edge():
    g = build_graph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    p = Params(n=4, k=1, h=2, c=4)
    state = LevelState(0, g, [0, 1, 2, 3])
    explore(state, derive_budgets(p, 0), p.seed)
    clustering = second_step(state, p, centers=[0, 2])
    assert clustering.joined == {1: (0, 0), 3: (2, 1)}
    assert [sorted(c) for c in clustering.partition.clusters] == [[0, 1], [2, 3]]
