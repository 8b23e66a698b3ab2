# File: tests/test_broadcast.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import pytest
from pydantic import ValidationError

from src.broadcast import (BroadcastInstance, SamplerSpanner,
                           SpannerAlgorithm, TrivialSpanner,
                           broadcast_over_spanner, message_reduced_broadcast,
                           predicted_complexity, t_local_broadcast)
from src.graph import edges_between
from src.localsim import Engine


def broken_cycle(cycle8):
    dropped = edges_between(cycle8, 0, 7)
    return [e for e in cycle8.edge_ids() if e not in dropped]


class TestFlooding:
    def test_radius_zero(self, small_gnp):
        inst = BroadcastInstance(t=0, alpha=5, spanner_edges=small_gnp.edge_ids())
        outcome = broadcast_over_spanner(small_gnp, inst)
        assert outcome.received == {v: [v] for v in small_gnp.nodes()}
        assert (outcome.rounds, outcome.messages) == (0, 0)
        assert outcome.complete

    def test_graph_as_its_own_spanner(self, small_gnp):
        inst = BroadcastInstance(t=1, alpha=1, spanner_edges=small_gnp.edge_ids())
        outcome = broadcast_over_spanner(small_gnp, inst)
        for v in small_gnp.nodes():
            assert outcome.received[v] == sorted([v, *small_gnp.neighbors(v)])
        assert outcome.rounds == 1
        assert outcome.messages == 2 * small_gnp.edge_count

    def test_broken_cycle_with_enough_rounds(self, cycle8):
        inst = BroadcastInstance(t=1, alpha=7, spanner_edges=broken_cycle(cycle8))
        outcome = broadcast_over_spanner(cycle8, inst)
        assert outcome.complete
        assert outcome.rounds == 7

    def test_broken_cycle_with_too_few_rounds(self, cycle8):
        inst = BroadcastInstance(t=1, alpha=1, spanner_edges=broken_cycle(cycle8))
        outcome = broadcast_over_spanner(cycle8, inst)
        assert not outcome.complete
        assert sorted(outcome.missing) == [(0, 7), (7, 0)]
        assert 7 not in outcome.received[0]

    def test_message_accounting(self, small_gnp):
        inst = BroadcastInstance(t=2, alpha=3, spanner_edges=small_gnp.edge_ids())
        bundled = broadcast_over_spanner(small_gnp, inst)
        metered = broadcast_over_spanner(small_gnp, inst, meter_payloads=True)
        assert bundled.messages <= 2 * inst.flood_rounds * len(inst.spanner_edges)
        assert bundled.payloads == bundled.messages
        assert metered.messages == bundled.messages
        assert metered.payloads >= metered.messages
        assert metered.payloads <= 2 * len(inst.spanner_edges) * small_gnp.node_count
        assert metered.received == bundled.received

    def test_received_sets_grow_with_t(self, cycle8):
        edges = cycle8.edge_ids()
        previous = None
        for t in range(4):
            received = broadcast_over_spanner(cycle8, BroadcastInstance(t=t, alpha=1, spanner_edges=edges)).received
            if previous is not None:
                assert all(set(previous[v]) <= set(received[v]) for v in cycle8.nodes())
            previous = received

    def test_custom_payloads(self, single_edge):
        inst = BroadcastInstance(t=1, alpha=1, spanner_edges=[0], messages={0: b"left"})
        engine = Engine(single_edge)
        outcome = t_local_broadcast(engine, inst)
        assert outcome.received == {0: [0, 1], 1: [0, 1]}
        assert inst.payload(0) == b"left"
        assert inst.payload(1) == b"1"
        assert engine.counters.by_phase()["flood"] == (2, 1)

    def test_alpha_must_be_positive(self):
        with pytest.raises(ValidationError):
            BroadcastInstance(t=1, alpha=0, spanner_edges=[])


class TestMessageReduced:
    def test_end_to_end(self, small_gnp):
        outcome = message_reduced_broadcast(small_gnp, gamma=1, t=1, seed=2)
        assert outcome.flood.complete
        assert outcome.spanner.name == "distributed-sampler"
        assert outcome.spanner.alpha == 5
        assert outcome.flood.rounds == 5
        assert outcome.total.total_messages == (
            outcome.construction.total_messages + outcome.flood.counters.total_messages
        )
        assert outcome.predicted.label == "formula evaluation"

    def test_pluggable_spanner(self, small_gnp):
        algorithm = TrivialSpanner()
        assert isinstance(algorithm, SpannerAlgorithm)
        outcome = message_reduced_broadcast(small_gnp, gamma=1, t=2, algorithm=algorithm)
        assert outcome.flood.complete
        assert outcome.flood.rounds == 2
        assert outcome.construction.total_messages == 0

    def test_centralized_spanner_override_alpha(self, small_gnp):
        outcome = message_reduced_broadcast(small_gnp, gamma=1, t=1, algorithm=SamplerSpanner(k=1, h=3), alpha=2)
        assert outcome.flood.rounds == 2
        assert outcome.spanner.counters is None

    def test_gamma_must_be_positive(self, small_gnp):
        with pytest.raises(ValueError):
            message_reduced_broadcast(small_gnp, gamma=0, t=1)

    def test_predicted_complexity(self):
        predicted = predicted_complexity(n=64, gamma=1, t=2)
        assert predicted.rounds == 3 * 2 + 6
        assert predicted.messages == pytest.approx(2 * 64 ** (1 + 2 / 3))
