"""Network generators, validation, and serialization."""
import math

import pytest

from netring import networks
from netring.networks import (Network, choose_two_network, dim_n_network,
                              m_network, network_from_json, network_to_json,
                              trivial_network, validate_network)


def test_m_network_shape():
    net = m_network()
    assert len(net.nodes) == 9
    assert len(net.edges) == 16
    assert len(net.messages) == 4
    assert set(net.receivers) == {"6", "7", "8", "9"}
    for r in net.receivers:
        heads = [e.tail for (kind, e) in net.inputs(r)]
        assert heads == ["3", "4", "5"]
    assert validate_network(net) == []


def test_m_network_demand_partition():
    net = m_network()
    seen = sorted(net.demands[r] for r in net.receivers)
    # every receiver wants one message from each source pair, all distinct
    assert len(set(seen)) == 4
    for wanted in seen:
        assert len(wanted) == 2


@pytest.mark.parametrize("n,nodes,edges", [(2, 9, 16), (3, 34, 198),
                                           (4, 265, 3344)])
def test_dim_n_counts(n, nodes, edges):
    net = dim_n_network(n)
    assert len(net.nodes) == nodes == n ** n + 2 * n + 1
    assert len(net.edges) == edges == n ** n * (n * n - n + 1) + n * n
    assert len(net.messages) == n * n
    assert len(net.receivers) == n ** n
    assert validate_network(net) == []


def test_dim_2_matches_m_network_shape():
    a, b = dim_n_network(2), m_network()
    assert len(a.nodes) == len(b.nodes)
    assert len(a.edges) == len(b.edges)
    assert sorted(len(a.demands[r]) for r in a.receivers) == \
        sorted(len(b.demands[r]) for r in b.receivers)


@pytest.mark.parametrize("n", [2, 3, 5, 12])
def test_choose_two_counts(n):
    net = choose_two_network(n)
    pairs = math.comb(n, 2)
    assert len(net.nodes) == 1 + n + pairs
    assert len(net.edges) == n + 2 * pairs
    assert net.message_names == ("m1", "m2")
    assert len(net.receivers) == pairs
    assert all(net.demands[r] == ("m1", "m2") for r in net.receivers)
    assert validate_network(net) == []


def test_generator_bounds():
    with pytest.raises(ValueError):
        dim_n_network(5)
    with pytest.raises(ValueError):
        choose_two_network(1)
    with pytest.raises(ValueError):
        choose_two_network(13)


def test_topo_orders_tails_before_heads():
    for net in (m_network(), dim_n_network(3), choose_two_network(4),
                trivial_network()):
        order = {v: i for i, v in enumerate(net.topo_nodes())}
        for e in net.edges:
            assert order[e.tail] < order[e.head]
        seen = set()
        for e in net.topo_edges():
            assert all((x.tail, x.head, x.ordinal) in seen
                       for x in net.in_edges(e.tail))
            seen.add((e.tail, e.head, e.ordinal))


def test_inputs_order_edges_then_messages():
    net = Network(
        ["a", "b", "c"],
        [("b", "c", 0), ("a", "c", 1), ("a", "c", 0)],
        [("m", "a"), ("w", "c")],
        {"c": ("m",)})
    kinds = [(kind, str(ref)) for kind, ref in net.inputs("c")]
    assert kinds == [("edge", "a->c"), ("edge", "a->c#1"),
                     ("edge", "b->c"), ("message", "w")]


def test_validate_flags_problems():
    cyclic = Network(["a", "b"], [("a", "b"), ("b", "a")], [("m", "a")],
                     {"b": ("m",)})
    issues = validate_network(cyclic)
    assert any("cycle" in i for i in issues)
    assert any("non-source" in i for i in issues)

    dangling = Network(["a", "b"], [("a", "x")], [("m", "a")], {"b": ("m",)})
    issues = validate_network(dangling)
    assert any("unknown node" in i for i in issues)
    assert any("no path" in i for i in issues)

    dup = Network(["a", "b"], [("a", "b"), ("a", "b")], [("m", "a")],
                  {"b": ("m", "ghost")})
    issues = validate_network(dup)
    assert any("duplicate edge" in i for i in issues)
    assert any("unknown message" in i for i in issues)

    loop = Network(["a"], [("a", "a")], [], {})
    assert any("self-loop" in i for i in validate_network(loop))


def test_json_round_trip():
    for net in (m_network(), choose_two_network(3), trivial_network()):
        back = network_from_json(network_to_json(net))
        assert back.nodes == net.nodes
        assert back.edges == net.edges
        assert back.messages == net.messages
        assert back.demands == net.demands


def test_edge_display_names():
    net = m_network()
    plain = [str(e) for e in net.edges[:2]]
    assert all("->" in s for s in plain)
    two = Network(["a", "b"], [("a", "b", 0), ("a", "b", 1)],
                  [("m", "a")], {"b": ("m",)})
    assert [str(e) for e in two.edges] == ["a->b", "a->b#1"]
