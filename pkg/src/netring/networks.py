"""Directed acyclic message networks.

A network is a DAG with parallel edges (distinguished by an ordinal), source
messages owned by nodes, and per-receiver demands.  The inputs of a node are
its in-edges sorted by (tail id, ordinal) followed by the messages it owns in
declaration order; every coefficient list in a linear code is aligned with
that order, so it is fixed here once and used everywhere.  Generator node ids
zero-pad numeric suffixes so that the string sort agrees with numeric order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product


@dataclass(frozen=True, order=True)
class Edge:
    tail: str
    head: str
    ordinal: int = 0

    def __str__(self):
        tag = f"#{self.ordinal}" if self.ordinal else ""
        return f"{self.tail}->{self.head}{tag}"


class Network:
    def __init__(self, nodes, edges, messages, demands):
        self.nodes = tuple(nodes)
        self.edges = tuple(Edge(*e) if not isinstance(e, Edge) else e for e in edges)
        self.messages = tuple((str(m), str(owner)) for (m, owner) in messages)
        self.demands = {str(r): tuple(ms) for r, ms in dict(demands).items()}
        self._in = {v: [] for v in self.nodes}
        self._out = {v: [] for v in self.nodes}
        for e in self.edges:
            # tolerate edges at unknown endpoints so validate_network can
            # report them instead of the constructor blowing up
            for v in (e.head, e.tail):
                self._in.setdefault(v, [])
                self._out.setdefault(v, [])
            self._in[e.head].append(e)
            self._out[e.tail].append(e)
        for v in self._in:
            self._in[v].sort(key=lambda e: (e.tail, e.ordinal))
            self._out[v].sort(key=lambda e: (e.head, e.ordinal))
        self._owned = {v: [m for (m, owner) in self.messages if owner == v]
                       for v in self.nodes}

    def __repr__(self):
        return (f"Network({len(self.nodes)} nodes, {len(self.edges)} edges, "
                f"{len(self.messages)} messages, {len(self.demands)} receivers)")

    @property
    def message_names(self):
        return tuple(m for (m, _) in self.messages)

    @property
    def receivers(self):
        return tuple(sorted(self.demands))

    def in_edges(self, node: str):
        return tuple(self._in[node])

    def out_edges(self, node: str):
        return tuple(self._out[node])

    def owned_messages(self, node: str):
        return tuple(self._owned[node])

    def inputs(self, node: str):
        """The node's inputs: ("edge", Edge) then ("message", name) entries."""
        out = [("edge", e) for e in self._in[node]]
        out += [("message", m) for m in self._owned[node]]
        return tuple(out)

    def topo_nodes(self):
        indeg = {v: len(self._in[v]) for v in self.nodes}
        ready = sorted(v for v in self.nodes if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            bump = set()
            for e in self._out[v]:
                if e.head not in indeg:
                    continue  # dangling edge; validate_network reports it
                indeg[e.head] -= 1
                if indeg[e.head] == 0:
                    bump.add(e.head)
            if bump:
                ready = sorted(set(ready) | bump)
        if len(order) != len(self.nodes):
            raise ValueError("network contains a cycle")
        return tuple(order)

    def topo_edges(self):
        rank = {v: i for i, v in enumerate(self.topo_nodes())}
        return tuple(sorted(self.edges,
                            key=lambda e: (rank[e.tail], e.tail, e.ordinal, e.head)))


def validate_network(net: Network) -> list[str]:
    """List of structural problems; empty means the network is well-formed."""
    issues = []
    if len(set(net.nodes)) != len(net.nodes):
        issues.append("duplicate node ids")
    node_set = set(net.nodes)
    seen_edges = set()
    for e in net.edges:
        if e.tail not in node_set or e.head not in node_set:
            issues.append(f"edge {e} touches an unknown node")
        if (e.tail, e.head, e.ordinal) in seen_edges:
            issues.append(f"duplicate edge {e}")
        seen_edges.add((e.tail, e.head, e.ordinal))
        if e.tail == e.head:
            issues.append(f"self-loop {e}")
    names = [m for (m, _) in net.messages]
    if len(set(names)) != len(names):
        issues.append("duplicate message names")
    for (m, owner) in net.messages:
        if owner not in node_set:
            issues.append(f"message {m} owned by unknown node {owner}")
        elif net.in_edges(owner):
            issues.append(f"message {m} owned by non-source node {owner}")
    try:
        net.topo_nodes()
        acyclic = True
    except ValueError:
        issues.append("network contains a cycle")
        acyclic = False
    owners = dict((m, owner) for (m, owner) in net.messages)
    for r, wanted in net.demands.items():
        if r not in node_set:
            issues.append(f"receiver {r} is not a node")
            continue
        for m in wanted:
            if m not in owners:
                issues.append(f"receiver {r} demands unknown message {m}")
            elif acyclic and not _reaches(net, owners[m], r):
                issues.append(f"no path from {owners[m]} to {r} for message {m}")
    return issues


def _reaches(net: Network, src: str, dst: str) -> bool:
    if src == dst:
        return True
    seen = {src}
    stack = [src]
    while stack:
        v = stack.pop()
        for e in net.out_edges(v):
            if e.head == dst:
                return True
            if e.head not in seen:
                seen.add(e.head)
                stack.append(e.head)
    return False


# ---------------------------------------------------------------------------
# stock networks

def m_network() -> Network:
    """Nine nodes; two sources (messages W, X and Y, Z), one mixing node, and
    four receivers each demanding one message from each source."""
    nodes = [str(i) for i in range(1, 10)]
    edges = [("1", "3"), ("1", "4"), ("2", "4"), ("2", "5")]
    edges += [("4", str(t)) for t in range(6, 10)]
    edges += [("3", str(t)) for t in range(6, 10)]
    edges += [("5", str(t)) for t in range(6, 10)]
    messages = [("W", "1"), ("X", "1"), ("Y", "2"), ("Z", "2")]
    demands = {"6": ("W", "Y"), "7": ("W", "Z"), "8": ("X", "Y"), "9": ("X", "Z")}
    return Network(nodes, edges, messages, demands)


def dim_n_network(n: int) -> Network:
    """The family whose n-th member forces dimension-n behaviour: n sources
    with n messages each, a shared bottleneck, and n^n receivers demanding
    one message per source according to their index tuple."""
    if not 1 <= n <= 4:
        raise ValueError("supported dimensions are 1..4")
    width = len(str(n ** n))
    sources = [f"a{i}" for i in range(1, n + 1)]
    relays = [f"b{i}" for i in range(1, n + 1)]
    tuples = list(product(range(1, n + 1), repeat=n))
    recv_of = {t: f"r{str(i + 1).zfill(width)}" for i, t in enumerate(tuples)}
    nodes = sources + relays + ["z"] + [recv_of[t] for t in tuples]
    edges = []
    for i in range(1, n + 1):
        for o in range(n - 1):
            edges.append((f"a{i}", f"b{i}", o))
        edges.append((f"a{i}", "z", 0))
    for t in tuples:
        r = recv_of[t]
        for i in range(1, n + 1):
            for o in range(n - 1):
                edges.append((f"b{i}", r, o))
        edges.append(("z", r, 0))
    messages = [(f"x{i}_{j}", f"a{i}") for i in range(1, n + 1)
                for j in range(1, n + 1)]
    demands = {recv_of[t]: tuple(f"x{k + 1}_{t[k]}" for k in range(n))
               for t in tuples}
    return Network(nodes, edges, messages, demands)


def choose_two_network(n: int) -> Network:
    """One source with two messages, n relay nodes fed directly by the
    source, and a receiver for every pair of relays demanding both."""
    if not 2 <= n <= 12:
        raise ValueError("supported relay counts are 2..12")
    width = len(str(n))
    relay = [f"v{str(i).zfill(width)}" for i in range(1, n + 1)]
    pairs = list(combinations(range(1, n + 1), 2))
    recv = {(i, j): f"t{str(i).zfill(width)}_{str(j).zfill(width)}"
            for (i, j) in pairs}
    nodes = ["s"] + relay + [recv[p] for p in pairs]
    edges = [("s", v) for v in relay]
    for (i, j) in pairs:
        edges.append((relay[i - 1], recv[(i, j)]))
        edges.append((relay[j - 1], recv[(i, j)]))
    messages = [("m1", "s"), ("m2", "s")]
    demands = {recv[p]: ("m1", "m2") for p in pairs}
    return Network(nodes, edges, messages, demands)


def trivial_network() -> Network:
    """A single source relaying one message to a single receiver."""
    return Network(["s", "t"], [("s", "t")], [("m", "s")], {"t": ("m",)})


# ---------------------------------------------------------------------------
# serialization

def network_to_json(net: Network):
    return {
        "nodes": list(net.nodes),
        "edges": [[e.tail, e.head, e.ordinal] for e in net.edges],
        "messages": [[m, owner] for (m, owner) in net.messages],
        "demands": {r: list(ms) for r, ms in sorted(net.demands.items())},
    }


def network_from_json(data) -> Network:
    net = Network(
        [str(v) for v in data["nodes"]],
        [(str(t), str(h), int(o)) for (t, h, o) in data["edges"]],
        [(str(m), str(owner)) for (m, owner) in data["messages"]],
        {str(r): tuple(str(m) for m in ms) for r, ms in data["demands"].items()},
    )
    issues = validate_network(net)
    if issues:
        raise ValueError("invalid network: " + "; ".join(issues))
    return net
