"""Linear codes on networks, their verification, and rank entropies.

A code fixes, for every edge, one ring coefficient per input of its tail
node, and for every (receiver, demanded message) one coefficient per input of
the receiver; coefficient lists are aligned with Network.inputs order.  Codes
are checked two independent ways: symbolically, by propagating rows of ring
coefficients and comparing each decode against the demanded unit row, and
semantically, by evaluating every assignment of group values to the messages.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import fieldlinalg as fl
from . import modules as _modules
from . import rings as _rings
from .modules import Module
from .networks import Edge, Network


class LinearCode:
    def __init__(self, module: Module, edge_coeffs, decodings):
        self.module = module
        self.edge_coeffs = {e if isinstance(e, Edge) else Edge(*e): tuple(c)
                            for e, c in dict(edge_coeffs).items()}
        self.decodings = {(str(r), str(m)): tuple(c)
                          for (r, m), c in dict(decodings).items()}

    def __repr__(self):
        return (f"LinearCode({self.module.label}, {len(self.edge_coeffs)} edges, "
                f"{len(self.decodings)} decodings)")


def check_shape(net: Network, code: LinearCode) -> None:
    """Arity and range validation of a code against its network."""
    n = code.module.ring.size
    for e in net.edges:
        if e not in code.edge_coeffs:
            raise ValueError(f"edge {e} has no coefficients")
        coeffs = code.edge_coeffs[e]
        want = len(net.inputs(e.tail))
        if len(coeffs) != want:
            raise ValueError(f"edge {e} expects {want} coefficients, got {len(coeffs)}")
        if any(not 0 <= c < n for c in coeffs):
            raise ValueError(f"edge {e} has coefficients outside the ring")
    for r in net.receivers:
        want = len(net.inputs(r))
        for m in net.demands[r]:
            if (r, m) not in code.decodings:
                raise ValueError(f"no decoding for message {m} at receiver {r}")
            d = code.decodings[(r, m)]
            if len(d) != want:
                raise ValueError(
                    f"decoding ({r}, {m}) expects {want} coefficients, got {len(d)}")
            if any(not 0 <= c < n for c in d):
                raise ValueError(f"decoding ({r}, {m}) leaves the ring")


@dataclass
class Verdict:
    solved: bool
    checks: dict
    failure: Optional[dict]
    method: str

    def __str__(self):
        head = f"{self.method}: " + ("all demands decode" if self.solved
                                     else "FAILED")
        if self.failure:
            head += f" ({self.failure})"
        return head


def unit_row(position: int, width: int, one: int = 1) -> tuple[int, ...]:
    return tuple(one if i == position else 0 for i in range(width))


def _combine(ring, coeffs, rows):
    """Sum of coeff * row over the ring, elementwise."""
    width = len(rows[0])
    acc = [0] * width
    for c, row in zip(coeffs, rows):
        if c == 0:
            continue
        for i, x in enumerate(row):
            if x:
                acc[i] = ring.add(acc[i], ring.mul(c, x))
    return tuple(acc)


def transfer_vectors(net: Network, code: LinearCode) -> dict[Edge, tuple[int, ...]]:
    """Per-edge rows of ring coefficients, indexed by message order."""
    check_shape(net, code)
    ring = code.module.ring
    msgs = net.message_names
    pos = {m: i for i, m in enumerate(msgs)}
    one = ring.one if ring.unital else None
    rows: dict[Edge, tuple[int, ...]] = {}
    for e in net.topo_edges():
        in_rows = []
        for kind, ref in net.inputs(e.tail):
            if kind == "edge":
                in_rows.append(rows[ref])
            else:
                if one is None:
                    raise ValueError("symbolic rows need a unital ring; "
                                     "use semantic_verify for rngs")
                in_rows.append(unit_row(pos[ref], len(msgs), one))
        rows[e] = _combine(ring, code.edge_coeffs[e], in_rows)
    return rows


def verify_solution(net: Network, code: LinearCode) -> Verdict:
    """Symbolic check: every decode equals the demanded message's unit row.

    Requires a faithful module: over one, a coefficient identity is the same
    thing as correctness of the induced map on values, so the unit-row test
    is exact.  Unfaithful inputs are rejected; quotient the ring by the
    annihilator (modules.annihilator_quotient) and verify that code instead.
    """
    if not code.module.is_faithful():
        ann = code.module.annihilator()
        raise ValueError(
            f"module is not faithful (annihilator {ann}); apply "
            "annihilator_quotient and verify the induced code")
    ring = code.module.ring
    rows = transfer_vectors(net, code)
    msgs = net.message_names
    pos = {m: i for i, m in enumerate(msgs)}
    checks = {}
    failure = None
    for r in net.receivers:
        in_rows = []
        for kind, ref in net.inputs(r):
            in_rows.append(rows[ref] if kind == "edge"
                           else unit_row(pos[ref], len(msgs), ring.one))
        for m in net.demands[r]:
            got = _combine(ring, code.decodings[(r, m)], in_rows)
            want = unit_row(pos[m], len(msgs), ring.one)
            ok = got == want
            checks[(r, m)] = ok
            if not ok and failure is None:
                failure = {"receiver": r, "message": m,
                           "decoded_row": got, "expected_row": want}
    return Verdict(all(checks.values()), checks, failure, "coefficient")


SEMANTIC_CAP = 1 << 24


def semantic_verify(net: Network, code: LinearCode, cap: int = SEMANTIC_CAP,
                    chunk: int = 1 << 15) -> Verdict:
    """Ground-truth check: evaluate the code on every message assignment."""
    check_shape(net, code)
    module = code.module
    G = module.group.size
    msgs = net.message_names
    m = len(msgs)
    total = G ** m
    if total > cap:
        raise ValueError(f"{total} assignments exceed the semantic cap {cap}")
    act = module.act_table()
    gadd = module.group.add_table()
    weights = [G ** (m - 1 - i) for i in range(m)]
    topo = net.topo_edges()
    checks = {}
    failure = None
    for base in range(0, total, chunk):
        count = min(chunk, total - base)
        idx = np.arange(base, base + count, dtype=np.int64)
        val = {name: (idx // weights[i]) % G for i, name in enumerate(msgs)}
        rows = {}
        for e in topo:
            acc = np.zeros(count, dtype=np.int64)
            for c, (kind, ref) in zip(code.edge_coeffs[e], net.inputs(e.tail)):
                src = rows[ref] if kind == "edge" else val[ref]
                acc = gadd[acc, act[c, src]]
            rows[e] = acc
        for r in net.receivers:
            inputs = net.inputs(r)
            for msg in net.demands[r]:
                acc = np.zeros(count, dtype=np.int64)
                for c, (kind, ref) in zip(code.decodings[(r, msg)], inputs):
                    src = rows[ref] if kind == "edge" else val[ref]
                    acc = gadd[acc, act[c, src]]
                ok = bool((acc == val[msg]).all())
                checks[(r, msg)] = checks.get((r, msg), True) and ok
                if not ok and failure is None:
                    bad = int((acc != val[msg]).argmax())
                    failure = {
                        "receiver": r, "message": msg,
                        "assignment": {name: int(val[name][bad]) for name in msgs},
                        "decoded": int(acc[bad]), "expected": int(val[msg][bad]),
                    }
    return Verdict(all(checks.values()), checks, failure, "semantic")


# ---------------------------------------------------------------------------
# stock codes

def explicit_m_network_code():
    """The known solution of the four-receiver two-source network: a scalar
    code over the ring of 2x2 matrices with entries mod 2."""
    from .networks import m_network
    net = m_network()
    ring = _rings.construct_ring(_rings.MatrixRing(_rings.PrimeField(2), 2))
    module = _modules.scalar_module(ring)
    E = {(r, c): ring.matrix_unit(r, c) for r in range(2) for c in range(2)}
    one, zero = ring.one, 0

    edge_coeffs = {
        # sources: inputs are the owned message pairs
        Edge("1", "3"): (E[0, 0], E[1, 0]),   # first components of W and X
        Edge("1", "4"): (E[0, 1], E[1, 1]),   # second components of W and X
        Edge("2", "4"): (E[0, 1], E[1, 1]),
        Edge("2", "5"): (E[0, 0], E[1, 0]),
        # node 4 mixes its two inputs four different ways
        Edge("4", "6"): (E[0, 0], E[1, 0]),
        Edge("4", "7"): (E[0, 0], E[1, 1]),
        Edge("4", "8"): (E[0, 1], E[1, 0]),
        Edge("4", "9"): (E[0, 1], E[1, 1]),
    }
    for t in ("6", "7", "8", "9"):
        edge_coeffs[Edge("3", t)] = (one,)
        edge_coeffs[Edge("5", t)] = (one,)

    # receiver inputs arrive ordered (from node 3, from node 4, from node 5)
    decodings = {
        ("6", "W"): (E[0, 0], E[1, 0], zero),
        ("6", "Y"): (zero, E[1, 1], E[0, 0]),
        ("7", "W"): (E[0, 0], E[1, 0], zero),
        ("7", "Z"): (zero, E[1, 1], E[0, 1]),
        ("8", "X"): (E[0, 1], E[1, 0], zero),
        ("8", "Y"): (zero, E[1, 1], E[0, 0]),
        ("9", "X"): (E[0, 1], E[1, 0], zero),
        ("9", "Z"): (zero, E[1, 1], E[0, 1]),
    }
    return net, LinearCode(module, edge_coeffs, decodings)


def routing_code_dim_n(n: int, field, net: Optional[Network] = None):
    """Component-routing vector solution of the dimension-n family.

    Each source spreads the j-th components of its n messages over its j-th
    outgoing edge; the bottleneck forwards, per receiver, the component each
    demanded message still misses."""
    from .networks import dim_n_network
    if net is None:
        net = dim_n_network(n)
    module = _modules.vector_module(field, n)
    mat = module.ring
    E = {(r, c): mat.matrix_unit(r, c) for r in range(n) for c in range(n)}
    edge_coeffs = {}
    decodings = {}
    tuples = {}
    for r, wanted in net.demands.items():
        # receiver r demands x_{k+1}_{t[k]}: recover its index tuple
        t = tuple(int(m.split("_")[1]) for m in wanted)
        tuples[r] = t
    for e in net.edges:
        tail = e.tail
        if tail.startswith("a"):
            # inputs: the n owned messages x_i_1..x_i_n in declaration order
            j = e.ordinal if e.head != "z" else n - 1  # component carried
            edge_coeffs[e] = tuple(E[k, j] for k in range(n))
        elif tail.startswith("b"):
            # inputs: the n-1 parallel edges from the source, by ordinal
            edge_coeffs[e] = tuple(1 if o == e.ordinal else 0
                                   for o in range(n - 1))
        elif tail == "z":
            # inputs: one edge from each source, sorted a1 < a2 < ...
            t = tuples[e.head]
            edge_coeffs[e] = tuple(E[k, t[k] - 1] for k in range(n))
        else:
            raise AssertionError(f"unexpected tail {tail}")
    for r, wanted in net.demands.items():
        t = tuples[r]
        inputs = net.inputs(r)
        for k, msg in enumerate(wanted):  # msg = x_{k+1}_{t[k]}
            row = []
            for kind, ref in inputs:
                assert kind == "edge"
                if ref.tail == "z":
                    row.append(E[n - 1, k])
                elif ref.tail == f"b{k + 1}":
                    j = ref.ordinal  # carries component j of the k-th source
                    row.append(E[j, t[k] - 1])
                else:
                    row.append(0)
            decodings[(r, msg)] = tuple(row)
    return net, LinearCode(module, edge_coeffs, decodings)


# ---------------------------------------------------------------------------
# rank entropy

@dataclass
class EntropyReport:
    variables: tuple
    rank: int
    field_size: int
    dimension: int
    message_count: int

    @property
    def value(self) -> int:
        """Entropy in units of log(field size)."""
        return self.rank


def _field_ops(module: Module) -> fl.FieldOps:
    if module.vector_dim is None or module.base_ring is None:
        raise ValueError("rank entropy needs a vector code over a field")
    return fl.FieldOps(module.base_ring)


def variable_rows(net: Network, code: LinearCode, var) -> list[tuple[int, ...]]:
    """Field-level rows of a variable: a message name or an edge.

    Expands ring coefficients into dimension-many rows over F^(k*messages),
    so stacking variables and taking the rank measures their joint entropy.
    """
    module = code.module
    k = module.vector_dim
    msgs = net.message_names
    pos = {m: i for i, m in enumerate(msgs)}
    width = k * len(msgs)
    if isinstance(var, str) and var in pos:
        base = pos[var] * k
        return [tuple(1 if j == base + a else 0 for j in range(width))
                for a in range(k)]
    edge = var if isinstance(var, Edge) else Edge(*var)
    row = transfer_vectors(net, code)[edge]
    out = []
    for a in range(k):
        line = [0] * width
        for mi, c in enumerate(row):
            block = _coeff_block(module, c)
            for b in range(k):
                line[mi * k + b] = block[a][b]
        out.append(tuple(line))
    return out


def _coeff_block(module: Module, c: int):
    if module.vector_dim == 1:
        return ((c,),)
    return module.ring.mat_entries(c)


def entropy_of(net: Network, code: LinearCode, variables) -> EntropyReport:
    """Joint entropy (in log-|F| units) of edge values and/or messages."""
    ops = _field_ops(code.module)
    rows = []
    for var in variables:
        rows.extend(variable_rows(net, code, var))
    return EntropyReport(tuple(str(v) for v in variables), fl.rank(ops, rows),
                         ops.q, code.module.vector_dim, len(net.messages))


# ---------------------------------------------------------------------------
# serialization

def code_to_json(code: LinearCode):
    return {
        "module": _modules.module_to_json(code.module),
        "edges": sorted([[e.tail, e.head, e.ordinal, list(c)]
                         for e, c in code.edge_coeffs.items()]),
        "decodings": sorted([[r, m, list(c)]
                             for (r, m), c in code.decodings.items()]),
    }


def code_from_json(data) -> LinearCode:
    module = _modules.module_from_json(data["module"])
    edges = {Edge(str(t), str(h), int(o)): tuple(int(x) for x in c)
             for (t, h, o, c) in data["edges"]}
    decs = {(str(r), str(m)): tuple(int(x) for x in c)
            for (r, m, c) in data["decodings"]}
    return LinearCode(module, edges, decs)
