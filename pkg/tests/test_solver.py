"""Complete-search solver against full enumeration, plus search plumbing."""
import pytest

import bruteforce
from conftest import (chain2_network, chain_network, pair_network,
                      starve_network, wire2_network)
from netring import codes, networks, rings, solver
from netring.networks import choose_two_network, m_network, trivial_network
from netring.rings import (GaloisField, IntegersMod, PrimeField,
                           construct_ring, describe)
from netring.solver import (SearchOptions, nonunital_demo, smallest_ring_search,
                            solve_scalar, solve_vector, structured_catalog)

RING_POOL = [PrimeField(2), PrimeField(3), IntegersMod(4), GaloisField(2, 2)]

# (network builder, ring descriptors it stays tiny for)
ORACLE_CASES = [
    (trivial_network, RING_POOL),
    (wire2_network, RING_POOL),
    (pair_network, RING_POOL),
    (chain_network, RING_POOL),
    (starve_network, RING_POOL),
    (chain2_network, RING_POOL[:2]),
    (lambda: choose_two_network(2), RING_POOL),
]


def _oracle_id(case):
    builder, _ = case
    return builder.__name__ if hasattr(builder, "__name__") else "net"


@pytest.mark.parametrize("builder,descs", ORACLE_CASES,
                         ids=[b.__name__ for b, _ in ORACLE_CASES])
def test_solver_agrees_with_enumeration(builder, descs):
    net = builder()
    for desc in descs:
        ring = construct_ring(desc)
        want, oracle_coeffs, _ = bruteforce.solve(net, ring)
        for normalize in (True, False):
            opts = SearchOptions(normalize_forwarding=normalize)
            res = solve_scalar(net, ring, opts)
            assert res.status == want, (describe(desc), normalize)
            if res.solved:
                assert bruteforce.check_code(net, res.code)
            else:
                assert res.code is None


def test_exhaustive_witness_is_lex_least():
    net = choose_two_network(2)
    for desc in (PrimeField(2), PrimeField(3), IntegersMod(4)):
        ring = construct_ring(desc)
        status, coeffs, decs = bruteforce.solve(net, ring)
        assert status == "solved"
        opts = SearchOptions(normalize_forwarding=False,
                             strategy="exhaustive")
        res = solve_scalar(net, ring, opts)
        assert res.status == "solved"
        for e in net.topo_edges():
            assert res.code.edge_coeffs[e] == coeffs[e], (describe(desc), e)
        for key, row in decs.items():
            assert res.code.decodings[key] == row, (describe(desc), key)


def test_strategies_agree_on_fields(gf2, gf3):
    for net in (choose_two_network(3), pair_network(), wire2_network()):
        for ring in (gf2, gf3):
            rank = solve_scalar(net, ring, SearchOptions(strategy="rank"))
            table = solve_scalar(net, ring,
                                 SearchOptions(strategy="exhaustive"))
            assert rank.status == table.status
            for res in (rank, table):
                if res.solved:
                    assert codes.verify_solution(net, res.code).solved


def test_rank_strategy_requires_field_like(z4):
    with pytest.raises(ValueError):
        solve_scalar(trivial_network(), z4, SearchOptions(strategy="rank"))


def test_normalization_agrees_on_choose_two(gf2, gf3):
    net = choose_two_network(3)
    for ring in (gf2, gf3):
        on = solve_scalar(net, ring, SearchOptions(normalize_forwarding=True))
        off = solve_scalar(net, ring,
                           SearchOptions(normalize_forwarding=False))
        assert on.status == off.status == "solved"
        assert codes.verify_solution(net, on.code).solved
        assert codes.verify_solution(net, off.code).solved


def test_node_budget_exhaustion(gf2):
    res = solve_scalar(m_network(), gf2, SearchOptions(node_budget=5))
    assert res.status == "budget-exceeded"
    assert res.code is None
    assert res.stats["nodes"] <= 6


def test_env_budget_default(monkeypatch):
    monkeypatch.setenv("NETRING_BUDGET", "123")
    assert SearchOptions().node_budget == 123
    monkeypatch.delenv("NETRING_BUDGET")
    assert SearchOptions().node_budget == solver.DEFAULT_NODE_BUDGET


def test_shards_cover_the_space(gf2, z4):
    # solvable: some shard finds it, every solved shard's code verifies
    net = choose_two_network(3)
    statuses = []
    for i in range(3):
        res = solve_scalar(net, gf2, SearchOptions(shards=3, shard_index=i))
        statuses.append(res.status)
        if res.solved:
            assert codes.verify_solution(net, res.code).solved
    assert "solved" in statuses
    # unsolvable: every shard must report exhaustion
    for i in range(2):
        res = solve_scalar(wire2_network(), z4,
                           SearchOptions(shards=2, shard_index=i))
        assert res.status == "exhausted-unsolvable"


def test_solve_vector_boundaries(gf2):
    net = choose_two_network(4)  # needs q >= 3, so dim 1 over GF(2) fails
    assert solve_vector(net, gf2, 1).status == "exhausted-unsolvable"
    res = solve_vector(net, gf2, 2)
    assert res.status == "solved"
    assert res.code.module.vector_dim == 2
    assert codes.verify_solution(net, res.code).solved
    assert codes.semantic_verify(net, res.code).solved


def test_solve_vector_split_cannot_prove_unsolvable(gf2):
    # with the direct route priced out and dim-1 unsolvable, a failed
    # split proves nothing, so the verdict must be budget-exceeded
    net = choose_two_network(4)
    res = solve_vector(net, gf2, 2, SearchOptions(node_budget=3))
    assert res.status == "budget-exceeded"


def test_smallest_ring_search_small_net():
    report = smallest_ring_search(choose_two_network(3), max_size=4)
    assert report.minimal_size == 2
    assert [v.name for v in report.winners] == ["GF(2)"]
    assert len(report.verdicts) == 1  # search stops past the first size
    assert "complete for these families only" in report.coverage


def test_smallest_ring_search_unsolvable_everywhere():
    report = smallest_ring_search(wire2_network(), max_size=4)
    assert report.minimal_size is None
    assert report.winners == []
    assert all(v.status == "exhausted-unsolvable" for v in report.verdicts)
    assert {v.size for v in report.verdicts} == {2, 3, 4}


def test_structured_catalog_inventory():
    cat = structured_catalog(16)
    assert len(cat) == 37
    names = [describe(d) for d in cat]
    assert len(set(names)) == 37
    sizes = [solver._descriptor_size(d) for d in cat]
    assert sizes == sorted(sizes) and max(sizes) <= 16
    assert any("M_2(GF(2))" == n for n in names)
    assert any(n.startswith("UT_2") or "riangular" in n or "ut" in n.lower()
               for n in names)

    def atoms(desc):
        if isinstance(desc, rings.Product):
            for f in desc.factors:
                yield from atoms(f)
        else:
            yield desc

    for desc in cat:
        for atom in atoms(desc):
            if isinstance(atom, IntegersMod):
                assert rings._prime_power(atom.n) is not None, describe(desc)


def test_nonunital_demo_all_coefficients_fail():
    report = nonunital_demo()
    assert report.values == (0, 2, 4, 6)
    assert report.has_identity is False
    assert [c for c, _ in report.collisions] == [0, 2, 4, 6]
    for _, (a, b) in report.collisions:
        assert a != b and a in report.values and b in report.values
    assert "identity" in report.message


def test_result_stats_shape(gf2):
    res = solve_scalar(choose_two_network(3), gf2)
    assert res.solved and res.code is not None
    assert res.stats["strategy"] == "rank"
    assert res.stats["nodes"] > 0 and res.stats["elapsed"] >= 0
    table = solve_scalar(trivial_network(),
                         construct_ring(IntegersMod(4)))
    assert table.solved
    assert table.stats["strategy"] == "exhaustive"
    assert table.code.edge_coeffs[trivial_network().edges[0]] == (1,)
