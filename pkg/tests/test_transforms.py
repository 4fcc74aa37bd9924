"""Solution-preserving rewrites between codes."""
import pytest

import bruteforce
from conftest import pair_network
from netring import codes, modules, rings, transforms
from netring.codes import (LinearCode, explicit_m_network_code,
                           routing_code_dim_n, semantic_verify,
                           verify_solution)
from netring.rings import (IntegersMod, MatrixRing, PrimeField,
                           UpperTriangular, construct_ring, describe)
from netring.transforms import (dim_sum, hom_lift, matrix_scalar_to_vector,
                                product_code, quotient_by_annihilator,
                                simple_reduction, vector_to_matrix_scalar)


def identity_routing_code(net, ring):
    """Route message i over wire i; only for the two-wire pair network."""
    module = modules.scalar_module(ring)
    e0, e1 = sorted(net.edges, key=lambda e: e.ordinal)
    return LinearCode(module, {e0: (1, 0), e1: (0, 1)},
                      {("t", "m1"): (1, 0), ("t", "m2"): (0, 1)})


def test_matrix_to_vector_and_back():
    net, code = explicit_m_network_code()
    vec = matrix_scalar_to_vector(code)
    assert vec.module.vector_dim == 2
    assert vec.module.base_ring.size == 2
    assert vec.edge_coeffs == code.edge_coeffs
    assert verify_solution(net, vec).solved
    assert semantic_verify(net, vec).solved
    back = vector_to_matrix_scalar(vec)
    assert codes.code_to_json(back) == codes.code_to_json(code)


def test_matrix_to_vector_requires_matrix_scalar(gf2, z4):
    code = identity_routing_code(pair_network(), gf2)
    with pytest.raises(ValueError):
        matrix_scalar_to_vector(code)
    # a dim-1 code over a field converts to itself (1x1 matrices = field)
    net = pair_network()
    as_mat = vector_to_matrix_scalar(code)
    assert as_mat.module.ring.size == 2
    assert verify_solution(net, as_mat).solved
    # but a scalar code over a non-field has no vector reading at all
    z4_code = identity_routing_code(net, z4)
    assert verify_solution(net, z4_code).solved
    with pytest.raises(ValueError):
        vector_to_matrix_scalar(z4_code)


def test_dim_sum_blocks(gf2):
    net, code = routing_code_dim_n(2, gf2)
    double = dim_sum(code, code)
    assert double.module.vector_dim == 4
    assert verify_solution(net, double).solved
    big = double.module.ring
    small = code.module.ring
    for e, coeffs in double.edge_coeffs.items():
        for c_big, c_small in zip(coeffs, code.edge_coeffs[e]):
            entries = big.mat_entries(c_big)
            sub = small.mat_entries(c_small)
            for i in range(4):
                for j in range(4):
                    if i < 2 and j < 2:
                        assert entries[i][j] == sub[i][j]
                    elif i >= 2 and j >= 2:
                        assert entries[i][j] == sub[i - 2][j - 2]
                    else:
                        assert entries[i][j] == 0


def test_dim_sum_requires_matching_shapes(gf2, gf3):
    _, a = routing_code_dim_n(2, gf2)
    _, b = routing_code_dim_n(2, gf3)
    with pytest.raises(ValueError):
        dim_sum(a, b)


def test_product_code_components(gf2, gf3):
    net = pair_network()
    a = identity_routing_code(net, gf2)
    b = identity_routing_code(net, gf3)
    prod = product_code([a, b])
    ring = prod.module.ring
    assert ring.size == 6
    assert verify_solution(net, prod).solved
    assert bruteforce.check_code(net, prod)
    for e in net.edges:
        for c, ca, cb in zip(prod.edge_coeffs[e], a.edge_coeffs[e],
                             b.edge_coeffs[e]):
            assert ring.prod_parts(c) == (ca, cb)


def test_hom_lift_through_quotients():
    z6 = construct_ring(IntegersMod(6))
    net = pair_network()
    code = identity_routing_code(net, z6)
    assert verify_solution(net, code).solved
    for target_desc in (PrimeField(2), PrimeField(3)):
        target = construct_ring(target_desc)
        homs = rings.find_homomorphisms(z6, target)
        assert len(homs) == 1
        lifted = hom_lift(code, homs[0], modules.scalar_module(target))
        assert lifted.module.ring.size == target.size
        assert verify_solution(net, lifted).solved
        assert bruteforce.check_code(net, lifted)


def test_hom_lift_rejects_wrong_domain(gf2, gf3):
    net = pair_network()
    code = identity_routing_code(net, gf3)
    homs = rings.find_homomorphisms(gf2, gf2)
    with pytest.raises(ValueError):
        hom_lift(code, homs[0], modules.scalar_module(gf2))


def test_hom_lift_rejects_unfaithful_source(z4, gf2):
    z2 = modules.cyclic(2)
    mod = modules.construct_module(z4, z2, lambda r, g: (r * g) % 2)
    net = pair_network()
    code = LinearCode(mod, {e: (1, 0) if e.ordinal == 0 else (0, 1)
                            for e in net.edges},
                      {("t", "m1"): (1, 0), ("t", "m2"): (0, 1)})
    homs = rings.find_homomorphisms(z4, gf2)
    with pytest.raises(ValueError, match="quotient"):
        hom_lift(code, homs[0], modules.scalar_module(gf2))


def test_quotient_by_annihilator(z4):
    z2 = modules.cyclic(2)
    mod = modules.construct_module(z4, z2, lambda r, g: (r * g) % 2)
    net = pair_network()
    code = LinearCode(mod, {e: (1, 0) if e.ordinal == 0 else (0, 1)
                            for e in net.edges},
                      {("t", "m1"): (1, 0), ("t", "m2"): (0, 1)})
    assert semantic_verify(net, code).solved
    reduced, hom = quotient_by_annihilator(code)
    assert reduced.module.is_faithful()
    assert reduced.module.ring.size == 2
    assert hom.domain.size == 4
    assert verify_solution(net, reduced).solved
    assert semantic_verify(net, reduced).solved


def test_simple_reduction_cases():
    ut = construct_ring(UpperTriangular(PrimeField(2), 2))
    simple, hom = simple_reduction(ut)
    assert simple.size < ut.size
    assert rings.radical(simple).elements == (0,)
    assert hom.mapping[0] == 0 and hom.mapping[ut.one] == simple.one

    m2 = construct_ring(MatrixRing(PrimeField(2), 2))
    same, hom2 = simple_reduction(m2)
    assert same.size == 16 and hom2.mapping == tuple(range(16))

    z12 = construct_ring(IntegersMod(12))
    s, hom3 = simple_reduction(z12)
    assert s.size == 3
    assert rings.semisimple_decompose(s) == [(1, 3)]


def test_transform_chain_preserves_solutions(gf2):
    # vector -> matrix-scalar -> product with itself -> factor projection
    net, vec = routing_code_dim_n(2, gf2)
    scalar = vector_to_matrix_scalar(vec)
    assert verify_solution(net, scalar).solved
    prod = product_code([scalar, scalar])
    assert verify_solution(net, prod).solved
    ring = prod.module.ring
    part = rings.RingHom(ring, scalar.module.ring,
                         tuple(ring.prod_parts(x)[0]
                               for x in range(ring.size)))
    back = hom_lift(prod, part, scalar.module)
    assert codes.code_to_json(back) == codes.code_to_json(scalar)
