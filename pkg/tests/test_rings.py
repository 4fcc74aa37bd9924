"""Ring constructors, axioms, radicals, and homomorphisms against
independent re-computations."""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from netring import networks, rings, solver
from netring.rings import (GaloisField, IntegersMod, MatrixRing, PrimeField,
                           Product, TableRing, UpperTriangular,
                           construct_ring, describe)

SMALL_DESCRIPTORS = [
    PrimeField(2), PrimeField(3), PrimeField(5),
    IntegersMod(4), IntegersMod(8), IntegersMod(9),
    GaloisField(2, 2), GaloisField(2, 3), GaloisField(3, 2),
    MatrixRing(PrimeField(2), 2),
    UpperTriangular(PrimeField(2), 2), UpperTriangular(PrimeField(3), 2),
    Product((PrimeField(2), PrimeField(3))),
    Product((IntegersMod(4), PrimeField(2))),
]


@pytest.mark.parametrize("desc", SMALL_DESCRIPTORS, ids=describe)
def test_axioms_hold(desc):
    ring = construct_ring(desc)
    report = rings.verify_ring_axioms(ring)
    assert report.ok, report.witnesses
    assert ring.add(0, 0) == 0
    assert ring.mul(1, 1) == 1 and ring.one == 1


def test_axioms_catch_broken_table():
    # corrupt one associativity cell of Z_3's multiplication
    add = tuple(tuple((a + b) % 3 for b in range(3)) for a in range(3))
    mul = [[(a * b) % 3 for b in range(3)] for a in range(3)]
    mul[2][2] = 2  # 2*2 should be 1
    ring = construct_ring(TableRing(add, tuple(map(tuple, mul))))
    report = rings.verify_ring_axioms(ring)
    assert not report.ok
    assert not all(report.axioms.values())
    assert report.witnesses


def test_zero_and_one_pinned_everywhere():
    for desc in SMALL_DESCRIPTORS:
        ring = construct_ring(desc)
        for x in range(ring.size):
            assert ring.add(0, x) == x
            assert ring.mul(1, x) == x and ring.mul(x, 1) == x


# --- irreducible moduli, rebuilt from scratch ------------------------------

def _poly_mod(num, den, p):
    num = list(num)
    dk = len(den) - 1
    while len(num) - 1 >= dk and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        shift = len(num) - 1 - dk
        lead = num[-1]  # den is monic
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p
        num.pop()
    return num


def _is_irreducible(poly, p):
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            if not any(_poly_mod(poly, div, p)):
                return False
    return True


def _least_irreducible(p, k):
    n = 0
    while True:
        tail, t = [], n
        for _ in range(k):
            tail.append(t % p)
            t //= p
        assert not t, f"no irreducible of degree {k} over GF({p})?"
        poly = tuple(tail) + (1,)
        if _is_irreducible(poly, p):
            return poly
        n += 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_builtin_moduli_are_least_irreducible(p):
    for k in range(2, 7):
        assert rings.IRREDUCIBLE[(p, k)] == _least_irreducible(p, k)


def test_modulus_choice_does_not_change_verdicts():
    # both irreducible monic quadratics x^2+1 and x^2+x+2 over GF(3)
    net = networks.choose_two_network(4)
    verdicts = []
    for poly in (None, (2, 1, 1)):
        field = construct_ring(GaloisField(3, 2, poly))
        verdicts.append(solver.solve_scalar(net, field).status)
    assert verdicts[0] == verdicts[1] == "solved"


def test_bad_modulus_rejected():
    with pytest.raises(ValueError):
        construct_ring(GaloisField(2, 2, (1, 0, 1)))  # x^2+1 = (x+1)^2


# --- radical against an independent Jacobson computation -------------------

def _units(ring):
    out = set()
    for u in range(ring.size):
        for v in range(ring.size):
            if ring.mul(u, v) == 1 and ring.mul(v, u) == 1:
                out.add(u)
                break
    return out


def _jacobson(ring):
    """x is in the radical iff 1 - r*x is a unit for every r."""
    units = _units(ring)
    out = []
    for x in range(ring.size):
        if all(ring.add(1, ring.neg(ring.mul(r, x))) in units
               for r in range(ring.size)):
            out.append(x)
    return tuple(out)


@pytest.mark.parametrize("desc", [
    IntegersMod(4), IntegersMod(8), IntegersMod(12),
    GaloisField(2, 3), MatrixRing(PrimeField(2), 2),
    UpperTriangular(PrimeField(2), 2), UpperTriangular(PrimeField(3), 2),
    Product((IntegersMod(4), PrimeField(3))),
], ids=describe)
def test_radical_matches_jacobson_oracle(desc):
    ring = construct_ring(desc)
    assert tuple(sorted(rings.radical(ring).elements)) == _jacobson(ring)


def test_quotient_by_radical_is_semisimple():
    ring = construct_ring(IntegersMod(12))
    rad = rings.radical(ring)
    assert sorted(rad.elements) == [0, 6]
    q, hom = rings.quotient(ring, rad)
    assert q.size == 6
    assert rings.semisimple_decompose(q) == [(1, 2), (1, 3)]
    assert hom.mapping[0] == 0 and hom.mapping[ring.one] == q.one


# --- homomorphisms against exhaustive map enumeration ----------------------

def _all_homs(r, s):
    found = []
    for mapping in itertools.product(range(s.size), repeat=r.size):
        if mapping[0] != 0 or mapping[1] != 1:
            continue
        if all(mapping[r.add(a, b)] == s.add(mapping[a], mapping[b])
               and mapping[r.mul(a, b)] == s.mul(mapping[a], mapping[b])
               for a in range(r.size) for b in range(r.size)):
            found.append(mapping)
    return sorted(found)


@pytest.mark.parametrize("src,dst", [
    (IntegersMod(4), IntegersMod(4)),
    (IntegersMod(4), GaloisField(2, 2)),
    (GaloisField(2, 2), GaloisField(2, 2)),
    (GaloisField(2, 2), IntegersMod(4)),
    (PrimeField(3), PrimeField(3)),
    (Product((PrimeField(2), PrimeField(2))), PrimeField(2)),
])
def test_hom_search_matches_exhaustive(src, dst):
    r, s = construct_ring(src), construct_ring(dst)
    got = sorted(h.mapping for h in rings.find_homomorphisms(r, s))
    assert got == _all_homs(r, s)


def test_homs_respect_identity_and_compose(gf2, gf4):
    homs = rings.find_homomorphisms(gf2, gf4)
    assert len(homs) == 1
    (h,) = homs
    assert h.mapping == (0, 1)
    frob = rings.find_homomorphisms(gf4, gf4)
    assert len(frob) == 2  # identity and squaring
    assert any(f.mapping == tuple(range(4)) for f in frob)


def test_isomorphism_distinguishes_order_four_rings():
    z4 = construct_ring(IntegersMod(4))
    f4 = construct_ring(GaloisField(2, 2))
    klein = construct_ring(Product((PrimeField(2), PrimeField(2))))
    assert rings.find_isomorphism(z4, f4) is None
    assert rings.find_isomorphism(f4, klein) is None
    add = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
    f4b = construct_ring(TableRing(add, f4.mul_table().tolist()))
    iso = rings.find_isomorphism(f4, f4b)
    assert iso is not None and iso.mapping[0] == 0


# --- catalog and decomposition ---------------------------------------------

def test_semisimple_catalog_counts_and_entries():
    counts = [len(rings.semisimple_catalog(2, k)) for k in range(1, 7)]
    assert counts == [1, 2, 3, 6, 8, 13]
    names = [describe(d) for d in rings.semisimple_catalog(2, 2)]
    assert names == ["GF(2^2)", "GF(2) x GF(2)"]
    names4 = [describe(d) for d in rings.semisimple_catalog(2, 4)]
    assert "M_2(GF(2))" in names4 and "GF(2^4)" in names4
    assert len(set(names4)) == 6


def test_semisimple_decompose_blocks():
    assert rings.semisimple_decompose(
        construct_ring(MatrixRing(PrimeField(2), 2))) == [(2, 2)]
    assert rings.semisimple_decompose(
        construct_ring(GaloisField(2, 2))) == [(1, 4)]
    assert rings.semisimple_decompose(
        construct_ring(IntegersMod(6))) == [(1, 2), (1, 3)]


def test_table_ring_reindexing():
    # Z_3 written with the identity parked at position 2
    order = [1, 2, 0]  # table position -> residue
    add = tuple(tuple(order.index((order[a] + order[b]) % 3)
                      for b in range(3)) for a in range(3))
    mul = tuple(tuple(order.index((order[a] * order[b]) % 3)
                      for b in range(3)) for a in range(3))
    ring = construct_ring(TableRing(add, mul))
    assert ring.add(0, 0) == 0 and ring.mul(1, 1) == 1
    for x in range(3):
        assert ring.mul(1, x) == x
    assert rings.find_isomorphism(ring, construct_ring(PrimeField(3)))


def test_descriptor_json_round_trip():
    for desc in SMALL_DESCRIPTORS:
        data = rings.descriptor_to_json(desc)
        back = rings.descriptor_from_json(data)
        assert construct_ring(back).size == construct_ring(desc).size
        assert describe(back) == describe(desc)


# --- property check over the table paths -----------------------------------

@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL_DESCRIPTORS), st.data())
def test_ring_identities_random_triples(desc, data):
    ring = construct_ring(desc)
    a = data.draw(st.integers(0, ring.size - 1))
    b = data.draw(st.integers(0, ring.size - 1))
    c = data.draw(st.integers(0, ring.size - 1))
    assert ring.add(a, b) == ring.add(b, a)
    assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
    assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
    assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b),
                                                   ring.mul(a, c))
    assert ring.add(a, ring.neg(a)) == 0
