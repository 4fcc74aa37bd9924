"""Solution-preserving transformations between codes.

Each transform rewrites a working code into a working code over a related
algebra: pushing coefficients through a ring homomorphism, reading a scalar
code over a matrix ring as a vector code over the entry ring (and back),
stacking two vector codes block-diagonally, running codes over product rings
componentwise, and quotienting away an annihilator or a maximal ideal.
"""
from __future__ import annotations

from . import codes as _codes
from . import modules as _modules
from . import rings as _rings
from .codes import LinearCode
from .modules import Module
from .rings import Ring, RingHom


def _map_code(code: LinearCode, module: Module, fn) -> LinearCode:
    edges = {e: tuple(fn(c) for c in cs) for e, cs in code.edge_coeffs.items()}
    decs = {key: tuple(fn(c) for c in cs) for key, cs in code.decodings.items()}
    return LinearCode(module, edges, decs)


def hom_lift(code: LinearCode, hom: RingHom, target_module: Module) -> LinearCode:
    """Push a code through a ring homomorphism, coefficient by coefficient.

    The source module must be faithful (so that the code's correctness is a
    system of coefficient identities, which any homomorphism preserves)."""
    if code.module.ring.descriptor != hom.domain.descriptor:
        raise ValueError("homomorphism domain does not match the code's ring")
    if target_module.ring.descriptor != hom.codomain.descriptor:
        raise ValueError("target module is not over the homomorphism codomain")
    if not code.module.is_faithful():
        raise ValueError("lifting needs a faithful source module; apply "
                         "quotient_by_annihilator first")
    return _map_code(code, target_module, hom.mapping.__getitem__)


def matrix_scalar_to_vector(code: LinearCode) -> LinearCode:
    """Reinterpret a scalar code over a k x k matrix ring as a k-dimensional
    vector code over the entry ring; coefficients are untouched."""
    ring = code.module.ring
    if ring.kind != "matrix":
        raise ValueError("expected a scalar code over a matrix ring")
    if code.module.group.size != ring.size:
        raise ValueError("expected the module to be the ring itself")
    for probe in range(0, ring.size, max(1, ring.size // 16)):
        if code.module.act(probe, 1) != ring.mul(probe, 1):
            raise ValueError("module action is not ring multiplication")
    return _map_code(code, _modules.vector_module(ring.inner, ring.k), lambda c: c)


def vector_to_matrix_scalar(code: LinearCode) -> LinearCode:
    """Inverse reinterpretation: a vector code becomes a scalar code over its
    coefficient matrix ring."""
    if code.module.vector_dim is None:
        raise ValueError("expected a vector code")
    return _map_code(code, _modules.scalar_module(code.module.ring), lambda c: c)


def dim_sum(code_a: LinearCode, code_b: LinearCode) -> LinearCode:
    """Block-diagonal sum of two vector codes over the same base ring."""
    ma, mb = code_a.module, code_b.module
    if ma.vector_dim is None or mb.vector_dim is None:
        raise ValueError("both inputs must be vector codes")
    if ma.base_ring.descriptor != mb.base_ring.descriptor:
        raise ValueError("vector codes live over different base rings")
    if set(code_a.edge_coeffs) != set(code_b.edge_coeffs) \
            or set(code_a.decodings) != set(code_b.decodings):
        raise ValueError("codes do not cover the same network")
    ka, kb = ma.vector_dim, mb.vector_dim
    k = ka + kb
    out = _modules.vector_module(ma.base_ring, k)

    def block(ca: int, cb: int) -> int:
        ea = _codes._coeff_block(ma, ca)
        eb = _codes._coeff_block(mb, cb)
        rows = [[0] * k for _ in range(k)]
        for r in range(ka):
            for c in range(ka):
                rows[r][c] = ea[r][c]
        for r in range(kb):
            for c in range(kb):
                rows[ka + r][ka + c] = eb[r][c]
        return out.ring.mat_from_entries(rows)

    edges = {e: tuple(block(ca, cb) for ca, cb in
                      zip(code_a.edge_coeffs[e], code_b.edge_coeffs[e]))
             for e in code_a.edge_coeffs}
    decs = {key: tuple(block(ca, cb) for ca, cb in
                       zip(code_a.decodings[key], code_b.decodings[key]))
            for key in code_a.decodings}
    return LinearCode(out, edges, decs)


def product_code(codes: list[LinearCode]) -> LinearCode:
    """Run several codes on the same network side by side, over the product
    of their rings acting componentwise on the product of their groups."""
    if not codes:
        raise ValueError("product of no codes")
    keys = set(codes[0].edge_coeffs)
    dkeys = set(codes[0].decodings)
    for c in codes[1:]:
        if set(c.edge_coeffs) != keys or set(c.decodings) != dkeys:
            raise ValueError("codes do not cover the same network")
    ring = _rings.construct_ring(
        _rings.Product(tuple(c.module.ring.descriptor for c in codes)))
    group = _modules.direct_sum(*[c.module.group for c in codes])
    mods = [c.module for c in codes]

    def act(r: int, g: int) -> int:
        rp = ring.prod_parts(r)
        gp = group.parts(g)
        return group.from_parts([m.act(a, b) for m, a, b in zip(mods, rp, gp)])

    module = Module(ring, group, act,
                    label=" x ".join(m.label for m in mods))

    def merge(per_code):
        return ring.prod_from_parts(per_code)

    edges = {e: tuple(merge([c.edge_coeffs[e][i] for c in codes])
                      for i in range(len(codes[0].edge_coeffs[e])))
             for e in keys}
    decs = {key: tuple(merge([c.decodings[key][i] for c in codes])
                       for i in range(len(codes[0].decodings[key])))
            for key in dkeys}
    return LinearCode(module, edges, decs)


def quotient_by_annihilator(code: LinearCode) -> tuple[LinearCode, RingHom]:
    """Replace the ring by ring/annihilator; the induced code is over a
    faithful module and decodes exactly as before."""
    q, hom, faithful = _modules.annihilator_quotient(code.module)
    return _map_code(code, faithful, hom.mapping.__getitem__), hom


def simple_reduction(ring: Ring) -> tuple[Ring, RingHom]:
    """Quotient onto the largest simple image (smallest maximal two-sided
    ideal, ties broken by element order); the identity when already simple."""
    ideals = _rings.two_sided_ideals(ring)
    maxi = _rings.maximal_proper(ideals)
    maxi.sort(key=lambda i: (len(i.elements), i.elements))
    if not maxi:
        return ring, _rings.identity_hom(ring)
    chosen = maxi[0]
    if chosen.elements == (0,):
        return ring, _rings.identity_hom(ring)
    return _rings.quotient(ring, chosen)
