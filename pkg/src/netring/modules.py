"""Finite abelian groups and (left) modules over finite rings.

Group elements are integers 0..size-1 with 0 the identity.  Groups built as
direct sums use a most-significant-first mixed-radix encoding over their
components, so component access is positional and deterministic.  A module
pairs a group with a ring action; the four module axioms can be verified
exhaustively, and the structured constructors (a ring acting on itself, the
column space R^k under k x k matrices) carry their axioms by construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import rings as _rings
from .rings import Ring, RingHom, TableRing, MatrixRing

GROUP_TABLE_CAP = 4096
CHECK_WORK_CAP = 200_000_000   # elementwise operations allowed per axiom sweep
EXHAUSTIVE_PAIR_CAP = 1 << 20  # |R| * |G| bound for exhaustive verification


class AbelianGroup:
    """A finite abelian group on indices 0..size-1 (0 = identity)."""

    def __init__(self, size: int, add: Callable[[int, int], int],
                 neg: Callable[[int], int], *, orders=None, components=None,
                 label: str = "group"):
        self.size = size
        self._add = add
        self._neg = neg
        self.orders = tuple(orders) if orders is not None else None
        self.components = tuple(components) if components is not None else None
        self.label = label
        self._add_table = None
        self._neg_table = None
        self._decomposition = None

    def __repr__(self):
        return f"AbelianGroup({self.label}, size={self.size})"

    def add(self, a: int, b: int) -> int:
        t = self._add_table
        if t is not None:
            return int(t[a, b])
        return self._add(a, b)

    def neg(self, a: int) -> int:
        t = self._neg_table
        if t is not None:
            return int(t[a])
        return self._neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def multiple(self, n: int, a: int) -> int:
        acc, base = 0, a
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    def element_order(self, a: int) -> int:
        x, c = a, 1
        if a == 0:
            return 1
        while x != 0:
            x = self.add(x, a)
            c += 1
        return c

    def add_table(self) -> np.ndarray:
        if self._add_table is None:
            if self.size > GROUP_TABLE_CAP:
                raise ValueError(
                    f"group of size {self.size} exceeds the dense-table cap")
            t = np.zeros((self.size, self.size), dtype=np.int64)
            for a in range(self.size):
                for b in range(self.size):
                    t[a, b] = self._add(a, b)
            self._add_table = t
            neg = np.zeros(self.size, dtype=np.int64)
            rows, cols = np.nonzero(t == 0)
            neg[rows] = cols
            self._neg_table = neg
        return self._add_table

    def parts(self, idx: int) -> tuple[int, ...]:
        if self.components is None:
            raise TypeError("group is not a direct sum")
        out = []
        for g in reversed(self.components):
            out.append(idx % g.size)
            idx //= g.size
        out.reverse()
        return tuple(out)

    def from_parts(self, parts) -> int:
        if self.components is None:
            raise TypeError("group is not a direct sum")
        acc = 0
        for g, v in zip(self.components, parts):
            acc = acc * g.size + v
        return acc

    def decomposition(self) -> tuple[int, ...]:
        """Invariant cyclic decomposition: sorted prime-power orders."""
        if self._decomposition is None:
            if self.orders is not None:
                out = []
                for n in self.orders:
                    for p, e in _rings._factorize(n).items():
                        out.append(p ** e)
                self._decomposition = tuple(sorted(out))
            else:
                self._decomposition = self._decompose_by_orders()
        return self._decomposition

    def _decompose_by_orders(self) -> tuple[int, ...]:
        if self.size > GROUP_TABLE_CAP:
            raise ValueError("decomposition of large closure-backed groups "
                             "needs declared orders")
        orders = [self.element_order(a) for a in range(self.size)]
        out = []
        for p in _rings._factorize(self.size):
            counts = [1]  # c_i = #elements killed by p^i
            i = 1
            while counts[-1] < self.size:
                c = sum(1 for o in orders if p ** i % o == 0)
                if c == counts[-1]:
                    break
                counts.append(c)
                i += 1
            dims = [round(math.log(counts[j] / counts[j - 1], p))
                    for j in range(1, len(counts))]
            dims.append(0)
            for j in range(1, len(dims)):
                exactly = dims[j - 1] - dims[j]
                out.extend([p ** j] * exactly)
        return tuple(sorted(out))


def cyclic(n: int) -> AbelianGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return AbelianGroup(n, lambda a, b: (a + b) % n, lambda a: (-a) % n,
                        orders=(n,), label=f"Z{n}")


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    if not groups:
        raise ValueError("direct sum needs at least one component")
    sizes = [g.size for g in groups]
    size = math.prod(sizes)

    def decode(idx):
        out = []
        for s in reversed(sizes):
            out.append(idx % s)
            idx //= s
        out.reverse()
        return out

    def encode(parts):
        acc = 0
        for s, v in zip(sizes, parts):
            acc = acc * s + v
        return acc

    def add(a, b):
        return encode([g.add(x, y) for g, x, y in zip(groups, decode(a), decode(b))])

    def neg(a):
        return encode([g.neg(x) for g, x in zip(groups, decode(a))])

    orders = None
    if all(g.orders is not None for g in groups):
        orders = tuple(o for g in groups for o in g.orders)
    label = " + ".join(g.label for g in groups)
    return AbelianGroup(size, add, neg, orders=orders, components=groups, label=label)


def additive_group(ring: Ring) -> AbelianGroup:
    g = AbelianGroup(ring.size, ring.add, ring.neg, label=f"add({ring.descriptor!r})")
    if ring.size <= GROUP_TABLE_CAP and ring._add_table is not None:
        g._add_table = ring._add_table
        g._neg_table = ring._neg_table
    return g


# ---------------------------------------------------------------------------

class ModuleAxiomError(ValueError):
    """An explicit action failed a module axiom; carries the axiom name and a
    witness tuple of element indices."""

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"module axiom violated: {axiom}, witness {witness}")


class Module:
    """A left module: `ring` acting on `group` through `action`."""

    def __init__(self, ring: Ring, group: AbelianGroup, action: Callable[[int, int], int],
                 *, label: str = "module"):
        self.ring = ring
        self.group = group
        self._action = action
        self.label = label
        self._act_table = None
        self._annihilator = None
        # populated by the structured constructors
        self.vector_dim: Optional[int] = None
        self.base_ring: Optional[Ring] = None

    def __repr__(self):
        return f"Module({self.label}, |R|={self.ring.size}, |G|={self.group.size})"

    def act(self, r: int, g: int) -> int:
        t = self._act_table
        if t is not None:
            return int(t[r, g])
        return self._action(r, g)

    def act_table(self) -> np.ndarray:
        if self._act_table is None:
            pairs = self.ring.size * self.group.size
            if pairs > EXHAUSTIVE_PAIR_CAP:
                raise ValueError(
                    f"action table of {pairs} entries exceeds the cap")
            t = np.zeros((self.ring.size, self.group.size), dtype=np.int64)
            for r in range(self.ring.size):
                for g in range(self.group.size):
                    t[r, g] = self._action(r, g)
            self._act_table = t
        return self._act_table

    def annihilator(self) -> tuple[int, ...]:
        """Ring elements acting as zero on every group element."""
        if self._annihilator is None:
            out = []
            for r in range(self.ring.size):
                if all(self.act(r, g) == 0 for g in range(self.group.size)):
                    out.append(r)
            self._annihilator = tuple(out)
        return self._annihilator

    def is_faithful(self) -> bool:
        return self.annihilator() == (0,)


def construct_module(ring: Ring, group: AbelianGroup, action, *,
                     check: bool = True) -> Module:
    """Build a module from an explicit action, verifying the axioms.

    The check enumerates every instance of all four axioms (identity is
    skipped for rngs); the first failure raises ModuleAxiomError naming the
    axiom and a witness.  Verification is refused (rather than skipped) when
    the instance count is out of reach.
    """
    if callable(action):
        mod = Module(ring, group, action)
    else:
        table = np.asarray(action, dtype=np.int64)
        if table.shape != (ring.size, group.size):
            raise ValueError("action table must be |R| x |G|")
        mod = Module(ring, group, lambda r, g: int(table[r, g]))
        mod._act_table = table
    if check:
        verify_module_axioms(mod)
    return mod


def verify_module_axioms(mod: Module) -> None:
    nR, nG = mod.ring.size, mod.group.size
    if nR * nG > EXHAUSTIVE_PAIR_CAP:
        raise ValueError(
            f"|R|*|G| = {nR * nG} exceeds the exhaustive verification bound "
            f"{EXHAUSTIVE_PAIR_CAP}")
    if max(nR * nG * nG, nR * nR * nG) > CHECK_WORK_CAP:
        raise ValueError(
            "axiom sweep would exceed the work cap; use a structured "
            "constructor whose axioms hold by construction")
    A = mod.act_table()
    TG = mod.group.add_table()
    TR = mod.ring.add_table()
    MR = mod.ring.mul_table()

    for r in range(nR):
        row = A[r]
        lhs = row[TG]                       # r*(g+h)
        rhs = TG[row[:, None], row[None, :]]  # r*g + r*h
        if not (lhs == rhs).all():
            g, h = np.argwhere(lhs != rhs)[0]
            raise ModuleAxiomError("distributes-over-group-sum",
                                   (r, int(g), int(h)))

    for r in range(nR):
        lhs = A[TR[r]]                      # (r+s)*g, rows indexed by s
        rhs = TG[A[r][None, :], A]          # r*g + s*g
        if not (lhs == rhs).all():
            s, g = np.argwhere(lhs != rhs)[0]
            raise ModuleAxiomError("distributes-over-ring-sum",
                                   (r, int(s), int(g)))

    for r in range(nR):
        lhs = A[MR[r]]                      # (r*s)*g
        rhs = A[r][A]                       # r*(s*g)
        if not (lhs == rhs).all():
            s, g = np.argwhere(lhs != rhs)[0]
            raise ModuleAxiomError("associativity-of-action",
                                   (r, int(s), int(g)))

    if mod.ring.unital:
        row = A[mod.ring.one]
        if not (row == np.arange(nG)).all():
            g = int((row != np.arange(nG)).argmax())
            raise ModuleAxiomError("identity-acts-trivially",
                                   (mod.ring.one, g))


def scalar_module(ring: Ring) -> Module:
    """The ring acting on its own additive group by left multiplication."""
    mod = Module(ring, additive_group(ring), ring.mul,
                 label=f"scalar({_rings.describe(ring.descriptor)})")
    mod.vector_dim = 1 if ring.is_field() else None
    mod.base_ring = ring if mod.vector_dim else None
    if ring.size <= GROUP_TABLE_CAP and ring._mul_table is not None:
        mod._act_table = ring._mul_table
    return mod


def vector_module(ring: Ring, k: int) -> Module:
    """Column space R^k acted on by the k x k matrix ring over R."""
    if k < 1:
        raise ValueError("dimension must be at least 1")
    mat = _rings.construct_ring(MatrixRing(ring.descriptor, k))
    group = direct_sum(*[additive_group(ring) for _ in range(k)])

    def act(midx: int, gidx: int) -> int:
        entries = mat.mat_entries(midx)
        vec = group.parts(gidx)
        out = []
        for r in range(k):
            acc = 0
            for c in range(k):
                acc = ring.add(acc, ring.mul(entries[r][c], vec[c]))
            out.append(acc)
        return group.from_parts(out)

    mod = Module(mat, group, act,
                 label=f"vector({_rings.describe(ring.descriptor)}, {k})")
    mod.vector_dim = k
    mod.base_ring = ring
    # a nonzero matrix moves some basis column, so the action is faithful;
    # record that instead of scanning |M_k(R)| elements lazily
    mod._annihilator = (0,)
    return mod


def is_faithful(mod: Module) -> bool:
    return mod.is_faithful()


def annihilator_quotient(mod: Module) -> tuple[Ring, RingHom, Module]:
    """Quotient the ring by the annihilator; the induced action is faithful."""
    ann = mod.annihilator()
    ideal = _rings.Ideal(mod.ring, ann, "two-sided")
    q, hom = _rings.quotient(mod.ring, ideal)
    preimage = [-1] * q.size
    for r in range(mod.ring.size):
        if preimage[hom(r)] < 0:
            preimage[hom(r)] = r

    def act(s: int, g: int) -> int:
        return mod.act(preimage[s], g)

    out = Module(q, mod.group, act, label=f"{mod.label}/ann")
    out.vector_dim = mod.vector_dim
    out.base_ring = mod.base_ring
    if not out.is_faithful():
        raise AssertionError("annihilator quotient failed to produce a "
                             "faithful module")
    return q, hom, out


def submodules(mod: Module) -> list[tuple[int, ...]]:
    """All submodules (as sorted index tuples), smallest first."""
    nG = mod.group.size
    if nG > GROUP_TABLE_CAP:
        raise ValueError(f"submodule enumeration capped at |G| = {GROUP_TABLE_CAP}")
    TG = mod.group.add_table()
    A = mod.act_table()

    def span(seed) -> np.ndarray:
        mask = np.zeros(nG, dtype=bool)
        mask[0] = True
        frontier = [0]
        for s in set(seed):
            if not mask[s]:
                mask[s] = True
                frontier.append(s)
        while frontier:
            x = frontier.pop()
            members = np.flatnonzero(mask)
            for batch in (TG[x, members], A[:, x]):
                for v in np.unique(batch):
                    v = int(v)
                    if not mask[v]:
                        mask[v] = True
                        frontier.append(v)
        return mask

    seen = {}
    for g in range(nG):
        m = span([g])
        seen.setdefault(m.tobytes(), m)
    grew = True
    while grew:
        grew = False
        snapshot = list(seen.values())
        for i in range(len(snapshot)):
            for j in range(i + 1, len(snapshot)):
                u = snapshot[i] | snapshot[j]
                if u.tobytes() in seen:
                    continue
                m = span(np.flatnonzero(u))
                if seen.setdefault(m.tobytes(), m) is m:
                    grew = True
    out = [tuple(int(x) for x in np.flatnonzero(m)) for m in seen.values()]
    out.sort(key=lambda t: (len(t), t))
    return out


# ---------------------------------------------------------------------------
# serialization (the shapes the CLI and code files exchange)

def module_to_json(mod: Module):
    if mod.vector_dim is not None and mod.base_ring is not None:
        if mod.vector_dim == 1 and mod.ring is mod.base_ring:
            return {"kind": "scalar",
                    "ring": _rings.descriptor_to_json(mod.ring.descriptor)}
        return {"kind": "vector",
                "ring": _rings.descriptor_to_json(mod.base_ring.descriptor),
                "dim": mod.vector_dim}
    if mod.ring.size * mod.group.size <= EXHAUSTIVE_PAIR_CAP \
            and mod.group.size <= GROUP_TABLE_CAP:
        return {"kind": "table",
                "ring": _rings.descriptor_to_json(mod.ring.descriptor),
                "group": mod.group.add_table().tolist(),
                "action": mod.act_table().tolist()}
    raise ValueError("module too large to serialize as a table")


def module_from_json(data) -> Module:
    kind = data.get("kind")
    if kind == "scalar":
        return scalar_module(_rings.construct_ring(
            _rings.descriptor_from_json(data["ring"])))
    if kind == "vector":
        return vector_module(_rings.construct_ring(
            _rings.descriptor_from_json(data["ring"])), int(data["dim"]))
    if kind == "table":
        ring = _rings.construct_ring(_rings.descriptor_from_json(data["ring"]))
        group = group_from_table(data["group"])
        return construct_module(ring, group, data["action"])
    raise ValueError(f"unknown module kind: {kind!r}")


def group_from_table(table) -> AbelianGroup:
    """Abelian group from an explicit addition table (0 must be identity)."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    if t.shape != (n, n):
        raise ValueError("group table must be square")
    if not ((t[0] == np.arange(n)).all() and (t[:, 0] == np.arange(n)).all()):
        raise ValueError("index 0 must be the group identity")
    if not (t == t.T).all():
        raise ValueError("group table must be commutative")
    neg = np.zeros(n, dtype=np.int64)
    rows, cols = np.nonzero(t == 0)
    neg[rows] = cols
    g = AbelianGroup(n, lambda a, b: int(t[a, b]), lambda a: int(neg[a]),
                     label=f"table group of size {n}")
    g._add_table = t
    g._neg_table = neg
    return g
