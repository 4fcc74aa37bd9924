"""Finite unital rings (and rngs) behind a uniform element-index interface.

Every ring element is addressed by an integer 0..size-1.  Index 0 is always
the additive identity and index 1 the multiplicative identity whenever the
ring has one; the remaining elements keep the natural coordinate order of
their constructor (residues ascending, polynomial coefficient vectors by
ascending integer encoding, matrix entries row-major most-significant-first,
product components most-significant-first).  Constructors cover integers mod
n, prime and Galois fields, full and upper-triangular matrix rings, finite
products, and explicit operation tables (with a flag for rngs, i.e. rings
without an identity).  Structural queries cover axiom verification, ideal
lattices, the radical, quotients, homomorphism and isomorphism search, the
catalogue of semisimple rings of prime-power order, and decomposition into
prime-power blocks via central idempotents.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

TABLE_CAP = 4096      # largest size for which dense operation tables are built
AXIOM_CAP = 4096      # default bound for exhaustive axiom verification
IDEAL_CAP = 4096      # largest size for which ideal lattices are enumerated
HOM_CAP = 256         # default bound on the domain of homomorphism searches


# ---------------------------------------------------------------------------
# descriptors

@dataclass(frozen=True)
class PrimeField:
    p: int


@dataclass(frozen=True)
class GaloisField:
    """GF(p^k); poly holds the modulus coefficients c_0..c_k ascending.

    poly=None selects the built-in modulus: the lexicographically least monic
    irreducible, ordered by the integer encoding sum(c_i * p^i) of the
    non-leading coefficients.
    """
    p: int
    k: int
    poly: Optional[tuple[int, ...]] = None

    def __init__(self, p, k, poly=None):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "poly", tuple(poly) if poly is not None else None)


@dataclass(frozen=True)
class IntegersMod:
    n: int


@dataclass(frozen=True)
class MatrixRing:
    inner: "RingDescriptor"
    k: int


@dataclass(frozen=True)
class UpperTriangular:
    field: "RingDescriptor"
    k: int


@dataclass(frozen=True)
class Product:
    factors: tuple["RingDescriptor", ...]

    def __init__(self, factors):
        object.__setattr__(self, "factors", tuple(factors))


@dataclass(frozen=True)
class TableRing:
    """Explicit operation tables; `one` is the identity's position in the
    tables as given (discovered when omitted), `unital=False` marks a rng."""
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    one: Optional[int] = None
    unital: bool = True

    def __init__(self, add, mul, one=None, unital=True):
        object.__setattr__(self, "add", tuple(tuple(row) for row in add))
        object.__setattr__(self, "mul", tuple(tuple(row) for row in mul))
        object.__setattr__(self, "one", one)
        object.__setattr__(self, "unital", unital)


RingDescriptor = Union[
    PrimeField, GaloisField, IntegersMod, MatrixRing, UpperTriangular, Product, TableRing
]


# built-in Galois moduli (lex-least monic irreducible, coefficients c_0..c_k).
# Regenerated from scratch by a unit test; do not edit by hand.
IRREDUCIBLE = {
    (2, 1): (0, 1), (2, 2): (1, 1, 1), (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1), (2, 5): (1, 0, 1, 0, 0, 1), (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 1): (0, 1), (3, 2): (1, 0, 1), (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1), (3, 5): (1, 2, 0, 0, 0, 1), (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 1): (0, 1), (5, 2): (2, 0, 1), (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1), (5, 5): (1, 4, 0, 0, 0, 1), (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (7, 1): (0, 1), (7, 2): (1, 0, 1), (7, 3): (2, 0, 0, 1),
    (7, 4): (1, 1, 0, 0, 1), (7, 5): (3, 1, 0, 0, 0, 1), (7, 6): (2, 0, 0, 0, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mul_mod(a, b, mod, p):
    k = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            for j in range(k + 1):
                res[i - k + j] = (res[i - k + j] - c * mod[j]) % p
    res = res[:k]
    return res + [0] * (k - len(res))


def poly_is_irreducible(coeffs, p: int) -> bool:
    """Monic polynomial over GF(p) irreducible?  (x^(p^d) fixed-point test.)"""
    k = len(coeffs) - 1
    if k < 1 or coeffs[-1] != 1:
        return False
    if k == 1:
        return True

    def frobenius_power(e):
        cur = ([0, 1] + [0] * (k - 2))[:k]
        for _ in range(e):
            out = ([1] + [0] * (k - 1))
            base, n = cur[:], p
            while n:
                if n & 1:
                    out = _poly_mul_mod(out, base, coeffs, p)
                base = _poly_mul_mod(base, base, coeffs, p)
                n >>= 1
            cur = out
        return cur

    x = ([0, 1] + [0] * (k - 2))[:k]
    if frobenius_power(k) != x:
        return False
    for d in range(2, k + 1):
        if k % d == 0 and is_prime(d) and frobenius_power(k // d) == x:
            return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Built-in GF(p^k) modulus; computed by search when outside the table."""
    if (p, k) in IRREDUCIBLE:
        return IRREDUCIBLE[(p, k)]
    n = 0
    while True:
        c, t = [], n
        for _ in range(k):
            c.append(t % p)
            t //= p
        if t:
            raise ValueError(f"no irreducible polynomial found for p={p} k={k}")
        coeffs = tuple(c) + (1,)
        if poly_is_irreducible(coeffs, p):
            return coeffs
        n += 1


# ---------------------------------------------------------------------------
# the ring itself

def _pin(nat: int, one_nat: int) -> int:
    if nat == 0:
        return 0
    if nat == one_nat:
        return 1
    return nat + 1 - (nat > one_nat)


def _unpin(idx: int, one_nat: int) -> int:
    if idx == 0:
        return 0
    if idx == 1:
        return one_nat
    return idx - 1 if idx - 1 < one_nat else idx


class Ring:
    """A finite ring; construct through construct_ring()."""

    def __init__(self, descriptor, kind, size, unital, add, neg, mul, one_nat=1):
        self.descriptor = descriptor
        self.kind = kind
        self.size = size
        self.unital = unital
        self.one = (1 if size > 1 else 0) if unital else None
        self._add = add
        self._neg = neg
        self._mul = mul
        self._one_nat = one_nat
        self._add_table = None
        self._mul_table = None
        self._neg_table = None
        self._inv_table = None
        self._char = None
        self._commutative = None
        # structure hooks filled in by the constructor where they apply
        self.inner: Optional[Ring] = None
        self.k: Optional[int] = None
        self.factors: Optional[tuple[Ring, ...]] = None
        self.input_index_map: Optional[tuple[int, ...]] = None

    def __repr__(self):
        return f"Ring({self.descriptor!r}, size={self.size})"

    # -- arithmetic on canonical indices

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

    def mul(self, a: int, b: int) -> int:
        t = self._mul_table
        if t is not None:
            return int(t[a, b])
        return self._mul(a, b)

    def scalar_multiple(self, n: int, a: int) -> int:
        """n-fold additive multiple n*a (n may exceed the characteristic)."""
        acc, base = 0, a
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    def power(self, a: int, n: int) -> int:
        acc, base = self.one if self.unital else None, a
        if acc is None:
            raise ValueError("power needs a unital ring")
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    # -- dense tables (lazy; only for sizes <= TABLE_CAP)

    def has_tables(self) -> bool:
        return self.size <= TABLE_CAP

    def add_table(self) -> np.ndarray:
        if self._add_table is None:
            self._build_tables()
        return self._add_table

    def mul_table(self) -> np.ndarray:
        if self._mul_table is None:
            self._build_tables()
        return self._mul_table

    def neg_table(self) -> np.ndarray:
        if self._neg_table is None:
            self._build_tables()
        return self._neg_table

    def _build_tables(self):
        if self.size > TABLE_CAP:
            raise ValueError(
                f"ring of size {self.size} exceeds the dense-table cap {TABLE_CAP}")
        add, mul = _dense_tables(self)
        self._add_table = add
        self._mul_table = mul
        neg = np.zeros(self.size, dtype=add.dtype)
        rows, cols = np.nonzero(add == 0)
        neg[rows] = cols
        self._neg_table = neg

    # -- derived structure

    def characteristic(self) -> int:
        if self._char is None:
            if self.unital and self.size > 1:
                c, x = 1, self.one
                while x != 0:
                    x = self.add(x, self.one)
                    c += 1
                self._char = c
            elif self.size == 1:
                self._char = 1
            else:
                c = 1
                for a in range(self.size):
                    order, x = 1, a
                    while x != 0:
                        x = self.add(x, a)
                        order += 1
                    c = math.lcm(c, order)
                self._char = c
        return self._char

    def is_commutative(self) -> bool:
        if self._commutative is None:
            self._commutative = _commutative(self)
        return self._commutative

    def is_field(self) -> bool:
        if not self.unital or self.size < 2:
            return False
        if self.kind in ("prime_field", "galois_field"):
            return True
        if self.kind == "integers_mod":
            return is_prime(self.size)
        if self.kind in ("matrix", "upper_triangular") and self.k > 1:
            return False
        if self.kind == "product" and len(self.factors) > 1:
            return False
        if not self.is_commutative():
            return False
        return all(1 in (self.mul(a, b) for b in range(self.size))
                   for a in range(1, self.size))

    def inverse(self, a: int) -> int:
        """Multiplicative inverse (fields and units of table-capable rings)."""
        if self._inv_table is None:
            mul = self.mul_table()
            inv = np.full(self.size, -1, dtype=np.int64)
            rows, cols = np.nonzero(mul == 1)
            inv[rows] = cols
            self._inv_table = inv
        v = int(self._inv_table[a])
        if v < 0:
            raise ValueError(f"element {a} is not a unit")
        return v

    def units(self) -> list[int]:
        mul = self.mul_table()
        return [a for a in range(self.size) if 1 in mul[a]]

    # -- structure accessors (raise TypeError on the wrong kind)

    def field_coeffs(self, idx: int) -> tuple[int, ...]:
        if self.kind != "galois_field":
            raise TypeError("field_coeffs needs a galois_field ring")
        p, k = self.descriptor.p, self.descriptor.k
        t, out = idx, []
        for _ in range(k):
            out.append(t % p)
            t //= p
        return tuple(out)

    def field_from_coeffs(self, coeffs) -> int:
        if self.kind != "galois_field":
            raise TypeError("field_from_coeffs needs a galois_field ring")
        p = self.descriptor.p
        acc = 0
        for c in reversed(tuple(coeffs)):
            acc = acc * p + c % p
        return acc

    def mat_entries(self, idx: int) -> tuple[tuple[int, ...], ...]:
        """k x k entry grid of a matrix or upper-triangular ring element."""
        if self.kind == "matrix":
            nat = _unpin(idx, self._one_nat)
            s, k = self.inner.size, self.k
            flat = []
            for _ in range(k * k):
                flat.append(nat % s)
                nat //= s
            flat.reverse()
            return tuple(tuple(flat[r * k:(r + 1) * k]) for r in range(k))
        if self.kind == "upper_triangular":
            nat = _unpin(idx, self._one_nat)
            s, k = self.inner.size, self.k
            count = k * (k + 1) // 2
            flat = []
            for _ in range(count):
                flat.append(nat % s)
                nat //= s
            flat.reverse()
            rows = [[0] * k for _ in range(k)]
            pos = 0
            for r in range(k):
                for c in range(r, k):
                    rows[r][c] = flat[pos]
                    pos += 1
            return tuple(tuple(row) for row in rows)
        raise TypeError("mat_entries needs a matrix or upper_triangular ring")

    def mat_from_entries(self, rows) -> int:
        rows = tuple(tuple(r) for r in rows)
        s, k = self.inner.size, self.k
        if self.kind == "matrix":
            nat = 0
            for r in range(k):
                for c in range(k):
                    nat = nat * s + rows[r][c]
            return _pin(nat, self._one_nat)
        if self.kind == "upper_triangular":
            nat = 0
            for r in range(k):
                for c in range(k):
                    if c < r:
                        if rows[r][c] != 0:
                            raise ValueError("entry below the diagonal must be zero")
                    else:
                        nat = nat * s + rows[r][c]
            return _pin(nat, self._one_nat)
        raise TypeError("mat_from_entries needs a matrix or upper_triangular ring")

    def matrix_unit(self, r: int, c: int, scale: int = 1) -> int:
        """The matrix with `scale` at (r, c) and zeros elsewhere."""
        k = self.k
        rows = [[0] * k for _ in range(k)]
        rows[r][c] = scale
        return self.mat_from_entries(rows)

    def prod_parts(self, idx: int) -> tuple[int, ...]:
        if self.kind != "product":
            raise TypeError("prod_parts needs a product ring")
        nat = _unpin(idx, self._one_nat)
        parts = []
        for f in reversed(self.factors):
            parts.append(nat % f.size)
            nat //= f.size
        parts.reverse()
        return tuple(parts)

    def prod_from_parts(self, parts) -> int:
        if self.kind != "product":
            raise TypeError("prod_from_parts needs a product ring")
        nat = 0
        for f, v in zip(self.factors, parts):
            nat = nat * f.size + v
        return _pin(nat, self._one_nat)


# ---------------------------------------------------------------------------
# construction

def construct_ring(descriptor: RingDescriptor) -> Ring:
    """Build a ring from its descriptor (deterministic element indexing)."""
    if isinstance(descriptor, PrimeField):
        p = descriptor.p
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return Ring(descriptor, "prime_field", p, True,
                    lambda a, b: (a + b) % p, lambda a: (-a) % p,
                    lambda a, b: (a * b) % p)

    if isinstance(descriptor, IntegersMod):
        n = descriptor.n
        if n < 2:
            raise ValueError("modulus must be at least 2")
        return Ring(descriptor, "integers_mod", n, True,
                    lambda a, b: (a + b) % n, lambda a: (-a) % n,
                    lambda a, b: (a * b) % n)

    if isinstance(descriptor, GaloisField):
        return _construct_galois(descriptor)

    if isinstance(descriptor, MatrixRing):
        return _construct_matrix(descriptor)

    if isinstance(descriptor, UpperTriangular):
        return _construct_upper_triangular(descriptor)

    if isinstance(descriptor, Product):
        return _construct_product(descriptor)

    if isinstance(descriptor, TableRing):
        return _construct_table(descriptor)

    raise TypeError(f"not a ring descriptor: {descriptor!r}")


def _construct_galois(desc: GaloisField) -> Ring:
    p, k = desc.p, desc.k
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be at least 1")
    poly = desc.poly if desc.poly is not None else default_modulus(p, k)
    poly = tuple(c % p for c in poly[:-1]) + (poly[-1],)
    if len(poly) != k + 1 or poly[-1] != 1:
        raise ValueError("modulus must be monic of degree k")
    if not poly_is_irreducible(poly, p):
        raise ValueError(f"modulus {poly} is reducible over GF({p})")
    size = p ** k

    def decode(idx):
        out, t = [], idx
        for _ in range(k):
            out.append(t % p)
            t //= p
        return out

    def encode(coeffs):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * p + c % p
        return acc

    def add(a, b):
        return encode([(x + y) % p for x, y in zip(decode(a), decode(b))])

    def neg(a):
        return encode([(-x) % p for x in decode(a)])

    def mul(a, b):
        return encode(_poly_mul_mod(decode(a), decode(b), poly, p))

    ring = Ring(desc, "galois_field", size, True, add, neg, mul)
    ring.modulus = poly
    return ring


def _construct_matrix(desc: MatrixRing) -> Ring:
    if desc.k < 1:
        raise ValueError("matrix dimension must be at least 1")
    inner = construct_ring(desc.inner)
    if not inner.unital:
        raise ValueError("matrix rings need a unital entry ring")
    k, s = desc.k, inner.size
    size = s ** (k * k)
    one_nat = 0
    for r in range(k):
        for c in range(k):
            one_nat = one_nat * s + (1 if r == c else 0)

    def decode(nat):
        flat = []
        for _ in range(k * k):
            flat.append(nat % s)
            nat //= s
        flat.reverse()
        return flat

    def encode(flat):
        acc = 0
        for v in flat:
            acc = acc * s + v
        return acc

    def add(a, b):
        ea, eb = decode(_unpin(a, one_nat)), decode(_unpin(b, one_nat))
        return _pin(encode([inner.add(x, y) for x, y in zip(ea, eb)]), one_nat)

    def neg(a):
        return _pin(encode([inner.neg(x) for x in decode(_unpin(a, one_nat))]), one_nat)

    def mul(a, b):
        ea, eb = decode(_unpin(a, one_nat)), decode(_unpin(b, one_nat))
        out = []
        for r in range(k):
            for c in range(k):
                acc = 0
                for t in range(k):
                    acc = inner.add(acc, inner.mul(ea[r * k + t], eb[t * k + c]))
                out.append(acc)
        return _pin(encode(out), one_nat)

    ring = Ring(desc, "matrix", size, True, add, neg, mul, one_nat)
    ring.inner = inner
    ring.k = k
    return ring


def _construct_upper_triangular(desc: UpperTriangular) -> Ring:
    if desc.k < 1:
        raise ValueError("matrix dimension must be at least 1")
    inner = construct_ring(desc.field)
    if not inner.is_field():
        raise ValueError("upper-triangular rings are built over a field")
    k, s = desc.k, inner.size
    slots = [(r, c) for r in range(k) for c in range(r, k)]
    size = s ** len(slots)
    one_nat = 0
    for (r, c) in slots:
        one_nat = one_nat * s + (1 if r == c else 0)

    def decode(nat):
        flat = []
        for _ in range(len(slots)):
            flat.append(nat % s)
            nat //= s
        flat.reverse()
        grid = [[0] * k for _ in range(k)]
        for (r, c), v in zip(slots, flat):
            grid[r][c] = v
        return grid

    def encode(grid):
        acc = 0
        for (r, c) in slots:
            acc = acc * s + grid[r][c]
        return acc

    def add(a, b):
        ga, gb = decode(_unpin(a, one_nat)), decode(_unpin(b, one_nat))
        return _pin(encode([[inner.add(x, y) for x, y in zip(ra, rb)]
                            for ra, rb in zip(ga, gb)]), one_nat)

    def neg(a):
        g = decode(_unpin(a, one_nat))
        return _pin(encode([[inner.neg(x) for x in row] for row in g]), one_nat)

    def mul(a, b):
        ga, gb = decode(_unpin(a, one_nat)), decode(_unpin(b, one_nat))
        out = [[0] * k for _ in range(k)]
        for r in range(k):
            for c in range(r, k):
                acc = 0
                for t in range(r, c + 1):
                    acc = inner.add(acc, inner.mul(ga[r][t], gb[t][c]))
                out[r][c] = acc
        return _pin(encode(out), one_nat)

    ring = Ring(desc, "upper_triangular", size, True, add, neg, mul, one_nat)
    ring.inner = inner
    ring.k = k
    return ring


def _construct_product(desc: Product) -> Ring:
    if not desc.factors:
        raise ValueError("product needs at least one factor")
    factors = tuple(construct_ring(d) for d in desc.factors)
    if not all(f.unital for f in factors):
        raise ValueError("product factors must be unital")
    size = math.prod(f.size for f in factors)
    one_nat = 0
    for f in factors:
        one_nat = one_nat * f.size + 1

    def decode(nat):
        parts = []
        for f in reversed(factors):
            parts.append(nat % f.size)
            nat //= f.size
        parts.reverse()
        return parts

    def encode(parts):
        acc = 0
        for f, v in zip(factors, parts):
            acc = acc * f.size + v
        return acc

    def add(a, b):
        pa, pb = decode(_unpin(a, one_nat)), decode(_unpin(b, one_nat))
        return _pin(encode([f.add(x, y) for f, x, y in zip(factors, pa, pb)]), one_nat)

    def neg(a):
        return _pin(encode([f.neg(x) for f, x in zip(factors, decode(_unpin(a, one_nat)))]),
                    one_nat)

    def mul(a, b):
        pa, pb = decode(_unpin(a, one_nat)), decode(_unpin(b, one_nat))
        return _pin(encode([f.mul(x, y) for f, x, y in zip(factors, pa, pb)]), one_nat)

    ring = Ring(desc, "product", size, True, add, neg, mul, one_nat)
    ring.factors = factors
    return ring


def _construct_table(desc: TableRing) -> Ring:
    add = [list(row) for row in desc.add]
    mul = [list(row) for row in desc.mul]
    n = len(add)
    if n < 1 or len(mul) != n or any(len(r) != n for r in add + mul):
        raise ValueError("tables must be square and of equal size")
    for row in add + mul:
        for v in row:
            if not 0 <= v < n:
                raise ValueError("table entry out of range")
    zero = None
    for z in range(n):
        if all(add[z][x] == x and add[x][z] == x for x in range(n)):
            zero = z
            break
    if zero is None:
        raise ValueError("tables have no additive identity")
    one = desc.one
    if desc.unital:
        if one is None:
            for e in range(n):
                if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
                    one = e
                    break
            if one is None:
                raise ValueError(
                    "tables have no multiplicative identity; pass unital=False for a rng")
        else:
            if not (0 <= one < n and
                    all(mul[one][x] == x and mul[x][one] == x for x in range(n))):
                raise ValueError(f"position {one} is not a multiplicative identity")
        if one == zero and n > 1:
            raise ValueError("additive and multiplicative identities coincide")
    else:
        one = None

    # re-index: zero -> 0, identity (if any) -> 1, remaining in given order
    order = [zero] + ([one] if one is not None else [])
    order += [x for x in range(n) if x not in order]
    new_of_old = [0] * n
    for new, old in enumerate(order):
        new_of_old[old] = new
    perm_add = [[new_of_old[add[order[a]][order[b]]] for b in range(n)] for a in range(n)]
    perm_mul = [[new_of_old[mul[order[a]][order[b]]] for b in range(n)] for a in range(n)]
    add_t = np.array(perm_add, dtype=np.int64)
    mul_t = np.array(perm_mul, dtype=np.int64)

    ring = Ring(desc, "table", n, desc.unital and one is not None,
                lambda a, b: int(add_t[a, b]), None,
                lambda a, b: int(mul_t[a, b]))
    neg = np.zeros(n, dtype=np.int64)
    rows, cols = np.nonzero(add_t == 0)
    ok = np.zeros(n, dtype=bool)
    for r, c in zip(rows, cols):
        if not ok[r]:
            neg[r] = c
            ok[r] = True
    if not ok.all():
        raise ValueError("some element has no additive inverse")
    ring._neg = lambda a: int(neg[a])
    ring._add_table = add_t
    ring._mul_table = mul_t
    ring._neg_table = neg
    ring.input_index_map = tuple(new_of_old)
    return ring


def _dense_tables(ring: Ring):
    """Dense numpy add/mul tables over canonical indices."""
    n = ring.size
    dtype = np.int64
    if ring.kind in ("prime_field", "integers_mod"):
        idx = np.arange(n, dtype=dtype)
        return (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n
    if ring.kind == "galois_field":
        p, k = ring.descriptor.p, ring.descriptor.k
        idx = np.arange(n)
        coeffs = np.zeros((n, k), dtype=dtype)
        t = idx.copy()
        for i in range(k):
            coeffs[:, i] = t % p
            t //= p
        weights = p ** np.arange(k, dtype=dtype)
        add = ((coeffs[:, None, :] + coeffs[None, :, :]) % p) @ weights
        # multiplication: convolve coefficient vectors, reduce by the modulus
        conv = np.zeros((n, n, 2 * k - 1), dtype=dtype)
        for i in range(k):
            for j in range(k):
                conv[:, :, i + j] += coeffs[:, None, i] * coeffs[None, :, j]
        red = np.zeros((2 * k - 1, k), dtype=dtype)
        for i in range(k):
            red[i, i] = 1
        xk = [(-c) % p for c in ring.modulus[:-1]]  # residue of x^k
        cur = xk[:]
        for d in range(k, 2 * k - 1):
            red[d, :] = cur
            shifted = [0] + cur[:-1]
            lead = cur[k - 1]
            cur = [(shifted[i] + lead * xk[i]) % p for i in range(k)]
        prod = (conv.reshape(n * n, 2 * k - 1) @ red) % p
        mul = (prod @ weights).reshape(n, n)
        return add, mul
    if ring.kind == "product":
        parts = np.zeros((n, len(ring.factors)), dtype=dtype)
        for i in range(n):
            parts[i] = ring.prod_parts(i)
        # componentwise tables, re-encoded to canonical indices
        nat_add = np.zeros((n, n), dtype=dtype)
        nat_mul = np.zeros((n, n), dtype=dtype)
        for t, f in enumerate(ring.factors):
            col = parts[:, t]
            nat_add = nat_add * f.size + f.add_table()[col[:, None], col[None, :]]
            nat_mul = nat_mul * f.size + f.mul_table()[col[:, None], col[None, :]]
        return _pin_array(nat_add, ring._one_nat), _pin_array(nat_mul, ring._one_nat)
    if ring.kind == "table":
        return ring._add_table, ring._mul_table
    # matrix / upper-triangular / anything else: straight double loop
    add = np.zeros((n, n), dtype=dtype)
    mul = np.zeros((n, n), dtype=dtype)
    for a in range(n):
        for b in range(n):
            add[a, b] = ring._add(a, b)
            mul[a, b] = ring._mul(a, b)
    return add, mul


def _pin_array(nat: np.ndarray, one_nat: int) -> np.ndarray:
    out = nat + 1 - (nat > one_nat)
    out[nat == 0] = 0
    out[nat == one_nat] = 1
    return out


def _commutative(ring: Ring):
    if ring.kind in ("prime_field", "galois_field", "integers_mod"):
        return True
    if ring.kind in ("matrix", "upper_triangular") and ring.k > 1 and ring.inner.size > 1:
        return False
    if ring.kind == "product":
        return all(f.is_commutative() for f in ring.factors)
    mul = ring.mul_table()
    return bool((mul == mul.T).all())


# ---------------------------------------------------------------------------
# axiom verification

@dataclass
class AxiomReport:
    ok: bool
    axioms: dict
    witnesses: dict
    size: int

    def __str__(self):
        lines = [f"ring axioms over {self.size} elements: "
                 + ("all hold" if self.ok else "FAILED")]
        for name, passed in self.axioms.items():
            mark = "ok " if passed else "FAIL"
            extra = "" if passed else f"  witness {self.witnesses[name]}"
            lines.append(f"  [{mark}] {name}{extra}")
        return "\n".join(lines)


def verify_ring_axioms(ring: Ring, bound: int = AXIOM_CAP) -> AxiomReport:
    """Exhaustively check the ring axioms (all triples; size bounded)."""
    n = ring.size
    if n > bound:
        raise ValueError(f"ring size {n} exceeds the verification bound {bound}")
    add = ring.add_table()
    mul = ring.mul_table()
    idx = np.arange(n)
    axioms: dict[str, bool] = {}
    witnesses: dict[str, tuple] = {}

    def record(name, ok, witness=None):
        axioms[name] = bool(ok)
        if not ok:
            witnesses[name] = witness

    bad = np.argwhere(add != add.T)
    record("add-commutative", bad.size == 0, tuple(bad[0]) if bad.size else None)

    ok = bool((add[0] == idx).all() and (add[:, 0] == idx).all())
    record("zero-identity", ok, None if ok else (int((add[0] != idx).argmax()),))

    has_neg = (add == 0).any(axis=1)
    record("negation", bool(has_neg.all()),
           None if has_neg.all() else (int((~has_neg).argmax()),))

    def assoc(table, name):
        for a in range(n):
            lhs = table[table[a], :]        # (a?b)?c
            rhs = table[a, table]           # a?(b?c)
            if not (lhs == rhs).all():
                b, c = np.argwhere(lhs != rhs)[0]
                record(name, False, (a, int(b), int(c)))
                return
        record(name, True)

    assoc(add, "add-associative")
    assoc(mul, "mul-associative")

    if ring.unital:
        ok = bool((mul[1] == idx).all() and (mul[:, 1] == idx).all())
        record("one-identity", ok)

    for a in range(n):
        lhs = mul[a, add]                       # a(b+c)
        rhs = add[mul[a][:, None], mul[a][None, :]]  # ab+ac
        if not (lhs == rhs).all():
            b, c = np.argwhere(lhs != rhs)[0]
            record("left-distributive", False, (a, int(b), int(c)))
            break
    else:
        record("left-distributive", True)

    for c in range(n):
        lhs = mul[add, c]                       # (a+b)c
        col = mul[:, c]
        rhs = add[col[:, None], col[None, :]]   # ac+bc
        if not (lhs == rhs).all():
            a, b = np.argwhere(lhs != rhs)[0]
            record("right-distributive", False, (int(a), int(b), c))
            break
    else:
        record("right-distributive", True)

    return AxiomReport(all(axioms.values()), axioms, witnesses, n)


def is_commutative(ring: Ring) -> bool:
    return ring.is_commutative()


# ---------------------------------------------------------------------------
# ideals, radical, quotients

@dataclass(frozen=True)
class Ideal:
    ring: Ring
    elements: tuple[int, ...]
    sided: str  # "left", "right" or "two-sided"

    def __contains__(self, x):
        return x in set(self.elements)

    def __len__(self):
        return len(self.elements)


def _span(ring: Ring, seed, left: bool, right: bool) -> np.ndarray:
    """Additive subgroup containing seed, closed under the requested
    multiplications; returned as a boolean membership mask."""
    add = ring.add_table()
    mul = ring.mul_table() if (left or right) else None
    n = ring.size
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    frontier = [0]
    for s in set(seed):
        if not mask[s]:
            mask[s] = True
            frontier.append(s)
    while frontier:
        x = frontier.pop()
        members = np.flatnonzero(mask)
        batches = [add[x, members]]
        if left:
            batches.append(mul[:, x])
        if right:
            batches.append(mul[x, :])
        for batch in batches:
            for v in np.unique(batch):
                v = int(v)
                if not mask[v]:
                    mask[v] = True
                    frontier.append(v)
    return mask


def _ideal_lattice(ring: Ring, left: bool, right: bool) -> list[np.ndarray]:
    if ring.size > IDEAL_CAP:
        raise ValueError(f"ideal enumeration capped at size {IDEAL_CAP}")
    seen = {}
    for a in range(ring.size):
        m = _span(ring, [a], left, right)
        seen.setdefault(m.tobytes(), m)
    masks = list(seen.values())
    grew = True
    while grew:
        grew = False
        snapshot = list(seen.values())
        for i in range(len(snapshot)):
            for j in range(i + 1, len(snapshot)):
                u = snapshot[i] | snapshot[j]
                key = u.tobytes()
                if key in seen:
                    continue
                m = _span(ring, np.flatnonzero(u), left, right)
                if seen.setdefault(m.tobytes(), m) is m:
                    grew = True
    masks = list(seen.values())
    masks.sort(key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m))))
    return masks


def _sided_name(left, right):
    return "two-sided" if (left and right) else ("left" if left else "right")


def left_ideals(ring: Ring) -> list[Ideal]:
    return [Ideal(ring, tuple(int(x) for x in np.flatnonzero(m)), "left")
            for m in _ideal_lattice(ring, True, False)]


def two_sided_ideals(ring: Ring) -> list[Ideal]:
    """All two-sided ideals, sorted by size then by element tuple."""
    return [Ideal(ring, tuple(int(x) for x in np.flatnonzero(m)), "two-sided")
            for m in _ideal_lattice(ring, True, True)]


def maximal_proper(ideals: list[Ideal]) -> list[Ideal]:
    """The inclusion-maximal ideals strictly below the whole ring."""
    if not ideals:
        return []
    full = max(len(i) for i in ideals)
    proper = [i for i in ideals if len(i) < full]
    sets = [set(i.elements) for i in proper]
    out = []
    for i, s in zip(proper, sets):
        if not any(s < t for t in sets):
            out.append(i)
    return out


def radical(ring: Ring) -> Ideal:
    """Intersection of the maximal left ideals (a two-sided ideal)."""
    lefts = _ideal_lattice(ring, True, False)
    full = ring.size
    proper = [m for m in lefts if int(m.sum()) < full]
    if not proper:
        return Ideal(ring, (0,), "two-sided")
    maximal = []
    for m in proper:
        if not any((m != o).any() and not (m & ~o).any() for o in proper):
            maximal.append(m)
    inter = maximal[0].copy()
    for m in maximal[1:]:
        inter &= m
    elements = tuple(int(x) for x in np.flatnonzero(inter))
    # sanity: the intersection really is two-sided
    members = set(elements)
    for x in elements:
        for r in range(ring.size):
            if ring.mul(r, x) not in members or ring.mul(x, r) not in members:
                raise AssertionError("radical candidate is not two-sided")
    return Ideal(ring, elements, "two-sided")


@dataclass
class RingHom:
    """A unital ring homomorphism given by its full mapping table."""
    domain: Ring
    codomain: Ring
    mapping: tuple[int, ...]
    surjective: bool = False

    def __post_init__(self):
        self.mapping = tuple(int(x) for x in self.mapping)
        r, s = self.domain, self.codomain
        if len(self.mapping) != r.size:
            raise ValueError("mapping must cover every element of the domain")
        m = np.array(self.mapping, dtype=np.int64)
        if (m < 0).any() or (m >= s.size).any():
            raise ValueError("mapping hits indices outside the codomain")
        add_r, mul_r = r.add_table(), r.mul_table()
        add_s, mul_s = s.add_table(), s.mul_table()
        if not (m[add_r] == add_s[m[:, None], m[None, :]]).all():
            raise ValueError("mapping does not respect addition")
        if not (m[mul_r] == mul_s[m[:, None], m[None, :]]).all():
            raise ValueError("mapping does not respect multiplication")
        if r.unital and s.unital and self.mapping[r.one] != s.one:
            raise ValueError("mapping does not send identity to identity")
        self.surjective = len(set(self.mapping)) == s.size

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def compose(self, inner: "RingHom") -> "RingHom":
        """self after inner."""
        if inner.codomain is not self.domain:
            raise ValueError("homomorphisms do not chain")
        return RingHom(inner.domain, self.codomain,
                       tuple(self.mapping[v] for v in inner.mapping))


def identity_hom(ring: Ring) -> RingHom:
    return RingHom(ring, ring, tuple(range(ring.size)))


def quotient(ring: Ring, ideal: Ideal) -> tuple[Ring, RingHom]:
    """Quotient by a two-sided ideal, with the canonical surjection."""
    members = np.array(sorted(set(ideal.elements)), dtype=np.int64)
    if 0 not in ideal.elements:
        raise ValueError("an ideal must contain the additive identity")
    mset = set(int(x) for x in members)
    for x in mset:
        for r in range(ring.size):
            if ring.mul(r, x) not in mset or ring.mul(x, r) not in mset:
                raise ValueError("quotient needs a two-sided ideal")
    add = ring.add_table()
    mul = ring.mul_table()
    rep = add[:, members].min(axis=1)          # least member of each coset
    reps = np.unique(rep)
    rank_of = {int(r): i for i, r in enumerate(reps)}
    m = len(reps)
    q_add = [[rank_of[int(rep[add[reps[i], reps[j]]])] for j in range(m)] for i in range(m)]
    q_mul = [[rank_of[int(rep[mul[reps[i], reps[j]]])] for j in range(m)] for i in range(m)]
    one_pos = rank_of[int(rep[ring.one])] if ring.unital else None
    desc = TableRing(q_add, q_mul, one=one_pos, unital=ring.unital)
    q = construct_ring(desc)
    remap = q.input_index_map
    mapping = tuple(remap[rank_of[int(rep[x])]] for x in range(ring.size))
    return q, RingHom(ring, q, mapping)


# ---------------------------------------------------------------------------
# homomorphism / isomorphism search

def _additive_levels(ring: Ring):
    """Greedy generator chain of the additive group.

    Returns a list of levels (g, m, anchor, pairs): g is the new generator, m
    its index over the previous subgroup, anchor = m*g (already in the
    previous subgroup), and pairs lists (x, h, t) with x = h + t*g for each
    element new at this level.
    """
    n = ring.size
    add = ring.add_table()
    in_sub = np.zeros(n, dtype=bool)
    in_sub[0] = True
    members = [0]
    levels = []
    while len(members) < n:
        g = int((~in_sub).argmax())
        acc, m = g, 1
        while not in_sub[acc]:
            acc = int(add[acc, g])
            m += 1
        prev = members[:]
        pairs = []
        tg = 0
        for t in range(1, m):
            tg = int(add[tg, g])
            for h in prev:
                x = int(add[h, tg])
                if in_sub[x]:
                    raise AssertionError("additive level decomposition broke")
                in_sub[x] = True
                members.append(x)
                pairs.append((x, h, t))
        levels.append((g, m, acc, pairs))
    return levels


def _hom_search(r: Ring, s: Ring, *, injective: bool, surjective_only: bool,
                bound: int, limit: Optional[int] = None):
    if r.size > bound or s.size > bound:
        raise ValueError(f"homomorphism search capped at size {bound}")
    if injective and r.size != s.size:
        return []
    add_s = s.add_table()
    mul_r = r.mul_table()
    mul_s = s.mul_table()
    levels = _additive_levels(r)
    n, sn = r.size, s.size

    # m-fold additive multiples in the codomain, per level index m
    multiple_cache: dict[int, np.ndarray] = {}

    def multiples(m):
        if m not in multiple_cache:
            arr = np.zeros(sn, dtype=np.int64)
            base = np.arange(sn, dtype=np.int64)
            cur = np.zeros(sn, dtype=np.int64)
            for _ in range(m):
                cur = add_s[cur, base]
            multiple_cache[m] = cur
        return multiple_cache[m]

    if injective:
        order_r = _additive_orders(r)
        order_s = _additive_orders(s)

    phi = np.full(n, -1, dtype=np.int64)
    phi[0] = 0
    used = np.zeros(sn, dtype=bool)
    used[0] = True
    results = []

    gens = [lvl[0] for lvl in levels]
    unital_pair = r.unital and s.unital and r.size > 1 and s.size > 1

    def finalize():
        if unital_pair and phi[r.one] != s.one:
            return
        for gi in gens:
            for gj in gens:
                if phi[mul_r[gi, gj]] != mul_s[phi[gi], phi[gj]]:
                    return
        if surjective_only and len(set(phi.tolist())) != sn:
            return
        results.append(tuple(int(v) for v in phi))

    def assign(level_idx):
        if limit is not None and len(results) >= limit:
            return
        if level_idx == len(levels):
            finalize()
            return
        g, m, anchor, pairs = levels[level_idx]
        target = int(phi[anchor])
        candidates = np.flatnonzero(multiples(m) == target)
        for y in candidates:
            y = int(y)
            if injective and order_s[y] != order_r[g]:
                continue
            ty = [0]
            cur = 0
            for _ in range(1, m):
                cur = int(add_s[cur, y])
                ty.append(cur)
            placed = []
            ok = True
            for (x, h, t) in pairs:
                img = int(add_s[phi[h], ty[t]])
                if injective and used[img]:
                    ok = False
                    break
                phi[x] = img
                if injective:
                    used[img] = True
                placed.append((x, img))
            if ok and unital_pair and phi[r.one] >= 0 and phi[r.one] != s.one:
                ok = False
            if ok:
                assign(level_idx + 1)
            for (x, img) in placed:
                phi[x] = -1
                if injective:
                    used[img] = False
        return

    assign(0)
    return sorted(results)


def _additive_orders(ring: Ring) -> np.ndarray:
    n = ring.size
    add = ring.add_table()
    orders = np.zeros(n, dtype=np.int64)
    for a in range(n):
        x, c = a, 1
        while x != 0:
            x = int(add[x, a])
            c += 1
        orders[a] = c if a != 0 else 1
    return orders


def find_homomorphisms(r: Ring, s: Ring, *, surjective_only: bool = False,
                       bound: int = HOM_CAP, limit: Optional[int] = None) -> list[RingHom]:
    """All unital homomorphisms r -> s, sorted by mapping table."""
    if not (r.unital and s.unital):
        raise ValueError("homomorphism search expects unital rings")
    maps = _hom_search(r, s, injective=False, surjective_only=surjective_only,
                       bound=bound, limit=limit)
    return [RingHom(r, s, m) for m in maps]


def find_isomorphism(r: Ring, s: Ring, bound: int = HOM_CAP) -> Optional[RingHom]:
    """An isomorphism r -> s if one exists, else None (deterministic pick)."""
    if r.size != s.size:
        return None
    if _fingerprint(r) != _fingerprint(s):
        return None
    maps = _hom_search(r, s, injective=True, surjective_only=False,
                       bound=bound, limit=1)
    return RingHom(r, s, maps[0]) if maps else None


def _fingerprint(ring: Ring):
    """Cheap isomorphism invariants."""
    mul = ring.mul_table()
    orders = _additive_orders(ring)
    unique, counts = np.unique(orders, return_counts=True)
    idempotents = int((mul.diagonal() == np.arange(ring.size)).sum())
    central = int((mul == mul.T).all(axis=1).sum())
    units = int((mul == 1).any(axis=1).sum()) if ring.unital else 0
    return (tuple(zip(unique.tolist(), counts.tolist())), idempotents, central, units)


# ---------------------------------------------------------------------------
# semisimple catalogue and decompositions

def _matrix_profiles(k: int):
    """Multisets of (r, a) with sum r*r*a = k: one per semisimple ring of
    order p^k, as matrix blocks M_r(GF(p^a))."""
    types = []
    r = 1
    while r * r <= k:
        for a in range(1, k // (r * r) + 1):
            types.append((r, a))
        r += 1

    profiles = []

    def rec(remaining, start, acc):
        if remaining == 0:
            profiles.append(tuple(acc))
            return
        for i in range(start, len(types)):
            rr, aa = types[i]
            cost = rr * rr * aa
            if cost <= remaining:
                acc.append(types[i])
                rec(remaining - cost, i, acc)
                acc.pop()

    rec(k, 0, [])

    def profile_key(profile):
        factors = sorted(profile, key=lambda f: (-(f[0] ** 2 * f[1]), -f[0], -f[1]))
        return (len(factors), tuple((-(r * r * a), -r, -a) for (r, a) in factors))

    profiles = [tuple(sorted(pr, key=lambda f: (-(f[0] ** 2 * f[1]), -f[0], -f[1])))
                for pr in profiles]
    profiles.sort(key=profile_key)
    return profiles


def _profile_descriptor(p: int, profile) -> RingDescriptor:
    def gf(a):
        return PrimeField(p) if a == 1 else GaloisField(p, a)

    def block(r, a):
        return gf(a) if r == 1 else MatrixRing(gf(a), r)

    blocks = [block(r, a) for (r, a) in profile]
    return blocks[0] if len(blocks) == 1 else Product(tuple(blocks))


def semisimple_catalog(p: int, k: int) -> list[RingDescriptor]:
    """Every semisimple ring of order p^k (k <= 6), one descriptor each.

    Ordered by ascending number of matrix blocks, then by block profile
    (larger blocks first, full matrix blocks before field blocks of the same
    order)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= k <= 6:
        raise ValueError("catalogue covers exponents 1..6")
    return [_profile_descriptor(p, pr) for pr in _matrix_profiles(k)]


def prime_power_decompose(ring: Ring) -> list[Ring]:
    """Split a unital ring into its prime-power blocks via the central
    idempotents cut out by the characteristic's prime factorization."""
    if not ring.unital:
        raise ValueError("prime-power decomposition needs a unital ring")
    char = ring.characteristic()
    parts = _factorize(char)
    if len(parts) <= 1:
        return [ring]
    out = []
    for (p, e) in sorted(parts.items()):
        q = p ** e
        rest = char // q
        # CRT integer: 1 mod q, 0 mod rest
        c = (pow(rest, -1, q) * rest) % char
        e_idx = ring.scalar_multiple(c, 1)
        if ring.mul(e_idx, e_idx) != e_idx:
            raise AssertionError("central idempotent construction failed")
        subset = sorted({ring.mul(e_idx, x) for x in range(ring.size)})
        pos = {x: i for i, x in enumerate(subset)}
        add = [[pos[ring.add(a, b)] for b in subset] for a in subset]
        mul = [[pos[ring.mul(a, b)] for b in subset] for a in subset]
        factor = construct_ring(TableRing(add, mul, one=pos[e_idx]))
        out.append(factor)
    return out


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _prime_power(n: int):
    f = _factorize(n)
    if len(f) != 1:
        return None
    [(p, k)] = f.items()
    return p, k


def semisimple_decompose(ring: Ring) -> list[tuple[int, int]]:
    """Matrix-block profile [(r_i, q_i)] of ring/radical(ring).

    Each pair means a block of r_i x r_i matrices over the field with q_i
    elements; blocks are listed prime by prime (ascending), in catalogue
    order within a prime."""
    out = []
    for part in prime_power_decompose(ring):
        rad = radical(part)
        q, _ = quotient(part, rad)
        pp = _prime_power(q.size)
        if pp is None:
            raise AssertionError("semisimple quotient has non-prime-power order")
        p, k = pp
        for profile in _matrix_profiles(k):
            cand = construct_ring(_profile_descriptor(p, profile))
            if find_isomorphism(q, cand) is not None:
                out.extend((r, p ** a) for (r, a) in profile)
                break
        else:
            raise AssertionError("semisimple quotient matches no catalogue entry")
    return out


# ---------------------------------------------------------------------------
# serialization

def descriptor_to_json(desc: RingDescriptor):
    if isinstance(desc, PrimeField):
        return {"kind": "prime-field", "p": desc.p}
    if isinstance(desc, GaloisField):
        return {"kind": "galois-field", "p": desc.p, "k": desc.k,
                "poly": list(desc.poly) if desc.poly is not None else None}
    if isinstance(desc, IntegersMod):
        return {"kind": "integers-mod", "n": desc.n}
    if isinstance(desc, MatrixRing):
        return {"kind": "matrix", "inner": descriptor_to_json(desc.inner), "k": desc.k}
    if isinstance(desc, UpperTriangular):
        return {"kind": "upper-triangular", "field": descriptor_to_json(desc.field),
                "k": desc.k}
    if isinstance(desc, Product):
        return {"kind": "product",
                "factors": [descriptor_to_json(f) for f in desc.factors]}
    if isinstance(desc, TableRing):
        return {"kind": "table", "add": [list(r) for r in desc.add],
                "mul": [list(r) for r in desc.mul], "one": desc.one,
                "unital": desc.unital}
    raise TypeError(f"not a ring descriptor: {desc!r}")


def descriptor_from_json(data) -> RingDescriptor:
    kind = data.get("kind")
    if kind == "prime-field":
        return PrimeField(int(data["p"]))
    if kind == "galois-field":
        poly = data.get("poly")
        return GaloisField(int(data["p"]), int(data["k"]),
                           tuple(int(c) for c in poly) if poly is not None else None)
    if kind == "integers-mod":
        return IntegersMod(int(data["n"]))
    if kind == "matrix":
        return MatrixRing(descriptor_from_json(data["inner"]), int(data["k"]))
    if kind == "upper-triangular":
        return UpperTriangular(descriptor_from_json(data["field"]), int(data["k"]))
    if kind == "product":
        return Product(tuple(descriptor_from_json(f) for f in data["factors"]))
    if kind == "table":
        one = data.get("one")
        return TableRing(data["add"], data["mul"],
                         one=int(one) if one is not None else None,
                         unital=bool(data.get("unital", True)))
    raise ValueError(f"unknown ring descriptor kind: {kind!r}")


def describe(desc: RingDescriptor) -> str:
    """Short human-readable name for a descriptor."""
    if isinstance(desc, PrimeField):
        return f"GF({desc.p})"
    if isinstance(desc, GaloisField):
        return f"GF({desc.p}^{desc.k})"
    if isinstance(desc, IntegersMod):
        return f"Z_{desc.n}"
    if isinstance(desc, MatrixRing):
        return f"M_{desc.k}({describe(desc.inner)})"
    if isinstance(desc, UpperTriangular):
        return f"UT_{desc.k}({describe(desc.field)})"
    if isinstance(desc, Product):
        return " x ".join(describe(f) for f in desc.factors)
    if isinstance(desc, TableRing):
        return f"table ring of size {len(desc.add)}" + ("" if desc.unital else " (rng)")
    return repr(desc)
