"""Row reduction, span arithmetic and subspace enumeration over a finite field.

Rows are tuples of element indices of a field ring (see rings.py); a subspace
is represented by its reduced-echelon basis, stored as a tuple of rows sorted
by pivot column, which makes equal subspaces compare and hash equal.  A packed
fast path for the two-element field keeps rows as plain ints (one bit per
column) because the search loops in solver.py live on these operations.
"""
from __future__ import annotations

from itertools import combinations, product


class FieldOps:
    """Scalar arithmetic of a field ring, unpacked into plain lists.

    List indexing beats repeated method dispatch in the elimination loops.
    """

    def __init__(self, field):
        if not field.is_field():
            raise ValueError("row reduction needs a field, got a ring that is not one")
        self.field = field
        q = field.size
        self.q = q
        self.add = [[field.add(a, b) for b in range(q)] for a in range(q)]
        self.mul = [[field.mul(a, b) for b in range(q)] for a in range(q)]
        self.neg = [field.neg(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            row = self.mul[a]
            inv[a] = row.index(1)
        self.inv = inv


def row_scale(ops: FieldOps, row, c):
    mul_c = ops.mul[c]
    return tuple(mul_c[x] for x in row)


def row_sub_scaled(ops: FieldOps, row, other, c):
    """row - c * other, elementwise."""
    mc = ops.mul[ops.neg[c]]
    add = ops.add
    return tuple(add[a][mc[b]] for a, b in zip(row, other))


def rref(ops: FieldOps, rows):
    """Reduced echelon form with the reducing transform.

    Returns (basis, transform, pivots): basis[i] has leading 1 in column
    pivots[i] and zeros in every other pivot column, and transform[i] holds
    the combination of the input rows that produces basis[i].
    """
    width = len(rows[0]) if rows else 0
    n = len(rows)
    basis = []
    transform = []
    pivots = []
    for i, row in enumerate(rows):
        combo = tuple(1 if j == i else 0 for j in range(n))
        row, combo = _reduce(ops, basis, pivots, row, transform, combo)
        piv = _leading(row)
        if piv is None:
            continue
        c = ops.inv[row[piv]]
        row = row_scale(ops, row, c)
        combo = row_scale(ops, combo, c)
        # clear this pivot from earlier basis rows
        for t in range(len(basis)):
            coef = basis[t][piv]
            if coef:
                basis[t] = row_sub_scaled(ops, basis[t], row, coef)
                transform[t] = row_sub_scaled(ops, transform[t], combo, coef)
        basis.append(row)
        transform.append(combo)
        pivots.append(piv)
    order = sorted(range(len(basis)), key=lambda t: pivots[t])
    basis = [basis[t] for t in order]
    transform = [transform[t] for t in order]
    pivots = [pivots[t] for t in order]
    return basis, transform, pivots


def _leading(row):
    for j, x in enumerate(row):
        if x:
            return j
    return None


def _reduce(ops, basis, pivots, row, transform=None, combo=None):
    for b, p in zip(basis, pivots):
        c = row[p]
        if c:
            row = row_sub_scaled(ops, row, b, c)
            if combo is not None:
                combo = row_sub_scaled(ops, combo, transform[basis.index(b)], c)
    return row, combo


def reduce_row(ops: FieldOps, basis, pivots, row):
    """Residual of row after eliminating against an echelon basis."""
    for b, p in zip(basis, pivots):
        c = row[p]
        if c:
            row = row_sub_scaled(ops, row, b, c)
    return row


def rank(ops: FieldOps, rows) -> int:
    basis, _, _ = rref(ops, rows)
    return len(basis)


def canon_space(ops: FieldOps, rows):
    """Canonical (hashable) form of the span of the given rows."""
    basis, _, _ = rref(ops, rows)
    return tuple(basis)


def space_sum(ops: FieldOps, a, b):
    return canon_space(ops, list(a) + list(b))


def space_contains(ops: FieldOps, space, row) -> bool:
    pivots = [_leading(b) for b in space]
    return not any(reduce_row(ops, space, pivots, row))


def solve_row(ops: FieldOps, rows, target):
    """Coefficients expressing target as a combination of rows, or None."""
    basis, transform, pivots = rref(ops, rows)
    combo = tuple(0 for _ in rows)
    for b, t, p in zip(basis, transform, pivots):
        c = target[p]
        if c:
            target = row_sub_scaled(ops, target, b, c)
            mc = ops.mul[c]
            combo = tuple(ops.add[x][mc[y]] for x, y in zip(combo, t))
    if any(target):
        return None
    return combo


# ---- packed GF(2) rows: ints, one bit per column, bit 0 = column 0 ----

def pack2(row) -> int:
    acc = 0
    for j, x in enumerate(row):
        if x:
            acc |= 1 << j
    return acc


def unpack2(packed: int, width: int):
    return tuple((packed >> j) & 1 for j in range(width))


def rref2(rows):
    """Echelon basis of packed rows, sorted by pivot (low bit first)."""
    basis = []  # kept sorted by pivot position ascending
    for row in rows:
        row = reduce2(basis, row)
        if row:
            piv = row & -row
            for i, b in enumerate(basis):
                if b & piv:
                    basis[i] = b ^ row
            basis.append(row)
    basis.sort(key=lambda r: r & -r)
    return tuple(basis)


def reduce2(basis, row: int) -> int:
    for b in basis:
        if row & (b & -b):
            row ^= b
    return row


def space_sum2(a, b):
    return rref2(list(a) + list(b))


def space_contains2(space, row: int) -> bool:
    return reduce2(space, row) == 0


# ---- enumeration of echelon forms ----

def gaussian_binomial(d: int, r: int, q: int) -> int:
    if r < 0 or r > d:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(q: int, d: int, rmax: int) -> int:
    """Number of subspaces of F_q^d of dimension at most rmax."""
    return sum(gaussian_binomial(d, r, q) for r in range(min(d, rmax) + 1))


def echelon_forms(q: int, d: int, rmax: int):
    """Yield every reduced echelon form with <= rmax rows over F_q^d.

    A form is a tuple of coordinate rows (tuples of ints).  For fixed rank the
    forms come out ordered by pivot-column choice then by free entries, which
    together with the caller's rank ordering fixes the search order.
    """
    yield ()
    for r in range(1, min(d, rmax) + 1):
        for pivots in combinations(range(d), r):
            free = []  # (row, col) slots that may hold arbitrary entries
            pivot_set = set(pivots)
            for i in range(r):
                for j in range(pivots[i] + 1, d):
                    if j not in pivot_set:
                        free.append((i, j))
            base = [[0] * d for _ in range(r)]
            for i in range(r):
                base[i][pivots[i]] = 1
            if not free:
                yield tuple(tuple(row) for row in base)
                continue
            for values in product(range(q), repeat=len(free)):
                rows = [row[:] for row in base]
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield tuple(tuple(row) for row in rows)
