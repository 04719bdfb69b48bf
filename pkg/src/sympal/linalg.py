"""Small exact linear algebra over a field spec.

Vectors are tuples of element indices, matrices are tuples of row tuples.
Everything is pure and hashable; sizes are desk scale (n <= 8), so the
algorithms are plain Gaussian elimination.
"""

from __future__ import annotations

from .errors import Singular
from .ffield import FieldSpec

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def identity(spec: FieldSpec, n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_mat(n: int, m: int) -> Mat:
    return tuple((0,) * m for _ in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_mul(spec: FieldSpec, a: Mat, b: Mat) -> Mat:
    ctx = spec.ctx
    bt = transpose(b)
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = ctx.add(acc, ctx.mul(x, y))
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_vec(spec: FieldSpec, a: Mat, v: Vec) -> Vec:
    ctx = spec.ctx
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = ctx.add(acc, ctx.mul(x, y))
        out.append(acc)
    return tuple(out)


def vec_dot(spec: FieldSpec, u: Vec, v: Vec) -> int:
    ctx = spec.ctx
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = ctx.add(acc, ctx.mul(x, y))
    return acc


def scalar_mat(spec: FieldSpec, n: int, c: int) -> Mat:
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


def mat_scalar(spec: FieldSpec, a: Mat, c: int) -> Mat:
    ctx = spec.ctx
    return tuple(tuple(ctx.mul(x, c) for x in row) for row in a)


def mat_sub(spec: FieldSpec, a: Mat, b: Mat) -> Mat:
    ctx = spec.ctx
    return tuple(tuple(ctx.sub(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_add(spec: FieldSpec, a: Mat, b: Mat) -> Mat:
    ctx = spec.ctx
    return tuple(tuple(ctx.add(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def rref(spec: FieldSpec, rows) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    ctx = spec.ctx
    work = [list(r) for r in rows]
    m = len(work[0]) if work else 0
    pivots = []
    rank = 0
    for col in range(m):
        pr = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pr = i
                break
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        inv = ctx.inv(work[rank][col])
        work[rank] = [ctx.mul(x, inv) for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                c = work[i][col]
                work[i] = [ctx.sub(x, ctx.mul(c, y))
                           for x, y in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    return tuple(tuple(r) for r in work[:rank]), tuple(pivots)


def rank(spec: FieldSpec, rows) -> int:
    return len(rref(spec, rows)[0])


def det(spec: FieldSpec, a: Mat) -> int:
    ctx = spec.ctx
    n = len(a)
    work = [list(r) for r in a]
    d = 1
    for col in range(n):
        pr = None
        for i in range(col, n):
            if work[i][col]:
                pr = i
                break
        if pr is None:
            return 0
        if pr != col:
            work[col], work[pr] = work[pr], work[col]
            d = ctx.neg(d)
        d = ctx.mul(d, work[col][col])
        inv = ctx.inv(work[col][col])
        for i in range(col + 1, n):
            if work[i][col]:
                c = ctx.mul(work[i][col], inv)
                work[i] = [ctx.sub(x, ctx.mul(c, y))
                           for x, y in zip(work[i], work[col])]
    return d


def inverse(spec: FieldSpec, a: Mat) -> Mat:
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(spec, aug)
    if len(red) < n or pivots[:n] != tuple(range(n)):
        raise Singular("matrix is not invertible")
    return tuple(tuple(row[n:]) for row in red)


def nullspace(spec: FieldSpec, a: Mat, ncols: int) -> Mat:
    """Basis (rows) of {x : a x = 0}, in reduced echelon form."""
    red, pivots = rref(spec, a) if a else ((), ())
    ctx = spec.ctx
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = ctx.neg(red[i][f])
        basis.append(tuple(v))
    return rref(spec, basis)[0] if basis else ()


def solve(spec: FieldSpec, a: Mat, b: Vec) -> Vec:
    """One solution x of a x = b; raises Singular if inconsistent."""
    ncols = len(a[0])
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(spec, aug)
    x = [0] * ncols
    for i, p in enumerate(pivots):
        if p == ncols:
            raise Singular("inconsistent linear system")
        x[p] = red[i][-1]
    return tuple(x)


def in_rowspace(spec: FieldSpec, rows: Mat, v: Vec) -> bool:
    """Membership of v in the row space of an echelonized basis."""
    ctx = spec.ctx
    w = list(v)
    for row in rows:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is not None and w[lead]:
            c = w[lead]   # row is reduced: row[lead] == 1
            w = [ctx.sub(x, ctx.mul(c, y)) for x, y in zip(w, row)]
    return not any(w)


def extend_echelon(spec: FieldSpec, rows: list[list[int]], v: Vec) -> bool:
    """Reduce v against an echelon list in place; append if independent.

    Rows are kept in (non-reduced) echelon order sorted by leading index.
    Returns True if the span grew.
    """
    ctx = spec.ctx
    w = list(v)
    for row in rows:
        lead = next(j for j, x in enumerate(row) if x)
        if w[lead]:
            c = ctx.mul(w[lead], ctx.inv(row[lead]))
            w = [ctx.sub(x, ctx.mul(c, y)) for x, y in zip(w, row)]
    if not any(w):
        return False
    rows.append(w)
    rows.sort(key=lambda r: next(j for j, x in enumerate(r) if x))
    return True
