"""Exact linear algebra over F_{q^m} and over the prime field F_p.

Matrices are tuples of row tuples of packed field elements; all routines are
pure functions taking the FieldTower first.  Canonical form throughout is the
reduced row echelon form with zero rows dropped, which makes row spaces
directly comparable as tuples.

The F_q-rank of a vector over F_{q^m} (the dimension of the F_q-span of its
entries) is computed by expanding entries into base-p digit vectors: the
F_q-span of {v_i}, viewed as an F_p-space, is spanned by {gamma^j * v_i}
for j < e with gamma a generator of F_q, so its F_p-dimension is e times the
F_q-dimension.
"""

from __future__ import annotations

from .gf import FieldTower, GaloisAut

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def mat(field: FieldTower, rows) -> Matrix:
    out = tuple(tuple(field.check(a) for a in row) for row in rows)
    if out and len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def identity(field: FieldTower, n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def stack(*mats: Matrix) -> Matrix:
    out: list[tuple[int, ...]] = []
    for m in mats:
        out.extend(m)
    return tuple(out)


def matmul(field: FieldTower, A: Matrix, B: Matrix) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise ValueError("matrix shape mismatch")
    add, mul = field.add, field.mul
    ncols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(ncols):
            acc = 0
            for aik, brow in zip(row, B):
                if aik and brow[j]:
                    acc = add(acc, mul(aik, brow[j]))
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def vec_mat(field: FieldTower, v: Vector, B: Matrix) -> Vector:
    return matmul(field, (tuple(v),), B)[0]


def scale_vec(field: FieldTower, c: int, v) -> Vector:
    return tuple(field.mul(c, a) for a in v)


def add_vec(field: FieldTower, u, v) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def dot(field: FieldTower, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def rref(field: FieldTower, rows) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped.  Returns (R, pivots)."""
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = inv(work[r][c])
        if pv != 1:
            work[r] = [mul(pv, a) for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = neg(work[i][c])
                ri, rr = work[i], work[r]
                for j in range(c, ncols):
                    if rr[j]:
                        ri[j] = add(ri[j], mul(f, rr[j]))
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(field: FieldTower, rows) -> int:
    return len(rref(field, rows)[0])


def det(field: FieldTower, A: Matrix) -> int:
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant needs a square matrix")
    work = [list(r) for r in A]
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    d = 1
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            return 0
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            d = neg(d)
        pv = work[c][c]
        d = mul(d, pv)
        pv_inv = inv(pv)
        for i in range(c + 1, n):
            if work[i][c]:
                f = neg(mul(work[i][c], pv_inv))
                for j in range(c, n):
                    if work[c][j]:
                        work[i][j] = add(work[i][j], mul(f, work[c][j]))
    return d


def nullspace(field: FieldTower, rows, ncols: int | None = None) -> Matrix:
    """Canonical (RREF'd) basis of {x : rows @ x^T = 0} as row vectors."""
    if ncols is None:
        if not rows:
            raise ValueError("cannot infer the column count of an empty matrix")
        ncols = len(rows[0])
    R, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i][fc])
        basis.append(tuple(v))
    return rref(field, basis)[0]


def row_space_sum(field: FieldTower, A: Matrix, B: Matrix) -> Matrix:
    return rref(field, stack(A, B))[0]


def row_space_intersection(field: FieldTower, A: Matrix, B: Matrix, ncols: int | None = None) -> Matrix:
    """Canonical basis of rowspace(A) n rowspace(B), via orthogonal spaces:
    the intersection is the orthogon of the sum of the two orthogons."""
    if ncols is None:
        src = A if A else B
        if not src:
            raise ValueError("cannot infer the column count")
        ncols = len(src[0])
    na = nullspace(field, A, ncols) if A else identity(field, ncols)
    nb = nullspace(field, B, ncols) if B else identity(field, ncols)
    return nullspace(field, stack(na, nb), ncols)


def column_rank_profile(field: FieldTower, rows) -> tuple[int, ...]:
    """Indices of the lexicographically least maximal independent row set
    (greedy top-down elimination)."""
    basis: list[tuple[int, list[int]]] = []  # (pivot column, reduced row)
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    kept: list[int] = []
    for idx, row in enumerate(rows):
        cur = list(row)
        for pc, bv in basis:
            if cur[pc]:
                f = neg(cur[pc])
                for j in range(pc, len(cur)):
                    if bv[j]:
                        cur[j] = add(cur[j], mul(f, bv[j]))
        pc = next((j for j, a in enumerate(cur) if a), None)
        if pc is None:
            continue
        pv = inv(cur[pc])
        if pv != 1:
            cur = [mul(pv, a) for a in cur]
        basis.append((pc, cur))
        basis.sort(key=lambda t: t[0])
        kept.append(idx)
    return tuple(kept)


class IncrementalRank:
    """Feed rows one at a time; tracks the rank so far (same greedy
    elimination as column_rank_profile)."""

    def __init__(self, field: FieldTower):
        self.field = field
        self._basis: list[tuple[int, list[int]]] = []

    @property
    def rank(self) -> int:
        return len(self._basis)

    def add_row(self, row) -> bool:
        """Returns True when the row increased the rank."""
        f = self.field
        cur = list(row)
        for pc, bv in self._basis:
            if cur[pc]:
                fac = f.neg(cur[pc])
                for j in range(pc, len(cur)):
                    if bv[j]:
                        cur[j] = f.add(cur[j], f.mul(fac, bv[j]))
        pc = next((j for j, a in enumerate(cur) if a), None)
        if pc is None:
            return False
        pv = f.inv(cur[pc])
        if pv != 1:
            cur = [f.mul(pv, a) for a in cur]
        self._basis.append((pc, cur))
        self._basis.sort(key=lambda t: t[0])
        return True


# --------------------------------------------------------------------------
# prime-field linear algebra on digit vectors
# --------------------------------------------------------------------------

def rank_p(p: int, rows: list[list[int]]) -> int:
    """Rank over F_p of a dense integer matrix (entries reduced mod p)."""
    work = [[c % p for c in row] for row in rows]
    rank_ = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(rank_, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank_], work[pivot_row] = work[pivot_row], work[rank_]
        inv_p = pow(work[rank_][c], p - 2, p)
        work[rank_] = [(a * inv_p) % p for a in work[rank_]]
        for i in range(len(work)):
            if i != rank_ and work[i][c]:
                f = p - work[i][c]
                wr = work[rank_]
                wi = work[i]
                for j in range(c, ncols):
                    if wr[j]:
                        wi[j] = (wi[j] + f * wr[j]) % p
        rank_ += 1
        if rank_ == len(work):
            break
    return rank_


def nullspace_p(p: int, rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the right kernel over F_p (as row vectors)."""
    work = [[c % p for c in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv_p = pow(work[r][c], p - 2, p)
        work[r] = [(a * inv_p) % p for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = p - work[i][c]
                wr = work[r]
                wi = work[i]
                for j in range(c, ncols):
                    if wr[j]:
                        wi[j] = (wi[j] + f * wr[j]) % p
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-work[i][fc]) % p
        basis.append(v)
    return basis


def rank_q(field: FieldTower, v) -> int:
    """dim over F_q of the span of the entries of v (entries in F_{q^m})."""
    p, e = field.p, field.e
    rows = []
    for a in v:
        b = field.check(a)
        for j in range(e):
            rows.append(list(field.coeffs(b)))
            if j + 1 < e:
                b = field.mul(b, field.gamma)
    r = rank_p(p, rows)
    if r % e:
        raise AssertionError("F_p-rank not divisible by e")  # pragma: no cover
    return r // e


def moore_matrix(field: FieldTower, v, k: int, theta: GaloisAut) -> Matrix:
    """Rows v, theta(v), ..., theta^(k-1)(v) (theta applied entrywise)."""
    rows = []
    cur = tuple(field.check(a) for a in v)
    for _ in range(k):
        rows.append(cur)
        cur = theta.on_vector(cur)
    return tuple(rows)


def random_full_rank_vector(field: FieldTower, n: int, rng, subfield_size: int | None = None) -> Vector:
    """Random length-n vector with rank_q = n; entries restricted to the
    subfield with subfield_size elements when given."""
    if n > field.m:
        raise ValueError("rank_q cannot reach n > m")
    while True:
        if subfield_size is None:
            v = tuple(field.random_element(rng) for _ in range(n))
        else:
            v = tuple(
                field.subfield_element(subfield_size, rng.randbelow(subfield_size))
                for _ in range(n)
            )
        if rank_q(field, v) == n:
            return v


def random_invertible_matrix_q(field: FieldTower, n: int, rng) -> Matrix:
    """Random invertible n x n matrix with entries in the subfield F_q."""
    q = field.q
    while True:
        A = tuple(
            tuple(field.subfield_element(q, rng.randbelow(q)) for _ in range(n))
            for _ in range(n)
        )
        if det(field, A) != 0:
            return A
