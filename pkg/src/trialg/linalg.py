"""Deterministic exact linear algebra over Q and F_p.

Dense matrices with exact scalars, reduced row-echelon forms with a fixed
pivot rule (leftmost column, first nonzero row), kernels, and a subspace
lattice whose values are canonical: a subspace is stored as the unique RREF
basis of its row space, so two subspaces are equal as sets exactly when
their stored bases are identical entry-wise.  Everything downstream leans
on that canonicity for exact equality tests.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fields import Field, check_same_field

__all__ = [
    "Matrix",
    "Subspace",
    "rref",
    "rank",
    "kernel",
    "inverse",
    "solve_right",
    "random_invertible",
    "ContainmentError",
    "SingularMatrixError",
    "InconsistentSystemError",
]


class ContainmentError(ValueError):
    """A subspace operation required a containment that does not hold."""


class SingularMatrixError(ValueError):
    pass


class InconsistentSystemError(ValueError):
    pass


class Matrix:
    """Immutable dense matrix over one exact field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: Iterable[Iterable], cols: int | None = None):
        coerce = field.coerce
        tup = tuple(tuple(coerce(x) for x in row) for row in data)
        nrows = len(tup)
        if nrows:
            width = len(tup[0])
            if any(len(r) != width for r in tup):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, rows have {width}")
            cols = width
        elif cols is None:
            cols = 0
        self.field = field
        self.rows = nrows
        self.cols = cols
        self.data = tup

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * cols for _ in range(rows)], cols=cols)

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def column_select(self, cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[r[c] for c in cols] for r in self.data], cols=len(cols))

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(
            self.field,
            [a + b for a, b in zip(self.data, other.data)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        ot = other.data
        out = []
        for arow in self.data:
            acc = [zero] * other.cols
            for k, a in enumerate(arow):
                if a:
                    brow = ot[k]
                    acc = [add(x, mul(a, b)) for x, b in zip(acc, brow)]
            out.append(acc)
        return Matrix(f, out, cols=other.cols)

    def matvec(self, v: Sequence) -> tuple:
        """Column-vector action ``M v``; skips zero entries of ``v``."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        acc = [zero] * self.rows
        for j, x in enumerate(v):
            if x:
                for i in range(self.rows):
                    e = self.data[i][j]
                    if e:
                        acc[i] = add(acc[i], mul(e, x))
        return tuple(acc)

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.field.name}, {self.rows}x{self.cols})"


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Unique reduced row-echelon form with its pivot columns.

    Deterministic: pivots are taken in the leftmost column with a nonzero
    entry, using the topmost such row, then scaled to 1 with full
    elimination above and below.
    """
    f = m.field
    mul, sub, inv = f.mul, f.sub, f.inv
    rows = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = None
        for i in range(r, nr):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        pivot_row = rows[r]
        pv = pivot_row[c]
        if pv != f.one:
            s = inv(pv)
            for cc in range(c, nc):
                if pivot_row[cc]:
                    pivot_row[cc] = mul(s, pivot_row[cc])
        for i in range(nr):
            if i == r:
                continue
            t = rows[i][c]
            if t:
                ri = rows[i]
                for cc in range(c, nc):
                    p = pivot_row[cc]
                    if p:
                        ri[cc] = sub(ri[cc], mul(t, p))
        pivots.append(c)
        r += 1
    return Matrix(f, rows, cols=nc), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix) -> "Subspace":
    """Canonical basis of the right null space of ``m``."""
    f = m.field
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    neg, zero, one = f.neg, f.zero, f.one
    basis = []
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            e = red.data[r][fc]
            if e:
                v[pc] = neg(e)
        basis.append(v)
    return Subspace.from_rows(f, m.cols, basis)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise SingularMatrixError("inverse of a non-square matrix")
    n = m.rows
    red, pivots = rref(m.hstack(Matrix.identity(m.field, n)))
    if pivots != tuple(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Matrix(m.field, [row[n:] for row in red.data], cols=n)


def solve_right(a: Matrix, b: Matrix) -> Matrix:
    """Deterministic particular solution ``X`` of ``A X = B`` (free vars 0)."""
    check_same_field(a.field, b.field)
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    red, pivots = rref(a.hstack(b))
    if any(p >= a.cols for p in pivots):
        raise InconsistentSystemError("system has no solution")
    f = a.field
    zero = f.zero
    out = [[zero] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            out[pc][j] = red.data[r][a.cols + j]
    return Matrix(f, out, cols=b.cols)


def random_invertible(rng, n: int, field: Field) -> Matrix:
    """Seeded random invertible matrix with small entries."""
    while True:
        m = Matrix(field, [[field.random_scalar(rng) for _ in range(n)] for _ in range(n)], cols=n)
        if rank(m) == n:
            return m


class Subspace:
    """Linear subspace of F^n held as its canonical RREF basis.

    Invariants: the basis matrix is in reduced row-echelon form with no
    zero rows, the pivot list is ascending, and dim == number of rows ==
    number of pivots.  Equality of ``Subspace`` values is equality of the
    underlying sets.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_rows(cls, field: Field, ambient_dim: int, rows: Iterable[Iterable]) -> "Subspace":
        m = Matrix(field, rows, cols=ambient_dim)
        if m.cols != ambient_dim:
            raise ValueError("ambient dimension mismatch")
        red, pivots = rref(m)
        basis = Matrix(field, red.data[: len(pivots)], cols=ambient_dim)
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.from_rows(field, ambient_dim, [])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.from_rows(field, ambient_dim, Matrix.identity(field, ambient_dim).data)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def is_zero(self) -> bool:
        return self.dim == 0

    def reduce_vector(self, v: Sequence) -> tuple:
        """Residual of ``v`` after eliminating this subspace's pivots."""
        f = self.field
        coerce, sub, mul = f.coerce, f.sub, f.mul
        w = [coerce(x) for x in v]
        if len(w) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        for r, pc in enumerate(self.pivots):
            c = w[pc]
            if c:
                row = self.basis.data[r]
                for j in range(pc, self.ambient_dim):
                    e = row[j]
                    if e:
                        w[j] = sub(w[j], mul(c, e))
        return tuple(w)

    def contains_vector(self, v: Sequence) -> bool:
        return all(not x for x in self.reduce_vector(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in the canonical basis; errors if outside."""
        coords = tuple(self.field.coerce(v[pc]) for pc in self.pivots)
        if not all(not x for x in self.reduce_vector(v)):
            raise ValueError("vector is not in the subspace")
        return coords

    def contains(self, other: "Subspace") -> bool:
        check_same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(row) for row in other.basis.data)

    def plus(self, other: "Subspace") -> "Subspace":
        check_same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_rows(
            self.field, self.ambient_dim, self.basis.data + other.basis.data
        )

    def annihilator(self) -> "Subspace":
        """Kernel of the basis matrix: functionals vanishing on the space."""
        return kernel(self.basis) if self.dim else Subspace.full(self.field, self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        check_same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        ann = self.annihilator().plus(other.annihilator())
        if ann.dim == 0:
            return Subspace.full(self.field, self.ambient_dim)
        return kernel(ann.basis)

    def complement_in(self, sup: "Subspace") -> "Subspace":
        """Deterministic complement: complete this space's pivots with the
        enclosing basis rows, taken in pivot order."""
        if not sup.contains(self):
            raise ContainmentError("complement requires containment in the larger space")
        kept: list[tuple] = []
        current = self
        for row in sup.basis.data:
            if not current.contains_vector(row):
                kept.append(row)
                current = Subspace.from_rows(
                    self.field, self.ambient_dim, current.basis.data + tuple([row])
                )
        return Subspace.from_rows(self.field, self.ambient_dim, kept)

    def quotient_map(self, sup: "Subspace") -> Matrix:
        """Matrix sending ``x`` in ``sup`` to its coordinates in ``sup/self``.

        Coordinates are taken against the pivot-completion complement, so
        the map is canonical given the two spaces.
        """
        comp = self.complement_in(sup)
        f = self.field
        stacked = self.basis.data + comp.basis.data
        q = comp.dim
        if q == 0:
            return Matrix.zeros(f, 0, self.ambient_dim)
        t = Matrix(f, [[row[pc] for pc in sup.pivots] for row in stacked], cols=sup.dim)
        w = inverse(t.transpose())
        out = [[f.zero] * self.ambient_dim for _ in range(q)]
        for r in range(q):
            wrow = w.data[self.dim + r]
            for j, pc in enumerate(sup.pivots):
                out[r][pc] = wrow[j]
        return Matrix(f, out, cols=self.ambient_dim)

    def basis_rows(self) -> tuple[tuple, ...]:
        return self.basis.data

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.data == other.basis.data
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.data))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.field.name}^{self.ambient_dim})"
