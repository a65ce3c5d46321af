"""Structure-constant triassociative algebras.

An algebra of dimension n over an exact field is stored as three sparse
product tables, one per operation ("vdash", "dashv", "perp"), mapping a
basis pair (i, j) to the nonzero coordinates of e_i * e_j.  The eleven
defining identities are checked on basis triples only, which suffices by
trilinearity.

Identity indexing is fixed once and for all (reading order of the usual
two-column display, 1-based):

     1  (x |- y) |- z  =  x |- (y |- z)
     2  (x -| y) -| z  =  x -| (y -| z)
     3  (x -| y) |- z  =  x |- (y |- z)
     4  (x -| y) -| z  =  x -| (y |- z)
     5  (x |- y) -| z  =  x |- (y -| z)
     6  (x _|_ y) |- z  =  x |- (y |- z)
     7  (x -| y) -| z  =  x -| (y _|_ z)
     8  (x |- y) _|_ z  =  x |- (y _|_ z)
     9  (x _|_ y) -| z  =  x _|_ (y -| z)
    10  (x -| y) _|_ z  =  x _|_ (y |- z)
    11  (x _|_ y) _|_ z  =  x _|_ (y _|_ z)

Violation reports cite these indices; the cocycle constraint families of
the cohomology module are aligned with them row by row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .fields import Field, QQ, check_same_field
from .linalg import Matrix, Subspace, kernel

__all__ = [
    "VDASH",
    "DASHV",
    "PERP",
    "OPS",
    "IDENTITIES",
    "identity_str",
    "TriAlgebra",
    "AlgSubspace",
    "AxiomViolation",
    "AxiomReport",
    "MalformedAlgebraError",
    "InvalidAlgebraError",
    "NotAnIdealError",
    "product_subspace",
    "is_ideal",
    "quotient_algebra",
    "QuotientAlgebra",
    "hom_to_field",
    "check_dim_bounds",
    "BoundReport",
    "dimension_bound_table",
    "BOUND_FORMULAS",
    "change_basis",
    "as_subspace",
]

VDASH = "vdash"  # |-
DASHV = "dashv"  # -|
PERP = "perp"    # _|_
OPS = (VDASH, DASHV, PERP)

_OP_SYMBOL = {VDASH: "|-", DASHV: "-|", PERP: "_|_"}

# Each identity reads (x A y) B z = x C (y D z), stored as (A, B, C, D).
IDENTITIES = (
    (VDASH, VDASH, VDASH, VDASH),
    (DASHV, DASHV, DASHV, DASHV),
    (DASHV, VDASH, VDASH, VDASH),
    (DASHV, DASHV, DASHV, VDASH),
    (VDASH, DASHV, VDASH, DASHV),
    (PERP, VDASH, VDASH, VDASH),
    (DASHV, DASHV, DASHV, PERP),
    (VDASH, PERP, VDASH, PERP),
    (PERP, DASHV, PERP, DASHV),
    (DASHV, PERP, PERP, VDASH),
    (PERP, PERP, PERP, PERP),
)


def identity_str(index: int) -> str:
    """Human-readable form of identity ``index`` (1-based)."""
    a, b, c, d = IDENTITIES[index - 1]
    return (
        f"(x {_OP_SYMBOL[a]} y) {_OP_SYMBOL[b]} z = "
        f"x {_OP_SYMBOL[c]} (y {_OP_SYMBOL[d]} z)"
    )


class MalformedAlgebraError(ValueError):
    """Structure-constant data with inconsistent shapes or indices."""


class InvalidAlgebraError(ValueError):
    """An operation required a validated algebra but the axioms fail."""


class NotAnIdealError(ValueError):
    pass


@dataclass(frozen=True)
class AxiomViolation:
    axiom: int                      # 1..11
    triple: tuple[int, int, int]    # 0-based basis indices (x, y, z)
    defect: tuple                   # lhs - rhs as a dense vector

    def __str__(self):
        i, j, l = self.triple
        return f"axiom {self.axiom} [{identity_str(self.axiom)}] fails on (e{i}, e{j}, e{l})"


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    violations: tuple[AxiomViolation, ...]

    def violated_axioms(self) -> tuple[int, ...]:
        return tuple(sorted({v.axiom for v in self.violations}))


class TriAlgebra:
    """Finite-dimensional algebra with three bilinear products.

    ``products[op][(i, j)]`` is a sparse vector {k: scalar} giving the
    nonzero coordinates of e_i op e_j.  Instances are immutable; validation
    and the common subspaces are computed once and cached.
    """

    __slots__ = (
        "dim",
        "field",
        "products",
        "name",
        "_axiom_report",
        "_center",
        "_derived",
        "_by_first",
        "_by_second",
        "_cache",
    )

    def __init__(
        self,
        dim: int,
        field: Field = QQ,
        products: Mapping[str, Mapping[tuple[int, int], Mapping[int, object] | Sequence]] | None = None,
        name: str | None = None,
    ):
        if not isinstance(dim, int) or dim < 0:
            raise MalformedAlgebraError(f"bad dimension {dim!r}")
        self.dim = dim
        self.field = field
        self.name = name
        norm: dict[str, dict[tuple[int, int], dict[int, object]]] = {op: {} for op in OPS}
        coerce = field.coerce
        for op, table in (products or {}).items():
            if op not in OPS:
                raise MalformedAlgebraError(f"unknown operation {op!r}")
            for key, vec in table.items():
                i, j = key
                if not (0 <= i < dim and 0 <= j < dim):
                    raise MalformedAlgebraError(f"basis pair {key} out of range for dim {dim}")
                if isinstance(vec, Mapping):
                    entries = vec.items()
                    for k, _ in entries:
                        if not (0 <= k < dim):
                            raise MalformedAlgebraError(
                                f"product coordinate {k} out of range for dim {dim}"
                            )
                    sparse = {k: coerce(v) for k, v in sorted(vec.items())}
                else:
                    seq = list(vec)
                    if len(seq) != dim:
                        raise MalformedAlgebraError(
                            f"product vector for {op}{key} has length {len(seq)}, expected {dim}"
                        )
                    sparse = {k: coerce(v) for k, v in enumerate(seq)}
                sparse = {k: v for k, v in sparse.items() if v}
                if sparse:
                    norm[op][(i, j)] = sparse
        self.products = {op: dict(sorted(norm[op].items())) for op in OPS}
        self._axiom_report = None
        self._center = None
        self._derived = None
        self._by_first = None
        self._by_second = None
        self._cache = {}

    @classmethod
    def from_tensors(
        cls, field: Field, tensors: Mapping[str, Sequence], name: str | None = None
    ) -> "TriAlgebra":
        """Build from dense n x n x n coordinate tensors, one per operation."""
        dims = set()
        for op in OPS:
            t = tensors.get(op)
            if t is None:
                continue
            dims.add(len(t))
        if not dims:
            raise MalformedAlgebraError("no tensors given")
        if len(dims) != 1:
            raise MalformedAlgebraError("tensor dimensions disagree")
        n = dims.pop()
        products: dict = {}
        for op in OPS:
            t = tensors.get(op)
            if t is None:
                continue
            table = {}
            if len(t) != n:
                raise MalformedAlgebraError("tensor dimensions disagree")
            for i in range(n):
                if len(t[i]) != n:
                    raise MalformedAlgebraError(f"tensor {op} is not {n}x{n}x{n}")
                for j in range(n):
                    row = t[i][j]
                    if len(row) != n:
                        raise MalformedAlgebraError(f"tensor {op} is not {n}x{n}x{n}")
                    table[(i, j)] = row
            products[op] = table
        return cls(n, field, products, name=name)

    def tensor(self, op: str) -> tuple:
        """Dense n x n x n tensor of one operation."""
        zero = self.field.zero
        n = self.dim
        out = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j), vec in self.products[op].items():
            for k, v in vec.items():
                out[i][j][k] = v
        return tuple(tuple(tuple(r) for r in plane) for plane in out)

    def product(self, op: str, i: int, j: int) -> tuple:
        """Dense coordinate vector of e_i op e_j."""
        zero = self.field.zero
        out = [zero] * self.dim
        for k, v in self.products[op].get((i, j), {}).items():
            out[k] = v
        return tuple(out)

    def multiply(self, x: Sequence, y: Sequence, op: str) -> tuple:
        """Bilinear extension of the structure constants to vectors."""
        if op not in OPS:
            raise ValueError(f"unknown operation {op!r}")
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        out = [zero] * self.dim
        for (i, j), vec in self.products[op].items():
            xi = x[i]
            if not xi:
                continue
            yj = y[j]
            if not yj:
                continue
            c = mul(xi, yj)
            for k, v in vec.items():
                out[k] = add(out[k], mul(c, v))
        return tuple(out)

    def _index_by_first(self, op: str) -> dict:
        if self._by_first is None:
            by_first = {o: {} for o in OPS}
            for o in OPS:
                for (i, j), vec in self.products[o].items():
                    by_first[o].setdefault(i, []).append((j, vec))
            self._by_first = by_first
        return self._by_first[op]

    def _index_by_second(self, op: str) -> dict:
        if self._by_second is None:
            by_second = {o: {} for o in OPS}
            for o in OPS:
                for (i, j), vec in self.products[o].items():
                    by_second[o].setdefault(j, []).append((i, vec))
            self._by_second = by_second
        return self._by_second[op]

    def axiom_report(self) -> AxiomReport:
        """Check all eleven identities on every basis triple.

        Only triples that touch a nonzero product can produce a nonzero
        defect, so the sweep runs over the sparse tables.
        """
        if self._axiom_report is not None:
            return self._axiom_report
        f = self.field
        add, sub, mul = f.add, f.sub, f.mul
        violations = []
        for idx, (op_a, op_b, op_c, op_d) in enumerate(IDENTITIES, start=1):
            acc: dict[tuple[int, int, int], dict[int, object]] = {}
            by_first_b = self._index_by_first(op_b)
            for (i, j), vab in self.products[op_a].items():
                for m, s in vab.items():
                    for l, vml in by_first_b.get(m, ()):  # noqa: E741
                        slot = acc.setdefault((i, j, l), {})
                        for k, v in vml.items():
                            slot[k] = add(slot.get(k, f.zero), mul(s, v))
            by_second_c = self._index_by_second(op_c)
            for (j, l), vbc in self.products[op_d].items():  # noqa: E741
                for m, s in vbc.items():
                    for i, vim in by_second_c.get(m, ()):
                        slot = acc.setdefault((i, j, l), {})
                        for k, v in vim.items():
                            slot[k] = sub(slot.get(k, f.zero), mul(s, v))
            for triple in sorted(acc):
                slot = acc[triple]
                if any(v for v in slot.values()):
                    dense = [f.zero] * self.dim
                    for k, v in slot.items():
                        dense[k] = v
                    violations.append(AxiomViolation(idx, triple, tuple(dense)))
        report = AxiomReport(ok=not violations, violations=tuple(violations))
        self._axiom_report = report
        return report

    @property
    def is_valid(self) -> bool:
        return self.axiom_report().ok

    def require_valid(self) -> None:
        report = self.axiom_report()
        if not report.ok:
            first = report.violations[0]
            raise InvalidAlgebraError(
                f"algebra fails {len(report.violations)} identity instance(s); first: {first}"
            )

    # subspace helpers -------------------------------------------------

    def subspace(self, rows: Iterable[Sequence]) -> "AlgSubspace":
        return AlgSubspace(self, Subspace.from_rows(self.field, self.dim, rows))

    def full_subspace(self) -> "AlgSubspace":
        return AlgSubspace(self, Subspace.full(self.field, self.dim))

    def zero_subspace(self) -> "AlgSubspace":
        return AlgSubspace(self, Subspace.zero(self.field, self.dim))

    def derived(self) -> "AlgSubspace":
        """Span of all products of basis pairs, over all three operations."""
        if self._derived is None:
            rows = []
            for op in OPS:
                for key in self.products[op]:
                    rows.append(self.product(op, *key))
            self._derived = AlgSubspace(
                self, Subspace.from_rows(self.field, self.dim, rows)
            )
        return self._derived

    def center(self) -> "AlgSubspace":
        """Elements z with z * x = x * z = 0 for all x and all products.

        Computed as the kernel of the stacked left/right multiplication
        constraints assembled from the sparse tables.
        """
        if self._center is None:
            f = self.field
            add = f.add
            rows_map: dict[tuple, list] = {}
            for op in OPS:
                for (i, j), vec in self.products[op].items():
                    for k, s in vec.items():
                        left = rows_map.setdefault((op, 0, j, k), [f.zero] * self.dim)
                        left[i] = add(left[i], s)
                        right = rows_map.setdefault((op, 1, i, k), [f.zero] * self.dim)
                        right[j] = add(right[j], s)
            rows = [rows_map[key] for key in sorted(rows_map)]
            mat = Matrix(f, rows, cols=self.dim)
            self._center = AlgSubspace(self, kernel(mat))
        return self._center

    def __eq__(self, other):
        return (
            isinstance(other, TriAlgebra)
            and self.dim == other.dim
            and self.field == other.field
            and self.products == other.products
        )

    __hash__ = None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"TriAlgebra(dim {self.dim} over {self.field.name}{label})"


@dataclass(frozen=True)
class AlgSubspace:
    """A linear subspace attached to its parent algebra."""

    parent: TriAlgebra
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.parent.dim:
            raise ValueError("subspace ambient dimension differs from the parent algebra")
        check_same_field(self.space.field, self.parent.field)

    @property
    def dim(self) -> int:
        return self.space.dim


def as_subspace(parent: TriAlgebra, z) -> Subspace:
    """Accept either a bare Subspace or an AlgSubspace of ``parent``."""
    if isinstance(z, AlgSubspace):
        if z.parent != parent:
            raise ValueError("subspace belongs to a different algebra")
        return z.space
    if isinstance(z, Subspace):
        if z.ambient_dim != parent.dim:
            raise ValueError("subspace ambient dimension differs from the algebra")
        return z
    raise TypeError(f"expected Subspace or AlgSubspace, got {type(z).__name__}")


def product_subspace(s: AlgSubspace, t: AlgSubspace) -> AlgSubspace:
    """Span of all products of ``s`` by ``t`` under the three operations."""
    if s.parent != t.parent:
        raise ValueError("subspaces have different parent algebras")
    a = s.parent
    rows = []
    for u in s.space.basis_rows():
        for v in t.space.basis_rows():
            for op in OPS:
                p = a.multiply(u, v, op)
                if any(p):
                    rows.append(p)
    return AlgSubspace(a, Subspace.from_rows(a.field, a.dim, rows))


def is_ideal(s: AlgSubspace) -> bool:
    full = s.parent.full_subspace()
    return s.space.contains(product_subspace(full, s).space) and s.space.contains(
        product_subspace(s, full).space
    )


@dataclass(frozen=True)
class QuotientAlgebra:
    """Quotient by an ideal with its projection and a canonical section.

    ``projection`` maps parent coordinates to quotient coordinates;
    ``section`` embeds the quotient back along the pivot-completion
    complement, so ``projection @ section`` is the identity.
    """

    algebra: TriAlgebra
    projection: Matrix
    section: Matrix


def quotient_algebra(a: TriAlgebra, ideal) -> QuotientAlgebra:
    space = as_subspace(a, ideal)
    alg_sub = AlgSubspace(a, space)
    if not is_ideal(alg_sub):
        raise NotAnIdealError("subspace is not an ideal of the algebra")
    f = a.field
    full = Subspace.full(f, a.dim)
    comp = space.complement_in(full)
    proj = space.quotient_map(full)
    q = comp.dim
    section = Matrix(f, [[row[r] for row in comp.basis_rows()] for r in range(a.dim)], cols=q)
    products: dict = {op: {} for op in OPS}
    comp_rows = comp.basis_rows()
    for r in range(q):
        for s in range(q):
            for op in OPS:
                p = a.multiply(comp_rows[r], comp_rows[s], op)
                if any(p):
                    w = proj.matvec(p)
                    if any(w):
                        products[op][(r, s)] = {k: v for k, v in enumerate(w) if v}
    quot = TriAlgebra(q, f, products, name=None)
    return QuotientAlgebra(quot, proj, section)


def hom_to_field(a: TriAlgebra, k: int) -> Subspace:
    """Space of homomorphisms into the k-dimensional trivial module.

    Such a map is a k x n matrix whose rows annihilate the derived
    subalgebra; matrices are flattened row-major into F^(k*n).
    """
    if k < 1:
        raise ValueError("coefficient dimension must be >= 1")
    ann = a.derived().space.annihilator()
    n = a.dim
    zero = a.field.zero
    rows = []
    for t in range(k):
        for w in ann.basis_rows():
            big = [zero] * (k * n)
            big[t * n : (t + 1) * n] = list(w)
            rows.append(big)
    return Subspace.from_rows(a.field, k * n, rows)


@dataclass(frozen=True)
class BoundReport:
    """Dimension-bound check for an algebra, optionally as part of a
    defining pair (total algebra, central kernel inside the derived
    subalgebra)."""

    dim: int
    central_quotient_dim: int
    derived_dim: int
    derived_bound: int
    derived_ok: bool
    pair_base_dim: int | None = None
    total_bound: int | None = None
    total_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return self.derived_ok and (self.total_ok is not False)


def check_dim_bounds(a: TriAlgebra, pair_kernel=None) -> BoundReport:
    """Check dim L' <= 3 m^2 for m = dim(L/Z(L)); with a recorded defining
    pair kernel, also check dim L <= d(3d+1) for d the base dimension."""
    m = a.dim - a.center().dim
    derived_dim = a.derived().dim
    derived_bound = 3 * m * m
    pair_base_dim = None
    total_bound = None
    total_ok = None
    if pair_kernel is not None:
        ker = as_subspace(a, pair_kernel)
        pair_base_dim = a.dim - ker.dim
        total_bound = pair_base_dim * (3 * pair_base_dim + 1)
        total_ok = a.dim <= total_bound
    return BoundReport(
        dim=a.dim,
        central_quotient_dim=m,
        derived_dim=derived_dim,
        derived_bound=derived_bound,
        derived_ok=derived_dim <= derived_bound,
        pair_base_dim=pair_base_dim,
        total_bound=total_bound,
        total_ok=total_ok,
    )


BOUND_FORMULAS = (
    ("lie", lambda n: n * (n - 1) // 2, lambda n: n * (n + 1) // 2),
    ("leibniz", lambda n: n * n, lambda n: n * (n + 1)),
    ("associative", lambda n: n * n, lambda n: n * (n + 1)),
    ("diassociative", lambda n: 2 * n * n, lambda n: n * (2 * n + 1)),
    ("triassociative", lambda n: 3 * n * n, lambda n: n * (3 * n + 1)),
)


def dimension_bound_table(n_max: int) -> list[tuple[str, int, int, int]]:
    """Rows (class, n, derived bound, defining-pair bound) for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for cls_name, d_formula, k_formula in BOUND_FORMULAS:
        for n in range(1, n_max + 1):
            rows.append((cls_name, n, d_formula(n), k_formula(n)))
    return rows


def change_basis(a: TriAlgebra, p: Matrix) -> TriAlgebra:
    """Re-express the algebra in the basis whose i-th vector is row i of ``p``."""
    from .linalg import inverse

    if p.rows != a.dim or p.cols != a.dim:
        raise ValueError("basis matrix must be square of the algebra dimension")
    check_same_field(p.field, a.field)
    pinv = inverse(p)
    n = a.dim
    products: dict = {op: {} for op in OPS}
    for op in OPS:
        for i in range(n):
            for j in range(n):
                v = a.multiply(p.row(i), p.row(j), op)
                if any(v):
                    w = [a.field.zero] * n
                    for m, x in enumerate(v):
                        if x:
                            for kk in range(n):
                                e = pinv.data[m][kk]
                                if e:
                                    w[kk] = a.field.add(w[kk], a.field.mul(x, e))
                    sparse = {k: x for k, x in enumerate(w) if x}
                    if sparse:
                        products[op][(i, j)] = sparse
    return TriAlgebra(n, a.field, products, name=a.name)
