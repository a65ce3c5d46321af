"""Second cohomology with trivial coefficients F^k.

A 2-cochain on an algebra B is a triple of bilinear forms B x B -> F^k,
one per operation.  Cocycles are the triples satisfying the eleven
constraint families obtained from the defining identities (family i comes
from identity i, so a violated constraint row names the identity an
extension built from the triple would break).  Coboundaries are the
triples of the form (x, y) -> -eps(x * y) for a linear map eps: B -> F^k.

Cochains are vectorized in a fixed order: operation ("vdash", "dashv",
"perp"), then the basis pair (i, j) row-major, then the coefficient
coordinate, giving an ambient space of dimension 3 n^2 k.  The constraint
system splits per coefficient coordinate, so the k > 1 spaces are the
k-fold coordinate expansions of the k = 1 spaces; canonicity of RREF bases
makes that expansion exact, not a convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import IDENTITIES, OPS, TriAlgebra
from .fields import check_same_field
from .linalg import Matrix, Subspace, inverse, kernel

__all__ = [
    "CochainTriple",
    "CocycleViolation",
    "NotACocycleError",
    "NotASectionError",
    "cocycle_defects",
    "z2_space",
    "b2_space",
    "h2",
    "CohomologyResult",
    "section_cocycle",
    "is_cohomologous",
]


class NotACocycleError(ValueError):
    """Raised when a triple violates the cocycle constraints.

    Carries the violated identity indices so callers can match them against
    an axiom report of the corresponding raw extension.
    """

    def __init__(self, violations):
        self.violations = tuple(violations)
        axioms = sorted({v.axiom for v in self.violations})
        super().__init__(f"triple violates cocycle constraint families {axioms}")

    def violated_axioms(self):
        return tuple(sorted({v.axiom for v in self.violations}))


class NotASectionError(ValueError):
    pass


@dataclass(frozen=True)
class CocycleViolation:
    axiom: int
    triple: tuple[int, int, int]
    defect: tuple  # length-k coefficient vector


class CochainTriple:
    """Three F^k-valued bilinear forms on a base algebra, stored sparsely."""

    __slots__ = ("base", "coeff_dim", "forms")

    def __init__(
        self,
        base: TriAlgebra,
        coeff_dim: int,
        forms: Mapping[str, Mapping[tuple[int, int], Sequence]] | None = None,
    ):
        if coeff_dim < 0:
            raise ValueError("coefficient dimension must be >= 0")
        self.base = base
        self.coeff_dim = coeff_dim
        n = base.dim
        coerce = base.field.coerce
        norm: dict[str, dict[tuple[int, int], tuple]] = {op: {} for op in OPS}
        for op, table in (forms or {}).items():
            if op not in OPS:
                raise ValueError(f"unknown operation {op!r}")
            for key, val in table.items():
                i, j = key
                if not (0 <= i < n and 0 <= j < n):
                    raise ValueError(f"basis pair {key} out of range")
                vec = tuple(coerce(x) for x in val)
                if len(vec) != coeff_dim:
                    raise ValueError(
                        f"value at {op}{key} has length {len(vec)}, expected {coeff_dim}"
                    )
                if any(vec):
                    norm[op][(i, j)] = vec
        self.forms = {op: dict(sorted(norm[op].items())) for op in OPS}

    @classmethod
    def zero(cls, base: TriAlgebra, coeff_dim: int) -> "CochainTriple":
        return cls(base, coeff_dim, {})

    @classmethod
    def from_vector(cls, base: TriAlgebra, coeff_dim: int, vec: Sequence) -> "CochainTriple":
        n = base.dim
        if len(vec) != 3 * n * n * coeff_dim:
            raise ValueError("vector length does not match 3*n^2*k")
        forms: dict = {op: {} for op in OPS}
        for o, op in enumerate(OPS):
            for i in range(n):
                for j in range(n):
                    start = ((o * n + i) * n + j) * coeff_dim
                    val = tuple(vec[start : start + coeff_dim])
                    if any(val):
                        forms[op][(i, j)] = val
        return cls(base, coeff_dim, forms)

    @classmethod
    def stack(cls, base: TriAlgebra, components: Sequence["CochainTriple"]) -> "CochainTriple":
        """Combine k scalar-valued cochains into one F^k-valued cochain."""
        k = len(components)
        for c in components:
            if c.base != base or c.coeff_dim != 1:
                raise ValueError("stack expects scalar cochains on the same base")
        forms: dict = {op: {} for op in OPS}
        zero = base.field.zero
        for t, c in enumerate(components):
            for op in OPS:
                for key, val in c.forms[op].items():
                    cur = forms[op].get(key)
                    if cur is None:
                        cur = [zero] * k
                        forms[op][key] = cur
                    cur[t] = val[0]
        return cls(base, k, forms)

    def entry(self, op: str, i: int, j: int) -> tuple:
        val = self.forms[op].get((i, j))
        if val is None:
            return (self.base.field.zero,) * self.coeff_dim
        return val

    def evaluate(self, x: Sequence, y: Sequence, op: str) -> tuple:
        """Bilinear extension: value of the ``op`` form at (x, y)."""
        f = self.base.field
        add, mul = f.add, f.mul
        acc = [f.zero] * self.coeff_dim
        for (i, j), val in self.forms[op].items():
            xi = x[i]
            if not xi:
                continue
            yj = y[j]
            if not yj:
                continue
            c = mul(xi, yj)
            for t, v in enumerate(val):
                if v:
                    acc[t] = add(acc[t], mul(c, v))
        return tuple(acc)

    def vectorize(self) -> tuple:
        n = self.base.dim
        k = self.coeff_dim
        zero = self.base.field.zero
        out = [zero] * (3 * n * n * k)
        for o, op in enumerate(OPS):
            for (i, j), val in self.forms[op].items():
                start = ((o * n + i) * n + j) * k
                for t, v in enumerate(val):
                    out[start + t] = v
        return tuple(out)

    def sub(self, other: "CochainTriple") -> "CochainTriple":
        if self.base != other.base or self.coeff_dim != other.coeff_dim:
            raise ValueError("cochains live on different bases")
        f = self.base.field
        forms: dict = {op: {} for op in OPS}
        for op in OPS:
            keys = set(self.forms[op]) | set(other.forms[op])
            for key in keys:
                a = self.entry(op, *key)
                b = other.entry(op, *key)
                val = tuple(f.sub(x, y) for x, y in zip(a, b))
                if any(val):
                    forms[op][key] = val
        return CochainTriple(self.base, self.coeff_dim, forms)

    def __eq__(self, other):
        return (
            isinstance(other, CochainTriple)
            and self.base == other.base
            and self.coeff_dim == other.coeff_dim
            and self.forms == other.forms
        )

    __hash__ = None

    def __repr__(self):
        nnz = sum(len(self.forms[op]) for op in OPS)
        return f"CochainTriple(base dim {self.base.dim}, k={self.coeff_dim}, {nnz} entries)"


def cocycle_defects(f: CochainTriple) -> list[CocycleViolation]:
    """Defects of the eleven constraint families, evaluated sparsely.

    Family i instantiated on the basis triple (x, y, z) reads
    f_B(x A y, z) - f_C(x, y D z) for identity i = (A, B, C, D); a triple
    is a cocycle exactly when every defect vanishes.
    """
    base = f.base
    fld = base.field
    add, sub, mul = fld.add, fld.sub, fld.mul
    k = f.coeff_dim
    by_first: dict[str, dict[int, list]] = {op: {} for op in OPS}
    by_second: dict[str, dict[int, list]] = {op: {} for op in OPS}
    for op in OPS:
        for (i, j), val in f.forms[op].items():
            by_first[op].setdefault(i, []).append((j, val))
            by_second[op].setdefault(j, []).append((i, val))
    violations = []
    for idx, (op_a, op_b, op_c, op_d) in enumerate(IDENTITIES, start=1):
        acc: dict[tuple[int, int, int], list] = {}
        for (i, j), vab in base.products[op_a].items():
            for m, s in vab.items():
                for l, val in by_first[op_b].get(m, ()):  # noqa: E741
                    slot = acc.setdefault((i, j, l), [fld.zero] * k)
                    for t, v in enumerate(val):
                        if v:
                            slot[t] = add(slot[t], mul(s, v))
        for (j, l), vbc in base.products[op_d].items():  # noqa: E741
            for m, s in vbc.items():
                for i, val in by_second[op_c].get(m, ()):
                    slot = acc.setdefault((i, j, l), [fld.zero] * k)
                    for t, v in enumerate(val):
                        if v:
                            slot[t] = sub(slot[t], mul(s, v))
        for triple in sorted(acc):
            slot = acc[triple]
            if any(slot):
                violations.append(CocycleViolation(idx, triple, tuple(slot)))
    return violations


def _scalar_cocycle_matrix(b: TriAlgebra) -> Matrix:
    """Constraint matrix of the k = 1 cocycle system.

    Unknown (op, i, j) sits at column (o*n + i)*n + j; rows are ordered by
    (family index, basis triple).
    """
    n = b.dim
    fld = b.field
    add, sub = fld.add, fld.sub
    rows_map: dict[tuple, dict[int, object]] = {}
    for idx, (op_a, op_b, op_c, op_d) in enumerate(IDENTITIES, start=1):
        ob = OPS.index(op_b)
        oc = OPS.index(op_c)
        for (i, j), vab in b.products[op_a].items():
            for l in range(n):  # noqa: E741
                row = rows_map.setdefault((idx, i, j, l), {})
                for m, s in vab.items():
                    col = (ob * n + m) * n + l
                    row[col] = add(row.get(col, fld.zero), s)
        for (j, l), vbc in b.products[op_d].items():  # noqa: E741
            for i in range(n):
                row = rows_map.setdefault((idx, i, j, l), {})
                for m, s in vbc.items():
                    col = (oc * n + i) * n + m
                    row[col] = sub(row.get(col, fld.zero), s)
    ncols = 3 * n * n
    dense = []
    for key in sorted(rows_map):
        sparse = rows_map[key]
        if any(sparse.values()):
            row = [fld.zero] * ncols
            for col, v in sparse.items():
                row[col] = v
            dense.append(row)
    return Matrix(fld, dense, cols=ncols)


def _expand_subspace(sub: Subspace, k: int) -> Subspace:
    """k-fold coordinate expansion: w -> w (x) e_t, coefficient-minor order."""
    if k == 1:
        return sub
    n = sub.ambient_dim
    zero = sub.field.zero
    rows = []
    for w in sub.basis_rows():
        for t in range(k):
            big = [zero] * (n * k)
            for idx, v in enumerate(w):
                if v:
                    big[idx * k + t] = v
            rows.append(big)
    return Subspace.from_rows(sub.field, n * k, rows)


def _z2_scalar(b: TriAlgebra) -> Subspace:
    cached = b._cache.get("z2_scalar")
    if cached is None:
        cached = kernel(_scalar_cocycle_matrix(b))
        b._cache["z2_scalar"] = cached
    return cached


def z2_space(b: TriAlgebra, k: int = 1) -> Subspace:
    """Canonical basis of the cocycle space Z^2(B, F^k)."""
    if k < 1:
        raise ValueError("coefficient dimension must be >= 1")
    b.require_valid()
    return _expand_subspace(_z2_scalar(b), k)


def _b2_scalar(b: TriAlgebra) -> Subspace:
    cached = b._cache.get("b2_scalar")
    if cached is not None:
        return cached
    n = b.dim
    fld = b.field
    rows = []
    for m in range(n):
        row = [fld.zero] * (3 * n * n)
        nonzero = False
        for o, op in enumerate(OPS):
            for (i, j), vec in b.products[op].items():
                s = vec.get(m)
                if s:
                    row[(o * n + i) * n + j] = fld.neg(s)
                    nonzero = True
        if nonzero:
            rows.append(row)
    result = Subspace.from_rows(fld, 3 * n * n, rows)
    b._cache["b2_scalar"] = result
    return result


def b2_space(b: TriAlgebra, k: int = 1) -> Subspace:
    """Coboundary space: image of eps -> (-eps(x*y)) over linear eps."""
    if k < 1:
        raise ValueError("coefficient dimension must be >= 1")
    return _expand_subspace(_b2_scalar(b), k)


class CohomologyResult:
    """Z^2, B^2, and a canonical set of H^2 class representatives.

    Representatives are the pivot-completion complement of B^2 inside Z^2,
    so repeated runs always pick the same cochains.  ``class_coordinates``
    returns coordinates of a cocycle's class against that complement.
    """

    __slots__ = ("base", "coeff_dim", "z2", "b2", "h2_reps", "_solver")

    def __init__(self, base, coeff_dim, z2, b2, h2_reps):
        self.base = base
        self.coeff_dim = coeff_dim
        self.z2 = z2
        self.b2 = b2
        self.h2_reps = tuple(h2_reps)
        self._solver = None

    @property
    def h2_dim(self) -> int:
        return self.z2.dim - self.b2.dim

    def class_coordinates(self, vec: Sequence) -> tuple:
        """Coset coordinates of a cocycle vector relative to the stored
        complement of B^2 in Z^2."""
        u = self.z2.coordinates(vec)
        if self.h2_dim == 0:
            return ()
        if self._solver is None:
            stacked = list(self.b2.basis_rows()) + [r.vectorize() for r in self.h2_reps]
            t = Matrix(
                self.z2.field,
                [[row[pc] for pc in self.z2.pivots] for row in stacked],
                cols=self.z2.dim,
            )
            self._solver = inverse(t.transpose())
        w = self._solver.matvec(u)
        return tuple(w[self.b2.dim :])

    def class_of(self, cochain: CochainTriple) -> tuple:
        return self.class_coordinates(cochain.vectorize())


def h2(b: TriAlgebra, k: int = 1) -> CohomologyResult:
    """Second cohomology with coefficients in F^k."""
    z2 = z2_space(b, k)
    b2 = b2_space(b, k)
    comp = b2.complement_in(z2)
    reps = [CochainTriple.from_vector(b, k, row) for row in comp.basis_rows()]
    return CohomologyResult(b, k, z2, b2, reps)


def section_cocycle(
    total: TriAlgebra,
    base: TriAlgebra,
    projection: Matrix,
    kernel_space: Subspace,
    section: Matrix,
) -> CochainTriple:
    """Cocycle induced by a section of a central extension.

    For basis vectors x, y of the base the value is
    mu(x) * mu(y) - mu(x * y), expressed in the kernel's canonical basis.
    Raises ``NotASectionError`` unless projection @ section is the identity.
    """
    check_same_field(total.field, base.field)
    if projection @ section != Matrix.identity(base.field, base.dim):
        raise NotASectionError("map is not a right inverse of the projection")
    k = kernel_space.dim
    n = base.dim
    f = base.field
    mu_cols = [section.column(i) for i in range(n)]
    forms: dict = {op: {} for op in OPS}
    for op in OPS:
        for i in range(n):
            for j in range(n):
                v = list(total.multiply(mu_cols[i], mu_cols[j], op))
                bp = base.product(op, i, j)
                if any(bp):
                    mv = section.matvec(bp)
                    v = [f.sub(x, y) for x, y in zip(v, mv)]
                if any(v):
                    try:
                        coords = kernel_space.coordinates(v)
                    except ValueError:
                        raise NotASectionError(
                            "section defect escapes the kernel; extension is not central "
                            "over this kernel"
                        ) from None
                    forms[op][(i, j)] = coords
    return CochainTriple(base, k, forms)


def is_cohomologous(f: CochainTriple, g: CochainTriple) -> bool:
    """True when f - g is a coboundary (same base, same coefficients)."""
    if f.base != g.base or f.coeff_dim != g.coeff_dim:
        raise ValueError("cochains live on different bases")
    diff = f.sub(g).vectorize()
    return b2_space(f.base, f.coeff_dim).contains_vector(diff)
