"""Central extensions, covers, and the stable center.

A central extension of F^k by B is built on the space B + F^k with
products (x, a) * (y, c) = (x * y, f(x, y)) for a cochain triple f; the
result satisfies the defining identities exactly when f is a cocycle, and
identity i fails exactly when constraint family i does.

A cover of L is constructed cohomologically: extend L by the canonical
H^2 representatives stacked into one vector-valued cocycle, then quotient
by the pivot complement of (kernel intersect derived) inside the kernel so
the result is a stem extension with kernel of the multiplier dimension.
The stable center Z*(L) is the image of the cover's center under the
covering projection; L is unicentral when that image is all of Z(L).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import (
    AlgSubspace,
    OPS,
    TriAlgebra,
    product_subspace,
    quotient_algebra,
)
from .cohomology import (
    CochainTriple,
    NotACocycleError,
    cocycle_defects,
    h2,
    section_cocycle,
)
from .linalg import Matrix, Subspace, random_invertible, solve_right

__all__ = [
    "CentralExtension",
    "extension_algebra",
    "build_central_extension",
    "cover",
    "CoverResult",
    "z_star",
    "is_unicentral",
    "stem_center_image_check",
    "StemImageReport",
]


@dataclass(frozen=True)
class CentralExtension:
    """A surjection total -> base whose kernel is central in total."""

    total: TriAlgebra
    base: TriAlgebra
    kernel: AlgSubspace          # subspace of total
    projection: Matrix           # base.dim x total.dim
    cocycle: CochainTriple | None = None

    @property
    def kernel_dim(self) -> int:
        return self.kernel.dim

    def is_stem(self) -> bool:
        return self.total.derived().space.contains(self.kernel.space)

    def canonical_section(self) -> Matrix:
        """Deterministic right inverse of the projection (free vars zero)."""
        return solve_right(self.projection, Matrix.identity(self.base.field, self.base.dim))

    def section_cocycle(self, section: Matrix | None = None) -> CochainTriple:
        if section is None:
            section = self.canonical_section()
        return section_cocycle(self.total, self.base, self.projection, self.kernel.space, section)

    def center_image(self) -> Subspace:
        """Image of the total algebra's center under the projection."""
        rows = [self.projection.matvec(z) for z in self.total.center().space.basis_rows()]
        return Subspace.from_rows(self.base.field, self.base.dim, rows)

    def validate(self) -> None:
        """Check the structural invariants; raises on failure."""
        total, base = self.total, self.base
        if not total.center().space.contains(self.kernel.space):
            raise ValueError("kernel is not central in the total algebra")
        from .linalg import kernel as mat_kernel, rank

        if rank(self.projection) != base.dim:
            raise ValueError("projection is not surjective")
        if mat_kernel(self.projection) != self.kernel.space:
            raise ValueError("projection kernel differs from the stored kernel")
        for op in OPS:
            for (i, j), vec in total.products[op].items():
                lhs = self.projection.matvec(total.product(op, i, j))
                ei = self.projection.column(i)
                ej = self.projection.column(j)
                rhs = base.multiply(ei, ej, op)
                if tuple(lhs) != tuple(rhs):
                    raise ValueError("projection is not an algebra homomorphism")


def extension_algebra(b: TriAlgebra, f: CochainTriple) -> TriAlgebra:
    """Force-build the extension's product tables without any cocycle check.

    The result passes the identity check exactly when ``f`` is a cocycle,
    failing at exactly the identity indices of the violated constraint
    families.
    """
    if f.base != b:
        raise ValueError("cochain base differs from the extension base")
    n, k = b.dim, f.coeff_dim
    products: dict = {op: {} for op in OPS}
    for op in OPS:
        keys = set(b.products[op]) | set(f.forms[op])
        for (i, j) in keys:
            vec: dict = {}
            bvec = b.products[op].get((i, j))
            if bvec:
                vec.update(bvec)
            fval = f.forms[op].get((i, j))
            if fval is not None:
                for t, v in enumerate(fval):
                    if v:
                        vec[n + t] = v
            if vec:
                products[op][(i, j)] = vec
    return TriAlgebra(n + k, b.field, products)


def build_central_extension(b: TriAlgebra, k: int, f: CochainTriple) -> CentralExtension:
    """Central extension of F^k by ``b`` along the cocycle ``f``."""
    b.require_valid()
    if f.base != b or f.coeff_dim != k:
        raise ValueError("cochain does not match the requested extension")
    defects = cocycle_defects(f)
    if defects:
        raise NotACocycleError(defects)
    total = extension_algebra(b, f)
    fld = b.field
    n = b.dim
    kernel_rows = [
        [fld.one if c == n + t else fld.zero for c in range(n + k)] for t in range(k)
    ]
    kernel_space = Subspace.from_rows(fld, n + k, kernel_rows)
    proj = Matrix(
        fld,
        [[fld.one if c == r else fld.zero for c in range(n + k)] for r in range(n)],
        cols=n + k,
    )
    return CentralExtension(total, b, AlgSubspace(total, kernel_space), proj, f)


def _stem_reduce(ext: CentralExtension) -> CentralExtension:
    """Quotient by a complement of (kernel intersect derived) in the kernel.

    The result is a stem extension of the same base; when the kernel is
    already inside the derived subalgebra the extension is returned as is.
    """
    total = ext.total
    d_space = ext.kernel.space.intersection(total.derived().space)
    e_space = d_space.complement_in(ext.kernel.space)
    if e_space.dim == 0:
        return ext
    quot = quotient_algebra(total, e_space)
    new_total = quot.algebra
    new_proj = ext.projection @ quot.section
    new_kernel_rows = [quot.projection.matvec(v) for v in ext.kernel.space.basis_rows()]
    new_kernel = Subspace.from_rows(new_total.field, new_total.dim, new_kernel_rows)
    reduced = CentralExtension(
        new_total, ext.base, AlgSubspace(new_total, new_kernel), new_proj, None
    )
    return CentralExtension(
        new_total,
        ext.base,
        reduced.kernel,
        new_proj,
        reduced.section_cocycle(),
    )


@dataclass(frozen=True)
class CoverResult:
    extension: CentralExtension
    multiplier_dim: int


def cover(l: TriAlgebra) -> CoverResult:
    """Cover of ``l``: a stem extension with kernel of maximal dimension.

    Built by extending along the stacked canonical H^2 representatives and
    stem-reducing.  The kernel then has the multiplier dimension and sits
    inside both the center and the derived subalgebra of the cover.
    """
    l.require_valid()
    res = h2(l, 1)
    m = res.h2_dim
    stacked = CochainTriple.stack(l, list(res.h2_reps))
    ext = build_central_extension(l, m, stacked)
    return CoverResult(_stem_reduce(ext), m)


def _cover_from_reps(l: TriAlgebra, reps) -> CentralExtension:
    """Cover-style construction from an explicit list of scalar cocycles."""
    stacked = CochainTriple.stack(l, list(reps))
    ext = build_central_extension(l, len(reps), stacked)
    return _stem_reduce(ext)


def cover_fingerprint(l: TriAlgebra, reps=None) -> tuple[int, int, int, int, int, int]:
    """Isomorphism-invariant profile of a cover built from ``reps``.

    Returns (dim, dim K', dim Z(K), dim K' n Z(K), dim K' <> K',
    h2_dim(K, 1)); identical across representative orderings.
    """
    if reps is None:
        ext = cover(l).extension
    else:
        ext = _cover_from_reps(l, reps)
    k = ext.total
    derived = k.derived()
    center = k.center()
    return (
        k.dim,
        derived.dim,
        center.dim,
        derived.space.intersection(center.space).dim,
        product_subspace(derived, derived).dim,
        h2(k, 1).h2_dim,
    )


def z_star(l: TriAlgebra) -> AlgSubspace:
    """Image of the cover's center in ``l``; always inside the center."""
    ext = cover(l).extension
    return AlgSubspace(l, ext.center_image())


def is_unicentral(l: TriAlgebra) -> bool:
    return z_star(l).space == l.center().space


@dataclass(frozen=True)
class StemImageReport:
    trials: int
    kernel_dims: tuple[int, ...]
    all_stem: bool
    images_agree: bool
    image_dim: int
    equals_z_star: bool
    unicentral: bool
    center_recovered: bool        # image == Z(L); forced when unicentral
    identity_extension_image_dim: int

    @property
    def ok(self) -> bool:
        if not (self.all_stem and self.images_agree and self.equals_z_star):
            return False
        if self.unicentral and not self.center_recovered:
            return False
        return True


def stem_center_image_check(l: TriAlgebra, trials: int = 5, seed: int = 0) -> StemImageReport:
    """Build randomized stem extensions whose kernels span the multiplier
    and compare the projected centers.

    Even trials transform the canonical representatives by a random
    invertible matrix; odd trials additionally append a dependent cocycle
    (a combination of representatives shifted by a coboundary) so the stem
    reduction step has real work to do.  All trial images must agree with
    one another and with Z*(L).
    """
    l.require_valid()
    rng = random.Random(seed)
    res = h2(l, 1)
    m = res.h2_dim
    fld = l.field
    zs = z_star(l)
    rep_vectors = [r.vectorize() for r in res.h2_reps]
    b2_rows = res.b2.basis_rows()

    def random_combination(rows):
        if not rows:
            return None
        width = len(rows[0])
        acc = [fld.zero] * width
        nonzero = False
        for row in rows:
            c = fld.random_scalar(rng)
            if c:
                nonzero = True
                acc = [fld.add(a, fld.mul(c, x)) for a, x in zip(acc, row)]
        return acc if nonzero else None

    images = []
    kernel_dims = []
    all_stem = True
    for t in range(trials):
        vectors = []
        if m:
            tmat = random_invertible(rng, m, fld)
            for r in range(m):
                acc = [fld.zero] * len(rep_vectors[0])
                for c in range(m):
                    s = tmat.data[r][c]
                    if s:
                        acc = [fld.add(a, fld.mul(s, x)) for a, x in zip(acc, rep_vectors[c])]
                vectors.append(acc)
        if t % 2 == 1:
            extra = random_combination(rep_vectors)
            shift = random_combination(b2_rows)
            if extra is None:
                extra = shift
            elif shift is not None:
                extra = [fld.add(a, b) for a, b in zip(extra, shift)]
            if extra is not None:
                vectors.append(extra)
        reps = [CochainTriple.from_vector(l, 1, v) for v in vectors]
        ext = _cover_from_reps(l, reps)
        if not ext.is_stem():
            all_stem = False
        kernel_dims.append(ext.kernel_dim)
        images.append(ext.center_image())
    images_agree = all(img == images[0] for img in images[1:]) if images else True
    image = images[0] if images else zs.space
    center = l.center().space
    unicentral = zs.space == center
    return StemImageReport(
        trials=trials,
        kernel_dims=tuple(kernel_dims),
        all_stem=all_stem,
        images_agree=images_agree,
        image_dim=image.dim,
        equals_z_star=image == zs.space,
        unicentral=unicentral,
        center_recovered=image == center,
        identity_extension_image_dim=center.dim,
    )
