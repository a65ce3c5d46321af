"""Constructors for the standard test corpus.

The cover of the n-dimensional abelian algebra is built directly here
(every basis product hits its own kernel generator), which doubles as an
independent cross-check of the cohomological cover construction.
"""

from __future__ import annotations

import random

from .algebra import DASHV, OPS, PERP, TriAlgebra, VDASH
from .cohomology import CochainTriple, z2_space
from .extensions import CentralExtension, build_central_extension
from .fields import Field, QQ

__all__ = [
    "abelian",
    "cover_abelian",
    "dim2_single_product",
    "unital_dim1",
    "random_cocycles",
    "random_extension",
    "random_valid_algebra",
]


def abelian(n: int, field: Field = QQ) -> TriAlgebra:
    """All products zero."""
    return TriAlgebra(n, field, {}, name=f"abelian{n}")


def cover_abelian(n: int, field: Field = QQ) -> TriAlgebra:
    """Dimension n + 3n^2: basis x_0..x_{n-1} followed by one generator per
    (operation, i, j), with x_i op x_j equal to that generator."""
    one = field.one
    products: dict = {op: {} for op in OPS}
    for o, op in enumerate(OPS):
        for i in range(n):
            for j in range(n):
                coord = n + (o * n + i) * n + j
                products[op][(i, j)] = {coord: one}
    return TriAlgebra(n + 3 * n * n, field, products, name=f"cover-abelian{n}")


def dim2_single_product(field: Field = QQ) -> TriAlgebra:
    """Two-dimensional algebra with the single product e0 |- e0 = e1."""
    return TriAlgebra(2, field, {VDASH: {(0, 0): {1: field.one}}}, name="dim2")


def unital_dim1(field: Field = QQ) -> TriAlgebra:
    """One-dimensional algebra with e0 * e0 = e0 for all three products."""
    one = field.one
    return TriAlgebra(
        1,
        field,
        {VDASH: {(0, 0): {0: one}}, DASHV: {(0, 0): {0: one}}, PERP: {(0, 0): {0: one}}},
        name="unital1",
    )


def random_cocycles(base: TriAlgebra, k: int, rng: random.Random) -> list[CochainTriple]:
    """k nonzero cocycles sampled inside Z^2(base, F) with small coefficients."""
    z2 = z2_space(base, 1)
    if z2.dim == 0:
        raise ValueError("base has no nonzero cocycles to sample")
    fld = base.field
    out = []
    for _ in range(k):
        while True:
            acc = [fld.zero] * z2.ambient_dim
            nonzero = False
            for row in z2.basis_rows():
                c = fld.random_scalar(rng)
                if c:
                    nonzero = True
                    acc = [fld.add(a, fld.mul(c, x)) for a, x in zip(acc, row)]
            if nonzero:
                break
        out.append(CochainTriple.from_vector(base, 1, acc))
    return out


def random_extension(base: TriAlgebra, k: int, seed: int) -> CentralExtension:
    """Deterministic random central extension of F^k by ``base``."""
    rng = random.Random(seed)
    cocycles = random_cocycles(base, k, rng)
    stacked = CochainTriple.stack(base, cocycles)
    return build_central_extension(base, k, stacked)


def random_valid_algebra(rng: random.Random, field: Field = QQ, max_dim: int = 6) -> TriAlgebra:
    """A validated algebra of dimension <= max_dim: a random base from the
    corpus, extended by random cocycle layers while room remains."""
    builders = [
        lambda: abelian(rng.randint(1, 3), field),
        lambda: dim2_single_product(field),
        lambda: unital_dim1(field),
    ]
    alg = rng.choice(builders)()
    for _ in range(rng.randint(0, 2)):
        room = max_dim - alg.dim
        if room < 1:
            break
        k = rng.randint(1, min(2, room))
        try:
            cocycles = random_cocycles(alg, k, rng)
        except ValueError:
            break
        stacked = CochainTriple.stack(alg, cocycles)
        alg = build_central_extension(alg, k, stacked).total
    return alg
