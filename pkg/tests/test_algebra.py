import random
from fractions import Fraction

import pytest

from trialg.algebra import (
    DASHV,
    IDENTITIES,
    MalformedAlgebraError,
    NotAnIdealError,
    OPS,
    PERP,
    TriAlgebra,
    VDASH,
    change_basis,
    check_dim_bounds,
    dimension_bound_table,
    hom_to_field,
    is_ideal,
    product_subspace,
    quotient_algebra,
)
from trialg.cohomology import h2
from trialg.fields import GF, QQ
from trialg.generators import (
    abelian,
    cover_abelian,
    dim2_single_product,
    random_valid_algebra,
    unital_dim1,
)
from trialg.linalg import Subspace, random_invertible

from oracles import direct_identity_defects, unit_vector


# ------------------------------------------------------------ validation


def test_identity_table_shape():
    assert len(IDENTITIES) == 11
    assert IDENTITIES[0] == (VDASH, VDASH, VDASH, VDASH)
    assert IDENTITIES[10] == (PERP, PERP, PERP, PERP)


def test_abelian_passes(small_corpus):
    assert abelian(3).axiom_report().ok


def test_example_cover_passes(example_cover_1):
    # dim 4: x with x|-x, x-|x, x_|_x hitting three central generators
    report = example_cover_1.axiom_report()
    assert report.ok
    assert example_cover_1.dim == 4


def test_single_vdash_product_fails_axiom_1():
    # e0 |- e1 = e0 breaks (x |- y) |- z = x |- (y |- z) at (e0, e1, e1)
    a = TriAlgebra(2, QQ, {VDASH: {(0, 1): {0: 1}}})
    report = a.axiom_report()
    assert not report.ok
    assert 1 in report.violated_axioms()
    v = next(v for v in report.violations if v.axiom == 1)
    assert v.triple == (0, 1, 1)
    assert v.defect == (Fraction(1), Fraction(0))


def test_axiom_report_matches_direct_evaluation_oracle(random_corpus):
    rng = random.Random(99)
    algebras = list(random_corpus)
    # adversarial non-algebras as well
    for _ in range(6):
        n = rng.randint(1, 3)
        products = {}
        for op in OPS:
            table = {}
            for _ in range(rng.randint(0, 3)):
                i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                table[(i, j)] = {k: Fraction(rng.randint(-2, 2))}
            products[op] = table
        algebras.append(TriAlgebra(n, QQ, products))
    for alg in algebras:
        expected = {(v_idx, triple) for v_idx, triple in direct_identity_defects(alg)}
        got = {(v.axiom, v.triple) for v in alg.axiom_report().violations}
        assert got == expected


def test_malformed_rejected():
    with pytest.raises(MalformedAlgebraError):
        TriAlgebra(2, QQ, {VDASH: {(0, 2): {0: 1}}})
    with pytest.raises(MalformedAlgebraError):
        TriAlgebra(2, QQ, {VDASH: {(0, 0): [1, 2, 3]}})
    with pytest.raises(MalformedAlgebraError):
        TriAlgebra(2, QQ, {"star": {(0, 0): {0: 1}}})


def test_from_tensors_roundtrip(dim2):
    tensors = {op: dim2.tensor(op) for op in OPS}
    rebuilt = TriAlgebra.from_tensors(QQ, tensors)
    assert rebuilt == dim2


# ------------------------------------------------------------ multiply


def test_multiply_abelian_is_zero():
    a = abelian(3)
    x = (Fraction(1), Fraction(2), Fraction(3))
    for op in OPS:
        assert a.multiply(x, x, op) == (Fraction(0),) * 3


def test_multiply_example_cover(example_cover_1):
    x = unit_vector(QQ, 4, 0)
    assert example_cover_1.multiply(x, x, VDASH) == unit_vector(QQ, 4, 1)
    assert example_cover_1.multiply(x, x, DASHV) == unit_vector(QQ, 4, 2)
    assert example_cover_1.multiply(x, x, PERP) == unit_vector(QQ, 4, 3)


def test_multiply_bilinear(dim2):
    f = QQ
    x = (Fraction(2), Fraction(1))
    y = (Fraction(1), Fraction(-1))
    z = (Fraction(3), Fraction(5))
    for op in OPS:
        two_x = tuple(f.mul(Fraction(2), c) for c in x)
        y_plus_z = tuple(f.add(a, b) for a, b in zip(y, z))
        left = dim2.multiply(two_x, y_plus_z, op)
        right = tuple(
            f.add(
                f.mul(Fraction(2), a),
                f.mul(Fraction(2), b),
            )
            for a, b in zip(dim2.multiply(x, y, op), dim2.multiply(x, z, op))
        )
        assert left == right


# ----------------------------------------------------- derived / center


def test_product_subspace_examples(dim2, example_cover_1):
    zero = dim2.zero_subspace()
    assert product_subspace(zero, dim2.full_subspace()).dim == 0

    full_k = example_cover_1.full_subspace()
    kk = product_subspace(full_k, full_k)
    assert kk.space == Subspace.from_rows(QQ, 4, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])

    dd = product_subspace(dim2.full_subspace(), dim2.full_subspace())
    assert dd.space == Subspace.from_rows(QQ, 2, [[0, 1]])


def test_derived_enumeration_oracle(dim2):
    # enumerate all 3 * n^2 basis products by hand
    rows = []
    for op in OPS:
        for i in range(2):
            for j in range(2):
                rows.append(
                    dim2.multiply(unit_vector(QQ, 2, i), unit_vector(QQ, 2, j), op)
                )
    assert dim2.derived().space == Subspace.from_rows(QQ, 2, rows)


def test_center_examples(dim2, example_cover_1):
    assert abelian(3).center().space == Subspace.full(QQ, 3)
    assert example_cover_1.center().dim == 3
    assert example_cover_1.center().space == example_cover_1.derived().space
    assert dim2.center().space == Subspace.from_rows(QQ, 2, [[0, 1]])
    assert unital_dim1().center().dim == 0


def test_derived_in_kernel_for_central_extension_of_abelian():
    from trialg.generators import random_extension

    ext = random_extension(abelian(2), 2, seed=5)
    kernel_space = ext.kernel.space
    assert kernel_space.contains(ext.total.derived().space)


def test_is_ideal(dim2, small_corpus):
    assert is_ideal(dim2.subspace([[0, 1]]))
    assert not is_ideal(dim2.subspace([[1, 0]]))
    for alg in small_corpus:
        assert is_ideal(alg.center())
        assert is_ideal(alg.derived())


def test_product_subspace_monotone(random_corpus):
    rng = random.Random(31)
    for alg in random_corpus[:6]:
        n = alg.dim
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(2)]
        small = alg.subspace(rows[:1])
        big = alg.subspace(rows)
        lhs = product_subspace(small, small)
        rhs = product_subspace(big, big)
        assert rhs.space.contains(lhs.space)


# ------------------------------------------------------------ quotients


def test_quotient_example_cover_by_kernel(example_cover_1):
    ideal = example_cover_1.subspace([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    quot = quotient_algebra(example_cover_1, ideal)
    assert quot.algebra.dim == 1
    assert all(not quot.algebra.products[op] for op in OPS)
    assert quot.algebra.axiom_report().ok


def test_quotient_by_zero_ideal_is_same_algebra(dim2):
    quot = quotient_algebra(dim2, dim2.zero_subspace())
    assert quot.algebra == dim2


def test_quotient_dim2_by_derived(dim2):
    quot = quotient_algebra(dim2, dim2.derived())
    assert quot.algebra.dim == 1
    assert all(not quot.algebra.products[op] for op in OPS)


def test_quotient_requires_ideal(dim2):
    with pytest.raises(NotAnIdealError):
        quotient_algebra(dim2, dim2.subspace([[1, 0]]))


def test_quotient_projection_section_consistency(random_corpus):
    for alg in random_corpus[:6]:
        ideal = alg.center()
        quot = quotient_algebra(alg, ideal)
        q = quot.algebra.dim
        prod = quot.projection @ quot.section
        from trialg.linalg import Matrix

        assert prod == Matrix.identity(QQ, q)
        assert quot.algebra.axiom_report().ok


# ---------------------------------------------------------------- homs


def test_hom_to_field_dims(dim2, example_cover_1):
    assert hom_to_field(abelian(4), 1).dim == 4
    assert hom_to_field(abelian(2), 3).dim == 6
    assert hom_to_field(dim2, 1).dim == 1
    assert hom_to_field(example_cover_1, 1).dim == 1


# --------------------------------------------------------------- bounds


def test_bounds_tight_on_example_cover(example_cover_1):
    rep = check_dim_bounds(example_cover_1)
    assert rep.central_quotient_dim == 1
    assert rep.derived_dim == 3 == rep.derived_bound
    assert rep.ok
    kernel = example_cover_1.subspace([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    rep2 = check_dim_bounds(example_cover_1, pair_kernel=kernel)
    assert rep2.pair_base_dim == 1
    assert rep2.total_bound == 4 == example_cover_1.dim
    assert rep2.ok


def test_bounds_abelian():
    rep = check_dim_bounds(abelian(3))
    assert rep.central_quotient_dim == 0
    assert rep.derived_dim == 0 == rep.derived_bound
    assert rep.ok


def test_bounds_random_sweep(random_corpus):
    for alg in random_corpus:
        assert check_dim_bounds(alg).ok


def test_bound_table_values():
    rows = {(cls, n): (d, k) for cls, n, d, k in dimension_bound_table(2)}
    assert rows[("triassociative", 1)] == (3, 4)
    assert rows[("triassociative", 2)] == (12, 14)
    assert rows[("lie", 1)] == (0, 1)
    assert rows[("diassociative", 2)] == (8, 10)
    assert rows[("leibniz", 2)] == rows[("associative", 2)] == (4, 6)


# ----------------------------------------------- structural invariants


def _associativity_defects(alg, op):
    n = alg.dim
    basis = [unit_vector(alg.field, n, i) for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            for l in range(n):  # noqa: E741
                lhs = alg.multiply(alg.multiply(basis[i], basis[j], op), basis[l], op)
                rhs = alg.multiply(basis[i], alg.multiply(basis[j], basis[l], op), op)
                if lhs != rhs:
                    bad.append((i, j, l))
    return bad


def test_each_product_is_associative_and_pair_is_diassociative(random_corpus):
    # the first five identities are exactly the two-product (|-, -|) axioms
    dialg_identities = IDENTITIES[:5]
    assert all(PERP not in ident for ident in dialg_identities)
    for alg in random_corpus:
        for op in OPS:
            assert not _associativity_defects(alg, op)


def test_basis_change_invariance(dim2, example_cover_1):
    rng = random.Random(23)
    for alg in (dim2, example_cover_1):
        p = random_invertible(rng, alg.dim, QQ)
        moved = change_basis(alg, p)
        assert moved.axiom_report().ok
        assert moved.center().dim == alg.center().dim
        assert moved.derived().dim == alg.derived().dim
        assert h2(moved, 1).h2_dim == h2(alg, 1).h2_dim


def test_basis_change_over_prime_field():
    f5 = GF(5)
    alg = dim2_single_product(f5)
    rng = random.Random(29)
    p = random_invertible(rng, 2, f5)
    moved = change_basis(alg, p)
    assert moved.axiom_report().ok
    assert moved.derived().dim == 1


def test_random_valid_algebra_sweep():
    rng = random.Random(77)
    for _ in range(10):
        alg = random_valid_algebra(rng, QQ, max_dim=6)
        assert alg.axiom_report().ok
        assert alg.dim <= 6
