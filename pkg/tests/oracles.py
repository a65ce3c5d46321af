"""Independent oracles used to cross-check the package's computations.

Everything here deliberately avoids the library's RREF/sparse-assembly
code paths: ranks come from fraction-free integer elimination (or plain
modular elimination over a prime field), identity defects from direct
evaluation of both sides of each identity via ``multiply``, and cocycle
constraints from a dense all-triples assembly.
"""

from fractions import Fraction
from itertools import product
from math import lcm

from trialg.algebra import IDENTITIES, OPS
from trialg.fields import PrimeField, RationalField


def bareiss_rank_int(rows):
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    rank = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
    return rank


def modular_rank(rows, p):
    """Rank over F_p by plain forward elimination."""
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if m[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], p - 2, p)
        for i in range(r + 1, nrows):
            if m[i][c]:
                f = m[i][c] * inv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


def oracle_rank(field, rows):
    """Field-dispatching rank oracle on plain row data."""
    rows = [list(r) for r in rows]
    if isinstance(field, RationalField):
        int_rows = []
        for row in rows:
            fracs = [Fraction(x) for x in row]
            scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
            int_rows.append([int(f * scale) for f in fracs])
        return bareiss_rank_int(int_rows)
    if isinstance(field, PrimeField):
        return modular_rank([[int(x) for x in row] for row in rows], field.p)
    raise TypeError(f"no oracle for field {field!r}")


def unit_vector(field, n, i):
    return tuple(field.one if t == i else field.zero for t in range(n))


def direct_identity_defects(alg):
    """Evaluate both sides of every identity on every basis triple."""
    n = alg.dim
    basis = [unit_vector(alg.field, n, i) for i in range(n)]
    bad = []
    for idx, (op_a, op_b, op_c, op_d) in enumerate(IDENTITIES, start=1):
        for i, j, l in product(range(n), repeat=3):  # noqa: E741
            lhs = alg.multiply(alg.multiply(basis[i], basis[j], op_a), basis[l], op_b)
            rhs = alg.multiply(basis[i], alg.multiply(basis[j], basis[l], op_d), op_c)
            if lhs != rhs:
                bad.append((idx, (i, j, l)))
    return bad


def dense_cocycle_rows(base, k):
    """All-triples constraint rows for the cocycle system, dense."""
    n = base.dim
    rows = []
    for op_a, op_b, op_c, op_d in IDENTITIES:
        ob, oc = OPS.index(op_b), OPS.index(op_c)
        for i, j, l in product(range(n), repeat=3):  # noqa: E741
            ca = base.product(op_a, i, j)
            cd = base.product(op_d, j, l)
            if not any(ca) and not any(cd):
                continue
            for t in range(k):
                row = [base.field.zero] * (3 * n * n * k)
                for m in range(n):
                    if ca[m]:
                        col = ((ob * n + m) * n + l) * k + t
                        row[col] = base.field.add(row[col], ca[m])
                for m in range(n):
                    if cd[m]:
                        col = ((oc * n + i) * n + m) * k + t
                        row[col] = base.field.sub(row[col], cd[m])
                rows.append(row)
    return rows


def dense_z2_dim(base, k):
    rows = dense_cocycle_rows(base, k)
    return 3 * base.dim * base.dim * k - oracle_rank(base.field, rows)
