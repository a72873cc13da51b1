"""Exact linear algebra over the integers and the rationals.

Everything here is sized for lattices and representations of rank <= 3,
so the implementations favour clarity over asymptotics: plain Python
integers, ``fractions.Fraction``, and textbook row reduction.

Matrices are tuples of tuples, rows are tuples.  Integer lattices are
given by generating rows; ``hermite_normal_form`` produces the canonical
representative (positive pivots, entries above a pivot reduced into
``[0, pivot)``, zero rows dropped).
"""

from fractions import Fraction


# ---------------------------------------------------------------------------
# integer matrices


def mat(rows):
    """Normalize to a tuple-of-tuples matrix."""
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def det(m):
    """Determinant by cofactor expansion; fine for the sizes used here."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in m[1:])
        total += (-1) ** j * m[0][j] * det(minor)
    return total


def matrix_order(m, cap=12):
    """Multiplicative order of an integer matrix, or None if it exceeds cap."""
    n = len(m)
    acc = m
    for k in range(1, cap + 1):
        if acc == identity(n):
            return k
        acc = mat_mul(acc, m)
    return None


def _xgcd(a, b):
    """(g, x, y) with x*a + y*b == g == gcd(a, b), g >= 0."""
    x0, x1, y0, y1, r0, r1 = 1, 0, 0, 1, a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def hermite_normal_form(rows):
    """Row-style Hermite normal form of the lattice generated by ``rows``.

    Returns the canonical basis as a tuple of rows: pivots positive,
    entries above each pivot reduced into [0, pivot), zero rows dropped.
    """
    basis = {}  # pivot column -> row (zeros strictly before the pivot)
    for row in rows:
        v = list(row)
        while any(v):
            j = next(i for i, x in enumerate(v) if x)
            if j not in basis:
                basis[j] = v
                break
            b = basis[j]
            g, x, y = _xgcd(b[j], v[j])
            coef_b, coef_v = b[j] // g, v[j] // g
            new_b = [x * p + y * q for p, q in zip(b, v)]
            v = [coef_b * q - coef_v * p for p, q in zip(b, v)]
            basis[j] = new_b  # pivot j now carries the gcd; v[j] == 0
    ordered = [basis[j] for j in sorted(basis)]
    for i, row in enumerate(ordered):
        j = next(k for k, x in enumerate(row) if x)
        if row[j] < 0:
            ordered[i] = row = [-x for x in row]
        for above in ordered[:i]:
            q = above[j] // row[j]
            if q:
                for k in range(len(row)):
                    above[k] -= q * row[k]
    return tuple(tuple(r) for r in ordered)


def solve_in_lattice(hnf_rows, vector):
    """Coordinates of ``vector`` in the HNF basis, or None if not in the lattice."""
    v = list(vector)
    coeffs = []
    for row in hnf_rows:
        j = next(i for i, x in enumerate(row) if x)
        if v[j] % row[j] != 0:
            return None
        c = v[j] // row[j]
        coeffs.append(c)
        for k in range(len(v)):
            v[k] -= c * row[k]
    if any(v):
        return None
    return tuple(coeffs)


def lattice_contains(hnf_rows, vector):
    return solve_in_lattice(hnf_rows, vector) is not None


def lattice_le(sub_rows, sup_hnf):
    """True when the lattice generated by sub_rows lies in the HNF lattice."""
    return all(lattice_contains(sup_hnf, r) for r in sub_rows)


def snf_invariant_factors(m):
    """Nonzero invariant factors of an integer matrix, ascending divisibility."""
    work = [list(r) for r in m]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    factors = []
    t = 0
    while t < nrows and t < ncols:
        # choose a nonzero entry of minimal absolute value in the block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = abs(work[i][j])
                if x and (best is None or x < abs(work[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        work[t], work[bi] = work[bi], work[t]
        for r in work:
            r[t], r[bj] = r[bj], r[t]
        pivot = work[t][t]
        # reduce row/column; any nonzero remainder is strictly smaller, so
        # re-selecting the minimal entry terminates
        dirty = False
        for i in range(t + 1, nrows):
            if work[i][t]:
                q = work[i][t] // pivot
                for k in range(ncols):
                    work[i][k] -= q * work[t][k]
                dirty = dirty or work[i][t] != 0
        for j in range(t + 1, ncols):
            if work[t][j]:
                q = work[t][j] // pivot
                for r in work:
                    r[j] -= q * r[t]
                dirty = dirty or work[t][j] != 0
        if dirty:
            continue
        # pivot must divide the remaining block
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if work[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for k in range(ncols):
                work[t][k] += work[offender][k]
            continue
        factors.append(abs(pivot))
        t += 1
    return tuple(factors)


# ---------------------------------------------------------------------------
# rational subspaces (bases given as tuples of Fractions)


def fvec(v):
    return tuple(Fraction(x) for x in v)


def rref(vectors):
    """Reduced row echelon form over Q; returns (basis rows, pivot columns)."""
    work = [list(fvec(v)) for v in vectors]
    ncols = len(work[0]) if work else 0
    basis, pivots = [], []
    for col in range(ncols):
        pivot_row = next((r for r in work if r[col] != 0), None)
        if pivot_row is None:
            continue
        work.remove(pivot_row)
        inv = Fraction(1) / pivot_row[col]
        pivot_row = [x * inv for x in pivot_row]
        for r in work + basis:
            if r[col] != 0:
                f = r[col]
                for k in range(ncols):
                    r[k] -= f * pivot_row[k]
        basis.append(pivot_row)
        pivots.append(col)
        work = [r for r in work if any(r)]
        if not work:
            break
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [tuple(basis[i]) for i in order], [pivots[i] for i in order]


def span_dim(vectors):
    return len(rref(vectors)[0])


def in_span(vectors, v):
    basis, pivots = rref(vectors)
    v = list(fvec(v))
    for row, p in zip(basis, pivots):
        if v[p] != 0:
            f = v[p]
            for k in range(len(v)):
                v[k] -= f * row[k]
    return not any(v)


def kernel(matrix_rows, ncols):
    """Basis of the right kernel of the matrix whose rows are given."""
    basis, pivots = rref(matrix_rows) if matrix_rows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for j in free:
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for row, p in zip(basis, pivots):
            v[p] = -row[j]
        out.append(tuple(v))
    return out


def intersect_spaces(a_vectors, b_vectors, dim):
    """Basis of the intersection of two rational subspaces of Q^dim."""
    a_basis, _ = rref(a_vectors)
    b_basis, b_pivots = rref(b_vectors)
    if not a_basis:
        return []
    residuals = []
    for a in a_basis:
        v = list(a)
        for row, p in zip(b_basis, b_pivots):
            if v[p] != 0:
                f = v[p]
                for k in range(dim):
                    v[k] -= f * row[k]
        residuals.append(tuple(v))
    # combinations of the A-basis whose residual vanishes lie in B
    columns = [tuple(col) for col in zip(*residuals)]
    combos = kernel(columns, len(a_basis))
    out = []
    for alpha in combos:
        v = [Fraction(0)] * dim
        for c, a in zip(alpha, a_basis):
            for k in range(dim):
                v[k] += c * a[k]
        if any(v):
            out.append(tuple(v))
    basis, _ = rref(out)
    return list(basis)


def sum_spaces(a_vectors, b_vectors):
    basis, _ = rref(list(a_vectors) + list(b_vectors))
    return list(basis)
