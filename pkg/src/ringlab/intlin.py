"""Small exact integer lattice routines (Python ints, no overflow).

Used to find cyclic decompositions of additive groups of subquotients: an
additive group spanned by h_1..h_m with relation lattice L is isomorphic to
Z^m / L, and a Smith form U L V = diag(delta) turns the rows of V^-1 into
independent generators of orders delta_i.
"""

from __future__ import annotations


def lattice_kernel(rows, split):
    """Row-echelon ``rows`` on the first ``split`` columns.

    Returns the right parts (columns ``split:``) of the rows whose left part
    became zero; they generate the sublattice {c : (0, c) in rowspace}.
    """
    rows = [list(r) for r in rows]
    piv = 0
    for col in range(split):
        while True:
            nz = [i for i in range(piv, len(rows)) if rows[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][col]))
            rows[piv], rows[i0] = rows[i0], rows[piv]
            p = rows[piv][col]
            clean = True
            for i in range(piv + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // p
                    if q:
                        rows[i] = [a - q * b for a, b in zip(rows[i], rows[piv])]
                    if rows[i][col]:
                        clean = False
            if clean:
                piv += 1
                break
    return [r[split:] for r in rows[piv:] if any(r[split:])]


def smith_form(A, ncols):
    """Smith normal form of an integer matrix with ``ncols`` columns.

    Returns ``(diag, Vinv)`` where ``diag`` lists the ``ncols`` nonnegative
    invariant factors (each dividing the next, zeros last) and ``Vinv`` is the
    inverse of the unimodular column transform, so that row t of ``Vinv``
    represents the generator of the t-th cyclic factor of Z^ncols / rowspace(A).
    """
    A = [list(r) for r in A]
    nrows = len(A)
    m = ncols
    Vinv = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_col(src, dst, q):
        # col_dst += q * col_src
        for r in A:
            r[dst] += q * r[src]
        Vinv[src] = [a - q * b for a, b in zip(Vinv[src], Vinv[dst])]

    def add_row(src, dst, q):
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]

    t = 0
    while t < min(nrows, m):
        cand = [(abs(A[i][j]), i, j) for i in range(t, nrows) for j in range(t, m) if A[i][j]]
        if not cand:
            break
        _, i, j = min(cand)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, nrows):
                q = A[i][t] // p
                if q:
                    add_row(t, i, -q)
            for j in range(t + 1, m):
                q = A[t][j] // p
                if q:
                    add_col(t, j, -q)
            rest = [(abs(A[i][t]), i, t) for i in range(t + 1, nrows) if A[i][t]]
            rest += [(abs(A[t][j]), t, j) for j in range(t + 1, m) if A[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, m)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
        t += 1
    diag = [abs(A[i][i]) if i < nrows else 0 for i in range(m)]
    return diag, Vinv
