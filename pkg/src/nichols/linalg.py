"""Sparse exact linear algebra over cyclotomic scalars, plus integer SNF.

Vectors are dicts mapping integer keys to nonzero Cyc values.  Throughout
the package a key encodes a word over the alphabet {0..d-1} in base d with
the leftmost tensor factor most significant, so integer order on keys is
lexicographic order on words.
"""

import heapq

from .scalars import ONE


def encode_word(word, d):
    """Base-d integer key of a word, leftmost letter most significant."""
    out = 0
    for x in word:
        out = out * d + x
    return out


def decode_word(key, d, n):
    """Inverse of encode_word for words of length n."""
    out = []
    for _ in range(n):
        out.append(key % d)
        key //= d
    return tuple(reversed(out))


def vec_add_into(dst, src, scale=None):
    """dst += scale * src in place, dropping exact zeros."""
    if scale is None:
        for k, c in src.items():
            cur = dst.get(k)
            if cur is None:
                dst[k] = c
            else:
                t = cur + c
                if t:
                    dst[k] = t
                else:
                    del dst[k]
    else:
        for k, c in src.items():
            t = c * scale
            if not t:
                continue
            cur = dst.get(k)
            if cur is None:
                dst[k] = t
            else:
                t = cur + t
                if t:
                    dst[k] = t
                else:
                    del dst[k]


class Echelon:
    """A growing reduced basis of a subspace, rows pivoted on their least key.

    Rows are stored with pivot coefficient exactly one.  ``reduce`` performs
    forward elimination only; since every stored row has its pivot as its
    least key, the residue it returns contains no pivot keys at all and is
    therefore the canonical projection along the row space, independent of
    whether rows have been back-substituted.  ``rref`` back-substitutes the
    stored rows in place, which nullspace extraction requires.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec):
        """Residue of vec modulo the row space (forward elimination)."""
        work = dict(vec)
        heap = list(work)
        heapq.heapify(heap)
        out = {}
        rows = self.rows
        while heap:
            k = heapq.heappop(heap)
            c = work.pop(k, None)
            if c is None:
                continue
            row = rows.get(k)
            if row is None:
                out[k] = c
                continue
            nc = -c
            for u, s in row.items():
                if u == k:
                    continue
                cur = work.get(u)
                if cur is None:
                    t = nc * s
                    if t:
                        work[u] = t
                        heapq.heappush(heap, u)
                else:
                    t = cur + nc * s
                    if t:
                        work[u] = t
                    else:
                        del work[u]
        return out

    def insert(self, vec):
        """Reduce vec and adjoin the residue as a new row; returns the new
        pivot key, or None if vec was already in the row space."""
        red = self.reduce(vec)
        if not red:
            return None
        p = min(red)
        inv = red[p].inverse()
        row = {u: c * inv for u, c in red.items()}
        row[p] = ONE
        self.rows[p] = row
        return p

    def contains(self, vec):
        return not self.reduce(vec)

    def rref(self):
        """Back-substitute all rows; afterwards no row mentions another pivot."""
        for p in sorted(self.rows, reverse=True):
            row = self.rows[p]
            tail = {u: c for u, c in row.items() if u != p}
            red = self.reduce(tail)
            red[p] = ONE
            self.rows[p] = red
        return self

    def sorted_rows(self):
        """Rows in increasing pivot order (call rref first for canonical form)."""
        return [self.rows[p] for p in sorted(self.rows)]

    def nullspace(self, universe):
        """Basis of the orthogonal complement read off the RREF rows.

        ``universe`` iterates all coordinate keys of the ambient space.  For
        each non-pivot key f the vector e_f - sum_p row_p[f] e_p annihilates
        every row; together these span the kernel of the matrix whose row
        space this echelon basis spans.
        """
        self.rref()
        rows = self.rows
        # column index of the pivot rows
        cols = {}
        for p, row in rows.items():
            for u, c in row.items():
                if u != p:
                    cols.setdefault(u, []).append((p, c))
        out = []
        for f in universe:
            if f in rows:
                continue
            vec = {f: ONE}
            for p, c in cols.get(f, ()):
                vec[p] = -c
            out.append(vec)
        return out


def invert_square(columns, n):
    """Inverse of an n x n matrix given as dict ``columns[j] = {i: Cyc}``.

    Returns the inverse in the same column-dict form.  Raises ValueError if
    the matrix is singular.
    """
    # rows of [M | I]; augmented keys live at n + row index
    rows = [{} for _ in range(n)]
    for j, col in columns.items():
        for i, c in col.items():
            rows[i][j] = c
    for i in range(n):
        rows[i][n + i] = ONE
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    if ech.pivots() != list(range(n)):
        raise ValueError("matrix is singular")
    ech.rref()
    inv_cols = {}
    for p, row in ech.rows.items():
        # row p of the RREF reads e_p = sum_j inv[p][j] (aug j)
        for u, c in row.items():
            if u >= n:
                inv_cols.setdefault(u - n, {})[p] = c
    return inv_cols


# ---------------------------------------------------------------------------
# integer Smith normal form

def smith_normal_form(mat, rows, cols, want_right=False):
    """Diagonalize an integer matrix with unimodular row/column operations.

    ``mat`` is a list of ``rows`` lists of length ``cols``; it is copied.
    Returns ``diag`` (the nonnegative invariant factors d1 | d2 | ...).
    With ``want_right`` also returns ``(V, V_inv)``: unimodular matrices
    with U * A * V = D for some unimodular U, and V_inv = V^-1.
    """
    a = [list(r) for r in mat]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    vinv = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_add(dst, src, k):
        # col dst += k * col src ; inverse op on vinv rows
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]
        for idx in range(cols):
            vinv[src][idx] -= k * vinv[dst][idx]

    def col_neg(i):
        for r in a:
            r[i] = -r[i]
        for r in v:
            r[i] = -r[i]
        for idx in range(cols):
            vinv[i][idx] = -vinv[i][idx]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]

    def row_add(dst, src, k):
        ra, rs = a[dst], a[src]
        for idx in range(cols):
            ra[idx] += k * rs[idx]

    def row_neg(i):
        a[i] = [-x for x in a[i]]

    limit = min(rows, cols)

    def diagonalize():
        t = 0
        while t < limit:
            pi = pj = -1
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j]:
                        pi, pj = i, j
                        break
                if pi >= 0:
                    break
            if pi < 0:
                break
            row_swap(t, pi)
            col_swap(t, pj)
            while True:
                for i in range(t + 1, rows):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        row_add(i, t, -q)
                        if a[i][t]:  # nonzero remainder: smaller pivot found
                            row_swap(t, i)
                for j in range(t + 1, cols):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        col_add(j, t, -q)
                        if a[t][j]:
                            col_swap(t, j)
                if (all(a[i][t] == 0 for i in range(t + 1, rows))
                        and all(a[t][j] == 0 for j in range(t + 1, cols))):
                    break
            if a[t][t] < 0:
                row_neg(t)
            t += 1
        return t

    t = diagonalize()
    # enforce d1 | d2 | ... by folding offending pairs and re-diagonalizing
    while True:
        bad = -1
        for i in range(t - 1):
            if a[i + 1][i + 1] % a[i][i]:
                bad = i
                break
        if bad < 0:
            break
        col_add(bad, bad + 1, 1)
        t = diagonalize()
    diag = [a[i][i] for i in range(t)]
    if want_right:
        return diag, v, vinv
    return diag
