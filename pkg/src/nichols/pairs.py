"""Braided pairs: vector spaces with an invertible solution of the braid
equation, and every constructor the engine needs.

The braiding is stored sparsely: ``cmap[i*d+j]`` lists the nonzero terms
of c(x_i (x) x_j) as ``(k*d+l, coeff)`` pairs, with the left tensor factor
always the most significant index.  The equivalent d^2 x d^2 matrix view
(column i*d+j holding the image of x_i (x) x_j) is available via
``matrix()``.  Construction always validates the braid equation on the
standard basis of the triple tensor power, invertibility, and consistency
of any attached group-like actions; rigidity is taken as invertibility of
the braiding, which for group-type pairs with invertible group-likes is
equivalent to the dual-map condition.
"""

from math import gcd as _gcd

from .linalg import invert_square
from .scalars import ONE, Cyc, one, zero
from . import braids
from . import groups as _groups


class BraidedPair:
    """Dimension d plus an invertible braiding on the d^2-dimensional square,
    with optional group-like actions (one invertible matrix per basis
    vector)."""

    __slots__ = ("dim", "conductor", "cmap", "grouplikes", "kind", "params",
                 "_cinv")

    def __init__(self, dim, cmap, grouplikes=None, kind="matrix", params=None,
                 validate=True):
        if dim < 1:
            raise ValueError("braided pairs need at least one basis vector")
        self.dim = dim
        self.cmap = self._freeze(dim, cmap)
        self.grouplikes = grouplikes
        self.kind = kind
        self.params = params or {}
        self._cinv = None
        cond = 1
        for col in self.cmap:
            for _, c in col:
                cond = cond * c.conductor // _gcd(cond, c.conductor)
        self.conductor = cond
        if validate:
            diag = check(self)
            if not diag["braid_equation"]:
                raise ValueError(
                    f"braid equation fails at basis tensor {diag['braid_failure']}")
            if not diag["invertible"]:
                raise ValueError("braiding is not invertible")
            if not diag["grouplikes_consistent"]:
                raise ValueError("group-like actions do not match the braiding")

    @staticmethod
    def _freeze(dim, cmap):
        cols = []
        for pair in range(dim * dim):
            col = tuple((kl, c) for kl, c in cmap[pair] if c)
            cols.append(col)
        return tuple(cols)

    def cmap_inverse(self):
        if self._cinv is None:
            d = self.dim
            columns = {p: {kl: c for kl, c in col}
                       for p, col in enumerate(self.cmap)}
            inv = invert_square(columns, d * d)
            self._cinv = tuple(
                tuple(sorted(inv.get(p, {}).items())) for p in range(d * d))
        return self._cinv

    def matrix(self):
        """The d^2 x d^2 braiding matrix; entry [k*d+l][i*d+j] is the
        coefficient of x_k (x) x_l in c(x_i (x) x_j)."""
        n = self.dim * self.dim
        out = [[zero()] * n for _ in range(n)]
        for p, col in enumerate(self.cmap):
            for kl, c in col:
                out[kl][p] = c
        return out

    def braiding_terms(self, i, j):
        """c(x_i (x) x_j) as a list of ((k, l), coeff)."""
        d = self.dim
        return [((kl // d, kl % d), c) for kl, c in self.cmap[i * d + j]]

    def __repr__(self):
        return (f"BraidedPair(kind={self.kind!r}, dim={self.dim}, "
                f"conductor={self.conductor})")


class Decomposition:
    """A partition of the basis into blocks closed under the braiding: the
    braiding maps (block a) (x) (block b) into (block b) (x) (block a)."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        self.blocks = [sorted(b) for b in blocks]
        self.blocks.sort()

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"Decomposition({self.blocks})"


# ---------------------------------------------------------------------------
# validation

def braid_equation_holds(dim, cmap):
    """Exhaustive check of (c x id)(id x c)(c x id) = (id x c)(c x id)(id x c)
    on the standard basis of the triple tensor power.  Returns the first
    failing basis index, or None."""
    for w in range(dim ** 3):
        vec = {w: ONE}
        lhs = vec
        for k in (1, 2, 1):
            lhs = braids.sigma_pass(cmap, dim, 3, lhs, k)
        rhs = vec
        for k in (2, 1, 2):
            rhs = braids.sigma_pass(cmap, dim, 3, rhs, k)
        if lhs != rhs:
            return w
    return None


def check(bp):
    """Diagnostics: braid equation, invertibility, group-like consistency."""
    failure = braid_equation_holds(bp.dim, bp.cmap)
    ok_braid = failure is None
    try:
        bp.cmap_inverse()
        ok_inv = True
    except ValueError:
        ok_inv = False
    ok_gl = True
    if bp.grouplikes is not None:
        d = bp.dim
        for i in range(d):
            g = bp.grouplikes[i]
            for j in range(d):
                # c(x_i (x) x_j) must equal sum_k g[k][j] x_k (x) x_i
                want = {k * d + i: g[k][j] for k in range(d) if g[k][j]}
                got = {kl: c for kl, c in bp.cmap[i * d + j]}
                if want != got:
                    ok_gl = False
    return {
        "braid_equation": ok_braid,
        "braid_failure": failure,
        "invertible": ok_inv,
        "grouplikes_consistent": ok_gl,
    }


def is_diagonal(bp):
    """The d x d scalar matrix if the braiding is diagonal in the standard
    basis (c(x_i (x) x_j) = q_ij x_j (x) x_i), else None."""
    d = bp.dim
    q = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            col = bp.cmap[i * d + j]
            if len(col) != 1 or col[0][0] != j * d + i:
                return None
            q[i][j] = col[0][1]
    return q


# ---------------------------------------------------------------------------
# constructors

def _grouplike_cmap(dim, grouplikes):
    """Braiding of group type: c(x_i (x) x_j) = g_i(x_j) (x) x_i."""
    cmap = []
    for i in range(dim):
        g = grouplikes[i]
        for j in range(dim):
            cmap.append([(k * dim + i, g[k][j]) for k in range(dim) if g[k][j]])
    return cmap


def diagonal(q):
    """Diagonal braiding from a d x d matrix of nonzero roots of unity."""
    d = len(q)
    q = [[_scalar(v) for v in row] for row in q]
    for row in q:
        if len(row) != d:
            raise ValueError("matrix must be square")
        for v in row:
            if v.is_zero():
                raise ValueError("diagonal braiding entries must be nonzero")
    grouplikes = []
    for i in range(d):
        g = [[zero()] * d for _ in range(d)]
        for j in range(d):
            g[j][j] = q[i][j]
        grouplikes.append(g)
    return BraidedPair(d, _grouplike_cmap(d, grouplikes), grouplikes,
                       kind="diagonal", params={"q": q})


def _scalar(v):
    if isinstance(v, Cyc):
        return v
    from .scalars import integer
    if isinstance(v, int):
        return integer(v)
    raise TypeError(f"expected a scalar, got {v!r}")


def v3(q):
    """The three-dimensional pair with basis indexed by Z/3 and braiding
    c(x_i (x) x_j) = q x_(-i-j) (x) x_i."""
    q = _scalar(q)
    d = 3
    grouplikes = []
    for i in range(d):
        g = [[zero()] * d for _ in range(d)]
        for j in range(d):
            g[(-i - j) % 3][j] = q
        grouplikes.append(g)
    return BraidedPair(d, _grouplike_cmap(d, grouplikes), grouplikes,
                       kind="v3", params={"q": q})


# the four permutation actions t_a of the irreducible four-dimensional
# family: entry (a, b) is (target index, takes the alpha factor)
_V4_TABLE = (
    ((0, 0), (2, 0), (3, 0), (1, 0)),
    ((3, 0), (1, 0), (0, 1), (2, 1)),
    ((1, 0), (3, 1), (2, 0), (0, 1)),
    ((2, 0), (0, 1), (1, 1), (3, 0)),
)


def v4(q, alpha):
    """The four-dimensional family V_(4,q,alpha): c(x_a (x) x_b) =
    (t_a . x_b) (x) x_a with the monomial actions t_a . x_b = q alpha^e x_c
    tabulated in _V4_TABLE."""
    q = _scalar(q)
    alpha = _scalar(alpha)
    if alpha != one() and alpha != -one():
        raise ValueError("alpha must be 1 or -1")
    d = 4
    grouplikes = []
    for a in range(d):
        g = [[zero()] * d for _ in range(d)]
        for b in range(d):
            target, takes_alpha = _V4_TABLE[a][b]
            g[target][b] = q * alpha if takes_alpha else q
        grouplikes.append(g)
    return BraidedPair(d, _grouplike_cmap(d, grouplikes), grouplikes,
                       kind="v4", params={"q": q, "alpha": alpha})


def two_by_two(q1, q2, eta1, eta2, beta1, beta2):
    """The sum of two conjugate two-dimensional modules over a nonabelian
    group: basis (x1, x1', x2, x2'), block matrices
    [[q_i, eta_i q_i], [eta_i q_i, q_i]] and the eight cross formulas, with
    alpha_i = beta_i^2 (the square root is the caller's explicit choice)."""
    q1, q2 = _scalar(q1), _scalar(q2)
    eta1, eta2 = _scalar(eta1), _scalar(eta2)
    beta1, beta2 = _scalar(beta1), _scalar(beta2)
    for eta in (eta1, eta2):
        if eta != one() and eta != -one():
            raise ValueError("eta must be 1 or -1")
    a1, a2 = beta1 * beta1, beta2 * beta2
    d = 4
    z = zero()

    def gl(rows):
        return [list(r) for r in rows]

    # basis order: 0 = x1, 1 = x1', 2 = x2, 3 = x2'
    g0 = gl([[q1, z, z, z],
             [z, eta1 * q1, z, z],
             [z, z, z, a2],
             [z, z, one(), z]])
    g1 = gl([[eta1 * q1, z, z, z],
             [z, q1, z, z],
             [z, z, z, eta2 * a2],
             [z, z, eta2, z]])
    g2 = gl([[z, a1, z, z],
             [one(), z, z, z],
             [z, z, q2, z],
             [z, z, z, eta2 * q2]])
    g3 = gl([[z, eta1 * a1, z, z],
             [eta1, z, z, z],
             [z, z, eta2 * q2, z],
             [z, z, z, q2]])
    grouplikes = [g0, g1, g2, g3]
    return BraidedPair(d, _grouplike_cmap(d, grouplikes), grouplikes,
                       kind="two_by_two",
                       params={"q1": q1, "q2": q2, "eta1": eta1, "eta2": eta2,
                               "beta1": beta1, "beta2": beta2})


def two_by_two_z_basis(beta1, beta2):
    """Change-of-basis matrix to the eigenvector basis z_eps = beta1 x1 +
    eps x1', z'_eps = beta2 x2 + eps x2', ordered as the two blocks
    (z_+, z'_-, z_-, z'_+); columns express the new basis in the old."""
    beta1, beta2 = _scalar(beta1), _scalar(beta2)
    z = zero()
    e = one()
    return [
        [beta1, z, beta1, z],
        [e, z, -e, z],
        [z, beta2, z, beta2],
        [z, -e, z, e],
    ]


def from_cocycle(xset, cocycle):
    """The braided pair c(i (x) j) = f(i, j) (i |> j) (x) i on the span of a
    crossed set, for a two-cochain f whose braiding solves the braid
    equation (constants and all two-cocycles do)."""
    n = xset.size
    grouplikes = []
    for i in range(n):
        g = [[zero()] * n for _ in range(n)]
        for j in range(n):
            g[xset.act(i, j)][j] = cocycle.value(i, j)
        grouplikes.append(g)
    try:
        return BraidedPair(n, _grouplike_cmap(n, grouplikes), grouplikes,
                           kind="cocycle",
                           params={"xset": xset, "cocycle": cocycle})
    except ValueError as exc:
        raise ValueError(f"cochain does not braid this crossed set: {exc}")


def induced_yd(group, g, chi):
    """The braided pair of the module induced from a centralizer
    representation: basis z_(j,l) over coset representatives h_j and the
    representation space, braiding c(z_(j,l) (x) z_(v,w)) =
    (t_j . z_(v,w)) (x) z_(j,l)."""
    datum = chi if isinstance(chi, _groups.InducedDatum) \
        else _groups.induced_datum(group, g, chi)
    s = datum.class_size
    deg = datum.degree
    d = s * deg
    # action of t on basis: t h_v = h_u gamma with gamma in the centralizer
    rep_index = {h: j for j, h in enumerate(datum.coset_reps)}
    cent = set(datum.centralizer)

    def coset_of(x):
        for u, h in enumerate(datum.coset_reps):
            if group.mul(group.inv(h), x) in cent:
                return u, group.mul(group.inv(h), x)
        raise RuntimeError("element escaped its cosets")

    grouplikes = []
    for j in range(s):
        t = datum.ts[j]
        g_mat = [[zero()] * d for _ in range(d)]
        for v in range(s):
            u, gamma = coset_of(group.mul(t, datum.coset_reps[v]))
            rho = datum.rho[gamma]
            for w in range(deg):
                for k in range(deg):
                    c = rho[k][w]
                    if c:
                        g_mat[u * deg + k][v * deg + w] = c
        for _ in range(deg):
            grouplikes.append(g_mat)
    return BraidedPair(d, _grouplike_cmap(d, grouplikes), grouplikes,
                       kind="induced",
                       params={"group": group, "g": g, "datum": datum})


def direct_sum(a, b, cross_ab, cross_ba):
    """Braided pair on the concatenated basis of a and b.

    The cross braidings are not determined by the summands: ``cross_ab[i]``
    must give the action of the i-th group-like of a on the basis of b
    (a matrix, or a scalar meaning that multiple of the identity), and
    ``cross_ba`` the same with the roles swapped.  Restricting the result
    to either block recovers the summand.
    """
    if a.grouplikes is None or b.grouplikes is None:
        raise ValueError("direct_sum needs group-type data on both summands")
    da, db = a.dim, b.dim
    d = da + db

    def expand(entry, size):
        if isinstance(entry, Cyc) or isinstance(entry, int):
            s = _scalar(entry)
            return [[s if i == j else zero() for j in range(size)]
                    for i in range(size)]
        return [[_scalar(v) for v in row] for row in entry]

    cross_ab = [expand(e, db) for e in cross_ab]
    cross_ba = [expand(e, da) for e in cross_ba]
    if len(cross_ab) != da or len(cross_ba) != db:
        raise ValueError("need one cross action per basis vector")
    grouplikes = []
    for i in range(da):
        g = [[zero()] * d for _ in range(d)]
        for k in range(da):
            for j in range(da):
                g[k][j] = a.grouplikes[i][k][j]
        for k in range(db):
            for j in range(db):
                g[da + k][da + j] = cross_ab[i][k][j]
        grouplikes.append(g)
    for i in range(db):
        g = [[zero()] * d for _ in range(d)]
        for k in range(da):
            for j in range(da):
                g[k][j] = cross_ba[i][k][j]
        for k in range(db):
            for j in range(db):
                g[da + k][da + j] = b.grouplikes[i][k][j]
        grouplikes.append(g)
    return BraidedPair(d, _grouplike_cmap(d, grouplikes), grouplikes,
                       kind="direct_sum", params={"left": a, "right": b})


# ---------------------------------------------------------------------------
# derived pairs and decompositions

def transpose(bp):
    """The pair whose braiding matrix is the transpose; its symmetrizer
    images span the row spaces of the original symmetrizers."""
    d = bp.dim
    cmap = [[] for _ in range(d * d)]
    for p, col in enumerate(bp.cmap):
        for kl, c in col:
            cmap[kl].append((p, c))
    return BraidedPair(d, cmap, None, kind="transpose", params={"of": bp})


def change_basis(bp, p_matrix):
    """The braiding in the basis y_j = sum_i P[i][j] x_i.

    Group-like data is re-derived when the new braiding still has group
    type in the new basis, else dropped.
    """
    d = bp.dim
    cols = {j: {i: _scalar(p_matrix[i][j]) for i in range(d)
                if _scalar(p_matrix[i][j])} for j in range(d)}
    inv = invert_square(cols, d)

    def p_entry(i, j):
        return cols.get(j, {}).get(i, zero())

    def pinv_entry(i, j):
        return inv.get(j, {}).get(i, zero())

    cmap = [[] for _ in range(d * d)]
    for i in range(d):
        for j in range(d):
            # image of y_i (x) y_j: push forward, braid, pull back
            acc = {}
            for a in range(d):
                pa = p_entry(a, i)
                if not pa:
                    continue
                for b in range(d):
                    pb = p_entry(b, j)
                    if not pb:
                        continue
                    for kl, c in bp.cmap[a * d + b]:
                        cur = acc.get(kl)
                        t = pa * pb * c
                        if cur is not None:
                            t = cur + t
                        if t:
                            acc[kl] = t
                        elif cur is not None:
                            del acc[kl]
            out = {}
            for kl, c in acc.items():
                k, l = divmod(kl, d)
                for u in range(d):
                    pu = pinv_entry(u, k)
                    if not pu:
                        continue
                    for v in range(d):
                        pv = pinv_entry(v, l)
                        if not pv:
                            continue
                        key = u * d + v
                        cur = out.get(key)
                        t = pu * pv * c
                        if cur is not None:
                            t = cur + t
                        if t:
                            out[key] = t
                        elif cur is not None:
                            del out[key]
            cmap[i * d + j] = list(out.items())
    grouplikes = _detect_grouplikes(d, cmap)
    return BraidedPair(d, cmap, grouplikes, kind="matrix",
                       params={"basis_change_of": bp})


def _detect_grouplikes(d, cmap):
    grouplikes = []
    for i in range(d):
        g = [[zero()] * d for _ in range(d)]
        for j in range(d):
            for kl, c in cmap[i * d + j]:
                k, l = divmod(kl, d)
                if l != i:
                    return None
                g[k][j] = c
        grouplikes.append(g)
    return grouplikes


def restrict(bp, indices):
    """The sub-pair on a subset of basis indices; the subset must be closed
    (the braiding may not leak outside it)."""
    indices = list(indices)
    pos = {x: t for t, x in enumerate(indices)}
    d = bp.dim
    nd = len(indices)
    cmap = [[] for _ in range(nd * nd)]
    for ti, i in enumerate(indices):
        for tj, j in enumerate(indices):
            col = []
            for kl, c in bp.cmap[i * d + j]:
                k, l = divmod(kl, d)
                if k not in pos or l not in pos:
                    raise ValueError("index set is not closed under the braiding")
                col.append((pos[k] * nd + pos[l], c))
            cmap[ti * nd + tj] = col
    gl = None
    if bp.grouplikes is not None:
        gl = [[[bp.grouplikes[i][k][j] for j in indices] for k in indices]
              for i in indices]
    return BraidedPair(nd, cmap, gl, kind="matrix", params={"restricted": bp})


def find_decomposition(bp):
    """The maximal refinement of the standard basis into blocks closed under
    the braiding's support."""
    d = bp.dim
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for i in range(d):
        for j in range(d):
            for kl, _ in bp.cmap[i * d + j]:
                k, l = divmod(kl, d)
                # c maps (block i) (x) (block j) into (block j) (x) (block i)
                union(j, k)
                union(i, l)
    blocks = {}
    for x in range(d):
        blocks.setdefault(find(x), []).append(x)
    return Decomposition(blocks.values())


def cross_square_is_identity(bp, block_a, block_b):
    """Whether c^2 restricts to the identity on (block a) (x) (block b)."""
    d = bp.dim
    for i in block_a:
        for j in block_b:
            vec = {i * d + j: ONE}
            out = braids.sigma_pass(bp.cmap, d, 2, vec, 1)
            out = braids.sigma_pass(bp.cmap, d, 2, out, 1)
            if out != vec:
                return False
    return True
