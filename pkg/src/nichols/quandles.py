"""Crossed sets (quandles), their multiplicative cochain complex, and
cohomology over finite cyclic coefficient groups.

Cochains X^n -> (roots of unity) are written additively as exponent tables
modulo m, so the differentials become integer matrices and cohomology is a
Smith-normal-form computation.  Coefficients are fixed to Z/m: computable,
and nothing is lost for braidings of finite group type, whose cocycle
values are roots of unity.  Cohomology with all units as coefficients is
the directed union of these finite-cyclic answers (compute over Z/m for
every m of interest); it is not materialized as a single object here.
"""

from itertools import product as _product
from math import gcd

from .linalg import smith_normal_form
from .scalars import root_of_unity


class CrossedSet:
    """A finite set with a self-distributive operation i |> j satisfying
    the crossed-set axioms; conjugation on unions of conjugacy classes is
    the motivating example."""

    __slots__ = ("size", "table", "name")

    def __init__(self, table, name="crossed set", validate=True):
        table = tuple(tuple(row) for row in table)
        self.size = len(table)
        self.table = table
        self.name = name
        if validate:
            ok, why = check_crossed_set(table)
            if not ok:
                raise ValueError(why)

    def act(self, i, j):
        return self.table[i][j]

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"CrossedSet({self.name}, size={self.size})"


def check_crossed_set(table):
    """Verify the four axioms exhaustively.  Returns (ok, diagnostics)."""
    n = len(table)
    if any(len(row) != n for row in table):
        return False, "table is not square"
    rng = range(n)
    for i in rng:
        if sorted(table[i]) != list(rng):
            return False, f"left translation by {i} is not a bijection"
    for i in rng:
        if table[i][i] != i:
            return False, f"axiom i|>i=i fails at i={i}"
    for i in rng:
        for j in rng:
            if table[i][j] == j and table[j][i] != i:
                return False, f"axiom (i|>j=j => j|>i=i) fails at ({i},{j})"
    for i in rng:
        ti = table[i]
        for j in rng:
            for k in rng:
                if ti[table[j][k]] != table[ti[j]][ti[k]]:
                    return False, f"self-distributivity fails at ({i},{j},{k})"
    return True, "ok"


def trivial_crossed_set(n):
    return CrossedSet([[j for j in range(n)] for _ in range(n)],
                      name=f"trivial{n}")


def dihedral_crossed_set(n):
    """Z/n with i |> j = 2i - j = -i - j ... the involutory quandle of the
    dihedral group; for n = 3 this is the class of transpositions."""
    return CrossedSet([[(2 * i - j) % n for j in range(n)] for i in range(n)],
                      name=f"dihedral{n}")


def zmod3_crossed_set():
    """Z/3 with i |> j = -i - j; isomorphic to dihedral3 (2i = -i mod 3)."""
    return CrossedSet([[(-i - j) % 3 for j in range(3)] for i in range(3)],
                      name="zmod3")


def conjugation_crossed_set(group, classes):
    """The union of conjugacy classes under conjugation i |> j = i j i^-1.

    ``classes`` lists group elements; their classes' union must be closed
    (it always is) and the elements are indexed in sorted order.
    """
    from .groups import conjugacy_class
    elems = sorted({x for g in classes for x in conjugacy_class(group, g)})
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[group.conj(x, y)] for y in elems] for x in elems]
    return CrossedSet(table, name=f"conj({group.name})")


class Cochain2:
    """A 2-cochain as an exponent table into Z/m: f(i, j) = zeta_m^e(i,j)."""

    __slots__ = ("modulus", "exponents")

    def __init__(self, modulus, exponents):
        self.modulus = modulus
        self.exponents = tuple(tuple(v % modulus for v in row)
                               for row in exponents)

    @classmethod
    def constant(cls, xset, modulus, exponent):
        n = xset.size
        return cls(modulus, [[exponent] * n for _ in range(n)])

    def value(self, i, j):
        return root_of_unity(self.modulus, self.exponents[i][j])

    def is_cocycle(self, xset):
        m = self.modulus
        e = self.exponents
        act = xset.act
        for x0 in range(xset.size):
            for x1 in range(xset.size):
                for x2 in range(xset.size):
                    # additive delta^2: e(x1,x2) - e(x0|>x1, x0|>x2)
                    #                 - e(x0,x2) + e(x0, x1|>x2)
                    v = (e[x1][x2] - e[act(x0, x1)][act(x0, x2)]
                         - e[x0][x2] + e[x0][act(x1, x2)])
                    if v % m:
                        return False
        return True

    def __repr__(self):
        return f"Cochain2(mod={self.modulus}, table={self.exponents})"


def delta_matrix(xset, n):
    """The integer matrix of the n-th differential on exponent tables:
    rows indexed by X^(n+1), columns by X^n, both in lexicographic order.

    The multiplicative formula contributes, for each i < n, the cochain
    argument with x_i omitted (sign (-1)^i) and the argument with x_i
    acting on everything to its right (sign (-1)^(i+1)).
    """
    size = xset.size
    act = xset.act
    rows = size ** (n + 1)
    cols = size ** n if n > 0 else 1
    mat = [[0] * cols for _ in range(rows)]
    if n == 0:
        return mat  # the zero map: constants have trivial differential
    for r, xs in enumerate(_product(range(size), repeat=n + 1)):
        row = mat[r]
        for i in range(n):
            omitted = xs[:i] + xs[i + 1:]
            acted = xs[:i] + tuple(act(xs[i], y) for y in xs[i + 1:])
            sign = 1 if i % 2 == 0 else -1
            row[_index(omitted, size)] += sign
            row[_index(acted, size)] -= sign
    return mat


def _index(word, size):
    out = 0
    for x in word:
        out = out * size + x
    return out


def pi0(xset):
    """Connected components of the relation generated by j ~ i |> j."""
    n = xset.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(n):
            rj, rk = find(j), find(xset.act(i, j))
            if rj != rk:
                parent[rk] = rj
    return len({find(x) for x in range(n)})


class CohomologyGroup:
    """Invariant factors of ker(delta^n) / im(delta^(n-1)) over Z/m."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        self.factors = list(factors)

    def __eq__(self, other):
        if isinstance(other, CohomologyGroup):
            return self.factors == other.factors
        return NotImplemented

    def __repr__(self):
        return f"CohomologyGroup({self.factors})"

    @property
    def size(self):
        out = 1
        for f in self.factors:
            out *= f
        return out


def cohomology(xset, n, modulus):
    """H^n(X; Z/m) as invariant factors, via Smith normal form.

    The kernel of delta^n mod m is the integer lattice V diag(g) Z^a with
    g_i = m / gcd(d_i, m) along the diagonalization of delta^n; the
    cohomology is its quotient by the image of delta^(n-1) together with
    m Z^a, presented in lattice coordinates and diagonalized again.
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    a_mat = delta_matrix(xset, n)
    rows_a = len(a_mat)
    cols_a = len(a_mat[0])
    diag, v, vinv = smith_normal_form(a_mat, rows_a, cols_a, want_right=True)
    g = [modulus // gcd(d, modulus) for d in diag]
    g += [1] * (cols_a - len(g))
    if n == 0:
        b_cols = []
    else:
        b_mat = delta_matrix(xset, n - 1)
        b_cols = [[b_mat[i][j] for i in range(cols_a)]
                  for j in range(len(b_mat[0]))]
    # relation lattice: columns of delta^(n-1) and m * identity, expressed
    # in the kernel-lattice coordinates diag(g)^-1 V^-1 (integrality is
    # guaranteed because both kinds of columns lie in the kernel mod m)
    rel_cols = b_cols + [[modulus if i == j else 0 for i in range(cols_a)]
                         for j in range(cols_a)]
    pres = []
    for col in rel_cols:
        coords = []
        for i in range(cols_a):
            s = 0
            row = vinv[i]
            for j in range(cols_a):
                if col[j]:
                    s += row[j] * col[j]
            if s % g[i]:
                raise AssertionError("relation column escaped the kernel lattice")
            coords.append(s // g[i])
        pres.append(coords)
    # presentation matrix: rows = lattice coordinates, columns = relations
    mat = [[pres[j][i] for j in range(len(pres))] for i in range(cols_a)]
    factors = smith_normal_form(mat, cols_a, len(pres))
    if len(factors) != cols_a:
        raise AssertionError("presentation is not full rank")
    out = []
    for f in factors:
        if modulus % f:
            raise AssertionError("invariant factor does not divide the modulus")
        if f != 1:
            out.append(f)
    return CohomologyGroup(sorted(out))


def h1(xset, modulus):
    """H^1 plus the number of connected components it is supported on."""
    return cohomology(xset, 1, modulus), pi0(xset)


def h2(xset, modulus):
    return cohomology(xset, 2, modulus)


def braidings_check(xset, cochain):
    """Whether the cochain's braiding solves the braid equation, tested
    exhaustively on the triple tensor power of the spanned vector space."""
    from .pairs import braid_equation_holds
    n = xset.size
    cmap = []
    for i in range(n):
        for j in range(n):
            cmap.append([(xset.act(i, j) * n + i, cochain.value(i, j))])
    return braid_equation_holds(n, cmap) is None


def grouplike_closure(xset, cochain):
    """Order of the group generated by the braiding's group-like actions.

    Each g_i scales by a root of unity and permutes the basis, so it acts
    faithfully on (crossed set) x (torsor of N-th roots): a permutation of
    a finite set, closed by orbit enumeration.
    """
    from math import lcm
    m = cochain.modulus
    n = xset.size
    big = 1
    for row in cochain.exponents:
        for e in row:
            big = lcm(big, m // gcd(m, e))  # order of zeta_m^e (gcd(m,0)=m)
    # permutation of X x Z/big: (j, s) -> (i |> j, s + e(i,j) big/m)
    gens = []
    for i in range(n):
        images = []
        for j in range(n):
            step = cochain.exponents[i][j] * big // m
            for s in range(big):
                images.append(xset.act(i, j) * big + (s + step) % big)
        gens.append(tuple(images))
    ident = tuple(range(n * big))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)
