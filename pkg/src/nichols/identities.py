"""The group-algebra operator identities behind the generalized quantum
Serre relations, packaged for verification over suites of braided pairs.

Formal sums of braid words have no normal form, so each identity is checked
through its action: both sides are applied to every standard basis tensor
of every pair in a suite.  Sides are kept as products of factors and
evaluated right to left, which avoids expanding sums of sums; the full
symmetrizer factor runs through its quadratic-cost recursion (itself
checked against the brute-force word sum elsewhere).  The identity
families are indexed by the number of moving strands n and act on n + 1
strands.
"""

import random

from .braids import GroupAlgElt, d_elt, r_elt, u_elt
from .scalars import root_of_unity
from . import pairs as _pairs


class Product:
    """A product of operator factors, rightmost acting first.  A factor is
    a GroupAlgElt or the marker ("sym", k, offset) for the degree-k
    symmetrizer acting after ``offset`` inert leading strands."""

    __slots__ = ("strands", "factors")

    def __init__(self, strands, factors):
        self.strands = strands
        self.factors = list(factors)

    def apply(self, bp, vec, n):
        cur = vec
        for f in reversed(self.factors):
            if isinstance(f, tuple):
                _, k, offset = f
                cur = _sym_block_apply(bp, cur, n, k, offset)
            else:
                cur = f.apply(bp, cur, n)
        return cur


def _sym_block_apply(bp, vec, n, k, offset):
    """Apply id^offset (x) S^k (x) id^(n-k-offset) through the quadratic
    recursion; the sub-symmetrizer of degree j sits on the last j strands
    of the block."""
    if k <= 1:
        return dict(vec)
    from .braids import sigma_pass
    from .linalg import vec_add_into
    d = bp.dim
    cmap = bp.cmap
    cur = dict(vec)
    for j in range(2, k + 1):
        start = offset + k - j
        total = dict(cur)
        run = cur
        for i in range(1, j):
            run = sigma_pass(cmap, d, n, run, start + i)
            vec_add_into(total, run)
        cur = total
    return cur


def _gen(strands, j):
    return GroupAlgElt.from_word(strands, (j,))


def identity_family(n):
    """All identity instances on n + 1 strands, as (name, lhs, rhs)."""
    s = n + 1
    out = []
    un1 = u_elt(s, n, 1)
    dn1 = d_elt(s, n, 1)
    for j in range(2, n + 1):
        out.append((f"u_shift_intertwiner n={n} j={j}",
                    un1 * _gen(s, j), _gen(s, j - 1) * un1))
        out.append((f"d_shift_intertwiner n={n} j={j}",
                    _gen(s, j) * dn1, dn1 * _gen(s, j - 1)))
        out.append((f"du_centralizer n={n} j={j}",
                    _gen(s, j) * dn1 * un1, dn1 * un1 * _gen(s, j)))
    if n >= 3:
        dn2 = d_elt(s, n, 2)
        sn = _gen(s, n)
        for j in range(2, n):
            out.append((f"u_slide n={n} j={j}",
                        u_elt(s, j, 1) * dn2 * sn,
                        dn1 * sn * u_elt(s, j - 1, 1)))
    if n >= 2:
        e = GroupAlgElt.unit(s)
        usum = e
        for k in range(1, n):
            usum = usum + u_elt(s, k, 1)
        dsum = GroupAlgElt(s)
        for k in range(1, n + 1):
            dsum = dsum + d_elt(s, n, k) * un1
        out.append((f"ladder_exchange n={n}",
                    Product(s, [usum - dsum, r_elt(s, n, 2)]),
                    Product(s, [r_elt(s, n, 1), usum])))
    # the symmetrizer factorization producing the Serre-type relations
    e = GroupAlgElt.unit(s)
    binomials = [e - u_elt(s, n, k) for k in range(1, n + 1)]
    lhs = Product(s, [("sym", s, 0)] + binomials)
    rhs = Product(s, [r_elt(s, n, 1), ("sym", n, 0)])
    out.append((f"symmetrizer_factorization n={n}", lhs, rhs))
    return out


def all_identities(max_n):
    out = []
    for n in range(1, max_n + 1):
        out.extend(identity_family(n))
    return out


def standard_suite(count=10, max_order=12, seed=20240, dim=2):
    """Deterministic suite of random diagonal braided pairs with entries of
    bounded multiplicative order.

    Each pair draws all of its entries from a single conductor m <= the
    order bound, so the pair's scalars stay in one small cyclotomic field;
    mixing coprime conductors would square the coefficient length without
    exercising anything new.
    """
    rng = random.Random(seed)
    suite = []
    while len(suite) < count:
        m = rng.randint(1, max_order)
        q = [[root_of_unity(m, rng.randrange(m)) for _ in range(dim)]
             for _ in range(dim)]
        suite.append(_pairs.diagonal(q))
    return suite
