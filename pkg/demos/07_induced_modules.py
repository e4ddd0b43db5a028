"""Braided pairs induced from finite group data.

A group element and a representation of its centralizer induce a braided
vector space on the indexed conjugacy class; characters give monomial
braidings, and sums of such modules assemble with explicit cross actions.
"""

from nichols.algebra import hilbert
from nichols.groups import (
    centralizer,
    conjugacy_classes,
    cyclic,
    cyclic_character,
    dihedral,
    f_g_map,
    symmetric,
)
from nichols.scalars import format_scalar, integer, root_of_unity
from nichols import pairs

s3 = symmetric(3)
print("class sizes in the symmetric group on three letters:",
      sorted(len(c) for c in conjugacy_classes(s3)))

# a three-cycle has a cyclic centralizer of order three; the character
# sending it to a cube root induces a two-dimensional diagonal pair
three = next(g for g in s3.elements()
             if g != s3.identity and s3.mul(g, s3.mul(g, g)) == s3.identity
             and s3.mul(g, g) != s3.identity)
print("centralizer size:", len(centralizer(s3, three)))
w = root_of_unity(3, 1)
bp = pairs.induced_yd(s3, three, cyclic_character(s3, three, w))
print("induced pair:", bp, "diagonal matrix:",
      [[format_scalar(v) for v in row] for row in pairs.is_diagonal(bp)])

# the conjugation action on an indexed class is a homomorphism into a
# symmetric group, with each class element fixing its own index
ts, perms = f_g_map(s3, three)
print("indexed class:", ts, " action of the first element:", perms[ts[0]])

# dihedral groups carry the classes behind the two-plus-two modules
d4 = dihedral(4)
print("dihedral group of order 8 has class sizes",
      sorted(len(c) for c in conjugacy_classes(d4)))

# abelian case: two lines over the cyclic group of order four, glued with
# explicit cross actions, give the sixteen-dimensional type-A2 algebra
c4 = cyclic(4)
i = root_of_unity(4, 1)
m1 = pairs.induced_yd(c4, 2, cyclic_character(c4, 1, i))  # group-like sigma^2
m2 = pairs.induced_yd(c4, 1, cyclic_character(c4, 1, i))  # group-like sigma
total = pairs.direct_sum(m1, m2, [integer(-1)], [i])
print("glued pair dimension:", hilbert(total, 8).total)
