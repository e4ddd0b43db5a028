"""Rank-2 diagonal braidings: adjoint ladders, Cartan data, and the PBW
lower bound with its equality cases.

The nilpotency order of the braided adjoint of one generator on the other
is computed twice: by the closed form coming from the symmetrizer
factorization, and by direct iteration in the algebra; the two must agree.
From the orders come a generalized Cartan matrix and a product lower bound
for the dimension, attained exactly in the classified cases.
"""

from nichols.algebra import hilbert, nilpotency_order
from nichols.rank2 import analyze, cartan, finite_cartan_rank2, is_qls
from nichols.scalars import integer, one, root_of_unity
from nichols import pairs


def describe(name, matrix, cutoff):
    res = analyze(matrix)
    print(f"{name}: N1={res.N1} N2={res.N2} t={res.t} r={res.r} "
          f"M={res.M} bound={res.bound}")
    print(f"   verdict {res.verdict}"
          + (f" (condition {res.condition})" if res.condition else ""))
    a = cartan(matrix)
    print(f"   cartan {a}, finite type: {finite_cartan_rank2(a)}")
    total = hilbert(pairs.diagonal(matrix), cutoff).total
    print(f"   computed dimension {total}")


i4 = root_of_unity(4, 1)
w3 = root_of_unity(3, 1)
minus = integer(-1)

# order (2, 4) diagonal with a fourth root off-diagonal: type A2, bound 16
describe("A2 example", [[minus, i4], [minus, i4]], 8)

# order (2, 3) diagonal with a cube root: type B2, bound 36, and the
# equality holds because the off-diagonal product equals -q22
describe("B2 example", [[minus, w3], [minus, w3]], 12)

# quantum linear spaces short-circuit: opposite entries cancel
print("QLS dimension from the diagonal orders:",
      is_qls([[minus, w3], [w3 ** -1, minus]]))

# the adjoint ladder is verified against direct iteration on the nose
bp = pairs.diagonal([[minus, w3], [minus, w3]])
print("adjoint nilpotency orders:",
      nilpotency_order(bp, 0, 1), "and", nilpotency_order(bp, 1, 0))

# a case where the bound cannot be met: the off-diagonal product avoids
# all three equality conditions and the algebra grows past the bound
mat = [[minus, i4], [one(), w3]]
res = analyze(mat)
print(f"failing case: bound {res.bound}, verdict {res.verdict}")
