"""The braid group algebra identities behind the quantum Serre relations.

Formal sums of braid words have no normal form, so identities are checked
through their actions: both sides run over every standard basis tensor of
a suite of diagonal braided pairs.  The final family factors the
symmetrizer against the descending ladder products, which is what turns
adjoint nilpotency into a scalar computation.
"""

from nichols.braids import verify_identity
from nichols.identities import all_identities, standard_suite

suite = standard_suite(count=6, max_order=12, seed=7)
print(f"suite of {len(suite)} random diagonal pairs, orders at most 12")

for name, lhs, rhs in all_identities(4):
    report = verify_identity(lhs, rhs, suite)
    print(("PASS " if report.ok else "FAIL ") + name)
    if not report.ok:
        print("  counterexample on", report.pair,
              "basis index", report.basis_word)
