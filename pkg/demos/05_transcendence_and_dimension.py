"""Dimension by transcendence basis, from first principles.

A hand-picked subset D of the generators (all the Q's, the main minor, and
the row-exchange minors M_{i,j}) has exactly n(m-n+1)+1 elements.  A
monomial specialization shows D is algebraically independent, and every
other generator is a rational function of D with denominators only the
main minor and Q_1.  That pins the dimension without any poset theory.
"""

import json

from resint import build_D, build_instance, verify_transcendence_basis
from resint.labels import M
from resint.transcendence import (
    DContext,
    _prefix,
    independence_by_exponents,
    plucker_relation,
    specialize_D,
    verify_rewrite,
)

m, n = 4, 2
D = build_D(m, n)
print("D =", [l.text for l in D.labels], f" (size {len(D)} = {n}*({m}-{n}+1)+1)")

print("\nspecialized closed forms (each a single signed monomial):")
for label, poly in specialize_D(m, n).items():
    print(f"  {label.text:6s} -> {poly}")

report = independence_by_exponents(m, n)
print(f"\nexponent matrix rank {report.rank} of {report.size} rows: independent = {report.verdict}")

R = build_instance(m, n).ring
rec = plucker_relation(R, (1,), (2, 3, 4))
print("\nthe three-term exchange relation:")
for t in rec.terms:
    if t.coeff:
        print(f"  {t.coeff:+d} * {list(t.rows_a)} * {list(t.rows_b)}")
print("expands to:", rec.expand(R))

inst = build_instance(m, n)
ctx = DContext(inst)
frac = ctx.fraction(M([2, 3]))
print("\n[2,3] over D:", json.dumps(_prefix(frac)))
print("cleared-denominator identity holds:", verify_rewrite(ctx, M([2, 3]), frac))

cert = verify_transcendence_basis(m, n)
print("\nfull certificate verdict:", cert.verdict, "| dimension:", cert.dimension)
