"""Exact polynomials, the generator family, and leading monomials.

The whole library works with sparse polynomials over exact coefficients
(rationals or a prime field).  The objects of interest live in the ring
K[X, y] for a generic m x n matrix X of indeterminates and a column y: the
bilinear entries Q_i of X*y and the maximal minors of X.
"""

from resint import GF, QQ, ambient_ring, bordered_determinant, minor, poly_text, q_entry

# a 4 x 2 matrix of variables over the rationals
R = ambient_ring(4, 2, field=QQ)

q1 = q_entry(R, 1)
print("Q1          =", q1)

m12 = minor(R, [1, 2])
print("[1,2]       =", m12)

print("Q3 + [1,2]  =", q_entry(R, 3) + m12)

# Leading monomials under the built-in order: Q_i leads with x[i][n]*y[n],
# a minor leads with its main diagonal.  Everything downstream (the
# straightening law, the Sagbi property) hangs on these two facts.
print("lm(Q1)      =", q1.leading_monomial())
print("lm([1,2])   =", m12.leading_monomial())

# The bordered determinant: append the Q column to the rows {1,2} plus a
# larger row j=3.  The matrix is singular, so the cofactor expansion along
# the Q column is a relation among the products Q_i * [rows].
exp = bordered_determinant(R, [1, 2], 3)
print("cofactors   =", exp.terms)
print("expansion   =", exp.expand(), "(identically zero)")

# The same objects over a prime field: residues instead of fractions.
Rp = ambient_ring(4, 2, field=GF(32003))
print("over F_32003:", poly_text(minor(Rp, [1, 2])))
