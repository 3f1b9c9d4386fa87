"""
Identities and normal forms
===========================

Identity tests run on generic matrices whose entries are independent
indeterminates, so a verdict holds over every field of characteristic zero.
Normal forms rewrite a polynomial, modulo the identities of UT_m, in the
basis of products of an increasing monomial with at most m - 1 commutators.
"""

from utimage import enumerate_basis, is_identity, normal_form, poly

# %%
# [x1,x2][x3,x4] vanishes on UT_2 but not on UT_3; the certificate is the
# first nonzero entry of the generic evaluation.
f = poly("[x1,x2][x3,x4]")
print("identity of UT2:", bool(is_identity(f, 2)))
res = is_identity(f, 3)
print("identity of UT3:", bool(res))
print(f"entry {res.entry}: {res.certificate}")

# %%
# The multilinear basis of degree 3 for UT_3 has six elements.
for b in enumerate_basis(3, 3):
    print("  ", b)

# %%
# Normal forms modulo T(UT_3).
for expr in ["x2*x1", "x1*x2 - x2*x1", "x3*x1*x2", "[x1,x2][x3,x4] + x4*[x2,x1,x3]"]:
    print(f"{expr:32s} == {normal_form(poly(expr), 3)}")
