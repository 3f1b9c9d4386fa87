"""
Classifying images on UT_2 and UT_3
===================================

The image of a multilinear polynomial on UT_3 is one of UT_3, J, J^2 or {0}.
This script classifies a handful of polynomials and shows which criterion
decided each verdict.
"""

from utimage import classify, poly

# %%
# The coefficient sum decides the first split: a nonzero sum gives the whole
# algebra, because substituting the identity for all variables but one gives
# a nonzero multiple of the remaining variable.
for expr in ["x1", "x1*x2", "2*x1*x2*x3 - x3*x2*x1"]:
    cls = classify(poly(expr), 3)
    print(f"{expr:30s} -> {cls.label:4s} ({cls.criterion})")

# %%
# With a zero coefficient sum the image sits inside J, and the largest k for
# which f is an identity of UT_k tells us which power of J it is.
for expr in ["[x1,x2]", "x3*[x2,x1]", "[x1,x2][x3,x4]", "[x1,x2]*x3*[x4,x5]",
             "[x1,x2][x3,x4][x5,x6]"]:
    cls = classify(poly(expr), 3)
    print(f"{expr:30s} -> {cls.label:4s} (identity level {cls.identity_level})")

# %%
# On UT_2 only three answers are possible.
for expr in ["x1*x2 + x2*x1", "[x1,x2,x3]", "[x1,x2][x3,x4]"]:
    print(f"{expr:30s} -> {classify(poly(expr), 2).label}")
