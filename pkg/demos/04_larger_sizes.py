"""
Beyond 3 x 3 (conjectural)
==========================

For n >= 4 the image is predicted to be {0}, UT_n or some J^k. The
prediction uses the same identity-level chain; random sampling checks that
the samples lie in, and span, the predicted set. J^k verdicts are labeled
conjectural.
"""

from utimage import conjecture_predict, poly

for expr, n in [("x1", 4), ("[x1,x2]", 5), ("[x1,x2][x3,x4]", 4),
                ("[x1,x2][x3,x4][x5,x6]", 4), ("[x1,x2][x3,x4][x5,x6][x7,x8]", 4)]:
    c = conjecture_predict(poly(expr), n, count=30, seed=0)
    tag = "conjectural" if c.conjectural else "proved"
    ev = c.evidence
    print(f"UT{n}: {expr:32s} -> {c.label:4s} [{tag}] "
          f"span {ev['span_rank']}/{ev['expected_dim']}, contained={ev['contained']}")
