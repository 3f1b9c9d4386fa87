"""
Witnesses and sampling
======================

A verdict J^k is backed two ways: random evaluations stay inside J^k and
span it, and for any target in J^k we can write down matrices that hit it
exactly.
"""

from utimage import UTMatrix, poly, sample_image, substitute, witness_for_target

f = poly("[x1,x2]*x3 + x3*[x1,x2]")

# %%
rep = sample_image(f, 3, count=50, seed=1)
print("smallest radical level among samples:", rep.min_level)
print("rank of the span of the samples:", rep.span_rank)

# %%
# Hit E_12 - 3 E_23 + 5/2 E_13. All variables but one are fixed to I or to
# D = diag(0, 1, 2); the free one is found by solving a linear system.
target = UTMatrix(3, {(1, 2): 1, (2, 3): -3, (1, 3): "5/2"})
w = witness_for_target(f, 3, target)
for i, m in sorted(w.assignment.items()):
    print(f"x{i} = {m!r}")
print("f(...) =", substitute(f, w.assignment))
assert w.achieved == target
