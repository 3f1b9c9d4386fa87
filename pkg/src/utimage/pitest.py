"""Polynomial identity tests for UT_k.

A multilinear polynomial is an identity of UT_k over an infinite field iff it
vanishes on one tuple of generic matrices. The generic evaluation is computed
combinatorially: entry ``(i, j)`` of ``X_{s(1)} ... X_{s(n)}`` is the sum over
nondecreasing index paths ``i = p0 <= ... <= pn = j`` of the product of the
indeterminates ``t[s(r)]_{p(r-1), p(r)}``. A monomial in the indeterminates is
therefore recorded as the edge ``(a, b)`` used by each variable.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter
from typing import Optional

from .cring import CPoly
from .errors import DegreeCapExceeded
from .mpoly import MultilinearPoly, substitute, sum_of_coefficients
from .utalg import UTMatrix

DEFAULT_DEGREE_CAP = 8
DEFAULT_BOUND = 10


def degree_cap() -> int:
    """Symbolic-test degree cap; ``UTIMAGE_DEGREE_CAP`` overrides the default."""
    env = os.environ.get("UTIMAGE_DEGREE_CAP")
    return int(env) if env else DEFAULT_DEGREE_CAP


def check_degree(f: MultilinearPoly, cap: Optional[int] = None):
    cap = degree_cap() if cap is None else cap
    if f.degree > cap:
        raise DegreeCapExceeded(f"degree {f.degree} exceeds the cap {cap} "
                                "(set UTIMAGE_DEGREE_CAP to raise it)")


@lru_cache(maxsize=None)
def _paths(n, k):
    out = []
    for p in itertools.combinations_with_replacement(range(1, k + 1), n + 1):
        out.append((p[0], p[-1], tuple(zip(p, p[1:]))))
    return tuple(out)


def generic_coordinates(f: MultilinearPoly, k: int):
    """Coefficients of ``f`` evaluated on generic k x k upper triangular matrices.

    Returns ``{(i, j, edges): coeff}`` where ``edges[s - 1]`` is the position
    ``(a, b)`` of the indeterminate contributed by variable ``x_s``. Zero
    coefficients are dropped.
    """
    n = f.degree
    paths = _paths(n, k)
    out = {}
    for perm, c in f.terms.items():
        pos = [0] * n
        for r, s in enumerate(perm):
            pos[s - 1] = r
        if n == 1:
            pick = lambda e, _p=pos[0]: (e[_p],)
        else:
            pick = itemgetter(*pos)
        for i, j, edges in paths:
            key = (i, j, pick(edges))
            out[key] = out.get(key, 0) + c
    return {key: c for key, c in out.items() if c}


def coordinates_to_matrix(coords, k, n_vars, prefix="t"):
    """Turn generic coordinates back into a UTMatrix with CPoly entries."""
    ents = {}
    for (i, j, edges), c in coords.items():
        mono = tuple((f"{prefix}{s}_{a}_{b}", 1) for s, (a, b) in enumerate(edges, 1))
        ents.setdefault((i, j), {})[mono] = c
    return UTMatrix(k, {ij: CPoly(t) for ij, t in ents.items()})


def generic_tuple(n_vars, k, prefix="t"):
    return {s: UTMatrix.generic(k, s, prefix) for s in range(1, n_vars + 1)}


@dataclass(frozen=True)
class IdentityResult:
    """Outcome of an exact identity test.

    When ``holds`` is False, ``entry`` is the first nonzero position of the
    generic evaluation and ``certificate`` the polynomial found there.
    """

    holds: bool
    size: int
    entry: Optional[tuple] = None
    certificate: Optional[CPoly] = None

    def __bool__(self):
        return self.holds


def is_identity(f: MultilinearPoly, k: int, prefix: str = "t", cap=None) -> IdentityResult:
    """Exact test of ``f`` in T(UT_k) via generic evaluation."""
    if k < 1:
        raise ValueError("k must be at least 1")
    check_degree(f, cap)
    coords = generic_coordinates(f, k)
    if not coords:
        return IdentityResult(True, k)
    i, j = min((key[0], key[1]) for key in coords)
    entry = {key: c for key, c in coords.items() if key[:2] == (i, j)}
    cert = coordinates_to_matrix(entry, k, f.degree, prefix)[i, j]
    return IdentityResult(False, k, (i, j), cert)


def random_matrix(rng, k, bound=DEFAULT_BOUND, level=0):
    """Uniform integer entries in [-bound, bound] on the positions of J^level."""
    return UTMatrix(k, {(i, j): rng.randint(-bound, bound)
                        for i in range(1, k + 1) for j in range(i + level, k + 1)})


def is_identity_randomized(f: MultilinearPoly, k: int, trials: int = 20, seed=0,
                           bound: int = DEFAULT_BOUND) -> bool:
    """Probabilistic identity test by random integer evaluation.

    ``False`` is always correct; ``True`` may be wrong with small probability.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    for _ in range(trials):
        point = {s: random_matrix(rng, k, bound) for s in range(1, f.degree + 1)}
        if not substitute(f, point).is_zero():
            return False
    return True


def max_identity_level(f: MultilinearPoly, n_max: int, cap=None) -> int:
    """Largest ``k <= n_max`` with f in T(UT_k); 0 when the coefficient sum is nonzero."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if sum_of_coefficients(f) != 0:
        return 0
    for k in range(2, n_max + 1):
        if not is_identity(f, k, cap=cap):
            return k - 1
    return n_max
