"""Multilinear commutator-product basis of the relatively free algebra of UT_m.

A basis term is ``x_{i1} ... x_{ik} [c_1] ... [c_r]`` with an increasing
prefix and ``r <= m - 1`` left-normed commutators whose indices follow the
pattern ``a > b < c < d < ...``. Normal forms are obtained by exact linear
algebra on generic evaluations and are always re-verified with
:func:`~utimage.pitest.is_identity`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

import flint

from .cring import fmt_rat
from .errors import DegreeCapExceeded, SolveFailure
from .mpoly import Commutator, MultilinearPoly, Product, Variable, expand
from .pitest import generic_coordinates, is_identity

NORMAL_FORM_DEGREE_CAP = 6
# prime used only to pick a nonsingular square subsystem; exactness comes after
_PRIME = 2**61 - 1


@dataclass(frozen=True, order=True)
class BasisTerm:
    prefix: Tuple[int, ...]
    commutators: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if list(self.prefix) != sorted(set(self.prefix)):
            raise ValueError("prefix must be strictly increasing")
        for c in self.commutators:
            if len(c) < 2 or not c[0] > c[1] or any(a >= b for a, b in zip(c[1:], c[2:])):
                raise ValueError(f"commutator {c} violates the index pattern")

    @property
    def degree(self):
        return len(self.prefix) + sum(len(c) for c in self.commutators)

    @property
    def num_commutators(self):
        return len(self.commutators)

    def sort_key(self):
        return (len(self.commutators), self.prefix, self.commutators)

    def expr(self):
        factors = [Variable(i) for i in self.prefix]
        for c in self.commutators:
            node = Commutator((Variable(c[0]), Variable(c[1])))
            for i in c[2:]:
                node = Commutator((node, Variable(i)))
            factors.append(node)
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def poly(self) -> MultilinearPoly:
        return _term_poly(self)

    def __str__(self):
        parts = ["*".join(f"x{i}" for i in self.prefix)] if self.prefix else []
        parts += ["[" + ",".join(f"x{i}" for i in c) + "]" for c in self.commutators]
        return "*".join(parts)

    def to_json(self):
        return {"prefix": list(self.prefix), "commutators": [list(c) for c in self.commutators]}


@lru_cache(maxsize=None)
def _term_poly(term):
    return expand(term.expr())


def _commutator_blocks(indices):
    """All admissible commutators (as index tuples) on exactly this index set."""
    s = sorted(indices)
    low, rest = s[0], s[1:]
    for first in rest:
        yield (first, low) + tuple(i for i in rest if i != first)


def _ordered_blocks(remaining, r):
    """Ordered lists of r disjoint admissible commutators drawn from ``remaining``."""
    if r == 0:
        yield ()
        return
    from itertools import combinations
    rem = sorted(remaining)
    for size in range(2, len(rem) + 1):
        for subset in combinations(rem, size):
            left = remaining - set(subset)
            for block in _commutator_blocks(subset):
                for tail in _ordered_blocks(left, r - 1):
                    yield (block,) + tail


@lru_cache(maxsize=None)
def enumerate_basis(n: int, m: int) -> Tuple[BasisTerm, ...]:
    """Degree-n multilinear basis terms with at most m - 1 commutators."""
    if n < 1 or m < 2:
        raise ValueError("need n >= 1 and m >= 2")
    full = frozenset(range(1, n + 1))
    out = []
    for r in range(0, min(m - 1, n // 2) + 1):
        for blocks in _ordered_blocks(full, r):
            used = {i for b in blocks for i in b}
            out.append(BasisTerm(tuple(sorted(full - used)), blocks))
    return tuple(sorted(out, key=BasisTerm.sort_key))


@dataclass(frozen=True)
class _System:
    basis: Tuple[BasisTerm, ...]
    keys: tuple          # coordinates forming a nonsingular square subsystem
    inverse: object      # flint.fmpq_mat


_lock = threading.Lock()
_systems: Dict[tuple, _System] = {}


def _system(n, m) -> _System:
    with _lock:
        sysm = _systems.get((n, m))
        if sysm is None:
            sysm = _systems[n, m] = _build_system(n, m)
        return sysm


def _build_system(n, m):
    basis = enumerate_basis(n, m)
    cols = [generic_coordinates(b.poly(), m) for b in basis]
    keys = sorted({k for c in cols for k in c})
    index = {k: r for r, k in enumerate(keys)}
    nb = len(basis)
    # transpose: one row per basis term, one column per coordinate
    t = flint.nmod_mat(nb, len(keys), _PRIME)
    for r, c in enumerate(cols):
        for k, v in c.items():
            t[r, index[k]] = int(v) % _PRIME
    red = t.rref()[0]
    chosen = []
    col = 0
    for r in range(nb):
        while col < len(keys) and red[r, col] == 0:
            col += 1
        if col == len(keys):
            break
        chosen.append(col)
        col += 1
    if len(chosen) != nb:
        raise SolveFailure(f"basis for degree {n}, size {m} is not independent")
    sq = flint.fmpq_mat(nb, nb)
    for c, coords in enumerate(cols):
        for r, kidx in enumerate(chosen):
            v = coords.get(keys[kidx])
            if v:
                sq[r, c] = flint.fmpq(v.numerator, v.denominator)
    return _System(basis, tuple(keys[k] for k in chosen), sq.inv())


@dataclass(frozen=True)
class NormalForm:
    """Coordinates of a polynomial modulo T(UT_size) in the basis above."""

    degree: int
    size: int
    terms: Tuple[Tuple[BasisTerm, Fraction], ...]

    def coefficients(self) -> Dict[BasisTerm, Fraction]:
        return dict(self.terms)

    def is_zero(self):
        return not self.terms

    def reconstruct(self) -> MultilinearPoly:
        acc = MultilinearPoly(self.degree)
        for b, c in self.terms:
            acc = acc + c * b.poly()
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (b, c) in enumerate(self.terms):
            body = str(b) if abs(c) == 1 else f"{fmt_rat(abs(c))}*{b}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def to_json(self):
        return {"degree": self.degree, "size": self.size,
                "terms": [dict(b.to_json(), coeff=fmt_rat(c)) for b, c in self.terms]}


def normal_form(f: MultilinearPoly, m: int = 3, cap: int = NORMAL_FORM_DEGREE_CAP,
                verify: bool = True) -> NormalForm:
    """Rewrite ``f`` modulo T(UT_m) in the commutator-product basis."""
    if f.degree > cap:
        raise DegreeCapExceeded(f"normal forms are limited to degree {cap}")
    sysm = _system(f.degree, m)
    coords = generic_coordinates(f, m)
    vec = flint.fmpq_mat(len(sysm.keys), 1)
    for r, k in enumerate(sysm.keys):
        v = coords.get(k)
        if v:
            vec[r, 0] = flint.fmpq(v.numerator, v.denominator)
    sol = sysm.inverse * vec
    terms = []
    for b, r in zip(sysm.basis, range(len(sysm.basis))):
        q = sol[r, 0]
        if q != 0:
            terms.append((b, Fraction(int(q.p), int(q.q))))
    nf = NormalForm(f.degree, m, tuple(terms))
    if verify and not is_identity(f - nf.reconstruct(), m, cap=max(f.degree, 1)):
        raise SolveFailure(f"normal form of {f} failed verification")
    return nf


def family_support(nf: NormalForm):
    """(one-commutator term present, two-commutator term present)."""
    counts = {b.num_commutators for b, _ in nf.terms}
    return (1 in counts, 2 in counts)
