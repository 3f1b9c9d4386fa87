"""Images of multilinear polynomials on UT_2 and UT_3.

The verdict comes from the identity-level chain: a nonzero coefficient sum
gives the whole algebra, otherwise the image is ``J^k`` where ``k`` is the
largest size with ``f`` an identity of ``UT_k`` (``{0}`` once ``k = n``).
Normal forms and random sampling are independent cross-checks, and
:func:`witness_for_target` constructs exact preimages.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from . import linalg
from .cring import fmt_rat
from .errors import TargetOutsideImage, WitnessSearchExhausted
from .mpoly import MultilinearPoly, substitute, sum_of_coefficients
from .pitest import is_identity, max_identity_level, random_matrix
from .relfree import NORMAL_FORM_DEGREE_CAP, normal_form
from .utalg import UTMatrix, radical_dim, radical_level, span_rank, upper_positions

DEFAULT_SAMPLES = 50
DEFAULT_BUDGET = 64


def image_label(level, n):
    if level <= 0:
        return f"UT{n}"
    if level >= n:
        return "0"
    return "J" if level == 1 else f"J^{level}"


@dataclass(frozen=True)
class ImageClass:
    """Verdict for Im(f) on UT_n, encoded by ``level``: the image is J^level.

    ``level == 0`` is the full algebra and ``level == n`` is ``{0}``.
    """

    n: int
    level: int
    identity_level: int
    sum_of_coefficients: Fraction
    conjectural: bool = False
    criterion: str = ""
    evidence: Dict = field(default_factory=dict, compare=False)

    @property
    def verdict(self):
        if self.level == 0:
            return "Full"
        if self.level >= self.n:
            return "Zero"
        return f"RadicalPower({self.level})"

    @property
    def label(self):
        return image_label(self.level, self.n)

    @property
    def dimension(self):
        return radical_dim(self.n, self.level)

    def to_json(self):
        return {"algebra": f"UT{self.n}", "verdict": self.label,
                "identity_level": self.identity_level,
                "sum_of_coefficients": fmt_rat(self.sum_of_coefficients),
                "conjectural": self.conjectural, "criterion": self.criterion,
                "evidence": dict(self.evidence)}


def _from_level(f, n, kstar, conjectural=False):
    s = sum_of_coefficients(f)
    level = min(kstar, n)
    if s != 0:
        crit = "sum of coefficients is nonzero"
    elif level >= n:
        crit = f"identity of UT{n}"
    else:
        crit = f"identity of UT{kstar} but not of UT{kstar + 1}"
    return ImageClass(n, level, kstar, s, conjectural, crit)


def classify(f: MultilinearPoly, n: int) -> ImageClass:
    """Exact image of ``f`` on UT_n for n in {2, 3}."""
    if n not in (2, 3):
        raise ValueError("classify supports n = 2 and n = 3; use conjecture_predict for n >= 4")
    if n == 2:
        # UT_2 needs only the coefficient sum and one identity test
        if sum_of_coefficients(f) != 0:
            kstar = 0
        else:
            kstar = 2 if is_identity(f, 2) else 1
        return _from_level(f, 2, kstar)
    return _from_level(f, n, max_identity_level(f, n))


@dataclass(frozen=True)
class SampleReport:
    samples: Tuple[UTMatrix, ...]
    min_level: int
    span_rank: int
    seed: int

    def contained_in(self, level):
        return self.min_level >= level

    def to_json(self, include_samples=False):
        out = {"count": len(self.samples), "seed": self.seed,
               "min_radical_level": self.min_level, "span_rank": self.span_rank}
        if include_samples:
            out["samples"] = [m.to_json(sparse=True)["entries"] for m in self.samples]
        return out


def sample_image(f: MultilinearPoly, n: int, count: int = DEFAULT_SAMPLES, seed: int = 0,
                 bound: int = 10) -> SampleReport:
    """Evaluate ``f`` at ``count`` random integer tuples from UT_n."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        point = {s: random_matrix(rng, n, bound) for s in range(1, f.degree + 1)}
        out.append(substitute(f, point))
    return SampleReport(tuple(out), min(radical_level(m) for m in out), span_rank(out), seed)


def sampling_evidence(f, n, level, count=DEFAULT_SAMPLES, seed=0):
    rep = sample_image(f, n, count, seed)
    ev = rep.to_json()
    ev["contained"] = rep.contained_in(level)
    ev["expected_dim"] = radical_dim(n, level)
    ev["spans"] = rep.span_rank == radical_dim(n, level)
    return ev


def conjecture_predict(f: MultilinearPoly, n: int, count: int = DEFAULT_SAMPLES,
                       seed: int = 0) -> ImageClass:
    """Predicted image on UT_n (n >= 4) with sampling evidence attached.

    Only the full-algebra and zero verdicts are proven; every J^k verdict is
    marked conjectural.
    """
    if n < 4:
        raise ValueError("conjecture_predict is for n >= 4")
    cls = _from_level(f, n, max_identity_level(f, n))
    conj = 0 < cls.level < n
    ev = sampling_evidence(f, n, cls.level, count, seed)
    return ImageClass(n, cls.level, cls.identity_level, cls.sum_of_coefficients,
                      conj, cls.criterion, ev)


def verdict_from_normal_form(f: MultilinearPoly, n: int = 3) -> int:
    """Image level recomputed from the normal-form support.

    The fewest commutators among terms with nonzero coefficient is the level;
    an empty normal form means ``f`` is an identity of UT_n.
    """
    nf = normal_form(f, n)
    if nf.is_zero():
        return n
    return min(b.num_commutators for b, _ in nf.terms)

# --------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class WitnessBundle:
    target: UTMatrix
    assignment: Dict[int, UTMatrix]
    achieved: UTMatrix
    rung: int = 0
    attempts: int = 0

    def to_json(self):
        return {"target": self.target.to_json(sparse=True),
                "assignment": {f"x{i}": m.to_json(sparse=True)
                               for i, m in sorted(self.assignment.items())},
                "achieved": self.achieved.to_json(sparse=True),
                "rung": self.rung, "attempts": self.attempts}


@lru_cache(maxsize=512)
def _linear_map(f, free, fixed):
    """Columns: f evaluated with ``x_free = E_ab`` (J-basis order), others fixed."""
    n = fixed[0][1].n if fixed else None
    assignment = dict(fixed)
    cols = []
    for a, b in upper_positions(n):
        assignment[free] = UTMatrix.unit(n, a, b)
        cols.append(substitute(f, assignment).vector())
    return tuple(cols)


def _try(f, n, free, fixed, target):
    fixed_t = tuple(sorted(fixed.items()))
    if not fixed_t:
        # degree 1: f = c * x1
        cols = tuple(substitute(f, {free: UTMatrix.unit(n, a, b)}).vector()
                     for a, b in upper_positions(n))
    else:
        cols = _linear_map(f, free, fixed_t)
    m = len(cols)
    rows = [[cols[c][r] for c in range(m)] for r in range(m)]
    x = linalg.solve(rows, target.vector(), m)
    if x is None:
        return None
    assignment = dict(fixed)
    assignment[free] = UTMatrix.from_vector(n, x)
    achieved = substitute(f, assignment)
    if achieved != target:
        return None
    return assignment, achieved


def _diag(n, shift=0, step=1):
    return UTMatrix.diag([shift + step * i for i in range(n)])


def _shift(n):
    return UTMatrix(n, {(i, i + 1): 1 for i in range(1, n)})


def _proof_pattern(f, n, level):
    """Assignments following the classification argument.

    Prefix variables go to I and commutator variables to a distinct-entry
    diagonal D, except that the smallest index of the first commutator is
    left free and the leading variables of later commutators go to D + N,
    N the shift matrix.
    """
    ident, D = UTMatrix.identity(n), _diag(n)
    if level == 0:
        yield 1, {i: ident for i in range(2, f.degree + 1)}
        return
    if f.degree > NORMAL_FORM_DEGREE_CAP:
        return
    nf = normal_form(f, n)
    lead = D + _shift(n)
    cands = [b for b, _ in nf.terms if b.num_commutators == level]
    cands.sort(key=lambda b: (sum(len(c) for c in b.commutators), b.sort_key()))
    for b in cands:
        fixed = {i: ident for i in b.prefix}
        for r, comm in enumerate(b.commutators):
            for i in comm:
                fixed[i] = D
            if r:
                fixed[comm[0]] = lead
        free = b.commutators[0][1]
        del fixed[free]
        yield free, fixed


def witness_for_target(f: MultilinearPoly, n: int, target: UTMatrix, seed: int = 0,
                       budget: int = DEFAULT_BUDGET, cls: Optional[ImageClass] = None
                       ) -> WitnessBundle:
    """Find an exact rational assignment with ``f(assignment) == target``.

    Three rungs, each at most ``budget`` attempts: the proof pattern, then a
    seeded search over which variable is free and over a few diagonal and
    shifted-diagonal choices for the others, then random small integer
    matrices. Each attempt fixes all variables but one and solves the
    resulting linear system exactly.
    """
    if target.n != n:
        raise ValueError(f"target must be {n}x{n}")
    cls = cls or classify(f, n)
    if radical_level(target) < cls.level:
        raise TargetOutsideImage(f"target is not in the image {cls.label}")
    deg = f.degree
    if target.is_zero():
        zero = UTMatrix.zeros(n)
        assignment = {i: zero for i in range(1, deg + 1)}
        return WitnessBundle(target, assignment, substitute(f, assignment), 0, 0)

    attempts = 0

    def rung1():
        yield from _proof_pattern(f, n, cls.level)

    def rung2():
        rng = random.Random(seed)
        choices = [UTMatrix.identity(n), _diag(n), _diag(n, 1, 2), _diag(n, 0, 3),
                   _diag(n) + _shift(n), _diag(n, 1, 2) + _shift(n)]
        for a in range(budget):
            free = a % deg + 1
            yield free, {i: rng.choice(choices) for i in range(1, deg + 1) if i != free}

    def rung3():
        rng = random.Random(seed + 1)
        for a in range(budget):
            free = a % deg + 1
            yield free, {i: random_matrix(rng, n, 3) for i in range(1, deg + 1) if i != free}

    for rung, gen in enumerate((rung1, rung2, rung3), 1):
        for count, (free, fixed) in enumerate(gen()):
            if count >= budget:
                break
            attempts += 1
            hit = _try(f, n, free, fixed, target)
            if hit is not None:
                return WitnessBundle(target, hit[0], hit[1], rung, attempts)
    ev = sampling_evidence(f, n, cls.level, seed=seed)
    raise WitnessSearchExhausted(f"no witness after {attempts} attempts", attempts, ev)
