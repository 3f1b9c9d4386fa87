"""Seeded random multilinear polynomials and the cross-check harness."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import List

from .errors import WitnessSearchExhausted
from .imageclass import (classify, image_label, sample_image, verdict_from_normal_form,
                         witness_for_target)
from .mpoly import MultilinearPoly, poly, to_text
from .pitest import random_matrix
from .utalg import radical_dim

KINDS = ("full", "J", "J2", "zero", "dense", "dense0")
_MIN_COMMUTATORS = {"full": 0, "J": 1, "J2": 2, "zero": 3}


def _coeff(rng):
    num = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
    den = rng.choice([1, 1, 1, 2, 3])
    return f"{num}/{den}" if den > 1 else str(num)


def _commutator_text(rng, names):
    if len(names) >= 3 and rng.random() < 0.25:
        # one product argument, e.g. [x1*x2,x3]
        return f"[{names[0]}*{names[1]}," + ",".join(names[2:]) + "]"
    return "[" + ",".join(names) + "]"


def _structured_term(rng, degree, ncomm):
    """Text of a coefficient times a product with ``ncomm`` commutator blocks."""
    lengths = [2] * ncomm
    spare = degree - 2 * ncomm
    for _ in range(spare):
        if lengths and rng.random() < 0.5:
            lengths[rng.randrange(ncomm)] += 1
    singles = degree - sum(lengths)
    blocks = ["c"] * ncomm + ["v"] * singles
    rng.shuffle(blocks)
    names = [f"x{i}" for i in rng.sample(range(1, degree + 1), degree)]
    out, pos, ci = [], 0, 0
    for b in blocks:
        if b == "v":
            out.append(names[pos])
            pos += 1
        else:
            ln = lengths[ci]
            ci += 1
            out.append(_commutator_text(rng, names[pos:pos + ln]))
            pos += ln
    return f"{_coeff(rng)}*" + "*".join(out)


def random_multilinear(rng: random.Random, degree: int, kind: str = None) -> MultilinearPoly:
    """Random nonzero multilinear polynomial of the given degree.

    Structured kinds combine products of commutators so every image class
    shows up; ``dense`` draws random coefficients on random permutations and
    ``dense0`` additionally forces the coefficient sum to zero.
    """
    kind = kind or rng.choice(KINDS)
    while True:
        if kind in ("dense", "dense0"):
            perms = list(itertools.permutations(range(1, degree + 1)))
            chosen = rng.sample(perms, min(len(perms), rng.randint(1, 12)))
            terms = {p: rng.randint(-5, 5) for p in chosen}
            if kind == "dense0" and len(chosen) > 1:
                terms[chosen[0]] -= sum(terms.values())
            f = MultilinearPoly(degree, terms)
        else:
            cmin = min(_MIN_COMMUTATORS[kind], degree // 2)
            texts = [_structured_term(rng, degree, cmin)]
            for _ in range(rng.randint(0, 2)):
                texts.append(_structured_term(rng, degree, rng.randint(cmin, degree // 2)))
            f = poly(" + ".join(texts))
        if not f.is_zero():
            return f


def corpus(count: int, degrees=(2, 6), seed: int = 42):
    """``count`` polynomials, each generated from its own derived seed."""
    lo, hi = degrees
    out = []
    for i in range(count):
        rng = random.Random(seed * 1_000_003 + i)
        out.append(random_multilinear(rng, rng.randint(lo, hi)))
    return out


def random_target(rng, n, level):
    """Random rational matrix in J^level (possibly zero only by chance)."""
    return random_matrix(rng, n, 10, level)


@dataclass
class Record:
    index: int
    poly: str
    degree: int
    verdict: str
    nf_verdict: str
    min_level: int
    span_rank: int
    expected_dim: int
    level: int
    witnesses: int = 0
    witness_failures: int = 0

    @property
    def agree(self):
        return (self.verdict == self.nf_verdict and self.span_rank == self.expected_dim
                and self.min_level >= self.level
                and self.witness_failures == 0)


@dataclass
class CorpusReport:
    n: int
    seed: int
    records: List[Record] = field(default_factory=list)

    @property
    def disagreements(self):
        return [r for r in self.records if not r.agree]

    def matrix(self):
        labels = [image_label(k, self.n) for k in range(self.n + 1)]
        counts = {(a, b): 0 for a in labels for b in labels}
        for r in self.records:
            counts[r.verdict, r.nf_verdict] += 1
        return labels, counts

    def text(self):
        lines = [f"corpus: {len(self.records)} polynomials on UT{self.n}, seed {self.seed}"]
        labels, counts = self.matrix()
        lines.append("classify \\ normal form: " + " ".join(f"{b:>5}" for b in labels))
        for a in labels:
            lines.append(f"{a:>22}: " + " ".join(f"{counts[a, b]:>5}" for b in labels))
        for r in self.disagreements:
            lines.append(f"DISAGREE #{r.index}: {r.poly} classify={r.verdict} "
                         f"nf={r.nf_verdict} min_level={r.min_level} "
                         f"span={r.span_rank}/{r.expected_dim} "
                         f"witness_failures={r.witness_failures}")
        ok = len(self.records) - len(self.disagreements)
        lines.append(f"{ok}/{len(self.records)} agree")
        return "\n".join(lines)


def run_corpus(count: int, degrees=(2, 6), seed: int = 42, n: int = 3,
               samples: int = 50, targets: int = 0, budget: int = 64) -> CorpusReport:
    """Classify each polynomial and confirm it by normal form, sampling and witnesses."""
    report = CorpusReport(n, seed)
    for i, f in enumerate(corpus(count, degrees, seed)):
        pseed = seed * 1_000_003 + i
        cls = classify(f, n)
        nf_level = verdict_from_normal_form(f, n)
        rep = sample_image(f, n, samples, pseed)
        rec = Record(i, to_text(f), f.degree, cls.label, image_label(nf_level, n),
                     rep.min_level, rep.span_rank, radical_dim(n, cls.level), cls.level)
        rng = random.Random(pseed)
        for _ in range(targets if cls.level < n else 0):
            target = random_target(rng, n, cls.level)
            try:
                w = witness_for_target(f, n, target, seed=pseed, budget=budget, cls=cls)
                ok = w.achieved == target
            except WitnessSearchExhausted:
                ok = False
            rec.witnesses += ok
            rec.witness_failures += not ok
        report.records.append(rec)
    return report
