"""Upper triangular matrices over Q or over CPoly, and the radical filtration.

Indices are 1-based throughout, matching the usual ``E_ij`` notation.
``J^k`` is the set of matrices whose entries ``(i, j)`` vanish whenever
``j - i < k``; ``J^0`` is the whole algebra and ``J^n = {0}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, Tuple

from .cring import CPoly, fmt_rat, parse_rat
from .errors import SizeMismatch
from . import linalg


def _flat_mul(a, b, n):
    out = [0] * (n * n)
    for i in range(n):
        row = i * n
        for k in range(i, n):
            x = a[row + k]
            if not x:
                continue
            kr = k * n
            for j in range(k, n):
                y = b[kr + j]
                if y:
                    out[row + j] = out[row + j] + x * y
    return tuple(out)


def _is_rational(m):
    return all(isinstance(v, Rational) for v in m.flat)


def upper_positions(n, k=0):
    """Positions ``(i, j)`` with ``j - i >= k``, ordered by row then column."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1) if j - i >= k]


def radical_dim(n, k):
    """Dimension of J^k inside UT_n."""
    return sum(n - d for d in range(max(k, 0), n))


class UTMatrix:
    """Immutable n x n upper triangular matrix.

    Entries may be ints, Fractions or :class:`CPoly`. Positions below the
    diagonal are zero by construction.
    """

    __slots__ = ("n", "flat")

    def __init__(self, n: int, entries=None):
        if n < 1:
            raise ValueError("size must be positive")
        flat = [0] * (n * n)
        for (i, j), v in (entries or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexError(f"position ({i},{j}) outside a {n}x{n} matrix")
            if i > j:
                if v:
                    raise ValueError(f"nonzero entry below the diagonal at ({i},{j})")
                continue
            flat[(i - 1) * n + (j - 1)] = _norm(v)
        self.n = n
        self.flat = tuple(flat)

    @classmethod
    def _from_flat(cls, n, flat):
        obj = cls.__new__(cls)
        obj.n = n
        obj.flat = tuple(flat)
        return obj

    @classmethod
    def zeros(cls, n):
        return cls._from_flat(n, (Fraction(0),) * (n * n))

    @classmethod
    def identity(cls, n):
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, d):
        return cls(len(d), {(i, i): v for i, v in enumerate(d, 1)})

    @classmethod
    def unit(cls, n, i, j):
        return cls(n, {(i, j): 1})

    @classmethod
    def generic(cls, n, slot, prefix="t"):
        """Matrix with independent indeterminates ``{prefix}{slot}_{i}_{j}``."""
        return cls(n, {(i, j): CPoly.var(f"{prefix}{slot}_{i}_{j}")
                       for i, j in upper_positions(n)})

    @classmethod
    def from_vector(cls, n, vec, k=0):
        return cls(n, dict(zip(upper_positions(n, k), vec)))

    def __getitem__(self, ij):
        i, j = ij
        return self.flat[(i - 1) * self.n + (j - 1)]

    def entries(self):
        return {(i, j): self[i, j] for i, j in upper_positions(self.n)}

    def vector(self, k=0):
        """Coordinates on the standard basis of J^k."""
        return [self[i, j] for i, j in upper_positions(self.n, k)]

    def is_zero(self):
        return not any(self.flat)

    def _check(self, other):
        if not isinstance(other, UTMatrix) or other.n != self.n:
            raise SizeMismatch("matrices must have the same size")

    def __add__(self, other):
        self._check(other)
        return UTMatrix._from_flat(self.n, [a + b for a, b in zip(self.flat, other.flat)])

    def __sub__(self, other):
        self._check(other)
        return UTMatrix._from_flat(self.n, [a - b for a, b in zip(self.flat, other.flat)])

    def __neg__(self):
        return UTMatrix._from_flat(self.n, [-a for a in self.flat])

    def __mul__(self, other):
        if isinstance(other, UTMatrix):
            return mat_mul(self, other)
        return UTMatrix._from_flat(self.n, [a * other for a in self.flat])

    def __rmul__(self, c):
        return UTMatrix._from_flat(self.n, [c * a for a in self.flat])

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, UTMatrix):
            return NotImplemented
        return self.n == other.n and all(a == b for a, b in zip(self.flat, other.flat))

    def __hash__(self):
        return hash((self.n, self.flat))

    def map(self, fn):
        return UTMatrix._from_flat(self.n, [fn(v) if v else v for v in self.flat])

    def to_json(self, sparse=False):
        ents = {f"{i},{j}": _fmt(self[i, j]) for i, j in upper_positions(self.n)
                if not (sparse and not self[i, j])}
        return {"n": self.n, "entries": ents}

    @classmethod
    def from_json(cls, obj, n=None):
        """Accept ``{"n":..,"entries":{..}}`` or a bare sparse ``{"i,j": "p/q"}`` map."""
        if "entries" in obj:
            n = int(obj.get("n", n)) if obj.get("n", n) is not None else None
            obj = obj["entries"]
        ents = {}
        for key, val in obj.items():
            i, j = (int(s) for s in key.split(","))
            ents[i, j] = parse_rat(val)
        if n is None:
            n = max((max(ij) for ij in ents), default=1)
        return cls(n, ents)

    def __repr__(self):
        rows = []
        for i in range(1, self.n + 1):
            rows.append("[" + ", ".join(_fmt(self[i, j]) if j >= i else "0"
                                        for j in range(1, self.n + 1)) + "]")
        return "UTMatrix(" + ", ".join(rows) + ")"


def _norm(v):
    if isinstance(v, CPoly):
        return v
    return Fraction(v)


def _fmt(v):
    if isinstance(v, CPoly):
        return str(v)
    return fmt_rat(v)


def mat_mul(a: UTMatrix, b: UTMatrix) -> UTMatrix:
    a._check(b)
    return UTMatrix._from_flat(a.n, _flat_mul(a.flat, b.flat, a.n))


def commutator(a: UTMatrix, b: UTMatrix) -> UTMatrix:
    """``[a, b] = ab - ba``."""
    return mat_mul(a, b) - mat_mul(b, a)


def radical_level(m: UTMatrix) -> int:
    """Largest k with m in J^k (n for the zero matrix)."""
    n = m.n
    for d in range(n):
        if any(m[i, i + d] for i in range(1, n - d + 1)):
            return d
    return n


@dataclass(frozen=True)
class AdjointMap:
    """Matrix of ``X -> [X, D]`` on J^k in the basis ``E_ij`` (j - i >= k)."""

    basis: Tuple[Tuple[int, int], ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    image_basis: Tuple[Tuple[int, int], ...]

    def rank(self):
        return linalg.rank([list(r) for r in self.matrix])

    def eigenvalues(self):
        return [self.matrix[r][r] for r in range(len(self.basis))]

    def is_invertible(self):
        return self.rank() == len(self.basis)


def ad_D(d, k: int) -> AdjointMap:
    """Matrix of ``X -> [X, D]`` restricted to J^k, with ``D = diag(d)``.

    Columns are images of the basis vectors ``E_ij``; rows are coordinates
    on the same basis (the image of J^k lies in J^k, and in J when k = 0).
    """
    n = len(d)
    if k < 0:
        raise ValueError("k must be nonnegative")
    D = UTMatrix.diag(d)
    basis = upper_positions(n, k)
    cols = [commutator(UTMatrix.unit(n, i, j), D).vector(k) for i, j in basis]
    rows = tuple(tuple(cols[c][r] for c in range(len(basis))) for r in range(len(basis)))
    return AdjointMap(tuple(basis), rows, tuple(upper_positions(n, max(k, 1))))


def span_rank(mats: List[UTMatrix]) -> int:
    """Dimension of the Q-span of rational matrices, viewed as vectors."""
    return linalg.rank(m.vector() for m in mats)
