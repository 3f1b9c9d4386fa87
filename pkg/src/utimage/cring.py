"""Exact scalars and sparse commutative polynomials over the rationals.

Scalars are :class:`fractions.Fraction` (aliased ``Rat``), which already keeps
numerator and denominator in lowest terms with a positive denominator.
:class:`CPoly` is the coefficient domain of generic (symbolic) matrices.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import MissingAssignment

Rat = Fraction

_RAT_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rat(text) -> Fraction:
    """Parse ``"p"``, ``"-p/q"`` (or an int/Fraction) into a Fraction."""
    if isinstance(text, Rational):
        return Fraction(text)
    m = _RAT_RE.match(str(text))
    if not m:
        raise ValueError(f"not a rational number: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def fmt_rat(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _var_key(v):
    # natural sort: "t10" after "t9"
    return tuple(int(p) if p.isdigit() else p for p in re.split(r"(\d+)", str(v)) if p)


def _monomial(pairs):
    """Canonical monomial: tuple of (var, exp) sorted by variable, exp > 0."""
    acc = {}
    for v, e in pairs:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items(), key=lambda ve: _var_key(ve[0])))


class CPoly:
    """Immutable sparse polynomial in commuting variables with Fraction coefficients.

    ``terms`` maps a monomial (a sorted tuple of ``(variable, exponent)``
    pairs, the empty tuple being the constant monomial) to a nonzero
    coefficient. Variables are identified by strings.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                mono = _monomial(mono)
                c = clean.get(mono, 0) + Fraction(c)
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already canonical and zero-free
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "CPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name) -> "CPoly":
        return cls._raw({((str(name), 1),): Fraction(1)})

    @property
    def terms(self):
        return dict(self._terms)

    def variables(self):
        return sorted({v for mono in self._terms for v, _ in mono}, key=_var_key)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=-1)

    def content(self) -> Fraction:
        """Constant term (0 if absent)."""
        return self._terms.get((), Fraction(0))

    @staticmethod
    def _coerce(other):
        if isinstance(other, CPoly):
            return other
        if isinstance(other, Rational):
            return CPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return CPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return CPoly._raw({})
            return CPoly._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _merge(m1, m2)
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return CPoly._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def eval(self, point) -> Fraction:
        """Exact value at ``point`` (mapping variable -> rational)."""
        total = Fraction(0)
        for mono, c in self._terms.items():
            val = c
            for v, e in mono:
                try:
                    x = point[v]
                except KeyError:
                    raise MissingAssignment(f"no value for variable {v!r}") from None
                val *= Fraction(x) ** e
            total += val
        return total

    def rename(self, mapping) -> "CPoly":
        """Apply a variable renaming (unmapped variables are kept)."""
        return CPoly({tuple((mapping.get(v, v), e) for v, e in mono): c
                      for mono, c in self._terms.items()})

    def sorted_terms(self):
        """Terms in graded-lexicographic order, largest first."""
        def key(item):
            mono = item[0]
            deg = sum(e for _, e in mono)
            return (-deg, tuple((_var_key(v), -e) for v, e in mono))
        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            if not factors:
                body = fmt_rat(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = fmt_rat(a) + "*" + "*".join(factors)
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"CPoly({str(self)!r})"


def _merge(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for v, e in m2:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items(), key=lambda ve: _var_key(ve[0])))


def cpoly_add(a: CPoly, b: CPoly) -> CPoly:
    return a + b


def cpoly_mul(a: CPoly, b: CPoly) -> CPoly:
    return a * b


def cpoly_eval(p: CPoly, point) -> Fraction:
    return p.eval(point)
