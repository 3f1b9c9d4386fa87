"""Multilinear noncommutative polynomials: parsing, expansion, evaluation.

Grammar of the surface syntax::

    expr       := term (('+'|'-') term)*
    term       := (rational '*'?)? factor ('*'? factor)*
    factor     := variable | commutator | '(' expr ')'
    commutator := '[' expr (',' expr)+ ']'      # [a,b,c] = [[a,b],c]
    variable   := 'x' digit+
    rational   := '-'? digit+ ('/' digit+)?

A leading ``-`` is also accepted in front of any term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from .cring import fmt_rat, parse_rat
from .errors import MissingAssignment, NotMultilinear, PolySyntaxError, SizeMismatch

# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Variable:
    index: int


@dataclass(frozen=True)
class Scalar:
    value: Fraction


@dataclass(frozen=True)
class Sum:
    items: tuple


@dataclass(frozen=True)
class Product:
    items: tuple


@dataclass(frozen=True)
class Commutator:
    """Commutator node; ``items`` has at least two children.

    The parser always produces binary nodes, nesting to the left.
    """
    items: tuple

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("commutator needs at least two arguments")


Expr = Union[Variable, Scalar, Sum, Product, Commutator]

# --------------------------------------------------------------------------
# parser


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/,()[]":
            toks.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolySyntaxError("expected digits after 'x'", i, text)
            toks.append(("var", text[i + 1:j], i))
            i = j
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", i, text)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def error(self, msg):
        raise PolySyntaxError(msg, self.peek()[2], self.text)

    def expr(self):
        items = []
        if self.peek()[0] == "-":
            self.take()
            items.append(_negate(self.term()))
        else:
            items.append(self.term())
        while self.peek()[0] in "+-":
            op = self.take()[0]
            t = self.term()
            items.append(_negate(t) if op == "-" else t)
        return items[0] if len(items) == 1 else Sum(tuple(items))

    def rational(self):
        num = int(self.take("int")[1])
        if self.peek()[0] == "/":
            self.take()
            tok = self.take("int")
            if int(tok[1]) == 0:
                raise PolySyntaxError("zero denominator", tok[2], self.text)
            return Fraction(num, int(tok[1]))
        return Fraction(num)

    def term(self):
        factors = []
        if self.peek()[0] == "-":
            # signed rational, or unary minus in front of a term
            self.take()
            return _negate(self.term())
        if self.peek()[0] == "int":
            factors.append(Scalar(self.rational()))
            if self.peek()[0] == "*":
                self.take()
            if self.peek()[0] not in ("var", "[", "("):
                return factors[0]
        factors.append(self.factor())
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                factors.append(self.factor())
            elif kind in ("var", "[", "("):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "var":
            self.take()
            idx = int(val)
            if idx < 1:
                raise PolySyntaxError("variable indices start at 1", pos, self.text)
            return Variable(idx)
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "[":
            self.take()
            args = [self.expr()]
            while self.peek()[0] == ",":
                self.take()
                args.append(self.expr())
            if len(args) < 2:
                self.error("commutator needs at least two arguments")
            self.take("]")
            node = Commutator((args[0], args[1]))
            for a in args[2:]:
                node = Commutator((node, a))
            return node
        if kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected token {val!r}")


def _negate(e):
    if isinstance(e, Scalar):
        return Scalar(-e.value)
    if isinstance(e, Product) and isinstance(e.items[0], Scalar):
        return Product((Scalar(-e.items[0].value),) + e.items[1:])
    if isinstance(e, Product):
        return Product((Scalar(Fraction(-1)),) + e.items)
    return Product((Scalar(Fraction(-1)), e))


def parse(text: str) -> Expr:
    """Parse an expression string into an :data:`Expr` tree."""
    p = _Parser(text)
    if p.peek()[0] == "end":
        p.error("empty expression")
    e = p.expr()
    if p.peek()[0] != "end":
        p.error(f"unexpected token {p.peek()[1]!r}")
    return e

# --------------------------------------------------------------------------
# multilinear polynomials


def _is_perm(p, n):
    return len(p) == n and sorted(p) == list(range(1, n + 1))


class MultilinearPoly:
    """``sum(alpha[s] * x_{s(1)} ... x_{s(n)})`` over permutations ``s`` of 1..n.

    ``terms`` maps permutation tuples (1-based) to nonzero Fractions. Instances
    are immutable and hashable.
    """

    __slots__ = ("degree", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping[Tuple[int, ...], object] = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        clean = {}
        for perm, c in (terms or {}).items():
            perm = tuple(int(i) for i in perm)
            if not _is_perm(perm, degree):
                raise NotMultilinear(f"{perm} is not a permutation of 1..{degree}")
            c = clean.get(perm, 0) + Fraction(c)
            if c:
                clean[perm] = c
            else:
                clean.pop(perm, None)
        self.degree = degree
        self._terms = clean
        self._hash = None

    @property
    def terms(self) -> Dict[Tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other):
        if self.degree != other.degree:
            raise SizeMismatch(f"degrees differ: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, 0) + c
        return MultilinearPoly(self.degree, out)

    def __neg__(self):
        return MultilinearPoly(self.degree, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        return MultilinearPoly(self.degree, {p: c * v for p, v in self._terms.items()})

    __rmul__ = __mul__

    def relabel(self, mapping) -> "MultilinearPoly":
        """Rename variables by ``i -> mapping[i]`` (a permutation of 1..n)."""
        return MultilinearPoly(self.degree, {tuple(mapping[i] for i in p): c
                                             for p, c in self._terms.items()})

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"MultilinearPoly({self.degree}, {to_text(self)!r})"

    def to_json(self):
        return {"degree": self.degree,
                "terms": [{"perm": list(p), "coeff": fmt_rat(c)} for p, c in self.items()]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["degree"]),
                   {tuple(t["perm"]): parse_rat(t["coeff"]) for t in obj["terms"]})


def to_text(f: MultilinearPoly) -> str:
    """Canonical printing: permutations in lexicographic order."""
    if f.is_zero():
        return "0"
    out = []
    for i, (perm, c) in enumerate(f.items()):
        word = "*".join(f"x{j}" for j in perm)
        a = abs(c)
        body = word if a == 1 else f"{fmt_rat(a)}*{word}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _expand_words(e):
    """Expand to ``{word: coeff}`` in the free algebra (words are index tuples)."""
    if isinstance(e, Variable):
        return {(e.index,): Fraction(1)}
    if isinstance(e, Scalar):
        return {(): e.value} if e.value else {}
    if isinstance(e, Sum):
        out = {}
        for item in e.items:
            for w, c in _expand_words(item).items():
                out[w] = out.get(w, 0) + c
        return out
    if isinstance(e, Product):
        acc = {(): Fraction(1)}
        for item in e.items:
            acc = _word_mul(acc, _expand_words(item))
        return acc
    if isinstance(e, Commutator):
        acc = _expand_words(e.items[0])
        for item in e.items[1:]:
            b = _expand_words(item)
            ab = _word_mul(acc, b)
            for w, c in _word_mul(b, acc).items():
                ab[w] = ab.get(w, 0) - c
            acc = ab
        return acc
    raise TypeError(f"not an expression node: {e!r}")


def _word_mul(a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return out


def expand(e) -> MultilinearPoly:
    """Expand an expression (or expression string) into a MultilinearPoly.

    Raises NotMultilinear when any generated monomial (before cancellation)
    fails to use each of x1..xn exactly once.
    """
    if isinstance(e, str):
        e = parse(e)
    words = _expand_words(e)
    if not words:
        raise NotMultilinear("expression expands to a constant")
    n = max((max(w) for w in words if w), default=0)
    if n == 0:
        raise NotMultilinear("expression has no variables")
    for w in words:
        if not _is_perm(w, n):
            if len(set(w)) < len(w):
                raise NotMultilinear(f"monomial {_word_text(w)} repeats a variable")
            raise NotMultilinear(f"monomial {_word_text(w)} does not use each of x1..x{n} once")
    return MultilinearPoly(n, words)


def _word_text(w):
    return "*".join(f"x{i}" for i in w) if w else "1"


def poly(text: str) -> MultilinearPoly:
    """Shorthand for ``expand(parse(text))``."""
    return expand(parse(text))


def sum_of_coefficients(f: MultilinearPoly) -> Fraction:
    return sum(f.terms.values(), Fraction(0))

# --------------------------------------------------------------------------
# evaluation


def substitute(f: MultilinearPoly, assignment):
    """Evaluate ``f`` at matrices: ``assignment`` maps index (1..n) to UTMatrix.

    Rational matrices are cleared of denominators and multiplied with Python
    ints; this is exact because every variable occurs exactly once per
    monomial.
    """
    from .utalg import UTMatrix, _flat_mul, _is_rational

    mats = []
    for i in range(1, f.degree + 1):
        try:
            mats.append(assignment[i])
        except KeyError:
            raise MissingAssignment(f"no matrix assigned to x{i}") from None
    n = mats[0].n
    for m in mats:
        if not isinstance(m, UTMatrix) or m.n != n:
            raise SizeMismatch("all assigned matrices must be UTMatrix of the same size")
    if f.is_zero():
        return UTMatrix.zeros(n)

    rational = all(_is_rational(m) for m in mats)
    if rational:
        scale = Fraction(1)
        flats = []
        for m in mats:
            d = 1
            for v in m.flat:
                d = d * v.denominator // _gcd(d, v.denominator)
            scale /= d
            flats.append(tuple(int(v * d) for v in m.flat))
        coeffs = f.terms
        den = 1
        for c in coeffs.values():
            den = den * c.denominator // _gcd(den, c.denominator)
        scale /= den
        coeffs = {p: int(c * den) for p, c in coeffs.items()}
        zero = 0
    else:
        flats = [m.flat for m in mats]
        coeffs = f.terms
        zero = 0
        scale = None

    total = [zero] * (n * n)
    # share partial products along common prefixes
    memo = {}
    for perm in sorted(coeffs):
        c = coeffs[perm]
        prod = None
        for k in range(len(perm), 0, -1):
            hit = memo.get(perm[:k])
            if hit is not None:
                prod = hit
                start = k
                break
        if prod is None:
            prod = flats[perm[0] - 1]
            start = 1
        for k in range(start, len(perm)):
            prod = _flat_mul(prod, flats[perm[k] - 1], n)
            memo[perm[:k + 1]] = prod
        for idx, v in enumerate(prod):
            if v:
                total[idx] = total[idx] + c * v
    if rational:
        total = [Fraction(v) * scale for v in total]
    return UTMatrix._from_flat(n, tuple(total))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
