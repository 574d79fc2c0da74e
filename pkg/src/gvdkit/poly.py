"""Polynomials over the rationals in a named, ordered set of variables.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients.  Only lexicographic monomial orders are provided; an order is a
priority permutation of the ring's variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")
MAX_EXPONENT = (1 << 15) - 1


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    """Syntax error in polynomial or ring text; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class UnknownVariableError(PolynomialError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown variable {name!r}")


@dataclass(frozen=True)
class Ring:
    """``QQ[x_1, ..., x_n]``; declaration order is the default lex priority."""

    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        seen = set()
        for v in self.variables:
            if not IDENT.match(v):
                raise PolynomialError(f"invalid variable name {v!r}")
            if v in seen:
                raise PolynomialError(f"duplicate variable {v!r}")
            seen.add(v)

    @classmethod
    def parse(cls, text: str) -> Ring:
        return cls(parse_variable_list(text))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def var(self, name: str) -> Polynomial:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.variables]

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exponents: Iterable[int], coefficient=1) -> Polynomial:
        e = tuple(exponents)
        if len(e) != self.nvars:
            raise PolynomialError("exponent vector has wrong length")
        c = Fraction(coefficient)
        return Polynomial(self, {e: c} if c else {})

    def parse_poly(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)

    def drop(self, name: str) -> Ring:
        i = self.index(name)
        return Ring(self.variables[:i] + self.variables[i + 1:])

    def fresh_name(self, base: str = "t") -> str:
        name, k = base, 0
        while name in self.variables:
            k += 1
            name = f"{base}_{k}"
        return name

    def __str__(self):
        return "QQ[" + ",".join(self.variables) + "]"


@dataclass(frozen=True)
class MonomialOrder:
    """Lex order comparing exponents in the variable priority ``permutation``."""

    permutation: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "permutation", tuple(self.permutation))
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise PolynomialError("monomial order must be a permutation of the variables")

    @classmethod
    def lex(cls, ring: Ring, priority: Iterable[str] = ()) -> MonomialOrder:
        """Lex with the named variables first (in that order), then the rest in declaration order."""
        first = [ring.index(v) for v in priority]
        if len(set(first)) != len(first):
            raise PolynomialError("repeated variable in order")
        rest = [i for i in range(ring.nvars) if i not in first]
        return cls(tuple(first + rest))

    @classmethod
    def default(cls, ring: Ring) -> MonomialOrder:
        return cls(tuple(range(ring.nvars)))

    def key(self, exponents: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(exponents[i] for i in self.permutation)

    def names(self, ring: Ring) -> list[str]:
        return [ring.variables[i] for i in self.permutation]


def parse_variable_list(text: str) -> tuple[str, ...]:
    """Parse ``"a..f"``, ``"x,y,z"`` or ``"e1..e4, t"`` into variable names."""
    out: list[str] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ".." in chunk:
            lo, hi = (s.strip() for s in chunk.split("..", 1))
            out.extend(_expand_range(lo, hi, text))
        else:
            if not IDENT.match(chunk):
                raise ParseError(f"invalid variable name {chunk!r}", text, text.find(chunk))
            out.append(chunk)
    if len(set(out)) != len(out):
        raise ParseError("duplicate variable in ring", text)
    return tuple(out)


def _expand_range(lo: str, hi: str, text: str) -> list[str]:
    if len(lo) == 1 and len(hi) == 1 and lo.isalpha() and hi.isalpha():
        if ord(hi) < ord(lo):
            raise ParseError(f"empty range {lo}..{hi}", text)
        return [chr(c) for c in range(ord(lo), ord(hi) + 1)]
    m1 = re.fullmatch(r"([a-zA-Z][a-zA-Z_]*?)(\d+)", lo)
    m2 = re.fullmatch(r"([a-zA-Z][a-zA-Z_]*?)(\d+)", hi)
    if m1 and m2 and m1.group(1) == m2.group(1):
        a, b = int(m1.group(2)), int(m2.group(2))
        if b < a:
            raise ParseError(f"empty range {lo}..{hi}", text)
        return [f"{m1.group(1)}{k}" for k in range(a, b + 1)]
    raise ParseError(f"cannot expand range {lo}..{hi}", text)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_key")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], Fraction]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}
        self._key = None

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def key(self) -> tuple:
        """Hashable canonical form (ring-independent of declaration position)."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items(), reverse=True))
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.key()))

    def support(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return {self.ring.variables[i] for i in used}

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Fraction, tuple[int, ...]]]:
        order = order or MonomialOrder.default(self.ring)
        return [(self.terms[e], e) for e in sorted(self.terms, key=order.key, reverse=True)]

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise PolynomialError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exponents(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise PolynomialError("division only by nonzero constants")
            other = next(iter(other.terms.values()))
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("exponent must be a nonnegative integer")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exponents: tuple[int, ...], coefficient=1) -> Polynomial:
        c = Fraction(coefficient)
        return Polynomial(self.ring, {_add_exponents(e, exponents): c * v for e, v in self.terms.items()})

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self.terms:
            return self
        lc, _ = leading_term(self, order or MonomialOrder.default(self.ring))
        return self.scale(1 / lc)

    def primitive(self) -> Polynomial:
        """Integer coefficients with gcd 1 and positive leading coefficient (default lex)."""
        if not self.terms:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        lead = max(ints)
        if ints[lead] < 0:
            g = -g
        return Polynomial(self.ring, {e: Fraction(v // g) for e, v in ints.items()})

    def substitute_ring(self, ring: Ring) -> Polynomial:
        """Re-express in another ring containing every variable of the support."""
        names = self.ring.variables
        idx = []
        for i, n in enumerate(names):
            idx.append(ring.variables.index(n) if n in ring.variables else None)
        out = {}
        for e, c in self.terms.items():
            new = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    j = idx[i]
                    if j is None:
                        raise PolynomialError(f"variable {names[i]!r} not in target ring")
                    new[j] = k
            out[tuple(new)] = c
        return Polynomial(ring, out)

    def evaluate(self, values: Mapping[str, Polynomial]) -> Polynomial:
        """Substitute polynomials (possibly from another ring) for variables."""
        target = next(iter(values.values())).ring if values else self.ring
        result = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * (values[self.ring.variables[i]] ** k)
            result = result + term
        return result

    # -- display -------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _add_exponents(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    e = tuple(x + y for x, y in zip(a, b))
    if max(e, default=0) > MAX_EXPONENT:
        raise OverflowError("exponent exceeds supported bound")
    return e


def format_monomial(ring: Ring, e: tuple[int, ...]) -> str:
    parts = []
    for name, k in zip(ring.variables, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    if not f.terms:
        return "0"
    out = []
    for c, e in f.sorted_terms(order):
        mono = format_monomial(f.ring, e)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def leading_term(f: Polynomial, order: MonomialOrder | None = None) -> tuple[Fraction, tuple[int, ...]]:
    if not f.terms:
        raise PolynomialError("zero polynomial has no leading term")
    order = order or MonomialOrder.default(f.ring)
    e = max(f.terms, key=order.key)
    return f.terms[e], e


def initial_y_form(f: Polynomial, y: str) -> Polynomial:
    """Terms of ``f`` of maximal degree in ``y``."""
    i = f.ring.index(y)
    if not f.terms:
        return f
    d = max(e[i] for e in f.terms)
    return Polynomial(f.ring, {e: c for e, c in f.terms.items() if e[i] == d})


def y_split(f: Polynomial, y: str) -> tuple[Polynomial, int]:
    """Return ``(q, d)`` with ``in_y(f) = q * y^d`` and ``q`` free of ``y``."""
    i = f.ring.index(y)
    if not f.terms:
        raise PolynomialError("zero polynomial has no initial y-form")
    d = max(e[i] for e in f.terms)
    q = {e[:i] + (0,) + e[i + 1:]: c for e, c in f.terms.items() if e[i] == d}
    return Polynomial(f.ring, q), d


def contract_to_subring(f: Polynomial, dropped: str, ring: Ring | None = None) -> Polynomial:
    """Rewrite ``f`` (which must not involve ``dropped``) in the ring without it."""
    i = f.ring.index(dropped)
    if any(e[i] for e in f.terms):
        raise PolynomialError(f"polynomial involves {dropped!r}; cannot contract")
    ring = ring or f.ring.drop(dropped)
    return Polynomial(ring, {e[:i] + e[i + 1:]: c for e, c in f.terms.items()})


# -- parser ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*^()/,":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr   := term (("+" | "-") term)*
    # term   := unary (("*" | "/") unary)*
    # unary  := ("-" | "+") unary | power
    # power  := atom ("^" INT)?
    # atom   := INT | NAME | "(" expr ")"

    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] != "op":
            self.fail(f"expected {value!r}", tok)

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    self.fail("division only by nonzero constants", tok)
                result = result / rhs
        return result

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer literal", tok)
            k = int(tok[1])
            if k > MAX_EXPONENT:
                self.fail("exponent too large", tok)
            return base ** k
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return self.ring.constant(int(value))
        if kind == "name":
            if value not in self.ring.variables:
                raise UnknownVariableError(value)
            return self.ring.var(value)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("unexpected end of input" if kind == "end" else f"unexpected token {value!r}", tok)

    def parse_one(self) -> Polynomial:
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return result

    def parse_list(self) -> list[Polynomial]:
        if self.peek()[0] == "end":
            return []
        out = [self.expr()]
        while self.peek()[1] == "," and self.peek()[0] == "op":
            self.take()
            out.append(self.expr())
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return out


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    return _Parser(text, ring).parse_one()


def parse_polynomial_list(text: str, ring: Ring) -> list[Polynomial]:
    """Parse comma-separated generators; an ``ideal(...)`` wrapper is accepted."""
    s = text.strip()
    m = re.fullmatch(r"ideal\s*\((.*)\)", s, flags=re.S)
    if m:
        s = m.group(1)
    return _Parser(s, ring).parse_list()
