"""Parser for the textual syntax of scalars, elements and operators.

Grammar, loosest binding first::

    compose := sum (';' sum)*                 application order: "d1; s1" applies d1 first
    sum     := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' ['-'] INT)?
    atom    := INT | 'q' | '(' compose ')'
             | 'x(' INT,... ')' | 'x' INT           algebra elements
             | 's' INT | 'd' INT | 'th(' INT,... ')' | 'id'
             | 'e' INT | 'f' INT | 'K' INT | 'k' INT | 'E(' i, j ')' | 'e(' i, j ')'
             | 'mul' power                           left multiplication operator

Values are scalars, algebra elements or operators. Products of operators are
composites in the usual order (``a*b`` applies b first). When an element meets
an operator it is read as the left multiplication operator by that element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import lattice as lat
from .galg import AlgebraKind, Element, generator, monomial
from .ops import Compose, Del, Identity, MulBy, Op, Scaled, Sigma, Sum, ThetaOp, zero_op
from .qarith import Scalar, ScalarField

Value = Union[Scalar, Element, Op]


class ParseError(ValueError):
    """Syntax or validation error carrying a 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.message = message
        self.column = column
        self.text: Optional[str] = None   # the input, filled in by the parser


@dataclass
class Token:
    kind: str      # INT, NAME, OP, END
    text: str
    pos: int       # 0-based offset
    index: Optional[int] = None   # digits glued to a name, as in s1 or x3


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)(?P<idx>\d*)|(?P<op>[-+*/^;(),]))")


def tokenize(text: str) -> List[Token]:
    out: List[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        start = pos
        if m.group("int"):
            out.append(Token("INT", m.group("int"), start))
        elif m.group("name"):
            idx = m.group("idx")
            out.append(Token("NAME", m.group("name"), start, int(idx) if idx else None))
        else:
            out.append(Token("OP", m.group("op"), start))
        pos = m.end()
    out.append(Token("END", "", len(text)))
    return out


@dataclass
class Session:
    """Evaluation context: dimension, scalar field, algebra kind and Weyl variant."""

    n: int
    field: ScalarField
    kind: AlgebraKind = None
    variant: int = 1
    _realization: object = dc_field(default=None, repr=False)
    _rootvectors: object = dc_field(default=None, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.kind is None:
            from .uq import default_kind
            self.kind = default_kind(self.field)
        self.kind.validate(self.field)
        if self.variant not in (1, -1):
            raise ValueError("variant must be + or -")

    @property
    def realization(self):
        if self._realization is None:
            from .uq import UqRealization
            self._realization = UqRealization(self.n, self.field, self.kind, gl=True)
        return self._realization

    @property
    def rootvectors(self):
        if self._rootvectors is None:
            from .uq import RootVectorSet
            self._rootvectors = RootVectorSet(self.n, self.field, self.kind)
        return self._rootvectors

    def engine(self):
        from .weyl import WeylEngine
        return WeylEngine(self.n, self.field, self.variant, self.kind)


class Parser:
    def __init__(self, text: str, session: Session):
        self.text = text
        self.s = session
        self.F = session.field
        try:
            self.toks = tokenize(text)
        except ParseError as exc:
            exc.text = text
            raise
        self.k = 0

    # token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def err(self, msg: str, tok: Token = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, tok.pos + 1)

    def at(self, text: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = "end of input" if self.tok.kind == "END" else repr(self.tok.text)
            raise self.err(f"expected {text!r}, found {found}")
        t = self.tok
        self.k += 1
        return t

    def integer(self) -> int:
        sign = 1
        if self.at("-"):
            self.k += 1
            sign = -1
        if self.tok.kind != "INT":
            found = "end of input" if self.tok.kind == "END" else repr(self.tok.text)
            raise self.err(f"expected an integer, found {found}")
        v = int(self.tok.text)
        self.k += 1
        return sign * v

    def int_list(self) -> Tuple[int, ...]:
        self.expect("(")
        vals = [self.integer()]
        while self.at(","):
            self.k += 1
            vals.append(self.integer())
        self.expect(")")
        return tuple(vals)

    # grammar ------------------------------------------------------------

    def parse(self) -> Value:
        try:
            v = self.compose()
            if self.tok.kind != "END":
                raise self.err(f"unexpected {self.tok.text!r}")
        except ParseError as exc:
            exc.text = self.text
            raise
        return v

    def compose(self) -> Value:
        start = self.tok
        v = self.sum()
        if not self.at(";"):
            return v
        parts = [self.as_op(v, start)]
        while self.at(";"):
            self.k += 1
            t = self.tok
            parts.append(self.as_op(self.sum(), t))
        return Compose(tuple(reversed(parts)))

    def sum(self) -> Value:
        start = self.tok
        v = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok
            self.k += 1
            w = self.term()
            if op.text == "-":
                w = self.negate(w)
            v = self.add(v, w, start)
        return v

    def term(self) -> Value:
        start = self.tok
        v = self.unary()
        while self.at("*") or self.at("/"):
            op = self.tok
            self.k += 1
            w = self.unary()
            v = self.mul(v, w, start) if op.text == "*" else self.div(v, w, op)
        return v

    def unary(self) -> Value:
        if self.at("-"):
            self.k += 1
            return self.negate(self.unary())
        if self.at("+"):
            self.k += 1
            return self.unary()
        return self.power()

    def power(self) -> Value:
        start = self.tok
        v = self.atom()
        if self.at("^"):
            self.k += 1
            if self.at("("):
                self.k += 1
                e = self.integer()
                self.expect(")")
            else:
                e = self.integer()
            return self.pow(v, e, start)
        return v

    def atom(self) -> Value:
        t = self.tok
        if t.kind == "INT":
            self.k += 1
            return self.F.from_rational(int(t.text))
        if self.at("("):
            self.k += 1
            v = self.compose()
            self.expect(")")
            return v
        if t.kind == "NAME":
            self.k += 1
            return self.symbol(t)
        if t.kind == "END":
            raise self.err("unexpected end of input")
        raise self.err(f"unexpected {t.text!r}")

    # symbols ------------------------------------------------------------

    def index(self, t: Token, top: int) -> int:
        if t.index is None:
            raise self.err(f"{t.text} needs an index", t)
        if not 1 <= t.index <= top:
            raise self.err(f"index {t.index} of {t.text} out of range 1..{top}", t)
        return t.index

    def vector(self, t: Token) -> Tuple[int, ...]:
        a = self.int_list()
        if len(a) != self.s.n:
            raise self.err(f"{t.text}(...) needs {self.s.n} entries, got {len(a)}", t)
        return a

    def symbol(self, t: Token) -> Value:
        name, n = t.text, self.s.n
        paren = self.at("(") and t.index is None
        try:
            if name == "q" and t.index is None:
                return self.F.q
            if name == "x":
                if paren:
                    a = self.vector(t)
                    if any(v < 0 for v in a):
                        raise self.err("exponents must be nonnegative", t)
                    if not self.s.kind.admits(a):
                        raise self.err(f"x({','.join(map(str, a))}) is not in the algebra {self.s.kind}", t)
                    return monomial(self.s.kind, self.F, a)
                return generator(self.s.kind, self.F, self.index(t, n), n)
            if name == "id" and t.index is None:
                return Identity()
            if name == "mul" and t.index is None:
                v = self.power()
                if isinstance(v, Op):
                    raise self.err("mul expects an algebra element", t)
                return self.as_op(v, t)
            if name == "th" and paren:
                return ThetaOp(self.vector(t))
            if name == "s":
                return Sigma(self.index(t, n))
            if name == "d":
                if self.s.kind.name == "exterior":
                    raise self.err("q-derivatives are not defined on the exterior algebra", t)
                return Del(self.index(t, n))
            if name in ("E", "e") and paren:
                ij = self.int_list()
                if len(ij) != 2:
                    raise self.err(f"{name}(i,j) takes two indices", t)
                rv = self.s.rootvectors
                return rv.E(*ij) if name == "E" else rv.e(*ij)
            if name in ("e", "f", "K"):
                i = self.index(t, n - 1)
                return getattr(self.s.realization, name)(i)
            if name == "k":
                return self.s.realization.k(self.index(t, n))
        except ParseError:
            raise
        except ValueError as exc:
            raise self.err(str(exc), t) from None
        raise self.err(f"unknown symbol {name + (str(t.index) if t.index is not None else '')!r}", t)

    # value arithmetic ---------------------------------------------------

    def as_element(self, v: Value) -> Element:
        if isinstance(v, Element):
            return v
        return Element.one(self.s.kind, self.F, self.s.n).scale(v)

    def as_op(self, v: Value, t: Token) -> Op:
        if isinstance(v, Op):
            return v
        if isinstance(v, Scalar):
            return Scaled(v, Identity())
        # element -> left multiplication operator
        terms = []
        for a, c in v.items():
            body = MulBy(a) if any(a) else Identity()
            terms.append(body if c == self.F.one else Scaled(c, body))
        return Sum(terms) if len(terms) != 1 else terms[0]

    def negate(self, v: Value) -> Value:
        if isinstance(v, Op):
            return Scaled(self.F.from_rational(-1), v)
        return -v

    def add(self, a: Value, b: Value, t: Token) -> Value:
        if isinstance(a, Op) or isinstance(b, Op):
            return Sum((self.as_op(a, t), self.as_op(b, t)))
        if isinstance(a, Element) or isinstance(b, Element):
            return self.as_element(a) + self.as_element(b)
        return a + b

    def mul(self, a: Value, b: Value, t: Token) -> Value:
        if isinstance(a, Scalar) and isinstance(b, Op):
            return Scaled(a, b)
        if isinstance(b, Scalar) and isinstance(a, Op):
            return Scaled(b, a)
        if isinstance(a, Op) or isinstance(b, Op):
            return Compose((self.as_op(a, t), self.as_op(b, t)))
        if isinstance(a, Scalar) and isinstance(b, Element):
            return b.scale(a)
        if isinstance(a, Element) and isinstance(b, Scalar):
            return a.scale(b)
        try:
            return a * b
        except ValueError as exc:
            raise self.err(str(exc), t) from None

    def div(self, a: Value, b: Value, t: Token) -> Value:
        if not isinstance(b, Scalar):
            raise self.err("can only divide by a scalar", t)
        if b.is_zero():
            raise self.err("division by zero", t)
        inv = b.inverse()
        if isinstance(a, Op):
            return Scaled(inv, a)
        if isinstance(a, Element):
            return a.scale(inv)
        return a * inv

    def pow(self, v: Value, e: int, t: Token) -> Value:
        if isinstance(v, Scalar):
            if e < 0 and v.is_zero():
                raise self.err("division by zero", t)
            return v ** e
        if isinstance(v, Element):
            if e < 0:
                raise self.err("elements only have nonnegative powers", t)
            return v ** e
        try:
            return v ** e
        except ValueError as exc:
            raise self.err(str(exc), t) from None


def parse(text: str, session: Session) -> Value:
    """Parse and evaluate text in the session; raises ParseError with a column."""
    return Parser(text, session).parse()


def parse_element(text: str, session: Session) -> Element:
    v = parse(text, session)
    if isinstance(v, Op):
        raise ParseError("expected an algebra element, got an operator", 1)
    return v if isinstance(v, Element) else Element.one(session.kind, session.field, session.n).scale(v)


def parse_operator(text: str, session: Session) -> Op:
    p = Parser(text, session)
    v = p.parse()
    return p.as_op(v, p.toks[0])


def parse_scalar(text: str, field: ScalarField) -> Scalar:
    """Parse a scalar expression in q such as ``(q + 1)/(q - 1)`` or ``-3/2*q^2``."""
    v = parse(text, Session(1, field, AlgebraKind.divided()))
    if not isinstance(v, Scalar):
        raise ParseError("expected a scalar", 1)
    return v


def parse_weyl(text: str, session: Session):
    """Normal form in the quantum Weyl algebra of an operator expression."""
    return session.engine().from_op(parse_operator(text, session))
