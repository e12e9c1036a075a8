"""Quantum divided power algebras and the quantum exterior algebra.

An ``Element`` is a finitely supported map from multi-indices to scalars,
tagged with an ``AlgebraKind``:

* ``divided``      -- A_q(n), basis x^(a) with
  x^(a) x^(b) = q^(a*b) [a+b choose a] x^(a+b)
* ``restricted``   -- A_q(n,1) at char(q) = l, exponents <= l-1
* ``exterior``     -- Lambda_q(n), x_i^2 = 0 and x_j x_i = -q^-1 x_i x_j (i < j)
* ``quantum_space``-- the monomial basis x^a of the quantum n-space,
  x^a x^b = q^(a*b) x^(a+b); target of ``divided_to_monomial``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from . import lattice as lat
from .lattice import MultiIndex
from .qarith import Scalar, ScalarField, char_q, multi_qbinom, qfact

Coeff = Union[int, Fraction, Scalar]


@dataclass(frozen=True)
class AlgebraKind:
    name: str
    l: int = 0

    NAMES = ("divided", "restricted", "exterior", "quantum_space")

    def __post_init__(self):
        if self.name not in self.NAMES:
            raise ValueError(f"unknown algebra kind {self.name!r}")
        if self.name == "restricted" and self.l < 3:
            raise ValueError("restricted kind needs l >= 3")
        if self.name != "restricted" and self.l:
            raise ValueError("only the restricted kind carries l")

    @classmethod
    def divided(cls) -> "AlgebraKind":
        return cls("divided")

    @classmethod
    def restricted(cls, l: int) -> "AlgebraKind":
        return cls("restricted", l)

    @classmethod
    def exterior(cls) -> "AlgebraKind":
        return cls("exterior")

    @classmethod
    def quantum_space(cls) -> "AlgebraKind":
        return cls("quantum_space")

    @property
    def bound(self) -> Optional[int]:
        """Largest allowed exponent, or None when unbounded."""
        if self.name == "restricted":
            return self.l - 1
        if self.name == "exterior":
            return 1
        return None

    def validate(self, field: ScalarField) -> None:
        if self.name == "restricted" and char_q(field) != self.l:
            raise ValueError(f"restricted({self.l}) needs char(q) = {self.l}, field {field} has {char_q(field)}")

    def admits(self, a: MultiIndex) -> bool:
        b = self.bound
        return all(x >= 0 and (b is None or x <= b) for x in a)

    def basis(self, n: int, s: int) -> Tuple[MultiIndex, ...]:
        """Basis multi-indices of total degree s."""
        return tuple(lat.multi_indices(n, s, self.bound))

    def __str__(self):
        return f"restricted:{self.l}" if self.name == "restricted" else self.name


# ---------------------------------------------------------------------------
# monomial products
# ---------------------------------------------------------------------------

_MUL_CACHE: Dict[Tuple[ScalarField, AlgebraKind], Dict[Tuple[MultiIndex, MultiIndex], Optional[Scalar]]] = {}


def monomial_product(kind: AlgebraKind, field: ScalarField, a: MultiIndex,
                     b: MultiIndex) -> Optional[Scalar]:
    """Coefficient c with x^(a) x^(b) = c x^(a+b), or None when the product vanishes."""
    cache = _MUL_CACHE.get((field, kind))
    if cache is None:
        cache = _MUL_CACHE[(field, kind)] = {}
    key = (a, b)
    if key in cache:
        return cache[key]
    c = _monomial_product(kind, field, a, b)
    cache[key] = c
    return c


def _monomial_product(kind, field, a, b):
    name = kind.name
    if name == "exterior":
        inversions = 0
        for i, x in enumerate(a):
            if x:
                if b[i]:
                    return None
                inversions += sum(b[:i])
        c = field.qpow(-inversions)
        return -c if inversions % 2 else c
    c = field.qpow(lat.star(a, b))
    if name == "quantum_space":
        return c
    total = lat.add(a, b)
    c = c * multi_qbinom(total, a, field)
    if c.is_zero():
        return None
    if name == "restricted" and not kind.admits(total):
        raise ArithmeticError(f"restricted product x^({a}) x^({b}) leaves the box with nonzero coefficient")
    return c


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class Element:
    """Immutable linear combination of basis monomials."""

    __slots__ = ("kind", "field", "n", "terms")

    def __init__(self, kind: AlgebraKind, field: ScalarField, n: int,
                 terms: Optional[Dict[MultiIndex, Scalar]] = None, *, check: bool = True):
        self.kind = kind
        self.field = field
        self.n = n
        if terms is None:
            terms = {}
        if check:
            clean = {}
            for a, c in terms.items():
                a = tuple(a)
                if len(a) != n:
                    raise ValueError(f"multi-index {a} has wrong dimension, expected {n}")
                if not kind.admits(a):
                    raise ValueError(f"exponent {a} out of range for kind {kind}")
                c = _coerce(field, c)
                if not c.is_zero():
                    clean[a] = c
            terms = clean
        self.terms = terms

    # construction ------------------------------------------------------

    @classmethod
    def zero(cls, kind: AlgebraKind, field: ScalarField, n: int) -> "Element":
        return cls(kind, field, n, {}, check=False)

    @classmethod
    def one(cls, kind: AlgebraKind, field: ScalarField, n: int) -> "Element":
        return cls(kind, field, n, {lat.zero(n): field.one}, check=False)

    def like(self, terms: Dict[MultiIndex, Scalar]) -> "Element":
        """New element over the same algebra; terms must already be clean."""
        return Element(self.kind, self.field, self.n, terms, check=False)

    # queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, a: MultiIndex) -> Scalar:
        return self.terms.get(tuple(a), self.field.zero)

    def support(self) -> Tuple[MultiIndex, ...]:
        return tuple(sorted(self.terms, key=_term_order))

    def items(self) -> Iterator[Tuple[MultiIndex, Scalar]]:
        for a in self.support():
            yield a, self.terms[a]

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self.terms}) <= 1

    def degree_part(self, s: int) -> "Element":
        return self.like({a: c for a, c in self.terms.items() if sum(a) == s})

    def _same(self, other: "Element") -> None:
        if self.kind != other.kind or self.n != other.n or self.field != other.field:
            raise ValueError("elements live in different algebras")

    # arithmetic --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Element):
            return (self.kind, self.n, self.field) == (other.kind, other.n, other.field) and self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar)):
            return self == self.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.n, frozenset(self.terms.items())))

    def scalar(self, c: Coeff) -> "Element":
        return Element.one(self.kind, self.field, self.n).scale(c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            if a in out:
                s = out[a] + c
                if s.is_zero():
                    del out[a]
                else:
                    out[a] = s
            else:
                out[a] = c
        return self.like(out)

    __radd__ = __add__

    def __neg__(self):
        return self.like({a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff) -> "Element":
        c = _coerce(self.field, c)
        if c.is_zero():
            return self.like({})
        if c == 1:
            return self
        return self.like({a: v * c for a, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        out: Dict[MultiIndex, Scalar] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                c = monomial_product(self.kind, self.field, a, b)
                if c is None:
                    continue
                g = tuple(x + y for x, y in zip(a, b))
                v = ca * cb * c
                if g in out:
                    v = out[g] + v
                    if v.is_zero():
                        del out[g]
                        continue
                out[g] = v
        return self.like(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("elements only have nonnegative integer powers")
        out = Element.one(self.kind, self.field, self.n)
        for _ in range(k):
            out = out * self
        return out

    # rendering ---------------------------------------------------------

    def __str__(self):
        return render_element(self)

    def __repr__(self):
        return f"Element({self.kind}, n={self.n}, {self})"


def _term_order(a: MultiIndex):
    return (sum(a), tuple(-x for x in a))


def _coerce(field: ScalarField, c: Coeff) -> Scalar:
    if isinstance(c, Scalar):
        if c.field != field:
            raise ValueError("scalar from a different field")
        return c
    return field.from_rational(c)


def render_coefficient(c: Scalar) -> str:
    s = str(c)
    if " " in s or "/" in s:
        return f"({s})"
    return s


def render_monomial(a: MultiIndex) -> str:
    return "x(" + ",".join(str(x) for x in a) + ")"


def render_element(e: Element) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for a, c in e.items():
        unit = not any(a)
        cs = render_coefficient(c)
        if unit:
            term = cs
        elif cs == "1":
            term = render_monomial(a)
        elif cs == "-1":
            term = "-" + render_monomial(a)
        else:
            term = f"{cs}*{render_monomial(a)}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# constructors and basis changes
# ---------------------------------------------------------------------------

def monomial(kind: AlgebraKind, field: ScalarField, a: Iterable[int], coeff: Coeff = 1) -> Element:
    """x^(a), the unit when a = 0."""
    a = tuple(a)
    kind.validate(field)
    if not kind.admits(a):
        raise ValueError(f"exponent {a} out of range for kind {kind}")
    return Element(kind, field, len(a), {a: _coerce(field, coeff)})


def generator(kind: AlgebraKind, field: ScalarField, i: int, n: int) -> Element:
    """x_i = x^(eps_i)."""
    return monomial(kind, field, lat.eps(i, n))


def basis(kind: AlgebraKind, field: ScalarField, n: int, max_degree: int = None) -> Iterator[Element]:
    """Basis monomials, by total degree; bounded kinds default to their whole basis."""
    if max_degree is None:
        if kind.bound is None:
            raise ValueError("unbounded kind needs a degree bound")
        max_degree = n * kind.bound
    for a in lat.multi_indices_upto(n, max_degree, kind.bound):
        yield monomial(kind, field, a)


def dimension(kind: AlgebraKind, n: int) -> int:
    """Dimension of a finite kind: l^n for restricted(l), 2^n for exterior."""
    if kind.bound is None:
        raise ValueError(f"{kind} is infinite dimensional")
    return (kind.bound + 1) ** n


def _factorial_weight(field: ScalarField, a: MultiIndex) -> Scalar:
    w = field.one
    for x in a:
        w = w * qfact(x, field)
    return w


def divided_to_monomial(e: Element) -> Element:
    """Rewrite an A_q(n) element in the monomial basis x^a = [a]! x^(a) of the quantum n-space."""
    if e.kind.name != "divided":
        raise ValueError("expects a divided power element")
    if not e.field.is_generic:
        raise ValueError("the monomial basis change needs generic q")
    kind = AlgebraKind.quantum_space()
    return Element(kind, e.field, e.n, {a: c / _factorial_weight(e.field, a) for a, c in e.terms.items()},
                   check=False)


def monomial_to_divided(e: Element) -> Element:
    """Inverse of ``divided_to_monomial``."""
    if e.kind.name != "quantum_space":
        raise ValueError("expects a quantum n-space element")
    if not e.field.is_generic:
        raise ValueError("the monomial basis change needs generic q")
    kind = AlgebraKind.divided()
    return Element(kind, e.field, e.n, {a: c * _factorial_weight(e.field, a) for a, c in e.terms.items()},
                   check=False)


def factor_high_divided_power(i: int, m: int, l: int, field: ScalarField, n: int = None
                              ) -> Tuple[int, int, Scalar]:
    """Split x_i^(m) = c * x_i^(m0) * (x_i^(l))^m1 with m = m0 + m1*l.

    Returns (m0, m1, c). Both (x_i^(l))^m1 = m1! x_i^(m1*l) and the full
    factorization are checked by direct multiplication in A_q(n).
    """
    if char_q(field) != l:
        raise ValueError(f"field {field} has char(q) = {char_q(field)}, not {l}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    n = n or i
    kind = AlgebraKind.divided()
    m1, m0 = divmod(m, l)
    xl = monomial(kind, field, lat.scale(l, lat.eps(i, n)))
    power = xl ** m1
    expected = monomial(kind, field, lat.scale(m1 * l, lat.eps(i, n)), factorial(m1))
    if power != expected:
        raise ArithmeticError(f"(x_{i}^({l}))^{m1} = {power}, expected {expected}")
    coeff = field.one / factorial(m1)
    rebuilt = monomial(kind, field, lat.scale(m0, lat.eps(i, n))) * power
    target = monomial(kind, field, lat.scale(m, lat.eps(i, n)))
    if rebuilt.scale(coeff) != target:
        raise ArithmeticError(f"x_{i}^({m}) does not factor as {coeff} x_{i}^({m0}) (x_{i}^({l}))^{m1}")
    return m0, m1, coeff
