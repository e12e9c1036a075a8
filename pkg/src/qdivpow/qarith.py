"""Exact scalar arithmetic in q.

Two scalar fields are supported:

* ``ScalarField.generic()`` -- the rational function field Q(q), elements are
  reduced fractions of Laurent polynomials.
* ``ScalarField.root_of_unity(m)`` -- Q(zeta_m), elements are polynomials of
  degree < phi(m) reduced modulo the m-th cyclotomic polynomial.

On top of that live the q-integers ``[n] = (q^n - q^-n)/(q - q^-1)``, q-factorials,
q-binomials for all integer arguments, ``char_q`` and the digit-splitting
identities for q-binomials at roots of unity.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple, Union

Rational = Union[int, Fraction]


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def _trim(p: List[Rational]) -> List[Rational]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: List[Rational], b: List[Rational]) -> Tuple[List[Rational], List[Rational]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    quot: List[Rational] = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c == 0:
            continue
        c = _norm(Fraction(c) / lead) if lead != 1 else c
        quot[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
    rem = _trim(a[:db])
    return _trim(quot), [_norm(x) for x in rem]


def _poly_monic(p: List[Rational]) -> List[Rational]:
    lead = p[-1]
    if lead == 1:
        return p
    return [_norm(Fraction(c) / lead) for c in p]


def _poly_gcd(a: List[Rational], b: List[Rational]) -> List[Rational]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, _poly_monic(r) if r else r
    return _poly_monic(a)


def _poly_mul(a: List[Rational], b: List[Rational]) -> List[Rational]:
    if not a or not b:
        return []
    out: List[Rational] = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: List[Rational], b: List[Rational]) -> List[Rational]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _poly_inverse_mod(a: List[Rational], modulus: List[Rational]) -> List[Rational]:
    """Inverse of ``a`` in Q[v]/(modulus) by the extended Euclidean algorithm."""
    r0, r1 = list(modulus), _trim(list(a))
    s0: List[Rational] = []
    s1: List[Rational] = [1]
    while len(r1) > 1:
        quot, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    return [_norm(Fraction(x) / c) for x in s1]


def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """Integer coefficients (low degree first) of the m-th cyclotomic polynomial.

    Computed by dividing v^m - 1 by Phi_d for every proper divisor d of m.
    """
    return _cyclotomic(m)


_CYCLO_CACHE: Dict[int, Tuple[int, ...]] = {}


def _cyclotomic(m: int) -> Tuple[int, ...]:
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    if m in _CYCLO_CACHE:
        return _CYCLO_CACHE[m]
    p: List[Rational] = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p, rem = _poly_divmod(p, list(_cyclotomic(d)))
            assert not rem
    result = tuple(int(c) for c in p)
    _CYCLO_CACHE[m] = result
    return result


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial with rational coefficients in one variable."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Optional[Dict[int, Rational]] = None, *, _trusted: bool = False):
        if _trusted:
            self._c = coeffs
        else:
            self._c = {}
            for k, v in (coeffs or {}).items():
                v = _norm(Fraction(v)) if isinstance(v, Fraction) else v
                if v != 0:
                    self._c[int(k)] = v
        self._hash = None

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "LaurentPoly":
        return cls({k: c} if c != 0 else {}, _trusted=True)

    @classmethod
    def constant(cls, c: Rational) -> "LaurentPoly":
        return cls.monomial(0, c)

    @property
    def coeffs(self) -> Dict[int, Rational]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return len(self._c) == 1 and self._c.get(0) == 1

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def low(self) -> int:
        return min(self._c)

    def high(self) -> int:
        return max(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: other} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._c.items()}, _trusted=True)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other._c:
            return self
        if not self._c:
            return other
        out = dict(self._c)
        for k, v in other._c.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = _norm(s) if isinstance(s, Fraction) else s
        return LaurentPoly(out, _trusted=True)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self._c, other._c
        if not a or not b:
            return LaurentPoly({}, _trusted=True)
        if len(a) == 1:
            a, b = b, a
        if len(b) == 1:
            (k, c), = b.items()
            if c == 1:
                return LaurentPoly({e + k: v for e, v in a.items()}, _trusted=True)
            return LaurentPoly({e + k: _norm(v * c) for e, v in a.items()}, _trusted=True)
        out: Dict[int, Rational] = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return LaurentPoly({k: _norm(v) for k, v in out.items() if v != 0}, _trusted=True)

    def scale(self, c: Rational) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly({}, _trusted=True)
        return LaurentPoly({k: _norm(v * c) for k, v in self._c.items()}, _trusted=True)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self._c.items()}, _trusted=True)

    def bar(self) -> "LaurentPoly":
        """The substitution q -> q^-1."""
        return LaurentPoly({-e: v for e, v in self._c.items()}, _trusted=True)

    def evaluate(self, value: Rational) -> Rational:
        value = Fraction(value)
        return _norm(sum((Fraction(c) * value ** e for e, c in self._c.items()), Fraction(0)))

    def to_poly(self) -> Tuple[int, List[Rational]]:
        """Split as ``q^low * P(q)`` with P an ordinary polynomial, P(0) != 0."""
        lo, hi = self.low(), self.high()
        return lo, [self._c.get(e, 0) for e in range(lo, hi + 1)]

    @classmethod
    def from_poly(cls, shift: int, coeffs: Iterable[Rational]) -> "LaurentPoly":
        return cls({shift + i: c for i, c in enumerate(coeffs) if c != 0})

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render_laurent(self._c)


def _render_coeff_term(c: Rational, e: int, var: str) -> str:
    if e == 0:
        mono = ""
    elif e == 1:
        mono = var
    else:
        mono = f"{var}^{e}"
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def render_laurent(coeffs: Dict[int, Rational], var: str = "q") -> str:
    if not coeffs:
        return "0"
    out = ""
    for e in sorted(coeffs, reverse=True):
        term = _render_coeff_term(coeffs[e], e, var)
        if not out:
            out = term
        elif term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


_LP_ZERO = LaurentPoly({}, _trusted=True)
_LP_ONE = LaurentPoly({0: 1}, _trusted=True)


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

class Scalar:
    """Common base for field elements; concrete classes define the arithmetic."""

    __slots__ = ()
    field: "ScalarField"

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __radd__(self, other):
        return self.__add__(other)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self) -> "Scalar":
        return self.field.one / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar({self})"


class RationalFunction(Scalar):
    """Element of Q(q) stored as a reduced quotient of Laurent polynomials.

    The denominator is a polynomial with nonzero constant term and leading
    coefficient 1, so equal values have equal representations.
    """

    __slots__ = ("num", "den", "field", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = _LP_ONE, field: "ScalarField" = None,
                 *, _reduced: bool = False):
        self.field = field if field is not None else ScalarField.generic()
        self._hash = None
        if den is _LP_ONE or den.is_one():
            self.num, self.den = num, _LP_ONE
            return
        if _reduced:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        if num.is_zero():
            self.num, self.den = _LP_ZERO, _LP_ONE
            return
        dlo, dpoly = den.to_poly()
        lead = dpoly[-1]
        dpoly = _poly_monic(dpoly)
        num = num.shift(-dlo)
        if lead != 1:
            num = num.scale(_norm(Fraction(1) / Fraction(lead)))
        if len(dpoly) == 1:
            self.num, self.den = num, _LP_ONE
            return
        nlo, npoly = num.to_poly()
        quot, rem = _poly_divmod(npoly, dpoly)
        if not rem:
            self.num, self.den = LaurentPoly.from_poly(nlo, quot), _LP_ONE
            return
        g = _poly_gcd(npoly, dpoly)
        if len(g) > 1:
            npoly, r1 = _poly_divmod(npoly, g)
            dpoly, r2 = _poly_divmod(dpoly, g)
            assert not r1 and not r2
        self.num = LaurentPoly.from_poly(nlo, npoly)
        self.den = LaurentPoly.from_poly(0, dpoly)

    def is_zero(self) -> bool:
        return not self.num._c

    def is_laurent(self) -> bool:
        return self.den is _LP_ONE

    def __eq__(self, other):
        if type(other) is RationalFunction:
            return self.num._c == other.num._c and (self.den is other.den or self.den == other.den)
        if isinstance(other, (int, Fraction)):
            return self.den is _LP_ONE and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.field, _reduced=True)

    def __add__(self, other):
        o = other if type(other) is RationalFunction else self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den is _LP_ONE and o.den is _LP_ONE:
            return RationalFunction(self.num + o.num, _LP_ONE, self.field, _reduced=True)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den, self.field)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        if type(other) is not RationalFunction:
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return RationalFunction(_LP_ZERO, _LP_ONE, self.field, _reduced=True)
                return RationalFunction(self.num.scale(other), self.den, self.field, _reduced=True)
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            other = o
        if self.den is _LP_ONE and other.den is _LP_ONE:
            return RationalFunction(self.num * other.num, _LP_ONE, self.field, _reduced=True)
        if other.den is _LP_ONE and other.num.is_monomial():
            return RationalFunction(self.num * other.num, self.den, self.field, _reduced=True)
        if self.den is _LP_ONE and self.num.is_monomial():
            return RationalFunction(self.num * other.num, other.den, self.field, _reduced=True)
        return RationalFunction(self.num * other.num, self.den * other.den, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return RationalFunction(self.num * o.den, self.den * o.num, self.field)

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar(), self.field)

    def evaluate(self, value: Rational) -> Rational:
        return _norm(Fraction(self.num.evaluate(value)) / Fraction(self.den.evaluate(value)))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


class CyclotomicElement(Scalar):
    """Element of Q(q) with q a primitive m-th root of unity.

    Stored as the coefficient tuple (low degree first) of the unique
    representative of degree < phi(m).
    """

    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs: Tuple[Rational, ...], field: "ScalarField"):
        self.coeffs = coeffs
        self.field = field
        self._hash = None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.coeffs == other.coeffs and self.field.m == other.field.m
        if isinstance(other, (int, Fraction)):
            return self.coeffs == self.field.from_rational(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.m, self.coeffs))
        return self._hash

    def __neg__(self):
        return CyclotomicElement(tuple(-c for c in self.coeffs), self.field)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(tuple(_norm(a + b) for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(tuple(_norm(a - b) for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(tuple(_norm(a * other) for a in self.coeffs), self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = len(self.coeffs)
        conv: List[Rational] = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b != 0:
                    conv[i + j] += a * b
        out = list(conv[:d])
        table = self.field._reduction
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c != 0:
                for j, r in enumerate(table[k - d]):
                    if r != 0:
                        out[j] += c * r
        return CyclotomicElement(tuple(_norm(c) for c in out), self.field)

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        inv = _poly_inverse_mod(list(self.coeffs), list(self.field.cyclotomic))
        d = len(self.coeffs)
        inv = inv + [0] * (d - len(inv))
        return CyclotomicElement(tuple(_norm(c) for c in inv[:d]), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def bar(self) -> "CyclotomicElement":
        """Image under the Galois automorphism q -> q^-1."""
        f = self.field
        out = f.zero
        for e, c in enumerate(self.coeffs):
            if c != 0:
                out = out + f.qpow(-e) * c
        return out

    def __str__(self):
        return render_laurent({e: c for e, c in enumerate(self.coeffs) if c != 0})


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class ScalarField:
    """A choice of q: generic (transcendental) or a primitive m-th root of unity.

    Instances are interned, so ``ScalarField.root_of_unity(6)`` always returns
    the same object and its caches are shared.
    """

    _instances: Dict[Tuple[str, int], "ScalarField"] = {}

    def __new__(cls, mode: str = "generic", m: int = 0):
        if mode == "generic":
            m = 0
        key = (mode, m)
        inst = cls._instances.get(key)
        if inst is not None:
            return inst
        if mode not in ("generic", "root"):
            raise ValueError(f"unknown field mode {mode!r}")
        if mode == "root" and m < 3:
            raise ValueError("root-of-unity mode needs order m >= 3")
        inst = super().__new__(cls)
        inst.mode = mode
        inst.m = m
        inst._h = hash((mode, m))
        inst._qpow = {}
        inst._qint = {}
        inst._qbinom = {}
        inst._char = None
        if mode == "root":
            cyc = _cyclotomic(m)
            inst.cyclotomic = cyc
            d = len(cyc) - 1
            inst.degree = d
            # v^(d+k) mod Phi_m for k = 0 .. d-2
            table = []
            cur: List[Rational] = [-c for c in cyc[:d]]
            for _ in range(max(d - 1, 0)):
                table.append(tuple(cur))
                top = cur[-1]
                cur = [0] + cur[:-1]
                cur = [cur[j] - top * cyc[j] for j in range(d)]
            inst._reduction = table
        cls._instances[key] = inst
        return inst

    def __getnewargs__(self):
        return (self.mode, self.m)

    @classmethod
    def generic(cls) -> "ScalarField":
        return cls("generic", 0)

    @classmethod
    def root_of_unity(cls, m: int) -> "ScalarField":
        return cls("root", m)

    @property
    def is_generic(self) -> bool:
        return self.mode == "generic"

    def __eq__(self, other):
        return isinstance(other, ScalarField) and (self.mode, self.m) == (other.mode, other.m)

    def __hash__(self):
        return self._h

    def __repr__(self):
        return "ScalarField.generic()" if self.is_generic else f"ScalarField.root_of_unity({self.m})"

    def __str__(self):
        return "generic" if self.is_generic else f"root:{self.m}"

    # construction -----------------------------------------------------

    def from_rational(self, c: Rational) -> Scalar:
        c = _norm(Fraction(c)) if isinstance(c, Fraction) else c
        if self.is_generic:
            return RationalFunction(LaurentPoly.constant(c), _LP_ONE, self, _reduced=True)
        return CyclotomicElement((c,) + (0,) * (self.degree - 1), self)

    def from_laurent(self, coeffs: Union[LaurentPoly, Dict[int, Rational]]) -> Scalar:
        if isinstance(coeffs, dict):
            coeffs = LaurentPoly(coeffs)
        if self.is_generic:
            return RationalFunction(coeffs, _LP_ONE, self, _reduced=True)
        out = self.zero
        for e, c in coeffs.items():
            out = out + self.qpow(e) * c
        return out

    @property
    def zero(self) -> Scalar:
        return self.from_rational(0)

    @property
    def one(self) -> Scalar:
        return self.from_rational(1)

    @property
    def q(self) -> Scalar:
        return self.qpow(1)

    def qpow(self, k: int) -> Scalar:
        """q^k, cached."""
        val = self._qpow.get(k)
        if val is not None:
            return val
        if self.is_generic:
            val = RationalFunction(LaurentPoly.monomial(k), _LP_ONE, self, _reduced=True)
        else:
            e = k % self.m
            if e in self._qpow and e != k:
                val = self._qpow[e]
            else:
                # reduce v^e modulo Phi_m
                d = self.degree
                vec = [0] * max(e + 1, d)
                vec[e] = 1
                _, rem = _poly_divmod(vec, list(self.cyclotomic))
                rem = rem + [0] * (d - len(rem))
                val = CyclotomicElement(tuple(_norm(c) for c in rem), self)
        self._qpow[k] = val
        return val

    def parse(self, text: str) -> Scalar:
        from .expr import parse_scalar

        return parse_scalar(text, self)

    # q-numbers --------------------------------------------------------

    def qint(self, n: int) -> Scalar:
        return qint(n, self)

    def qfact(self, n: int) -> Scalar:
        return qfact(n, self)

    def qbinom(self, m: int, r: int) -> Scalar:
        return qbinom(m, r, self)

    def char_q(self) -> int:
        return char_q(self)


# ---------------------------------------------------------------------------
# q-integers, factorials, binomials
# ---------------------------------------------------------------------------

def qint(n: int, field: ScalarField) -> Scalar:
    """The q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [-n] = -[n]."""
    val = field._qint.get(n)
    if val is not None:
        return val
    if n < 0:
        val = -qint(-n, field)
    elif field.is_generic:
        val = field.from_laurent(LaurentPoly({e: 1 for e in range(1 - n, n, 2)}, _trusted=True))
    else:
        val = field.zero
        for e in range(1 - n, n, 2):
            val = val + field.qpow(e)
    field._qint[n] = val
    return val


def qfact(n: int, field: ScalarField) -> Scalar:
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("q-factorial needs a nonnegative argument")
    key = ("fact", n)
    val = field._qbinom.get(key)
    if val is None:
        val = field.one
        for j in range(1, n + 1):
            val = val * qint(j, field)
        field._qbinom[key] = val
    return val


def qbinom(m: int, r: int, field: ScalarField) -> Scalar:
    """Gaussian binomial [m choose r] for arbitrary integers m, r.

    Generic q uses factorials; roots of unity use the Pascal recursion so no
    vanishing q-factorial is ever divided by.
    """
    if r < 0:
        return field.zero
    if m < 0:
        val = qbinom(-m + r - 1, r, field)
        return val if r % 2 == 0 else -val
    if m < r:
        return field.zero
    key = (m, r)
    val = field._qbinom.get(key)
    if val is not None:
        return val
    if r == 0 or r == m:
        val = field.one
    elif field.is_generic:
        val = qfact(m, field) / (qfact(r, field) * qfact(m - r, field))
    else:
        # fill the Pascal table row by row to avoid deep recursion
        for row in range(1, m + 1):
            for col in range(1, row):
                k = (row, col)
                if k not in field._qbinom:
                    field._qbinom[k] = (field.qpow(col - row) * qbinom(row - 1, col - 1, field)
                                        + field.qpow(col) * qbinom(row - 1, col, field))
        val = field._qbinom[key]
    field._qbinom[key] = val
    return val


def qbinom_product(m: int, r: int, field: ScalarField) -> Scalar:
    """The product formula prod_{i=1}^r (q^(m-i+1) - q^(-m+i-1)) / (q^i - q^-i).

    Only meaningful where no denominator vanishes (generic q, or r < char).
    """
    if r < 0:
        return field.zero
    num = field.one
    den = field.one
    for i in range(1, r + 1):
        num = num * (field.qpow(m - i + 1) - field.qpow(-m + i - 1))
        den = den * (field.qpow(i) - field.qpow(-i))
    return num / den


def char_q(field: ScalarField) -> int:
    """Least l > 0 with [l] = 0, or 0 for generic q."""
    if field.is_generic:
        return 0
    if field._char is None:
        l = 1
        while not qint(l, field).is_zero():
            l += 1
            if l > field.m:
                raise ArithmeticError("no vanishing q-integer found")
        field._char = l
    return field._char


def _require_char(field: ScalarField, l: int) -> None:
    if l < 3:
        raise ValueError("the digit identities need l >= 3")
    c = char_q(field)
    if c != l:
        raise ValueError(f"field {field} has char(q) = {c}, not {l}")


def lusztig_factorization(m: int, r: int, l: int, field: ScalarField) -> Scalar:
    """[m0 choose r0] * C(m1, r1) for the base-l splits m = m0 + m1*l, r = r0 + r1*l.

    At char(q) = l this equals [m choose r].
    """
    _require_char(field, l)
    if not m >= r >= 0:
        raise ValueError("need m >= r >= 0")
    m1, m0 = divmod(m, l)
    r1, r0 = divmod(r, l)
    return qbinom(m0, r0, field) * comb(m1, r1)


def lusztig_sign(m: int, r: int, l: int, field: ScalarField) -> int:
    """Sign s with [m choose r] = s * [m0 choose r0] * C(m1, r1).

    It is 1 when q^l = 1. When q is a primitive 2l-th root with l odd, q = -p
    for a primitive l-th root p, and [m choose r]_(-p) = (-1)^(r(m-r)) [m choose r]_p
    gives the sign (-1)^(r(m-r) + r0(m0-r0)).
    """
    _require_char(field, l)
    if field.m == l:
        return 1
    if l % 2 == 0:
        raise ValueError("no sign rule for even l")
    _, m0 = divmod(m, l)
    _, r0 = divmod(r, l)
    return -1 if (r * (m - r) + r0 * (m0 - r0)) % 2 else 1


def qbinom_lemma2(m: int, l: int, field: ScalarField) -> Scalar:
    """[m choose l] at char(q) = l, checked against its digit value.

    With m = m0 + m1*l (0 <= m0 < l) the value is m1 when m1 >= 0 and
    -(-1)^l * m1 when m < 0.
    """
    _require_char(field, l)
    m1, _ = divmod(m, l)
    value = qbinom(m, l, field)
    expected = m1 if m1 >= 0 else -((-1) ** l) * m1
    if value != expected:
        raise ArithmeticError(f"[{m} choose {l}] = {value}, expected {expected}")
    return value


def lemma3_holds(m: int, m2: int, l: int, field: ScalarField) -> bool:
    """Recovery of m from (q^m, [m choose l]) at char(q) = l.

    Returns True when the pair (m, m2) is consistent with the statement: if the
    two invariants agree then m2 == m, except for even l with opposite-sign
    l-digits where m2 == m0 - m1*l.
    """
    _require_char(field, l)
    if field.qpow(m) != field.qpow(m2) or qbinom(m, l, field) != qbinom(m2, l, field):
        return True
    m1, m0 = divmod(m, l)
    n1, _ = divmod(m2, l)
    if l % 2 == 1 or m1 * n1 >= 0:
        return m == m2
    return m2 == m0 - m1 * l


def multi_qbinom(top: Tuple[int, ...], bottom: Tuple[int, ...], field: ScalarField) -> Scalar:
    """prod_i [top_i choose bottom_i]."""
    val = field.one
    for t, b in zip(top, bottom):
        if b == 0 and t >= 0:
            continue
        val = val * qbinom(t, b, field)
        if val.is_zero():
            return val
    return val
