"""Operators on the divided power algebras.

Primitive operators act on a basis monomial x^(b) by a scalar multiple of a
single basis monomial:

* ``Sigma(i, k)``   sigma_i^k : x^(b) -> q^(k b_i) x^(b)
* ``Del(i)``        d_i       : x^(b) -> q^(-eps_i*b) x^(b - eps_i)
* ``ThetaOp(a)``    Theta(a)  : x^(b) -> theta(a, b) x^(b)
* ``MulBy(a)``      left multiplication by x^(a)

Operators compose in the mathematical order: ``a * b`` is a after b, i.e.
``(a * b)(v) == a(b(v))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from . import lattice as lat
from .galg import AlgebraKind, Element, monomial_product
from .lattice import MultiIndex
from .qarith import Scalar, ScalarField

Coeff = Union[int, Fraction, Scalar]


class Op:
    """Base class of operator expressions."""

    def apply(self, e: Element) -> Element:
        raise NotImplementedError

    def __call__(self, e: Element) -> Element:
        return self.apply(e)

    def __mul__(self, other):
        if isinstance(other, Op):
            return Compose((self, other))
        if isinstance(other, (int, Fraction, Scalar)):
            return Scaled(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return Scaled(other, self)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Op):
            return Sum((self, other))
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Op):
            return Sum((self, Scaled(-1, other)))
        return NotImplemented

    def __neg__(self):
        return Scaled(-1, self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return Identity()
        if k == 1:
            return self
        return Compose((self,) * k)

    def inverse(self) -> "Op":
        raise ValueError(f"operator {self} is not invertible")

    def render(self) -> str:
        return str(self)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------

_PRIM_CACHE: Dict[tuple, Optional[Tuple[MultiIndex, Scalar]]] = {}


class Primitive(Op):
    """An operator sending each basis monomial to a multiple of one basis monomial."""

    def mono(self, kind: AlgebraKind, field: ScalarField, b: MultiIndex) -> Optional[Tuple[MultiIndex, Scalar]]:
        key = (self, kind, field, b)
        if key in _PRIM_CACHE:
            return _PRIM_CACHE[key]
        r = self._mono(kind, field, b)
        _PRIM_CACHE[key] = r
        return r

    def _mono(self, kind, field, b):
        raise NotImplementedError

    def apply(self, e: Element) -> Element:
        out: Dict[MultiIndex, Scalar] = {}
        for b, c in e.terms.items():
            r = self.mono(e.kind, e.field, b)
            if r is None:
                continue
            g, s = r
            v = c * s
            if g in out:
                v = out[g] + v
                if v.is_zero():
                    del out[g]
                    continue
            out[g] = v
        return e.like(out)


def _axis(i: int, n: int) -> int:
    if not 1 <= i <= n:
        raise ValueError(f"axis {i} out of range 1..{n}")
    return i - 1


@dataclass(frozen=True, eq=True)
class Sigma(Primitive):
    i: int
    k: int = 1

    def _mono(self, kind, field, b):
        j = _axis(self.i, len(b))
        return b, field.qpow(self.k * b[j])

    def inverse(self):
        return Sigma(self.i, -self.k)

    def __pow__(self, k):
        if isinstance(k, int):
            return Sigma(self.i, self.k * k)
        return NotImplemented

    def __str__(self):
        return f"s{self.i}" if self.k == 1 else f"s{self.i}^{self.k}"


@dataclass(frozen=True, eq=True)
class Del(Primitive):
    i: int

    def _mono(self, kind, field, b):
        if kind.name == "exterior":
            raise ValueError("q-derivatives are not defined on the exterior algebra")
        j = _axis(self.i, len(b))
        if b[j] == 0:
            return None
        g = b[:j] + (b[j] - 1,) + b[j + 1:]
        return g, field.qpow(-sum(b[:j]))

    def __str__(self):
        return f"d{self.i}"


@dataclass(frozen=True, eq=True)
class ThetaOp(Primitive):
    a: MultiIndex

    def _mono(self, kind, field, b):
        return b, lat.theta(self.a, b, field)

    def inverse(self):
        return ThetaOp(lat.neg(self.a))

    def __pow__(self, k):
        if isinstance(k, int):
            return ThetaOp(lat.scale(k, self.a))
        return NotImplemented

    def __str__(self):
        return "th(" + ",".join(str(x) for x in self.a) + ")"


@dataclass(frozen=True, eq=True)
class MulBy(Primitive):
    a: MultiIndex

    def _mono(self, kind, field, b):
        if not kind.admits(self.a):
            raise ValueError(f"x^({self.a}) is not in the algebra {kind}")
        c = monomial_product(kind, field, self.a, b)
        if c is None:
            return None
        return lat.add(self.a, b), c

    def __str__(self):
        return "x(" + ",".join(str(x) for x in self.a) + ")"


@dataclass(frozen=True, eq=False)
class MonomialMap(Primitive):
    """Primitive given by a python function b -> (g, coefficient) or None."""

    name: str
    fn: Callable = dc_field(compare=False)

    def _mono(self, kind, field, b):
        return self.fn(kind, field, b)

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    def __str__(self):
        return self.name


def x(i: int, n: int) -> MulBy:
    """Left multiplication by x_i."""
    return MulBy(lat.eps(i, n))


def theta_eps(i: int, n: int, sign: int = 1) -> ThetaOp:
    """Theta(+-eps_i)."""
    return ThetaOp(lat.scale(sign, lat.eps(i, n)))


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------

class Identity(Op):
    def apply(self, e):
        return e

    def inverse(self):
        return self

    def __eq__(self, other):
        return isinstance(other, Identity)

    def __hash__(self):
        return hash("Identity")

    def __str__(self):
        return "id"


class Compose(Op):
    """ops[0] after ops[1] after ... ; the last one is applied first."""

    def __init__(self, ops: Sequence[Op]):
        flat: List[Op] = []
        for o in ops:
            if isinstance(o, Compose):
                flat.extend(o.ops)
            elif not isinstance(o, Identity):
                flat.append(o)
        self.ops = tuple(flat)

    def apply(self, e):
        for o in reversed(self.ops):
            e = o.apply(e)
            if e.is_zero():
                return e
        return e

    def inverse(self):
        return Compose(tuple(o.inverse() for o in reversed(self.ops)))

    def __str__(self):
        if not self.ops:
            return "id"
        # CLI syntax lists factors in application order
        return "; ".join(_wrap(o, "compose") for o in reversed(self.ops))


class Sum(Op):
    def __init__(self, ops: Sequence[Op]):
        flat: List[Op] = []
        for o in ops:
            if isinstance(o, Sum):
                flat.extend(o.ops)
            else:
                flat.append(o)
        self.ops = tuple(flat)

    def apply(self, e):
        out = e.like({})
        for o in self.ops:
            out = out + o.apply(e)
        return out

    def __str__(self):
        if not self.ops:
            return "0"
        out = str(self.ops[0])
        for o in self.ops[1:]:
            s = str(o)
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out


class Scaled(Op):
    def __init__(self, c: Coeff, op: Op):
        if isinstance(op, Scaled):
            c, op = (op.c * c if isinstance(op.c, Scalar) else c * op.c), op.op
        self.c = c
        self.op = op

    def apply(self, e):
        return self.op.apply(e).scale(self.c)

    def inverse(self):
        return Scaled(1 / self.c if not isinstance(self.c, int) else Fraction(1, self.c), self.op.inverse())

    def __str__(self):
        from .galg import render_coefficient

        c = self.c
        cs = render_coefficient(c) if isinstance(c, Scalar) else (f"({c})" if isinstance(c, Fraction) else str(c))
        body = _wrap(self.op, "scaled")
        if cs == "1":
            return body
        if cs == "-1":
            return "-" + body
        return f"{cs}*{body}"


class Named(Op):
    """An operator expression shown under a short name such as ``e1``."""

    def __init__(self, name: str, op: Op, inverse: Callable[[], Op] = None):
        self.name = name
        self.op = op
        self._inverse = inverse  # zero-argument callable, resolved lazily

    def apply(self, e):
        return self.op.apply(e)

    def inverse(self):
        if self._inverse is not None:
            return self._inverse()
        return self.op.inverse()

    def __str__(self):
        return self.name


def _wrap(o: Op, ctx: str) -> str:
    s = str(o)
    if isinstance(o, Sum) or (ctx == "scaled" and isinstance(o, Compose)):
        return f"({s})"
    if ctx == "compose" and isinstance(o, Scaled):
        return f"({s})"
    return s


def zero_op() -> Op:
    return Sum(())


def qbracket(a: Op, b: Op, field: ScalarField, sign: int = 1) -> Op:
    """[a, b]_(q^sign) = a b - q^sign b a."""
    return Sum((Compose((a, b)), Scaled(-field.qpow(sign), Compose((b, a)))))


def commutator(a: Op, b: Op) -> Op:
    return Sum((Compose((a, b)), Scaled(-1, Compose((b, a)))))


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    ok: bool
    checked: int = 0
    counterexample: Optional[str] = None

    def __bool__(self):
        return self.ok

    @classmethod
    def combine(cls, results: Iterable["CheckResult"]) -> "CheckResult":
        total = 0
        for r in results:
            total += r.checked
            if not r.ok:
                return cls(False, total, r.counterexample)
        return cls(True, total)


def check_indices(kind: AlgebraKind, n: int, degree: int) -> List[MultiIndex]:
    """Basis multi-indices used for operator checks.

    Finite kinds use their whole basis, unbounded kinds all |b| <= degree.
    """
    if kind.bound is not None:
        return [tuple(a) for a in lat.box(n, kind.bound)]
    return list(lat.multi_indices_upto(n, degree))


def pair_indices(kind: AlgebraKind, n: int, degree: int) -> Iterator[Tuple[MultiIndex, MultiIndex]]:
    """Pairs of basis multi-indices with |a| + |b| <= degree (whole box for finite kinds)."""
    if kind.bound is not None:
        idx = check_indices(kind, n, degree)
        yield from product(idx, idx)
        return
    for s in range(degree + 1):
        for t in range(degree - s + 1):
            for a in lat.multi_indices(n, s):
                for b in lat.multi_indices(n, t):
                    yield a, b


def basis_element(kind: AlgebraKind, field: ScalarField, b: MultiIndex) -> Element:
    return Element(kind, field, len(b), {b: field.one}, check=False)


def ops_equal(a: Op, b: Op, kind: AlgebraKind, field: ScalarField, n: int, degree: int = 6) -> CheckResult:
    """Compare two operators on the test basis."""
    kind.validate(field)
    count = 0
    for beta in check_indices(kind, n, degree):
        v = basis_element(kind, field, beta)
        lhs, rhs = a.apply(v), b.apply(v)
        count += 1
        if lhs != rhs:
            return CheckResult(False, count, f"on x({','.join(map(str, beta))}): {lhs} != {rhs}")
    return CheckResult(True, count)


def is_zero_op(a: Op, kind: AlgebraKind, field: ScalarField, n: int, degree: int = 6) -> CheckResult:
    return ops_equal(a, zero_op(), kind, field, n, degree)


def check_twisted_derivation(d: Op, sigma_left: Op, tau_right: Op, kind: AlgebraKind, field: ScalarField,
                             n: int, degree_bound: int, full_box: bool = True) -> CheckResult:
    """Check d(ab) = sigma_left(a) d(b) + d(a) tau_right(b) on basis pairs.

    With ``full_box=False`` finite kinds are also cut at the degree bound.
    """
    kind.validate(field)
    count = 0
    pairs = pair_indices(kind, n, degree_bound)
    if not full_box:
        pairs = ((a, b) for a, b in pairs if sum(a) + sum(b) <= degree_bound)
    for al, be in pairs:
        a = basis_element(kind, field, al)
        b = basis_element(kind, field, be)
        lhs = d.apply(a * b)
        rhs = sigma_left.apply(a) * d.apply(b) + d.apply(a) * tau_right.apply(b)
        count += 1
        if lhs != rhs:
            return CheckResult(False, count, f"a = x({','.join(map(str, al))}), b = x({','.join(map(str, be))}): "
                                             f"{lhs} != {rhs}")
    return CheckResult(True, count)
