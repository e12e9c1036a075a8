"""Hopf structures built on the divided power algebras.

Two layers live here.

* The braided Hopf algebra on A_q itself: tensor squares multiply with the
  braiding psi(x (x) y) = theta(a, b) y (x) x, the coproduct makes every
  generator x_i primitive, and S(x_i) = -x_i.
* Presentations of the ordinary quantum groups D_q (two sign variants),
  frak A_q and frak U_q. Their generators are realized as primitive operators
  on A_q, and the Hopf axioms are checked by letting tensor legs act on
  tuples of basis monomials.

Words of generators are tuples of generator names written in the
mathematical order: the last letter acts first.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import lattice as lat
from .galg import AlgebraKind, Element, monomial_product, render_coefficient, render_monomial
from .lattice import MultiIndex
from .ops import Del, MulBy, Primitive, Sigma, ThetaOp, check_indices
from .qarith import Scalar, ScalarField
from .report import Report
from .weyl import rho

Word = Tuple[str, ...]
# a k-fold tensor of formal words: (w_1, ..., w_k) -> coefficient
Formal = Dict[Tuple[Word, ...], Scalar]


def _acc(d: dict, key, c: Scalar) -> None:
    v = d.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        d.pop(key, None)
    else:
        d[key] = v


def q_to_the_l_is_one(field: ScalarField) -> bool:
    """True when q is a root of unity of odd order l = char(q), i.e. q^l = 1."""
    return not field.is_generic and field.m % 2 == 1


# ---------------------------------------------------------------------------
# braided tensor square of A_q
# ---------------------------------------------------------------------------

def _braided_kind_ok(kind: AlgebraKind, field: ScalarField) -> None:
    if kind.name == "quantum_space":
        return
    if kind.name == "divided" and field.is_generic:
        return
    raise ValueError(
        f"braided Hopf structure is available for the quantum space at any q and for "
        f"divided powers at generic q; got {kind} over {field} (the ground field has "
        f"characteristic 0, so the restricted truncation is not a Hopf quotient)")


class BraidedTensorElement:
    """Element of A_q (x) A_q with the braided multiplication."""

    __slots__ = ("kind", "field", "n", "terms")

    def __init__(self, kind: AlgebraKind, field: ScalarField, n: int,
                 terms: Dict[Tuple[MultiIndex, MultiIndex], Scalar] = None):
        self.kind = kind
        self.field = field
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def simple(cls, a: Element, b: Element) -> "BraidedTensorElement":
        if a.kind != b.kind or a.field != b.field or a.n != b.n:
            raise ValueError("tensor legs must share kind, field and dimension")
        out: Dict = {}
        for x, c in a.terms.items():
            for y, d in b.terms.items():
                _acc(out, (x, y), c * d)
        return cls(a.kind, a.field, a.n, out)

    @classmethod
    def unit(cls, kind, field, n) -> "BraidedTensorElement":
        z = lat.zero(n)
        return cls(kind, field, n, {(z, z): field.one})

    def like(self, terms) -> "BraidedTensorElement":
        return BraidedTensorElement(self.kind, self.field, self.n, terms)

    def _same(self, other: "BraidedTensorElement") -> None:
        if (self.kind, self.field, self.n) != (other.kind, other.field, other.n):
            raise ValueError(f"kind mismatch: {self.kind}/{self.field}/{self.n} vs "
                             f"{other.kind}/{other.field}/{other.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, BraidedTensorElement):
            return NotImplemented
        return (self.kind, self.field, self.n) == (other.kind, other.field, other.n) and self.terms == other.terms

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return self.like(out)

    def __neg__(self):
        return self.like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BraidedTensorElement":
        c = c if isinstance(c, Scalar) else self.field.from_rational(c)
        return self.like({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BraidedTensorElement):
            return braided_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0][0]) + sum(kv[0][1]),
                                                                     tuple(-x for x in kv[0][0]))):
            cs = render_coefficient(c)
            body = f"{render_monomial(a)} (x) {render_monomial(b)}"
            parts.append(body if cs == "1" else f"-{body}" if cs == "-1" else f"{cs}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def braided_mul(u: BraidedTensorElement, v: BraidedTensorElement) -> BraidedTensorElement:
    """(a (x) b)(c (x) d) = theta(deg b, deg c) ac (x) bd, extended bilinearly."""
    u._same(v)
    kind, field = u.kind, u.field
    out: Dict = {}
    for (a, b), c1 in u.terms.items():
        for (c, d), c2 in v.terms.items():
            left = monomial_product(kind, field, a, c)
            if left is None:
                continue
            right = monomial_product(kind, field, b, d)
            if right is None:
                continue
            coeff = c1 * c2 * lat.theta(b, c, field) * left * right
            _acc(out, (lat.add(a, c), lat.add(b, d)), coeff)
    return u.like(out)


def braiding(t: BraidedTensorElement) -> BraidedTensorElement:
    """psi(x (x) y) = theta(deg x, deg y) y (x) x."""
    return t.like({(b, a): c * lat.theta(a, b, t.field) for (a, b), c in t.terms.items()})


_BRAIDED_DELTA: Dict[tuple, BraidedTensorElement] = {}


def _generator_delta(kind, field, i, n) -> BraidedTensorElement:
    e, z = lat.eps(i, n), lat.zero(n)
    return BraidedTensorElement(kind, field, n, {(e, z): field.one, (z, e): field.one})


def _monomial_delta(kind: AlgebraKind, field: ScalarField, a: MultiIndex) -> BraidedTensorElement:
    key = (kind, field, a)
    hit = _BRAIDED_DELTA.get(key)
    if hit is not None:
        return hit
    n = len(a)
    # x^(a) is the ordered product x_1^(a_1) ... x_n^(a_n), and x_i^(m) = x_i^m / [m]!
    # for divided powers at generic q (x_i^m itself for the quantum space)
    out = BraidedTensorElement.unit(kind, field, n)
    for i in range(1, n + 1):
        g = _generator_delta(kind, field, i, n)
        for _ in range(a[i - 1]):
            out = braided_mul(out, g)
        if kind.name == "divided":
            out = out.scale(field.qfact(a[i - 1]).inverse())
    _BRAIDED_DELTA[key] = out
    return out


def braided_coproduct(a: Element) -> BraidedTensorElement:
    """Delta(x_i) = x_i (x) 1 + 1 (x) x_i, extended as a map into the braided tensor square."""
    _braided_kind_ok(a.kind, a.field)
    out = BraidedTensorElement(a.kind, a.field, a.n)
    for m, c in a.terms.items():
        out = out + _monomial_delta(a.kind, a.field, m).scale(c)
    return out


def braided_counit(a: Element) -> Scalar:
    return a.coefficient(lat.zero(a.n))


_BRAIDED_S: Dict[tuple, Element] = {}


def _monomial_antipode(kind: AlgebraKind, field: ScalarField, a: MultiIndex) -> Element:
    key = (kind, field, a)
    hit = _BRAIDED_S.get(key)
    if hit is not None:
        return hit
    n = len(a)
    if not any(a):
        out = Element(kind, field, n, {a: field.one})
    else:
        # x^(a) = x_i x^(a - eps_i) / c with i the first nonzero axis,
        # then S(uv) = theta(deg u, deg v) S(v) S(u)
        i = next(k for k, v in enumerate(a) if v)
        e = lat.eps(i + 1, n)
        rest = lat.sub(a, e)
        c = monomial_product(kind, field, e, rest)
        s_x = Element(kind, field, n, {e: -field.one})
        out = (_monomial_antipode(kind, field, rest) * s_x).scale(lat.theta(e, rest, field) * c.inverse())
    _BRAIDED_S[key] = out
    return out


def braided_antipode(a: Element) -> Element:
    """S(x_i) = -x_i extended by S(ab) = theta(deg a, deg b) S(b) S(a)."""
    _braided_kind_ok(a.kind, a.field)
    out = Element.zero(a.kind, a.field, a.n)
    for m, c in a.terms.items():
        out = out + _monomial_antipode(a.kind, a.field, m).scale(c)
    return out


def _multiply_legs(t: BraidedTensorElement) -> Element:
    out: Dict = {}
    for (a, b), c in t.terms.items():
        r = monomial_product(t.kind, t.field, a, b)
        if r is not None:
            _acc(out, lat.add(a, b), c * r)
    return Element(t.kind, t.field, t.n, out)


def _mono(kind, field, a) -> Element:
    return Element(kind, field, len(a), {tuple(a): field.one})


def _fmt(*ms: MultiIndex) -> str:
    return " (x) ".join(render_monomial(m) for m in ms)


@dataclass
class _Count:
    ok: bool = True
    checked: int = 0
    counterexample: Optional[str] = None

    def fail(self, msg: str) -> "_Count":
        self.ok = False
        self.counterexample = msg
        return self


def verify_braided(kind: AlgebraKind, field: ScalarField, n: int, degree_bound: int = 4) -> Report:
    """Braided Hopf laws for A_q on monomials up to degree_bound."""
    _braided_kind_ok(kind, field)
    rep = Report(f"braided Hopf structure on A_q: {kind}, n={n}, q={field}, deg<={degree_bound}")
    idx = [tuple(a) for a in lat.multi_indices_upto(n, degree_bound)]
    z = lat.zero(n)

    def mult_assoc():
        res = _Count()
        small = [a for a in idx if sum(a) <= 2]
        gens = [(a, b) for a in small for b in small if sum(a) + sum(b) <= 2]
        for (a, b), (c, d), (e, f) in product(gens, repeat=3):
            res.checked += 1
            t = [BraidedTensorElement(kind, field, n, {p: field.one}) for p in ((a, b), (c, d), (e, f))]
            if braided_mul(braided_mul(t[0], t[1]), t[2]) != braided_mul(t[0], braided_mul(t[1], t[2])):
                return res.fail(f"({_fmt(a, b)})({_fmt(c, d)})({_fmt(e, f)})")
        return res

    def delta_mult():
        res = _Count()
        for a in idx:
            for b in idx:
                if sum(a) > 4 or sum(b) > 4:
                    continue
                res.checked += 1
                ua, ub = _mono(kind, field, a), _mono(kind, field, b)
                if braided_coproduct(ua * ub) != braided_mul(braided_coproduct(ua), braided_coproduct(ub)):
                    return res.fail(f"u = {render_monomial(a)}, v = {render_monomial(b)}")
        return res

    def coassoc():
        res = _Count()
        for a in idx:
            res.checked += 1
            d = braided_coproduct(_mono(kind, field, a))
            left: Dict = {}
            right: Dict = {}
            for (b, c), coef in d.terms.items():
                for (b1, b2), c1 in _monomial_delta(kind, field, b).terms.items():
                    _acc(left, (b1, b2, c), coef * c1)
                for (c1_, c2_), c2 in _monomial_delta(kind, field, c).terms.items():
                    _acc(right, (b, c1_, c2_), coef * c2)
            if left != right:
                return res.fail(f"on {render_monomial(a)}")
        return res

    def counit():
        res = _Count()
        for a in idx:
            res.checked += 1
            u = _mono(kind, field, a)
            d = braided_coproduct(u)
            lhs: Dict = {}
            rhs: Dict = {}
            for (b, c), coef in d.terms.items():
                if not any(b):
                    _acc(lhs, c, coef)
                if not any(c):
                    _acc(rhs, b, coef)
            if Element(kind, field, n, lhs) != u or Element(kind, field, n, rhs) != u:
                return res.fail(f"on {render_monomial(a)}")
        return res

    def antipode_law():
        res = _Count()
        for a in idx:
            res.checked += 1
            u = _mono(kind, field, a)
            d = braided_coproduct(u)
            expect = Element(kind, field, n, {z: field.one} if not any(a) else {})
            left = Element.zero(kind, field, n)
            right = Element.zero(kind, field, n)
            for (b, c), coef in d.terms.items():
                left = left + (braided_antipode(_mono(kind, field, b)) * _mono(kind, field, c)).scale(coef)
                right = right + (_mono(kind, field, b) * braided_antipode(_mono(kind, field, c))).scale(coef)
            if left != expect or right != expect:
                return res.fail(f"on {render_monomial(a)}: {left}, {right}")
        return res

    def antipode_anti():
        res = _Count()
        for a in idx:
            for b in idx:
                if sum(a) + sum(b) > degree_bound:
                    continue
                res.checked += 1
                ua, ub = _mono(kind, field, a), _mono(kind, field, b)
                lhs = braided_antipode(ua * ub)
                rhs = (braided_antipode(ub) * braided_antipode(ua)).scale(lat.theta(a, b, field))
                if lhs != rhs:
                    return res.fail(f"a = {render_monomial(a)}, b = {render_monomial(b)}")
        return res

    def braiding_laws():
        res = _Count()
        for a in idx:
            for b in idx:
                if sum(a) + sum(b) > degree_bound:
                    continue
                res.checked += 1
                t = BraidedTensorElement(kind, field, n, {(a, b): field.one})
                if braiding(braiding(t)) != t:
                    return res.fail(f"psi psi != id on {_fmt(a, b)}")
        # hexagons on triples, with psi acting on adjacent legs of a triple tensor
        for a, b, c in product(idx, repeat=3):
            if sum(a) + sum(b) + sum(c) > degree_bound:
                continue
            res.checked += 1
            th = lambda u, v: lat.theta(u, v, field)
            # psi_{U(x)V,W}(a (x) b (x) c) = theta(a+b, c) c (x) a (x) b
            lhs = th(lat.add(a, b), c)
            # (psi_{U,W} (x) id)(id (x) psi_{V,W})
            rhs = th(b, c) * th(a, c)
            if lhs != rhs:
                return res.fail(f"hexagon (U(x)V, W) on {_fmt(a, b, c)}")
            lhs = th(a, lat.add(b, c))
            rhs = th(a, b) * th(a, c)
            if lhs != rhs:
                return res.fail(f"hexagon (U, V(x)W) on {_fmt(a, b, c)}")
        return res

    def cocycle():
        res = _Count()
        for a, b, c in product(idx, repeat=3):
            if sum(a) + sum(b) + sum(c) > degree_bound:
                continue
            res.checked += 1
            # associativity of the braided tensor algebra needs this identity
            if lat.theta(a, b, field) * lat.theta(lat.add(a, b), c, field) != \
                    lat.theta(b, c, field) * lat.theta(a, lat.add(b, c), field):
                return res.fail(f"theta cocycle on {_fmt(a, b, c)}")
        return res

    rep.add("braided tensor multiplication is associative", "braided tensor algebra", mult_assoc())
    rep.add("theta is a 2-cocycle", "bicharacter cocycle identity", cocycle())
    rep.add("Delta is braided-multiplicative", "quantum n-space braided Hopf algebra", delta_mult())
    rep.add("coassociativity", "braided Hopf algebra axioms", coassoc())
    rep.add("counit law", "braided Hopf algebra axioms", counit())
    rep.add("antipode convolution law", "braided Hopf algebra axioms", antipode_law())
    rep.add("S(ab) = theta(a,b) S(b) S(a)", "braided antipode rule", antipode_anti())
    rep.add("braiding is involutive and satisfies the hexagons", "braiding axioms", braiding_laws())
    return rep


# ---------------------------------------------------------------------------
# quantum group presentations realized by operators
# ---------------------------------------------------------------------------

@dataclass
class HopfPresentation:
    """Generators realized as primitive operators, with Hopf structure maps on generators."""

    name: str
    n: int
    field: ScalarField
    kind: AlgebraKind
    generators: Dict[str, Primitive]
    coproduct: Dict[str, List[Tuple[Scalar, Word, Word]]]
    counit: Dict[str, int]
    antipode: Dict[str, List[Tuple[Scalar, Word]]]
    relations: List[Tuple[str, Formal]] = dc_field(default_factory=list)
    auxiliary: Dict[str, Primitive] = dc_field(default_factory=dict)
    _word_cache: Dict = dc_field(default_factory=dict, repr=False)
    _delta_cache: Dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.kind.validate(self.field)
        for g in self.generators:
            for table, what in ((self.coproduct, "coproduct"), (self.counit, "counit"), (self.antipode, "antipode")):
                if g not in table:
                    raise ValueError(f"generator {g} has no {what} rule")
        for table in (self.coproduct, self.counit, self.antipode):
            extra = set(table) - set(self.generators)
            if extra:
                raise ValueError(f"rules given for unknown generators {sorted(extra)}")

    # formal calculus ---------------------------------------------------

    def word_mono(self, word: Word, b: MultiIndex) -> Optional[Tuple[MultiIndex, Scalar]]:
        """Action of a word on x^(b): (target, coefficient) or None for zero."""
        key = (word, b)
        cache = self._word_cache
        if key in cache:
            return cache[key]
        if not word:
            r = (b, self.field.one)
        else:
            inner = self.word_mono(word[1:], b)
            if inner is None:
                r = None
            else:
                op = self.generators.get(word[0]) or self.auxiliary[word[0]]
                step = op.mono(self.kind, self.field, inner[0])
                r = None if step is None else (step[0], inner[1] * step[1])
        cache[key] = r
        return r

    def delta_word(self, word: Word) -> Formal:
        hit = self._delta_cache.get(word)
        if hit is not None:
            return hit
        out: Formal = {((), ()): self.field.one}
        for letter in word:
            nxt: Formal = {}
            for (u1, u2), c in out.items():
                for d, w1, w2 in self.coproduct[letter]:
                    _acc(nxt, (u1 + w1, u2 + w2), c * d)
            out = nxt
        self._delta_cache[word] = out
        return out

    def antipode_word(self, word: Word) -> Formal:
        out: Formal = {((),): self.field.one}
        for letter in word:
            nxt: Formal = {}
            for (u,), c in out.items():
                for d, w in self.antipode[letter]:
                    _acc(nxt, (w + u,), c * d)
            out = nxt
        return out

    def counit_word(self, word: Word) -> Scalar:
        v = self.field.one
        for letter in word:
            e = self.counit[letter]
            if e == 0:
                return self.field.zero
            v = v * e
        return v

    def apply_delta(self, t: Formal, leg: int) -> Formal:
        out: Formal = {}
        for key, c in t.items():
            for (w1, w2), d in self.delta_word(key[leg]).items():
                _acc(out, key[:leg] + (w1, w2) + key[leg + 1:], c * d)
        return out

    def apply_counit(self, t: Formal, leg: int) -> Formal:
        out: Formal = {}
        for key, c in t.items():
            e = self.counit_word(key[leg])
            if not e.is_zero():
                _acc(out, key[:leg] + key[leg + 1:], c * e)
        return out

    def apply_antipode(self, t: Formal, leg: int) -> Formal:
        out: Formal = {}
        for key, c in t.items():
            for (w,), d in self.antipode_word(key[leg]).items():
                _acc(out, key[:leg] + (w,) + key[leg + 1:], c * d)
        return out

    def multiply(self, t: Formal) -> Formal:
        """m: concatenate the first two legs."""
        out: Formal = {}
        for key, c in t.items():
            _acc(out, (key[0] + key[1],) + key[2:], c)
        return out

    def evaluate(self, t: Formal, bs: Sequence[MultiIndex]) -> Dict[Tuple[MultiIndex, ...], Scalar]:
        """Action of a k-fold tensor on x^(b_1) (x) ... (x) x^(b_k)."""
        out: Dict = {}
        for key, c in t.items():
            coeff = c
            targets = []
            for w, b in zip(key, bs):
                r = self.word_mono(w, b)
                if r is None:
                    break
                targets.append(r[0])
                coeff = coeff * r[1]
            else:
                _acc(out, tuple(targets), coeff)
        return out

    def generator_formal(self, g: str) -> Formal:
        return {((g,),): self.field.one}

    def render_formal(self, t: Formal) -> str:
        if not t:
            return "0"
        parts = []
        for key, c in t.items():
            legs = " (x) ".join(" ".join(w) if w else "1" for w in key)
            cs = render_coefficient(c)
            parts.append(legs if cs == "1" else f"{cs}*{legs}")
        return " + ".join(parts)


def _word(*names) -> Word:
    return tuple(names)


def _relation(field: ScalarField, lhs: Iterable[Tuple[object, Word]], rhs: Iterable[Tuple[object, Word]]) -> Formal:
    out: Formal = {}
    for c, w in lhs:
        _acc(out, (w,), c if isinstance(c, Scalar) else field.from_rational(c))
    for c, w in rhs:
        _acc(out, (w,), -(c if isinstance(c, Scalar) else field.from_rational(c)))
    return out


def _label(lhs: Sequence[Tuple[object, Word]], rhs: Sequence[Tuple[object, Word]]) -> str:
    def side(terms):
        out = []
        for c, w in terms:
            body = " ".join(w) if w else "1"
            cs = c if isinstance(c, str) else render_coefficient(c) if isinstance(c, Scalar) else str(c)
            out.append(body if cs == "1" else f"{cs}*{body}")
        return " + ".join(out) if out else "0"
    return f"{side(lhs)} = {side(rhs)}"


class _Builder:
    """Collects generators, rules and relations for one presentation."""

    def __init__(self, n: int, field: ScalarField):
        self.n = n
        self.F = field
        self.gens: Dict[str, Primitive] = {}
        self.delta: Dict[str, list] = {}
        self.eps: Dict[str, int] = {}
        self.S: Dict[str, list] = {}
        self.rels: List[Tuple[str, Formal]] = []

    def gen(self, op: Primitive) -> str:
        name = str(op)
        self.gens[name] = op
        return name

    def group_like(self, g: str, inv: str) -> None:
        one = self.F.one
        self.delta[g] = [(one, (g,), (g,))]
        self.eps[g] = 1
        self.S[g] = [(one, (inv,))]

    def rel(self, lhs, rhs) -> None:
        self.rels.append((_label(lhs, rhs), _relation(self.F, lhs, rhs)))

    def build(self, name: str, kind: AlgebraKind) -> HopfPresentation:
        return HopfPresentation(name, self.n, self.F, kind, self.gens, self.delta, self.eps, self.S, self.rels)

    # common pieces -----------------------------------------------------

    def thetas(self) -> Tuple[List[str], List[str]]:
        n = self.n
        t = [self.gen(ThetaOp(lat.eps(i, n))) for i in range(1, n + 1)]
        ti = [self.gen(ThetaOp(lat.neg(lat.eps(i, n)))) for i in range(1, n + 1)]
        for a, b in zip(t, ti):
            self.group_like(a, b)
            self.group_like(b, a)
        for i in range(n):
            self.rel([(1, _word(t[i], ti[i]))], [(1, ())])
            self.rel([(1, _word(ti[i], t[i]))], [(1, ())])
            for j in range(i + 1, n):
                self.rel([(1, _word(t[i], t[j]))], [(1, _word(t[j], t[i]))])
        return t, ti

    def sigmas(self, t: List[str], ti: List[str]) -> Tuple[List[str], List[str]]:
        n = self.n
        s = [self.gen(Sigma(i, 1)) for i in range(1, n + 1)]
        si = [self.gen(Sigma(i, -1)) for i in range(1, n + 1)]
        for a, b in zip(s, si):
            self.group_like(a, b)
            self.group_like(b, a)
        for i in range(n):
            self.rel([(1, _word(s[i], si[i]))], [(1, ())])
            self.rel([(1, _word(si[i], s[i]))], [(1, ())])
            for j in range(i + 1, n):
                self.rel([(1, _word(s[i], s[j]))], [(1, _word(s[j], s[i]))])
            for j in range(n):
                self.rel([(1, _word(s[i], t[j]))], [(1, _word(t[j], s[i]))])
            if i + 1 < n:
                # Theta(-eps_i + eps_(i+1)) = sigma_i sigma_(i+1)
                self.rel([(1, _word(ti[i], t[i + 1]))], [(1, _word(s[i], s[i + 1]))])
        return s, si


def default_kind(field: ScalarField) -> AlgebraKind:
    """Divided powers at generic q, the restricted truncation at a root of unity."""
    if field.is_generic:
        return AlgebraKind.divided()
    return AlgebraKind.restricted(field.char_q())


def dq_presentation(n: int, field: ScalarField, variant: int = 1, kind: AlgebraKind = None) -> HopfPresentation:
    """D_q with Delta^(+) (variant=+1) or Delta^(-) (variant=-1)."""
    if variant not in (1, -1):
        raise ValueError("variant must be +1 or -1")
    kind = kind or default_kind(field)
    b = _Builder(n, field)
    F = field
    t, ti = b.thetas()
    s, si = b.sigmas(t, ti)
    d = [b.gen(Del(i)) for i in range(1, n + 1)]
    for i in range(n):
        # Delta(d_i) = d_i (x) sigma_i^-v + Theta(-eps_i) sigma_i^v (x) d_i
        toward = si[i] if variant == 1 else s[i]
        away = s[i] if variant == 1 else si[i]
        b.delta[d[i]] = [(F.one, (d[i],), (toward,)), (F.one, (ti[i], away), (d[i],))]
        b.eps[d[i]] = 0
        b.S[d[i]] = [(-F.qpow(variant), (t[i], d[i]))]
    for i in range(n):
        ei = lat.eps(i + 1, n)
        for j in range(n):
            ej = lat.eps(j + 1, n)
            b.rel([(1, _word(t[j], d[i], ti[j]))], [(lat.theta(ei, ej, F), _word(d[i]))])
            b.rel([(1, _word(s[j], d[i], si[j]))], [(F.qpow(-1 if i == j else 0), _word(d[i]))])
            if i < j:
                b.rel([(1, _word(d[i], d[j]))], [(lat.theta(ei, ej, F), _word(d[j], d[i]))])
    return b.build("dq+" if variant == 1 else "dq-", kind)


def frak_aq_presentation(n: int, field: ScalarField, kind: AlgebraKind = None) -> HopfPresentation:
    """frak A_q: A_q with the group Theta adjoined.

    In the divided kind with q^l = 1 the generators x_i^(l) are included.
    """
    kind = kind or default_kind(field)
    b = _Builder(n, field)
    F = field
    t, ti = b.thetas()
    x = [b.gen(MulBy(lat.eps(i, n))) for i in range(1, n + 1)]
    for i in range(n):
        b.delta[x[i]] = [(F.one, (x[i],), ()), (F.one, (t[i],), (x[i],))]
        b.eps[x[i]] = 0
        b.S[x[i]] = [(-F.one, (ti[i], x[i]))]
    for i in range(n):
        ei = lat.eps(i + 1, n)
        for j in range(n):
            ej = lat.eps(j + 1, n)
            b.rel([(1, _word(t[j], x[i], ti[j]))], [(lat.theta(ej, ei, F), _word(x[i]))])
            if i < j:
                b.rel([(1, _word(x[i], x[j]))], [(lat.theta(ei, ej, F), _word(x[j], x[i]))])
    if kind.name == "divided" and q_to_the_l_is_one(field):
        l = field.char_q()
        xl = [b.gen(MulBy(lat.scale(l, lat.eps(i, n)))) for i in range(1, n + 1)]
        for i in range(n):
            b.delta[xl[i]] = [(F.one, (xl[i],), ()), (F.one, (), (xl[i],))]
            b.eps[xl[i]] = 0
            b.S[xl[i]] = [(-F.one, (xl[i],))]
        for i in range(n):
            for j in range(n):
                b.rel([(1, _word(t[j], xl[i], ti[j]))], [(1, _word(xl[i]))])
                b.rel([(1, _word(x[i], xl[j]))], [(1, _word(xl[j], x[i]))])
    return b.build("frak_aq", kind)


def frak_uq_presentation(n: int, field: ScalarField, kind: AlgebraKind = None) -> HopfPresentation:
    """frak U_q: the quantum group of the quantum n-space."""
    kind = kind or default_kind(field)
    b = _Builder(n, field)
    F = field
    t, ti = b.thetas()
    s, si = b.sigmas(t, ti)
    x = [b.gen(MulBy(lat.eps(i, n))) for i in range(1, n + 1)]
    for i in range(n):
        b.delta[x[i]] = [(F.one, (x[i],), (s[i],)), (F.one, (t[i], si[i]), (x[i],))]
        b.eps[x[i]] = 0
        b.S[x[i]] = [(-F.q, (ti[i], x[i]))]
    if q_to_the_l_is_one(field):
        l = field.char_q()
        for i in range(n):
            b.rel([(1, (t[i],) * l)], [(1, ())])
            b.rel([(1, (s[i],) * l)], [(1, ())])
    for i in range(n):
        ei = lat.eps(i + 1, n)
        for j in range(n):
            ej = lat.eps(j + 1, n)
            b.rel([(1, _word(t[i], x[j], ti[i]))], [(lat.theta(ei, ej, F), _word(x[j]))])
            b.rel([(1, _word(s[i], x[j], si[i]))], [(F.qpow(1 if i == j else 0), _word(x[j]))])
            if i < j:
                b.rel([(1, _word(x[i], x[j]))], [(lat.theta(ei, ej, F), _word(x[j], x[i]))])
    return b.build("frak_uq", kind)


PRESENTATIONS = ("dq+", "dq-", "frak_aq", "frak_uq", "braided")


def presentation(name: str, n: int, field: ScalarField, kind: AlgebraKind = None) -> HopfPresentation:
    if name == "dq+":
        return dq_presentation(n, field, 1, kind)
    if name == "dq-":
        return dq_presentation(n, field, -1, kind)
    if name == "frak_aq":
        return frak_aq_presentation(n, field, kind)
    if name == "frak_uq":
        return frak_uq_presentation(n, field, kind)
    raise ValueError(f"unknown presentation {name!r}; expected one of {', '.join(PRESENTATIONS)}")


def _tuples(kind: AlgebraKind, n: int, k: int, degree: int) -> List[Tuple[MultiIndex, ...]]:
    singles = [b for b in check_indices(kind, n, degree) if sum(b) <= degree]
    singles.sort(key=sum)
    out: List[Tuple[MultiIndex, ...]] = [()]
    for _ in range(k):
        nxt = []
        for t in out:
            used = sum(sum(b) for b in t)
            for b in singles:
                if used + sum(b) > degree:
                    break
                nxt.append(t + (b,))
        out = nxt
    return out


def _fmt_tuple(bs) -> str:
    return " (x) ".join(render_monomial(b) for b in bs)


def _compare(p: HopfPresentation, lhs: Formal, rhs: Formal, tuples, what: str, res: _Count) -> bool:
    for bs in tuples:
        res.checked += 1
        a = p.evaluate(lhs, bs)
        b = p.evaluate(rhs, bs)
        if a != b:
            res.fail(f"{what} on {_fmt_tuple(bs)}")
            return False
    return True


def verify_hopf(p: HopfPresentation, degree_bound: int = 5) -> Report:
    """Check the Hopf axioms of a presentation in its operator representation."""
    F, n, kind = p.field, p.n, p.kind
    rep = Report(f"Hopf axioms for {p.name}: n={n}, q={F}, acting on {kind}, deg<={degree_bound}")
    singles = [(b,) for b in check_indices(kind, n, degree_bound)]
    pairs = _tuples(kind, n, 2, degree_bound)
    triples = _tuples(kind, n, 3, degree_bound)
    zero: Formal = {}

    res = _Count()
    for label, r in p.relations:
        if not _compare(p, r, zero, singles, f"relation {label}", res):
            break
    rep.add("defining relations hold in the representation", f"{p.name} defining relations", res)

    res = _Count()
    for label, r in p.relations:
        d = {}
        for (w,), c in r.items():
            for k2, c2 in p.delta_word(w).items():
                _acc(d, k2, c * c2)
        if not _compare(p, d, zero, pairs, f"Delta({label})", res):
            break
    rep.add("Delta preserves the defining relations", f"{p.name} coproduct is an algebra map", res)

    res = _Count()
    for label, r in p.relations:
        if not _compare(p, p.apply_antipode(r, 0), zero, singles, f"S({label})", res):
            break
    rep.add("S preserves the defining relations", f"{p.name} antipode is an anti-algebra map", res)

    res = _Count()
    for g in p.generators:
        d = p.apply_delta(p.generator_formal(g), 0)
        if not _compare(p, p.apply_delta(d, 0), p.apply_delta(d, 1), triples, f"coassociativity at {g}", res):
            break
    rep.add("coassociativity on generators", f"{p.name} coproduct", res)

    res = _Count()
    for g in p.generators:
        d = p.apply_delta(p.generator_formal(g), 0)
        gf = p.generator_formal(g)
        if not _compare(p, p.apply_counit(d, 0), gf, singles, f"(eps (x) 1) Delta({g})", res):
            break
        if not _compare(p, p.apply_counit(d, 1), gf, singles, f"(1 (x) eps) Delta({g})", res):
            break
    rep.add("counit law on generators", f"{p.name} counit", res)

    res = _Count()
    for g in p.generators:
        d = p.apply_delta(p.generator_formal(g), 0)
        e = p.counit[g]
        unit: Formal = {((),): F.from_rational(e)} if e else {}
        if not _compare(p, p.multiply(p.apply_antipode(d, 0)), unit, singles, f"m(S (x) 1) Delta({g})", res):
            break
        if not _compare(p, p.multiply(p.apply_antipode(d, 1)), unit, singles, f"m(1 (x) S) Delta({g})", res):
            break
    rep.add("antipode convolution law on generators", f"{p.name} antipode", res)

    if p.name == "frak_aq":
        rep.add("ad x vanishes on A_q", "frak A_q adjoint action remark", adjoint_vanishes(p, degree_bound))
    return rep


def adjoint_action(p: HopfPresentation, g: str, target: Primitive) -> Formal:
    """ad g (b) = g_1 b S(g_2) with b a primitive operator on A_q."""
    name = f"<{target}>"
    p.auxiliary[name] = target
    out: Formal = {}
    for (w1, w2), c in p.delta_word((g,)).items():
        for (s2,), d in p.antipode_word(w2).items():
            _acc(out, (w1 + (name,) + s2,), c * d)
    return out


def adjoint_vanishes(p: HopfPresentation, degree_bound: int) -> _Count:
    res = _Count()
    singles = [(b,) for b in check_indices(p.kind, p.n, degree_bound)]
    gammas = [b for (b,) in singles if sum(b) <= degree_bound]
    xs = [g for g, op in p.generators.items() if isinstance(op, MulBy)]
    for g in xs:
        for gamma in gammas:
            if not _compare(p, adjoint_action(p, g, MulBy(gamma)), {}, singles,
                            f"ad {g} (x({','.join(map(str, gamma))}))", res):
                return res
    return res


# ---------------------------------------------------------------------------
# abstract frak U_q: ordered monomials x^a Theta(t eps_1) sigma^nu
# ---------------------------------------------------------------------------

UKey = Tuple[MultiIndex, int, MultiIndex]


class UqNormalForm:
    """Multiplication in frak U_q on the spanning set x^a Theta(t eps_1) sigma^nu.

    x^a is the ordered monomial x_1^a_1 ... x_n^a_n, so x^a x^b = q^(a*b) x^(a+b).
    Every Theta(mu) is rewritten as Theta(|mu| eps_1) sigma^rho(mu) using
    Theta(-eps_i + eps_(i+1)) = sigma_i sigma_(i+1). When q^l = 1 the relations
    Theta(l eps_i) = 1 = sigma_i^l reduce t and nu modulo l.
    """

    def __init__(self, n: int, field: ScalarField):
        self.n = n
        self.field = field
        self.l = field.char_q() if q_to_the_l_is_one(field) else 0

    def key(self, a: MultiIndex, mu: MultiIndex, nu: MultiIndex) -> UKey:
        r = rho(mu)
        t = sum(mu)
        nu = lat.add(nu, r)
        if self.l:
            t %= self.l
            nu = tuple(v % self.l for v in nu)
        return (tuple(a), t, nu)

    def _group_char(self, t: int, nu: MultiIndex, b: MultiIndex) -> Scalar:
        # (Theta(t eps_1) sigma^nu) x^b = chi x^b (Theta(t eps_1) sigma^nu)
        e1 = lat.scale(t, lat.eps(1, self.n))
        return self.field.qpow(lat.theta_exponent(e1, b) + lat.inner(nu, b))

    def mul_keys(self, k1: UKey, k2: UKey) -> Tuple[Scalar, UKey]:
        a, t1, nu1 = k1
        b, t2, nu2 = k2
        c = self._group_char(t1, nu1, b) * self.field.qpow(lat.star(a, b))
        z = lat.zero(self.n)
        key = self.key(lat.add(a, b), lat.scale(t1 + t2, lat.eps(1, self.n)), lat.add(nu1, nu2))
        return c, key

    def mul(self, u: Dict[UKey, Scalar], v: Dict[UKey, Scalar]) -> Dict[UKey, Scalar]:
        out: Dict = {}
        for k1, c1 in u.items():
            for k2, c2 in v.items():
                c, k = self.mul_keys(k1, k2)
                _acc(out, k, c1 * c2 * c)
        return out

    def tmul(self, u: Dict, v: Dict) -> Dict:
        """Componentwise product in the ordinary tensor square."""
        out: Dict = {}
        for (a1, a2), c1 in u.items():
            for (b1, b2), c2 in v.items():
                ca, ka = self.mul_keys(a1, b1)
                cb, kb = self.mul_keys(a2, b2)
                _acc(out, (ka, kb), c1 * c2 * ca * cb)
        return out

    # generators ----------------------------------------------------------

    def element(self, a=None, mu=None, nu=None, coeff=None) -> Dict[UKey, Scalar]:
        z = lat.zero(self.n)
        k = self.key(a or z, mu or z, nu or z)
        return {k: coeff if coeff is not None else self.field.one}

    def x(self, i: int, m: int = 1):
        return self.element(a=lat.scale(m, lat.eps(i, self.n)))

    def sigma(self, i: int, k: int = 1):
        return self.element(nu=lat.scale(k, lat.eps(i, self.n)))

    def theta(self, mu: MultiIndex):
        return self.element(mu=mu)

    def one(self):
        return self.element()

    def power(self, u, m: int, mul=None):
        mul = mul or self.mul
        out = u
        for _ in range(m - 1):
            out = mul(out, u)
        return out

    def delta_x(self, i: int) -> Dict:
        """Delta(x_i) = x_i (x) sigma_i + Theta(eps_i) sigma_i^-1 (x) x_i."""
        n = self.n
        e = lat.eps(i, n)
        z = lat.zero(n)
        one = self.field.one
        out: Dict = {}
        _acc(out, (self.key(e, z, z), self.key(z, z, e)), one)
        _acc(out, (self.key(z, e, lat.neg(e)), self.key(e, z, z)), one)
        return out

    def antipode_x(self, i: int) -> Dict[UKey, Scalar]:
        """S(x_i) = -q Theta(-eps_i) x_i."""
        e = lat.eps(i, self.n)
        return self.mul(self.element(mu=lat.neg(e), coeff=-self.field.q), self.x(i))

    def render(self, k: UKey) -> str:
        a, t, nu = k
        parts = []
        for i, v in enumerate(a, 1):
            if v:
                parts.append(f"x{i}" + (f"^{v}" if v != 1 else ""))
        if t:
            parts.append("th1" + (f"^{t}" if t != 1 else ""))
        for i, v in enumerate(nu, 1):
            if v:
                parts.append(f"s{i}" + (f"^{v}" if v != 1 else ""))
        return " ".join(parts) if parts else "1"

    def render_tensor(self, t: Dict) -> str:
        if not t:
            return "0"
        parts = []
        for (k1, k2), c in t.items():
            cs = render_coefficient(c)
            body = f"{self.render(k1)} (x) {self.render(k2)}"
            parts.append(body if cs == "1" else f"{cs}*{body}")
        return " + ".join(parts)


def qbinomial_coproduct_expansion(i: int, m: int, n: int, field: ScalarField) -> Dict:
    """sum_k [m,k] x_i^(m-k) Theta(eps_i)^k sigma_i^-k (x) x_i^k sigma_i^(m-k) in frak U_q (x) frak U_q.

    The result is checked against Delta(x_i)^m computed by multiplying in
    the tensor square; a mismatch raises ArithmeticError.
    """
    if m < 1:
        raise ValueError("m must be positive")
    U = UqNormalForm(n, field)
    e = lat.eps(i, n)
    z = lat.zero(n)
    out: Dict = {}
    for k in range(m + 1):
        c = field.qbinom(m, k)
        if c.is_zero():
            continue
        left = U.key(lat.scale(m - k, e), lat.scale(k, e), lat.scale(-k, e))
        right = U.key(lat.scale(k, e), z, lat.scale(m - k, e))
        _acc(out, (left, right), c)
    direct = U.power(U.delta_x(i), m, U.tmul)
    if direct != out:
        raise ArithmeticError(f"Delta(x_{i}^{m}): {U.render_tensor(direct)} != {U.render_tensor(out)}")
    return out


def verify_uq_power_laws(n: int, field: ScalarField, max_power: int = None) -> Report:
    """The q-binomial coproduct of x_i^m and, at odd l, the Hopf structure on x_i^l."""
    rep = Report(f"frak U_q powers of x_i: n={n}, q={field}")
    U = UqNormalForm(n, field)
    top = max_power or (max(field.char_q(), 2) + 1 if not field.is_generic else 5)

    def expansion():
        res = _Count()
        for i in range(1, n + 1):
            for m in range(1, top + 1):
                res.checked += 1
                qbinomial_coproduct_expansion(i, m, n, field)
        return res

    rep.run("Delta(x_i^m) is the q-binomial sum", "frak U_q coproduct of powers", expansion)
    if field.is_generic:
        return rep
    l = field.char_q()
    if q_to_the_l_is_one(field):
        def collapse():
            res = _Count()
            for i in range(1, n + 1):
                res.checked += 1
                d = qbinomial_coproduct_expansion(i, l, n, field)
                xl = next(iter(U.x(i, l)))
                one = next(iter(U.one()))
                expect = {(xl, one): field.one, (one, xl): field.one}
                if d != expect:
                    return res.fail(f"Delta(x_{i}^{l}) = {U.render_tensor(d)}")
                s = U.power(U.antipode_x(i), l)
                if s != {xl: -field.one}:
                    return res.fail(f"S(x_{i}^{l}) = {s}")
            return res

        def central():
            res = _Count()
            for i in range(1, n + 1):
                xl = U.x(i, l)
                for j in range(1, n + 1):
                    e = lat.eps(j, n)
                    for g in (U.x(j), U.sigma(j), U.sigma(j, -1), U.theta(e), U.theta(lat.neg(e))):
                        res.checked += 1
                        if U.mul(xl, g) != U.mul(g, xl):
                            return res.fail(f"x_{i}^{l} does not commute with generator {j}")
            return res

        rep.add("Delta(x_i^l) = x_i^l (x) 1 + 1 (x) x_i^l and S(x_i^l) = -x_i^l",
                "frak U_q restricted to the central subalgebra", collapse())
        rep.add("x_i^l is central", "frak U_q central subalgebra", central())
    else:
        terms = []
        for i in range(1, n + 1):
            d = U.power(U.delta_x(i), l, U.tmul)
            terms.append(f"Delta(x_{i}^{l}) = {U.render_tensor(d)}")
        rep.record("Delta(x_i^l) at q^l != 1", "frak U_q central subalgebra (odd l only)",
                   "; ".join(terms))
    return rep
