"""Normal ordering in the quantum Weyl algebra.

Elements are linear combinations of normal words

    x^(a) Theta(t eps_1) sigma^nu d_1^b1 ... d_n^bn

read as operators (the rightmost factor acts first). A word is rewritten with
the commutation rules of the smash product A_q # D_q for one sign variant
(+1 or -1):

    Theta(mu) x^(a)   = theta(mu, a) x^(a) Theta(mu)
    sigma^nu x^(a)    = q^(nu.a) x^(a) sigma^nu
    d_i x^(a)         = q^(-eps_i*a) x^(a - eps_i) sigma_i^(-v)
                        + theta(-eps_i, a) q^(v a_i) x^(a) d_i
    d_i Theta(mu)     = theta(mu, eps_i) Theta(mu) d_i
    d_i sigma^nu      = q^(nu_i) sigma^nu d_i
    d_i d_j           = q d_j d_i                      (i > j)
    Theta(eps_k)      = Theta(eps_1) sigma_1 sigma_2^2 ... sigma_(k-1)^2 sigma_k

together with merging of adjacent x, Theta and sigma letters. The last rule
is the relation Theta(-eps_i + eps_(i+1)) = sigma_i sigma_(i+1) used to make
Theta canonical. Both variants hold in the representation on A_q, but each
engine only uses its own sign, so x_i d_i stays a normal word.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import lattice as lat
from .galg import AlgebraKind, Element, monomial_product
from .lattice import MultiIndex
from .ops import (CheckResult, Compose, Del, Identity, MulBy, MonomialMap, Named, Op, Primitive, Scaled, Sigma,
                  Sum, ThetaOp, check_indices)
from .qarith import Scalar, ScalarField

Letter = Tuple[str, object]
Key = Tuple[MultiIndex, MultiIndex, MultiIndex, MultiIndex]

_RANK = {"X": 0, "T": 1, "S": 2, "D": 3}


def rho(mu: Sequence[int]) -> MultiIndex:
    """sigma exponent with Theta(mu) = Theta(|mu| eps_1) sigma^rho(mu)."""
    n = len(mu)
    out = [0] * n
    for k in range(1, n):  # 0-based axis k is eps_(k+1)
        m = mu[k]
        if m:
            out[0] += m
            for j in range(1, k):
                out[j] += 2 * m
            out[k] += m
    return tuple(out)


class WeylEngine:
    """Rewriting engine for one dimension, field, algebra kind and sign variant."""

    def __init__(self, n: int, field: ScalarField, variant: int = 1, kind: AlgebraKind = None):
        if variant not in (1, -1):
            raise ValueError("variant must be +1 or -1")
        kind = kind or AlgebraKind.divided()
        if kind.name not in ("divided", "restricted"):
            raise ValueError("the Weyl algebra acts on divided power algebras only")
        kind.validate(field)
        self.n = n
        self.field = field
        self.variant = variant
        self.kind = kind
        self._zero = lat.zero(n)
        self._action_cache: Dict[Tuple[Key, MultiIndex], Optional[Tuple[MultiIndex, Scalar]]] = {}

    # letters -----------------------------------------------------------

    def letter_of(self, p: Primitive) -> Letter:
        n = self.n
        if isinstance(p, Sigma):
            return ("S", lat.scale(p.k, lat.eps(p.i, n)))
        if isinstance(p, Del):
            lat.eps(p.i, n)
            return ("D", p.i)
        if isinstance(p, ThetaOp):
            if len(p.a) != n:
                raise ValueError("Theta index has wrong dimension")
            return ("T", tuple(p.a))
        if isinstance(p, MulBy):
            if len(p.a) != n or not self.kind.admits(p.a):
                raise ValueError(f"x({p.a}) is not in the algebra")
            return ("X", tuple(p.a))
        raise ValueError(f"operator {p} is not a Weyl algebra generator")

    def key_letters(self, key: Key) -> List[Letter]:
        a, mu, nu, b = key
        out: List[Letter] = []
        if any(a):
            out.append(("X", a))
        if any(mu):
            out.append(("T", mu))
        if any(nu):
            out.append(("S", nu))
        for i, bi in enumerate(b):
            out.extend([("D", i + 1)] * bi)
        return out

    def _key(self, letters: Sequence[Letter]) -> Key:
        a = mu = nu = self._zero
        b = [0] * self.n
        for kind, v in letters:
            if kind == "X":
                a = v
            elif kind == "T":
                mu = v
            elif kind == "S":
                nu = v
            else:
                b[v - 1] += 1
        return a, mu, nu, tuple(b)

    # rewriting ---------------------------------------------------------

    def _single(self, w: Sequence[Letter], p: int):
        kind, v = w[p]
        if kind == "D":
            return None
        if not any(v):
            return [(self.field.one, w[:p] + w[p + 1:])]
        if kind == "T" and any(v[1:]):
            t = sum(v)
            new: List[Letter] = []
            if t:
                new.append(("T", (t,) + (0,) * (self.n - 1)))
            new.append(("S", rho(v)))
            return [(self.field.one, w[:p] + tuple(new) + w[p + 1:])]
        return None

    def _pair(self, w: Sequence[Letter], p: int):
        (ka, va), (kb, vb) = w[p], w[p + 1]
        ra, rb = _RANK[ka], _RANK[kb]
        f = self.field
        head, tail = w[:p], w[p + 2:]
        if ra < rb:
            return None
        if ra == rb:
            if ka == "D":
                if va > vb:
                    return [(f.q, head + (w[p + 1], w[p]) + tail)]
                return None
            if ka == "X":
                c = monomial_product(self.kind, f, va, vb)
                if c is None:
                    return []
                return [(c, head + (("X", lat.add(va, vb)),) + tail)]
            return [(f.one, head + ((ka, lat.add(va, vb)),) + tail)]
        # ra > rb: move the right letter leftwards
        if ka == "T":  # kb == X
            return [(lat.theta(va, vb, f), head + (w[p + 1], w[p]) + tail)]
        if ka == "S":
            if kb == "X":
                return [(f.qpow(lat.inner(va, vb)), head + (w[p + 1], w[p]) + tail)]
            return [(f.one, head + (w[p + 1], w[p]) + tail)]
        # ka == "D"
        i = va
        e_i = lat.eps(i, self.n)
        if kb == "X":
            a = vb
            v = self.variant
            out = []
            if a[i - 1] > 0:
                c1 = f.qpow(-lat.star(e_i, a))
                out.append((c1, head + (("X", lat.sub(a, e_i)), ("S", lat.scale(-v, e_i))) + tail))
            c2 = lat.theta(lat.neg(e_i), a, f) * f.qpow(v * a[i - 1])
            out.append((c2, head + (("X", a), ("D", i)) + tail))
            return out
        if kb == "T":
            return [(lat.theta(vb, e_i, f), head + (w[p + 1], w[p]) + tail)]
        # kb == "S"
        return [(f.qpow(vb[i - 1]), head + (w[p + 1], w[p]) + tail)]

    def _step(self, w: Tuple[Letter, ...], strategy: str, rng: Optional[random.Random]):
        """One rewrite of ``w`` or None when ``w`` is normal."""
        if strategy == "random":
            found = []
            for p in range(len(w)):
                if self._single(w, p) is not None:
                    found.append(("s", p))
                if p + 1 < len(w) and self._pair(w, p) is not None:
                    found.append(("p", p))
            if not found:
                return None
            kind, p = rng.choice(found)
            return self._single(w, p) if kind == "s" else self._pair(w, p)
        positions = range(len(w)) if strategy == "leftmost" else range(len(w) - 1, -1, -1)
        for p in positions:
            r = self._single(w, p)
            if r is not None:
                return r
            if p + 1 < len(w):
                r = self._pair(w, p)
                if r is not None:
                    return r
        return None

    def normalize_terms(self, terms: Iterable[Tuple[Scalar, Sequence[Letter]]], strategy: str = "leftmost",
                        rng: Optional[random.Random] = None) -> "WeylElement":
        if strategy not in ("leftmost", "rightmost", "random"):
            raise ValueError(f"unknown strategy {strategy!r}")
        if strategy == "random" and rng is None:
            rng = random.Random(0)
        out: Dict[Key, Scalar] = {}
        stack = [(c, tuple(w)) for c, w in terms]
        while stack:
            c, w = stack.pop()
            if c.is_zero():
                continue
            r = self._step(w, strategy, rng)
            if r is None:
                k = self._key(w)
                v = out.get(k)
                v = c if v is None else v + c
                if v.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = v
                continue
            for c2, w2 in r:
                stack.append((c * c2, w2))
        return WeylElement(self, out)

    def normalize(self, word: Sequence[Primitive], strategy: str = "leftmost",
                  rng: Optional[random.Random] = None) -> "WeylElement":
        """Normal form of the composite word[0] o word[1] o ... ."""
        letters = tuple(self.letter_of(p) for p in word if not isinstance(p, Identity))
        return self.normalize_terms([(self.field.one, letters)], strategy, rng)

    # elements ----------------------------------------------------------

    def unit(self) -> "WeylElement":
        z = self._zero
        return WeylElement(self, {(z, z, z, z): self.field.one})

    def zero(self) -> "WeylElement":
        return WeylElement(self, {})

    def from_op(self, op: Op) -> "WeylElement":
        """Normal form of an operator expression built from Weyl generators."""
        if isinstance(op, Identity):
            return self.unit()
        if isinstance(op, MonomialMap):
            raise ValueError(f"operator {op} has no Weyl algebra expression")
        if isinstance(op, Primitive):
            return self.normalize([op])
        if isinstance(op, Compose):
            out = self.unit()
            for o in op.ops:
                out = out * self.from_op(o)
            return out
        if isinstance(op, Sum):
            out = self.zero()
            for o in op.ops:
                out = out + self.from_op(o)
            return out
        if isinstance(op, Scaled):
            return self.from_op(op.op).scale(op.c)
        if isinstance(op, Named):
            return self.from_op(op.op)
        raise ValueError(f"cannot convert {op!r}")

    def key_action(self, key: Key, beta: MultiIndex) -> Optional[Tuple[MultiIndex, Scalar]]:
        """Action of one normal word on x^(beta), as (gamma, coefficient) or None."""
        ck = (key, beta)
        if ck in self._action_cache:
            return self._action_cache[ck]
        f = self.field
        a, mu, nu, b = key
        g = list(beta)
        c = f.one
        # d_1^b1 ... d_n^bn: the last axis acts first
        exp = 0
        result = None
        ok = True
        for i in range(self.n - 1, -1, -1):
            for _ in range(b[i]):
                if g[i] == 0:
                    ok = False
                    break
                exp -= sum(g[:i])
                g[i] -= 1
            if not ok:
                break
        if ok:
            g = tuple(g)
            exp += lat.inner(nu, g) + lat.theta_exponent(mu, g)
            c = f.qpow(exp)
            if any(a):
                m = monomial_product(self.kind, f, a, g)
                if m is not None:
                    result = (lat.add(a, g), c * m)
            else:
                result = (g, c)
        self._action_cache[ck] = result
        return result


class WeylElement:
    """Normal-ordered element of the quantum Weyl algebra."""

    __slots__ = ("engine", "terms")

    def __init__(self, engine: WeylEngine, terms: Dict[Key, Scalar]):
        self.engine = engine
        self.terms = terms

    def _same(self, other: "WeylElement"):
        e1, e2 = self.engine, other.engine
        if (e1.n, e1.field, e1.variant, e1.kind) != (e2.n, e2.field, e2.variant, e2.kind):
            raise ValueError("Weyl elements from different engines (dimension, field, kind or variant)")

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.terms == other.terms and self.engine.variant == other.engine.variant

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
        return WeylElement(self.engine, out)

    def __neg__(self):
        return WeylElement(self.engine, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WeylElement":
        f = self.engine.field
        if not isinstance(c, Scalar):
            c = f.from_rational(c)
        if c.is_zero():
            return WeylElement(self.engine, {})
        return WeylElement(self.engine, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            if isinstance(other, Scalar) or isinstance(other, (int,)) or hasattr(other, "numerator"):
                return self.scale(other)
            return NotImplemented
        self._same(other)
        eng = self.engine
        terms = []
        for k1, c1 in self.terms.items():
            w1 = tuple(eng.key_letters(k1))
            for k2, c2 in other.terms.items():
                terms.append((c1 * c2, w1 + tuple(eng.key_letters(k2))))
        return eng.normalize_terms(terms, "rightmost")

    def __rmul__(self, other):
        return self.scale(other)

    def mul_letter_left(self, letter: Letter) -> "WeylElement":
        eng = self.engine
        return eng.normalize_terms([(c, (letter,) + tuple(eng.key_letters(k))) for k, c in self.terms.items()],
                                   "leftmost")

    def apply(self, e: Element) -> Element:
        eng = self.engine
        if e.kind != eng.kind or e.n != eng.n or e.field != eng.field:
            raise ValueError("element does not live in the engine's algebra")
        out: Dict[MultiIndex, Scalar] = {}
        for beta, cb in e.terms.items():
            for k, ck in self.terms.items():
                r = eng.key_action(k, beta)
                if r is None:
                    continue
                g, s = r
                v = cb * ck * s
                if g in out:
                    v = out[g] + v
                    if v.is_zero():
                        del out[g]
                        continue
                out[g] = v
        return e.like(out)

    def __call__(self, e: Element) -> Element:
        return self.apply(e)

    def to_op(self) -> Op:
        ops = []
        for k, c in self.items():
            word = [_letter_op(le) for le in self.engine.key_letters(k)]
            body = Compose(word) if word else Identity()
            ops.append(Scaled(c, body))
        return Sum(ops)

    def items(self):
        for k in sorted(self.terms, key=_key_order):
            yield k, self.terms[k]

    def __str__(self):
        if not self.terms:
            return "0"
        from .galg import render_coefficient

        parts = []
        for k, c in self.items():
            word = "; ".join(str(_letter_op(le)) for le in reversed(self.engine.key_letters(k)))
            cs = render_coefficient(c)
            if not word:
                parts.append(cs)
            elif cs == "1":
                parts.append(f"({word})" if ";" in word else word)
            elif cs == "-1":
                parts.append(f"-({word})" if ";" in word else "-" + word)
            else:
                parts.append(f"{cs}*({word})" if ";" in word else f"{cs}*{word}")
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def render_math(self) -> str:
        """Words written left to right as composites (rightmost acts first)."""
        if not self.terms:
            return "0"
        from .galg import render_coefficient

        parts = []
        for k, c in self.items():
            word = " ".join(str(_letter_op(le)) for le in self.engine.key_letters(k))
            cs = render_coefficient(c)
            parts.append(word if cs == "1" and word else (cs if not word else f"{cs} {word}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"WeylElement({self})"


def _key_order(k: Key):
    a, mu, nu, b = k
    return (sum(a) + sum(b), tuple(-x for x in a), tuple(-x for x in b), mu, nu)


def _letter_op(le: Letter) -> Op:
    kind, v = le
    if kind == "X":
        return MulBy(v)
    if kind == "T":
        return ThetaOp(v)
    if kind == "D":
        return Del(v)
    nz = [(i + 1, e) for i, e in enumerate(v) if e]
    if len(nz) == 1:
        return Sigma(nz[0][0], nz[0][1])
    return Compose([Sigma(i, e) for i, e in nz])


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.engine.variant != b.engine.variant:
        raise ValueError("variant mismatch")
    return a * b


def normalize(word: Sequence[Primitive], variant: int = 1, n: int = None, field: ScalarField = None,
              kind: AlgebraKind = None) -> WeylElement:
    """Normal form of a word without building an engine first.

    n defaults to the largest axis or index length appearing in the word.
    """
    if n is None:
        n = 1
        for p in word:
            if isinstance(p, (ThetaOp, MulBy)):
                n = max(n, len(p.a))
            elif isinstance(p, (Sigma, Del)):
                n = max(n, p.i)
    return WeylEngine(n, field or ScalarField.generic(), variant, kind).normalize(word)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def default_alphabet(n: int, thetas: bool = True, inverse_thetas: bool = True) -> List[Primitive]:
    """The generators x_i, d_i, sigma_i^(+-1), Theta(+-eps_i)."""
    out: List[Primitive] = []
    for i in range(1, n + 1):
        out += [MulBy(lat.eps(i, n)), Del(i), Sigma(i, 1), Sigma(i, -1)]
        if thetas:
            out.append(ThetaOp(lat.eps(i, n)))
            if inverse_thetas:
                out.append(ThetaOp(lat.neg(lat.eps(i, n))))
    return out


def check_word(engine: WeylEngine, word: Sequence[Primitive], degree: int) -> CheckResult:
    """apply(normalize(word)) == apply(word) on all basis monomials of degree <= ``degree``."""
    nf = engine.normalize(word)
    direct = Compose(list(word)) if word else Identity()
    count = 0
    for beta in check_indices(engine.kind, engine.n, degree):
        v = Element(engine.kind, engine.field, engine.n, {beta: engine.field.one}, check=False)
        count += 1
        lhs, rhs = nf.apply(v), direct.apply(v)
        if lhs != rhs:
            return CheckResult(False, count, f"word {direct} on x{beta}: normal form gives {lhs}, direct {rhs}")
    return CheckResult(True, count)


def check_all_words(engine: WeylEngine, alphabet: Sequence[Primitive], max_len: int,
                    degree: int) -> CheckResult:
    """Exhaustive representation check over every word of length <= max_len.

    Words are grown by prepending letters, so each node needs one left
    multiplication of the parent's normal form and one primitive application
    per basis monomial.
    """
    f = engine.field
    basis = check_indices(engine.kind, engine.n, degree)
    letters = [(p, engine.letter_of(p), {}) for p in alphabet]
    count = 0
    # direct action per basis index: (gamma, scalar) or None
    root_direct = [(b, f.one) for b in basis]

    stack = [((), engine.unit(), root_direct)]
    while stack:
        word, nf, direct = stack.pop()
        for p, le, memo in letters:
            new_word = (p,) + word
            new_nf = nf.mul_letter_left(le)
            new_direct = []
            for r in direct:
                if r is None:
                    new_direct.append(None)
                    continue
                m = memo.get(r[0], memo)
                if m is memo:
                    m = memo[r[0]] = p.mono(engine.kind, f, r[0])
                new_direct.append(None if m is None else (m[0], r[1] * m[1]))
            count += 1
            for beta, r in zip(basis, new_direct):
                acc: Dict[MultiIndex, Scalar] = {}
                for k, c in new_nf.terms.items():
                    s = engine.key_action(k, beta)
                    if s is None:
                        continue
                    g, v = s
                    acc[g] = acc[g] + c * v if g in acc else c * v
                acc = {g: v for g, v in acc.items() if not v.is_zero()}
                expect = {} if r is None or r[1].is_zero() else {r[0]: r[1]}
                if acc != expect:
                    w = Compose(list(new_word))
                    return CheckResult(False, count, f"word {w} on x{beta}: normal form {new_nf} acts as {acc}, "
                                                     f"direct action {expect}")
            if len(new_word) < max_len:
                stack.append((new_word, new_nf, new_direct))
    return CheckResult(True, count)


def random_word(rng: random.Random, alphabet: Sequence[Primitive], length: int) -> List[Primitive]:
    return [rng.choice(alphabet) for _ in range(length)]


def check_confluence(engine: WeylEngine, words: Iterable[Sequence[Primitive]], seed: int = 0) -> CheckResult:
    """Normal forms agree under leftmost, rightmost and random redex selection."""
    rng = random.Random(seed)
    count = 0
    for word in words:
        ref = engine.normalize(word, "leftmost")
        for strat in ("rightmost", "random"):
            other = engine.normalize(word, strat, rng)
            if other != ref:
                return CheckResult(False, count, f"word {Compose(list(word))}: {strat} gives {other}, leftmost {ref}")
        count += 1
    return CheckResult(True, count)
