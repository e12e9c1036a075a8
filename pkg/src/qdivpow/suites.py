"""Named verification suites, one per module, each returning a Report."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable, Dict, List, Optional

from . import lattice as lat
from .galg import (AlgebraKind, Element, divided_to_monomial, factor_high_divided_power, monomial,
                   monomial_product, render_monomial)
from .ops import (CheckResult, Del, MulBy, Scaled, Sigma, ThetaOp, basis_element, check_indices,
                  check_twisted_derivation, ops_equal, pair_indices)
from .qarith import (Scalar, ScalarField, char_q, lemma3_holds, lusztig_factorization, lusztig_sign,
                     multi_qbinom, qbinom, qfact, qint)
from .report import PASS, SKIP, LawResult, Report, merge


@dataclass
class SuiteConfig:
    n: int = 2
    field: ScalarField = dc_field(default_factory=ScalarField.generic)
    kind: Optional[AlgebraKind] = None
    degree: int = 5
    variant: int = 1
    seed: int = 0

    def default_kind(self) -> AlgebraKind:
        if self.kind is not None:
            return self.kind
        from .uq import default_kind
        return default_kind(self.field)


def _fmt(a) -> str:
    return "(" + ",".join(map(str, a)) + ")"


def _loop(items, check) -> CheckResult:
    """Run check(item) -> None or a counterexample string over items."""
    count = 0
    for it in items:
        count += 1
        bad = check(it)
        if bad:
            return CheckResult(False, count, bad)
    return CheckResult(True, count)


def _skip(rep: Report, law: str, ref: str, why: str) -> None:
    rep.results.append(LawResult(law, ref, SKIP, note=why))


def random_scalar(rng: random.Random, F: ScalarField, allow_fraction: bool = True) -> Scalar:
    c = F.zero
    for k in range(-2, 3):
        c = c + F.from_rational(Fraction(rng.randint(-3, 3), rng.randint(1, 3))) * F.qpow(k)
    if allow_fraction and F.is_generic and rng.random() < 0.4:
        d = random_scalar(rng, F, False)
        if not d.is_zero():
            c = c / d
    return c


# ---------------------------------------------------------------------------
# qarith
# ---------------------------------------------------------------------------

def qarith_suite(cfg: SuiteConfig, top: int = 12, lemma_top: int = 30, samples: int = 100) -> Report:
    F = cfg.field
    rep = Report(f"q-arithmetic: q={F}")
    q = F.q

    def pascal(nr):
        n, r = nr
        rhs = F.qpow(r - n) * qbinom(n - 1, r - 1, F) + F.qpow(r) * qbinom(n - 1, r, F)
        if qbinom(n, r, F) != rhs:
            return f"n={n}, r={r}"

    rep.add("Pascal recursion [n r] = q^(r-n)[n-1 r-1] + q^r[n-1 r]", "q-binomial recursion",
            _loop([(n, r) for n in range(1, top + 1) for r in range(1, n + 1)], pascal))
    rep.add("symmetry [m r] = [m m-r]", "q-binomial symmetry",
            _loop([(m, r) for m in range(top + 1) for r in range(m + 1)],
                  lambda mr: None if qbinom(*mr, F) == qbinom(mr[0], mr[0] - mr[1], F) else f"m={mr[0]}, r={mr[1]}"))
    rep.add("bar invariance of [m r] under q -> q^-1", "q-binomial bar invariance",
            _loop([(m, r) for m in range(top + 1) for r in range(m + 1)],
                  lambda mr: None if qbinom(*mr, F).bar() == qbinom(*mr, F) else f"m={mr[0]}, r={mr[1]}"))

    def product_identity(n):
        # coefficients of prod_(i<n) (1 + q^(2i) x) as a polynomial in x
        poly = [F.one]
        for i in range(n):
            c = F.qpow(2 * i)
            nxt = poly + [F.zero]
            for k, a in enumerate(poly):
                nxt[k + 1] = nxt[k + 1] + c * a
            poly = nxt
        for r in range(n + 1):
            if poly[r] != F.qpow((n - 1) * r) * qbinom(n, r, F):
                return f"n={n}, coefficient of x^{r}"

    rep.add("prod (1 + q^(2i) x) = sum q^((n-1)r) [n r] x^r", "q-binomial product identity",
            _loop(range(0, 9), product_identity))
    rep.add("negative upper index: [m r] = (-1)^r [-m+r-1 r]", "q-binomial case analysis",
            _loop([(m, r) for m in range(-top, 0) for r in range(0, 6)],
                  lambda mr: None if qbinom(*mr, F) == qbinom(-mr[0] + mr[1] - 1, mr[1], F) * (-1) ** mr[1]
                  else f"m={mr[0]}, r={mr[1]}"))
    if F.is_generic:
        rep.add("[m r] = [m]!/([r]![m-r]!)", "q-binomial factorial formula",
                _loop([(m, r) for m in range(top + 1) for r in range(m + 1)],
                      lambda mr: None if qbinom(*mr, F) * qfact(mr[1], F) * qfact(mr[0] - mr[1], F) == qfact(mr[0], F)
                      else f"m={mr[0]}, r={mr[1]}"))
        rep.add("no q-integer vanishes at generic q", "characteristic of q",
                _loop(range(1, 40), lambda k: f"[{k}] = 0" if qint(k, F).is_zero() else None))
        rep.add("char(q) = 0", "characteristic of q", char_q(F) == 0)
    else:
        l = char_q(F)
        expected = F.m if F.m % 2 else F.m // 2
        rep.add("char(q) is the least l with [l] = 0, equal to m (m odd) or m/2 (m even)", "characteristic of q",
                l == expected and all(not qint(k, F).is_zero() for k in range(1, l)) and qint(l, F).is_zero())
        rep.add("q^m = 1 and q^d != 1 for 0 < d < m", "root of unity order",
                F.qpow(F.m) == F.one and all(F.qpow(d) != F.one for d in range(1, F.m)))
        if l < 3:
            _skip(rep, "digit factorization of q-binomials", "root of unity binomial lemma, part (1)",
                  f"needs char(q) >= 3, have {l}")
        else:
            _lusztig_laws(rep, F, l, lemma_top)

    rng = random.Random(cfg.seed)
    triples = [tuple(random_scalar(rng, F) for _ in range(3)) for _ in range(samples)]

    def axioms(t):
        a, b, c = t
        if (a + b) + c != a + (b + c) or a + b != b + a:
            return "addition"
        if (a * b) * c != a * (b * c) or a * b != b * a:
            return "multiplication"
        if a * (b + c) != a * b + a * c:
            return "distributivity"
        if a - a != F.zero or a * F.one != a:
            return "identities"
        if not a.is_zero() and a / a != F.one:
            return "inverse"

    rep.add("field axioms on random triples", "scalar field", _loop(triples, axioms))
    return rep


def _lusztig_laws(rep: Report, F: ScalarField, l: int, top: int) -> None:
    pairs = [(m, r) for m in range(top + 1) for r in range(m + 1)]

    def plain(mr):
        m, r = mr
        lhs, rhs = qbinom(m, r, F), lusztig_factorization(m, r, l, F)
        if lhs != rhs:
            return f"m={m}, r={r}, l={l}: [m r] = {lhs}, [m0 r0] C(m1,r1) = {rhs}"

    odd = F.m % 2 == 1
    note = None if odd else (f"q is a primitive {F.m}-th root of unity; the digit rule only holds up to the sign "
                             f"(-1)^(r(m-r) + r0(m0-r0)), see the signed law below")
    rep.add("[m r] = [m0 r0] C(m1, r1) for 0 <= r <= m <= " + str(top), "root of unity binomial lemma, part (1)",
            _loop(pairs, plain), note)
    if not odd:
        def signed(mr):
            m, r = mr
            if qbinom(m, r, F) != lusztig_factorization(m, r, l, F) * lusztig_sign(m, r, l, F):
                return f"m={m}, r={r}"
        rep.add("signed digit rule [m r] = (-1)^(r(m-r)+r0(m0-r0)) [m0 r0] C(m1, r1)",
                "root of unity binomial lemma, sign-corrected", _loop(pairs, signed))

    def lemma2(m):
        m1 = m // l
        value = qbinom(m, l, F)
        expected = m1 if m1 >= 0 else -((-1) ** l) * m1
        if value != expected:
            return f"m={m}: [m l] = {value}, expected {expected}"

    rep.add(f"[m l] = m1 (m >= 0) and -(-1)^l m1 (m < 0) for |m| <= {top}", "root of unity binomial lemma, part (2)",
            _loop(range(-top, top + 1), lemma2))
    span = range(-2 * l - 1, 2 * l + 2)
    rep.add("q^m and [m l] determine m (up to the even-l reflection)", "root of unity binomial lemma, part (3)",
            _loop([(m, m2) for m in span for m2 in span],
                  lambda p: None if lemma3_holds(p[0], p[1], l, F) else f"m={p[0]}, m'={p[1]}"))


# ---------------------------------------------------------------------------
# lattice
# ---------------------------------------------------------------------------

def lattice_suite(cfg: SuiteConfig, samples: int = 1000) -> Report:
    F, n = cfg.field, cfg.n
    rep = Report(f"lattice and bicharacter: n={n}, q={F}")
    rng = random.Random(cfg.seed)

    def rand():
        return tuple(rng.randint(-5, 5) for _ in range(n))

    triples = [(rand(), rand(), rand()) for _ in range(samples)]
    th = lambda a, b: lat.theta(a, b, F)
    z = lat.zero(n)

    def biadditive(t):
        a, b, c = t
        if lat.star(lat.add(a, b), c) != lat.star(a, c) + lat.star(b, c):
            return f"left slot {a}, {b}, {c}"
        if lat.star(a, lat.add(b, c)) != lat.star(a, b) + lat.star(a, c):
            return f"right slot {a}, {b}, {c}"

    rep.add("star is biadditive", "star product distributive laws", _loop(triples, biadditive))

    def closed_forms(t):
        b = t[0]
        for i in range(1, n + 1):
            e = lat.eps(i, n)
            if lat.star(e, b) != sum(b[:i - 1]) or lat.star(b, e) != sum(b[i:]):
                return f"eps_{i}, {b}"
            if i < n:
                a = lat.simple_root(i, n)
                if lat.star(a, b) != -b[i - 1] or lat.star(b, a) != b[i]:
                    return f"alpha_{i}, {b}"

    rep.add("star closed forms for eps_i and alpha_i", "star product with basis vectors and simple roots",
            _loop(triples, closed_forms))

    def multiplicative(t):
        a, b, c = t
        if th(lat.add(a, b), c) != th(a, c) * th(b, c):
            return f"left slot {a}, {b}, {c}"
        if th(a, lat.add(b, c)) != th(a, b) * th(a, c):
            return f"right slot {a}, {b}, {c}"

    rep.add("theta is multiplicative in each slot", "bicharacter axioms", _loop(triples, multiplicative))
    rep.add("theta(a,0) = theta(0,a) = 1", "bicharacter axioms",
            _loop(triples, lambda t: None if th(t[0], z) == F.one == th(z, t[0]) else str(t[0])))
    rep.add("theta(a,b) theta(b,a) = 1 = theta(a,a)", "bicharacter axioms",
            _loop(triples, lambda t: None if th(t[0], t[1]) * th(t[1], t[0]) == F.one == th(t[0], t[0])
                  else f"{t[0]}, {t[1]}"))
    rep.add("theta(a,b) = q^(a*b - b*a)", "bicharacter definition",
            _loop(triples, lambda t: None if th(t[0], t[1]) == F.qpow(lat.star(t[0], t[1]) - lat.star(t[1], t[0]))
                  else f"{t[0]}, {t[1]}"))

    def cocycle(t):
        a, b, c = t
        if th(a, b) * th(lat.add(a, b), c) != th(b, c) * th(a, lat.add(b, c)):
            return f"{a}, {b}, {c}"

    rep.add("2-cocycle identity", "bicharacters are 2-cocycles", _loop(triples, cocycle))
    rep.add("<eps_i, eps_j> = delta_ij", "weight pairing",
            all(lat.inner(lat.eps(i, n), lat.eps(j, n)) == (i == j)
                for i in range(1, n + 1) for j in range(1, n + 1)))
    return rep


# ---------------------------------------------------------------------------
# galg
# ---------------------------------------------------------------------------

def _galg_kinds(cfg: SuiteConfig) -> List[AlgebraKind]:
    if cfg.kind is not None:
        return [cfg.kind]
    F = cfg.field
    kinds = [AlgebraKind.divided(), AlgebraKind.exterior()]
    if F.is_generic:
        kinds.append(AlgebraKind.quantum_space())
    elif char_q(F) >= 3:
        kinds.append(AlgebraKind.restricted(char_q(F)))
    return kinds


def _indices(kind: AlgebraKind, n: int, deg: int):
    return [a for a in lat.multi_indices_upto(n, deg) if kind.admits(a)]


def check_associativity(kind: AlgebraKind, F: ScalarField, n: int, deg: int) -> CheckResult:
    idx = _indices(kind, n, deg)
    by_deg: Dict[int, list] = {}
    for a in idx:
        by_deg.setdefault(sum(a), []).append(a)
    count = 0
    for a in idx:
        for b in idx:
            if sum(a) + sum(b) > deg:
                continue
            ab = monomial(kind, F, a) * monomial(kind, F, b)
            for c in idx:
                if sum(a) + sum(b) + sum(c) > deg:
                    continue
                count += 1
                if ab * monomial(kind, F, c) != monomial(kind, F, a) * (monomial(kind, F, b) * monomial(kind, F, c)):
                    return CheckResult(False, count, f"{render_monomial(a)}, {render_monomial(b)}, {render_monomial(c)}")
    return CheckResult(True, count)


def commutation_factor(kind: AlgebraKind, F: ScalarField, a, b) -> Scalar:
    """c with x(a) x(b) = c x(b) x(a)."""
    if kind.name == "exterior":
        return F.qpow(-(lat.star(a, b) - lat.star(b, a))) * (-1) ** (sum(a) * sum(b))
    return lat.theta(a, b, F)


def check_theta_commutativity(kind: AlgebraKind, F: ScalarField, n: int, deg: int) -> CheckResult:
    idx = _indices(kind, n, deg)

    def one(p):
        a, b = p
        ea, eb = monomial(kind, F, a), monomial(kind, F, b)
        if ea * eb != (eb * ea).scale(commutation_factor(kind, F, a, b)):
            return f"{render_monomial(a)}, {render_monomial(b)}"

    return _loop(product(idx, idx), one)


def galg_suite(cfg: SuiteConfig) -> Report:
    F, n, deg = cfg.field, cfg.n, cfg.degree
    rep = Report(f"divided power algebras: n={n}, q={F}, deg<={deg}")
    for kind in _galg_kinds(cfg):
        try:
            kind.validate(F)
        except ValueError as exc:
            _skip(rep, f"{kind}: algebra laws", "algebra kinds", str(exc))
            continue
        rep.add(f"{kind}: associativity on triples of total degree <= {deg}", "associative multiplication rule",
                check_associativity(kind, F, n, deg))
        law = ("graded commutation x(a)x(b) = (-1)^(|a||b|) theta(b,a) x(b)x(a)" if kind.name == "exterior"
               else "theta-commutativity x(a)x(b) = theta(a,b) x(b)x(a)")
        rep.add(f"{kind}: {law}", "theta-commutativity", check_theta_commutativity(kind, F, n, deg))
        if kind.name == "exterior":
            rep.add("exterior: x_i^2 = 0 and x_j x_i = -q^-1 x_i x_j (i < j)", "quantum exterior algebra relations",
                    _exterior_relations(F, n))
        if kind.name == "quantum_space":
            rep.add("quantum space: x_j x_i = q x_i x_j (i < j)", "quantum n-space relations",
                    _loop([(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)],
                          lambda p: None if _gen(kind, F, p[1], n) * _gen(kind, F, p[0], n)
                          == (_gen(kind, F, p[0], n) * _gen(kind, F, p[1], n)).scale(F.q) else f"i={p[0]}, j={p[1]}"))
        if kind.name == "restricted":
            _restricted_laws(rep, kind, F, n)
        if kind.name == "divided" and not F.is_generic and char_q(F) >= 3:
            _root_divided_laws(rep, F, n, deg)
        if kind.name == "divided" and F.is_generic:
            rep.add("divided powers to quantum space monomials is multiplicative", "divided power basis change",
                    _basis_change(F, n, deg))
    return rep


def _gen(kind, F, i, n) -> Element:
    return monomial(kind, F, lat.eps(i, n))


def _exterior_relations(F: ScalarField, n: int) -> CheckResult:
    kind = AlgebraKind.exterior()
    checks = []
    for i in range(1, n + 1):
        checks.append((f"x_{i}^2", (_gen(kind, F, i, n) * _gen(kind, F, i, n)).is_zero()))
        for j in range(i + 1, n + 1):
            lhs = _gen(kind, F, j, n) * _gen(kind, F, i, n)
            rhs = (_gen(kind, F, i, n) * _gen(kind, F, j, n)).scale(-F.qpow(-1))
            checks.append((f"x_{j} x_{i}", lhs == rhs))
    return _loop(checks, lambda c: None if c[1] else c[0])


def _restricted_laws(rep: Report, kind: AlgebraKind, F: ScalarField, n: int) -> None:
    l = kind.l
    box = [tuple(a) for a in lat.box(n, l - 1)]
    rep.add(f"restricted:{l}: dimension l^n = {l ** n}", "restricted algebra dimension", len(box) == l ** n)

    def nil(a):
        if any(a) and not (monomial(kind, F, a) ** l).is_zero():
            return render_monomial(a)

    rep.add(f"restricted:{l}: (x(a))^l = 0 for a != 0", "nilpotency in the restricted algebra", _loop(box, nil))
    div = AlgebraKind.divided()

    def truncation(p):
        a, b = p
        if not kind.admits(lat.add(a, b)):
            c = monomial_product(div, F, a, b)
            if c is not None and not c.is_zero():
                return f"{render_monomial(a)} {render_monomial(b)} leaves the box with coefficient {c}"

    rep.add(f"restricted:{l}: products leaving the box carry vanishing binomials", "restricted subalgebra closure",
            _loop(product(box, box), truncation))


def _root_divided_laws(rep: Report, F: ScalarField, n: int, deg: int) -> None:
    l = char_q(F)
    kind = AlgebraKind.divided()

    def generated(p):
        i, m = p
        m1, m0 = divmod(m, l)
        xl = monomial(kind, F, lat.scale(l, lat.eps(i, n)))
        prod_ = monomial(kind, F, lat.scale(m0, lat.eps(i, n))) * xl ** m1
        target = monomial(kind, F, lat.scale(m, lat.eps(i, n)))
        c = prod_.coefficient(lat.scale(m, lat.eps(i, n)))
        if prod_.is_zero() or prod_ != target.scale(c):
            return f"x_{i}^({m})"

    cases = [(i, m) for i in range(1, n + 1) for m in range(0, 3 * l + 1)]
    rep.add("x_i^(m) is a nonzero multiple of x_i^(m0) (x_i^(l))^m1", "generation by x_i and x_i^(l)",
            _loop(cases, generated))

    def factor(p):
        try:
            factor_high_divided_power(p[0], p[1], l, F, n)
        except ArithmeticError as exc:
            return str(exc)

    note = None if F.m % 2 else "q^l = -1 here, so [kl l] picks up signs"
    rep.add("(x_i^(l))^m1 = m1! x_i^(m1 l) and x_i^(m) = (1/m1!) x_i^(m0) (x_i^(l))^m1",
            "factorization of high divided powers", _loop(cases, factor), note)
    if F.m % 2:
        idx = list(lat.multi_indices_upto(n, max(deg, l + 1)))

        def central(p):
            i, a = p
            xl = monomial(kind, F, lat.scale(l, lat.eps(i, n)))
            xa = monomial(kind, F, a)
            if xl * xa != xa * xl:
                return f"x_{i}^({l}) and {render_monomial(a)}"

        rep.add(f"x_i^(l) is central when q^l = 1", "centrality of x_i^(l)",
                _loop([(i, a) for i in range(1, n + 1) for a in idx], central))


def _basis_change(F: ScalarField, n: int, deg: int) -> CheckResult:
    kind = AlgebraKind.divided()
    idx = list(lat.multi_indices_upto(n, deg))

    def one(p):
        a, b = p
        if sum(a) + sum(b) > deg:
            return None
        ea, eb = monomial(kind, F, a), monomial(kind, F, b)
        if divided_to_monomial(ea * eb) != divided_to_monomial(ea) * divided_to_monomial(eb):
            return f"{render_monomial(a)}, {render_monomial(b)}"

    return _loop(product(idx, idx), one)


# ---------------------------------------------------------------------------
# ops
# ---------------------------------------------------------------------------

def _ops_kind(cfg: SuiteConfig) -> AlgebraKind:
    k = cfg.default_kind()
    return AlgebraKind.divided() if k.name in ("exterior", "quantum_space") else k


def ops_suite(cfg: SuiteConfig) -> Report:
    F, n, deg = cfg.field, cfg.n, cfg.degree
    kind = _ops_kind(cfg)
    rep = Report(f"q-differential operators: n={n}, q={F}, on {kind}, deg<={deg}")
    idx = check_indices(kind, n, deg)

    def actions(b):
        v = basis_element(kind, F, b)
        for i in range(1, n + 1):
            if Sigma(i).apply(v) != v.scale(F.qpow(b[i - 1])):
                return f"s{i} on {render_monomial(b)}"
            e = lat.eps(i, n)
            want = (Element(kind, F, n, {lat.sub(b, e): F.qpow(-lat.star(e, b))}) if b[i - 1] > 0
                    else Element.zero(kind, F, n))
            if Del(i).apply(v) != want:
                return f"d{i} on {render_monomial(b)}"
            if ThetaOp(e).apply(v) != v.scale(lat.theta(e, b, F)):
                return f"th(eps_{i}) on {render_monomial(b)}"

    rep.add("sigma_i, d_i and Theta(eps_i) act by their defining formulas", "special q-derivatives",
            _loop(idx, actions))

    small = [a for a in product(range(-2, 3), repeat=n)]
    rng = random.Random(cfg.seed)
    pairs = [(rng.choice(small), rng.choice(small)) for _ in range(40)]
    rep.add("Theta(a) Theta(b) = Theta(a+b)", "additivity of Theta",
            CheckResult.combine(ops_equal(ThetaOp(a) * ThetaOp(b), ThetaOp(lat.add(a, b)), kind, F, n, deg)
                                for a, b in pairs))
    rep.add("Theta(-alpha_i) = sigma_i sigma_(i+1)", "Theta of negative simple roots",
            CheckResult.combine(ops_equal(ThetaOp(lat.neg(lat.simple_root(i, n))), Sigma(i) * Sigma(i + 1),
                                          kind, F, n, deg) for i in range(1, n)))
    rep.add("d_i is a (Theta(-eps_i) sigma_i^(+-1), sigma_i^(-+1))-derivation", "twisted derivations d_i",
            CheckResult.combine(check_twisted_derivation(Del(i), ThetaOp(lat.neg(lat.eps(i, n))) * Sigma(i, s),
                                                         Sigma(i, -s), kind, F, n, deg)
                                for i in range(1, n + 1) for s in (1, -1)))
    rep.add("d_i d_j = theta(eps_i, eps_j) d_j d_i", "commutation of q-derivatives",
            CheckResult.combine(ops_equal(Del(i) * Del(j),
                                          Scaled(lat.theta(lat.eps(i, n), lat.eps(j, n), F), Del(j) * Del(i)),
                                          kind, F, n, deg) for i in range(1, n + 1) for j in range(1, n + 1)))

    tri_idx = [a for a in idx if sum(a) <= 2]

    def prop4(t):
        a, b, c = t
        xa, xb, xc = (basis_element(kind, F, v) for v in t)
        lhs = xa * (xb * xc)
        if lhs != (xa * xb) * xc:
            return f"associativity at {t}"
        mid = (xb * (xa * xc)).scale(lat.theta(a, b, F))
        if lhs != mid or lhs != ThetaOp(a).apply(xb) * (xa * xc):
            return f"{render_monomial(a)}, {render_monomial(b)}, {render_monomial(c)}"

    rep.add("x(a)(x(b)x(c)) = theta(a,b) x(b)(x(a)x(c)) = Theta(a)(x(b)) (x(a)x(c))", "Theta moves left factors",
            _loop(product(tri_idx, tri_idx, tri_idx), prop4))

    def automorphisms(p):
        a, b = p
        xa, xb = basis_element(kind, F, a), basis_element(kind, F, b)
        for o in [Sigma(i) for i in range(1, n + 1)] + [ThetaOp(lat.eps(i, n)) for i in range(1, n + 1)]:
            if o.apply(xa * xb) != o.apply(xa) * o.apply(xb):
                return f"{o} on {render_monomial(a)}, {render_monomial(b)}"

    rep.add("sigma_i and Theta(a) are algebra automorphisms", "multiplicative operators",
            _loop(((a, b) for a, b in pair_indices(kind, n, deg) if sum(a) + sum(b) <= deg), automorphisms))
    alphas = [a for a in lat.multi_indices_upto(n, 2) if kind.admits(a)]
    rep.add("x(a) d_i is a (Theta(a - eps_i) sigma_i^(+-1), sigma_i^(-+1))-derivation", "twisted derivations x(a) d_i",
            CheckResult.combine(check_twisted_derivation(MulBy(a) * Del(i),
                                                         ThetaOp(lat.sub(a, lat.eps(i, n))) * Sigma(i, s),
                                                         Sigma(i, -s), kind, F, n, deg, full_box=False)
                                for a in alphas for i in range(1, n + 1) for s in (1, -1)))

    def pascal(p):
        b, c = p
        top = lat.add(b, c)
        lhs = multi_qbinom(top, b, F)
        for i in range(1, n + 1):
            e = lat.eps(i, n)
            for s in (1, -1):
                rhs = (multi_qbinom(lat.sub(top, e), lat.sub(b, e), F) * F.qpow(-s * c[i - 1])
                       + F.qpow(s * b[i - 1]) * multi_qbinom(lat.sub(top, e), b, F))
                if top[i - 1] > 0 and lhs != rhs:
                    return f"b={b}, c={c}, i={i}, sign {s:+d}"

    rep.add("multi-binomial Pascal identity", "multi-index q-binomial recursion",
            _loop(pair_indices(AlgebraKind.divided(), n, deg), pascal))
    untwisted = check_twisted_derivation(Del(1), ThetaOp(lat.zero(n)), ThetaOp(lat.zero(n)), kind, F, n, deg)
    rep.add("d_1 is not an ordinary derivation (negative control)", "twisted derivations d_i",
            CheckResult(not untwisted.ok, untwisted.checked,
                        None if not untwisted.ok else "untwisted Leibniz rule unexpectedly holds"))
    return rep


# ---------------------------------------------------------------------------
# weyl
# ---------------------------------------------------------------------------

def weyl_suite(cfg: SuiteConfig, max_len: int = None, random_words: int = 200, confluence_words: int = 200) -> Report:
    from .weyl import WeylEngine, check_all_words, check_confluence, check_word, default_alphabet, random_word

    F, n, deg = cfg.field, cfg.n, cfg.degree
    kind = _ops_kind(cfg)
    eng = WeylEngine(n, F, cfg.variant, kind)
    rep = Report(f"quantum Weyl algebra normal forms: n={n}, q={F}, variant {'+' if cfg.variant > 0 else '-'}, "
                 f"on {kind}, deg<={deg}")
    alphabet = default_alphabet(n)
    L = max_len if max_len is not None else (3 if n <= 2 else 2)
    rep.add(f"normal form acts like the word, all words of length <= {L}", "Weyl algebra rewriting soundness",
            check_all_words(eng, alphabet, L, deg))
    rng = random.Random(cfg.seed)
    words = [random_word(rng, alphabet, rng.randint(1, 6)) for _ in range(random_words)]
    rep.add(f"normal form acts like the word, {random_words} random words of length <= 6",
            "Weyl algebra rewriting soundness", CheckResult.combine(check_word(eng, w, deg) for w in words))
    cwords = [random_word(rng, alphabet, rng.randint(2, 6)) for _ in range(confluence_words)]
    rep.add(f"normal form is independent of the rewriting order ({confluence_words} random words)",
            "Weyl algebra local confluence", check_confluence(eng, cwords, cfg.seed))

    s = cfg.variant
    xi, di = MulBy(lat.eps(1, n)), Del(1)
    nf = eng.normalize([di, xi])
    want = eng.normalize([xi, di]).scale(F.qpow(s)) + eng.normalize([Sigma(1, -s)])
    rep.add(f"d_1 x_1 = q^({s:+d}) x_1 d_1 + sigma_1^({-s:+d})", "Weyl relation d_i x_i", nf == want)
    if n >= 2:
        x2 = MulBy(lat.eps(2, n))
        rep.add("d_1 x_2 = theta(eps_2, eps_1) x_2 d_1", "Weyl relation d_i x_j",
                eng.normalize([di, x2]) == eng.normalize([x2, di]).scale(lat.theta(lat.eps(2, n), lat.eps(1, n), F)))
    qq = F.q - F.qpow(-1)
    rep.add("x_i d_i = (sigma_i - sigma_i^-1)/(q - q^-1) in the representation", "Weyl relation x_i d_i",
            CheckResult.combine(ops_equal(MulBy(lat.eps(i, n)) * Del(i), (Sigma(i) - Sigma(i, -1)) * qq.inverse(),
                                          kind, F, n, deg) for i in range(1, n + 1)))
    return rep


# ---------------------------------------------------------------------------
# hopf, uq, root vectors
# ---------------------------------------------------------------------------

def hopf_suite(cfg: SuiteConfig) -> Report:
    from .hopf import PRESENTATIONS, presentation, verify_braided, verify_hopf, verify_uq_power_laws

    F, n = cfg.field, cfg.n
    reports = []
    for name in PRESENTATIONS:
        if name == "braided":
            continue
        reports.append(verify_hopf(presentation(name, n, F, cfg.kind), cfg.degree))
    kind = AlgebraKind.divided() if F.is_generic else AlgebraKind.quantum_space()
    reports.append(verify_braided(kind, F, n, min(cfg.degree, 4)))
    reports.append(verify_uq_power_laws(n, F))
    return merge(f"Hopf structures: n={n}, q={F}, deg<={cfg.degree}", reports)


def uq_suite(cfg: SuiteConfig) -> Report:
    from .uq import UqRealization, check_module_algebra, check_nilpotency, check_uq_relations

    F, n = cfg.field, cfg.n
    rep = Report(f"U_q realization: n={n}, q={F}, deg<={cfg.degree}")
    if n < 2:
        _skip(rep, "U_q(sl_n) relations", "U_q relations", "needs n >= 2")
        return rep
    kinds = [cfg.kind] if cfg.kind is not None else [cfg.default_kind(), AlgebraKind.exterior()]
    for kind in kinds:
        R = UqRealization(n, F, kind, gl=True)
        rep.extend(check_uq_relations(R, cfg.degree))
        rep.extend(check_module_algebra(R, cfg.degree))
        if kind.name == "restricted":
            rep.add(f"e_i^l = f_i^l = 0 on restricted:{kind.l}", "nilpotency of e_i and f_i", check_nilpotency(R))
    return rep


def rootvectors_suite(cfg: SuiteConfig) -> Report:
    from .uq import RootVectorSet, lusztig_rootvector_recursion, verify_rootvector_identities

    F, n = cfg.field, cfg.n
    rep = Report(f"root vectors: n={n}, q={F}, deg<={cfg.degree}")
    if n < 2:
        _skip(rep, "root vectors", "root vectors", "needs n >= 2")
        return rep
    kind = _ops_kind(cfg)
    rep.extend(verify_rootvector_identities(RootVectorSet(n, F, kind), cfg.degree))
    rep.run("braid-group recursion reproduces every closed-form e_ij", "root vectors from the braid group action",
            lambda: CheckResult(True, len(lusztig_rootvector_recursion(n, F, kind, cfg.degree))))
    return rep


# ---------------------------------------------------------------------------
# repn
# ---------------------------------------------------------------------------

def repn_suite(cfg: SuiteConfig, max_s: int = None) -> Report:
    from .repn import decompose_all, expected_dimension, restricted_hw_prediction
    from .uq import UqRealization

    F, n = cfg.field, cfg.n
    rep = Report(f"graded components as U_q-modules: n={n}, q={F}")
    if n < 2:
        _skip(rep, "decompositions", "graded component decomposition", "needs n >= 2")
        return rep
    kinds = [cfg.kind] if cfg.kind is not None else (
        [AlgebraKind.divided(), AlgebraKind.exterior()] if F.is_generic
        else ([AlgebraKind.restricted(char_q(F))] if char_q(F) >= 3 else []) + [AlgebraKind.exterior()])
    top = max_s if max_s is not None else cfg.degree
    for kind in kinds:
        R = UqRealization(n, F, kind)
        reports = decompose_all(R, top if kind.name in ("divided", "quantum_space") else None)

        def dims(r):
            return None if r.component_dimension == expected_dimension(kind, n, r.s) else f"s={r.s}"

        rep.add(f"{kind}: component dimensions", "graded component dimensions", _loop(reports, dims))

        def simple(r):
            if len(r.summands) != 1:
                return f"s={r.s}: {len(r.summands)} highest weight vectors"
            sm = r.summands[0]
            if not sm.simple or sm.dimension != r.component_dimension:
                return f"s={r.s}: generated submodule of dimension {sm.dimension}, simple={sm.simple}"
            b = sm.hw_vector.support()
            if kind.name == "exterior":
                want = tuple([1] * r.s + [0] * (n - r.s))
                labels = tuple(1 if i == r.s else 0 for i in range(1, n))
            elif kind.name == "restricted":
                want, labels = restricted_hw_prediction(n, kind.l, r.s)
            else:
                want = tuple([r.s] + [0] * (n - 1))
                labels = tuple([r.s] + [0] * (n - 2))
            if b != (want,) or sm.weight != labels:
                return f"s={r.s}: hw {sm.hw_vector} weight {sm.weight}, expected {render_monomial(want)} {labels}"

        law = {"exterior": "each Lambda_q(n)_(s) is simple with hw x_1...x_s and K_i-exponents delta_is",
               "restricted": "each A_q(n,1)^(s) is simple with the predicted highest weight",
               }.get(kind.name, "each A_q(n)^(s) is simple with hw x^(s eps_1) and weight s lambda_1")
        if kind.name == "divided" and not F.is_generic:
            rep.record(f"{kind}: decomposition at a root of unity", "graded component decomposition",
                       "; ".join(f"s={r.s}: " + ", ".join(f"{x.dimension}{'' if x.simple else '*'}"
                                                          for x in r.summands) for r in reports)
                       + " (* = not simple)")
            continue
        rep.add(f"{kind}: {law}", "graded component decomposition", _loop(reports, simple))
        if kind.name == "restricted":
            rep.add(f"{kind}: dimensions sum to l^n", "restricted algebra dimension",
                    sum(r.component_dimension for r in reports) == kind.l ** n)
    return rep


SUITES: Dict[str, Callable[[SuiteConfig], Report]] = {
    "qarith": qarith_suite,
    "lattice": lattice_suite,
    "galg": galg_suite,
    "ops": ops_suite,
    "weyl": weyl_suite,
    "hopf": hopf_suite,
    "uq": uq_suite,
    "rootvectors": rootvectors_suite,
    "repn": repn_suite,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, cfg: SuiteConfig = None) -> Report:
    cfg = cfg or SuiteConfig()
    if name == "all":
        return merge(f"all suites: n={cfg.n}, q={cfg.field}, deg<={cfg.degree}",
                     [fn(cfg) for fn in SUITES.values()])
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")
    return SUITES[name](cfg)
