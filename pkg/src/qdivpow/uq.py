"""U_q(sl_n) and U_q(gl_n) acting on A_q by q-differential operators.

    e_i = x_i d_(i+1) sigma_i        e_i(x^(b)) = [b_i + 1] x^(b + eps_i - eps_(i+1))
    f_i = sigma_i^-1 x_(i+1) d_i     f_i(x^(b)) = [b_(i+1) + 1] x^(b - eps_i + eps_(i+1))
    K_i = sigma_i sigma_(i+1)^-1     k_i = sigma_i  (gl_n only)

On the exterior algebra the derivations d_i are not available; there the
action is seeded on generators (e_i x_j = delta_(i+1,j) x_i, f_i x_j =
delta_ij x_(i+1), K_i x_j = q^(delta_ij - delta_(i+1,j)) x_j) and extended
to monomials with the coproduct, i.e. the module-algebra rules.

Root vectors: E_ij = x_i d_j, e_ij = E_ij sigma_i (i < j) and
e_ij = sigma_j^-1 E_ij (i > j).
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Tuple

from . import lattice as lat
from .galg import AlgebraKind, Element
from .lattice import MultiIndex
from .ops import (CheckResult, Compose, Del, Identity, MonomialMap, Named, Op, Sigma, basis_element,
                  check_indices, ops_equal, pair_indices, qbracket, x, zero_op)
from .qarith import Scalar, ScalarField
from .report import Report


def default_kind(field: ScalarField) -> AlgebraKind:
    if field.is_generic:
        return AlgebraKind.divided()
    return AlgebraKind.restricted(field.char_q())


def cartan(i: int, j: int) -> int:
    """Cartan matrix of type A."""
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


# ---------------------------------------------------------------------------
# exterior action by coproduct recursion
# ---------------------------------------------------------------------------

class _ExteriorAction:
    """Generator action on Lambda_q(n) extended through the module-algebra rules."""

    def __init__(self, n: int, field: ScalarField):
        self.n = n
        self.field = field
        self.kind = AlgebraKind.exterior()
        self._cache: Dict[tuple, Element] = {}

    def _vec(self, b: MultiIndex, c: Scalar = None) -> Element:
        return Element(self.kind, self.field, self.n, {b: c if c is not None else self.field.one}, check=False)

    def _zero(self) -> Element:
        return Element.zero(self.kind, self.field, self.n)

    def _seed(self, h: str, i: int, j: int) -> Element:
        """Image of the generator x_j under h_i."""
        n, F = self.n, self.field
        ej = lat.eps(j, n)
        if h == "e":
            return self._vec(lat.eps(i, n)) if j == i + 1 else self._zero()
        if h == "f":
            return self._vec(lat.eps(i + 1, n)) if j == i else self._zero()
        if h in ("K", "Kinv"):
            sign = 1 if h == "K" else -1
            return self._vec(ej, F.qpow(sign * ((j == i) - (j == i + 1))))
        if h in ("k", "kinv"):
            sign = 1 if h == "k" else -1
            return self._vec(ej, F.qpow(sign * (j == i)))
        raise ValueError(f"unknown generator {h}")

    def act(self, h: str, i: int, b: MultiIndex) -> Element:
        key = (h, i, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not any(b):
            out = self._zero() if h in ("e", "f") else self._vec(b)
        elif sum(b) == 1:
            out = self._seed(h, i, b.index(1) + 1)
        else:
            j = b.index(1)
            a = lat.eps(j + 1, self.n)
            w = lat.sub(b, a)
            av, wv = self._vec(a), self._vec(w)
            # x^(b) = x_j x^(w) with j the smallest index, coefficient 1
            if h == "e":
                out = av * self.act("e", i, w) + self.act("e", i, a) * self.act("K", i, w)
            elif h == "f":
                out = self.act("Kinv", i, a) * self.act("f", i, w) + self.act("f", i, a) * wv
            else:
                out = self.act(h, i, a) * self.act(h, i, w)
        self._cache[key] = out
        return out

    def monomial_map(self, h: str, i: int, name: str) -> MonomialMap:
        def fn(kind, field, b):
            if kind.name != "exterior" or field != self.field:
                raise ValueError(f"{name} is realized on the exterior algebra over {self.field} only")
            out = self.act(h, i, tuple(b))
            if out.is_zero():
                return None
            if len(out.terms) != 1:
                raise ArithmeticError(f"{name} does not map x({b}) to a single monomial")
            (g, c), = out.terms.items()
            return g, c
        return MonomialMap(name, fn)


# ---------------------------------------------------------------------------
# the realization
# ---------------------------------------------------------------------------

class UqRealization:
    """Generators of U_q(sl_n) (and U_q(gl_n) with ``gl=True``) as operators on A_q."""

    def __init__(self, n: int, field: ScalarField, kind: AlgebraKind = None, gl: bool = False):
        if n < 2:
            raise ValueError("the realization needs n >= 2")
        self.n = n
        self.field = field
        self.kind = kind or default_kind(field)
        self.kind.validate(field)
        self.gl = gl
        self._ext = _ExteriorAction(n, field) if self.kind.name == "exterior" else None
        self._ops: Dict[str, Op] = {}

    def _check_i(self, i: int, top: int) -> None:
        if not 1 <= i <= top:
            raise ValueError(f"index {i} out of range 1..{top}")

    def _named(self, name: str, build: Callable[[], Op]) -> Op:
        op = self._ops.get(name)
        if op is None:
            op = build()
            self._ops[name] = op
        return op

    def e(self, i: int) -> Op:
        self._check_i(i, self.n - 1)
        n = self.n
        if self._ext:
            return self._named(f"e{i}", lambda: Named(f"e{i}", self._ext.monomial_map("e", i, f"e{i}")))
        return self._named(f"e{i}", lambda: Named(f"e{i}", Compose((x(i, n), Del(i + 1), Sigma(i)))))

    def f(self, i: int) -> Op:
        self._check_i(i, self.n - 1)
        n = self.n
        if self._ext:
            return self._named(f"f{i}", lambda: Named(f"f{i}", self._ext.monomial_map("f", i, f"f{i}")))
        return self._named(f"f{i}", lambda: Named(f"f{i}", Compose((Sigma(i, -1), x(i + 1, n), Del(i)))))

    def K(self, i: int, sign: int = 1) -> Op:
        self._check_i(i, self.n - 1)
        name = f"K{i}" if sign == 1 else f"K{i}^-1"
        if self._ext:
            h = "K" if sign == 1 else "Kinv"
            return self._named(name, lambda: Named(name, self._ext.monomial_map(h, i, name),
                                                   inverse=lambda: self.K(i, -sign)))
        return self._named(name, lambda: Named(name, Compose((Sigma(i, sign), Sigma(i + 1, -sign))),
                                               inverse=lambda: self.K(i, -sign)))

    def k(self, i: int, sign: int = 1) -> Op:
        if not self.gl:
            raise ValueError("k_i belongs to the gl_n realization")
        self._check_i(i, self.n)
        name = f"k{i}" if sign == 1 else f"k{i}^-1"
        if self._ext:
            h = "k" if sign == 1 else "kinv"
            return self._named(name, lambda: Named(name, self._ext.monomial_map(h, i, name),
                                                   inverse=lambda: self.k(i, -sign)))
        return self._named(name, lambda: Named(name, Sigma(i, sign), inverse=lambda: self.k(i, -sign)))

    def generators(self) -> Dict[str, Op]:
        out: Dict[str, Op] = {}
        for i in range(1, self.n):
            for op in (self.e(i), self.f(i), self.K(i), self.K(i, -1)):
                out[str(op)] = op
        if self.gl:
            for i in range(1, self.n + 1):
                for op in (self.k(i), self.k(i, -1)):
                    out[str(op)] = op
        return out

    def counit(self, name: str) -> int:
        return 0 if name[0] in "ef" else 1

    # closed forms ------------------------------------------------------

    def closed_e(self, i: int) -> MonomialMap:
        def fn(kind, field, b):
            if b[i] == 0:
                return None
            c = field.qint(b[i - 1] + 1)
            if c.is_zero():
                return None
            return lat.add(b, lat.simple_root(i, len(b))), c
        return MonomialMap(f"closed e{i}", fn)

    def closed_f(self, i: int) -> MonomialMap:
        def fn(kind, field, b):
            if b[i - 1] == 0:
                return None
            c = field.qint(b[i] + 1)
            if c.is_zero():
                return None
            return lat.sub(b, lat.simple_root(i, len(b))), c
        return MonomialMap(f"closed f{i}", fn)

    def __repr__(self):
        return f"UqRealization(n={self.n}, q={self.field}, kind={self.kind}, gl={self.gl})"


def _eq(a: Op, b: Op, R: UqRealization, degree: int) -> CheckResult:
    return ops_equal(a, b, R.kind, R.field, R.n, degree)


def _first_failure(checks) -> CheckResult:
    total = 0
    for label, thunk in checks:
        r = thunk()
        total += r.checked
        if not r.ok:
            return CheckResult(False, total, f"{label}: {r.counterexample}")
    return CheckResult(True, total)


def check_closed_forms(R: UqRealization, degree_bound: int = 6) -> CheckResult:
    """e_i and f_i agree with their closed forms on the test basis."""
    if R.kind.name == "exterior":
        raise ValueError("closed forms are stated for divided power bases")
    checks = []
    for i in range(1, R.n):
        checks.append((f"e{i}", lambda i=i: _eq(R.e(i), R.closed_e(i), R, degree_bound)))
        checks.append((f"f{i}", lambda i=i: _eq(R.f(i), R.closed_f(i), R, degree_bound)))
    return _first_failure(checks)


def check_uq_relations(R: UqRealization, degree_bound: int = 6) -> Report:
    """Defining relations of U_q(sl_n) (and the gl_n additions) as operator identities."""
    F, n = R.field, R.n
    rep = Report(f"U_q relations: {R}, deg<={degree_bound}")
    one = Identity()
    idx = range(1, n)
    qq = F.q - F.qpow(-1)

    def eq(a, b):
        return lambda: _eq(a, b, R, degree_bound)

    group = []
    for i in idx:
        group.append((f"K{i} K{i}^-1 = 1", eq(R.K(i) * R.K(i, -1), one)))
        group.append((f"K{i}^-1 K{i} = 1", eq(R.K(i, -1) * R.K(i), one)))
        for j in idx:
            if i < j:
                group.append((f"K{i} K{j} = K{j} K{i}", eq(R.K(i) * R.K(j), R.K(j) * R.K(i))))
    rep.add("K-group relations", "U_q(sl_n) Cartan part", _first_failure(group))

    conj = []
    for i in idx:
        for j in idx:
            a = cartan(i, j)
            conj.append((f"K{i} e{j} K{i}^-1", eq(R.K(i) * R.e(j) * R.K(i, -1), F.qpow(a) * R.e(j))))
            conj.append((f"K{i} f{j} K{i}^-1", eq(R.K(i) * R.f(j) * R.K(i, -1), F.qpow(-a) * R.f(j))))
    rep.add("K e K^-1 = q^a e and K f K^-1 = q^-a f", "U_q(sl_n) weight relations", _first_failure(conj))

    comm = []
    for i in idx:
        for j in idx:
            lhs = R.e(i) * R.f(j) - R.f(j) * R.e(i)
            rhs = (R.K(i) - R.K(i, -1)) * qq.inverse() if i == j else zero_op()
            comm.append((f"[e{i}, f{j}]", eq(lhs, rhs)))
    rep.add("[e_i, f_j] = delta_ij (K_i - K_i^-1)/(q - q^-1)", "U_q(sl_n) commutator relation",
            _first_failure(comm))

    for g, label in ((R.e, "e"), (R.f, "f")):
        serre = []
        for i in idx:
            for j in idx:
                if abs(i - j) == 1:
                    lhs = g(i) * g(i) * g(j) - (F.q + F.qpow(-1)) * (g(i) * g(j) * g(i)) + g(j) * g(i) * g(i)
                    serre.append((f"Serre({label}{i}, {label}{j})", eq(lhs, zero_op())))
                elif abs(i - j) > 1:
                    serre.append((f"{label}{i} {label}{j} = {label}{j} {label}{i}",
                                  eq(g(i) * g(j), g(j) * g(i))))
        rep.add(f"quantum Serre relations for {label}", "U_q(sl_n) Serre relations", _first_failure(serre))

    if R.gl:
        gl = []
        for i in range(1, n + 1):
            gl.append((f"k{i} k{i}^-1 = 1", eq(R.k(i) * R.k(i, -1), one)))
            gl.append((f"k{i}^-1 k{i} = 1", eq(R.k(i, -1) * R.k(i), one)))
            for j in range(i + 1, n + 1):
                gl.append((f"k{i} k{j} = k{j} k{i}", eq(R.k(i) * R.k(j), R.k(j) * R.k(i))))
        for i in idx:
            gl.append((f"K{i} = k{i} k{i + 1}^-1", eq(R.K(i), R.k(i) * R.k(i + 1, -1))))
        rep.add("k-group relations and K_i = k_i k_(i+1)^-1", "U_q(gl_n) Cartan part", _first_failure(gl))
        glc = []
        for i in range(1, n + 1):
            for j in idx:
                a = lat.inner(lat.eps(i, n), lat.simple_root(j, n))
                glc.append((f"k{i} e{j} k{i}^-1", eq(R.k(i) * R.e(j) * R.k(i, -1), F.qpow(a) * R.e(j))))
                glc.append((f"k{i} f{j} k{i}^-1", eq(R.k(i) * R.f(j) * R.k(i, -1), F.qpow(-a) * R.f(j))))
        rep.add("k e k^-1 = q^<eps_i, alpha_j> e and mirror for f", "U_q(gl_n) weight relations",
                _first_failure(glc))

    if R.kind.name != "exterior":
        rep.add("e_i, f_i operators match their closed forms", "realization of e_i and f_i",
                check_closed_forms(R, degree_bound))
    return rep


def check_module_algebra(R: UqRealization, degree_bound: int = 6) -> Report:
    """Module-algebra compatibility of the action with the products of A_q."""
    kind, F, n = R.kind, R.field, R.n
    rep = Report(f"module algebra laws: {R}, deg<={degree_bound}")
    pairs = list(pair_indices(kind, n, degree_bound))
    unit = basis_element(kind, F, lat.zero(n))

    def law(name: str, fn):
        res = CheckResult(True, 0)
        for al, be in pairs:
            a = basis_element(kind, F, al)
            b = basis_element(kind, F, be)
            lhs, rhs = fn(a, b)
            res.checked += 1
            if lhs != rhs:
                return CheckResult(False, res.checked, f"{name} at a = x({','.join(map(str, al))}), "
                                                       f"b = x({','.join(map(str, be))}): {lhs} != {rhs}")
        return res

    def all_i(fn):
        def both(a, b):
            res = [fn(i, a, b) for i in range(1, n)]
            return [r[0] for r in res], [r[1] for r in res]
        return both

    rep.add("e_i(ab) = a e_i(b) + e_i(a) K_i(b)", "module algebra law for e_i",
            law("e", all_i(lambda i, a, b: (R.e(i)(a * b), a * R.e(i)(b) + R.e(i)(a) * R.K(i)(b)))))
    rep.add("f_i(ab) = K_i^-1(a) f_i(b) + f_i(a) b", "module algebra law for f_i",
            law("f", all_i(lambda i, a, b: (R.f(i)(a * b), R.K(i, -1)(a) * R.f(i)(b) + R.f(i)(a) * b))))
    rep.add("K_i(ab) = K_i(a) K_i(b)", "module algebra law for K_i",
            law("K", all_i(lambda i, a, b: (R.K(i)(a * b), R.K(i)(a) * R.K(i)(b)))))
    rep.add("K_i^-1(ab) = K_i^-1(a) K_i^-1(b)", "module algebra law for K_i^-1",
            law("K^-1", all_i(lambda i, a, b: (R.K(i, -1)(a * b), R.K(i, -1)(a) * R.K(i, -1)(b)))))
    if R.gl:
        def kk(a, b):
            return ([R.k(i, s)(a * b) for i in range(1, n + 1) for s in (1, -1)],
                    [R.k(i, s)(a) * R.k(i, s)(b) for i in range(1, n + 1) for s in (1, -1)])
        rep.add("k_i^(+-1)(ab) = k_i^(+-1)(a) k_i^(+-1)(b)", "gl_n module algebra structure", law("k", kk))

    res = CheckResult(True, 0)
    for name, op in R.generators().items():
        res.checked += 1
        if op(unit) != unit.scale(R.counit(name)):
            res = CheckResult(False, res.checked, f"{name}(1) = {op(unit)}")
            break
    rep.add("u . 1 = eps(u) 1 on generators", "module algebra unit law", res)
    return rep


def check_nilpotency(R: UqRealization) -> CheckResult:
    """e_i^l = f_i^l = 0 on the restricted algebra A_q(n,1)."""
    if R.kind.name != "restricted":
        raise ValueError("nilpotency is checked on the restricted algebra")
    l = R.kind.l
    checks = []
    for i in range(1, R.n):
        checks.append((f"e{i}^{l}", lambda i=i: _eq(R.e(i) ** l, zero_op(), R, 0)))
        checks.append((f"f{i}^{l}", lambda i=i: _eq(R.f(i) ** l, zero_op(), R, 0)))
    return _first_failure(checks)


# ---------------------------------------------------------------------------
# root vectors
# ---------------------------------------------------------------------------

class RootVectorSet:
    """The operators E_ij = x_i d_j and the root vectors e_ij."""

    def __init__(self, n: int, field: ScalarField, kind: AlgebraKind = None):
        self.n = n
        self.field = field
        self.kind = kind or default_kind(field)
        if self.kind.name == "exterior":
            raise ValueError("root vectors use d_j, which does not act on the exterior algebra")
        self.kind.validate(field)
        self.realization = UqRealization(n, field, self.kind)
        self._ops: Dict[tuple, Op] = {}

    def _pair(self, i: int, j: int) -> None:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"indices ({i},{j}) out of range 1..{self.n}")
        if i == j:
            raise ValueError("root vectors need i != j")

    def E(self, i: int, j: int) -> Op:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"indices ({i},{j}) out of range 1..{self.n}")
        key = ("E", i, j)
        if key not in self._ops:
            self._ops[key] = Named(f"E({i},{j})", Compose((x(i, self.n), Del(j))))
        return self._ops[key]

    def e(self, i: int, j: int) -> Op:
        self._pair(i, j)
        key = ("e", i, j)
        if key not in self._ops:
            body = Compose((self.E(i, j), Sigma(i))) if i < j else Compose((Sigma(j, -1), self.E(i, j)))
            self._ops[key] = Named(f"e({i},{j})", body)
        return self._ops[key]

    def closed(self, i: int, j: int) -> MonomialMap:
        """[b_i + 1] q^(-+ sum of b_s strictly between) x^(b + eps_i - eps_j)."""
        self._pair(i, j)

        def fn(kind, field, b):
            if b[j - 1] == 0:
                return None
            c = field.qint(b[i - 1] + 1)
            if c.is_zero():
                return None
            lo, hi = min(i, j), max(i, j)
            between = sum(b[lo:hi - 1])
            c = c * field.qpow(-between if i < j else between)
            return lat.add(b, lat.sub(lat.eps(i, len(b)), lat.eps(j, len(b)))), c
        return MonomialMap(f"closed e({i},{j})", fn)

    def pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1) if i != j]


def root_vector(i: int, j: int, rv: RootVectorSet) -> Op:
    return rv.e(i, j)


def _rv_eq(rv: RootVectorSet, a: Op, b: Op, degree: int) -> CheckResult:
    return ops_equal(a, b, rv.kind, rv.field, rv.n, degree)


def check_rootvector_closed_forms(rv: RootVectorSet, degree_bound: int = 6) -> CheckResult:
    checks = [(f"e({i},{j})", lambda i=i, j=j: _rv_eq(rv, rv.e(i, j), rv.closed(i, j), degree_bound))
              for i, j in rv.pairs()]
    R = rv.realization
    for i in range(1, rv.n):
        checks.append((f"e({i},{i + 1}) = e{i}", lambda i=i: _rv_eq(rv, rv.e(i, i + 1), R.e(i), degree_bound)))
        checks.append((f"e({i + 1},{i}) = f{i}", lambda i=i: _rv_eq(rv, rv.e(i + 1, i), R.f(i), degree_bound)))
    return _first_failure(checks)


def _nested(rv: RootVectorSet, chain: List[int], sign: int, left: bool) -> Op:
    """Iterated q-bracket of the consecutive root vectors along chain."""
    F = rv.field
    ops = [rv.e(a, b) for a, b in zip(chain, chain[1:])]
    if left:
        acc = ops[0]
        for o in ops[1:]:
            acc = qbracket(acc, o, F, sign)
        return acc
    acc = ops[-1]
    for o in reversed(ops[:-1]):
        acc = qbracket(o, acc, F, sign)
    return acc


def verify_rootvector_identities(rv: RootVectorSet, degree_bound: int = 6) -> Report:
    n, F = rv.n, rv.field
    R = rv.realization
    rep = Report(f"root vector identities: n={n}, q={F}, kind={rv.kind}, deg<={degree_bound}")

    def eq(a, b):
        return lambda: _rv_eq(rv, a, b, degree_bound)

    rep.add("e_ij closed forms; e_(i,i+1) = e_i and e_(i+1,i) = f_i", "root vector closed forms",
            check_rootvector_closed_forms(rv, degree_bound))

    lem_i, lem_ii = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                for k in range(i + 1, j):
                    lem_i.append((f"e({i},{j}) via k={k}",
                                  eq(qbracket(rv.e(i, k), rv.e(k, j), F, 1), rv.e(i, j))))
            elif i > j:
                for k in range(j + 1, i):
                    lem_ii.append((f"e({i},{j}) via k={k}",
                                   eq(qbracket(rv.e(i, k), rv.e(k, j), F, -1), rv.e(i, j))))
    rep.add("e_ij = [e_ik, e_kj]_q for every i < k < j", "root vector lemma, part (i)", _first_failure(lem_i))
    rep.add("e_ij = [e_ik, e_kj]_(q^-1) for every i > k > j", "root vector lemma, part (ii)",
            _first_failure(lem_ii))

    lem_iii = []
    qq = (F.q - F.qpow(-1)).inverse()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = rv.e(i, j) * rv.e(j, i) - rv.e(j, i) * rv.e(i, j)
            rhs = (Compose((Sigma(i), Sigma(j, -1))) - Compose((Sigma(i, -1), Sigma(j)))) * qq
            lem_iii.append((f"[e({i},{j}), e({j},{i})]", eq(lhs, rhs)))
    rep.add("e_ij e_ji - e_ji e_ij = (s_i s_j^-1 - s_i^-1 s_j)/(q - q^-1)", "root vector lemma, part (iii)",
            _first_failure(lem_iii))

    nested = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if abs(i - j) < 2:
                continue
            step = 1 if i < j else -1
            chain = list(range(i, j + step, step))
            for left in (True, False):
                nested.append((f"e({i},{j}) {'left' if left else 'right'}-nested",
                               eq(_nested(rv, chain, step, left), rv.e(i, j))))
    rep.add("iterated q-brackets give e_ij in both nestings", "iterated q-bracket expansion",
            _first_failure(nested))

    l6_i, l6_ii = [], []
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            fk = R.f(i) * R.K(i, -1)
            l6_i.append((f"i={i}, j={j}",
                         eq(F.q * (fk * rv.e(i, j)) - rv.e(i, j) * fk, rv.e(i + 1, j))))
            ke = R.K(i) * R.e(i)
            l6_ii.append((f"i={i}, j={j}",
                          eq(F.qpow(-1) * (rv.e(j, i) * ke) - ke * rv.e(j, i), rv.e(j, i + 1))))
    rep.add("q f_i K_i^-1 e_ij - e_ij f_i K_i^-1 = e_(i+1,j)", "braid twisting lemma, part (i)",
            _first_failure(l6_i))
    rep.add("q^-1 e_ji K_i e_i - K_i e_i e_ji = e_(j,i+1)", "braid twisting lemma, part (ii)",
            _first_failure(l6_ii))
    return rep


def positive_root_order(n: int) -> List[Tuple[int, int]]:
    """alpha_12, alpha_13, alpha_23, alpha_14, alpha_24, alpha_34, ..."""
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def lusztig_rootvector_recursion(n: int, field: ScalarField = None, kind: AlgebraKind = None,
                                 degree_bound: int = 6, check: bool = True) -> Dict[Tuple[int, int], Op]:
    """Root vectors built from the simple ones by the braid-group recursion.

    Positive side, in the order alpha_12, alpha_13, alpha_23, ...:
        e_(1,j+1) = [e_(1,j), e_j]_q,     e_(i+1,j) = [e_(i,j), -f_i K_i^-1]_q.
    Negative side is the mirror: f_(1,j+1) = [f_j, f_(1,j)]_(q^-1) and
    f_(i+1,j) = [-K_i e_i, f_(i,j)]_(q^-1), stored under the key (j, i).

    With ``check`` every operator is compared with the closed-form e_ij;
    a mismatch raises ArithmeticError.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    field = field or ScalarField.generic()
    rv = RootVectorSet(n, field, kind)
    R = rv.realization
    F = field
    out: Dict[Tuple[int, int], Op] = {}
    for i, j in positive_root_order(n):
        if (i, j) == (1, 2):
            pos, neg = R.e(1), R.f(1)
        elif i == 1:
            pos = qbracket(out[(1, j - 1)], R.e(j - 1), F, 1)
            neg = qbracket(R.f(j - 1), out[(j - 1, 1)], F, -1)
        else:
            pos = qbracket(out[(i - 1, j)], -(R.f(i - 1) * R.K(i - 1, -1)), F, 1)
            neg = qbracket(-(R.K(i - 1) * R.e(i - 1)), out[(j, i - 1)], F, -1)
        out[(i, j)] = pos
        out[(j, i)] = neg
        if check:
            for key, op in (((i, j), pos), ((j, i), neg)):
                r = _rv_eq(rv, op, rv.e(*key), degree_bound)
                if not r.ok:
                    raise ArithmeticError(f"recursion for e{key} disagrees with the closed form: {r.counterexample}")
    return out
