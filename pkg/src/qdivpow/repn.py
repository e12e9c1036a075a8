"""Exact linear algebra over the scalar fields and module structure of graded components.

Vectors are lists of scalars in the ordered basis of a graded component.
Matrices are lists of rows. Elimination pivots on the first nonzero entry in
basis order, so all results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import lattice as lat
from .galg import AlgebraKind, Element, render_element
from .lattice import MultiIndex
from .ops import Op
from .qarith import Scalar, ScalarField
from .uq import UqRealization

Vector = List[Scalar]
Matrix = List[List[Scalar]]


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Sequence[Scalar]], ncols: int = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0]) if ncols is None else ncols
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if not M[i][c].is_zero()), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = M[r][c].inverse()
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int, field: ScalarField) -> List[Vector]:
    """Basis of {v : A v = 0}, one vector per free column."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(R, pivots):
            if not row[f].is_zero():
                v[p] = -row[f]
        out.append(v)
    return out


def mat_vec(A: Matrix, v: Vector, field: ScalarField) -> Vector:
    out = []
    for row in A:
        s = field.zero
        for a, b in zip(row, v):
            if not a.is_zero() and not b.is_zero():
                s = s + a * b
        out.append(s)
    return out


def is_zero_vector(v: Vector) -> bool:
    return all(x.is_zero() for x in v)


class Subspace:
    """Span of vectors kept in reduced echelon form for membership tests."""

    def __init__(self, dim: int, field: ScalarField):
        self.dim = dim
        self.field = field
        self.rows: Matrix = []
        self.pivots: List[int] = []
        self.vectors: List[Vector] = []   # the independent vectors as added

    def reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if not v[p].is_zero():
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, v: Vector) -> bool:
        return is_zero_vector(self.reduce(v))

    def add(self, v: Vector) -> bool:
        """Insert v; True when it enlarged the span."""
        w = self.reduce(v)
        if is_zero_vector(w):
            return False
        self.vectors.append(list(v))
        self.rows, self.pivots = rref(self.rows + [w], self.dim)
        return True

    @property
    def dimension(self) -> int:
        return len(self.rows)


# ---------------------------------------------------------------------------
# graded components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedComponent:
    """The span of the basis monomials of total degree s."""

    kind: AlgebraKind
    n: int
    s: int
    field: ScalarField

    @property
    def basis(self) -> Tuple[MultiIndex, ...]:
        return self.kind.basis(self.n, self.s)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index(self) -> Dict[MultiIndex, int]:
        return {b: k for k, b in enumerate(self.basis)}

    def element(self, v: Vector) -> Element:
        return Element(self.kind, self.field, self.n,
                       {b: c for b, c in zip(self.basis, v) if not c.is_zero()})

    def vector(self, e: Element) -> Vector:
        idx = self.index()
        v = [self.field.zero] * self.dimension
        for b, c in e.terms.items():
            if b not in idx:
                raise ValueError(f"x({b}) is not in the degree-{self.s} component")
            v[idx[b]] = c
        return v

    def basis_vector(self, k: int) -> Element:
        return Element(self.kind, self.field, self.n, {self.basis[k]: self.field.one})


def expected_dimension(kind: AlgebraKind, n: int, s: int) -> int:
    """Closed-form dimension of the degree-s component."""
    if kind.name in ("divided", "quantum_space"):
        return comb(n + s - 1, n - 1)
    if kind.name == "exterior":
        return comb(n, s)
    l = kind.l
    # inclusion-exclusion over the coordinates exceeding l - 1
    return sum((-1) ** k * comb(n, k) * comb(s - k * l + n - 1, n - 1) for k in range(n + 1) if s - k * l >= 0)


@dataclass
class OperatorMatrix:
    rows: Matrix
    source: GradedComponent
    target: GradedComponent


def operator_matrix(op: Op, c: GradedComponent, target: GradedComponent = None) -> OperatorMatrix:
    """Matrix of op restricted to c, landing in a single graded component."""
    images = [op.apply(c.basis_vector(k)) for k in range(c.dimension)]
    degrees = {sum(b) for img in images for b in img.terms}
    if len(degrees) > 1:
        raise ValueError(f"operator {op} is not homogeneous on degree {c.s}: images in degrees {sorted(degrees)}")
    if target is None:
        t = degrees.pop() if degrees else c.s
        target = GradedComponent(c.kind, c.n, t, c.field)
    cols = [target.vector(img) for img in images]
    rows = [[cols[j][i] for j in range(c.dimension)] for i in range(target.dimension)]
    return OperatorMatrix(rows, c, target)


# ---------------------------------------------------------------------------
# highest weight vectors and submodules
# ---------------------------------------------------------------------------

def dynkin_labels(kind: AlgebraKind, b: MultiIndex) -> Tuple[int, ...]:
    """Exponents of the K_i eigenvalues on x^(b): b_i - b_(i+1)."""
    return tuple(b[i] - b[i + 1] for i in range(len(b) - 1))


def gl_labels(b: MultiIndex) -> Tuple[int, ...]:
    """Coordinates of the gl_n weight b in the fundamental weights eps_1 + ... + eps_i.

    The last entry is the coefficient of the determinant weight, which the
    sl_n labels cannot see; x_1...x_n in Lambda_q(n) reads lambda_n here.
    """
    return tuple(b[i] - b[i + 1] for i in range(len(b) - 1)) + (b[-1],)


def render_weight(labels: Sequence[int]) -> str:
    parts = []
    for i, a in enumerate(labels, 1):
        if a:
            coeff = "" if a == 1 else "-" if a == -1 else f"{a}*"
            parts.append(f"{coeff}lambda_{i}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _e_rows(c: GradedComponent, R: UqRealization) -> Matrix:
    rows: Matrix = []
    for i in range(1, R.n):
        rows.extend(operator_matrix(R.e(i), c).rows)
    return rows


def _check_eigen(c: GradedComponent, R: UqRealization, v: Vector, labels: Tuple[int, ...]) -> None:
    e = c.element(v)
    F = c.field
    for i in range(1, R.n):
        if R.K(i).apply(e) != e.scale(F.qpow(labels[i - 1])):
            raise ArithmeticError(f"{render_element(e)} is not a K_{i}-eigenvector with exponent {labels[i - 1]}")


def highest_weight_vectors(c: GradedComponent, R: UqRealization) -> List[Tuple[Vector, Tuple[int, ...]]]:
    """Basis of the joint kernel of the e_i, split into weight spaces.

    Each e_i shifts the weight by alpha_i, so the kernel is the direct sum of
    its intersections with the weight spaces; every returned vector is a
    simultaneous K_i-eigenvector (asserted).
    """
    if R.kind != c.kind or R.field != c.field or R.n != c.n:
        raise ValueError("realization and component disagree on kind, field or dimension")
    by_weight: Dict[Tuple[int, ...], List[int]] = {}
    for k, b in enumerate(c.basis):
        by_weight.setdefault(dynkin_labels(c.kind, b), []).append(k)
    E = _e_rows(c, R)
    out = []
    for labels in sorted(by_weight, reverse=True):
        cols = by_weight[labels]
        sub = [[row[k] for k in cols] for row in E]
        sub = [row for row in sub if not is_zero_vector(row)]
        for w in nullspace(sub, len(cols), c.field):
            v = [c.field.zero] * c.dimension
            for k, val in zip(cols, w):
                v[k] = val
            _check_eigen(c, R, v, labels)
            out.append((v, labels))
    return out


def _lowering_and_raising(c: GradedComponent, R: UqRealization) -> List[Matrix]:
    mats = []
    for i in range(1, R.n):
        mats.append(operator_matrix(R.f(i), c, c).rows)
        mats.append(operator_matrix(R.e(i), c, c).rows)
    return mats


def generate_submodule(vectors: Sequence[Vector], R: UqRealization, c: GradedComponent,
                       mats: List[Matrix] = None) -> Subspace:
    """Closure of span(vectors) under all e_i and f_i."""
    mats = mats if mats is not None else _lowering_and_raising(c, R)
    space = Subspace(c.dimension, c.field)
    queue = []
    for v in vectors:
        if space.add(v):
            queue.append(v)
    while queue:
        v = queue.pop()
        for M in mats:
            w = mat_vec(M, v, c.field)
            if space.add(w):
                queue.append(w)
    return space


def _hw_inside(space: Subspace, c: GradedComponent, R: UqRealization) -> int:
    """Dimension of the joint e-kernel inside a submodule."""
    W = space.vectors
    if not W:
        return 0
    E = _e_rows(c, R)
    # columns are the images of the spanning vectors
    cols = [mat_vec(E, w, c.field) for w in W]
    rows = [[col[i] for col in cols] for i in range(len(E))]
    rows = [r for r in rows if not is_zero_vector(r)]
    return len(nullspace(rows, len(W), c.field))


@dataclass
class Summand:
    hw_vector: Element
    weight: Tuple[int, ...]
    dimension: int
    simple: bool
    note: Optional[str] = None

    @property
    def gl_weight(self) -> Tuple[int, ...]:
        return gl_labels(self.hw_vector.support()[0])

    def to_dict(self) -> dict:
        d = {"hw_vector": render_element(self.hw_vector), "weight": list(self.weight),
             "weight_label": render_weight(self.weight),
             "gl_weight": list(self.gl_weight), "gl_weight_label": render_weight(self.gl_weight), "dimension": self.dimension, "simple": self.simple}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class DecompositionReport:
    kind: AlgebraKind
    n: int
    s: int
    field: ScalarField
    component_dimension: int
    summands: List[Summand] = dc_field(default_factory=list)
    direct_sum_dimension: int = 0

    @property
    def completely_reducible(self) -> bool:
        return self.direct_sum_dimension == self.component_dimension == sum(x.dimension for x in self.summands)

    def to_dict(self) -> dict:
        return {"kind": str(self.kind), "n": self.n, "s": self.s, "q": str(self.field),
                "component_dimension": self.component_dimension,
                "completely_reducible": self.completely_reducible,
                "summands": [x.to_dict() for x in self.summands]}


def restricted_hw_prediction(n: int, l: int, s: int) -> Tuple[MultiIndex, Tuple[int, ...]]:
    """Highest weight vector and Dynkin labels predicted for A_q(n,1) in degree s.

    s = (l-1)(i-1) + s_i with 0 <= s_i <= l-1 (s_i = l-1 only at the top
    degree); the vector is x^((l-1)eps_1 + ... + (l-1)eps_(i-1) + s_i eps_i) and the
    weight (l-1-s_i) lambda_(i-1) + s_i lambda_i with lambda_0 = lambda_n = 0.
    """
    if not 0 <= s <= n * (l - 1):
        raise ValueError(f"degree {s} out of range 0..{n * (l - 1)}")
    i, si = divmod(s, l - 1)
    i += 1
    if i > n:
        i, si = n, l - 1
    b = tuple([l - 1] * (i - 1) + [si] + [0] * (n - i))
    labels = [0] * (n - 1)
    if 1 <= i - 1 <= n - 1:
        labels[i - 2] += l - 1 - si
    if 1 <= i <= n - 1:
        labels[i - 1] += si
    return b, tuple(labels)


def decompose(kind: AlgebraKind, s: int, R: UqRealization) -> DecompositionReport:
    """Highest weight vectors of the degree-s component and the submodules they generate."""
    if R.kind != kind:
        raise ValueError("realization acts on a different algebra kind")
    c = GradedComponent(kind, R.n, s, R.field)
    rep = DecompositionReport(kind, R.n, s, R.field, c.dimension)
    mats = _lowering_and_raising(c, R)
    total = Subspace(c.dimension, c.field)
    prediction = None
    if kind.name == "restricted":
        prediction = restricted_hw_prediction(R.n, kind.l, s)
    for v, labels in highest_weight_vectors(c, R):
        sub = generate_submodule([v], R, c, mats)
        simple = _hw_inside(sub, c, R) == 1
        for w in sub.vectors:
            total.add(w)
        note = None
        e = c.element(v)
        if prediction is not None and (e.support() != (prediction[0],) or labels != prediction[1]):
            note = (f"predicted hw x({','.join(map(str, prediction[0]))}) with weight "
                    f"{render_weight(prediction[1])}")
        rep.summands.append(Summand(e, labels, sub.dimension, simple, note))
    rep.direct_sum_dimension = total.dimension
    return rep


def max_degree(kind: AlgebraKind, n: int, default: int = 5) -> int:
    if kind.name == "exterior":
        return n
    if kind.name == "restricted":
        return n * (kind.l - 1)
    return default


def decompose_all(R: UqRealization, max_s: int = None) -> List[DecompositionReport]:
    top = max_degree(R.kind, R.n) if max_s is None else max_s
    return [decompose(R.kind, s, R) for s in range(top + 1)]
