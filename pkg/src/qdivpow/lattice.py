"""Multi-indices in Z^n, the * product and the bicharacter theta.

Multi-indices are plain tuples of ints. Axes are 1-based in every public
function, matching the usual epsilon_1, ..., epsilon_n notation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence, Tuple

from .qarith import Scalar, ScalarField

MultiIndex = Tuple[int, ...]


def _check(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def eps(i: int, n: int) -> MultiIndex:
    """The basis vector epsilon_i of Z^n (1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"axis {i} out of range 1..{n}")
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def zero(n: int) -> MultiIndex:
    return (0,) * n


def simple_root(i: int, n: int) -> MultiIndex:
    """alpha_i = epsilon_i - epsilon_(i+1)."""
    if not 1 <= i < n:
        raise ValueError(f"simple root index {i} out of range 1..{n - 1}")
    return sub(eps(i, n), eps(i + 1, n))


def fundamental_weight(i: int, n: int) -> MultiIndex:
    """lambda_i = epsilon_1 + ... + epsilon_i, with lambda_0 = 0."""
    if not 0 <= i <= n:
        raise ValueError(f"weight index {i} out of range 0..{n}")
    return tuple(1 if j < i else 0 for j in range(n))


def add(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    _check(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    _check(a, b)
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence[int]) -> MultiIndex:
    return tuple(-x for x in a)


def scale(c: int, a: Sequence[int]) -> MultiIndex:
    return tuple(c * x for x in a)


def norm1(a: Sequence[int]) -> int:
    """|alpha| = alpha_1 + ... + alpha_n."""
    return sum(a)


def is_nonneg(a: Sequence[int]) -> bool:
    return all(x >= 0 for x in a)


def star(a: Sequence[int], b: Sequence[int]) -> int:
    """alpha * beta = sum over pairs i > j of alpha_i beta_j."""
    _check(a, b)
    total = 0
    prefix = 0
    for i in range(len(a)):
        total += a[i] * prefix
        prefix += b[i]
    return total


def inner(a: Sequence[int], b: Sequence[int]) -> int:
    """The pairing <eps_i, eps_j> = delta_ij."""
    _check(a, b)
    return sum(x * y for x, y in zip(a, b))


def theta_exponent(a: Sequence[int], b: Sequence[int]) -> int:
    """Exponent of q in theta(a, b)."""
    return star(a, b) - star(b, a)


def theta(a: Sequence[int], b: Sequence[int], field: ScalarField) -> Scalar:
    """theta(alpha, beta) = q^(alpha*beta - beta*alpha)."""
    return field.qpow(theta_exponent(a, b))


def multi_indices(n: int, total: int, upper: int = None) -> Iterator[MultiIndex]:
    """All alpha in Z_+^n with |alpha| = total, entries <= upper, in lex order (largest first)."""
    yield from _compositions(n, total, -1 if upper is None else upper)


@lru_cache(maxsize=None)
def _compositions(n: int, total: int, upper: int) -> Tuple[MultiIndex, ...]:
    if n == 0:
        return ((),) if total == 0 else ()
    top = total if upper < 0 else min(total, upper)
    out = []
    for first in range(top, -1, -1):
        for rest in _compositions(n - 1, total - first, upper):
            out.append((first,) + rest)
    return tuple(out)


def multi_indices_upto(n: int, max_total: int, upper: int = None) -> Iterator[MultiIndex]:
    for s in range(max_total + 1):
        yield from multi_indices(n, s, upper)


def box(n: int, upper: int) -> Iterator[MultiIndex]:
    """All alpha with 0 <= alpha_i <= upper."""
    return product(range(upper + 1), repeat=n)
