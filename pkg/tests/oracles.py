"""Brute-force reference computations that share no code with the package.

Generic q is checked by evaluating at an exact rational point; roots of unity
by reducing integer Laurent polynomials modulo a cyclotomic polynomial built
here from scratch.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

Q0 = Fraction(2)        # evaluation point for generic q
Q1 = Fraction(-3, 5)    # second point, to rule out lucky agreement


# integer polynomials as lists, lowest degree first -------------------------

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divexact(a, b):
    """a / b for integer polynomials where b divides a and b is monic up to sign."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = Fraction(a[k + len(b) - 1], b[-1])
        assert c.denominator == 1
        out[k] = int(c)
        for j, y in enumerate(b):
            a[k + j] -= out[k] * y
    assert not any(a), "inexact division"
    return out


def poly_rem(a, b):
    a = list(a)
    while len(a) >= len(b):
        c = a[-1]
        if c:
            for j, y in enumerate(b):
                a[len(a) - len(b) + j] -= c * y
        a.pop()
    return a


def cyclotomic(m):
    """Phi_m as an integer list, via x^m - 1 = prod_{d | m} Phi_d."""
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p = poly_divexact(p, cyclotomic(d))
    return p


# q-numbers as integer Laurent polynomials {exponent: coefficient} -----------

def laurent_qint(n):
    sign = -1 if n < 0 else 1
    return {e: sign for e in range(1 - abs(n), abs(n), 2)}


def gaussian_t(m, r):
    """Ordinary Gaussian binomial in t from the product formula, exact division."""
    num, den = [1], [1]
    for i in range(1, r + 1):
        num = poly_mul(num, [1] + [0] * (m - i) + [-1])
        den = poly_mul(den, [1] + [0] * (i - 1) + [-1])
    return poly_divexact(num, den)


def gaussian_by_subsets(m, r):
    """Same polynomial by counting r-subsets of {0..m-1} by their inversion weight."""
    out = [0] * (r * (m - r) + 1)
    for s in combinations(range(m), r):
        out[sum(s) - r * (r - 1) // 2] += 1
    return out


def laurent_qbinom(m, r):
    """Balanced [m choose r] = q^(-r(m-r)) G(m, r; q^2) for 0 <= r <= m."""
    if r < 0 or r > m:
        return {}
    return {2 * k - r * (m - r): c for k, c in enumerate(gaussian_t(m, r)) if c}


def laurent_mul(a, b):
    out = {}
    for e, x in a.items():
        for f, y in b.items():
            out[e + f] = out.get(e + f, 0) + x * y
    return {e: c for e, c in out.items() if c}


def laurent_eval(p, q):
    return sum((Fraction(c) * Fraction(q) ** e for e, c in p.items()), Fraction(0))


def reduce_at_root(p, m):
    """Coefficient vector (low degree first) of p(v) in Q[v]/Phi_m."""
    folded = [0] * m
    for e, c in p.items():
        folded[e % m] += c
    phi = cyclotomic(m)
    rem = poly_rem(folded, phi)
    d = len(phi) - 1
    return tuple(Fraction(x) for x in rem + [0] * (d - len(rem)))


def scalar_at(x, field, q=Q0):
    """Exact comparison data for a package scalar: a rational value or a residue vector."""
    if field.is_generic:
        return x.evaluate(q)
    return tuple(Fraction(c) for c in x.coeffs)


def oracle_at(p, field, q=Q0):
    if field.is_generic:
        return laurent_eval(p, q)
    return reduce_at_root(p, field.m)


def brute_char(m):
    """Least l > 0 with [l] = 0 at a primitive m-th root, from the residue vectors."""
    l = 1
    while any(reduce_at_root(laurent_qint(l), m)):
        l += 1
    return l


def binom_digits(m, r, l):
    m1, m0 = divmod(m, l)
    r1, r0 = divmod(r, l)
    return m0, m1, r0, r1, comb(m1, r1) if m1 >= r1 >= 0 else 0
