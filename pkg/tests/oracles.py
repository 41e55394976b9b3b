"""Independent test oracles, kept deliberately naive and exact.

Rational-arithmetic evaluation of the polynomial special functions, and
brute-force enumeration of composite levels.  Nothing here shares code with
the package implementations.
"""

from fractions import Fraction


def f1_rational(n: int, b_param: int, z: Fraction) -> Fraction:
    """Term-by-term sum of the terminating confluent series, exact rationals."""
    z = Fraction(z)
    term = Fraction(1)
    total = Fraction(1)
    for k in range(n):
        term *= Fraction(k - n, (b_param + k) * (k + 1)) * z
        total += term
    return total


def hermite_rational(n: int, x: Fraction) -> Fraction:
    """H_n from the explicit recurrence, exact rationals."""
    x = Fraction(x)
    h_prev, h = Fraction(1), 2 * x
    if n == 0:
        return h_prev
    for k in range(1, n):
        h, h_prev = 2 * x * h - 2 * k * h_prev, h
    return h


def laguerre_rational(n: int, alpha: int, z: Fraction) -> Fraction:
    """L_n^(alpha) from the explicit recurrence, exact rationals."""
    z = Fraction(z)
    l_prev = Fraction(1)
    if n == 0:
        return l_prev
    l_cur = 1 + alpha - z
    for k in range(1, n):
        l_cur, l_prev = ((2 * k + 1 + alpha - z) * l_cur - (k + alpha) * l_prev) / (k + 1), l_cur
    return l_cur


def binom(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def brute_force_composite(e_y1, e_y2, n_max: int, count: int):
    """All (n1, n2, E) with n1, n2 <= n_max, sorted by (E, n1, n2), first count."""
    levels = [
        (n1, n2, e_y1(n1) + e_y2(n2))
        for n1 in range(n_max + 1)
        for n2 in range(n_max + 1)
    ]
    levels.sort(key=lambda t: (t[2], t[0], t[1]))
    return levels[:count]
