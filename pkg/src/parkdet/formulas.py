"""Closed forms: Steck determinants and the product/alternating-sum
expressions for quotient dimensions and truncated signless Laplacian
determinants.

All evaluation is exact rational arithmetic (fractions.Fraction) with a
final integrality assertion wherever an integer is claimed, so "easily
verified" algebra becomes a machine check. Conventions used by the
degenerate parameter edges are documented on each function.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence


class FormulaDomainError(ValueError):
    """Parameter combination outside a formula's domain."""


def _check_lambda(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    n = len(lam)
    if n == 0:
        raise FormulaDomainError("empty sequence")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)) or lam[-1] < 1:
        raise FormulaDomainError(f"sequence must be nonincreasing and >= 1, got {lam}")
    return lam


def steck_matrix(lam: Sequence[int]) -> list[list[Fraction]]:
    """Upper-Hessenberg Steck matrix: entry (i, j) is
    lam[n-i]^(j-i+1) / (j-i+1)! for i <= j+1 (1-based), else 0."""
    lam = _check_lambda(lam)
    n = len(lam)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            k = j - i + 1
            if k < 0:
                row.append(Fraction(0))
            else:
                row.append(Fraction(lam[n - i]) ** k / factorial(k))
        rows.append(row)
    return rows


def _det_rational(rows: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        result *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return sign * result


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def steck_count(lam: Sequence[int]) -> int:
    """n! times the Steck determinant: the number of vectors whose sorted
    rearrangement stays strictly below the reversed sequence."""
    lam = _check_lambda(lam)
    n = len(lam)
    value = factorial(n) * _det_rational(steck_matrix(lam))
    result = _as_int(value, f"steck_count{lam}")
    if result < 0:
        raise ArithmeticError(f"steck_count{lam} evaluated negative: {result}")
    return result


def steck_poly_progression(n: int, b: int, x: int) -> Fraction:
    """Steck determinant of the arithmetic progression
    (x+(n-1)b, ..., x+b, x): x(x+nb)^(n-1) / n!."""
    if n < 1:
        raise FormulaDomainError("n must be >= 1")
    return Fraction(x * (x + n * b) ** (n - 1), factorial(n))


def steck_poly_flat(n: int, b: int, x: int) -> Fraction:
    """Steck determinant of (x+b, x, ..., x): x^(n-1)(x+nb) / n!."""
    if n < 1:
        raise FormulaDomainError("n must be >= 1")
    return Fraction(x ** (n - 1) * (x + n * b), factorial(n))


def flat_parking_count(l: int, x: int) -> int:
    """x^(l-1)(x+l): vectors of length l sorted strictly below
    (x+1, x, ..., x)."""
    if l < 1:
        raise FormulaDomainError("l must be >= 1")
    return x ** (l - 1) * (x + l)


def parking_dim_complete(n: int, a: int, b: int) -> int:
    """Quotient dimension of the full ideal of the complete multigraph:
    a(a+nb)^(n-1)."""
    _check_nab(n, a, b)
    return a * (a + n * b) ** (n - 1)


def skeleton1_dim_complete(n: int, a: int, b: int) -> int:
    """Quotient dimension of the 1-skeleton ideal of the complete
    multigraph: (a+(n-2)b)^(n-1) (a+(2n-2)b), which also equals the
    truncated signless Laplacian determinant."""
    _check_nab(n, a, b)
    return (a + (n - 2) * b) ** (n - 1) * (a + (2 * n - 2) * b)


def _check_nab(n: int, a: int, b: int):
    if n < 1 or a < 1 or b < 1:
        raise FormulaDomainError(f"need n, a, b >= 1, got ({n}, {a}, {b})")


def _pow_frac(base: int, exp: int) -> Fraction:
    # 0^0 = 1; negative exponents only reach nonzero bases here
    if exp == 0:
        return Fraction(1)
    return Fraction(base) ** exp


def root_deleted_signless_det(n: int, r: int) -> int:
    """Determinant of the truncated signless Laplacian of the complete
    simple graph on n+1 vertices with r root edges removed:

        (n-1)^(n-r-1) * [ (2n-1)(n-2)^r + r(n-2)^(r-1) ]

    evaluated in exact rationals with the conventions 0^0 = 1, the second
    bracket term vanishing at r = 0, and the leading factor becoming the
    rational (n-1)^(-1) at r = n. The final value is asserted to be a
    nonnegative integer.
    """
    if n < 2:
        raise FormulaDomainError(f"n must be >= 2, got {n}")
    if not 0 <= r <= n:
        raise FormulaDomainError(f"r must lie in [0, {n}], got {r}")
    lead = _pow_frac(n - 1, n - r - 1)
    bracket = (2 * n - 1) * _pow_frac(n - 2, r)
    if r > 0:
        bracket += r * _pow_frac(n - 2, r - 1)
    value = lead * bracket
    result = _as_int(value, f"root_deleted_signless_det({n}, {r})")
    if result < 0:
        raise FormulaDomainError(f"root_deleted_signless_det({n}, {r}) negative: {result}")
    return result


def _theta(l: int, x: Fraction | int) -> Fraction:
    """x^(l-1)(x+l) as a rational function value; l = 0 simplifies to 1
    (x^(-1) * x) and 0^0 counts as 1."""
    if l < 0:
        raise FormulaDomainError(f"l must be >= 0, got {l}")
    if l == 0:
        return Fraction(1)
    return _pow_frac_any(x, l - 1) * (Fraction(x) + l)


def _pow_frac_any(base: Fraction | int, exp: int) -> Fraction:
    if exp == 0:
        return Fraction(1)
    return Fraction(base) ** exp


def step_weight_dim(n: int, r: int, a: int) -> int:
    """Closed form for the quotient dimension of the step-weight ideal:
    the alternating binomial sum of flat parking counts
    sum_i (-1)^i C(r, i) (a-1)^(n-i-1) (a-1+n-i)."""
    if not 0 <= r <= n:
        raise FormulaDomainError(f"r must lie in [0, {n}], got {r}")
    if a < 2:
        raise FormulaDomainError(f"a must be >= 2, got {a}")
    x = a - 1
    total = sum(
        (-1) ** i * comb(r, i) * _theta(n - i, x)
        for i in range(r + 1)
    )
    return _as_int(total, f"step_weight_dim({n}, {r}, {a})")


def step_weight_identity_holds(n: int, a: int) -> bool:
    """Check the combinatorial identity
    (a-2)^(n-1)(a+n-2) = sum_i (-1)^i C(n, i) (a-1)^(n-i-1)(a+n-i-1)
    exactly in rationals. a = 1 is excluded: the last summand is then the
    indeterminate 0^(-1) * 0. Both sides are evaluated in the simplified
    rational-function form (the l = 0 term is 1)."""
    if n < 0:
        raise FormulaDomainError(f"n must be >= 0, got {n}")
    if a == 1:
        raise FormulaDomainError("a = 1 is outside the rational form's domain")
    lhs = _theta(n, a - 2)
    rhs = sum((-1) ** i * comb(n, i) * _theta(n - i, a - 1) for i in range(n + 1))
    return lhs == rhs
