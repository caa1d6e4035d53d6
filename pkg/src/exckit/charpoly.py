"""Partial sums of powers of twist degrees over graded pieces, their exact
interpolation as polynomials in r, and the leading coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from exckit.graded import Geometry
from exckit.lattice import DoublingPattern, compositions, weighted_compositions


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in r with exact rational coefficients, lowest power first."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, r) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * r + c
        return acc

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if power == 0 else ("r" if power == 1 else f"r^{power}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(reversed(terms))


def _poly_mul_linear(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # multiply by (r - root)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] += c
        out[i] -= root * c
    return out


def interpolate(samples: Iterable[tuple[int, Fraction]]) -> RationalPolynomial:
    """Exact Lagrange interpolation through ``(r, value)`` pairs."""
    pts = [(Fraction(x), Fraction(y)) for x, y in samples]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError(f"duplicate interpolation nodes in {xs}")
    total = [Fraction(0)] * max(len(pts), 1)
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j != i:
                basis = _poly_mul_linear(basis, xj)
                denom *= xi - xj
        scale = yi / denom
        for power, c in enumerate(basis):
            total[power] += scale * c
    return RationalPolynomial(tuple(total))


def _power_sums(degree_levels: Iterable[Iterable[int]], j: int) -> list[Fraction]:
    """Cumulative sums of d^j / j!: entry r sums over levels 0..r-1."""
    out = [Fraction(0)]
    acc = 0
    for level in degree_levels:
        acc += sum(d**j for d in level)
        out.append(Fraction(acc, math.factorial(j)))
    return out


def _dot(a: Sequence[int], m: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, m))


def _check_j(g: Geometry, j: int) -> None:
    if not 1 <= j <= g.p:
        raise ValueError(f"j must lie in [1, p={g.p}], got {j}")


def _check_h(g: Geometry, h: int) -> None:
    if not 1 <= h <= g.codim - 1:
        raise ValueError(f"h must lie in [1, {g.codim - 1}], got {h}")


def partial_sums_I(g: Geometry, j: int, rmax: int) -> list[Fraction]:
    """``partial_sum_I(g, j, r)`` for r = 0..rmax in one pass."""
    levels = ((_dot(g.a, m) for m in compositions(g.codim, i)) for i in range(rmax))
    return _power_sums(levels, j)


def partial_sums_J(g: Geometry, h: int, j: int, rmax: int) -> list[Fraction]:
    """``partial_sum_J(g, h, j, r)`` for r = 0..rmax in one pass."""
    pattern = DoublingPattern.prefix(h)
    # level i holds the weighted degrees q = 2i and 2i+1
    levels = (
        (_dot(g.a, m) for q in (2 * i, 2 * i + 1)
         for m in weighted_compositions(pattern, g.codim, q))
        for i in range(rmax)
    )
    return _power_sums(levels, j)


def partial_sum_I(g: Geometry, j: int, r: int) -> Fraction:
    """(1/j!) sum_{i<r} sum_{|m|=i} (m . a)^j."""
    _check_j(g, j)
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return partial_sums_I(g, j, r)[r]


def partial_sum_J(g: Geometry, h: int, j: int, r: int) -> Fraction:
    """(1/j!) sum_{q<2r} sum_{m in B(q)} (m . a)^j."""
    _check_h(g, h)
    _check_j(g, j)
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return partial_sums_J(g, h, j, r)[r]


def polynomial_I(g: Geometry, j: int | None = None, extra: int = 0) -> RationalPolynomial:
    """Interpolate ``partial_sum_I(g, j, .)`` (default j = p) at r = 0..n.

    ``extra`` additional nodes are evaluated and must lie on the same
    polynomial; a mismatch raises ``ArithmeticError``.
    """
    j = g.p if j is None else j
    _check_j(g, j)
    values = partial_sums_I(g, j, g.n + extra)
    return _fit(values, g.n)


def polynomial_J(g: Geometry, h: int, j: int | None = None, extra: int = 0) -> RationalPolynomial:
    j = g.p if j is None else j
    _check_h(g, h)
    _check_j(g, j)
    values = partial_sums_J(g, h, j, g.n + extra)
    return _fit(values, g.n)


def _fit(values: list[Fraction], degree: int) -> RationalPolynomial:
    poly = interpolate(enumerate(values[: degree + 1]))
    for r, v in enumerate(values):
        if r > degree and poly(r) != v:
            raise ArithmeticError(f"samples are not polynomial of degree {degree} at r={r}")
    return poly


def leading_coeff_I(g: Geometry) -> Fraction:
    """Coefficient of r^n in the interpolated top partial sum over I^r."""
    return polynomial_I(g).coefficient(g.n)


def leading_coeff_J(g: Geometry, h: int) -> Fraction:
    """Coefficient of r^n in the interpolated top partial sum over J^r."""
    return polynomial_J(g, h).coefficient(g.n)
