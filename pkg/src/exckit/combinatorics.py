"""Exact binomial / finite-difference identities and the power sums over
compositions, each with a brute-force definition.

Python ints and :class:`fractions.Fraction` carry all exact values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from exckit.lattice import compositions


class IdentityViolation(ArithmeticError):
    """An identity that should hold exactly did not."""


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k lies outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def finite_difference(k: int, j: int) -> int:
    """sum_t (-1)^t C(k,t) t^j for 0 <= j <= k, with 0^0 = 1."""
    if k < 0 or j < 0:
        raise ValueError("k and j must be nonnegative")
    if j > k:
        raise ValueError(f"need j <= k, got j={j}, k={k}")
    return sum((-1) ** t * binomial(k, t) * t**j for t in range(k + 1))


def shifted_difference(k: int, i: int) -> int:
    """sum_t (-1)^t C(k,t) (k+i-t)^k; equals k! for every i >= 0."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if i < 0:
        raise ValueError(f"i must be >= 0, got {i}")
    return sum((-1) ** t * binomial(k, t) * (k + i - t) ** k for t in range(k + 1))


def power_sum_compositions(i: int, j: int, k: int) -> int:
    """Brute-force sum of m_1^k over all compositions m of j into i parts."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    return sum(m[0] ** k for m in compositions(i, j))


@dataclass(frozen=True)
class CombLemmaCoeffs:
    k: int
    u: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.u) != self.k - 1:
            raise ValueError(f"expected {self.k - 1} coefficients, got {len(self.u)}")
        if 1 + sum(self.u) != math.factorial(self.k):
            raise IdentityViolation(f"1 + sum(u) = {1 + sum(self.u)} != {self.k}!")

    def expansion(self, i: int, j: int) -> int:
        """Right-hand side C(i+j+k-2, i+k-1) + sum_s u_s C(i+j+k-2-s, i+k-1)."""
        return _lemma_rhs(self.u, i, j, self.k)


def _lemma_rhs(u: Sequence[int], i: int, j: int, k: int) -> int:
    top = i + j + k - 2
    low = i + k - 1
    total = binomial(top, low) if top >= 0 else 0
    for s, coeff in enumerate(u, start=1):
        if top - s >= 0:
            total += coeff * binomial(top - s, low)
    return total


def _lemma_system(k: int, samples: Iterable[tuple[int, int]]):
    rows, rhs = [], []
    for i, j in samples:
        top, low = i + j + k - 2, i + k - 1
        rows.append([Fraction(binomial(top - s, low)) if top - s >= 0 else Fraction(0)
                     for s in range(1, k)])
        rhs.append(Fraction(power_sum_compositions(i, j, k) - binomial(top, low)))
    return rows, rhs


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve an (over)determined system exactly by row reduction.

    Raises :class:`IdentityViolation` when the system is inconsistent and
    ``ValueError`` when it does not pin down a unique solution.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(aug)) if aug[r][col] != 0), None)
        if sel is None:
            continue
        aug[pivot_row], aug[sel] = aug[sel], aug[pivot_row]
        piv = aug[pivot_row][col]
        aug[pivot_row] = [x / piv for x in aug[pivot_row]]
        for r in range(len(aug)):
            if r != pivot_row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    for r in range(pivot_row, len(aug)):
        if aug[r][-1] != 0:
            raise IdentityViolation("inconsistent linear system")
    if len(pivots) != ncols:
        raise ValueError("linear system is rank deficient")
    return [aug[r][-1] for r in range(ncols)]


def comb_lemma_coefficients(k: int) -> CombLemmaCoeffs:
    """Recover u_1..u_{k-1} from brute-force power sums.

    The coefficients are solved from two disjoint sets of (i, j) samples;
    both solutions must agree, be integral, and satisfy 1 + sum(u) = k!.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    first = [(1, j) for j in range(1, k + 2)]
    second = [(i, j) for i in (2, 3) for j in range(1, k + 2)]
    solutions = []
    for samples in (first, second):
        rows, rhs = _lemma_system(k, samples)
        if k == 1:
            if any(b != 0 for b in rhs):
                raise IdentityViolation("k=1 expansion fails on brute-force samples")
            solutions.append([])
        else:
            solutions.append(solve_exact(rows, rhs))
    if solutions[0] != solutions[1]:
        raise IdentityViolation(f"coefficients depend on samples: {solutions}")
    if any(x.denominator != 1 for x in solutions[0]):
        raise IdentityViolation(f"non-integral coefficients {solutions[0]}")
    return CombLemmaCoeffs(k, tuple(int(x) for x in solutions[0]))
