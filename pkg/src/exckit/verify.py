"""Identity suites that cross-check every computational route against an
independent one. Each suite returns how many cases it checked and any
counterexamples it found."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from exckit.admissibility import codim2_odd_check, p1_specialization, theorem_sum
from exckit.charpoly import interpolate, leading_coeff_I, leading_coeff_J, polynomial_I
from exckit.combinatorics import (
    comb_lemma_coefficients,
    finite_difference,
    power_sum_compositions,
    shifted_difference,
)
from exckit.graded import Geometry, TwistMultiset, graded_piece_J, symmetric_power, tensor
from exckit.lattice import DoublingPattern


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, detail: str) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(detail)


@dataclass
class VerifyOptions:
    kmax: int | None = None
    imax: int | None = None
    jmax: int | None = None
    rmax: int | None = None
    bound: int | None = None
    samples: int = 50
    seed: int = 0


def finite_difference_suite(opts: VerifyOptions) -> SuiteResult:
    res = SuiteResult("finite-difference")
    kmax = 10 if opts.kmax is None else opts.kmax
    for k in range(kmax + 1):
        for j in range(k + 1):
            want = 0 if j < k else (-1) ** k * math.factorial(k)
            got = finite_difference(k, j)
            res.expect(got == want, f"k={k} j={j}: {got} != {want}")
    return res


def shifted_difference_suite(opts: VerifyOptions) -> SuiteResult:
    res = SuiteResult("shifted-difference")
    kmax = 8 if opts.kmax is None else opts.kmax
    imax = 8 if opts.imax is None else opts.imax
    for k in range(1, kmax + 1):
        for i in range(imax + 1):
            got = shifted_difference(k, i)
            res.expect(got == math.factorial(k), f"k={k} i={i}: {got} != {k}!")
    return res


def comb_lemma_suite(opts: VerifyOptions) -> SuiteResult:
    res = SuiteResult("comb-lemma")
    kmax = 5 if opts.kmax is None else opts.kmax
    imax = 6 if opts.imax is None else opts.imax
    jmax = 8 if opts.jmax is None else opts.jmax
    for k in range(1, kmax + 1):
        try:
            coeffs = comb_lemma_coefficients(k)
        except ArithmeticError as exc:
            res.expect(False, f"k={k}: {exc}")
            continue
        res.expect(1 + sum(coeffs.u) == math.factorial(k), f"k={k}: 1+sum(u) != k!")
        for i in range(1, imax + 1):
            for j in range(jmax + 1):
                lhs = power_sum_compositions(i, j, k)
                rhs = coeffs.expansion(i, j)
                res.expect(lhs == rhs, f"i={i} j={j} k={k}: brute {lhs} != expansion {rhs}")
    return res


def filtration_suite(opts: VerifyOptions) -> SuiteResult:
    """Graded pieces over B(2r), B(2r+1) versus sums of S^a (x) S^b."""
    res = SuiteResult("filtration")
    rng = random.Random(opts.seed)
    rmax = 5 if opts.rmax is None else opts.rmax
    for _ in range(opts.samples):
        codim = rng.randint(2, 4)
        a = tuple(rng.randint(-6, 6) for _ in range(codim))
        g = Geometry.from_degrees(1, a)
        for h in range(1, codim):
            head, tail = a[:h], a[h:]
            for r in range(rmax + 1):
                odd = sum((tensor(symmetric_power(head, 2 * k + 1), symmetric_power(tail, r - k))
                           for k in range(r + 1)), start=TwistMultiset())
                even = sum((tensor(symmetric_power(head, 2 * k), symmetric_power(tail, r - k))
                            for k in range(r + 1)), start=TwistMultiset())
                res.expect(odd == graded_piece_J(g, h, r, "odd"), f"a={a} h={h} r={r} odd")
                res.expect(even == graded_piece_J(g, h, r, "even"), f"a={a} h={h} r={r} even")
    return res


def leading_coeff_suite(opts: VerifyOptions) -> SuiteResult:
    """n! * leading coefficient == sum_T a^t, and the J-case ratio is constant."""
    res = SuiteResult("leading-coeff")
    bound = 2 if opts.bound is None else opts.bound
    for p in (1, 2, 3):
        for codim in (2, 3):
            ratios: dict[int, set[Fraction]] = {h: set() for h in range(1, codim)}
            for a in itertools.product(range(-bound, bound + 1), repeat=codim):
                g = Geometry.from_degrees(p, a)
                want = theorem_sum(a, DoublingPattern.prefix(0), p)
                got = leading_coeff_I(g) * math.factorial(g.n)
                res.expect(got == want, f"p={p} a={a}: n!*lc = {got} != {want}")
                for h in range(1, codim):
                    s = theorem_sum(a, DoublingPattern.prefix(h), p)
                    if s:
                        ratios[h].add(leading_coeff_J(g, h) / s)
            for h, seen in ratios.items():
                ok = len(seen) == 1 and next(iter(seen)) > 0
                res.expect(ok, f"p={p} codim={codim} h={h}: ratios {sorted(seen)}")
    return res


def lemma_cross_suite(opts: VerifyOptions) -> SuiteResult:
    """Interpolated partial sums versus the closed binomial expansion.

    With a = e_1 the top partial sum is (1/k!) sum_{j<r} sum_{|m|=j} m_1^k,
    which the expansion with the solved u's gives without enumeration.
    """
    res = SuiteResult("lemma-cross")
    kmax = 4 if opts.kmax is None else opts.kmax
    for k in range(1, kmax + 1):
        coeffs = comb_lemma_coefficients(k)
        for i in range(2, 5):
            g = Geometry.from_degrees(k, (1,) + (0,) * (i - 1))
            poly = polynomial_I(g, extra=2)
            acc, samples = 0, []
            for r in range(g.n + 1):
                samples.append((r, Fraction(acc, math.factorial(k))))
                acc += coeffs.expansion(i, r)
            closed = interpolate(samples)
            res.expect(poly == closed, f"k={k} i={i}: {poly} != {closed}")
            res.expect(poly.coefficient(g.n) == Fraction(1, math.factorial(g.n)),
                       f"k={k} i={i}: top coefficient {poly.coefficient(g.n)}")
    return res


def p1_recovery_suite(opts: VerifyOptions) -> SuiteResult:
    res = SuiteResult("p1-recovery")
    ranges = [(2, 5), (3, 3)] if opts.bound is None else [(2, opts.bound), (3, opts.bound)]
    for codim, b in ranges:
        for a in itertools.product(range(-b, b + 1), repeat=codim):
            for h in range(codim + 1):
                got = theorem_sum(a, DoublingPattern.prefix(h), 1)
                want = p1_specialization(a, h)
                res.expect(got == want, f"a={a} h={h}: {got} != {want}")
    return res


def codim2_odd_suite(opts: VerifyOptions) -> SuiteResult:
    res = SuiteResult("codim2-odd")
    b = 6 if opts.bound is None else opts.bound
    for p in (1, 3, 5):
        for a1 in range(-b, b + 1):
            for a2 in range(-b, b + 1):
                out = codim2_odd_check(a1, a2, p)
                res.expect(out.factored_ok, f"p={p} a=({a1},{a2}): factorization")
                res.expect(out.implied, f"p={p} a=({a1},{a2}): implication")
    return res


SUITES: dict[str, Callable[[VerifyOptions], SuiteResult]] = {
    "finite-difference": finite_difference_suite,
    "shifted-difference": shifted_difference_suite,
    "comb-lemma": comb_lemma_suite,
    "filtration": filtration_suite,
    "leading-coeff": leading_coeff_suite,
    "lemma-cross": lemma_cross_suite,
    "p1-recovery": p1_recovery_suite,
    "codim2-odd": codim2_odd_suite,
}


def run_suites(names: list[str], opts: VerifyOptions | None = None) -> list[SuiteResult]:
    opts = opts or VerifyOptions()
    if "none" in names:
        return []
    if not names or "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; choose from {sorted(SUITES)}")
    return [SUITES[n](opts) for n in names]
