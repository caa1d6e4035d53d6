"""Inequality systems on conormal degree vectors and a bounded search for
degree vectors that satisfy them.

Everything here is a *necessary* condition. Vectors that pass are called
admissible, never realizable.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from exckit.graded import Geometry
from exckit.lattice import DoublingPattern, exponent_set_T

MAX_SPLIT_CODIM = 16
MAX_ENUM_CODIM = 6
MAX_ENUM_BOUND = 12
FILTERS = ("crepant", "nonnegative")
SYSTEMS = ("filtration", "split")


def theorem_sum(a: Sequence[int], pattern: DoublingPattern, p: int) -> int:
    """sum over t in T of prod a'_i^t_i, with a'_i = 2 a_i on doubled indices."""
    doubled = pattern.doubled(len(a))
    primed = [2 * x if i in doubled else x for i, x in enumerate(a, start=1)]
    return sum(math.prod(x**t for x, t in zip(primed, ts)) for ts in exponent_set_T(len(a), p))


@dataclass(frozen=True)
class PatternRecord:
    pattern: DoublingPattern
    value: int

    @property
    def passed(self) -> bool:
        return self.value >= 0


@dataclass(frozen=True)
class InequalityReport:
    system: str
    geometry: Geometry
    records: tuple[PatternRecord, ...]

    @property
    def overall(self) -> bool:
        return all(rec.passed for rec in self.records)

    def failures(self) -> list[PatternRecord]:
        return [rec for rec in self.records if not rec.passed]


def check_filtration(g: Geometry) -> InequalityReport:
    """Base inequality (h = 0) plus prefix doublings h = 1..n-p-1."""
    records = tuple(
        PatternRecord(DoublingPattern.prefix(h), theorem_sum(g.a, DoublingPattern.prefix(h), g.p))
        for h in range(g.codim)
    )
    return InequalityReport("filtration", g, records)


def _subsets(size: int) -> Iterable[tuple[int, ...]]:
    idx = range(1, size + 1)
    return itertools.chain.from_iterable(itertools.combinations(idx, k) for k in range(size + 1))


def check_split(g: Geometry) -> InequalityReport:
    """Every subset doubling of a split conormal bundle (2^(n-p) patterns)."""
    if g.codim > MAX_SPLIT_CODIM:
        raise ValueError(f"split check refuses codimension {g.codim} > {MAX_SPLIT_CODIM}")
    records = tuple(
        PatternRecord(DoublingPattern.subset(s), theorem_sum(g.a, DoublingPattern.subset(s), g.p))
        for s in _subsets(g.codim)
    )
    return InequalityReport("split", g, records)


def p1_specialization(a: Sequence[int], h: int) -> int:
    """The curve-case linear form 2(a_1+...+a_h) + (a_{h+1}+...)."""
    if not 0 <= h <= len(a):
        raise ValueError(f"h must lie in [0, {len(a)}], got {h}")
    return 2 * sum(a[:h]) + sum(a[h:])


@dataclass(frozen=True)
class Codim2Check:
    factored_ok: bool
    implied: bool


def codim2_odd_check(a1: int, a2: int, p: int) -> Codim2Check:
    """Codimension-two, odd-p consequences.

    ``factored_ok``: sum_{i<=p} a1^i a2^(p-i) == (a1+a2) * sum_i a1^(2i) a2^(p-1-2i).
    ``implied``: a passing split check forces a1+a2, 2a1+a2 and a1+2a2 >= 0.
    """
    if p < 1 or p % 2 == 0:
        raise ValueError(f"p must be a positive odd integer, got {p}")
    full = sum(a1**i * a2 ** (p - i) for i in range(p + 1))
    even = sum(a1 ** (2 * i) * a2 ** (p - 1 - 2 * i) for i in range((p - 1) // 2 + 1))
    passes = check_split(Geometry(p + 2, p, (a1, a2))).overall
    implied = (not passes) or (a1 + a2 >= 0 and 2 * a1 + a2 >= 0 and a1 + 2 * a2 >= 0)
    return Codim2Check(full == (a1 + a2) * even, implied)


def crepant_filter(a: Sequence[int], p: int) -> bool:
    """Adjunction on P^p with trivial canonical class: sum a_i = p + 1."""
    return sum(a) == p + 1


@dataclass(frozen=True)
class AdmissibleCatalog:
    p: int
    codim: int
    bound: int
    system: str
    filters: tuple[str, ...]
    vectors: tuple[tuple[int, ...], ...]
    examined: int = field(default=0)

    @property
    def count(self) -> int:
        return len(self.vectors)


def _passes(a: tuple[int, ...], p: int, system: str, filters: tuple[str, ...]) -> bool:
    if "nonnegative" in filters and min(a) < 0:
        return False
    if "crepant" in filters and not crepant_filter(a, p):
        return False
    g = Geometry.from_degrees(p, a)
    report = check_split(g) if system == "split" else check_filtration(g)
    return report.overall


def _scan_block(args) -> tuple[int, list[tuple[int, ...]]]:
    p, codim, bound, system, filters, lead = args
    examined, found = 0, []
    for rest in itertools.combinations_with_replacement(range(lead, bound + 1), codim - 1):
        vec = (lead,) + rest
        examined += 1
        if _passes(vec, p, system, filters):
            found.append(vec)
    return examined, found


def default_workers() -> int:
    """Worker cap from ``EXCKIT_THREADS``; 1 when unset."""
    raw = os.environ.get("EXCKIT_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"EXCKIT_THREADS must be an integer, got {raw!r}") from None


def enumerate_admissible(
    p: int,
    codim: int,
    bound: int,
    system: str = "split",
    filters: Iterable[str] = (),
    workers: int | None = None,
) -> AdmissibleCatalog:
    """All nondecreasing a in [-bound, bound]^codim passing ``system`` and ``filters``.

    The box is split by leading coordinate; blocks are merged in order, so
    the result does not depend on ``workers``.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if not 2 <= codim <= MAX_ENUM_CODIM:
        raise ValueError(f"codim must lie in [2, {MAX_ENUM_CODIM}], got {codim}")
    if not 0 <= bound <= MAX_ENUM_BOUND:
        raise ValueError(f"bound must lie in [0, {MAX_ENUM_BOUND}], got {bound}")
    if system not in SYSTEMS:
        raise ValueError(f"system must be one of {SYSTEMS}, got {system!r}")
    flt = tuple(sorted(set(filters)))
    unknown = set(flt) - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}; choose from {FILTERS}")
    workers = default_workers() if workers is None else max(1, workers)

    jobs = [(p, codim, bound, system, flt, lead) for lead in range(-bound, bound + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            blocks = list(pool.map(_scan_block, jobs))
    else:
        blocks = [_scan_block(job) for job in jobs]

    vectors = tuple(vec for _, found in blocks for vec in found)
    examined = sum(n for n, _ in blocks)
    return AdmissibleCatalog(p, codim, bound, system, flt, vectors, examined)
