"""Hilbert function, embedding dimension and rationality of the point
obtained by contracting P^p with split conormal degrees a_i >= 0."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from exckit.combinatorics import binomial
from exckit.lattice import compositions

MAX_RMAX = 50


class HypothesisError(ValueError):
    """Input violates a_i >= 0, outside which no formula is claimed."""


def _require_nonnegative(a: Sequence[int]) -> None:
    if not a:
        raise ValueError("degree vector must be nonempty")
    bad = [x for x in a if x < 0]
    if bad:
        raise HypothesisError(f"need all a_i >= 0, got {tuple(a)}")


def hilbert_value(a: Sequence[int], p: int, r: int) -> int:
    """h(r) = sum over compositions i of r of C(p + i . a, p)."""
    _require_nonnegative(a)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return sum(
        binomial(p + sum(i * x for i, x in zip(m, a)), p) for m in compositions(len(a), r)
    )


def embedding_dimension(a: Sequence[int], p: int) -> int:
    _require_nonnegative(a)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return sum(binomial(p + x, x) for x in a)


def rationality_flag(a: Sequence[int]) -> bool:
    """True when rationality is established (all a_i >= 0).

    False means "not established", not "irrational".
    """
    return all(x >= 0 for x in a)


@dataclass(frozen=True)
class HilbertProfile:
    a: tuple[int, ...]
    p: int
    values: tuple[int, ...]
    embedding_dimension: int
    rational: bool


def hilbert_profile(a: Sequence[int], p: int, rmax: int) -> HilbertProfile:
    _require_nonnegative(a)
    if not 0 <= rmax <= MAX_RMAX:
        raise ValueError(f"rmax must lie in [0, {MAX_RMAX}], got {rmax}")
    values = tuple(hilbert_value(a, p, r) for r in range(rmax + 1))
    return HilbertProfile(tuple(a), p, values, embedding_dimension(a, p), rationality_flag(a))
