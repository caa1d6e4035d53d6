"""Composition streams: plain compositions, the exponent set T, and the
weighted sets B(r) with weight 1 on a prefix of indices and 2 on the rest."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Composition = tuple[int, ...]


def compositions(parts: int, total: int, first: int | None = None) -> Iterator[Composition]:
    """Yield every composition of ``total`` into ``parts`` nonnegative parts.

    Order is lexicographic. ``first`` pins the leading coordinate, which is
    how callers split a stream into independent chunks.
    """
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    if total < 0:
        return
    if first is not None:
        if 0 <= first <= total:
            for rest in _compositions(parts - 1, total - first):
                yield (first,) + rest
        return
    yield from _compositions(parts, total)


def _compositions(parts: int, total: int) -> Iterator[Composition]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(parts - 1, total - head):
            yield (head,) + rest


def weighted_stream(weights: Sequence[int], total: int) -> Iterator[Composition]:
    """Yield every m >= 0 with sum(w_i * m_i) == total, lexicographically."""
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    yield from _weighted(tuple(weights), total)


def _weighted(weights: tuple[int, ...], total: int) -> Iterator[Composition]:
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    if len(weights) == 1:
        if total % w == 0:
            yield (total // w,)
        return
    for head in range(total // w + 1):
        for rest in _weighted(weights[1:], total - head * w):
            yield (head,) + rest


@dataclass(frozen=True)
class DoublingPattern:
    """Which indices of a degree vector get doubled (1-based).

    ``prefix`` mode doubles indices 1..h and models an ordered filtration;
    ``subset`` mode doubles an arbitrary index set and models a split bundle
    whose summands may be reordered.
    """

    mode: str
    h: int = 0
    indices: frozenset[int] = frozenset()

    @classmethod
    def prefix(cls, h: int) -> DoublingPattern:
        if h < 0:
            raise ValueError(f"prefix length must be >= 0, got {h}")
        return cls("prefix", h=h)

    @classmethod
    def subset(cls, indices) -> DoublingPattern:
        idx = frozenset(int(i) for i in indices)
        if any(i < 1 for i in idx):
            raise ValueError("subset indices are 1-based")
        return cls("subset", indices=idx)

    def doubled(self, size: int) -> frozenset[int]:
        """The doubled 1-based indices for a vector of length ``size``."""
        self.validate(size)
        if self.mode == "prefix":
            return frozenset(range(1, self.h + 1))
        return self.indices

    def validate(self, size: int) -> None:
        if self.mode == "prefix":
            if not 0 <= self.h <= size:
                raise ValueError(f"prefix h={self.h} outside [0, {size}]")
        elif self.mode == "subset":
            if any(i > size for i in self.indices):
                raise ValueError(f"subset {sorted(self.indices)} outside 1..{size}")
        else:
            raise ValueError(f"unknown doubling mode {self.mode!r}")

    def label(self) -> str:
        if self.mode == "prefix":
            return f"h={self.h}"
        return "{" + ",".join(str(i) for i in sorted(self.indices)) + "}"


def weighted_compositions(pattern: DoublingPattern, parts: int, r: int) -> Iterator[Composition]:
    """Stream the set B(r): weight 1 on indices <= h, weight 2 beyond."""
    if pattern.mode != "prefix":
        raise ValueError("weighted_compositions needs a prefix pattern")
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    pattern.validate(parts)
    weights = [1] * pattern.h + [2] * (parts - pattern.h)
    if r < 0:
        return iter(())
    return weighted_stream(weights, r)


def exponent_set_T(parts: int, p: int) -> Iterator[Composition]:
    """Exponent vectors t >= 0 of length ``parts`` with |t| = p."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return compositions(parts, p)
