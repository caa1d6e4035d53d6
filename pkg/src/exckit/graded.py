"""Graded pieces of ideal powers up to numerical equivalence.

A graded piece is stored as a multiset of line-bundle twists ``O_Z(d)``;
length and Chern classes of such a sum depend only on that multiset.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Sequence

from exckit.combinatorics import binomial
from exckit.lattice import DoublingPattern, compositions, weighted_compositions


@dataclass(frozen=True)
class Geometry:
    """Ambient dimension ``n``, exceptional dimension ``p`` and conormal
    filtration degrees ``a`` (the normal bundle has degrees ``-a_i``)."""

    n: int
    p: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.n - self.p < 2:
            raise ValueError(f"codimension n-p must be >= 2, got {self.n - self.p}")
        if len(self.a) != self.n - self.p:
            raise ValueError(f"a has length {len(self.a)}, expected n-p = {self.n - self.p}")

    @classmethod
    def from_degrees(cls, p: int, a: Sequence[int]) -> Geometry:
        return cls(p + len(a), p, tuple(a))

    @property
    def codim(self) -> int:
        return self.n - self.p


class TwistMultiset(Mapping):
    """Finite formal sum of twists: degree -> positive multiplicity."""

    __slots__ = ("_data",)

    def __init__(self, data: Mapping[int, int] | Iterable[int] = ()) -> None:
        counts = Counter(data) if not isinstance(data, Mapping) else Counter(dict(data))
        if any(v < 0 for v in counts.values()):
            raise ValueError("multiplicities must be nonnegative")
        self._data = {int(d): int(m) for d, m in sorted(counts.items()) if m}

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> TwistMultiset:
        return cls(Counter(degrees))

    def __getitem__(self, degree: int) -> int:
        return self._data[degree]

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TwistMultiset):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._data.items()))

    def __add__(self, other: TwistMultiset) -> TwistMultiset:
        merged = Counter(self._data)
        merged.update(other._data)
        return TwistMultiset(merged)

    def __repr__(self) -> str:
        body = ", ".join(f"{d}: {m}" for d, m in self._data.items())
        return f"TwistMultiset({{{body}}})"

    @property
    def length(self) -> int:
        return sum(self._data.values())

    def shifted(self, by: int) -> TwistMultiset:
        return TwistMultiset({d + by: m for d, m in self._data.items()})


def tensor(x: TwistMultiset, y: TwistMultiset) -> TwistMultiset:
    """Tensor product of twist sums: degrees add, multiplicities multiply."""
    out: Counter[int] = Counter()
    for d1, m1 in x.items():
        for d2, m2 in y.items():
            out[d1 + d2] += m1 * m2
    return TwistMultiset(out)


def symmetric_power(degrees: Sequence[int], r: int) -> TwistMultiset:
    """S^r of ``sum O(d_i)``, built by dynamic programming over the summands."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if not degrees:
        return TwistMultiset({0: 1}) if r == 0 else TwistMultiset()
    # table[s] = S^s of the summands processed so far
    table = [TwistMultiset({s * degrees[0]: 1}) for s in range(r + 1)]
    for d in degrees[1:]:
        table = [
            _union(table[s - m].shifted(m * d) for m in range(s + 1))
            for s in range(r + 1)
        ]
    return table[r]


def _union(pieces: Iterable[TwistMultiset]) -> TwistMultiset:
    acc: Counter[int] = Counter()
    for piece in pieces:
        acc.update(dict(piece))
    return TwistMultiset(acc)


def _twists(a: Sequence[int], stream: Iterable[Sequence[int]]) -> TwistMultiset:
    return TwistMultiset.from_degrees(sum(m * d for m, d in zip(ms, a)) for ms in stream)


def graded_piece_I(g: Geometry, r: int) -> TwistMultiset:
    """I^r / I^{r+1}: one twist per composition of r into n-p parts."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return _twists(g.a, compositions(g.codim, r))


def graded_piece_J(g: Geometry, h: int, r: int, level: Literal["even", "odd"]) -> TwistMultiset:
    """J^r / I J^r (``even``, over B(2r)) or I J^r / J^{r+1} (``odd``, over
    B(2r+1)), where J is the h-th step of the conormal filtration."""
    if not 1 <= h <= g.codim - 1:
        raise ValueError(f"h must lie in [1, {g.codim - 1}], got {h}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if level == "even":
        q = 2 * r
    elif level == "odd":
        q = 2 * r + 1
    else:
        raise ValueError(f"level must be 'even' or 'odd', got {level!r}")
    return _twists(g.a, weighted_compositions(DoublingPattern.prefix(h), g.codim, q))


@dataclass(frozen=True)
class NumericalClass:
    length: int
    chern: tuple[int, ...]


def numerical_class(x: TwistMultiset, p: int) -> NumericalClass:
    """Length and c_1..c_p of a twist sum.

    c_i is the i-th elementary symmetric function of the degree multiset,
    read off from prod_d (1 + d t)^mult truncated at t^p.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    poly = [1] + [0] * p
    for d, mult in x.items():
        factor = [binomial(mult, i) * d**i for i in range(p + 1)]
        poly = [sum(poly[s] * factor[i - s] for s in range(i + 1)) for i in range(p + 1)]
    return NumericalClass(x.length, tuple(poly[1:]))
