"""Finite multisets and signed integer vectors over graded generators.

Multisets are the elements of the free commutative monoid on one
dimension's generators; signed vectors are the elements of the free
abelian group.  Everything here is immutable and pure, so values can be
shared freely between threads and reused as dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

#: Counts at or beyond one machine word are rejected instead of accepted.
MAX_COUNT = 2**63 - 1


class DimensionMismatchError(ValueError):
    """Operands are graded by different dimensions."""


@dataclass(frozen=True, order=True)
class GeneratorId:
    """A named generator in a fixed dimension.

    Instances order by (dim, name); this is the canonical order used for
    all deterministic output.
    """

    dim: int
    name: str

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError(f"generator dimension must be >= 0, got {self.dim}")
        if not self.name or any(c.isspace() or not c.isprintable() for c in self.name):
            raise ValueError(
                f"generator name must be a non-empty printable token, got {self.name!r}"
            )

    def __str__(self) -> str:
        return self.name


def _same_dim(a: Multiset | SignedVector, b: Multiset | SignedVector) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(
            f"operands graded by dimensions {a.dim} and {b.dim}"
        )


class Multiset:
    """Finite multiset of generators, all of one dimension.

    The zero element is the empty multiset, which still remembers its
    dimension; mixed-dimension operands are an error, never a coercion.
    A multiset with all counts equal to 1 is a subset (equivalently, it
    is radical: a sum of distinct generators).
    """

    __slots__ = ("_dim", "_counts", "_items", "_hash")

    def __init__(self, dim: int, counts: Mapping[GeneratorId, int] | Iterable[tuple[GeneratorId, int]] = ()):
        if dim < 0:
            raise ValueError(f"dimension must be >= 0, got {dim}")
        pairs = counts.items() if isinstance(counts, Mapping) else list(counts)
        clean: dict[GeneratorId, int] = {}
        for gen, count in pairs:
            if gen.dim != dim:
                raise DimensionMismatchError(
                    f"generator {gen.name!r} has dimension {gen.dim}, expected {dim}"
                )
            if gen in clean:
                raise ValueError(f"duplicate generator {gen.name!r}")
            if count <= 0:
                raise ValueError(f"count for {gen.name!r} must be positive, got {count}")
            if count > MAX_COUNT:
                raise OverflowError(f"count for {gen.name!r} exceeds {MAX_COUNT}")
            clean[gen] = count
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_counts", clean)
        object.__setattr__(self, "_items", tuple(sorted(clean.items())))
        object.__setattr__(self, "_hash", hash((dim, self._items)))

    def __setattr__(self, name, value):
        raise AttributeError("Multiset is immutable")

    @classmethod
    def empty(cls, dim: int) -> Multiset:
        return cls(dim)

    @classmethod
    def subset(cls, dim: int, gens: Iterable[GeneratorId]) -> Multiset:
        """Multiset with count 1 for each given generator (duplicates are an error)."""
        return cls(dim, [(g, 1) for g in gens])

    @classmethod
    def tally(cls, dim: int, gens: Iterable[GeneratorId]) -> Multiset:
        """Multiset counting occurrences in the given iterable."""
        counts: dict[GeneratorId, int] = {}
        for g in gens:
            counts[g] = counts.get(g, 0) + 1
        return cls(dim, counts)

    @classmethod
    def of(cls, *gens: GeneratorId) -> Multiset:
        """Tally of one or more generators; the dimension is taken from the first."""
        if not gens:
            raise ValueError("Multiset.of needs at least one generator; use empty(dim)")
        return cls.tally(gens[0].dim, gens)

    @property
    def dim(self) -> int:
        return self._dim

    def count(self, gen: GeneratorId) -> int:
        return self._counts.get(gen, 0)

    def items(self) -> tuple[tuple[GeneratorId, int], ...]:
        return self._items

    def support(self) -> tuple[GeneratorId, ...]:
        return tuple(g for g, _ in self._items)

    def support_set(self) -> frozenset[GeneratorId]:
        return frozenset(self._counts)

    def total(self) -> int:
        """Sum of all counts (the augmentation of a dimension-0 chain)."""
        return sum(self._counts.values())

    def is_empty(self) -> bool:
        return not self._counts

    def is_radical(self) -> bool:
        """True iff every count is 1, i.e. the multiset is a subset."""
        return all(c == 1 for c in self._counts.values())

    def disjoint_union(self, other: Multiset) -> Multiset:
        _same_dim(self, other)
        counts = dict(self._counts)
        for g, c in other._counts.items():
            counts[g] = counts.get(g, 0) + c
        return Multiset(self._dim, counts)

    __add__ = disjoint_union

    def difference(self, other: Multiset) -> Multiset:
        """Truncated difference: pointwise max(count - other, 0)."""
        _same_dim(self, other)
        counts = {}
        for g, c in self._counts.items():
            d = c - other.count(g)
            if d > 0:
                counts[g] = d
        return Multiset(self._dim, counts)

    __sub__ = difference

    def meet(self, other: Multiset) -> Multiset:
        """Pointwise min."""
        _same_dim(self, other)
        counts = {}
        for g, c in self._counts.items():
            d = min(c, other.count(g))
            if d > 0:
                counts[g] = d
        return Multiset(self._dim, counts)

    __and__ = meet

    def join(self, other: Multiset) -> Multiset:
        """Pointwise max."""
        _same_dim(self, other)
        counts = dict(self._counts)
        for g, c in other._counts.items():
            if c > counts.get(g, 0):
                counts[g] = c
        return Multiset(self._dim, counts)

    __or__ = join

    def disjoint(self, other: Multiset) -> bool:
        """True iff the meet is empty."""
        _same_dim(self, other)
        small, large = (self, other) if len(self._counts) <= len(other._counts) else (other, self)
        return all(g not in large._counts for g in small._counts)

    def __le__(self, other: Multiset) -> bool:
        _same_dim(self, other)
        return all(c <= other.count(g) for g, c in self._counts.items())

    def to_vector(self) -> SignedVector:
        return SignedVector(self._dim, self._counts)

    def sort_key(self) -> tuple:
        return tuple((g.name, c) for g, c in self._items)

    def __contains__(self, gen: GeneratorId) -> bool:
        return gen in self._counts

    def __iter__(self) -> Iterator[GeneratorId]:
        return iter(g for g, _ in self._items)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._dim == other._dim and self._counts == other._counts

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Multiset({self._dim}, {dict((g.name, c) for g, c in self._items)!r})"

    def __str__(self) -> str:
        if not self._items:
            return "{}"
        parts = [g.name if c == 1 else f"{g.name}:{c}" for g, c in self._items]
        return "{" + ", ".join(parts) + "}"


class SignedVector:
    """Element of the free abelian group on one dimension's generators.

    Stored sparsely: only nonzero entries are kept.  The negative and
    positive parts are disjoint multisets whose difference reconstructs
    the vector.
    """

    __slots__ = ("_dim", "_entries", "_items", "_hash")

    def __init__(self, dim: int, entries: Mapping[GeneratorId, int] | Iterable[tuple[GeneratorId, int]] = ()):
        if dim < 0:
            raise ValueError(f"dimension must be >= 0, got {dim}")
        pairs = entries.items() if isinstance(entries, Mapping) else list(entries)
        clean: dict[GeneratorId, int] = {}
        for gen, value in pairs:
            if gen.dim != dim:
                raise DimensionMismatchError(
                    f"generator {gen.name!r} has dimension {gen.dim}, expected {dim}"
                )
            if gen in clean:
                raise ValueError(f"duplicate generator {gen.name!r}")
            if value == 0:
                continue
            if abs(value) > MAX_COUNT:
                raise OverflowError(f"entry for {gen.name!r} exceeds {MAX_COUNT}")
            clean[gen] = value
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_entries", clean)
        object.__setattr__(self, "_items", tuple(sorted(clean.items())))
        object.__setattr__(self, "_hash", hash((dim, self._items)))

    def __setattr__(self, name, value):
        raise AttributeError("SignedVector is immutable")

    @classmethod
    def zero(cls, dim: int) -> SignedVector:
        return cls(dim)

    @classmethod
    def from_parts(cls, neg: Multiset, pos: Multiset) -> SignedVector:
        """The vector pos - neg."""
        _same_dim(neg, pos)
        entries = {g: c for g, c in pos.items()}
        for g, c in neg.items():
            entries[g] = entries.get(g, 0) - c
        return cls(pos.dim, entries)

    @property
    def dim(self) -> int:
        return self._dim

    def entry(self, gen: GeneratorId) -> int:
        return self._entries.get(gen, 0)

    def items(self) -> tuple[tuple[GeneratorId, int], ...]:
        return self._items

    def is_zero(self) -> bool:
        return not self._entries

    def parts(self) -> tuple[Multiset, Multiset]:
        """(negative part, positive part): disjoint multisets with pos - neg = self."""
        neg = {g: -v for g, v in self._entries.items() if v < 0}
        pos = {g: v for g, v in self._entries.items() if v > 0}
        return Multiset(self._dim, neg), Multiset(self._dim, pos)

    def __add__(self, other: SignedVector) -> SignedVector:
        _same_dim(self, other)
        entries = dict(self._entries)
        for g, v in other._entries.items():
            entries[g] = entries.get(g, 0) + v
        return SignedVector(self._dim, entries)

    def __sub__(self, other: SignedVector) -> SignedVector:
        _same_dim(self, other)
        entries = dict(self._entries)
        for g, v in other._entries.items():
            entries[g] = entries.get(g, 0) - v
        return SignedVector(self._dim, entries)

    def __neg__(self) -> SignedVector:
        return SignedVector(self._dim, {g: -v for g, v in self._entries.items()})

    def scale(self, k: int) -> SignedVector:
        if k == 0:
            return SignedVector.zero(self._dim)
        return SignedVector(self._dim, {g: k * v for g, v in self._entries.items()})

    def is_positive(self) -> bool:
        """True iff every entry is >= 0, i.e. the vector is a multiset."""
        return all(v > 0 for v in self._entries.values())

    def to_multiset(self) -> Multiset:
        if not self.is_positive():
            raise ValueError(f"vector {self} has negative entries")
        return Multiset(self._dim, self._entries)

    def sort_key(self) -> tuple:
        return tuple((g.name, v) for g, v in self._items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedVector):
            return NotImplemented
        return self._dim == other._dim and self._entries == other._entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedVector({self._dim}, {dict((g.name, v) for g, v in self._items)!r})"

    def __str__(self) -> str:
        if not self._items:
            return "0"
        terms = []
        for g, v in self._items:
            sign = "+" if v > 0 else "-"
            mag = abs(v)
            terms.append(f"{sign}{'' if mag == 1 else mag}{g.name}")
        return " ".join(terms)


def disjoint_union(s: Multiset, t: Multiset) -> Multiset:
    return s.disjoint_union(t)


def difference(s: Multiset, t: Multiset) -> Multiset:
    return s.difference(t)


def meet_join(s: Multiset, t: Multiset) -> tuple[Multiset, Multiset]:
    return s.meet(t), s.join(t)


def parts(v: SignedVector) -> tuple[Multiset, Multiset]:
    return v.parts()


def is_radical(s: Multiset) -> bool:
    return s.is_radical()
