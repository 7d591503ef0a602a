"""Packed binary strings and the Mirkin distance.

Positions are 1-indexed everywhere in the public interface: ``s[1]`` is the
leftmost character of ``str(s)``. Internally a string of length ``n`` is one
Python integer whose most significant of ``n`` bits is position 1, so
lexicographic order on equal-length strings is integer order and Hamming
distance is ``(a ^ b).bit_count()``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (ArithmeticOverflow, InvalidParameter, LengthMismatch,
                     PositionOutOfRange)

INT64_MAX = 2**63 - 1


def checked(value: int, what: str = "value") -> int:
    """Return ``value`` if it fits a signed 64-bit integer, else raise."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise ArithmeticOverflow(f"{what} {value} exceeds 64-bit range")
    return value


@dataclass(frozen=True, order=True, slots=True)
class BitString:
    n: int
    value: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"bit string length must be >= 1, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise InvalidParameter(f"value {self.value} does not fit {self.n} bits")

    @classmethod
    def from_str(cls, text: str) -> BitString:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise InvalidParameter(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitString:
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise InvalidParameter(f"bit must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def zeros(cls, n: int) -> BitString:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitString:
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise PositionOutOfRange(f"position {i} outside 1..{self.n}")
        return (self.value >> (self.n - i)) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(1, self.n + 1):
            yield self[i]

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"BitString('{self}')"

    def __add__(self, other: BitString) -> BitString:
        return BitString(self.n + other.n, (self.value << other.n) | other.value)

    def __invert__(self) -> BitString:
        return complement(self)

    def substring(self, i: int, j: int) -> BitString:
        """Positions ``i..j`` inclusive."""
        if not 1 <= i <= j <= self.n:
            raise PositionOutOfRange(f"substring {i}..{j} outside 1..{self.n}")
        width = j - i + 1
        return BitString(width, (self.value >> (self.n - j)) & ((1 << width) - 1))

    def popcount(self) -> int:
        return self.value.bit_count()


def _same_length(s: BitString, t: BitString) -> None:
    if s.n != t.n:
        raise LengthMismatch(s.n, t.n)


def hamming(s: BitString, t: BitString) -> int:
    _same_length(s, t)
    return (s.value ^ t.value).bit_count()


def mirkin_pair(s: BitString, t: BitString) -> int:
    """Mirkin distance ``d * (n - d)`` with ``d`` the Hamming distance."""
    d = hamming(s, t)
    return d * (s.n - d)


def mirkin_pair_by_pairs(s: BitString, t: BitString) -> int:
    """Count position pairs on which exactly one string has equal bits.

    Quadratic reference implementation of the pairwise definition; used as
    an oracle for :func:`mirkin_pair`.
    """
    _same_length(s, t)
    a, b = list(s), list(t)
    return sum((a[i] == a[j]) != (b[i] == b[j])
               for i, j in combinations(range(s.n), 2))


def complement(s: BitString) -> BitString:
    return BitString(s.n, s.value ^ ((1 << s.n) - 1))


def concat(*parts: BitString) -> BitString:
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def insert(s: BitString, frag: BitString, pos: int) -> BitString:
    """Insert ``frag`` so that it starts at position ``pos`` of the result."""
    if not 1 <= pos <= s.n + 1:
        raise PositionOutOfRange(f"insert position {pos} outside 1..{s.n + 1}")
    tail_len = s.n - pos + 1
    head = s.value >> tail_len
    tail = s.value & ((1 << tail_len) - 1)
    value = (((head << frag.n) | frag.value) << tail_len) | tail
    return BitString(s.n + frag.n, value)


def delete(s: BitString, pos: int, count: int) -> BitString:
    """Remove positions ``pos..pos+count-1``; inverse of :func:`insert`."""
    if count < 1 or not 1 <= pos <= s.n - count + 1 or count >= s.n:
        raise PositionOutOfRange(
            f"cannot delete {count} positions at {pos} from length {s.n}")
    tail_len = s.n - pos - count + 1
    head = s.value >> (tail_len + count)
    tail = s.value & ((1 << tail_len) - 1)
    return BitString(s.n - count, (head << tail_len) | tail)


@dataclass(frozen=True)
class MirkinInstance:
    """A multiset of equal-length bit strings with an optional budget."""

    strings: tuple[tuple[BitString, int], ...]
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(
            (s, int(w)) for s, w in self.strings))
        if not self.strings:
            raise InvalidParameter("instance needs at least one string")
        n = self.strings[0][0].n
        for s, w in self.strings:
            if s.n != n:
                raise LengthMismatch(n, s.n)
            if w < 1:
                raise InvalidParameter(f"multiplicity must be >= 1, got {w}")
        if self.budget is not None:
            if self.budget < 0:
                raise InvalidParameter(f"budget must be >= 0, got {self.budget}")
            checked(self.budget, "budget")

    @classmethod
    def from_strings(cls, strings: Iterable[BitString | str],
                     budget: int | None = None) -> MirkinInstance:
        items = [BitString.from_str(s) if isinstance(s, str) else s
                 for s in strings]
        return cls(tuple((s, 1) for s in items), budget)

    @property
    def n(self) -> int:
        return self.strings[0][0].n

    @property
    def m(self) -> int:
        return sum(w for _, w in self.strings)

    def merged(self) -> MirkinInstance:
        """Combine repeated strings, keeping first-occurrence order."""
        weights: dict[BitString, int] = {}
        for s, w in self.strings:
            weights[s] = weights.get(s, 0) + w
        return MirkinInstance(tuple(weights.items()), self.budget)

    def with_budget(self, budget: int | None) -> MirkinInstance:
        return MirkinInstance(self.strings, budget)


def mirkin_total(candidate: BitString, inst: MirkinInstance) -> int:
    if candidate.n != inst.n:
        raise LengthMismatch(candidate.n, inst.n)
    total = 0
    for s, w in inst.strings:
        total = checked(total + w * mirkin_pair(candidate, s), "mirkin total")
    return total
