"""Brute-force position algebra over the substrings of a text.

Everything here is computed straight from occurrence sets, over all O(n^2)
substrings, and is the reference that the graph builders are checked
against.  Positions are 1-based.  The empty string is taken to begin and
end at every position 1..n, so in a unary text ``a^n`` it shares its
occurrence sets with ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

TextLike = Union["Text", bytes, bytearray, str]


class NotASubstringError(ValueError):
    pass


class NotMaximalError(ValueError):
    pass


@dataclass(frozen=True)
class Text:
    """Immutable byte string with 1-based accessors."""

    data: bytes

    def __post_init__(self):
        if not isinstance(self.data, bytes):
            object.__setattr__(self, "data", as_bytes(self.data))

    def __len__(self) -> int:
        return len(self.data)

    @property
    def n(self) -> int:
        return len(self.data)

    def char(self, i: int) -> int:
        if not 1 <= i <= len(self.data):
            raise IndexError(f"position {i} outside 1..{len(self.data)}")
        return self.data[i - 1]

    def span(self, i: int, j: int) -> bytes:
        """``T[i..j]``; empty when ``i > j``."""
        if i > j:
            return b""
        if i < 1 or j > len(self.data):
            raise IndexError(f"span [{i}..{j}] outside 1..{len(self.data)}")
        return self.data[i - 1 : j]

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self.data)

    @property
    def sigma(self) -> int:
        return len(set(self.data))


def as_bytes(t: TextLike) -> bytes:
    if isinstance(t, Text):
        return t.data
    if isinstance(t, (bytes, bytearray)):
        return bytes(t)
    if isinstance(t, str):
        return t.encode("utf-8")
    raise TypeError(f"expected text-like value, got {type(t).__name__}")


class _Analysis:
    """Occurrence sets of every distinct substring of one text."""

    def __init__(self, data: bytes):
        n = len(data)
        self.data = data
        self.n = n
        begs: dict[bytes, list[int]] = {}
        ends: dict[bytes, list[int]] = {}
        for i in range(n):
            for j in range(i + 1, n + 1):
                s = data[i:j]
                b = begs.get(s)
                if b is None:
                    begs[s] = [i + 1]
                    ends[s] = [j]
                else:
                    b.append(i + 1)
                    ends[s].append(j)
        everywhere = tuple(range(1, n + 1))
        self.begs = {s: tuple(v) for s, v in begs.items()}
        self.ends = {s: tuple(v) for s, v in ends.items()}
        self.begs[b""] = everywhere
        self.ends[b""] = everywhere

        # longest member of each EndPos / BegPos class
        self.left_long: dict[tuple[int, ...], bytes] = {}
        self.right_long: dict[tuple[int, ...], bytes] = {}
        for s, e in self.ends.items():
            cur = self.left_long.get(e)
            if cur is None or len(s) > len(cur):
                self.left_long[e] = s
        for s, b in self.begs.items():
            cur = self.right_long.get(b)
            if cur is None or len(s) > len(cur):
                self.right_long[b] = s
        self._maximal: frozenset[bytes] | None = None

    def require(self, x: bytes) -> None:
        if x not in self.ends:
            raise NotASubstringError(f"{x!r} is not a substring of {self.data!r}")

    def extensions(self, x: bytes) -> frozenset[int]:
        # via begin positions so that the empty string sees T[1] too
        k = len(x)
        return frozenset(self.data[b - 1 + k] for b in self.begs[x] if b + k <= self.n)

    @property
    def maximal(self) -> frozenset[bytes]:
        if self._maximal is None:
            left_m = set(self.left_long.values())
            right_m = set(self.right_long.values())
            self._maximal = frozenset(left_m & right_m)
        return self._maximal


@lru_cache(maxsize=8192)
def analyze(data: bytes) -> _Analysis:
    return _Analysis(data)


def _setup(u: TextLike, t: TextLike) -> tuple[bytes, _Analysis]:
    return as_bytes(u), analyze(as_bytes(t))


def substrings(t: TextLike) -> frozenset[bytes]:
    """All distinct substrings of ``t``, including the empty string."""
    return frozenset(analyze(as_bytes(t)).ends)


def begin_positions(u: TextLike, t: TextLike) -> tuple[int, ...]:
    u, an = _setup(u, t)
    return an.begs.get(u, ())


def end_positions(u: TextLike, t: TextLike) -> tuple[int, ...]:
    u, an = _setup(u, t)
    return an.ends.get(u, ())


def left_class_longest(x: TextLike, t: TextLike) -> bytes:
    """Longest string sharing the end positions of ``x``; always of the form ``alpha + x``."""
    x, an = _setup(x, t)
    an.require(x)
    return an.left_long[an.ends[x]]


def right_class_longest(x: TextLike, t: TextLike) -> bytes:
    """Longest string sharing the begin positions of ``x``; always of the form ``x + beta``."""
    x, an = _setup(x, t)
    an.require(x)
    return an.right_long[an.begs[x]]


def left_maximal_set(t: TextLike) -> frozenset[bytes]:
    return frozenset(analyze(as_bytes(t)).left_long.values())


def right_maximal_set(t: TextLike) -> frozenset[bytes]:
    return frozenset(analyze(as_bytes(t)).right_long.values())


@dataclass(frozen=True)
class MaximalMember:
    end_positions: tuple[int, ...]
    extensions: frozenset[int]


@dataclass(frozen=True)
class MaximalSet:
    """The maximal substrings of a text, each with its end positions and right extensions."""

    text: bytes
    members: dict[bytes, MaximalMember]

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[bytes]:
        return iter(sorted(self.members, key=lambda s: (len(s), s)))

    def __len__(self) -> int:
        return len(self.members)

    def labels(self) -> frozenset[bytes]:
        return frozenset(self.members)


def maximal_set(t: TextLike) -> MaximalSet:
    an = analyze(as_bytes(t))
    members = {
        x: MaximalMember(an.ends[x], an.extensions(x)) for x in an.maximal
    }
    return MaximalSet(an.data, members)


def maximal_labels(t: TextLike) -> frozenset[bytes]:
    """Just the member strings of :func:`maximal_set`, without annotations."""
    return analyze(as_bytes(t)).maximal


def maximal_repeats(t: TextLike) -> frozenset[bytes]:
    an = analyze(as_bytes(t))
    return frozenset(
        x for x in an.maximal if x and x != an.data and len(an.ends[x]) >= 2
    )


def right_extensions(x: TextLike, t: TextLike) -> frozenset[int]:
    """Characters ``c`` with ``x + c`` a substring of ``t``."""
    x, an = _setup(x, t)
    an.require(x)
    return an.extensions(x)


def extension_count(x: TextLike, t: TextLike) -> int:
    """Out-degree generalised to any substring: the number of distinct right extensions."""
    return len(right_extensions(x, t))


def out_degree(x: TextLike, t: TextLike) -> int:
    x, an = _setup(x, t)
    if x not in an.maximal:
        raise NotMaximalError(f"{x!r} is not maximal in {an.data!r}")
    return len(an.extensions(x))


def is_unary(t: TextLike) -> bool:
    return len(set(as_bytes(t))) == 1
