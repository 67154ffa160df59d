"""Shared domain types: integer vectors, channel parameters, and codes.

Vectors are plain tuples of Python ints (arbitrary precision, immutable,
hashable).  Everything in this package is a pure function over such values,
so all of it is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

Vec = tuple[int, ...]


class EnumerationCapExceeded(RuntimeError):
    """An enumeration would produce more vectors than the configured cap."""


class ReconstructionError(RuntimeError):
    """A reconstruction procedure could not identify a codeword.

    Raised when decoding fails or no candidate covers the read set; this
    signals a violated precondition (reads not drawn from a single codeword
    ball, or too few of them), never an internal bug.
    """


DEFAULT_ENUM_CAP = 10**7


@dataclass(frozen=True)
class ChannelParams:
    """Channel description: length n, at most t errors, each in [-k_minus, k_plus].

    ``t = 0`` is accepted (the ball degenerates to the zero vector); decoders
    routinely search radius-0 balls.
    """

    n: int
    t: int
    k_plus: int
    k_minus: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.t <= self.n:
            raise ValueError(f"t must be in [0, n={self.n}], got {self.t}")
        if self.k_minus < 0 or self.k_plus < self.k_minus:
            raise ValueError(
                f"need k_plus >= k_minus >= 0, got ({self.k_plus}, {self.k_minus})"
            )
        if self.k_plus < 1:
            raise ValueError("k_plus + k_minus = 0 makes the channel trivial")

    @property
    def magnitude_span(self) -> int:
        return self.k_plus + self.k_minus

    def with_radius(self, radius: int) -> "ChannelParams":
        """Same channel with the error count replaced by ``radius``."""
        return ChannelParams(self.n, radius, self.k_plus, self.k_minus)


class _Erasure:
    __slots__ = ()

    def __repr__(self) -> str:
        return "?"


#: Sentinel marking an erased coordinate in an EstimateWord.
ERASURE = _Erasure()


@dataclass(frozen=True)
class EstimateWord:
    """Length-n word over int-or-erasure produced by the majority vote."""

    entries: tuple

    def erasure_positions(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.entries) if v is ERASURE)

    def error_positions(self, reference: Vec) -> tuple[int, ...]:
        """Coordinates holding an integer that disagrees with ``reference``."""
        return tuple(
            i
            for i, v in enumerate(self.entries)
            if v is not ERASURE and v != reference[i]
        )

    def __len__(self) -> int:
        return len(self.entries)


def vector_add(a: Vec, b: Vec) -> Vec:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vector_sub(a: Vec, b: Vec) -> Vec:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


class Code:
    """A code over Z^n: membership test plus a bounded-radius unique decoder.

    ``decode_within(z, radius, params)`` returns a codeword c with
    z in c + B(n, radius, k_plus, k_minus), or None when no codeword lies in
    the search window.  Candidates c = z - e are scanned with e running over
    the error ball in lexicographic order, so the result is deterministic;
    when the code corrects ``radius`` errors the result is independent of
    that order.  Results are memoized per handle.
    """

    #: Known minimum distance of the code, when the constructor can tell.
    min_distance: Optional[int] = None

    def contains(self, v: Vec) -> bool:
        raise NotImplementedError

    def decode_within(
        self, z: Vec, radius: int, params: ChannelParams
    ) -> Optional[Vec]:
        key = (z, radius, params.k_plus, params.k_minus)
        memo = self._memo()
        if key in memo:
            return memo[key]
        result = None
        for e in _ball_vectors(len(z), radius, params.k_plus, params.k_minus):
            c = tuple(zi - ei for zi, ei in zip(z, e))
            if self.contains(c):
                result = c
                break
        memo[key] = result
        return result

    def _memo(self) -> dict:
        memo = getattr(self, "_decode_memo", None)
        if memo is None:
            memo = {}
            object.__setattr__(self, "_decode_memo", memo)
        return memo


class ExplicitCode(Code):
    """A finite, explicitly listed code."""

    def __init__(self, members: Iterable[Vec], min_distance: Optional[int] = None):
        members = [tuple(m) for m in members]
        if not members:
            raise ValueError("explicit code needs at least one codeword")
        n = len(members[0])
        if any(len(m) != n for m in members):
            raise ValueError("codewords must share one length")
        if len(set(members)) != len(members):
            raise ValueError("duplicate codewords")
        self.members: tuple[Vec, ...] = tuple(sorted(members))
        self.n = n
        self.min_distance = min_distance
        self._set = frozenset(self.members)

    def contains(self, v: Vec) -> bool:
        return v in self._set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def brute_force_decode(
    code_members: Iterable[Vec], z: Vec, radius: int, params: ChannelParams
) -> Optional[Vec]:
    """First member of the code found while scanning z - B(n, radius, k+, k-).

    The scan follows the lexicographic enumeration of the error ball, fixing
    the tie-break when several codewords are in range.
    """
    members = frozenset(tuple(m) for m in code_members)
    for e in _ball_vectors(len(z), radius, params.k_plus, params.k_minus):
        c = tuple(zi - ei for zi, ei in zip(z, e))
        if c in members:
            return c
    return None


# The ball enumerator lives in combinatorics; imported lazily to avoid a
# circular import (combinatorics needs ChannelParams).
def _ball_vectors(n: int, t: int, k_plus: int, k_minus: int):
    from magrec import combinatorics

    return combinatorics.ball_vectors(n, t, k_plus, k_minus)
