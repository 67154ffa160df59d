"""Reconstruction over the simplex under unit-vector additions.

A tandem duplication of a fixed block length acts on a reduced
representation of the string as the addition of one unit vector to a
non-negative integer vector of constant weight.  Reconstruction from many
duplicated copies therefore reduces to: reads live in the upward ball
B_t^+(x) (coordinatewise >= x, total excess <= t), and the componentwise
minimum falls back toward x.

The read-count formula C(m + t - delta, m) + 1 is tight for read sets of
constant excess weight, i.e. all reads produced by the same number (<= t)
of duplications -- the count of reads that can agree on delta shared excess
units is largest on the outermost shell.  Mixed-weight read sets can defeat
the formula when delta < t (a documented model boundary), so the generators
here work shell by shell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

from magrec.core import DEFAULT_ENUM_CAP, EnumerationCapExceeded, ReconstructionError, Vec


def is_simplex_member(v: Vec, m: int, r: int) -> bool:
    """Membership in the simplex: m + 1 non-negative entries summing to r."""
    return len(v) == m + 1 and all(x >= 0 for x in v) and sum(v) == r


def upward_ball(x: Vec, t: int, cap: int = DEFAULT_ENUM_CAP) -> tuple[Vec, ...]:
    """All y >= x componentwise with total excess at most t, lex order.

    Size is C(m + 1 + t, m + 1) for x of length m + 1.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    size = math.comb(len(x) + t, len(x))
    if size > cap:
        raise EnumerationCapExceeded(f"upward ball of size {size} exceeds cap {cap}")
    out: list[Vec] = []
    cur = list(x)

    def rec(i: int, budget: int) -> None:
        if i == len(x):
            out.append(tuple(cur))
            return
        for d in range(budget + 1):
            cur[i] = x[i] + d
            rec(i + 1, budget - d)
        cur[i] = x[i]

    rec(0, t)
    assert len(out) == size
    return tuple(out)


def upward_shell(x: Vec, w: int) -> tuple[Vec, ...]:
    """The constant-excess slice: y >= x with total excess exactly w."""
    return tuple(y for y in upward_ball(x, w) if sum(y) - sum(x) == w)


def reads_required_simplex(m: int, t: int, delta: int) -> int:
    """C(m + t - delta, m) + 1 reads guarantee min-based recovery."""
    if not 1 <= delta <= t:
        raise ValueError(f"need 1 <= delta <= t, got delta={delta}, t={t}")
    return math.comb(m + t - delta, m) + 1


def l1_distance(a: Vec, b: Vec) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


@dataclass(frozen=True)
class SimplexCode:
    """Explicit code inside a simplex, with its reconstruction distance.

    Load-time validation rejects members outside the simplex and codes whose
    minimum pairwise l1 distance falls below 2 * delta, which is exactly what
    the radius-(delta - 1) upward decoder needs for uniqueness.
    """

    m: int
    r: int
    delta: int
    members: tuple[Vec, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(tuple(v) for v in self.members))
        if not members:
            raise ValueError("simplex code needs at least one codeword")
        for v in members:
            if not is_simplex_member(v, self.m, self.r):
                raise ValueError(f"{v} is not in the weight-{self.r} simplex")
        if len(set(members)) != len(members):
            raise ValueError("duplicate codewords")
        if self.delta < 1:
            raise ValueError("delta must be >= 1")
        for a, b in combinations(members, 2):
            d = l1_distance(a, b)
            if d < 2 * self.delta:
                raise ValueError(
                    f"l1 distance {d} between {a} and {b} is below 2*delta = "
                    f"{2 * self.delta}"
                )
        object.__setattr__(self, "members", members)

    def decode_upward(self, z: Vec, radius: int) -> Optional[Vec]:
        """The codeword c with z in its radius-``radius`` upward ball, if any.

        Unique whenever radius <= delta - 1; members are scanned in sorted
        order so the result is deterministic regardless.
        """
        for c in self.members:
            if all(zi >= ci for zi, ci in zip(z, c)) and sum(z) - sum(c) <= radius:
                return c
        return None


def reconstruct_simplex_min(
    Y: Iterable[Vec], code: SimplexCode, delta: int
) -> Vec:
    """Componentwise minimum, then a radius-(delta - 1) upward decode.

    Exact for constant-excess read sets of size >= reads_required_simplex.
    """
    reads = [tuple(y) for y in Y]
    if not reads:
        raise ValueError("read set must be nonempty")
    z = tuple(min(col) for col in zip(*reads))
    c = code.decode_upward(z, delta - 1)
    if c is None:
        raise ReconstructionError(
            "upward decode failed: reads are not from one codeword's upward ball "
            "or too few"
        )
    return c


def exhaustive_simplex_read_sets(
    x: Vec, t: int, count: int, cap: int = 10**5
) -> Iterator[tuple[Vec, ...]]:
    """All size-``count`` subsets of each constant-excess shell of B_t^+(x)."""
    for w in range(t + 1):
        shell = upward_shell(x, w)
        if len(shell) < count:
            continue
        if math.comb(len(shell), count) > cap:
            raise ValueError("subset count exceeds cap")
        yield from combinations(shell, count)


def greedy_simplex_code(m: int, r: int, delta: int) -> SimplexCode:
    """Greedy maximal code in the simplex with l1 distance >= 2 * delta,
    scanning simplex members in lexicographic order."""
    members: list[Vec] = []
    for v in product(range(r + 1), repeat=m + 1):
        if sum(v) != r:
            continue
        if all(l1_distance(v, c) >= 2 * delta for c in members):
            members.append(v)
    return SimplexCode(m, r, delta, tuple(members))


def parse_simplex_code(text: str) -> SimplexCode:
    """Parse the simplex code file format.

    UTF-8 text; ``#`` starts a comment; the first payload line is a header
    ``m=<int>,r=<int>,delta=<int>``; every later line is one codeword of
    m + 1 comma-separated integers.
    """
    header: Optional[dict[str, int]] = None
    members: list[Vec] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            fields = {}
            for part in line.split(","):
                key, _, value = part.partition("=")
                fields[key.strip()] = int(value)
            if set(fields) != {"m", "r", "delta"}:
                raise ValueError(f"bad simplex header {line!r}")
            header = fields
            continue
        members.append(tuple(int(v) for v in line.split(",")))
    if header is None:
        raise ValueError("missing simplex header line 'm=,r=,delta='")
    return SimplexCode(header["m"], header["r"], header["delta"], tuple(members))


def format_simplex_code(code: SimplexCode) -> str:
    lines = [f"m={code.m},r={code.r},delta={code.delta}"]
    lines.extend(",".join(map(str, v)) for v in code.members)
    return "\n".join(lines) + "\n"
