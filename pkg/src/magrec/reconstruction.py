"""Reconstruction and list reconstruction from multiple channel reads.

Four procedures, each paired with the read count (and, for the majority
family, the exact rational vote threshold) that guarantees it:

* ``reconstruct_min``        -- componentwise minimum, k- = 0 channels;
* ``reconstruct_majority``   -- thresholded majority vote plus erasure
                                filling, k- >= 1;
* ``list_reconstruct_min`` / ``list_reconstruct_majority`` -- the same two
  machines run below the unique-reconstruction read count, returning a
  candidate list guaranteed to contain the transmitted codeword;
* ``list_reconstruct_sauer`` -- a shattering-based list decoder that needs
  far fewer reads at the cost of a combinatorial coordinate search.

Vote margins are compared against the threshold in exact rational
arithmetic; the thresholds are generally non-integer and a float comparison
could misclassify boundary cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from magrec.core import (
    ERASURE,
    ChannelParams,
    Code,
    EstimateWord,
    ReconstructionError,
    Vec,
)
from magrec.combinatorics import ball_vectors, binom, hamming_volume, in_ball


@dataclass(frozen=True)
class ReadSet:
    """Distinct channel outputs assumed to come from one codeword's ball.

    Reads are stored sorted lexicographically; the first read serves as the
    anchor wherever a procedure needs one, which keeps every algorithm here
    deterministic.
    """

    reads: tuple[Vec, ...]
    params: ChannelParams

    def __post_init__(self) -> None:
        reads = tuple(sorted(tuple(r) for r in self.reads))
        if not reads:
            raise ValueError("read set must be nonempty")
        if any(len(r) != self.params.n for r in reads):
            raise ValueError("every read must have length n")
        if len(set(reads)) != len(reads):
            raise ValueError("reads must be distinct")
        object.__setattr__(self, "reads", reads)

    def __len__(self) -> int:
        return len(self.reads)

    @property
    def anchor(self) -> Vec:
        return self.reads[0]


@dataclass(frozen=True)
class ListParams:
    """List-decoding knobs: code distance delta, list exponent a, and the
    excess error count f = t - delta + 1."""

    delta: int
    a: int
    f: int

    def __post_init__(self) -> None:
        if self.delta < 1 or self.f < 1:
            raise ValueError(f"need delta >= 1 and f >= 1, got {self}")
        if not 0 <= self.a <= self.f - 1:
            raise ValueError(f"need 0 <= a <= f-1, got a={self.a}, f={self.f}")

    @classmethod
    def for_channel(cls, t: int, delta: int, a: int) -> "ListParams":
        if not 1 <= delta <= t:
            raise ValueError(f"need 1 <= delta <= t, got delta={delta}, t={t}")
        return cls(delta, a, t - delta + 1)


def reads_required_min(n: int, t: int, k_plus: int, delta: int) -> int:
    """Reads guaranteeing the componentwise-minimum reconstruction (k- = 0)
    recovers the codeword: (k+)^delta * V_{k+ + 1}(n - delta, t - delta) + 1."""
    if not 1 <= delta <= t <= n:
        raise ValueError(f"need 1 <= delta <= t <= n, got delta={delta}, t={t}, n={n}")
    return k_plus**delta * hamming_volume(k_plus + 1, n - delta, t - delta) + 1


def componentwise_min(reads: tuple[Vec, ...]) -> Vec:
    return tuple(min(col) for col in zip(*reads))


def reconstruct_min(Y: ReadSet, code: Code, delta: int) -> Vec:
    """Componentwise minimum followed by a radius-(delta - 1) unique decode.

    Requires a k- = 0 channel.  With at least ``reads_required_min`` distinct
    reads from one codeword ball the result is exactly the transmitted
    codeword; on fewer or inconsistent reads the decode fails and a
    ReconstructionError reports the violated precondition.
    """
    p = Y.params
    if p.k_minus != 0:
        raise ValueError("componentwise-minimum reconstruction needs k_minus = 0")
    z = componentwise_min(Y.reads)
    result = code.decode_within(z, delta - 1, p)
    if result is None:
        raise ReconstructionError(
            "decode failed: reads are not from a single codeword ball or too few"
        )
    return result


def majority_reads_required(n: int, t: int, k_plus: int, k_minus: int, delta: int) -> int:
    """(k+ + k-)^(2 delta) * V(n, t - delta) + 1 reads for the majority machine."""
    if not 1 <= delta <= t <= n:
        raise ValueError(f"need 1 <= delta <= t <= n, got delta={delta}, t={t}, n={n}")
    span = k_plus + k_minus
    return span ** (2 * delta) * hamming_volume(span + 1, n, t - delta) + 1


def majority_threshold(
    n: int, t: int, k_plus: int, k_minus: int, delta: int
) -> tuple[int, Fraction]:
    """The (N, tau) pair for thresholded majority voting, tau exact.

    tau = (1 - 2/delta) N + (2 (k+ + k-)^delta / delta) V(n - delta, t - delta),
    and tau < N always.
    """
    if k_minus < 1:
        raise ValueError("majority reconstruction needs k_minus >= 1")
    N = majority_reads_required(n, t, k_plus, k_minus, delta)
    span = k_plus + k_minus
    tau = Fraction(delta - 2, delta) * N + Fraction(2 * span**delta, delta) * (
        hamming_volume(span + 1, n - delta, t - delta)
    )
    return N, tau


def majority_estimate(Y: ReadSet, tau: Fraction) -> EstimateWord:
    """Per-coordinate plurality vote with margin threshold tau.

    A coordinate keeps its most frequent value (ties broken toward the
    smallest) when twice its count minus N exceeds tau, and is erased
    otherwise.
    """
    N = len(Y)
    entries = []
    for i in range(Y.params.n):
        counts: dict[int, int] = {}
        for r in Y.reads:
            v = r[i]
            counts[v] = counts.get(v, 0) + 1
        top = max(counts.values())
        best = min(v for v, c in counts.items() if c == top)
        if 2 * counts[best] - N > tau:
            entries.append(best)
        else:
            entries.append(ERASURE)
    return EstimateWord(tuple(entries))


def _erasure_candidates(Y: ReadSet, estimate: EstimateWord):
    """Vectors completing the estimate: erased coordinate i ranges over
    [anchor[i] - k+, anchor[i] + k-], filled in lexicographic order."""
    p = Y.params
    anchor = Y.anchor
    erased = estimate.erasure_positions()
    base = list(estimate.entries)
    ranges = [range(anchor[i] - p.k_plus, anchor[i] + p.k_minus + 1) for i in erased]
    for fill in product(*ranges):
        u = base[:]
        for pos, val in zip(erased, fill):
            u[pos] = val
        yield tuple(u)


def _covers(c: Vec, Y: ReadSet) -> bool:
    p = Y.params
    return all(
        in_ball(tuple(a - b for a, b in zip(r, c)), p.t, p.k_plus, p.k_minus)
        for r in Y.reads
    )


def reconstruct_majority(Y: ReadSet, tau: Fraction, code: Code, delta: int) -> Vec:
    """Majority estimate, erasure filling, unique decode, and a final check
    that the decoded ball covers every read.

    With N and tau from ``majority_threshold`` and reads from one codeword
    ball the unique covering candidate is the transmitted codeword; the
    candidate loop returns the first passing one, which is then unique.
    """
    p = Y.params
    if p.k_minus < 1:
        raise ValueError("majority reconstruction needs k_minus >= 1")
    estimate = majority_estimate(Y, tau)
    for u in _erasure_candidates(Y, estimate):
        c = code.decode_within(u, delta - 1, p)
        if c is not None and _covers(c, Y):
            return c
    raise ReconstructionError(
        "no candidate covers the reads: reads are not from a single codeword ball"
    )


def list_params_min(n: int, t: int, k_plus: int, delta: int, a: int) -> int:
    """Minimal N with N > (k+)^(delta+a) V_{k+ + 1}(n - delta - a, f - 1 - a)."""
    lp = ListParams.for_channel(t, delta, a)
    return (
        k_plus ** (delta + a)
        * hamming_volume(k_plus + 1, n - delta - a, lp.f - 1 - a)
        + 1
    )


def list_reconstruct_min(Y: ReadSet, code: Code, delta: int, a: int) -> tuple[Vec, ...]:
    """List variant of the minimum machine (k- = 0): decode every vector of
    z - B(n, a, k+, 0).  Contains the transmitted codeword whenever
    |Y| >= list_params_min; the list never exceeds V_{k+ + 1}(n, a) entries.

    Decode failures are dropped; the list is returned sorted.
    """
    p = Y.params
    if p.k_minus != 0:
        raise ValueError("componentwise-minimum reconstruction needs k_minus = 0")
    z = componentwise_min(Y.reads)
    out = set()
    for e in ball_vectors(p.n, a, p.k_plus, 0):
        u = tuple(zi - ei for zi, ei in zip(z, e))
        c = code.decode_within(u, delta - 1, p)
        if c is not None:
            out.add(c)
    return tuple(sorted(out))


def list_params_general(
    n: int, t: int, k_plus: int, k_minus: int, delta: int, a: int
) -> tuple[int, Fraction]:
    """(N, tau) for the majority list machine, exact rationals.

    N = (k+ + k-)^(delta + a + 1) V(n - delta - a, f - 1 - a) + 1 and
    tau = (1 - 2/(delta+a)) N
          + (2/(delta+a)) sum_i C(n-delta-a, i) (k+ + k-)^(i + delta + a).
    """
    if k_minus < 1:
        raise ValueError("majority list reconstruction needs k_minus >= 1")
    lp = ListParams.for_channel(t, delta, a)
    span = k_plus + k_minus
    N = span ** (delta + a + 1) * hamming_volume(
        span + 1, n - delta - a, lp.f - 1 - a
    ) + 1
    s = delta + a
    tail = sum(
        binom(n - s, i) * span ** (i + s) for i in range(t - s + 1)
    )
    tau = Fraction(s - 2, s) * N + Fraction(2, s) * tail
    return N, tau


def list_reconstruct_majority(
    Y: ReadSet, tau: Fraction, code: Code, delta: int, a: int
) -> tuple[Vec, ...]:
    """Majority estimate, erasure filling, then decode every vector of
    candidate - B(n, a, k+, k-) and collect the survivors.

    With (N, tau) from ``list_params_general`` the transmitted codeword is in
    the list, and the list size is at most
    (k+ + k- + 1)^(2 t (delta + a)) * V(n, a).
    """
    p = Y.params
    if p.k_minus < 1:
        raise ValueError("majority list reconstruction needs k_minus >= 1")
    estimate = majority_estimate(Y, tau)
    shifts = ball_vectors(p.n, a, p.k_plus, p.k_minus)
    out = set()
    for u in _erasure_candidates(Y, estimate):
        for e in shifts:
            v = tuple(ui - ei for ui, ei in zip(u, e))
            c = code.decode_within(v, delta - 1, p)
            if c is not None:
                out.add(c)
    return tuple(sorted(out))


def sauer_shelah_find(S, q: int, c: int) -> tuple[int, ...]:
    """A size-c coordinate set U such that every pattern over U is avoided
    coordinatewise by some member of S.

    Brute force over all coordinate subsets (lexicographic order, first
    witness wins) and all q^c patterns.  Such a U exists whenever
    |S| > V_q(n, c - 1); absence therefore signals a violated precondition.
    """
    members = sorted(set(tuple(v) for v in S))
    if not members:
        raise ValueError("S must be nonempty")
    n = len(members[0])
    if any(len(v) != n for v in members):
        raise ValueError("vectors in S must share one length")
    if any(not 0 <= x < q for v in members for x in v):
        raise ValueError(f"entries must lie in [0, {q - 1}]")
    if c == 0:
        return ()
    if c > n:
        raise ReconstructionError(f"no coordinate set of size {c} in length {n}")
    for U in combinations(range(n), c):
        ok = True
        for pattern in product(range(q), repeat=c):
            if not any(
                all(v[i] != pattern[j] for j, i in enumerate(U)) for v in members
            ):
                ok = False
                break
        if ok:
            return U
    raise ReconstructionError(
        "no witness coordinate set: |S| is too small for the requested size"
    )


def sauer_reads_required(n: int, t: int, k_plus: int, k_minus: int, delta: int, a: int) -> int:
    """Minimal N with N > V_{k+ + k- + 1}(n, f - 1 - a)."""
    lp = ListParams.for_channel(t, delta, a)
    return hamming_volume(k_plus + k_minus + 1, n, lp.f - 1 - a) + 1


def list_reconstruct_sauer(
    Y: ReadSet, code: Code, delta: int, a: int
) -> tuple[Vec, ...]:
    """Shattering-based list decoder.

    Per coordinate the reads pin an interval K_i of at most k+ + k- + 1
    values containing both the codeword and every read.  Shifting into
    [0, q-1]^n and finding a size-(f - a) coordinate set U via
    ``sauer_shelah_find`` guarantees some read representative differs from
    the codeword on all of U; stripping up to f errors that include all of U
    from each representative yields a candidate set whose decodes contain
    the transmitted codeword.  Needs |Y| > V(n, f - 1 - a); the list size is
    at most (k+ + k- + 1)^(2(f - a)) * V(n - f + a, a).
    """
    p = Y.params
    lp = ListParams.for_channel(p.t, delta, a)
    q = p.magnitude_span + 1
    n = p.n
    lows = []
    for i in range(n):
        column = [r[i] for r in Y.reads]
        m, M = min(column), max(column)
        lows.append(min(m, M - p.k_plus))
    shifted = {tuple(r[i] - lows[i] for i in range(n)) for r in Y.reads}
    U = sauer_shelah_find(shifted, q, lp.f - a)

    representatives: dict[tuple[int, ...], Vec] = {}
    for r in Y.reads:
        representatives.setdefault(tuple(r[i] for i in U), r)

    candidates = set()
    for rep in representatives.values():
        for e in ball_vectors(n, lp.f, p.k_plus, p.k_minus):
            z = tuple(ri - ei for ri, ei in zip(rep, e))
            if all(z[i] != rep[i] for i in U):
                candidates.add(z)

    out = set()
    for z in sorted(candidates):
        c = code.decode_within(z, delta - 1, p)
        if c is not None:
            out.add(c)
    return tuple(sorted(out))


def majority_list_size_bound(t: int, k_plus: int, k_minus: int, delta: int, a: int, n: int) -> int:
    """(k+ + k- + 1)^(2 t (delta + a)) * V(n, a)."""
    return (k_plus + k_minus + 1) ** (2 * t * (delta + a)) * hamming_volume(
        k_plus + k_minus + 1, n, a
    )


def sauer_list_size_bound(t: int, k_plus: int, k_minus: int, delta: int, a: int, n: int) -> int:
    """(k+ + k- + 1)^(2(f - a)) * V(n - f + a, a)."""
    f = t - delta + 1
    return (k_plus + k_minus + 1) ** (2 * (f - a)) * hamming_volume(
        k_plus + k_minus + 1, n - f + a, a
    )


def adversarial_code_size_bound(n: int, e: int, a: int) -> Fraction:
    """n^a / ((e + a)^a * sum_{i<=e} C(e+a, i)), the guaranteed size of the
    adversarial code."""
    denom = (e + a) ** a * sum(binom(e + a, i) for i in range(e + 1))
    return Fraction(n**a, denom)


def adversarial_instance(
    n: int, t: int, k_plus: int, k_minus: int, e: int, a: int
) -> tuple[ReadSet, tuple[Vec, ...]]:
    """A read set contained in every ball of a nontrivially large code.

    The reads are all of S = {v in [-k-, k+-1]^n : wt(v) <= f - a} with
    f = t - e (the lexicographically smallest members first, and
    |S| = V_{k+ + k-}(n, f - a) is the largest read count the lower bound
    speaks about).  The code is built greedily over {-1, 0}^n in
    lexicographic support order: constant weight e + a, minimum Hamming
    distance 2e + 2, so it corrects e errors, and its size meets
    ``adversarial_code_size_bound``.
    """
    if (k_plus, k_minus) == (1, 0):
        raise ValueError("the (1, 0) channel admits no such instance")
    f = t - e
    if not 0 <= a <= f:
        raise ValueError(f"need 0 <= a <= f = t - e, got a={a}, f={f}")
    if n < 2 * e + a:
        raise ValueError(f"need n >= 2e + a = {2 * e + a}, got {n}")
    if e < 0 or e + a > n:
        raise ValueError("weight e + a must fit in n")

    reads = sorted(
        v
        for v in product(range(-k_minus, k_plus), repeat=n)
        if sum(1 for x in v if x) <= f - a
    )
    weight = e + a
    max_shared = weight - (e + 1)  # |A & B| <= this keeps Hamming distance >= 2e+2
    code: list[Vec] = []
    supports: list[frozenset[int]] = []
    for sup in combinations(range(n), weight):
        sup_set = frozenset(sup)
        if all(len(sup_set & prev) <= max_shared for prev in supports):
            v = [0] * n
            for i in sup:
                v[i] = -1
            code.append(tuple(v))
            supports.append(sup_set)
    params = ChannelParams(n, t, k_plus, k_minus)
    return ReadSet(tuple(reads), params), tuple(code)
