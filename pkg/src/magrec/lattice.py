"""Finite Abelian groups, partial splittings, and single-error lattice codes.

A lattice code is the kernel of a syndrome map x -> sum x[i] * s[i] into a
finite Abelian group G, given by a splitter vector s in G^n.  Groups are
represented canonically as products of cyclic groups (every construction used
here is in fact cyclic).  The module provides:

* the splitting test equivalent to the lattice packing of the error ball,
* the condition checkers for lattice codes whose radius-1 balls pairwise
  intersect in at most 1 (resp. 2) points,
* the all-ones constructions attaining the group-order lower bounds, and
* exact brute-force packing / intersection oracles used to certify all of
  the above on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from magrec.core import (
    DEFAULT_ENUM_CAP,
    ChannelParams,
    Code,
    Vec,
)
from magrec import combinatorics

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups Z_m1 x ... x Z_mk, each modulus >= 2."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.moduli or any(m < 2 for m in self.moduli):
            raise ValueError(f"moduli must all be >= 2, got {self.moduli}")

    @property
    def order(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.moduli)

    def element(self, coords) -> GroupElement:
        coords = tuple(coords)
        if len(coords) != len(self.moduli):
            raise ValueError("coordinate count must match moduli")
        return tuple(c % m for c, m in zip(coords, self.moduli))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def scale(self, k: int, g: GroupElement) -> GroupElement:
        """k-fold sum of g, extended to k <= 0 in the natural way."""
        return tuple((k * x) % m for x, m in zip(g, self.moduli))

    def elements(self):
        return (tuple(c) for c in product(*(range(m) for m in self.moduli)))

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)


def cyclic(m: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup((m,))


@dataclass(frozen=True)
class SplitterSpec:
    """A group together with a splitter vector s in G^n.

    The associated lattice is {x in Z^n : sum x[i] s[i] = identity}.
    """

    group: FiniteAbelianGroup
    s: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if not self.s:
            raise ValueError("splitter vector must be nonempty")
        norm = tuple(self.group.element(g) for g in self.s)
        object.__setattr__(self, "s", norm)

    @property
    def n(self) -> int:
        return len(self.s)

    def __str__(self) -> str:
        if len(self.group.moduli) == 1:
            body = ",".join(str(g[0]) for g in self.s)
        else:
            body = ",".join("(" + ",".join(map(str, g)) + ")" for g in self.s)
        return f"group={self.group}; s=[{body}]"


def syndrome(spec: SplitterSpec, x: Vec) -> GroupElement:
    """sum x[i] * s[i] in the group, scalars extended to negative integers."""
    if len(x) != spec.n:
        raise ValueError(f"length mismatch: vector {len(x)}, splitter {spec.n}")
    acc = spec.group.identity
    for xi, si in zip(x, spec.s):
        if xi:
            acc = spec.group.add(acc, spec.group.scale(xi, si))
    return acc


def check_partial_splitting(
    spec: SplitterSpec,
    k_plus: int,
    k_minus: int,
    t: int,
    cap: int = DEFAULT_ENUM_CAP,
) -> bool:
    """True iff all products e . s over coefficient vectors e with entries in
    [-k-, k+], 1 <= wt(e) <= t, are pairwise distinct and non-identity.

    Exhaustive enumeration with a seen-set; equivalent to the lattice packing
    of the error ball B(n, t, k+, k-).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if k_plus + k_minus < 1 or k_plus < 0 or k_minus < 0:
        raise ValueError("coefficient range [-k-, k+]* must be nonempty")
    identity = spec.group.identity
    seen: set[GroupElement] = set()
    for e in combinatorics.ball_vectors(spec.n, t, k_plus, k_minus, cap=cap):
        if not any(e):
            continue
        g = syndrome(spec, e)
        if g == identity or g in seen:
            return False
        seen.add(g)
    return True


def check_recon_N1(spec: SplitterSpec, k_plus: int, k_minus: int) -> bool:
    """Radius-1 pairwise ball intersections of the lattice are <= 1 (k- >= 1).

    Implemented as the flat pairwise-distinctness form: per coordinate the
    products a*s_i over a in [-k-, k+-1] are distinct, and across coordinates
    a*s_i != b*s_j for a, b in [-k-, k-] not both zero.
    """
    if not 1 <= k_minus <= k_plus:
        raise ValueError("needs 1 <= k_minus <= k_plus")
    g = spec.group
    for si in spec.s:
        vals = [g.scale(a, si) for a in range(-k_minus, k_plus)]
        if len(set(vals)) != len(vals):
            return False
    for (i, si), (j, sj) in combinations(enumerate(spec.s), 2):
        for a in range(-k_minus, k_minus + 1):
            ga = g.scale(a, si)
            for b in range(-k_minus, k_minus + 1):
                if a == 0 and b == 0:
                    continue
                if ga == g.scale(b, sj):
                    return False
    return True


def check_recon_N1_asym(spec: SplitterSpec, k_plus: int) -> bool:
    """Radius-1 pairwise ball intersections are <= 1 when k- = 0:
    per coordinate, a*s_i are distinct over a in [0, k+-1]."""
    if k_plus < 2:
        raise ValueError("needs k_plus >= 2 (k_plus = 1 is the trivial case)")
    g = spec.group
    for si in spec.s:
        vals = [g.scale(a, si) for a in range(k_plus)]
        if len(set(vals)) != len(vals):
            return False
    return True


def check_recon_N2(spec: SplitterSpec, k_plus: int, k_minus: int) -> bool:
    """Radius-1 pairwise ball intersections are <= 2 (k- >= 1, k+ + k- >= 3):
    per coordinate, a*s_i are distinct over a in [-k-, k+-2]."""
    if not 1 <= k_minus <= k_plus or k_plus + k_minus < 3:
        raise ValueError("needs 1 <= k_minus <= k_plus and k_plus + k_minus >= 3")
    g = spec.group
    for si in spec.s:
        vals = [g.scale(a, si) for a in range(-k_minus, k_plus - 1)]
        if len(set(vals)) != len(vals):
            return False
    return True


def construct_N1_code(n: int, k_plus: int) -> SplitterSpec:
    """All-ones splitter over Z_{k+}: the sum-of-entries-mod-k+ lattice.

    Its radius-1 intersections are <= 1 for the k- = 0 channel and its group
    order meets the lower bound k+ with equality.
    """
    if k_plus < 2:
        raise ValueError("needs k_plus >= 2")
    if n < 1:
        raise ValueError("needs n >= 1")
    return SplitterSpec(cyclic(k_plus), ((1,),) * n)


def construct_N2_code(n: int, k_plus: int, k_minus: int) -> SplitterSpec:
    """All-ones splitter over Z_{k+ + k- - 1}; radius-1 intersections <= 2,
    group order meets the lower bound k+ + k- - 1 with equality."""
    if not 1 <= k_minus <= k_plus or k_plus + k_minus < 3:
        raise ValueError("needs 1 <= k_minus <= k_plus and k_plus + k_minus >= 3")
    if n < 1:
        raise ValueError("needs n >= 1")
    return SplitterSpec(cyclic(k_plus + k_minus - 1), ((1,),) * n)


def min_group_order_bound(k_plus: int, k_minus: int, n: int, target_n: int) -> int:
    """Lower bound on |Z^n / lattice| for codes with radius-1 pairwise
    intersections bounded by target_n (1 or 2)."""
    if target_n == 1:
        if k_minus == 0:
            if k_plus < 2:
                raise ValueError("k- = 0 bound needs k_plus >= 2")
            return k_plus
        if k_plus > k_minus:
            return max(2 * n * k_minus + 1, k_plus + k_minus)
        return max(n * (k_plus + k_minus - 1) + 1, k_plus + k_minus)
    if target_n == 2:
        if not 1 <= k_minus <= k_plus or k_plus + k_minus < 3:
            raise ValueError("target 2 needs 1 <= k- <= k+ and k+ + k- >= 3")
        return k_plus + k_minus - 1
    raise ValueError(f"unsupported target {target_n}; only 1 and 2 are known")


class LatticeCode(Code):
    """CodeHandle for the lattice of a splitter spec: membership is a
    zero-syndrome test, decoding is the shared ball scan."""

    def __init__(self, spec: SplitterSpec, min_distance: int | None = None):
        self.spec = spec
        self.n = spec.n
        self.min_distance = min_distance

    def contains(self, v: Vec) -> bool:
        return syndrome(self.spec, v) == self.spec.group.identity


def lattice_code_handle(spec: SplitterSpec) -> LatticeCode:
    return LatticeCode(spec)


def lattice_min_distance(spec: SplitterSpec, k_plus: int, k_minus: int) -> int:
    """Exact minimum general distance of the lattice code.

    Distances are translation invariant and exceed the finite range only
    through the n+1 encoding, so the minimum over all codeword pairs equals
    the minimum of d(0, d) over nonzero lattice vectors d in the box
    [-(k+ + k-), k+ + k-]^n, or n+1 if the box holds none.
    """
    from magrec.distances import distance_general

    span = k_plus + k_minus
    identity = spec.group.identity
    zero = (0,) * spec.n
    best = spec.n + 1
    for d in product(range(-span, span + 1), repeat=spec.n):
        if not any(d):
            continue
        if syndrome(spec, d) != identity:
            continue
        best = min(best, distance_general(zero, d, k_plus, k_minus))
        if best == 0:
            break
    return best


def max_pairwise_intersection_lattice(spec: SplitterSpec, p: ChannelParams) -> int:
    """Brute-force max over codeword pairs of |(x+B) ∩ (y+B)|.

    Two translated balls meet only when the center difference lies in
    [-(k+ + k-), k+ + k-]^n, so scanning lattice differences in that box is
    exhaustive over all pairs of the (infinite) lattice.
    """
    span = p.magnitude_span
    identity = spec.group.identity
    zero = (0,) * spec.n
    best = 0
    for d in product(range(-span, span + 1), repeat=spec.n):
        if not any(d):
            continue
        if syndrome(spec, d) != identity:
            continue
        best = max(best, combinatorics.intersection_exact(zero, d, p))
    return best


def packing_by_differences(
    spec: SplitterSpec, k_plus: int, k_minus: int, t: int
) -> bool:
    """True iff the radius-t balls around lattice points are pairwise disjoint."""
    return max_pairwise_intersection_lattice(
        spec, ChannelParams(spec.n, t, k_plus, k_minus)
    ) == 0


def packing_by_window_pairs(
    spec: SplitterSpec, k_plus: int, k_minus: int, t: int, window: int | None = None
) -> bool:
    """Reference packing oracle: enumerate codewords in [-W, W]^n and check
    every pair of translated balls for disjointness.

    W defaults to 2(k+ + k-) + 1, wide enough that any violating pair has a
    translate inside the window.  Agrees with ``packing_by_differences``.
    """
    if window is None:
        window = 2 * (k_plus + k_minus) + 1
    ball = combinatorics.ball_vectors(spec.n, t, k_plus, k_minus)
    identity = spec.group.identity
    codewords = [
        v
        for v in product(range(-window, window + 1), repeat=spec.n)
        if syndrome(spec, v) == identity
    ]
    ball_sets = {
        c: {tuple(a + b for a, b in zip(c, e)) for e in ball} for c in codewords
    }
    span = k_plus + k_minus
    for a, b in combinations(codewords, 2):
        if any(abs(x - y) > span for x, y in zip(a, b)):
            continue
        if ball_sets[a] & ball_sets[b]:
            return False
    return True


def parse_splitter_spec(text: str) -> SplitterSpec:
    """Parse ``group=Z4xZ3; s=[(1,0),(0,2),(1,1)]`` (rank-1 groups may list
    bare integers: ``group=Z7; s=[1,2]``)."""
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 2:
        raise ValueError(f"expected 'group=...; s=[...]', got {text!r}")
    gpart, spart = parts
    if not gpart.startswith("group="):
        raise ValueError(f"missing 'group=' in {text!r}")
    moduli = []
    for token in gpart[len("group=") :].split("x"):
        token = token.strip()
        if not token.startswith("Z") or not token[1:].isdigit():
            raise ValueError(f"bad cyclic factor {token!r}")
        moduli.append(int(token[1:]))
    group = FiniteAbelianGroup(tuple(moduli))
    if not spart.startswith("s=[") or not spart.endswith("]"):
        raise ValueError(f"missing 's=[...]' in {text!r}")
    body = spart[len("s=[") : -1].strip()
    if not body:
        raise ValueError("splitter vector must be nonempty")
    elems: list[GroupElement] = []
    if "(" in body:
        depth = 0
        token = ""
        tokens = []
        for ch in body:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "," and depth == 0:
                tokens.append(token)
                token = ""
            else:
                token += ch
        tokens.append(token)
        for token in tokens:
            token = token.strip()
            if not (token.startswith("(") and token.endswith(")")):
                raise ValueError(f"bad group element {token!r}")
            coords = [int(c) for c in token[1:-1].split(",")]
            elems.append(group.element(coords))
    else:
        for token in body.split(","):
            elems.append(group.element((int(token.strip()),) * 1))
    return SplitterSpec(group, tuple(elems))
