"""Independent brute-force oracles used to check the library.

Everything here is built from itertools primitives and set arithmetic only,
deliberately avoiding the code paths under test (the library enumerates
balls recursively and counts intersections by membership testing; these
oracles materialize full sets).
"""

from __future__ import annotations

from itertools import combinations, product


def oracle_ball(n: int, t: int, kp: int, km: int) -> list[tuple[int, ...]]:
    return [
        v
        for v in product(range(-km, kp + 1), repeat=n)
        if sum(1 for x in v if x) <= t
    ]


def oracle_ball_set(center, t, kp, km):
    return {
        tuple(c + e for c, e in zip(center, v))
        for v in oracle_ball(len(center), t, kp, km)
    }


def oracle_intersection(x, y, t, kp, km) -> int:
    return len(oracle_ball_set(x, t, kp, km) & oracle_ball_set(y, t, kp, km))


def oracle_corrects(code, t, kp, km, e) -> bool:
    balls = [oracle_ball_set(c, e, kp, km) for c in code]
    return all(not (a & b) for a, b in combinations(balls, 2))


def window(n: int, w: int):
    return product(range(-w, w + 1), repeat=n)


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))
