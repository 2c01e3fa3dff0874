"""Independent oracles for the test suite: second-algorithm Bernoulli
numbers, the von Staudt-Clausen denominator, the exhaustive representative
gcd search, brute-force subgroup closures, row-operation orbit enumeration,
and mod-2 rank by row-space counting.

Nothing here calls the engine's own code paths for the quantity it checks.
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def bernoulli_at(k: int) -> Fraction:
    """Akiyama-Tanigawa algorithm for the standard signed Bernoulli number
    B_k (with B_1 = +1/2, which does not affect even indices)."""
    row = [Fraction(1, j + 1) for j in range(k + 1)]
    for i in range(1, k + 1):
        for j in range(k - i + 1):
            row[j] = (j + 1) * (row[j] - row[j + 1])
    return row[0]


def bernoulli_unsigned(s: int) -> Fraction:
    return abs(bernoulli_at(2 * s))


def von_staudt_denominator(s: int) -> int:
    """Denominator of the 2s-th Bernoulli number: the product of primes p
    with (p - 1) dividing 2s."""
    out = 1
    for p in range(2, 2 * s + 2):
        if all(p % q for q in range(2, p)) and (2 * s) % (p - 1) == 0:
            out *= p
    return out


def defgcd_exhaustive(values: Sequence[int], d: int, k_max: int | None = None) -> int:
    """Minimum over nonnegative representative tuples (v_i + k_i * d,
    0 <= k_i <= k_max) of the ordinary gcd."""
    assert values and d > 0
    if all(v % d == 0 for v in values):
        return 0
    k_max = 4 * d if k_max is None else k_max
    reps = [[(v % d) + k * d for k in range(k_max + 1)] for v in values]
    if len(values) == 1:
        return min(reps[0])
    current = set(reps[0])
    for layer in reps[1:]:
        nxt: set[int] = set()
        for a in current:
            for b in layer:
                g = gcd(a, b)
                if g == 1:
                    return 1
                nxt.add(g)
        current = nxt
    return min(current)


def subgroup_closure(values: Iterable[int], d: int) -> frozenset[int]:
    """The subgroup of Z/d generated by the values, as an explicit set."""
    seen = {0}
    frontier = [0]
    gens = [v % d for v in values]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x + g) % d
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def least_positive_generator(values: Iterable[int], d: int) -> int:
    sub = subgroup_closure(values, d)
    positive = [x for x in sub if x > 0]
    return min(positive) if positive else 0


# --- row-operation orbits (independent of the engine) ----------------------

def _column_successors(state: tuple[int, ...], d: int):
    m = len(state)
    for a in range(m):
        neg = list(state)
        neg[a] = (-neg[a]) % d
        yield tuple(neg)
        for b in range(m):
            if a != b:
                add = list(state)
                add[a] = (add[a] + state[b]) % d
                yield tuple(add)
        for b in range(a + 1, m):
            sw = list(state)
            sw[a], sw[b] = sw[b], sw[a]
            yield tuple(sw)


def column_orbit_partition(d: int, m: int) -> dict[tuple[int, ...], int]:
    """Map every length-m column over Z/d to a component id of the orbit
    partition under {add, swap, negate}."""
    import itertools

    component: dict[tuple[int, ...], int] = {}
    next_id = 0
    for start in itertools.product(range(d), repeat=m):
        if start in component:
            continue
        cid = next_id
        next_id += 1
        component[start] = cid
        queue = deque([start])
        while queue:
            state = queue.popleft()
            for nxt in _column_successors(state, d):
                if nxt not in component:
                    component[nxt] = cid
                    queue.append(nxt)
    return component


def orbit_of(state: tuple[int, ...], d: int, cap: int = 300_000) -> frozenset[tuple[int, ...]]:
    seen = {state}
    queue = deque([state])
    while queue:
        cur = queue.popleft()
        for nxt in _column_successors(cur, d):
            if nxt not in seen:
                if len(seen) >= cap:
                    raise RuntimeError("orbit cap exceeded")
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def rank_f2_bruteforce(rows: Sequence[Sequence[int]]) -> int:
    """log2 of the size of the mod-2 row space, by enumerating all sums."""
    import itertools

    n = len(rows)
    span = set()
    for picks in itertools.product((0, 1), repeat=n):
        vec = [0] * n
        for take, row in zip(picks, rows):
            if take:
                vec = [(a + b) % 2 for a, b in zip(vec, row)]
        span.add(tuple(vec))
    size = len(span)
    rank = size.bit_length() - 1
    assert 1 << rank == size
    return rank


# --- random expressions for normalization/round-trip sweeps -----------------

_GROUP_POOL = ("E6", "E7", "E8", "Sp(3)", "Spin(11)", "G2")


def random_expr(rng: random.Random, depth: int = 3):
    """A random canonical space expression."""
    from gaugekit.exact import CyclicElem
    from gaugekit.spaces import (
        LieGroup,
        MappingSpace,
        SuspCP2,
        Sphere,
        attached,
        gauge,
        loop,
        product,
        suspension,
        two_cell,
        wedge,
    )

    def atom():
        kind = rng.randrange(6)
        if kind == 0:
            return Sphere(rng.randrange(1, 20))
        if kind == 1:
            return SuspCP2(rng.randrange(0, 8))
        if kind == 2:
            d = rng.choice((2, 8, 24, 240))
            return two_cell(rng.randrange(3, 11), CyclicElem(rng.randrange(d), d))
        if kind == 3:
            return LieGroup(rng.choice(_GROUP_POOL))
        if kind == 4:
            return MappingSpace(SuspCP2(0), LieGroup(rng.choice(_GROUP_POOL)))
        bottom = Sphere(rng.randrange(3, 9))
        return attached(bottom, rng.randrange(10, 18), rng.choice((None, "f", "J(xi)")))

    def build(budget: int):
        if budget <= 0:
            return atom()
        kind = rng.randrange(7)
        if kind == 0:
            return wedge(*(build(budget - 1) for _ in range(rng.randrange(1, 4))))
        if kind == 1:
            return product(*(build(budget - 1) for _ in range(rng.randrange(1, 4))))
        if kind == 2:
            return loop(rng.randrange(1, 6), build(budget - 1))
        if kind == 3:
            return suspension(rng.randrange(1, 4), build(budget - 1))
        if kind == 4:
            return gauge(build(budget - 1), rng.choice(("k", "alpha")),
                         rng.choice((None, None, "E7")))
        return atom()

    return build(depth)


def denormalize(rng: random.Random, expr):
    """A random structurally different presentation of the same expression:
    re-nested and shuffled wedges/products, split loop/suspension powers,
    spheres and suspended projective planes wrapped in explicit
    suspensions.  normalize() must send every variant back to expr."""
    from gaugekit.spaces import (
        Loop,
        Product,
        SuspCP2,
        Sphere,
        Suspension,
        Wedge,
        AttachedComplex,
        Gauge,
        MappingSpace,
        TwoCell,
    )

    def vary(e):
        if isinstance(e, Sphere) and e.n >= 2 and rng.random() < 0.4:
            j = rng.randrange(1, e.n + 1)
            return Suspension(j, Sphere(e.n - j)) if e.n - j >= 0 else e
        if isinstance(e, SuspCP2) and e.k >= 1 and rng.random() < 0.4:
            j = rng.randrange(1, e.k + 1)
            return Suspension(j, SuspCP2(e.k - j))
        if isinstance(e, (Wedge, Product)):
            cls = type(e)
            parts = [vary(p) for p in e.parts]
            rng.shuffle(parts)
            # randomly fold a sublist into a nested node of the same type
            while len(parts) > 2 and rng.random() < 0.5:
                i = rng.randrange(len(parts) - 1)
                nested = cls((parts[i], parts[i + 1]))
                parts[i : i + 2] = [nested]
            return cls(tuple(parts))
        if isinstance(e, Loop):
            inner = vary(e.space)
            if e.power >= 2 and rng.random() < 0.5:
                a = rng.randrange(1, e.power)
                return Loop(a, Loop(e.power - a, inner))
            return Loop(e.power, inner)
        if isinstance(e, Suspension):
            inner = vary(e.space)
            if e.power >= 2 and rng.random() < 0.5:
                a = rng.randrange(1, e.power)
                return Suspension(a, Suspension(e.power - a, inner))
            return Suspension(e.power, inner)
        if isinstance(e, AttachedComplex):
            return AttachedComplex(vary(e.skeleton), e.top, e.label)
        if isinstance(e, Gauge):
            return Gauge(vary(e.base), e.label, e.group)
        if isinstance(e, MappingSpace):
            return MappingSpace(vary(e.domain), vary(e.codomain))
        if isinstance(e, TwoCell) and rng.random() < 0.3:
            return TwoCell(e.bottom, e.attach)
        return e

    return vary(expr)
