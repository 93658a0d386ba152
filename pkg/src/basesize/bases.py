"""Bases of permutation groups: testing, greedy bases, exact minimum base size.

The exact search is an iterative-deepening DFS over stabilizer chains.  At
each level only one point per nontrivial orbit of the current stabilizer is
tried; orbit-equivalent points give conjugate stabilizers, and fixed points
give nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import DEFAULT_ELEMENT_BUDGET, Permutation, PermutationGroup, order

Elements = Sequence[tuple[int, ...]]


@dataclass(frozen=True)
class Base:
    points: tuple[int, ...]
    witness_chain: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)


def _images(g: PermutationGroup, budget: int) -> list[tuple[int, ...]]:
    return [h.images for h in g.elements(budget)]


def _fixing(elems: Elements, x: int) -> list[tuple[int, ...]]:
    return [h for h in elems if h[x] == x]


def _orbit_of(elems: Elements, x: int) -> set[int]:
    # elems is a whole group, so one application of each element suffices
    return {h[x] for h in elems}


def _nontrivial_orbits(elems: Elements, degree: int) -> list[list[int]]:
    covered = [False] * degree
    out = []
    for x in range(degree):
        if covered[x]:
            continue
        o = sorted(_orbit_of(elems, x))
        for y in o:
            covered[y] = True
        if len(o) > 1:
            out.append(o)
    return out


def stabilizer_chain(g: PermutationGroup, points: Iterable[int],
                     element_budget: int = DEFAULT_ELEMENT_BUDGET) -> tuple[int, ...]:
    """Orders |G|, |G_b1|, |G_b1,b2|, ... obtained by fixing ``points`` in turn."""
    elems = _images(g, element_budget)
    chain = [len(elems)]
    for x in points:
        elems = _fixing(elems, x)
        chain.append(len(elems))
    return tuple(chain)


def is_base(g: PermutationGroup, points: Iterable[int],
            element_budget: int = DEFAULT_ELEMENT_BUDGET) -> bool:
    pts = tuple(points)
    for x in pts:
        if not 0 <= x < g.degree:
            raise ValueError(f"point {x} out of range for degree {g.degree}")
    return all(any(h[x] != x for x in pts) or _is_id(h) for h in _images(g, element_budget))


def _is_id(h: tuple[int, ...]) -> bool:
    return all(i == y for i, y in enumerate(h))


def greedy_base(g: PermutationGroup, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> Base:
    """Pick the lowest point of a largest orbit of the current stabilizer until trivial."""
    elems = _images(g, element_budget)
    points = []
    chain = [len(elems)]
    while len(elems) > 1:
        orbs = _nontrivial_orbits(elems, g.degree)
        best = max(orbs, key=lambda o: (len(o), -o[0]))
        points.append(best[0])
        elems = _fixing(elems, best[0])
        chain.append(len(elems))
    return Base(tuple(points), tuple(chain))


def _search(elems: Elements, degree: int, depth: int) -> list[int] | None:
    if len(elems) == 1:
        return []
    if depth == 0:
        return None
    orbs = _nontrivial_orbits(elems, degree)
    # each further point divides the order by at most the largest orbit length
    if max(len(o) for o in orbs) ** depth < len(elems):
        return None
    for o in orbs:
        rest = _search(_fixing(elems, o[0]), degree, depth - 1)
        if rest is not None:
            return [o[0]] + rest
    return None


def minimum_base(g: PermutationGroup, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> Base:
    """A base of minimum size, found by iterative deepening."""
    elems = _images(g, element_budget)
    for k in range(g.degree + 1):
        found = _search(elems, g.degree, k)
        if found is not None:
            return Base(tuple(found), stabilizer_chain(g, found, element_budget))
    raise AssertionError("unreachable: all points always form a base")


def min_base_size(g: PermutationGroup, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> int:
    return len(minimum_base(g, element_budget).points)


def prime_factors(n: int) -> list[int]:
    """Prime factors of n with multiplicity, ascending."""
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power_parts(n: int) -> tuple[int, int] | None:
    """(p, k) with n == p**k, or None if n is not a prime power."""
    fs = prime_factors(n)
    if not fs or fs[0] != fs[-1]:
        return None
    return fs[0], len(fs)


def length_upper_bound(group_order: int) -> int:
    """Number of prime factors of |G| counted with multiplicity."""
    if group_order < 2:
        raise ValueError("group order must be at least 2")
    return len(prime_factors(group_order))


def corollary_bound(group_order: int, prime_power: int,
                    group: PermutationGroup | None = None) -> int:
    """Upper bound j + 1 on every base size, given an element of prime-power order.

    j is the number of prime factors (with multiplicity) of |G| / p^k.  When a
    group is supplied, an element of order ``prime_power`` must exist in it.
    """
    if prime_power_parts(prime_power) is None:
        raise ValueError(f"{prime_power} is not a prime power")
    if group_order % prime_power:
        raise ValueError(f"{prime_power} does not divide {group_order}")
    if group is not None and not any(order(h) == prime_power for h in group.elements()):
        raise ValueError(f"group has no element of order {prime_power}")
    return len(prime_factors(group_order // prime_power)) + 1


def largest_prime_power_order(elements: Iterable[Permutation]) -> int:
    orders = {order(h) for h in elements}
    pp = [m for m in orders if prime_power_parts(m) is not None]
    return max(pp, default=1)


def certified_upper_bound(g: PermutationGroup,
                          element_budget: int = DEFAULT_ELEMENT_BUDGET) -> int:
    """Best structural bound on the base size of any faithful action of g's abstract group."""
    n = g.order(element_budget)
    if n == 1:
        return 0
    m = largest_prime_power_order(g.elements(element_budget))
    return min(length_upper_bound(n), corollary_bound(n, m))

