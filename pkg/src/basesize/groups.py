"""Small abstract groups, their faithful actions, and base size sets.

A faithful action of a finite group G is, up to equivalence, a disjoint union
of coset actions G/H_1 + ... + G/H_k whose normal cores intersect trivially.
``faithful_actions`` enumerates such unions (one subgroup per conjugacy class,
no repeats) up to a point budget, and ``base_size_set`` collects the minimum
base sizes of the realized permutation groups.
"""

from __future__ import annotations

import math
import weakref
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import product
from typing import Iterator, Sequence, Union

from .bases import (
    Base,
    certified_upper_bound,
    length_upper_bound,
    minimum_base,
    prime_factors,
    prime_power_parts,
)
from .perm import (
    DEFAULT_ELEMENT_BUDGET,
    BudgetExceeded,
    ParseError,
    Permutation,
    PermutationGroup,
    compose,
    from_cycles,
    identity,
    inverse,
    order,
)


def elementary_divisors(invariant_factors: Sequence[int]) -> list[int]:
    """Split cyclic factor orders into their prime-power parts, sorted."""
    out = []
    for m in invariant_factors:
        if m < 2:
            raise ValueError(f"cyclic factor order must be >= 2, got {m}")
        for p, k in Counter(prime_factors(m)).items():
            out.append(p ** k)
    return sorted(out)


@dataclass(frozen=True)
class Abelian:
    """Z_{d1} + ... + Z_{dn} with every d_i a prime power (sorted)."""

    divisors: tuple[int, ...]

    def __post_init__(self):
        divs = tuple(self.divisors)
        object.__setattr__(self, "divisors", divs)
        if not divs:
            raise ValueError("an abelian spec needs at least one divisor")
        if list(divs) != sorted(divs):
            raise ValueError(f"divisors must be sorted: {divs}")
        for d in divs:
            if d < 2 or prime_power_parts(d) is None:
                raise ValueError(f"{d} is not a prime power >= 2")

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> Abelian:
        return cls(tuple(elementary_divisors(orders)))

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(d) for d in self.divisors)))

    def multiply(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.divisors))

    def generators(self) -> list[tuple[int, ...]]:
        n = self.rank
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def element_order(self, a) -> int:
        return reduce(math.lcm, (d // math.gcd(x, d) for x, d in zip(a, self.divisors)), 1)

    def __str__(self) -> str:
        return "Z:" + ",".join(map(str, self.divisors))


@dataclass(frozen=True)
class Dihedral:
    """The dihedral group of order 2n; element (k, s) stands for r^k f^s."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"dihedral n must be >= 2, got {self.n}")

    @property
    def order(self) -> int:
        return 2 * self.n

    def elements(self) -> list[tuple[int, int]]:
        return [(k, s) for k in range(self.n) for s in (0, 1)]

    def multiply(self, a, b):
        k1, s1 = a
        k2, s2 = b
        return ((k1 + (-1) ** s1 * k2) % self.n, (s1 + s2) % 2)

    def generators(self) -> list[tuple[int, int]]:
        return [(1, 0), (0, 1)]

    def element_order(self, a) -> int:
        k, s = a
        return 2 if s else self.n // math.gcd(k, self.n)

    def __str__(self) -> str:
        return f"D:{self.n}"


AbstractGroupSpec = Union[Abelian, Dihedral]


def parse_group(text: str) -> AbstractGroupSpec:
    """Parse ``Z:d1,d2,...`` (cyclic factor orders) or ``D:n`` (order 2n)."""
    family, _, rest = text.strip().partition(":")
    try:
        if family == "Z":
            return Abelian.from_orders([int(t) for t in rest.split(",")])
        if family == "D":
            return Dihedral(int(rest))
    except ValueError as exc:
        raise ParseError(f"bad group descriptor {text!r}: {exc}") from None
    raise ParseError(f"bad group descriptor {text!r}: expected 'Z:...' or 'D:n'")


def regular_representation(spec: AbstractGroupSpec,
                           element_budget: int = DEFAULT_ELEMENT_BUDGET) -> PermutationGroup:
    """Left-multiplication action of the group on its own (sorted) element list."""
    if spec.order > element_budget:
        raise BudgetExceeded(f"|{spec}| = {spec.order} exceeds element budget {element_budget}")
    return _regular(spec)


@lru_cache(maxsize=64)
def _regular(spec: AbstractGroupSpec) -> PermutationGroup:
    elems = spec.elements()
    index = {e: i for i, e in enumerate(elems)}
    gens = [Permutation(tuple(index[spec.multiply(s, e)] for e in elems))
            for s in spec.generators()]
    return PermutationGroup(len(elems), gens)


def natural_dihedral_action(n: int) -> PermutationGroup:
    """D_n acting on the vertices 0..n-1 of a regular n-gon."""
    if n < 3:
        raise ValueError("the natural dihedral action needs n >= 3")
    r = Permutation(tuple((i + 1) % n for i in range(n)))
    f = Permutation(tuple((-i) % n for i in range(n)))
    return PermutationGroup(n, [r, f])


def _is_odd_prime(p: int) -> bool:
    return p > 2 and prime_factors(p) == [p]


def dpq_generators(p: int, q: int, reading: str = "proof") -> tuple[Permutation, Permutation]:
    """Rotation r and reflection f of D_pq acting on p + q points.

    Point i - 1 plays the role of x_i.  ``reading="proof"`` gives the
    reflection that swaps x_i <-> x_{p-i} for i < p/2 and fixes x_p and
    x_{p+q}.  ``reading="printed"`` multiplies out the transposition product
    with the first index running to (p+1)/2, as typeset, which repeats one
    transposition and so cancels it.
    """
    if not (_is_odd_prime(p) and _is_odd_prime(q)) or p == q:
        raise ValueError(f"need distinct odd primes, got p={p}, q={q}")
    n = p + q
    r = from_cycles(n, [tuple(range(p)), tuple(range(p, n))])
    x = lambda i: i - 1  # noqa: E731
    if reading == "proof":
        swaps = [(x(i), x(p - i)) for i in range(1, (p - 1) // 2 + 1)]
    elif reading == "printed":
        swaps = [(x(i), x(p - i)) for i in range(1, (p + 1) // 2 + 1)]
    else:
        raise ValueError(f"unknown reading {reading!r}")
    swaps += [(x(p + j), x(p + q - j)) for j in range(1, (q - 1) // 2 + 1)]
    f = identity(n)
    for a, b in swaps:
        f = compose(f, from_cycles(n, [(a, b)]))
    return r, f


def dpq_representation(p: int, q: int, reading: str = "proof") -> PermutationGroup:
    r, f = dpq_generators(p, q, reading)
    return PermutationGroup(p + q, [r, f])


class _Table:
    """Cayley table of a concrete permutation group, elements indexed in sorted order."""

    def __init__(self, g: PermutationGroup, budget: int):
        self.elements = g.elements(budget)
        self.index = {e: i for i, e in enumerate(self.elements)}
        imgs = [e.images for e in self.elements]
        idx = {e.images: i for i, e in enumerate(self.elements)}
        self.mul = [[idx[tuple(a[y] for y in b)] for b in imgs] for a in imgs]
        self.identity = idx[tuple(range(g.degree))]
        self.inv = [row.index(self.identity) for row in self.mul]
        self.gens = [self.index[s] for s in g.generators]

    @property
    def order(self) -> int:
        return len(self.elements)

    def generated(self, gens: Sequence[int]) -> frozenset[int]:
        seen = {self.identity}
        stack = [self.identity]
        while stack:
            x = stack.pop()
            for s in gens:
                y = self.mul[x][s]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)

    def conjugate(self, h: frozenset[int], x: int) -> frozenset[int]:
        xi = self.inv[x]
        return frozenset(self.mul[self.mul[x][y]][xi] for y in h)

    def to_perms(self, h: frozenset[int]) -> frozenset[Permutation]:
        return frozenset(self.elements[i] for i in h)

    def to_indices(self, h) -> frozenset[int]:
        try:
            return frozenset(self.index[e] for e in h)
        except KeyError:
            raise ValueError("subgroup contains a permutation outside the group") from None


_TABLES: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _table(g: PermutationGroup, budget: int = DEFAULT_ELEMENT_BUDGET) -> _Table:
    t = _TABLES.get(g)
    if t is None:
        t = _Table(g, budget)
        _TABLES[g] = t
    elif t.order > budget:
        raise BudgetExceeded(f"group has {t.order} elements, budget is {budget}")
    return t


def _all_subgroups(t: _Table) -> list[frozenset[int]]:
    # every subgroup arises by adjoining elements one at a time to a cyclic one
    gens_of: dict[frozenset[int], tuple[int, ...]] = {}
    for x in range(t.order):
        h = t.generated([x])
        gens_of.setdefault(h, (x,))
    frontier = list(gens_of)
    while frontier:
        nxt = []
        for h in frontier:
            for x in range(t.order):
                if x in h:
                    continue
                gens = gens_of[h] + (x,)
                k = t.generated(gens)
                if k not in gens_of:
                    gens_of[k] = gens
                    nxt.append(k)
        frontier = nxt
    return list(gens_of)


def _subgroup_classes(t: _Table) -> list[list[frozenset[int]]]:
    seen: set[frozenset[int]] = set()
    classes = []
    for h in _all_subgroups(t):
        if h in seen:
            continue
        cls = {t.conjugate(h, x) for x in range(t.order)}
        seen |= cls
        classes.append(sorted(cls, key=sorted))
    classes.sort(key=lambda c: (len(c[0]), sorted(c[0])))
    return classes


def subgroups_up_to_conjugacy(g: PermutationGroup,
                              element_budget: int = DEFAULT_ELEMENT_BUDGET) -> list[frozenset[Permutation]]:
    """One representative per conjugacy class of subgroups, ordered by size."""
    t = _table(g, element_budget)
    return [t.to_perms(cls[0]) for cls in _subgroup_classes(t)]


def all_subgroups(g: PermutationGroup,
                  element_budget: int = DEFAULT_ELEMENT_BUDGET) -> list[frozenset[Permutation]]:
    t = _table(g, element_budget)
    return [t.to_perms(h) for cls in _subgroup_classes(t) for h in cls]


def _core(t: _Table, h: frozenset[int]) -> frozenset[int]:
    return reduce(frozenset.intersection, (t.conjugate(h, x) for x in range(t.order)), h)


def normal_core(g: PermutationGroup, h, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> frozenset[Permutation]:
    """Largest normal subgroup of g inside h (the kernel of the action on g/h)."""
    t = _table(g, element_budget)
    return t.to_perms(_core(t, t.to_indices(h)))


@dataclass(frozen=True)
class ActionDescriptor:
    """Disjoint union of coset actions, one block per listed subgroup."""

    subgroups: tuple[frozenset[Permutation], ...]
    total_points: int = field(default=-1)

    def __post_init__(self):
        subs = tuple(frozenset(h) for h in self.subgroups)
        object.__setattr__(self, "subgroups", subs)

    def indices(self, group_order: int) -> tuple[int, ...]:
        return tuple(group_order // len(h) for h in self.subgroups)

    def label(self, group_order: int) -> str:
        return "+".join(f"G/H{len(h)}" for h in self.subgroups) + \
            f" (orbits {','.join(map(str, self.indices(group_order)))})"


def make_descriptor(g: PermutationGroup, subgroups: Sequence) -> ActionDescriptor:
    n = g.order()
    subs = tuple(frozenset(h) for h in subgroups)
    for h in subs:
        if n % len(h):
            raise ValueError("subgroup order does not divide the group order")
    return ActionDescriptor(subs, sum(n // len(h) for h in subs))


def _left_cosets(t: _Table, h: frozenset[int]) -> list[frozenset[int]]:
    cosets = []
    seen: set[int] = set()
    for x in range(t.order):
        if x not in seen:
            c = frozenset(t.mul[x][y] for y in h)
            seen |= c
            cosets.append(c)
    return cosets


def coset_action(g: PermutationGroup, d: ActionDescriptor,
                 element_budget: int = DEFAULT_ELEMENT_BUDGET) -> PermutationGroup:
    """Realize g acting by left multiplication on the disjoint union of its coset spaces."""
    t = _table(g, element_budget)
    point_of: list[dict[int, int]] = []  # per block: element index -> point
    offset = 0
    for h in d.subgroups:
        hi = t.to_indices(h)
        if t.generated(sorted(hi)) != hi:
            raise ValueError("descriptor member is not a subgroup")
        block = {}
        for i, c in enumerate(_left_cosets(t, hi)):
            for x in c:
                block[x] = offset + i
        point_of.append(block)
        offset += t.order // len(hi)
    reps = []
    for block in point_of:
        first = {}
        for x, pt in block.items():
            first.setdefault(pt, x)
        reps.append(first)
    gens = []
    for s in t.gens:
        images = [0] * offset
        for block, first in zip(point_of, reps):
            for pt, x in first.items():
                images[pt] = block[t.mul[s][x]]
        gens.append(Permutation(tuple(images)))
    return PermutationGroup(offset, gens)


def _faithful_descriptor_indices(t: _Table, max_points: int) -> Iterator[tuple[frozenset[int], ...]]:
    reps = [cls[0] for cls in _subgroup_classes(t) if len(cls[0]) < t.order]
    cores = [_core(t, h) for h in reps]
    idx = [t.order // len(h) for h in reps]
    trivial = frozenset([t.identity])

    def walk(start, chosen, core, used):
        if chosen and core == trivial:
            yield tuple(reps[i] for i in chosen)
        for i in range(start, len(reps)):
            if used + idx[i] <= max_points:
                yield from walk(i + 1, chosen + [i], core & cores[i], used + idx[i])

    yield from walk(0, [], frozenset(range(t.order)), 0)


def faithful_actions(spec: AbstractGroupSpec, max_points: int,
                     element_budget: int = DEFAULT_ELEMENT_BUDGET) -> Iterator[ActionDescriptor]:
    """Faithful actions of the group on at most ``max_points`` points.

    One subgroup per conjugacy class, each class used at most once, the whole
    group (a fixed point) never used; these choices cannot change base sizes.
    """
    g = regular_representation(spec, element_budget)
    t = _table(g, element_budget)
    for subs in _faithful_descriptor_indices(t, max_points):
        yield make_descriptor(g, [t.to_perms(h) for h in subs])


@dataclass
class BaseSizeReport:
    spec: AbstractGroupSpec
    max_points: int
    achieved: set[int]
    upper_bound: int
    witnesses: dict[int, tuple[ActionDescriptor, Base]]
    actions_checked: int

    @property
    def certified(self) -> bool:
        """True when the achieved set already fills every value theory allows."""
        return self.achieved == set(range(1, self.upper_bound + 1))


def theoretical_upper_bound(spec: AbstractGroupSpec,
                            element_budget: int = DEFAULT_ELEMENT_BUDGET) -> int:
    if isinstance(spec, Abelian):
        return spec.rank
    return certified_upper_bound(regular_representation(spec, element_budget), element_budget)


def base_size_report(spec: AbstractGroupSpec, max_points: int,
                     element_budget: int = DEFAULT_ELEMENT_BUDGET) -> BaseSizeReport:
    g = regular_representation(spec, element_budget)
    witnesses: dict[int, tuple[ActionDescriptor, Base]] = {}
    count = 0
    for d in faithful_actions(spec, max_points, element_budget):
        action = coset_action(g, d, element_budget)
        base = minimum_base(action, element_budget)
        count += 1
        witnesses.setdefault(len(base.points), (d, base))
    return BaseSizeReport(spec, max_points, set(witnesses),
                          theoretical_upper_bound(spec, element_budget),
                          dict(sorted(witnesses.items())), count)


def base_size_set(spec: AbstractGroupSpec, max_points: int,
                  element_budget: int = DEFAULT_ELEMENT_BUDGET) -> set[int]:
    return base_size_report(spec, max_points, element_budget).achieved


def is_isomorphic_to(g: PermutationGroup, spec: AbstractGroupSpec,
                     element_budget: int = DEFAULT_ELEMENT_BUDGET) -> bool:
    """Decide g ~= spec by order plus a family certificate.

    Dihedral: some r of order n and involution f outside <r> with f r f = r^-1.
    Abelian: generators commute and the element-order histogram matches, which
    pins down a finite abelian group up to isomorphism.
    """
    elems = g.elements(element_budget)
    if len(elems) != spec.order:
        return False
    if isinstance(spec, Dihedral):
        n = spec.n
        rotations = [x for x in elems if order(x) == n]
        involutions = [x for x in elems if order(x) == 2]
        for r in rotations:
            cyc = {r ** k for k in range(n)}
            r_inv = inverse(r)
            for f in involutions:
                if f not in cyc and compose(f, compose(r, f)) == r_inv:
                    return True
        return False
    if isinstance(spec, Abelian):
        gens = g.generators
        if any(compose(a, b) != compose(b, a) for a in gens for b in gens):
            return False
        have = Counter(order(x) for x in elems)
        want = Counter(spec.element_order(e) for e in spec.elements())
        return have == want
    raise TypeError(f"unsupported group family: {spec!r}")


__all__ = [
    "Abelian", "Dihedral", "AbstractGroupSpec", "ActionDescriptor", "BaseSizeReport",
    "elementary_divisors", "parse_group", "regular_representation",
    "natural_dihedral_action", "dpq_generators", "dpq_representation",
    "subgroups_up_to_conjugacy", "all_subgroups", "normal_core", "make_descriptor",
    "coset_action", "faithful_actions", "base_size_set", "base_size_report",
    "theoretical_upper_bound", "is_isomorphic_to", "length_upper_bound",
]
