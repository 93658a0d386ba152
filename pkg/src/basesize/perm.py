"""Permutations on {0, ..., n-1} and small permutation groups.

Composition convention: ``compose(a, b)(x) == a(b(x))`` (right factor first).
Groups are handled by brute-force closure, so everything here is exact but
only meant for groups of a few thousand elements.
"""

from __future__ import annotations

import math
import re
import threading
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

DEFAULT_ELEMENT_BUDGET = 1_000_000


class BudgetExceeded(RuntimeError):
    """Raised when an exact computation would exceed its size budget."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) == 0:
            raise ValueError("degree must be positive")
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{imgs} is not a permutation of 0..{len(imgs) - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __str__(self) -> str:
        return cycle_notation(self)


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[tuple[int, ...], ...]
    fixed_points: tuple[int, ...]

    @property
    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles))


def _raw(images: Sequence[int]) -> Permutation:
    # skips validation; callers guarantee a bijection
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", tuple(images))
    return p


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("degree must be positive")
    return _raw(range(n))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return the permutation x -> a(b(x))."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    ai = a.images
    return _raw([ai[y] for y in b.images])


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, y in enumerate(a.images):
        inv[y] = i
    return _raw(inv)


def cycle_decomposition(a: Permutation) -> CycleDecomposition:
    seen = [False] * a.degree
    cycles = []
    fixed = []
    for start in range(a.degree):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = a.images[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = a.images[x]
        if len(cyc) == 1:
            fixed.append(start)
        else:
            cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles), tuple(fixed))


def order(a: Permutation) -> int:
    lengths = cycle_decomposition(a).cycle_type
    return reduce(math.lcm, lengths, 1)


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    images = list(range(n))
    used: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if not 0 <= x < n:
                raise ValueError(f"point {x} out of range for degree {n}")
            if x in used:
                raise ValueError(f"repeated point {x}")
            used.add(x)
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return _raw(images)


def cycle_notation(a: Permutation) -> str:
    cycles = cycle_decomposition(a).cycles
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


class PermutationGroup:
    """A permutation group given by generators, with a lazily built element set.

    The element closure is computed at most once (guarded by a lock) and then
    shared; readers never see a partially built set.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation],
                 elements: Iterable[Permutation] | None = None):
        gens = tuple(generators)
        if degree < 1:
            raise ValueError("degree must be positive")
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        if not gens:
            gens = (identity(degree),)
        self.degree = degree
        self.generators = gens
        self._elements: tuple[Permutation, ...] | None = None
        self._element_set: frozenset[Permutation] | None = None
        self._lock = threading.Lock()
        if elements is not None:
            self._elements = tuple(sorted(set(elements)))

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators))
        return f"PermutationGroup(degree={self.degree}, generators=[{gens}])"

    def elements(self, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> tuple[Permutation, ...]:
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    self._elements = _bfs_closure(self.degree, self.generators, element_budget)
        elif len(self._elements) > element_budget:
            raise BudgetExceeded(
                f"group has {len(self._elements)} elements, budget is {element_budget}")
        return self._elements

    def order(self, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> int:
        return len(self.elements(element_budget))

    def __contains__(self, p: Permutation) -> bool:
        if self._element_set is None:
            self._element_set = frozenset(self.elements())
        return p in self._element_set

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)


def _bfs_closure(degree: int, gens: Sequence[Permutation], budget: int) -> tuple[Permutation, ...]:
    if budget < 1:
        raise ValueError("element budget must be positive")
    start = tuple(range(degree))
    gen_imgs = [g.images for g in gens]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gen_imgs:
            y = tuple(g[i] for i in x)  # g composed with x
            if y not in seen:
                seen.add(y)
                if len(seen) > budget:
                    raise BudgetExceeded(f"group closure exceeded element budget {budget}")
                queue.append(y)
    return tuple(_raw(t) for t in sorted(seen))


def closure(g: PermutationGroup, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> frozenset[Permutation]:
    return frozenset(g.elements(element_budget))


def orbit(g: PermutationGroup, v: int) -> frozenset[int]:
    if not 0 <= v < g.degree:
        raise ValueError(f"point {v} out of range for degree {g.degree}")
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for s in g.generators:
            y = s.images[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def orbits(g: PermutationGroup) -> list[frozenset[int]]:
    """Orbits ordered by their smallest point."""
    out = []
    covered: set[int] = set()
    for v in range(g.degree):
        if v not in covered:
            o = orbit(g, v)
            covered |= o
            out.append(o)
    return out


def pointwise_stabilizer(g: PermutationGroup, points: Iterable[int],
                         element_budget: int = DEFAULT_ELEMENT_BUDGET) -> PermutationGroup:
    pts = tuple(points)
    for x in pts:
        if not 0 <= x < g.degree:
            raise ValueError(f"point {x} out of range for degree {g.degree}")
    elems = [h for h in g.elements(element_budget) if all(h.images[x] == x for x in pts)]
    return PermutationGroup(g.degree, elems, elements=elems)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_generator(text: str, degree: int, line: int | None = None) -> Permutation:
    """Parse one generator given as an image list or in 0-based cycle notation."""
    text = text.strip()
    try:
        if text.startswith("("):
            if _CYCLE_RE.sub("", text).strip():
                raise ValueError(f"unexpected text outside cycles: {text!r}")
            cycles = [tuple(int(t) for t in body.replace(",", " ").split())
                      for body in _CYCLE_RE.findall(text)]
            return from_cycles(degree, [c for c in cycles if c])
        images = [int(t) for t in text.split()]
        if len(images) != degree:
            raise ValueError(f"expected {degree} images, got {len(images)}")
        return Permutation(tuple(images))
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def parse_perm_text(text: str) -> PermutationGroup:
    """Read the generator file format: ``degree n`` then one generator per line."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ParseError("expected 'degree <n>'", lineno)
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(f"bad degree {parts[1]!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
            continue
        gens.append(parse_generator(line, degree, lineno))
    if degree is None:
        raise ParseError("missing 'degree <n>' header")
    return PermutationGroup(degree, gens)


def format_perm_text(g: PermutationGroup) -> str:
    lines = [f"degree {g.degree}"]
    lines += [cycle_notation(s) for s in g.generators]
    return "\n".join(lines) + "\n"
