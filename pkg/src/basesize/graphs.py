"""Simple graphs, their automorphism groups, and determining numbers.

Automorphisms are found by individualization/refinement: colour classes are
refined to an equitable partition (degree first, then sorted neighbour
colours until stable), one vertex of the first non-singleton class is
individualized on the left, and every vertex of the matching class is tried
on the right.  Each leaf with discrete colourings gives a candidate map that
is kept if it preserves edges.  All automorphisms are enumerated, so this is
only for graphs whose groups are small.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .bases import min_base_size, prime_factors
from .groups import Abelian, AbstractGroupSpec, Dihedral, is_isomorphic_to
from .perm import (
    DEFAULT_ELEMENT_BUDGET,
    BudgetExceeded,
    ParseError,
    Permutation,
    PermutationGroup,
    identity,
)

DEFAULT_VERTEX_BUDGET = 64


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_automorphism(self, p: Permutation | Sequence[int]) -> bool:
        images = p.images if isinstance(p, Permutation) else p
        return all((min(images[u], images[v]), max(images[u], images[v])) in self.edges
                   for u, v in self.edges)


def _graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, frozenset(edges))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return _graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return _graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return _graph(n, ((i, i + 1) for i in range(n - 1)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.vertex_count
    return _graph(a.vertex_count + b.vertex_count,
                  list(a.edges) + [(u + shift, v + shift) for u, v in b.edges])


def rigid_tree() -> Graph:
    """Smallest asymmetric tree: branches of lengths 1, 2, 3 from one vertex."""
    return _graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])


def decorated_cycle(n: int) -> Graph:
    """C_n with a 4-cycle c_i a_i b_i c_{i+1} glued on every edge.

    The a/b vertices form a single regular orbit of D_n, so the determining
    number is 1.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        a, b = n + i, 2 * n + i
        edges += [(i, j), (i, a), (a, b), (b, j)]
    return _graph(3 * n, edges)


def sun(n: int) -> Graph:
    """C_n with one pendant vertex on every cycle vertex."""
    g = cycle(n)
    return _graph(2 * n, list(g.edges) + [(i, n + i) for i in range(n)])


def pendant_cycle(n: int, spacing: int) -> Graph:
    """C_{n*spacing} with a pendant on every ``spacing``-th vertex; Aut is D_n."""
    m = n * spacing
    g = cycle(m)
    return _graph(m + n, list(g.edges) + [(spacing * i, m + i) for i in range(n)])


def cycle_with_hubs(n: int, moduli: Sequence[int], decorated: bool = False,
                    join_hubs: bool = False) -> Graph:
    """C_n (or its decorated version) plus, for each modulus d, d hub vertices.

    Hub j of modulus d is joined to every cycle vertex i with i = j (mod d),
    so the hubs of modulus d form an orbit of size d.  With ``join_hubs`` the
    first two hub families are joined completely.
    """
    base = decorated_cycle(n) if decorated else cycle(n)
    edges = list(base.edges)
    nv = base.vertex_count
    families = []
    for d in moduli:
        if n % d or not 1 < d < n:
            raise ValueError(f"modulus {d} must be a proper divisor of {n}")
        hubs = list(range(nv, nv + d))
        edges += [(i, nv + i % d) for i in range(n)]
        families.append(hubs)
        nv += d
    if join_hubs and len(families) >= 2:
        edges += [(u, v) for u in families[0] for v in families[1]]
    return _graph(nv, edges)


def chiral_cycle(d: int, tail: int = 1) -> Graph:
    """A graph with automorphism group Z_d (d >= 3) and determining number 1.

    Each edge c_i c_{i+1} of C_d gets a 4-cycle c_i e_i f_i c_{i+1}, and e_i
    carries a pendant path of ``tail`` vertices, which breaks the reflections.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    if tail < 1:
        raise ValueError("tail must be at least 1")
    per = 2 + tail
    edges = []
    nv = d
    for i in range(d):
        j = (i + 1) % d
        e, f = nv, nv + 1
        edges += [(i, j), (i, e), (e, f), (f, j)]
        prev = e
        for t in range(tail):
            edges.append((prev, nv + 2 + t))
            prev = nv + 2 + t
        nv += per
    return _graph(nv, edges)


def frucht_graph(spec: AbstractGroupSpec, generators: Sequence | None = None,
                 vertex_budget: int | None = None) -> Graph:
    """Graph with automorphism group isomorphic to ``spec`` and determining number 1.

    One vertex per group element, tagged with two pendant paths of lengths 1
    and 2.  For the k-th generator s (k = 1, 2, ...) each element u is joined
    to u*s by a path with 2k+1 inner vertices, the first of which carries a
    pendant so the direction can be read off.  Left multiplication preserves
    all of this.  The result is checked and rejected unless Aut matches.
    """
    elems = spec.elements()
    if len(elems) < 2:
        raise ValueError("the group must be nontrivial")
    if generators is None:
        gens = spec.generators()
    else:
        gens = [elems[s] if isinstance(s, int) else tuple(s) for s in generators]
    ident = elems[0]
    gens = [s for s in gens if s != ident]
    if not gens:
        raise ValueError("need at least one non-identity generator")
    index = {e: i for i, e in enumerate(elems)}
    edges = []
    nv = len(elems)

    def new(k: int) -> list[int]:
        nonlocal nv
        out = list(range(nv, nv + k))
        nv += k
        return out

    for u in range(len(elems)):
        (leaf,) = new(1)
        t1, t2 = new(2)
        edges += [(u, leaf), (u, t1), (t1, t2)]
    for k, s in enumerate(gens, start=1):
        for e in elems:
            u, v = index[e], index[spec.multiply(e, s)]
            inner = new(2 * k + 1)
            (tag,) = new(1)
            chain = [u] + inner + [v]
            edges += list(zip(chain, chain[1:]))
            edges.append((inner[0], tag))
    g = _graph(nv, edges)
    if vertex_budget is not None and g.vertex_count > vertex_budget:
        raise BudgetExceeded(f"Frucht graph has {g.vertex_count} vertices, budget {vertex_budget}")
    aut = automorphism_group(g, vertex_budget=max(g.vertex_count, 1))
    if not is_isomorphic_to(aut, spec):
        raise ValueError(f"gadget construction failed: |Aut| = {aut.order()} for {spec}")
    if min_base_size(aut) != 1:
        raise ValueError("gadget construction failed: determining number is not 1")
    # the generated group must be the whole group
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = spec.multiply(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(elems):
        raise ValueError("generators do not generate the group")
    return g


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> tuple[list[int], tuple]:
    """Refine to the coarsest equitable partition below ``colors``.

    Returns canonical colours (ranks of signatures) and a trace that two
    colourings must share for a colour-preserving isomorphism to exist.
    """
    k = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        uniq = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(uniq)}
        trace.append(tuple(sorted(Counter(sigs).items())))
        new = [rank[s] for s in sigs]
        if len(uniq) == k:
            return new, tuple(trace)
        colors, k = new, len(uniq)


def _individualize(colors: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[v] = 2 * colors[v]
    return out


def _reduce_generators(degree: int, elements: Sequence[Permutation]) -> list[Permutation]:
    gens: list[Permutation] = []
    span = {identity(degree).images}
    for a in elements:
        if a.images in span:
            continue
        gens.append(a)
        gimgs = [g.images for g in gens]
        queue = deque(span)
        while queue:
            x = queue.popleft()
            for g in gimgs:
                y = tuple(g[i] for i in x)
                if y not in span:
                    span.add(y)
                    queue.append(y)
    return gens


def automorphisms(g: Graph, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> list[Permutation]:
    """All automorphisms of g, sorted by image table."""
    n = g.vertex_count
    adj = g.adjacency
    found: list[tuple[int, ...]] = []
    start, _ = _refine(adj, [len(a) for a in adj])

    def search(left: list[int], right: list[int]) -> None:
        counts = Counter(left)
        cell = min((c for c, m in counts.items() if m > 1), default=None)
        if cell is None:
            where = {c: v for v, c in enumerate(right)}
            images = tuple(where[left[v]] for v in range(n))
            if g.is_automorphism(images):
                found.append(images)
                if len(found) > element_budget:
                    raise BudgetExceeded(f"more than {element_budget} automorphisms")
            return
        v = left.index(cell)
        l2, ltrace = _refine(adj, _individualize(left, v))
        for w in (u for u in range(n) if right[u] == cell):
            r2, rtrace = _refine(adj, _individualize(right, w))
            if rtrace == ltrace:
                search(l2, r2)

    search(start, list(start))
    return [Permutation(t) for t in sorted(found)]


def automorphism_group(g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET,
                       element_budget: int = DEFAULT_ELEMENT_BUDGET) -> PermutationGroup:
    if g.vertex_count > vertex_budget:
        raise BudgetExceeded(f"graph has {g.vertex_count} vertices, budget is {vertex_budget}")
    if g.vertex_count == 0:
        raise ValueError("the empty graph has no points to act on")
    elems = automorphisms(g, element_budget)
    return PermutationGroup(g.vertex_count, _reduce_generators(g.vertex_count, elems),
                            elements=elems)


def determining_number(g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET,
                       element_budget: int = DEFAULT_ELEMENT_BUDGET) -> int:
    if g.vertex_count == 0:
        return 0
    return min_base_size(automorphism_group(g, vertex_budget, element_budget), element_budget)


@dataclass
class CorpusEntry:
    graph: Graph
    label: str
    aut: PermutationGroup
    determining_number: int


@dataclass
class GraphCorpus:
    target_spec: AbstractGroupSpec
    entries: list[CorpusEntry] = field(default_factory=list)
    dropped: list[str] = field(default_factory=list)

    def determining_numbers(self) -> set[int]:
        return {e.determining_number for e in self.entries}


def _proper_divisors(n: int) -> list[int]:
    return [d for d in range(2, n) if n % d == 0]


def _coprime(ds: Sequence[int]) -> bool:
    primes = [prime_factors(d)[0] for d in ds]
    return len(set(primes)) == len(primes)


def _abelian_component(divisors: Sequence[int], variant: int) -> tuple[str, callable, int]:
    """A connected graph with Aut ~= Z_{d1} + ... and determining number 1."""
    if len(divisors) == 1 and divisors[0] == 2:
        return f"P{2 * variant}", lambda: path(2 * variant), 2 * variant
    if _coprime(divisors):
        m = 1
        for d in divisors:
            m *= d
        return f"chiral({m},tail={variant})", lambda: chiral_cycle(m, variant), m * (3 + variant)
    sub = Abelian(tuple(sorted(divisors)))
    return f"frucht({sub})", lambda: frucht_graph(sub), _frucht_size(sub)


def _union_candidate(parts) -> tuple[str, callable, int]:
    return (" + ".join(lab for lab, _, _ in parts),
            lambda: _union_all([b() for _, b, _ in parts]),
            sum(size for _, _, size in parts))


def _candidates(spec: AbstractGroupSpec) -> list[tuple[str, callable, int]]:
    """(label, builder, vertex count) for every construction tried on ``spec``."""
    out = []

    def add(label, build, size):
        out.append((label, build, size))

    if isinstance(spec, Dihedral):
        n = spec.n
        bases = []
        if n >= 3:
            bases += [
                (f"C{n}", lambda: cycle(n), n),
                (f"decorated(C{n})", lambda: decorated_cycle(n), 3 * n),
                (f"sun({n})", lambda: sun(n), 2 * n),
                (f"pendant_cycle({n},2)", lambda: pendant_cycle(n, 2), 3 * n),
            ]
            divs = _proper_divisors(n)
            if divs:
                hs = sum(divs)
                bases += [
                    (f"hubs(C{n};{divs})", lambda: cycle_with_hubs(n, divs), n + hs),
                    (f"hubs(decorated(C{n});{divs})",
                     lambda: cycle_with_hubs(n, divs, decorated=True), 3 * n + hs),
                ]
                if len(divs) >= 2:
                    bases.append((f"hubs(C{n};{divs},joined)",
                                  lambda: cycle_with_hubs(n, divs, join_hubs=True), n + hs))
        if n % 2 == 0 and (n // 2) % 2 == 1 and n // 2 >= 3:
            m = n // 2
            for lab, build, size in [(f"C{m}", lambda: cycle(m), m),
                                     (f"decorated(C{m})", lambda: decorated_cycle(m), 3 * m),
                                     (f"sun({m})", lambda: sun(m), 2 * m)]:
                bases.append((f"P2+{lab}", lambda b=build: disjoint_union(path(2), b()), size + 2))
        bases.append((f"frucht({spec})", lambda: frucht_graph(spec), _frucht_size(spec)))
    else:
        divs = list(spec.divisors)
        bases = []
        bases.append(_union_candidate(
            [_abelian_component([d], i + 1) for i, d in enumerate(divs)]))
        # merge the first j divisors into one component: determining number n - j + 1
        for j in range(2, len(divs) + 1):
            head = _abelian_component(divs[:j], 1)
            rest = [_abelian_component([d], i + 2) for i, d in enumerate(divs[j:])]
            bases.append(_union_candidate([head] + rest))
        bases.append((f"frucht({spec})", lambda: frucht_graph(spec), _frucht_size(spec)))
    seen = set()
    for label, build, size in bases:
        if label in seen:
            continue
        seen.add(label)
        add(label, build, size)
        add(f"{label} + K1", lambda b=build: disjoint_union(b(), path(1)), size + 1)
        add(f"{label} + rigid tree", lambda b=build: disjoint_union(b(), rigid_tree()), size + 7)
    return out


def _frucht_size(spec: AbstractGroupSpec) -> int:
    m = len(spec.generators())
    return spec.order * (4 + sum(2 * k + 2 for k in range(1, m + 1)))


def _union_all(graphs: Sequence[Graph]) -> Graph:
    out = graphs[0]
    for h in graphs[1:]:
        out = disjoint_union(out, h)
    return out


def standard_corpus(spec: AbstractGroupSpec, size_budget: int = DEFAULT_VERTEX_BUDGET,
                    element_budget: int = DEFAULT_ELEMENT_BUDGET) -> GraphCorpus:
    """Verified graphs whose automorphism group is isomorphic to ``spec``.

    Constructions over the vertex budget or failing verification are listed
    in ``dropped`` rather than silently skipped.
    """
    corpus = GraphCorpus(spec)
    for label, build, size in _candidates(spec):
        if size > size_budget:
            corpus.dropped.append(f"{label}: {size} vertices > budget {size_budget}")
            continue
        try:
            g = build()
        except ValueError as exc:
            corpus.dropped.append(f"{label}: {exc}")
            continue
        if g.vertex_count > size_budget:
            corpus.dropped.append(f"{label}: {g.vertex_count} vertices > budget {size_budget}")
            continue
        aut = automorphism_group(g, size_budget, element_budget)
        if not is_isomorphic_to(aut, spec, element_budget):
            corpus.dropped.append(f"{label}: |Aut| = {aut.order()}, not isomorphic to {spec}")
            continue
        corpus.entries.append(CorpusEntry(g, label, aut, min_base_size(aut, element_budget)))
    if not corpus.entries:
        raise ValueError(f"empty corpus for {spec} at vertex budget {size_budget}")
    return corpus


def parse_graph_text(text: str) -> Graph:
    """Read ``n m`` then m lines ``u v`` (0 <= u < v < n); '#' starts a comment."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(t) for t in parts]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) != 2:
            raise ParseError(f"expected two integers, got {len(nums)}", lineno)
        if header is None:
            header = nums
            if nums[0] < 0 or nums[1] < 0:
                raise ParseError("negative counts", lineno)
            continue
        u, v = nums
        if not 0 <= u < v < header[0]:
            raise ParseError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {header[0]}", lineno)
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    if len(set(edges)) != len(edges):
        raise ParseError("repeated edge")
    return Graph(header[0], frozenset(edges))


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"
