"""Executable checks of the base-size results on concrete groups and graphs.

Each check returns a ``ClaimResult``.  Statements that quantify over every
finite graph can only be supported by a finite corpus; those come back as
EVIDENCE, never PASS.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .bases import (
    corollary_bound,
    is_base,
    largest_prime_power_order,
    length_upper_bound,
    min_base_size,
    minimum_base,
    prime_factors,
    prime_power_parts,
)
from .graphs import (
    DEFAULT_VERTEX_BUDGET,
    GraphCorpus,
    Graph,
    automorphism_group,
    automorphisms,
    cycle,
    decorated_cycle,
    disjoint_union,
    frucht_graph,
    path,
    standard_corpus,
)
from .groups import (
    Abelian,
    AbstractGroupSpec,
    Dihedral,
    all_subgroups,
    base_size_report,
    coset_action,
    dpq_generators,
    dpq_representation,
    faithful_actions,
    is_isomorphic_to,
    make_descriptor,
    natural_dihedral_action,
    regular_representation,
)
from .perm import (
    DEFAULT_ELEMENT_BUDGET,
    BudgetExceeded,
    PermutationGroup,
    compose,
    cycle_decomposition,
    inverse,
    order,
    orbit,
    orbits,
    pointwise_stabilizer,
)

PASS, FAIL, EVIDENCE = "PASS", "FAIL", "EVIDENCE"


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    instances_checked: int
    status: str
    detail: str

    def line(self) -> str:
        return f"CLAIM {self.claim_id} {self.status} checked={self.instances_checked} {self.detail}"


COVERAGE = [
    ("LENGTH-BOUND", "every base size is at most the number of prime factors of |G|"),
    ("ORBIT-STABILIZER", "|orbit(v)| * |stab(v)| = |G| on every enumerated action"),
    ("LEMMA-ORDER-PK", "an element of order p^k has a p^k-cycle"),
    ("COR-ORBIT-PK", "max B(G) <= j + 1 for an element of order p^k, j = Omega(|G|/p^k)"),
    ("THM-ABELIAN", "B(G) = D(G) = {1..n} for abelian G with n elementary divisors"),
    ("LEMMA-DN-CONSTRUCTIONS", "{1,2} in D(D_n): Frucht-type graph (1) and C_n (2)"),
    ("PROP-DPK", "B(D_{p^k}) = D(D_{p^k}) = {1,2}"),
    ("PROP-D2PK", "B(D_{2p^k}) = D(D_{2p^k}) = {1,2,3}, P_2 + C_{p^k} gives 3"),
    ("PROP-D15", "the explicit action of D_pq on p+q points has base size 3"),
    ("LEMMA-PRIMEORBITS", "an order-p element runs through every orbit of size p when p || |G|"),
    ("LEMMA-QSTAB-ORBIT", "an element of prime order q fixes every orbit smaller than q"),
    ("PROP-FLIPPING", "involutions of D_pq move a point in every orbit of size p or q"),
    ("THM-3-NOT-IN-D", "3 is not the determining number of any graph with Aut = D_pq"),
    ("COR-DPQ-B", "B(D_pq) = {1,2,3} and {1,2} in D(D_pq)"),
]


def _fmt_set(s: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _status(ok: bool, evidence: bool = False) -> str:
    if not ok:
        return FAIL
    return EVIDENCE if evidence else PASS


def _merge(claim_id: str, results: Sequence[ClaimResult], summary: str = "") -> ClaimResult:
    n = sum(r.instances_checked for r in results)
    bad = [r for r in results if r.status == FAIL]
    if bad:
        return ClaimResult(claim_id, n, FAIL, "; ".join(r.detail for r in bad))
    status = EVIDENCE if any(r.status == EVIDENCE for r in results) else PASS
    return ClaimResult(claim_id, n, status, summary or "; ".join(r.detail for r in results))


# ---- group-action properties -------------------------------------------------

def check_lemma_order_pk(g: PermutationGroup, name: str = "group",
                         element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    checked = 0
    for x in g.elements(element_budget):
        m = order(x)
        if m == 1 or prime_power_parts(m) is None:
            continue
        checked += 1
        lengths = cycle_decomposition(x).cycle_type
        if m not in lengths:
            return ClaimResult("LEMMA-ORDER-PK", checked, FAIL,
                               f"{name}: element {x} of order {m} has cycle type {lengths}")
    return ClaimResult("LEMMA-ORDER-PK", max(checked, 1), PASS,
                       f"{name}: {checked} prime-power-order elements")


def check_orbit_stabilizer(g: PermutationGroup, name: str = "group",
                           element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    n = g.order(element_budget)
    for v in range(g.degree):
        o = len(orbit(g, v))
        s = pointwise_stabilizer(g, [v], element_budget).order()
        if o * s != n:
            return ClaimResult("ORBIT-STABILIZER", v + 1, FAIL,
                               f"{name}: point {v}: {o} * {s} != {n}")
    return ClaimResult("ORBIT-STABILIZER", g.degree, PASS, f"{name}: {g.degree} points")


def check_qstab_orbit(g: PermutationGroup, name: str = "group",
                      element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    orbs = orbits(g)
    checked = 0
    for x in g.elements(element_budget):
        q = order(x)
        if q == 1 or prime_factors(q) != [q]:
            continue
        for o in orbs:
            if len(o) < q:
                checked += 1
                if any(x(v) != v for v in o):
                    return ClaimResult("LEMMA-QSTAB-ORBIT", checked, FAIL,
                                       f"{name}: {x} of order {q} moves orbit {sorted(o)}")
    return ClaimResult("LEMMA-QSTAB-ORBIT", max(checked, 1), PASS,
                       f"{name}: {checked} (element, small orbit) pairs")


def check_primeorbits(g: PermutationGroup, name: str = "group",
                      element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    n = g.order(element_budget)
    orbs = orbits(g)
    checked = 0
    for p in sorted(set(prime_factors(n)) if n > 1 else []):
        if (n // p) % p == 0:
            continue  # hypothesis needs p to divide |G| exactly once
        elems_p = [x for x in g.elements(element_budget) if order(x) == p]
        for o in orbs:
            if len(o) != p:
                continue
            for x in elems_p:
                for v in o:
                    checked += 1
                    powers = {(x ** k)(v) for k in range(p)}
                    if powers != set(o):
                        return ClaimResult("LEMMA-PRIMEORBITS", checked, FAIL,
                                           f"{name}: {x} from {v} reaches {sorted(powers)} "
                                           f"not orbit {sorted(o)}")
    return ClaimResult("LEMMA-PRIMEORBITS", max(checked, 1), PASS,
                       f"{name}: {checked} (element, point) pairs")


def check_length_bound(g: PermutationGroup, name: str = "group",
                       element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    n = g.order(element_budget)
    if n == 1:
        return ClaimResult("LENGTH-BOUND", 1, PASS, f"{name}: trivial")
    base = minimum_base(g, element_budget)
    chain = base.witness_chain
    strict = all(a > b and a % b == 0 for a, b in zip(chain, chain[1:])) and chain[-1] == 1
    ok = strict and len(base.points) <= length_upper_bound(n)
    return ClaimResult("LENGTH-BOUND", 1, _status(ok),
                       f"{name}: b={len(base.points)} <= {length_upper_bound(n)}, chain {chain}")


# ---- base size sets ----------------------------------------------------------

def check_corollary_orbit_pk(spec: AbstractGroupSpec, max_points: int,
                             element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    g = regular_representation(spec, element_budget)
    pk = largest_prime_power_order(g.elements(element_budget))
    bound = corollary_bound(spec.order, pk, g)
    rep = base_size_report(spec, max_points, element_budget)
    ok = bool(rep.achieved) and max(rep.achieved) <= bound
    return ClaimResult("COR-ORBIT-PK", rep.actions_checked, _status(ok),
                       f"{spec} N={max_points}: B_N={_fmt_set(rep.achieved)} "
                       f"bound={bound} (p^k={pk})")


def check_abelian_theorem(divisor_lists: Sequence[Sequence[int]], max_points: int | None = None,
                          element_budget: int = DEFAULT_ELEMENT_BUDGET,
                          vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> ClaimResult:
    """``max_points=None`` uses |G| + sum(divisors) for each group."""
    parts = []
    for orders in divisor_lists:
        spec = Abelian.from_orders(orders)
        n = spec.rank
        full = set(range(1, n + 1))
        need = spec.order + sum(spec.divisors)
        N = need if max_points is None else max_points
        rep = base_size_report(spec, N, element_budget)
        ok = rep.achieved <= full and (N < need or rep.achieved == full)
        corpus = standard_corpus(spec, vertex_budget, element_budget)
        dn = corpus.determining_numbers()
        ok = ok and dn <= full
        parts.append(ClaimResult("THM-ABELIAN", rep.actions_checked + len(corpus.entries),
                                 _status(ok),
                                 f"{spec} N={N}: B_N={_fmt_set(rep.achieved)} "
                                 f"D_corpus={_fmt_set(dn)} n={n}"))
    return _merge("THM-ABELIAN", parts)


def check_dn_constructions(ns: Sequence[int], element_budget: int = DEFAULT_ELEMENT_BUDGET,
                           frucht_up_to: int = 5) -> ClaimResult:
    parts = []
    for n in ns:
        spec = Dihedral(n)
        c = cycle(n)
        aut_c = automorphism_group(c, c.vertex_count, element_budget)
        one = frucht_graph(spec) if n <= frucht_up_to else decorated_cycle(n)
        aut_1 = automorphism_group(one, one.vertex_count, element_budget)
        ok = (is_isomorphic_to(aut_c, spec) and min_base_size(aut_c) == 2
              and is_isomorphic_to(aut_1, spec) and min_base_size(aut_1) == 1)
        kind = "frucht" if n <= frucht_up_to else "decorated"
        parts.append(ClaimResult("LEMMA-DN-CONSTRUCTIONS", 2, _status(ok),
                                 f"D{n}: C{n}->2, {kind}({one.vertex_count}v)->1"))
    return _merge("LEMMA-DN-CONSTRUCTIONS", parts,
                  f"n={','.join(map(str, ns))}: determining numbers 1 and 2 realized")


def _dihedral_b_and_d(n: int, max_points: int, vertex_budget: int,
                      element_budget: int) -> tuple[set[int], set[int], int, int, GraphCorpus]:
    spec = Dihedral(n)
    rep = base_size_report(spec, max_points, element_budget)
    corpus = standard_corpus(spec, vertex_budget, element_budget)
    return rep.achieved, corpus.determining_numbers(), rep.upper_bound, rep.actions_checked, corpus


def check_prop_dpk(ns: Sequence[int], element_budget: int = DEFAULT_ELEMENT_BUDGET,
                   vertex_budget: int | None = None) -> ClaimResult:
    parts = []
    for n in ns:
        if prime_power_parts(n) is None:
            raise ValueError(f"{n} is not a prime power")
        N = 3 * n
        vb = vertex_budget or max(DEFAULT_VERTEX_BUDGET, 3 * n)
        b, d, ub, k, corpus = _dihedral_b_and_d(n, N, vb, element_budget)
        ok = b == {1, 2} and d == {1, 2} and ub == 2
        parts.append(ClaimResult("PROP-DPK", k + len(corpus.entries), _status(ok),
                                 f"D{n}: B_{N}={_fmt_set(b)} D={_fmt_set(d)} bound={ub}"))
    return _merge("PROP-DPK", parts)


def check_prop_d2pk(ns: Sequence[int], element_budget: int = DEFAULT_ELEMENT_BUDGET,
                    vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> ClaimResult:
    parts = []
    for n in ns:
        m = n // 2
        if n % 2 or m % 2 == 0 or prime_power_parts(m) is None:
            raise ValueError(f"{n} is not twice an odd prime power")
        N = 3 * n
        b, d, ub, k, corpus = _dihedral_b_and_d(n, N, vertex_budget, element_budget)
        g = disjoint_union(path(2), cycle(m))
        aut = automorphism_group(g, vertex_budget, element_budget)
        union_ok = is_isomorphic_to(aut, Dihedral(n)) and min_base_size(aut) == 3
        ok = b == {1, 2, 3} and d == {1, 2, 3} and ub == 3 and union_ok
        parts.append(ClaimResult("PROP-D2PK", k + len(corpus.entries) + 1, _status(ok),
                                 f"D{n}: B_{N}={_fmt_set(b)} D={_fmt_set(d)} "
                                 f"P2+C{m}->{min_base_size(aut)}"))
    return _merge("PROP-D2PK", parts)


def _printed_reading_note(p: int, q: int) -> str:
    r, f = dpq_generators(p, q, "printed")
    g = PermutationGroup(p + q, [r, f])
    dihedral = is_isomorphic_to(g, Dihedral(p * q))
    return (f"printed-bound f={f} gives |G|={g.order()} dihedral={dihedral} "
            f"b={min_base_size(g)}")


def check_prop_d15(p: int, q: int, reading: str = "proof",
                   element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    r, f = dpq_generators(p, q, reading)
    g = PermutationGroup(p + q, [r, f])
    n = p + q
    problems = []
    if not is_isomorphic_to(g, Dihedral(p * q), element_budget):
        problems.append(f"<r,f> is not D{p * q} (|G|={g.order(element_budget)})")
    fixed = cycle_decomposition(f).fixed_points
    if reading == "proof" and fixed != (p - 1, n - 1):
        problems.append(f"f fixes {fixed}, expected {(p - 1, n - 1)}")
    b = min_base_size(g, element_budget)
    if b != 3:
        problems.append(f"base size {b}")
    pairs = list(combinations(range(n), 2))
    bases = [pr for pr in pairs if is_base(g, pr, element_budget)]
    if bases:
        problems.append(f"2-subsets that are bases: {bases[:3]}")
    # the conjugate r^k f r^-k with k = i mod p, k = j mod q fixes x_i and x_{p+j}
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            k = next(k for k in range(1, p * q + 1) if k % p == i % p and k % q == j % q)
            w = compose(r ** k, compose(f, inverse(r) ** k))
            a, c = i - 1, p + j - 1
            if w.is_identity() or w(a) != a or w(c) != c:
                problems.append(f"witness r^{k} f r^-{k} fails on x{i}, x{p + j}")
    detail = f"D{p * q} on {n} points ({reading} reading): b={b}, {len(pairs)} pairs all non-bases"
    if reading == "proof":
        detail += f"; {_printed_reading_note(p, q)}"
    if problems:
        return ClaimResult("PROP-D15", len(pairs), FAIL,
                           f"D{p * q} ({reading} reading): " + "; ".join(problems))
    return ClaimResult("PROP-D15", len(pairs), PASS, detail)


# ---- D_pq graph claims -------------------------------------------------------

def _split_pq(n: int) -> tuple[int, int]:
    fs = prime_factors(n)
    if len(fs) != 2 or fs[0] == fs[1] or fs[0] == 2:
        raise ValueError(f"{n} is not a product of two distinct odd primes")
    return fs[0], fs[1]


def _involution_moves_every_orbit(aut: PermutationGroup, sizes: set[int]) -> str | None:
    orbs = [o for o in orbits(aut) if len(o) in sizes]
    for x in aut.elements():
        if order(x) != 2:
            continue
        for o in orbs:
            if all(x(v) == v for v in o):
                return f"{x} fixes orbit {sorted(o)}"
    return None


def check_prop_flipping(corpus: GraphCorpus, element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    """Corpus scan plus an exhaustive scan of every transitive action of degree p or q.

    An orbit of size p or q in any action is a transitive action of that
    degree, i.e. a coset action on a subgroup of index p or q, so the second
    scan covers all actions, graph-realized or not.
    """
    spec = corpus.target_spec
    if not corpus.entries:
        raise ValueError("empty corpus")
    p, q = _split_pq(spec.n)
    checked = 0
    for e in corpus.entries:
        checked += 1
        bad = _involution_moves_every_orbit(e.aut, {p, q})
        if bad:
            return ClaimResult("PROP-FLIPPING", checked, FAIL, f"{e.label}: {bad}")
    g = regular_representation(spec, element_budget)
    cert = 0
    for h in all_subgroups(g, element_budget):
        if spec.order // len(h) not in (p, q):
            continue
        action = coset_action(g, make_descriptor(g, [h]), element_budget)
        cert += 1
        bad = _involution_moves_every_orbit(action, {p, q})
        if bad:
            return ClaimResult("PROP-FLIPPING", checked + cert, FAIL,
                               f"{spec} coset action of index {spec.order // len(h)}: {bad}")
    return ClaimResult("PROP-FLIPPING", checked + cert, PASS,
                       f"{spec}: {checked} corpus graphs, all {cert} transitive actions "
                       f"of degree {p} or {q}")


def _orbit_adjacency_homogeneous(graph: Graph, aut: PermutationGroup, q: int) -> str | None:
    orbs = orbits(aut)
    for big in (o for o in orbs if len(o) == q):
        for small in (o for o in orbs if len(o) < q):
            count = sum(graph.has_edge(u, v) for u in big for v in small)
            if count not in (0, len(big) * len(small)):
                return f"{count} edges between orbits {sorted(big)} and {sorted(small)}"
    return None


def _invariant_graph_scan(spec: Dihedral, max_points: int, max_orbitals: int,
                          element_budget: int) -> tuple[int, int, str | None]:
    """Look for a graph with Aut = G among G-invariant graphs on small base-3 actions.

    Returns (actions scanned, graphs scanned, counterexample description).
    """
    g = regular_representation(spec, element_budget)
    actions = graphs_seen = 0
    for d in faithful_actions(spec, max_points, element_budget):
        act = coset_action(g, d, element_budget)
        if min_base_size(act, element_budget) != 3:
            continue
        pair_orbits: list[list[tuple[int, int]]] = []
        seen: set[tuple[int, int]] = set()
        for pr in combinations(range(act.degree), 2):
            if pr in seen:
                continue
            orb = {tuple(sorted((x(pr[0]), x(pr[1])))) for x in act.elements()}
            seen |= orb
            pair_orbits.append(sorted(orb))
        if len(pair_orbits) > max_orbitals:
            continue
        actions += 1
        for mask in range(1 << len(pair_orbits)):
            edges = [e for i, o in enumerate(pair_orbits) if mask >> i & 1 for e in o]
            graph = Graph(act.degree, frozenset(edges))
            graphs_seen += 1
            try:
                automorphisms(graph, element_budget=spec.order)
            except BudgetExceeded:
                continue  # Aut strictly larger than G
            return actions, graphs_seen, f"{d.label(spec.order)} edges={sorted(edges)}"
    return actions, graphs_seen, None


def check_thm_3_not_in_d(corpus: GraphCorpus, scan_points: int = 16, max_orbitals: int = 10,
                         element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    spec = corpus.target_spec
    if not corpus.entries:
        raise ValueError("empty corpus")
    p, q = _split_pq(spec.n)
    for e in corpus.entries:
        if e.determining_number == 3:
            return ClaimResult("THM-3-NOT-IN-D", len(corpus.entries), FAIL,
                               f"counterexample: {e.label} has Aut = {spec} and determining number 3")
        bad = _orbit_adjacency_homogeneous(e.graph, e.aut, q)
        if bad:
            return ClaimResult("THM-3-NOT-IN-D", len(corpus.entries), FAIL, f"{e.label}: {bad}")
    actions, graphs_seen, found = _invariant_graph_scan(spec, scan_points, max_orbitals,
                                                        element_budget)
    if found:
        return ClaimResult("THM-3-NOT-IN-D", len(corpus.entries) + graphs_seen, FAIL,
                           f"counterexample: invariant graph on {found}")
    dn = corpus.determining_numbers()
    return ClaimResult("THM-3-NOT-IN-D", len(corpus.entries) + graphs_seen, EVIDENCE,
                       f"{spec}: corpus of {len(corpus.entries)} graphs has determining numbers "
                       f"{_fmt_set(dn)}; {graphs_seen} invariant graphs on {actions} base-3 actions "
                       f"(<= {scan_points} points) all have larger Aut")


def check_dpq_b(n: int, max_points: int, vertex_budget: int = DEFAULT_VERTEX_BUDGET,
                element_budget: int = DEFAULT_ELEMENT_BUDGET) -> ClaimResult:
    spec = Dihedral(n)
    _split_pq(n)
    rep = base_size_report(spec, max_points, element_budget)
    corpus = standard_corpus(spec, vertex_budget, element_budget)
    d = corpus.determining_numbers()
    ok = rep.achieved == {1, 2, 3} and rep.certified and {1, 2} <= d
    return ClaimResult("COR-DPQ-B", rep.actions_checked + len(corpus.entries), _status(ok),
                       f"{spec}: B_{max_points}={_fmt_set(rep.achieved)} (certified by bound "
                       f"{rep.upper_bound}), D contains {_fmt_set(d & {1, 2})}")


# ---- suite -------------------------------------------------------------------

@dataclass
class SuiteConfig:
    element_budget: int = DEFAULT_ELEMENT_BUDGET
    vertex_budget: int = DEFAULT_VERTEX_BUDGET
    quick: bool = False
    dpq_reading: str = "proof"


def _instance_groups(cfg: SuiteConfig) -> list[tuple[str, PermutationGroup]]:
    out = [("dpq(3,5)", dpq_representation(3, 5)),
           ("regular Z8", regular_representation(Abelian((8,)))),
           ("natural D9", natural_dihedral_action(9))]
    # (spec, point budget); elementary abelian groups have many subgroups, keep N small
    specs = [(Dihedral(15), 20), (Dihedral(6), 20)] if cfg.quick else \
        [(Dihedral(15), 30), (Dihedral(21), 30), (Dihedral(6), 30), (Dihedral(9), 30),
         (Dihedral(10), 30), (Abelian((2, 2, 2)), 14)]
    for spec, N in specs:
        g = regular_representation(spec, cfg.element_budget)
        for d in faithful_actions(spec, N, cfg.element_budget):
            out.append((f"{spec} {d.label(spec.order)}", coset_action(g, d, cfg.element_budget)))
    for spec in [Dihedral(15)] if cfg.quick else [Dihedral(15), Dihedral(21), Dihedral(6)]:
        for e in standard_corpus(spec, cfg.vertex_budget, cfg.element_budget).entries:
            out.append((f"Aut({e.label})", e.aut))
    return out


def _guard(claim_id: str, fn: Callable[[], ClaimResult]) -> ClaimResult:
    try:
        return fn()
    except BudgetExceeded as exc:
        return ClaimResult(claim_id, 1, FAIL, f"budget exceeded: {exc}")
    except ValueError as exc:
        return ClaimResult(claim_id, 1, FAIL, f"error: {exc}")


def run_paper_suite(cfg: SuiteConfig | None = None) -> list[ClaimResult]:
    cfg = cfg or SuiteConfig()
    eb, vb = cfg.element_budget, cfg.vertex_budget
    quick = cfg.quick
    results = []
    cache: dict[str, list] = {}

    def per_group(claim_id, fn):
        def run():
            if "groups" not in cache:
                cache["groups"] = _instance_groups(cfg)
            groups = cache["groups"]
            parts = [fn(g, name, eb) for name, g in groups]
            return _merge(claim_id, parts, f"{len(groups)} actions, zero violations")
        results.append(_guard(claim_id, run))

    per_group("LENGTH-BOUND", check_length_bound)
    per_group("ORBIT-STABILIZER", check_orbit_stabilizer)
    per_group("LEMMA-ORDER-PK", check_lemma_order_pk)

    cor_cases = [(Dihedral(9), 20), (Dihedral(10), 24), (Abelian((27,)), 30)]
    results.append(_guard("COR-ORBIT-PK", lambda: _merge(
        "COR-ORBIT-PK", [check_corollary_orbit_pk(s, n, eb) for s, n in cor_cases])))

    abelian_lists = [[2, 2], [4, 3]] if quick else [[2, 2], [2, 2, 2], [4, 3], [3, 9]]
    results.append(_guard("THM-ABELIAN", lambda: check_abelian_theorem(abelian_lists, None, eb, vb)))
    results.append(_guard("LEMMA-DN-CONSTRUCTIONS", lambda: check_dn_constructions(
        [3, 4, 5, 6] if quick else [3, 4, 5, 6, 7, 9, 10, 15], eb)))
    results.append(_guard("PROP-DPK", lambda: check_prop_dpk([3, 9] if quick else [3, 5, 9, 27], eb)))
    results.append(_guard("PROP-D2PK", lambda: check_prop_d2pk([6, 10] if quick else [6, 10, 18], eb, vb)))

    pq_pairs = [(3, 5)] if quick else [(3, 5), (3, 7), (5, 7)]
    results.append(_guard("PROP-D15", lambda: _merge(
        "PROP-D15", [check_prop_d15(p, q, cfg.dpq_reading, eb) for p, q in pq_pairs])))

    per_group("LEMMA-PRIMEORBITS", check_primeorbits)
    per_group("LEMMA-QSTAB-ORBIT", check_qstab_orbit)

    dpq_ns = [15] if quick else [15, 21]

    def corpora():
        return [standard_corpus(Dihedral(n), vb, eb) for n in dpq_ns]

    results.append(_guard("PROP-FLIPPING", lambda: _merge(
        "PROP-FLIPPING", [check_prop_flipping(c, eb) for c in corpora()])))

    def thm3():
        parts = [check_thm_3_not_in_d(c, element_budget=eb) for c in corpora()]
        merged = _merge("THM-3-NOT-IN-D", parts)
        if merged.status == FAIL:
            return merged
        control = standard_corpus(Dihedral(6), vb, eb).determining_numbers()
        note = f"; control D6 corpus reaches {_fmt_set(control)}"
        if 3 not in control:
            return ClaimResult(merged.claim_id, merged.instances_checked, FAIL,
                               merged.detail + note + " (check cannot discriminate)")
        return ClaimResult(merged.claim_id, merged.instances_checked, EVIDENCE, merged.detail + note)

    results.append(_guard("THM-3-NOT-IN-D", thm3))
    results.append(_guard("COR-DPQ-B", lambda: _merge(
        "COR-DPQ-B", [check_dpq_b(n, max(40, 2 * n), vb, eb) for n in dpq_ns])))
    return results


def format_report(results: Sequence[ClaimResult], coverage: bool = True) -> str:
    lines = [r.line() for r in results]
    if coverage:
        lines += [f"COVER {cid} {text}" for cid, text in COVERAGE]
    return "\n".join(lines) + "\n"


def report_json(results: Sequence[ClaimResult]) -> str:
    return json.dumps([asdict(r) for r in results], indent=2, sort_keys=True) + "\n"


def suite_failed(results: Sequence[ClaimResult]) -> bool:
    return any(r.status == FAIL for r in results)
