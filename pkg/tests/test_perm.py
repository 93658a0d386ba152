from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basesize.groups import dpq_generators, dpq_representation
from basesize.perm import (
    BudgetExceeded,
    ParseError,
    Permutation,
    PermutationGroup,
    closure,
    compose,
    cycle_decomposition,
    cycle_notation,
    format_perm_text,
    from_cycles,
    identity,
    inverse,
    orbit,
    orbits,
    order,
    parse_generator,
    parse_perm_text,
    pointwise_stabilizer,
)

from oracles import brute_closure


def perms(max_degree=8):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(range(n)).map(lambda xs: Permutation(tuple(xs))))


def perm_pair(max_degree=8):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)))
    ).map(lambda ab: (Permutation(tuple(ab[0])), Permutation(tuple(ab[1]))))


def test_identity_and_order():
    assert identity(3).images == (0, 1, 2)
    assert order(identity(5)) == 1
    assert order(identity(4)) == 1


def test_compose_examples():
    c = from_cycles(3, [(0, 1, 2)])
    assert compose(c, identity(3)) == c
    assert compose(c, c) == from_cycles(3, [(0, 2, 1)])
    # a(b(x)) convention
    a = from_cycles(3, [(0, 1)])
    b = from_cycles(3, [(1, 2)])
    assert compose(a, b)(1) == a(b(1)) == 2
    assert compose(a, b)(0) == 1


def test_inverse_examples():
    assert inverse(identity(4)) == identity(4)
    assert inverse(from_cycles(3, [(0, 1, 2)])) == from_cycles(3, [(0, 2, 1)])


def test_order_is_lcm_of_cycle_type():
    assert order(from_cycles(5, [(0, 1), (2, 3, 4)])) == 6


def test_invalid_permutation_rejected():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((0, 3, 1))


def test_from_cycles_examples():
    assert from_cycles(3, []) == identity(3)
    assert from_cycles(5, [(0, 1, 2), (3, 4)]).images == (1, 2, 0, 4, 3)
    with pytest.raises(ValueError):
        from_cycles(4, [(0, 0)])
    with pytest.raises(ValueError):
        from_cycles(3, [(0, 5)])


def test_cycle_decomposition_examples():
    d = cycle_decomposition(identity(3))
    assert d.cycles == () and tuple(d.fixed_points) == (0, 1, 2)
    r, f = dpq_generators(3, 5)
    dr = cycle_decomposition(r)
    assert sorted(len(c) for c in dr.cycles) == [3, 5] and not dr.fixed_points
    df = cycle_decomposition(f)
    assert all(len(c) == 2 for c in df.cycles)
    assert len(df.fixed_points) == 2


def test_dpq_generator_relations():
    # oracle: multiply image tables directly
    r, f = dpq_generators(3, 5)
    rf = tuple(r.images[f.images[x]] for x in range(8))
    sq = tuple(rf[rf[x]] for x in range(8))
    assert sq == tuple(range(8)) and rf != tuple(range(8))
    assert order(compose(r, f)) == 2
    assert inverse(f) == f
    assert order(r) == 15
    x = r
    k = 1
    while not x.is_identity():
        x = compose(x, r)
        k += 1
    assert k == 15


def test_closure_examples():
    assert len(closure(PermutationGroup(2, [from_cycles(2, [(0, 1)])]))) == 2
    assert len(closure(dpq_representation(3, 5))) == 30
    g = PermutationGroup(5, [from_cycles(5, [(0, 1, 2, 3, 4)]), from_cycles(5, [(1, 4), (2, 3)])])
    assert len(closure(g)) == 10
    assert {h.images for h in closure(g)} == brute_closure([h.images for h in g.generators], 5)


def test_closure_budget():
    g = dpq_representation(3, 5)
    with pytest.raises(BudgetExceeded):
        closure(g, element_budget=10)


def test_orbits_examples():
    triv = PermutationGroup(3, [])
    assert orbit(triv, 1) == {1}
    assert orbits(triv) == [{0}, {1}, {2}]
    g = dpq_representation(3, 5)
    assert orbit(g, 0) == {0, 1, 2}
    assert sorted(len(o) for o in orbits(g)) == [3, 5]


def test_pointwise_stabilizer_examples():
    g = dpq_representation(3, 5)
    assert pointwise_stabilizer(g, []).order() == 30
    assert pointwise_stabilizer(g, [0]).order() == 10
    filtered = [h for h in g.elements() if h(0) == 0]
    assert len(filtered) == 10
    # every x_i, x_{p+j} pair has a nontrivial stabilizer element
    for i in range(3):
        for j in range(3, 8):
            assert pointwise_stabilizer(g, [i, j]).order() > 1


def test_parse_generator_forms():
    assert parse_generator("1 2 0", 3) == from_cycles(3, [(0, 1, 2)])
    assert parse_generator("(0 1 2)", 3) == from_cycles(3, [(0, 1, 2)])
    assert parse_generator("(0 1)(2 3)", 4) == from_cycles(4, [(0, 1), (2, 3)])
    with pytest.raises(ParseError):
        parse_generator("0 1", 3)
    with pytest.raises(ParseError):
        parse_generator("(0 7)", 3)


def test_perm_text_round_trip():
    g = dpq_representation(3, 5)
    text = format_perm_text(g)
    h = parse_perm_text(text)
    assert h.degree == 8 and h.generators == g.generators


def test_perm_text_comments_and_errors():
    g = parse_perm_text("# a comment\ndegree 4\n\n(0 1) # swap\n1 0 3 2\n")
    assert g.degree == 4 and len(g.generators) == 2
    with pytest.raises(ParseError, match="line 1"):
        parse_perm_text("deg 4\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_perm_text("degree 3\n0 1\n")


@settings(max_examples=200)
@given(perms())
def test_inverse_property(a):
    assert compose(a, inverse(a)) == identity(a.degree)
    assert compose(inverse(a), a) == identity(a.degree)


@settings(max_examples=200)
@given(perms())
def test_cycle_round_trip(a):
    d = cycle_decomposition(a)
    assert from_cycles(a.degree, d.cycles) == a
    pts = sorted([x for c in d.cycles for x in c] + list(d.fixed_points))
    assert pts == list(range(a.degree))
    assert all(c[0] == min(c) for c in d.cycles)
    if d.cycles:
        assert parse_generator(cycle_notation(a), a.degree) == a


@settings(max_examples=200)
@given(perms())
def test_order_property(a):
    k = order(a)
    assert (a ** k).is_identity()
    assert all(not (a ** j).is_identity() for j in range(1, k))


@settings(max_examples=100, deadline=None)
@given(perm_pair(6))
def test_closure_matches_oracle(ab):
    a, b = ab
    g = PermutationGroup(a.degree, [a, b])
    elems = closure(g)
    assert {h.images for h in elems} == brute_closure([a.images, b.images], a.degree)
    # closed under composition and inverse
    for x in elems:
        assert inverse(x) in elems
    assert identity(a.degree) in elems


@settings(max_examples=100, deadline=None)
@given(perm_pair(6))
def test_orbit_stabilizer_property(ab):
    a, b = ab
    g = PermutationGroup(a.degree, [a, b])
    n = g.order()
    for v in range(g.degree):
        assert len(orbit(g, v)) * pointwise_stabilizer(g, [v]).order() == n
