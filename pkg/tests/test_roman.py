import itertools

import pytest
from hypothesis import given, settings

from romanenergy.graph import (
    FamilySpec,
    complete,
    crown,
    cycle,
    disjoint_union,
    generate,
    new_graph,
    path,
)
from romanenergy.roman import (
    ProblemTooLargeError,
    RomanDominatingFunction,
    brute_force_min_rdf,
    check_sandwich,
    enumerate_min_rdfs,
    is_valid_rdf,
    min_domination,
    min_roman_domination,
    rdf_violation,
)

from conftest import graphs


def brute_min_dominating_set(g):
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            dom = set(s)
            for v in s:
                dom.update(g.adjacency[v])
            if len(dom) == g.n:
                return size


def brute_all_min_labellings(g):
    best, found = None, []
    for lab in itertools.product((0, 1, 2), repeat=g.n):
        if all(x or any(lab[u] == 2 for u in g.adjacency[v]) for v, x in enumerate(lab)):
            w = sum(lab)
            if best is None or w < best:
                best, found = w, [lab]
            elif w == best:
                found.append(lab)
    return best, found


def test_example_rdf_is_valid(example_graph):
    f = RomanDominatingFunction(v0=(1, 2, 3, 4, 5, 7), v1=(6, 8), v2=(0,))
    assert is_valid_rdf(example_graph, f)
    assert f.weight == 4


def test_all_ones_is_valid():
    g = cycle(6)
    assert is_valid_rdf(g, RomanDominatingFunction((), range(6), ()))


def test_all_zero_is_invalid():
    f = RomanDominatingFunction((0, 1, 2), (), ())
    assert not is_valid_rdf(complete(3), f)
    assert rdf_violation(complete(3), f) == "undominated"


@pytest.mark.parametrize(
    "f, reason",
    [
        (RomanDominatingFunction((0, 1), (1,), (2,)), "overlap"),
        (RomanDominatingFunction((0,), (), (2,)), "not_covering"),
        (RomanDominatingFunction((0, 1), (), (5,)), "out_of_range"),
    ],
)
def test_malformed_partitions(f, reason):
    assert rdf_violation(complete(3), f) == reason


def test_labels_roundtrip():
    f = RomanDominatingFunction.from_labels([2, 0, 1, 0])
    assert (f.v0, f.v1, f.v2) == ((1, 3), (2,), (0,))
    assert f.labels() == [2, 0, 1, 0]


def test_k5():
    w, f = min_roman_domination(complete(5))
    assert w == 2 and f.v2 == (0,) and f.v1 == ()


def test_example(example_graph):
    w, f = min_roman_domination(example_graph)
    assert w == 4
    assert f.v2 == (0,) and f.v1 == (6, 8)


def test_single_vertex():
    w, f = min_roman_domination(new_graph(1, []))
    assert w == 1 and f.v1 == (0,)


def test_p4():
    # P4 by 3^4 enumeration
    assert brute_all_min_labellings(path(4))[0] == 3
    assert min_roman_domination(path(4))[0] == 3


def test_isolated_vertices_get_label_one():
    g = new_graph(4, [(0, 1)])
    w, f = min_roman_domination(g)
    assert w == 4  # K2 needs 2, each isolated vertex 1
    assert set(f.v1) >= {2, 3}


def test_empty_graph():
    assert min_roman_domination(new_graph(0, []))[0] == 0
    assert min_domination(new_graph(0, []))[0] == 0


@pytest.mark.parametrize(
    "g, gamma",
    [(complete(6), 1), (crown(3), 2), (cycle(5), 2), (path(7), 3)],
)
def test_domination_numbers(g, gamma):
    assert brute_min_dominating_set(g) == gamma
    size, witness = min_domination(g)
    assert size == gamma
    covered = set(witness)
    for v in witness:
        covered.update(g.adjacency[v])
    assert covered == set(range(g.n))


def test_domination_witness_is_lex_first():
    size, witness = min_domination(crown(3))
    first = next(
        s for s in itertools.combinations(range(6), size)
        if set(s).union(*(crown(3).adjacency[v] for v in s)) == set(range(6))
    )
    assert tuple(witness) == first


def test_enumerate_example_unique(example_graph):
    res = enumerate_min_rdfs(example_graph)
    assert len(res.rdfs) == 1 and not res.truncated


def test_enumerate_k3():
    rdfs = enumerate_min_rdfs(complete(3)).rdfs
    assert [f.v2 for f in rdfs] == [(0,), (1,), (2,)]


def test_enumerate_crown3():
    rdfs = enumerate_min_rdfs(crown(3)).rdfs
    assert [f.v2 for f in rdfs] == [(0, 3), (1, 4), (2, 5)]
    assert all(f.v1 == () for f in rdfs)


def test_enumerate_cap():
    res = enumerate_min_rdfs(complete(6), cap=2)
    assert len(res.rdfs) == 2 and res.truncated


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_enumeration_matches_brute_force(g):
    best, labellings = brute_all_min_labellings(g)
    rdfs = enumerate_min_rdfs(g, cap=10**6).rdfs
    assert sorted(f.labels() for f in rdfs) == sorted(list(lab) for lab in labellings)
    keys = [f.key for f in rdfs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(f.weight == best for f in rdfs)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_solver_matches_brute_force(g):
    w, f = min_roman_domination(g)
    assert w == brute_force_min_rdf(g)
    assert is_valid_rdf(g, f) and f.weight == w


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_canonical_is_lex_smallest_for_connected(g):
    from romanenergy.graph import is_connected

    if not is_connected(g):
        return
    _, f = min_roman_domination(g)
    assert f == enumerate_min_rdfs(g, cap=10**6).rdfs[0]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_gamma_r_additive_over_union(g, h):
    assert min_roman_domination(disjoint_union(g, h))[0] == (
        min_roman_domination(g)[0] + min_roman_domination(h)[0]
    )


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_sandwich_random(g):
    assert check_sandwich(g).holds


def test_sandwich_examples(example_graph):
    k5 = check_sandwich(complete(5))
    assert (k5.gamma, k5.gamma_r, k5.holds) == (1, 2, True)
    sp = check_sandwich(generate(FamilySpec("spider", 4)))
    assert sp.gamma_r == 5 and sp.gamma >= 3 and sp.holds
    ex = check_sandwich(example_graph)
    assert ex.gamma_r == 4 and ex.gamma in (2, 3, 4) and ex.holds


def test_brute_force_small():
    assert brute_force_min_rdf(new_graph(1, [])) == 1
    assert brute_force_min_rdf(complete(5)) == 2


def test_size_limits():
    with pytest.raises(ProblemTooLargeError):
        brute_force_min_rdf(path(13))
    with pytest.raises(ProblemTooLargeError):
        min_roman_domination(path(31))
    # the limit applies per component
    assert min_roman_domination(disjoint_union(path(20), path(20)))[0] == 28


def test_rdf_json():
    f = RomanDominatingFunction((1,), (2,), (0,))
    assert f.to_json() == {"v0": [1], "v1": [2], "v2": [0], "weight": 3}
