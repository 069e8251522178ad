import math

import numpy as np
import pytest
from hypothesis import given, settings

from romanenergy.graph import (
    DisconnectedGraphError,
    FamilySpec,
    complete,
    cycle,
    disjoint_union,
    generate,
    is_connected,
    star,
)
from romanenergy.roman import min_roman_domination
from romanenergy.spectral import eigenvalues, mrdd_for
from romanenergy.verify import (
    FORMULA_IDS,
    PreconditionError,
    audit_graph,
    compute_invariants,
    diameter2_identity,
    failures,
    mcclelland_bounds,
    moment_identities,
    spectral_radius_bounds,
    spider_remark_row,
    to_jsonl,
)

from conftest import EXAMPLE_MATRIX, graphs


def spectrum_of(g):
    return eigenvalues(mrdd_for(g, min_roman_domination(g)[1]))


def test_example_invariants(example_graph):
    m = np.array(EXAMPLE_MATRIX)
    sq_upper = int((np.triu(m, 1) ** 2).sum())
    assert sq_upper == 176
    inv = compute_invariants(example_graph)
    assert (inv.m, inv.W, inv.M, inv.P, inv.gamma_r) == (10, 74, sq_upper - 10, 444, 4)
    assert (inv.n1, inv.n2, inv.diameter) == (2, 1, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_spider_invariants(n):
    inv = compute_invariants(generate(FamilySpec("spider", n)))
    assert inv.m == 2 * n - 2
    if n >= 3:
        assert inv.gamma_r == n + 1


def test_k3_invariants():
    inv = compute_invariants(complete(3))
    assert (inv.m, inv.M, inv.W) == (3, 0, 3)


def test_disconnected_invariants():
    inv = compute_invariants(disjoint_union(complete(3), complete(2)))
    assert inv.W is None and inv.diameter is None and not inv.connected


def test_example_moments(example_graph):
    r = moment_identities(compute_invariants(example_graph), spectrum_of(example_graph))
    assert r.sum_rho_sq == pytest.approx(358, abs=1e-9)
    assert (r.printed_sq, r.forced_sq) == (356, 358)
    assert r.first_ok and r.forced_ok and not r.printed_ok
    assert r.printed_gap == pytest.approx(2, abs=1e-9)


def test_k3_moments():
    r = moment_identities(compute_invariants(complete(3)), spectrum_of(complete(3)))
    assert r.sum_rho_sq == pytest.approx(10)
    assert (r.forced_sq, r.printed_sq) == (10, 8)


def test_k1_variants_coincide():
    g = complete(1)
    r = moment_identities(compute_invariants(g), spectrum_of(g))
    assert r.printed_sq == r.forced_sq and r.printed_ok


def test_diameter2_star5():
    g = star(5)
    inv = compute_invariants(g)
    r = diameter2_identity(inv, spectrum_of(g))
    off = 2 * (2 * 25 - 10 - 3 * 4)
    d = mrdd_for(g, min_roman_domination(g)[1]).entries.astype(int)
    assert int((d**2).sum() - (np.diag(d) ** 2).sum()) == off
    assert r.corrected_ok and r.printed_gap == pytest.approx(2 * inv.n2)


def test_diameter2_rejects_complete():
    with pytest.raises(PreconditionError):
        diameter2_identity(compute_invariants(complete(4)), spectrum_of(complete(4)))


def test_diameter2_c5():
    g = cycle(5)
    inv = compute_invariants(g)
    r = diameter2_identity(inv, spectrum_of(g))
    assert r.corrected_ok
    assert r.printed_gap == pytest.approx(2 * inv.n2)


def test_mcclelland_example(example_graph):
    inv = compute_invariants(example_graph)
    r = mcclelland_bounds(inv, spectrum_of(example_graph).energy)
    assert r.upper == pytest.approx(math.sqrt(9 * 356))
    assert r.upper == pytest.approx(56.60, abs=5e-3)
    assert r.upper_ok
    assert r.lower_printed > 1e6 and not r.printed_ok
    assert r.exponent_2n_ok


def test_determinant_term_overflow_is_inf():
    from romanenergy.verify import _det_term

    assert math.isinf(_det_term(64, 10**40, 32))
    assert _det_term(9, 444, 4.5) == pytest.approx(72 * 444**4.5)
    assert _det_term(5, 0, 2.5) == 0.0


def test_radius_example(example_graph):
    r = spectral_radius_bounds(compute_invariants(example_graph), spectrum_of(example_graph))
    assert r.wiener_bound == pytest.approx(152 / 9)
    assert r.wiener_ok and r.diam2_bound is None


def test_radius_k3():
    r = spectral_radius_bounds(compute_invariants(complete(3)), spectrum_of(complete(3)))
    assert r.wiener_bound == pytest.approx(8 / 3) and r.rho1 == pytest.approx(3)


def test_radius_star5_diam2():
    g = star(5)
    r = spectral_radius_bounds(compute_invariants(g), spectrum_of(g))
    assert r.diam2_bound == pytest.approx((50 - 8 - 10 + 2) / 5)
    assert r.diam2_ok


def test_radius_needs_connected():
    g = disjoint_union(complete(2), complete(2))
    with pytest.raises(DisconnectedGraphError):
        spectral_radius_bounds(compute_invariants(g), spectrum_of(g))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_forced_statements_hold(g):
    rows = {r.formula_id: r for r in audit_graph(g, "g")}
    assert rows["S4_i"].holds and rows["S4_ii_forced"].holds
    assert rows["S5_mcclelland_2n"].holds
    if is_connected(g):
        assert rows["S5_rho1_wiener"].holds
        if "S5_rho1_diam2" in rows:
            assert rows["S5_rho1_diam2"].holds


def test_audit_ids_and_jsonl(example_graph):
    rows = audit_graph(example_graph, "example")
    assert {r.formula_id for r in rows} <= set(FORMULA_IDS)
    lines = to_jsonl(rows).splitlines()
    assert len(lines) == len(rows)
    assert '"formula_id": "S4_ii_printed"' in lines[1]
    failing = {r.formula_id for r in failures(rows)}
    assert failing == {"S4_ii_printed", "S5_mcclelland_printed", "S5_cor"}


def test_spider_remark_row():
    n = 4
    g = generate(FamilySpec("spider", n))
    row = spider_remark_row("spider(4)", n, compute_invariants(g))
    assert row.printed == (n - 1) * (19 * n - 6) and row.computed == 126
    assert not row.holds
