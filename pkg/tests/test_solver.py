"""Exact solver: profiles, set assessment, gamma_CR-set enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crdom.graph import complete, cycle, empty, from_edges, path, vertices_to_mask
from crdom.solver import (
    SolverCapacityError,
    assess_set,
    enumerate_gamma_cr_sets,
    solve,
    solver_cap,
)


def test_solve_reference_graphs():
    for n in (1, 2, 3, 5, 8):
        p = solve(complete(n))
        assert (p.cr, p.gamma_cr) == (0, 1)
        assert p.gamma_set_count == n
    assert (solve(cycle(4)).cr, solve(cycle(4)).gamma_cr) == (2, 2)
    assert (solve(cycle(5)).cr, solve(cycle(5)).gamma_cr) == (1, 2)
    assert (solve(path(4)).cr, solve(path(4)).gamma_cr) == (0, 2)
    assert (solve(empty(1)).cr, solve(empty(1)).gamma_cr) == (0, 1)


def test_solve_witness_tiebreak():
    # C4: six gamma_CR-sets; witness is the least bitmask, {0,1}
    p = solve(cycle(4))
    assert p.witness == vertices_to_mask([0, 1])
    assert p.gamma_set_count == 6


def test_assess_set_examples():
    a = assess_set(complete(3), 0b001)
    assert a.dominating and a.cr_of_set == 0 and a.influence == 3 and a.minimal

    a = assess_set(cycle(4), 0b011)
    assert a.dominating
    assert a.overdominated == 0b011 and a.cr_of_set == 2
    assert a.influence == 6

    a = assess_set(cycle(4), 0)
    assert not a.dominating and a.cr_of_set == 0 and a.influence == 0 and not a.minimal


def test_assess_set_minimality():
    # {0,1,2} dominates P4 but 1 has no private neighbor
    a = assess_set(path(4), 0b0111)
    assert a.dominating and not a.minimal
    assert assess_set(path(4), 0b1001).minimal


def test_assess_set_range_check():
    with pytest.raises(ValueError):
        assess_set(cycle(4), 0b10000)


def test_enumerate_gamma_cr_sets():
    assert enumerate_gamma_cr_sets(complete(3)) == [0b001, 0b010, 0b100]
    assert enumerate_gamma_cr_sets(empty(1)) == [0b1]
    # C4: every pair dominates with CR 2 (an antipodal pair overdominates
    # exactly the two vertices between its members), so all six qualify
    assert enumerate_gamma_cr_sets(cycle(4)) == sorted(
        vertices_to_mask(s)
        for s in ([0, 1], [1, 2], [2, 3], [0, 3], [0, 2], [1, 3])
    )


def test_solver_cap(monkeypatch):
    monkeypatch.setenv("CRDOM_SOLVER_CAP", "5")
    assert solver_cap() == 5
    with pytest.raises(SolverCapacityError):
        solve(empty(6))
    assert solve(empty(5)).gamma_cr == 5
    monkeypatch.setenv("CRDOM_SOLVER_CAP", "zero")
    with pytest.raises(ValueError):
        solver_cap()
    monkeypatch.setenv("CRDOM_SOLVER_CAP", "0")
    with pytest.raises(ValueError):
        solver_cap()
    monkeypatch.delenv("CRDOM_SOLVER_CAP")
    assert solver_cap() == 24


def _brute_profile(g):
    """Independent pure-Python reference for small orders."""
    best = None
    for s in range(1, 1 << g.n):
        a = assess_set(g, s)
        if not a.dominating:
            continue
        key = (a.cr_of_set, bin(s).count("1"), s)
        if best is None or key < best:
            best = key
    return best


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6), st.data())
def test_solve_matches_pure_python(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = from_edges(n, data.draw(st.lists(st.sampled_from(pairs), unique=True)))
    cr, size, witness = _brute_profile(g)
    p = solve(g)
    assert (p.cr, p.gamma_cr, p.witness) == (cr, size, witness)
    sets = enumerate_gamma_cr_sets(g)
    assert p.witness == sets[0]
    assert p.gamma_set_count == len(sets)
    for s in sets:
        a = assess_set(g, s)
        assert a.dominating and a.cr_of_set == p.cr


def test_solve_beyond_chunk_boundary():
    # n=17 exercises the high-bit chunk loop (low table holds 16 bits)
    g = path(17)
    p = solve(g)
    assert p.cr == 0 and p.gamma_cr == 6
    a = assess_set(g, p.witness)
    assert a.dominating and a.cr_of_set == 0
