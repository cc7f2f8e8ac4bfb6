"""Exact cardinality-redundance solver.

``solve`` sweeps all 2^n vertex subsets of a graph, finds the minimum
CR(S) over dominating sets, and among the achievers the minimum size and
the lexicographically least witness mask.  The sweep is vectorized with
numpy: closed-neighborhood hit counts for every subset are built by a
doubling construction over vertices, chunked over the high subset bits so
memory stays flat up to the solver cap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .graph import Graph, closed_neighborhood, closed_neighborhood_of_set, mask_to_vertices

DEFAULT_SOLVER_CAP = 24
_CHUNK_BITS = 16


class SolverCapacityError(ValueError):
    """Graph order exceeds the subset-sweep cap."""


def solver_cap() -> int:
    """Current cap; overridable via CRDOM_SOLVER_CAP."""
    raw = os.environ.get("CRDOM_SOLVER_CAP")
    if raw is None:
        return DEFAULT_SOLVER_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"CRDOM_SOLVER_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError("CRDOM_SOLVER_CAP must be positive")
    return cap


@dataclass(frozen=True)
class SetAssessment:
    """Verdict on one vertex set: domination, CR(S), influence, minimality."""

    dominating: bool
    cr_of_set: int
    influence: int
    overdominated: int
    minimal: bool


@dataclass(frozen=True)
class CRProfile:
    """Solver output: CR(G), gamma_CR(G), one witness, achiever count."""

    cr: int
    gamma_cr: int
    witness: int
    gamma_set_count: int


def assess_set(g: Graph, vset: int) -> SetAssessment:
    """Evaluate a vertex-set bitmask against the graph.

    ``cr_of_set`` uses the same overdomination count whether or not the
    set dominates; ``dominating`` is reported separately.  ``minimal`` is
    true iff the set dominates and every member has a private neighbor.
    """
    if vset & ~g.universe:
        raise ValueError("vertex set uses bits beyond the graph order")
    dominating = closed_neighborhood_of_set(g, vset) == g.universe
    over = 0
    influence = 0
    for u in range(g.n):
        hits = (closed_neighborhood(g, u) & vset).bit_count()
        influence += hits
        if hits >= 2:
            over |= 1 << u
    minimal = dominating
    if dominating:
        rest = vset
        while rest:
            s_bit = rest & -rest
            rest &= rest - 1
            s = s_bit.bit_length() - 1
            has_private = False
            for u in mask_to_vertices(closed_neighborhood(g, s)):
                if closed_neighborhood(g, u) & vset == s_bit:
                    has_private = True
                    break
            if not has_private:
                minimal = False
                break
    return SetAssessment(dominating, over.bit_count(), influence, over, minimal)


def _closed_matrix(g: Graph) -> np.ndarray:
    """uint8 closed-adjacency matrix, A[u, v] = 1 iff v in N[u]."""
    a = np.zeros((g.n, g.n), dtype=np.uint8)
    for u in range(g.n):
        for v in mask_to_vertices(closed_neighborhood(g, u)):
            a[u, v] = 1
    return a


def _hits_table(cols: np.ndarray) -> np.ndarray:
    """hits[mask, u] = |N[u] & mask| built by doubling over vertices.

    ``cols`` has shape (nbits, n): cols[b, u] = A[u, b].
    """
    nbits = cols.shape[0]
    h = np.zeros((1, cols.shape[1]), dtype=np.uint8)
    for b in range(nbits):
        h = np.concatenate([h, h + cols[b][None, :]])
    return h


def _popcounts(nbits: int) -> np.ndarray:
    pc = np.zeros(1, dtype=np.uint8)
    for _ in range(nbits):
        pc = np.concatenate([pc, pc + 1])
    return pc


def _check_order(g: Graph) -> None:
    cap = solver_cap()
    if g.n > cap:
        raise SolverCapacityError(
            f"order {g.n} exceeds the solver cap {cap} (set CRDOM_SOLVER_CAP to raise it)"
        )


def solve(g: Graph) -> CRProfile:
    """CR(G), gamma_CR(G), least witness mask, and gamma_CR-set count."""
    _check_order(g)
    n = g.n
    a = _closed_matrix(g)
    low_bits = min(n, _CHUNK_BITS)
    high_bits = n - low_bits
    hits_low = _hits_table(a.T[:low_bits])
    pc_low = _popcounts(low_bits)
    high_vecs = _hits_table(a.T[low_bits:]) if high_bits else np.zeros((1, n), dtype=np.uint8)
    pc_high = _popcounts(high_bits)

    best_cr = None
    best_size = None
    best_witness = None
    count = 0
    for hi in range(1 << high_bits):
        hits = hits_low + high_vecs[hi][None, :]
        dom = (hits != 0).all(axis=1)
        if not dom.any():
            continue
        cr = (hits > 1).sum(axis=1, dtype=np.int16)
        cr[~dom] = np.iinfo(np.int16).max
        chunk_min = int(cr.min())
        if best_cr is not None and chunk_min > best_cr:
            continue
        achiev = cr == chunk_min
        sizes = np.where(achiev, pc_low.astype(np.int16) + int(pc_high[hi]), np.int16(127))
        chunk_size = int(sizes.min())
        chunk_count = int((sizes == chunk_size).sum())
        chunk_witness = (hi << low_bits) | int(np.argmax(sizes == chunk_size))
        if best_cr is None or chunk_min < best_cr:
            best_cr, best_size, best_witness, count = (
                chunk_min,
                chunk_size,
                chunk_witness,
                chunk_count,
            )
        elif chunk_size < best_size:
            best_size, best_witness, count = chunk_size, chunk_witness, chunk_count
        elif chunk_size == best_size:
            count += chunk_count
    assert best_cr is not None  # V(G) always dominates
    return CRProfile(best_cr, best_size, best_witness, count)


def enumerate_gamma_cr_sets(g: Graph) -> list[int]:
    """All gamma_CR-sets as bitmasks in ascending order."""
    _check_order(g)
    profile = solve(g)
    n = g.n
    a = _closed_matrix(g)
    low_bits = min(n, _CHUNK_BITS)
    high_bits = n - low_bits
    hits_low = _hits_table(a.T[:low_bits])
    pc_low = _popcounts(low_bits)
    high_vecs = _hits_table(a.T[low_bits:]) if high_bits else np.zeros((1, n), dtype=np.uint8)
    pc_high = _popcounts(high_bits)

    out: list[int] = []
    for hi in range(1 << high_bits):
        if int(pc_high[hi]) > profile.gamma_cr:
            continue
        hits = hits_low + high_vecs[hi][None, :]
        dom = (hits != 0).all(axis=1)
        cr = (hits > 1).sum(axis=1, dtype=np.int16)
        want = (
            dom
            & (cr == profile.cr)
            & (pc_low.astype(np.int16) + int(pc_high[hi]) == profile.gamma_cr)
        )
        base = hi << low_bits
        out.extend(base | int(lo) for lo in np.nonzero(want)[0])
    return out
