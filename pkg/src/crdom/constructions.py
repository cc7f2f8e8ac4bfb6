"""Deterministic witness-graph builders for every proved extremal value.

Each builder returns the labeled graph together with its claimed order,
edge count, CR, and gamma_CR.  Vertex blocks are laid out in fixed index
order (dominating-set block first, then the overdominated block, then the
rest), and every free edge placement is filled in lexicographic (i, j)
order, so identical parameters always produce bit-identical graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import formulas
from .formulas import ExtremalValue, Status
from .graph import Graph, complement, cycle, empty, from_edges, star, with_isolated


class ConstructionUnavailableError(ValueError):
    """No proved construction exists for the requested parameters."""

    def __init__(self, message: str, value: ExtremalValue | None = None):
        super().__init__(message)
        self.value = value


@dataclass(frozen=True)
class WitnessClaim:
    graph: Graph
    theorem_id: str
    claimed_edges: int
    claimed_cr: int
    claimed_gamma: int


def _lex_pairs(vertices: list[int]):
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            yield (u, v)


def _take(pairs, count: int, skip: set[tuple[int, int]] | None = None) -> list[tuple[int, int]]:
    """First ``count`` candidate pairs in iteration order."""
    out: list[tuple[int, int]] = []
    skip = skip or set()
    for p in pairs:
        if len(out) == count:
            break
        if p not in skip:
            out.append(p)
    if len(out) < count:
        raise ValueError(f"not enough free edge slots: wanted {count}, found {len(out)}")
    return out


def _require_value(val: ExtremalValue, what: str) -> int:
    if val.status is Status.NOT_COVERED:
        raise ConstructionUnavailableError(f"{what}: no theorem covers these parameters", val)
    if val.status is Status.ZERO_BY_NONEXISTENCE:
        raise ConstructionUnavailableError(f"{what}: no graph exists for these parameters", val)
    assert val.value is not None
    return val.value


# ---------------------------------------------------------------------------
# fixed small graphs


def graph_g1(n: int) -> Graph:
    """Figure graph G1: 6 vertices, 8 edges, CR 2, gamma_CR 2."""
    if n < 6:
        raise ValueError("G1 needs at least 6 vertices")
    base = from_edges(6, [(0, 1), (0, 3), (1, 2), (2, 3), (3, 5), (0, 4), (3, 4), (2, 4)])
    return with_isolated(base, n - 6)


def graph_g2(n: int) -> Graph:
    """Figure graph G2: 6 vertices, 9 edges, CR 2, gamma_CR 2."""
    if n < 6:
        raise ValueError("G2 needs at least 6 vertices")
    base = from_edges(6, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5), (0, 4), (1, 5)])
    return with_isolated(base, n - 6)


def four_cycle_padded(n: int) -> Graph:
    if n < 4:
        raise ValueError("padded four-cycle needs at least 4 vertices")
    return with_isolated(cycle(4), n - 4)


def cocktail_party(n: int) -> Graph:
    """Complement of the perfect matching {0-1, 2-3, ...}; (n-2)-regular."""
    if n < 4 or n % 2:
        raise ValueError("cocktail-party graph needs even order >= 4")
    return complement(from_edges(n, [(v, v + 1) for v in range(0, n, 2)]))


def build_named(name: str, n: int) -> WitnessClaim:
    if name == "G1":
        return WitnessClaim(graph_g1(n), "dn2msmall-G1", 8, 2, n - 4)
    if name == "G2":
        return WitnessClaim(graph_g2(n), "dn2msmall-G2", 9, 2, n - 4)
    if name == "FourCycle":
        return WitnessClaim(four_cycle_padded(n), "4cycle", 4, 2, n - 2)
    if name == "CocktailParty":
        return WitnessClaim(cocktail_party(n), "eventhm", n * (n - 2) // 2, n - 2, 2)
    raise ValueError(f"unknown named graph {name!r}")


# ---------------------------------------------------------------------------
# maximum-edge witnesses


def _mnk2_graph(n: int, k: int) -> tuple[Graph, str]:
    """Extremal graph for gamma_CR = 2 at CR = k >= 2."""
    if k % 2 == 0:
        if k == n - 2:
            return cocktail_party(n), "Mnk2-cocktail"
        # S = {0,1} independent, A = k overdominated, B = the rest
        a_block = list(range(2, k + 2))
        b_block = list(range(k + 2, n))
        b = b_block[-1]
        edges = [(s, a) for s in (0, 1) for a in a_block]
        edges += [(0, u) for u in b_block if u != b]
        edges.append((1, b))
        one_factor = {(a_block[i], a_block[i + 1]) for i in range(0, k, 2)}
        edges += [p for p in _lex_pairs(a_block + b_block) if p not in one_factor]
        return from_edges(n, edges), "Mnk2-even"
    # odd k: S = {0,1} independent, A = k overdominated; the leftover
    # vertex of A after matching is paired across to one B vertex instead
    a_block = list(range(2, k + 2))
    b_block = list(range(k + 2, n))
    a_star = a_block[-1]
    b_star = b_block[-1]
    edges = [(s, x) for s in (0, 1) for x in a_block]
    edges.append((0, b_star))
    edges += [(1, u) for u in b_block if u != b_star]
    removed = {(a_block[i], a_block[i + 1]) for i in range(0, k - 1, 2)}
    removed.add((a_star, b_star))
    edges += [p for p in _lex_pairs(a_block + b_block) if p not in removed]
    return from_edges(n, edges), "Mnk2-odd"


def _mn2r_mid_graph(n: int, r: int) -> tuple[Graph, str]:
    """M(n,2,r) witness for 3 <= r <= n-4."""
    s_block = list(range(r))
    a1, a2 = r, r + 1
    b_block = list(range(r + 2, n))
    edges = [(s, a) for s in s_block for a in (a1, a2)]
    if n - r - 2 >= r:
        # spread S over B: s_i pendant to b_i, s_r covers the tail; A stays
        # independent and A+B is otherwise complete
        edges += [(j, r + 2 + j) for j in range(r - 1)]
        edges += [(r - 1, u) for u in range(2 * r + 1, n)]
        edges += [(a, u) for a in (a1, a2) for u in b_block]
        edges += list(_lex_pairs(b_block))
        return from_edges(n, edges), "Mn2r-case2"
    b1, b2 = b_block[0], b_block[1]
    edges.append((0, b1))
    edges += [(1, u) for u in b_block if u != b1]
    edges.append((a1, a2))
    edges += [(a1, u) for u in b_block if u != b1]
    edges += [(a2, u) for u in b_block if u != b2]
    edges += list(_lex_pairs(b_block))
    return from_edges(n, edges), "Mn2r-case3"


def build_max_edges_witness(n: int, k: int, r: int) -> WitnessClaim:
    value = _require_value(formulas.max_edges(n, k, r), f"M({n},{k},{r})")
    if k == 0:
        g = with_isolated(from_edges(n - r + 1, list(_lex_pairs(list(range(n - r + 1))))), r - 1)
        return WitnessClaim(g, "M(n,0,r)", value, k, r)
    if k == 1:
        s_block = list(range(r))
        x = r
        b_block = list(range(r + 1, n))
        y = b_block[-1]
        edges = [(s, x) for s in s_block]
        edges += [(0, u) for u in b_block if u != y]
        edges.append((1, y))
        edges += [(x, u) for u in b_block if u != y]
        edges += list(_lex_pairs(b_block))
        return WitnessClaim(from_edges(n, edges), "Mn1r", value, k, r)
    if k == 2 and r != 2:
        if 3 <= r <= n - 4:
            g, tag = _mn2r_mid_graph(n, r)
            return WitnessClaim(g, tag, value, k, r)
        if r == n - 3:
            base = from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            return WitnessClaim(with_isolated(base, n - 5), "Mn2r-case4", value, k, r)
        if r == n - 2:
            return WitnessClaim(four_cycle_padded(n), "Mn2r-case5", value, k, r)
    if r == 2:
        g, tag = _mnk2_graph(n, k)
        return WitnessClaim(g, tag, value, k, r)
    raise ConstructionUnavailableError(f"M({n},{k},{r}): no construction implemented")


def build_min_edges_witness(n: int, k: int, r: int) -> WitnessClaim:
    value = _require_value(formulas.min_edges(n, k, r), f"m({n},{k},{r})")
    if k == 0:
        return WitnessClaim(with_isolated(star(n - r + 1), r - 1), "m(n,0,r)", value, k, r)
    # k == 1: two spokes into x, s1 covers all of B
    x = r
    b_block = list(range(r + 1, n))
    edges = [(0, x), (1, x)] + [(0, u) for u in b_block]
    return WitnessClaim(from_edges(n, edges), "mn1r", value, k, r)


# ---------------------------------------------------------------------------
# gamma witnesses at fixed edge count


def _max_gamma0_graph(n: int, m: int) -> Graph:
    r = formulas._gamma0_bracket(m)
    hub = 0
    r_block = list(range(1, r + 1))
    edges = [(hub, u) for u in r_block]
    edges += _take(_lex_pairs(r_block), m - r)
    return with_isolated(from_edges(r + 1, edges), n - r - 1)


def _max_gamma1_case1_graph(n: int, m: int) -> Graph:
    x = n - 3
    b1, b2 = n - 2, n - 1
    if m == 4:
        edges = [(0, x), (1, x), (0, b1), (0, b2)]
    elif m == 5:
        edges = [(0, x), (1, x), (0, b1), (0, b2), (x, b1)]
    else:
        edges = [(0, x), (1, x), (0, b1), (x, b1), (b1, b2), (1, b2)]
        edges += [(j, x) for j in range(2, 2 + m - 6)]
    return from_edges(n, edges)


def _max_gamma1_case2_graph(n: int, m: int, r: int) -> tuple[Graph, str]:
    if r == 2:
        x = 2
        b_block = list(range(3, n))
        b = b_block[-1]
        edges = [(0, x), (1, x)]
        edges += [(0, u) for u in b_block if u != b]
        edges.append((1, b))
        edges += list(_lex_pairs(b_block))
        spokes = m - (n - 1) - comb(n - 3, 2)
        edges += [(x, u) for u in _take(iter(b_block), spokes, skip={b})]
        return from_edges(n, edges), "Dn1r-case2-r2"
    x = r
    b_block = list(range(r + 1, n))
    b1, b2, b3 = b_block[0], b_block[1], b_block[2]
    edges = [(s, x) for s in range(r)]
    edges += [(0, u) for u in b_block if u != b2]
    edges.append((1, b2))
    edges += [p for p in _lex_pairs(b_block) if p != (b1, b2)]
    edges.append((x, b3))
    base = comb(n - r - 1, 2) + (n - 2) + 1
    if m > base:
        edges.append((b1, b2))
        extra = m - base - 1
        edges += [(x, u) for u in _take(iter(b_block), extra, skip={b2, b3})]
    return from_edges(n, edges), "Dn1r-case2"


def _max_gamma2_small_graph(n: int, m: int) -> tuple[Graph, str, int]:
    if m == 4:
        return four_cycle_padded(n), "dn2msmall-m4", n - 2
    if m == 5:
        base = from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)])
        return with_isolated(base, n - 6), "dn2msmall-m5", n - 3
    if m == 6:
        base = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)])
        return with_isolated(base, n - 5), "dn2msmall-m6", n - 3
    if m == 7:
        base = from_edges(5, [(0, 1), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
        return with_isolated(base, n - 5), "dn2msmall-m7", n - 3
    if m == 8:
        return graph_g1(n), "dn2msmall-G1", n - 4
    if m == 9:
        return graph_g2(n), "dn2msmall-G2", n - 4
    # parametric family m = 10 + 2t + i
    t, i = divmod(m - 10, 2)
    a1, a2 = n - 4, n - 3
    b1, b2 = n - 2, n - 1
    edges = [
        (0, a1), (0, a2), (1, a1), (1, a2),
        (0, b1), (1, b2), (a1, b1), (a2, b2), (b1, b2), (a1, a2),
    ]
    for j in range(2, 2 + t):
        edges += [(j, a1), (j, a2)]
    if i:
        edges.append((2 + t, a1))
    return from_edges(n, edges), "dn2msmall-family", n - 4


def _max_gamma2_large_graph(n: int, m: int, r: int) -> tuple[Graph, str]:
    a1, a2 = r, r + 1
    b_block = list(range(r + 2, n))
    edges = [(s, a) for s in range(r) for a in (a1, a2)]
    if r <= (n - 2) // 2:
        edges += [(j, r + 2 + j) for j in range(r - 1)]
        edges += [(r - 1, u) for u in range(2 * r + 1, n)]
        edges += [(a, u) for a in (a1, a2) for u in b_block]
        extra = m - (2 * r + 3 * (n - r - 2))
        edges += _take(_lex_pairs(b_block), extra)
        return from_edges(n, edges), "dn2mlarge-case12"
    b1, b2 = b_block[0], b_block[1]
    edges.append((0, b1))
    edges += [(1, u) for u in b_block if u != b1]
    edges += [(a1, u) for u in b_block if u != b1]
    edges += [(a2, u) for u in b_block if u != b2]
    edges.append((a1, a2))
    extra = m - (2 * r + 3 * (n - r - 2) - 1)
    edges += _take(_lex_pairs(b_block), extra)
    return from_edges(n, edges), "dn2mlarge-case3"


def build_max_gamma_witness(n: int, k: int, m: int) -> WitnessClaim:
    value = _require_value(formulas.max_gamma(n, k, m), f"D({n},{k},{m})")
    if k == 0:
        if m == 0:
            return WitnessClaim(empty(n), "D(n,0,m)-empty", 0, 0, n)
        return WitnessClaim(_max_gamma0_graph(n, m), "D(n,0,m)", m, 0, value)
    if k == 1:
        if m <= n + 1:
            return WitnessClaim(_max_gamma1_case1_graph(n, m), "Dn1r-case1", m, 1, value)
        r = formulas._gamma1_bracket(n, m)
        assert r is not None
        g, tag = _max_gamma1_case2_graph(n, m, r)
        return WitnessClaim(g, tag, m, 1, value)
    # k == 2
    if m <= 2 * (n - 6) + 10:
        g, tag, gamma = _max_gamma2_small_graph(n, m)
        return WitnessClaim(g, tag, m, 2, gamma)
    r = formulas.gamma2_large_bracket(n, m)
    assert r is not None
    g, tag = _max_gamma2_large_graph(n, m, r)
    return WitnessClaim(g, tag, m, 2, value)


def build_min_gamma_witness(n: int, k: int, m: int) -> WitnessClaim:
    value = _require_value(formulas.min_gamma(n, k, m), f"d({n},{k},{m})")
    if k == 0:
        if m < n - 1:
            g = with_isolated(star(m + 1), n - m - 1)
            return WitnessClaim(g, "d(n,0,m)", m, 0, value)
        others = list(range(1, n))
        edges = [(0, u) for u in others]
        edges += _take(_lex_pairs(others), m - (n - 1))
        return WitnessClaim(from_edges(n, edges), "d(n,0,m)-dense", m, 0, value)
    # k == 1
    if m <= n - 1:
        base = build_min_edges_witness(n, 1, n - m + 1)
        return WitnessClaim(base.graph, "dn1m-case1", m, 1, value)
    x = 2
    b_block = list(range(3, n))
    b2 = b_block[0]
    edges = [(0, x), (1, x), (1, b2)]
    edges += [(0, u) for u in b_block if u != b2]
    if m <= 2 * n - 5:
        edges += [(b2, u) for u in _take(iter(b_block), m - (n - 1), skip={b2})]
        return WitnessClaim(from_edges(n, edges), "dn1m-case2a", m, 1, value)
    rest = [u for u in b_block if u != b2]
    if m <= comb(n - 3, 2) + (n - 1):
        edges += [(b2, u) for u in rest]
        edges += _take(_lex_pairs(rest), m - (2 * n - 5))
        return WitnessClaim(from_edges(n, edges), "dn1m-case2b", m, 1, value)
    edges += list(_lex_pairs(b_block))
    spokes = m - comb(n - 3, 2) - (n - 1)
    edges += [(x, u) for u in _take(iter(rest), spokes)]
    return WitnessClaim(from_edges(n, edges), "dn1m-case2c", m, 1, value)
