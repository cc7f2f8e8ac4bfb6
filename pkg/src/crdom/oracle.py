"""Exhaustive labeled-graph enumeration and theorem verification.

Ground truth is a labeled sweep: every labeled graph of order n (or of
order n and size m) is visited exactly once as an edge-mask integer, the
solver profile is computed for each, and extremal statistics are folded
into a table.  The fold (max/min per cell, least witness mask, count sum)
is associative and commutative, so partitioning the mask space across
workers cannot change the result.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import constructions, formulas
from .formulas import Status
from .graph import Graph, closed_neighborhood_of_set, mask_to_vertices, to_graph6
from .solver import assess_set, enumerate_gamma_cr_sets, solve

MAX_SWEEP_ORDER = 8
_BATCH = 4096


class OracleCapacityError(ValueError):
    """Request exceeds the exhaustive-sweep caps."""


# ---------------------------------------------------------------------------
# edge-mask encoding (lexicographic pair order)


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def mask_to_graph(n: int, mask: int) -> Graph:
    adj = [0] * n
    for idx, (u, v) in enumerate(edge_pairs(n)):
        if mask >> idx & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for idx, (u, v) in enumerate(edge_pairs(g.n)):
        if g.has_edge(u, v):
            mask |= 1 << idx
    return mask


def _check_sweep_order(n: int) -> None:
    if n > MAX_SWEEP_ORDER:
        raise OracleCapacityError(
            f"exhaustive sweeps support n <= {MAX_SWEEP_ORDER}, got {n}"
        )


def enumerate_labeled(n: int, m: int | None = None) -> Iterator[Graph]:
    """Every labeled graph of order n (optionally of size m) exactly once."""
    _check_sweep_order(n)
    nbits = comb(n, 2)
    if m is None:
        for mask in range(1 << nbits):
            yield mask_to_graph(n, mask)
        return
    if not 0 <= m <= nbits:
        raise ValueError(f"edge count {m} out of [0, {nbits}]")
    for combo in itertools.combinations(range(nbits), m):
        mask = 0
        for b in combo:
            mask |= 1 << b
        yield mask_to_graph(n, mask)


def _fixed_size_masks(n: int, m: int) -> Iterator[np.ndarray]:
    """Edge masks of all graphs in G(n, m), in batches."""
    nbits = comb(n, 2)
    combos = itertools.combinations(range(nbits), m)
    while True:
        chunk = list(itertools.islice(combos, _BATCH))
        if not chunk:
            return
        masks = np.zeros(len(chunk), dtype=np.uint32)
        for i, combo in enumerate(chunk):
            acc = 0
            for b in combo:
                acc |= 1 << b
            masks[i] = acc
        yield masks


# ---------------------------------------------------------------------------
# batched profiles


def _popcounts(nbits: int) -> np.ndarray:
    pc = np.zeros(1, dtype=np.uint8)
    for _ in range(nbits):
        pc = np.concatenate([pc, pc + 1])
    return pc


def batch_profiles(n: int, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(cr, gamma_cr) for every edge mask in ``masks``."""
    nbatch = len(masks)
    a = np.zeros((nbatch, n, n), dtype=np.uint8)
    for v in range(n):
        a[:, v, v] = 1
    for idx, (u, v) in enumerate(edge_pairs(n)):
        bit = (masks >> np.uint32(idx)).astype(np.uint8) & 1
        a[:, u, v] = bit
        a[:, v, u] = bit
    hits = np.zeros((1, nbatch, n), dtype=np.uint8)
    for b in range(n):
        hits = np.concatenate([hits, hits + a[:, :, b][None, :, :]])
    dom = (hits != 0).all(axis=2)
    crm = (hits > 1).sum(axis=2, dtype=np.uint8)
    crm[~dom] = 255
    cr = crm.min(axis=0)
    pc = _popcounts(n)
    sizes = np.where(crm == cr[None, :], pc[:, None], np.uint8(64))
    gamma = sizes.min(axis=0)
    return cr.astype(np.int64), gamma.astype(np.int64)


# ---------------------------------------------------------------------------
# profile table


@dataclass
class CellStats:
    """Extremal statistics of one table cell plus least witness masks."""

    max_value: int
    max_witness: int
    min_value: int
    min_witness: int
    count: int

    def fold_graph(self, value: int, mask: int) -> None:
        if value > self.max_value or (value == self.max_value and mask < self.max_witness):
            self.max_value, self.max_witness = value, mask
        if value < self.min_value or (value == self.min_value and mask < self.min_witness):
            self.min_value, self.min_witness = value, mask
        self.count += 1

    def merge(self, other: "CellStats") -> None:
        if other.max_value > self.max_value or (
            other.max_value == self.max_value and other.max_witness < self.max_witness
        ):
            self.max_value, self.max_witness = other.max_value, other.max_witness
        if other.min_value < self.min_value or (
            other.min_value == self.min_value and other.min_witness < self.min_witness
        ):
            self.min_value, self.min_witness = other.min_value, other.min_witness
        self.count += other.count


@dataclass
class ProfileTable:
    """Empirical extremal tables from one sweep.

    ``edge_cells[(k, r)]`` holds max/min edge counts over graphs with
    CR = k and gamma_CR = r; ``gamma_cells[(k, m)]`` holds max/min
    gamma_CR over graphs with CR = k and size m.  Missing keys mean no
    graph exists; lookups then report 0 with an explicit marker.
    """

    n: int
    edge_cells: dict[tuple[int, int], CellStats] = field(default_factory=dict)
    gamma_cells: dict[tuple[int, int], CellStats] = field(default_factory=dict)

    def max_edges(self, k: int, r: int) -> tuple[int, bool]:
        cell = self.edge_cells.get((k, r))
        return (cell.max_value, True) if cell else (0, False)

    def min_edges(self, k: int, r: int) -> tuple[int, bool]:
        cell = self.edge_cells.get((k, r))
        return (cell.min_value, True) if cell else (0, False)

    def max_gamma(self, k: int, m: int) -> tuple[int, bool]:
        cell = self.gamma_cells.get((k, m))
        return (cell.max_value, True) if cell else (0, False)

    def min_gamma(self, k: int, m: int) -> tuple[int, bool]:
        cell = self.gamma_cells.get((k, m))
        return (cell.min_value, True) if cell else (0, False)

    def merge(self, other: "ProfileTable") -> None:
        for key, cell in other.edge_cells.items():
            if key in self.edge_cells:
                self.edge_cells[key].merge(cell)
            else:
                self.edge_cells[key] = CellStats(**vars(cell))
        for key, cell in other.gamma_cells.items():
            if key in self.gamma_cells:
                self.gamma_cells[key].merge(cell)
            else:
                self.gamma_cells[key] = CellStats(**vars(cell))

    def to_lines(self) -> list[str]:
        lines = [f"profile-table n={self.n}"]
        for (k, r), cell in sorted(self.edge_cells.items()):
            lines.append(
                f"edges k={k} r={r} max={cell.max_value} min={cell.min_value} "
                f"count={cell.count} "
                f"max_witness={to_graph6(mask_to_graph(self.n, cell.max_witness))} "
                f"min_witness={to_graph6(mask_to_graph(self.n, cell.min_witness))}"
            )
        for (k, m), cell in sorted(self.gamma_cells.items()):
            lines.append(
                f"gamma k={k} m={m} max={cell.max_value} min={cell.min_value} "
                f"count={cell.count} "
                f"max_witness={to_graph6(mask_to_graph(self.n, cell.max_witness))} "
                f"min_witness={to_graph6(mask_to_graph(self.n, cell.min_witness))}"
            )
        return lines

    def to_records(self) -> list[dict]:
        recs = []
        for (k, r), cell in sorted(self.edge_cells.items()):
            recs.append(
                {
                    "table": "edges",
                    "n": self.n,
                    "cr": k,
                    "gamma": r,
                    "max": cell.max_value,
                    "min": cell.min_value,
                    "count": cell.count,
                    "max_witness": to_graph6(mask_to_graph(self.n, cell.max_witness)),
                    "min_witness": to_graph6(mask_to_graph(self.n, cell.min_witness)),
                }
            )
        for (k, m), cell in sorted(self.gamma_cells.items()):
            recs.append(
                {
                    "table": "gamma",
                    "n": self.n,
                    "cr": k,
                    "m": m,
                    "max": cell.max_value,
                    "min": cell.min_value,
                    "count": cell.count,
                    "max_witness": to_graph6(mask_to_graph(self.n, cell.max_witness)),
                    "min_witness": to_graph6(mask_to_graph(self.n, cell.min_witness)),
                }
            )
        return recs


def _fold_batch(table: ProfileTable, masks: np.ndarray, cr: np.ndarray, gamma: np.ndarray) -> None:
    m_counts = np.bitwise_count(masks).astype(np.int64)
    for i in range(len(masks)):
        k, r, m, mask = int(cr[i]), int(gamma[i]), int(m_counts[i]), int(masks[i])
        cell = table.edge_cells.get((k, r))
        if cell is None:
            table.edge_cells[(k, r)] = CellStats(m, mask, m, mask, 1)
        else:
            cell.fold_graph(m, mask)
        cell = table.gamma_cells.get((k, m))
        if cell is None:
            table.gamma_cells[(k, m)] = CellStats(r, mask, r, mask, 1)
        else:
            cell.fold_graph(r, mask)


def _sweep_masks(n: int, masks: np.ndarray) -> ProfileTable:
    table = ProfileTable(n)
    cr, gamma = batch_profiles(n, masks)
    _fold_batch(table, masks, cr, gamma)
    return table


def _sweep_range(args: tuple[int, int, int]) -> ProfileTable:
    n, start, stop = args
    table = ProfileTable(n)
    for lo in range(start, stop, _BATCH):
        masks = np.arange(lo, min(lo + _BATCH, stop), dtype=np.uint32)
        cr, gamma = batch_profiles(n, masks)
        _fold_batch(table, masks, cr, gamma)
    return table


def brute_table(n: int, workers: int = 1, full_n8: bool = False) -> ProfileTable:
    """Extremal table from the full labeled sweep of order n."""
    _check_sweep_order(n)
    if n == MAX_SWEEP_ORDER and not full_n8:
        raise OracleCapacityError(
            "full n=8 sweep (2^28 graphs) requires full_n8=True; "
            "use fixed-size slices otherwise"
        )
    total = 1 << comb(n, 2)
    if workers <= 1:
        return _sweep_range((n, 0, total))
    bounds = [total * w // workers for w in range(workers + 1)]
    jobs = [(n, bounds[w], bounds[w + 1]) for w in range(workers)]
    table = ProfileTable(n)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_sweep_range, jobs):
            table.merge(part)
    return table


def brute_table_slice(n: int, m: int, workers: int = 1) -> ProfileTable:
    """Extremal table restricted to graphs of order n and size m."""
    _check_sweep_order(n)
    if workers <= 1:
        table = ProfileTable(n)
        for masks in _fixed_size_masks(n, m):
            table.merge(_sweep_masks(n, masks))
        return table
    table = ProfileTable(n)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = ((n, masks) for masks in _fixed_size_masks(n, m))
        for part in pool.map(_sweep_masks_job, jobs):
            table.merge(part)
    return table


def _sweep_masks_job(args: tuple[int, np.ndarray]) -> ProfileTable:
    return _sweep_masks(*args)


# ---------------------------------------------------------------------------
# canonical form

_perm_bit_maps: dict[int, list[list[int]]] = {}


def _bit_maps(n: int) -> list[list[int]]:
    maps = _perm_bit_maps.get(n)
    if maps is None:
        pairs = edge_pairs(n)
        index = {p: i for i, p in enumerate(pairs)}
        maps = []
        for perm in itertools.permutations(range(n)):
            maps.append(
                [index[tuple(sorted((perm[u], perm[v])))] for (u, v) in pairs]
            )
        _perm_bit_maps[n] = maps
    return maps


def canonical_form(g: Graph) -> str:
    """graph6 of the least edge mask over all vertex relabelings."""
    if g.n > MAX_SWEEP_ORDER:
        raise OracleCapacityError(
            f"canonical form scans n! permutations, supported for n <= {MAX_SWEEP_ORDER}"
        )
    mask = graph_to_mask(g)
    bits = [i for i in range(comb(g.n, 2)) if mask >> i & 1]
    best = mask
    for bmap in _bit_maps(g.n):
        permuted = 0
        for b in bits:
            permuted |= 1 << bmap[b]
        if permuted < best:
            best = permuted
    return to_graph6(mask_to_graph(g.n, best))


# ---------------------------------------------------------------------------
# proposition checks (batched over all subsets of all graphs in a range)


def _prop_violations_batch(n: int, masks: np.ndarray) -> list[tuple[str, int]]:
    """Violations of the basic CR propositions over every subset."""
    nbatch = len(masks)
    a = np.zeros((nbatch, n, n), dtype=np.uint8)
    for v in range(n):
        a[:, v, v] = 1
    for idx, (u, v) in enumerate(edge_pairs(n)):
        bit = (masks >> np.uint32(idx)).astype(np.uint8) & 1
        a[:, u, v] = bit
        a[:, v, u] = bit
    hits = np.zeros((1, nbatch, n), dtype=np.uint8)
    for b in range(n):
        hits = np.concatenate([hits, hits + a[:, :, b][None, :, :]])
    dom = (hits != 0).all(axis=2)
    crm = (hits > 1).sum(axis=2, dtype=np.int16)
    influence = hits.sum(axis=2, dtype=np.int16)
    pc = _popcounts(n).astype(np.int16)
    member = np.zeros((1 << n, n), dtype=bool)
    for s in range(n):
        member[:, s] = (np.arange(1 << n) >> s) & 1

    crm_masked = np.where(dom, crm, np.int16(512))
    cr = crm_masked.min(axis=0)
    sizes = np.where(crm_masked == cr[None, :], pc[:, None], np.int16(64))
    gamma = sizes.min(axis=0)

    # minimality: s in S has a private neighbor u with N[u] & S == {s}
    ones = (hits == 1).transpose(1, 0, 2)  # (B, 2^n, n)
    priv = np.matmul(ones.astype(np.uint8), a) > 0  # (B, 2^n, s)
    minimal = dom & (priv | ~member[None, :, :]).all(axis=2).T

    out: list[tuple[str, int]] = []
    for i in range(nbatch):
        mask = int(masks[i])
        # crbnd + odd-order corollary
        if n >= 2 and cr[i] > n - 2:
            out.append(("crbnd", mask))
        if n >= 2 and n % 2 and cr[i] > n - 3:
            out.append(("crbnd-odd", mask))
        if cr[i] > 0 and gamma[i] < 2:
            out.append(("gammageq2", mask))
        dom_i = dom[:, i]
        if (influence[dom_i, i] < n + crm[dom_i, i]).any():
            out.append(("infbnd", mask))
        min_i = minimal[:, i]
        if (pc[min_i] > n - crm[min_i, i]).any():
            out.append(("gammabnd", mask))
        is_gamma_set = dom_i & (crm[:, i] == cr[i]) & (pc == gamma[i])
        if (is_gamma_set & ~min_i).any():
            out.append(("minimalgamma", mask))
    return out


def proposition_violations(n: int) -> list[tuple[str, str]]:
    """(proposition, graph6) violations over all labeled graphs of order n."""
    _check_sweep_order(n)
    total = 1 << comb(n, 2)
    out = []
    for lo in range(0, total, _BATCH):
        masks = np.arange(lo, min(lo + _BATCH, total), dtype=np.uint32)
        for prop, mask in _prop_violations_batch(n, masks):
            out.append((prop, to_graph6(mask_to_graph(n, mask))))
    return out


def random_proposition_violations(n: int, count: int, seed: int = 0) -> list[tuple[str, str]]:
    """Proposition checks on random G(n, 1/2) graphs via the solver.

    The subset quantifiers are checked on the solver's witness and on the
    full vertex set; the solver itself certifies cr and gamma bounds.
    """
    rng = np.random.default_rng(seed)
    nbits = comb(n, 2)
    out = []
    for _ in range(count):
        mask = 0
        for word in rng.integers(0, 1 << 32, size=(nbits + 31) // 32, dtype=np.uint64):
            mask = (mask << 32) | int(word)
        mask &= (1 << nbits) - 1
        g = mask_to_graph(n, mask)
        profile = solve(g)
        checks: list[tuple[str, bool]] = [
            ("crbnd", profile.cr <= n - 2),
            ("crbnd-odd", n % 2 == 0 or profile.cr <= n - 3),
            ("gammageq2", profile.cr == 0 or profile.gamma_cr >= 2),
        ]
        witness = assess_set(g, profile.witness)
        checks.append(("minimalgamma", witness.minimal))
        checks.append(("gammabnd", profile.gamma_cr <= n - witness.cr_of_set))
        checks.append(("infbnd", witness.influence >= n + witness.cr_of_set))
        full = assess_set(g, g.universe)
        checks.append(("infbnd", full.influence >= n + full.cr_of_set))
        for prop, ok in checks:
            if not ok:
                out.append((prop, to_graph6(g)))
    return out


# ---------------------------------------------------------------------------
# theorem verification


@dataclass(frozen=True)
class CellComparison:
    cell: str
    formula: object
    oracle: object
    construction: object
    agree: bool


@dataclass
class VerificationReport:
    theorem_id: str
    mode: str
    cells: list[CellComparison] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.agree for c in self.cells) and not self.counterexamples

    def to_lines(self) -> list[str]:
        lines = [f"verify {self.theorem_id} mode={self.mode}: "
                 f"{'PASS' if self.passed else 'FAIL'} ({len(self.cells)} cells)"]
        for c in self.cells:
            if not c.agree:
                lines.append(
                    f"  DISAGREE {c.cell}: formula={c.formula} "
                    f"oracle={c.oracle} construction={c.construction}"
                )
        for g6 in self.counterexamples:
            lines.append(f"  counterexample {g6}")
        return lines


def _formula_vs_table(value, table_pair) -> tuple[object, object, bool]:
    oracle_value, exists = table_pair
    if value.status is Status.VALUE:
        return value.value, oracle_value if exists else "nonexistent", exists and oracle_value == value.value
    if value.status is Status.ZERO_BY_NONEXISTENCE:
        return "zero-by-nonexistence", oracle_value if exists else "nonexistent", not exists
    return "not-covered", oracle_value if exists else "nonexistent", True


_EDGE_THEOREMS = {
    "Mn0r": (0, formulas.max_edges, "max"),
    "mn0r": (0, formulas.min_edges, "min"),
    "Mn1r": (1, formulas.max_edges, "max"),
    "mn1r": (1, formulas.min_edges, "min"),
    "Mn2r": (2, formulas.max_edges, "max"),
}

_GAMMA_THEOREMS = {
    "Dn0m": (0, formulas.max_gamma, "max"),
    "dn0m": (0, formulas.min_gamma, "min"),
    "Dn1r": (1, formulas.max_gamma, "max"),
    "dn1m": (1, formulas.min_gamma, "min"),
}

_BUILDERS = {
    "Mn0r": constructions.build_max_edges_witness,
    "mn0r": constructions.build_min_edges_witness,
    "Mn1r": constructions.build_max_edges_witness,
    "mn1r": constructions.build_min_edges_witness,
    "Mn2r": constructions.build_max_edges_witness,
    "Dn0m": constructions.build_max_gamma_witness,
    "dn0m": constructions.build_min_gamma_witness,
    "Dn1r": constructions.build_max_gamma_witness,
    "dn1m": constructions.build_min_gamma_witness,
    "dn2msmall": constructions.build_max_gamma_witness,
    "dn2mlarge": constructions.build_max_gamma_witness,
}

KNOWN_THEOREMS = sorted(
    set(_EDGE_THEOREMS)
    | set(_GAMMA_THEOREMS)
    | {
        "dn2msmall",
        "dn2mlarge",
        "Mnk2",
        "Mnkr_le_Mnk2",
        "eventhm",
        "4cycle",
        "2lem",
        "minimalgamma",
        "gammabnd",
        "infbnd",
        "gammageq2",
        "crbnd",
    }
)


def _check_construction(report: VerificationReport, builder, params, cell: str) -> object:
    try:
        claim = builder(*params)
    except constructions.ConstructionUnavailableError:
        return None
    g = claim.graph
    edges_ok = g.edge_count() == claim.claimed_edges
    solver_ok = True
    if g.n <= MAX_SWEEP_ORDER + 4:  # small enough to always solve quickly
        profile = solve(g)
        solver_ok = (profile.cr, profile.gamma_cr) == (claim.claimed_cr, claim.claimed_gamma)
    if not (edges_ok and solver_ok):
        report.counterexamples.append(to_graph6(g))
    return (
        (claim.claimed_edges, claim.claimed_cr, claim.claimed_gamma)
        if edges_ok and solver_ok
        else "mismatch"
    )


def verify_theorem(
    theorem_id: str,
    n_values: Iterable[int],
    mode: str = "both",
    workers: int = 1,
    full_n8: bool = False,
    m_values: Iterable[int] | None = None,
) -> VerificationReport:
    """Compare a theorem's formula, construction, and brute-force oracle."""
    if mode not in ("formula-vs-oracle", "construction-vs-solver", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    report = VerificationReport(theorem_id, mode)
    want_oracle = mode in ("formula-vs-oracle", "both")
    want_constr = mode in ("construction-vs-solver", "both")

    if theorem_id in _EDGE_THEOREMS:
        k, fn, which = _EDGE_THEOREMS[theorem_id]
        for n in n_values:
            table = brute_table(n, workers=workers, full_n8=full_n8) if want_oracle else None
            for r in range(1, n + 1):
                value = fn(n, k, r)
                if not value.covered:
                    continue
                oracle_val = construction = None
                agree = True
                if want_oracle:
                    pair = table.max_edges(k, r) if which == "max" else table.min_edges(k, r)
                    _, oracle_val, agree = _formula_vs_table(value, pair)
                if want_constr and value.status is Status.VALUE:
                    builder = _BUILDERS[theorem_id]
                    construction = _check_construction(report, builder, (n, k, r), f"n={n} r={r}")
                report.cells.append(
                    CellComparison(f"n={n} k={k} r={r}", value.value if value.value is not None
                                   else value.status.value, oracle_val, construction, agree)
                )
        return report

    if theorem_id in _GAMMA_THEOREMS:
        k, fn, which = _GAMMA_THEOREMS[theorem_id]
        for n in n_values:
            table = brute_table(n, workers=workers, full_n8=full_n8) if want_oracle else None
            for m in range(comb(n, 2) + 1):
                value = fn(n, k, m)
                if not value.covered:
                    continue
                oracle_val = construction = None
                agree = True
                if want_oracle:
                    pair = table.max_gamma(k, m) if which == "max" else table.min_gamma(k, m)
                    _, oracle_val, agree = _formula_vs_table(value, pair)
                if want_constr and value.status is Status.VALUE:
                    builder = _BUILDERS[theorem_id]
                    construction = _check_construction(report, builder, (n, k, m), f"n={n} m={m}")
                report.cells.append(
                    CellComparison(f"n={n} k={k} m={m}", value.value if value.value is not None
                                   else value.status.value, oracle_val, construction, agree)
                )
        return report

    if theorem_id == "dn2msmall":
        for n in n_values:
            ms = list(m_values) if m_values is not None else list(range(4, 10))
            for m in ms:
                value = formulas.max_gamma(n, 2, m)
                oracle_val = construction = None
                agree = True
                if want_oracle:
                    table = brute_table_slice(n, m, workers=workers)
                    _, oracle_val, agree = _formula_vs_table(value, table.max_gamma(2, m))
                if want_constr and value.status is Status.VALUE:
                    construction = _check_construction(
                        report, constructions.build_max_gamma_witness, (n, 2, m), f"n={n} m={m}"
                    )
                report.cells.append(
                    CellComparison(f"n={n} k=2 m={m}", value.value if value.value is not None
                                   else value.status.value, oracle_val, construction, agree)
                )
        return report

    if theorem_id == "dn2mlarge":
        if want_oracle:
            raise OracleCapacityError(
                "dn2mlarge edge counts exceed fixed-size sweep capacity; "
                "use construction-vs-solver mode"
            )
        for n in n_values:
            for m in range(2 * (n - 6) + 11, comb(n, 2) + 1):
                value = formulas.max_gamma(n, 2, m)
                if value.status is not Status.VALUE:
                    continue
                construction = _check_construction(
                    report, constructions.build_max_gamma_witness, (n, 2, m), f"n={n} m={m}"
                )
                report.cells.append(
                    CellComparison(f"n={n} k=2 m={m}", value.value, None, construction,
                                   construction != "mismatch")
                )
        return report

    if theorem_id == "Mnk2":
        for n in n_values:
            table = brute_table(n, workers=workers, full_n8=full_n8) if want_oracle else None
            for k in range(0, n - 1 if n % 2 == 0 else n - 2):
                value = formulas.max_edges(n, k, 2)
                if not value.covered:
                    continue  # the refuted odd k = n-3 cell
                expected = value.value
                oracle_val = construction = None
                agree = True
                if want_oracle:
                    oracle_val, exists = table.max_edges(k, 2)
                    agree = exists and oracle_val == expected
                if want_constr and k != 1:
                    construction = _check_construction(
                        report, constructions.build_max_edges_witness, (n, k, 2), f"n={n} k={k}"
                    )
                report.cells.append(
                    CellComparison(f"n={n} k={k} r=2", expected, oracle_val, construction, agree)
                )
        return report

    if theorem_id == "Mnkr_le_Mnk2":
        for n in n_values:
            table = brute_table(n, workers=workers, full_n8=full_n8)
            for (k, r), cell in sorted(table.edge_cells.items()):
                if r < 2 or k > formulas._parity_cap(n):
                    continue
                bound = formulas.universal_max_edges(n, k)
                agree = cell.max_value <= bound
                if not agree:
                    report.counterexamples.append(
                        to_graph6(mask_to_graph(n, cell.max_witness))
                    )
                report.cells.append(
                    CellComparison(f"n={n} k={k} r={r}", bound, cell.max_value, None, agree)
                )
        return report

    if theorem_id == "eventhm":
        for n in n_values:
            attaining = set()
            regular = set()
            total = 1 << comb(n, 2)
            for lo in range(0, total, _BATCH):
                masks = np.arange(lo, min(lo + _BATCH, total), dtype=np.uint32)
                cr, _ = batch_profiles(n, masks)
                for mask in masks[cr == n - 2]:
                    attaining.add(int(mask))
                for mask in masks:
                    g = None
                    if n % 2 == 0:
                        g = mask_to_graph(n, int(mask))
                        if all(g.degree(v) == n - 2 for v in range(n)):
                            regular.add(int(mask))
            agree = attaining == regular
            for mask in sorted(attaining ^ regular):
                report.counterexamples.append(to_graph6(mask_to_graph(n, mask)))
            report.cells.append(
                CellComparison(f"n={n}", f"{len(regular)} regular graphs",
                               f"{len(attaining)} attaining CR=n-2", None, agree)
            )
        return report

    if theorem_id == "4cycle":
        for n in n_values:
            target = canonical_form(constructions.four_cycle_padded(n))
            found = []
            total = 1 << comb(n, 2)
            for lo in range(0, total, _BATCH):
                masks = np.arange(lo, min(lo + _BATCH, total), dtype=np.uint32)
                cr, gamma = batch_profiles(n, masks)
                for mask in masks[(cr == 2) & (gamma == n - 2)]:
                    found.append(int(mask))
            expected_count = 3 * comb(n, 4)
            bad = [m for m in found if canonical_form(mask_to_graph(n, m)) != target]
            agree = len(found) == expected_count and not bad
            for m in bad:
                report.counterexamples.append(to_graph6(mask_to_graph(n, m)))
            report.cells.append(
                CellComparison(f"n={n}", f"{expected_count} labeled four-cycles",
                               f"{len(found)} graphs with CR=2, gamma=n-2", None, agree)
            )
        return report

    if theorem_id == "2lem":
        for n in n_values:
            checked = 0
            total = 1 << comb(n, 2)
            for lo in range(0, total, _BATCH):
                masks = np.arange(lo, min(lo + _BATCH, total), dtype=np.uint32)
                cr, gamma = batch_profiles(n, masks)
                for mask in masks[(cr == 2) & (gamma == n - 3)]:
                    g = mask_to_graph(n, int(mask))
                    for s in enumerate_gamma_cr_sets(g):
                        a_set = assess_set(g, s).overdominated
                        if (closed_neighborhood_of_set(g, a_set) & s).bit_count() != 2:
                            report.counterexamples.append(to_graph6(g))
                        checked += 1
            report.cells.append(
                CellComparison(f"n={n}", "|N[A] & S| = 2",
                               f"{checked} gamma_CR-sets checked", None,
                               not report.counterexamples)
            )
        return report

    if theorem_id in ("minimalgamma", "gammabnd", "infbnd", "gammageq2", "crbnd"):
        for n in n_values:
            tag_match = {theorem_id} | ({"crbnd-odd"} if theorem_id == "crbnd" else set())
            bad = [g6 for prop, g6 in proposition_violations(n) if prop in tag_match]
            report.counterexamples.extend(bad)
            report.cells.append(
                CellComparison(f"n={n}", "0 violations", f"{len(bad)} violations", None, not bad)
            )
        return report

    raise ValueError(f"unknown theorem tag {theorem_id!r}")
