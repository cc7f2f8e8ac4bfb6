"""Closed-form extremal values for cardinality-redundance.

Four quantities over graphs of order n with CR(G) = k:

* ``max_edges(n, k, r)``  -- maximum |E| with gamma_CR = r
* ``min_edges(n, k, r)``  -- minimum |E| with gamma_CR = r
* ``max_gamma(n, k, m)``  -- maximum gamma_CR with |E| = m
* ``min_gamma(n, k, m)``  -- minimum gamma_CR with |E| = m

Every result carries a status: a proved value, the zero convention for
parameter tuples where no graph exists, or "not covered" where no theorem
applies.  An unproved zero is never presented as a value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb


class Status(enum.Enum):
    VALUE = "value"
    ZERO_BY_NONEXISTENCE = "zero-by-nonexistence"
    NOT_COVERED = "not-covered"


@dataclass(frozen=True)
class ExtremalValue:
    status: Status
    value: int | None

    @staticmethod
    def of(value: int) -> "ExtremalValue":
        return ExtremalValue(Status.VALUE, value)

    @staticmethod
    def zero() -> "ExtremalValue":
        return ExtremalValue(Status.ZERO_BY_NONEXISTENCE, 0)

    @staticmethod
    def not_covered() -> "ExtremalValue":
        return ExtremalValue(Status.NOT_COVERED, None)

    @property
    def covered(self) -> bool:
        return self.status is not Status.NOT_COVERED


def _check_order(n: int) -> None:
    if n < 2:
        raise ValueError(f"order must be at least 2, got {n}")


def _check_size(n: int, m: int) -> None:
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"edge count {m} out of [0, {comb(n, 2)}] for order {n}")


def _parity_cap(n: int) -> int:
    """Largest admissible CR for order n: n-2 if n even, n-3 if n odd."""
    return n - 2 if n % 2 == 0 else n - 3


def a_bracket(n: int, j: int) -> int:
    """A(j) = 2(j-2) + C(n-j+1, 2), the gamma-bracket edge budget."""
    if not 2 <= j <= n - 2:
        raise ValueError(f"bracket index {j} out of [2, {n - 2}]")
    return 2 * (j - 2) + comb(n - j + 1, 2)


def universal_max_edges(n: int, k: int) -> int:
    """Maximum |E| over all gamma_CR >= 2 at fixed CR = k: C(n-1,2) + floor(k/2)."""
    if n < 5:
        raise ValueError(f"order must be at least 5, got {n}")
    if not 0 <= k <= _parity_cap(n):
        raise ValueError(f"CR {k} out of [0, {_parity_cap(n)}] for order {n}")
    return comb(n - 1, 2) + k // 2


def bbnd_upper_bound(n: int, k: int, r: int, b: int) -> int:
    """Edge bound when a gamma_CR-set induces b non-isolated vertices."""
    if n < 5:
        raise ValueError(f"order must be at least 5, got {n}")
    if not 2 <= k <= _parity_cap(n):
        raise ValueError(f"CR {k} out of [2, {_parity_cap(n)}] for order {n}")
    if r < 3:
        raise ValueError(f"gamma_CR {r} must be at least 3")
    if not 0 <= b <= min(k, r):
        raise ValueError(f"non-isolated count {b} out of [0, {min(k, r)}]")
    base = comb(b, 2) + (r - 2) * (k - b) + comb(n - r + 1, 2)
    if r <= n - r - (k - b):
        return base + (k - b) // 2
    return base


def max_edges(n: int, k: int, r: int) -> ExtremalValue:
    """M(n, k, r)."""
    _check_order(n)
    if k < 0 or r < 0:
        raise ValueError("CR and gamma_CR must be nonnegative")
    if k == 0:
        if 1 <= r <= n - 1:
            return ExtremalValue.of(comb(n - r + 1, 2))
        return ExtremalValue.not_covered()
    if k == 1:
        if r >= n - 2:
            return ExtremalValue.zero()
        if n >= 5 and 2 <= r <= n - 3:
            return ExtremalValue.of(comb(n - r, 2) + (n - 2))
        return ExtremalValue.not_covered()
    if k == 2 and n >= 5:
        if r == 2:
            return ExtremalValue.of(comb(n - 1, 2) + 1)
        if 3 <= r <= n - 4:
            extra = 1 if n - r - 2 >= r else 0
            return ExtremalValue.of(2 * (r - 2) + comb(n - r + 1, 2) + extra)
        if r == n - 3:
            return ExtremalValue.of(7)
        if r == n - 2:
            return ExtremalValue.of(4)
        if r > n - 2:
            return ExtremalValue.zero()
        return ExtremalValue.not_covered()
    if r == 2 and n >= 5 and k <= _parity_cap(n):
        # Exhaustive search refutes the closed form at odd k = n-3: no
        # graph of even order attains CR = n-3 at all (checked n <= 8),
        # so that cell is left uncovered rather than reported as a value.
        if k % 2 == 1 and k == n - 3:
            return ExtremalValue.not_covered()
        return ExtremalValue.of(comb(n - 1, 2) + k // 2)
    return ExtremalValue.not_covered()


def min_edges(n: int, k: int, r: int) -> ExtremalValue:
    """m(n, k, r)."""
    _check_order(n)
    if k < 0 or r < 0:
        raise ValueError("CR and gamma_CR must be nonnegative")
    if k == 0:
        if 1 <= r <= n - 1:
            return ExtremalValue.of(n - r)
        return ExtremalValue.not_covered()
    if k == 1:
        if r >= n - 2:
            return ExtremalValue.zero()
        if n >= 5 and 2 <= r <= n - 3:
            return ExtremalValue.of(n - r + 1)
        return ExtremalValue.not_covered()
    return ExtremalValue.not_covered()


def _gamma0_bracket(m: int) -> int:
    """Unique r with C(r,2) < m <= C(r+1,2), for m >= 1."""
    r = 1
    while comb(r + 1, 2) < m:
        r += 1
    return r


def _gamma1_bracket(n: int, m: int) -> int | None:
    """Unique r in [2, n-4] with C(n-r-1,2)+(n-2) < m <= C(n-r,2)+(n-2)."""
    for r in range(2, n - 3):
        if comb(n - r - 1, 2) + (n - 2) < m <= comb(n - r, 2) + (n - 2):
            return r
    return None


def gamma2_large_bracket(n: int, m: int) -> int | None:
    """The r matching the three D(n,2,m) regimes for large m, or None.

    Regime boundaries shift by one at r = floor((n-2)/2); exactly one r
    may match, enforced here rather than assumed.
    """
    pivot = (n - 2) // 2
    matches = []
    for r in range(2, n - 4):
        a_hi = a_bracket(n, r)
        a_lo = a_bracket(n, r + 1)
        if r < pivot:
            ok = a_lo + 1 < m <= a_hi + 1
        elif r == pivot:
            ok = a_lo < m <= a_hi + 1
        else:
            ok = a_lo < m <= a_hi
        if ok:
            matches.append(r)
    if len(matches) > 1:
        raise AssertionError(f"gamma brackets overlap at n={n}, m={m}: {matches}")
    return matches[0] if matches else None


def max_gamma(n: int, k: int, m: int) -> ExtremalValue:
    """D(n, k, m)."""
    _check_order(n)
    _check_size(n, m)
    if k < 0:
        raise ValueError("CR must be nonnegative")
    if k == 0:
        if m == 0:
            # deliberate extension: the empty graph's only dominating set
            # is V(G), so the maximum (and only) gamma_CR is n
            return ExtremalValue.of(n)
        return ExtremalValue.of(n - _gamma0_bracket(m))
    if k == 1:
        if n < 5 or m < 4 or m > comb(n - 1, 2):
            return ExtremalValue.zero()
        if 4 <= m <= n + 1:
            return ExtremalValue.of(n - 3)
        r = _gamma1_bracket(n, m)
        if r is None:
            return ExtremalValue.not_covered()
        return ExtremalValue.of(r)
    if k == 2 and n >= 8:
        if m < 4:
            return ExtremalValue.zero()
        if m == 4:
            return ExtremalValue.of(n - 2)
        if 5 <= m <= 7:
            return ExtremalValue.of(n - 3)
        if 8 <= m <= 2 * (n - 6) + 10:
            return ExtremalValue.of(n - 4)
        if m > universal_max_edges(n, 2):
            return ExtremalValue.zero()
        r = gamma2_large_bracket(n, m)
        if r is None:
            return ExtremalValue.not_covered()
        return ExtremalValue.of(r)
    return ExtremalValue.not_covered()


def min_gamma(n: int, k: int, m: int) -> ExtremalValue:
    """d(n, k, m)."""
    _check_order(n)
    _check_size(n, m)
    if k < 0:
        raise ValueError("CR must be nonnegative")
    if k == 0:
        if m < n - 1:
            return ExtremalValue.of(n - m)
        return ExtremalValue.of(1)
    if k == 1:
        if n >= 5 and 4 <= m <= n - 1:
            return ExtremalValue.of(n - m + 1)
        if n >= 5 and n <= m <= comb(n - 1, 2):
            return ExtremalValue.of(2)
        return ExtremalValue.zero()
    return ExtremalValue.not_covered()


def cr_max_characterization(g) -> bool:
    """True iff CR(G) attains n-2: n even and every degree equals n-2."""
    if g.n < 4:
        raise ValueError(f"order must be at least 4, got {g.n}")
    if g.n % 2:
        return False
    return all(g.degree(v) == g.n - 2 for v in range(g.n))
