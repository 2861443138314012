"""Closed-form edge-count formulas used in reports and certificates.

These are principal terms of asymptotic statements: each carries an
unquantified lower-order correction, so none of them is a valid pass/fail
line against a single small graph. Reports print them next to exact values
and construction sizes as ratios; certificates use them as reference
points. The only always-true relations are between the formulas themselves
(for example the pentagon-family lower constant 2/(3*sqrt(3)) is below the
upper constant 1/2 for every n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


class BoundError(ValueError):
    pass


def asymptotic_bound(n: int, s: int, t: int) -> float:
    """(t-s+1)^(1/s) * (n/2)^(2-1/s): the main term for hosts avoiding
    K_{s,t} alongside an odd cycle, and for bipartite K_{s,t}-free hosts."""
    if not 2 <= s <= t:
        raise BoundError(f"need 2 <= s <= t, got s={s}, t={t}")
    if n < 1:
        raise BoundError(f"need n >= 1, got {n}")
    return (t - s + 1) ** (1 / s) * (n / 2) ** (2 - 1 / s)


def alpha(k: int, t: int) -> int:
    """(2k-2)(t-1) * ((2k-2)(t-1) - 1), the k-dependent constant inside
    the earlier principal term."""
    if k < 2 or t < 2:
        raise BoundError(f"need k >= 2 and t >= 2, got k={k}, t={t}")
    a = (2 * k - 2) * (t - 1)
    return a * (a - 1)


def ltt_bound_principal(n: int, k: int, t: int) -> float:
    """(alpha(k,t)^(1/2) + 1)^(1/2) * n^(3/2) / 2, principal term only:
    the additive n^(1+1/2k) correction has an unknown constant and is
    omitted. Its ratio to asymptotic_bound(n, 2, t) grows with k, which is
    exactly what the report tables are meant to exhibit."""
    if n < 1:
        raise BoundError(f"need n >= 1, got {n}")
    return math.sqrt(math.sqrt(alpha(k, t)) + 1) * n**1.5 / 2


def pentagon_family_lower(n: int) -> float:
    """2/(3*sqrt(3)) * n^(3/2): edge count reached by doubling a
    point-line incidence graph (pentagon-free, no induced 4-cycle)."""
    if n < 1:
        raise BoundError(f"need n >= 1, got {n}")
    return 2.0 / (3.0 * math.sqrt(3.0)) * n**1.5


def pentagon_family_upper(n: int) -> float:
    """n^(3/2) / 2, the matching upper principal term."""
    if n < 1:
        raise BoundError(f"need n >= 1, got {n}")
    return n**1.5 / 2


def dense_kst_main_term(n: int, t: int) -> float:
    """sqrt(t-1)/2 * n^(3/2): the K_{2,t}-free main term for a general
    (not necessarily bipartite) host on n vertices."""
    if n < 1 or t < 2:
        raise BoundError(f"need n >= 1 and t >= 2, got n={n}, t={t}")
    return math.sqrt(t - 1) / 2 * n**1.5


def walk_correction_constant(k: int, t: int) -> Fraction:
    """(32/3)(4k-7)(t-1), the exact degree-correction constant that the
    walk-counting argument produces; informational."""
    if k < 2 or t < 2:
        raise BoundError(f"need k >= 2 and t >= 2, got k={k}, t={t}")
    return Fraction(32, 3) * (4 * k - 7) * (t - 1)


@dataclass(frozen=True)
class BoundFormula:
    """A named n -> real evaluator with its fixed parameters on record."""

    name: str
    parameters: tuple
    _fn: object = field(compare=False, repr=False)

    def evaluate(self, n: int) -> float:
        return self._fn(n)


def main_bound_formula(t: int) -> BoundFormula:
    return BoundFormula("bound_main", (("s", 2), ("t", t)), lambda n: asymptotic_bound(n, 2, t))


def ltt_bound_formula(k: int, t: int) -> BoundFormula:
    return BoundFormula("bound_ltt", (("k", k), ("t", t)), lambda n: ltt_bound_principal(n, k, t))


def pentagon_lower_formula() -> BoundFormula:
    return BoundFormula("c4c5_lower", (), pentagon_family_lower)


def pentagon_upper_formula() -> BoundFormula:
    return BoundFormula("c4c5_upper", (), pentagon_family_upper)
