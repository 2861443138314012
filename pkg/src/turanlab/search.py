"""Exact Turan-number computation for small orders.

Two independent engines compute ex(n, F), the largest edge count among
n-vertex graphs avoiding every pattern in F:

* ``brute_force_ex`` grows all free graphs one vertex at a time, keeping
  one representative per isomorphism class. Freeness is hereditary (both
  plain and induced containment survive taking induced subgraphs), so
  every free n-vertex graph has a free parent and nothing is missed.
* ``branch_and_bound_ex`` decides edges one at a time in a fixed order
  with pruning; it scales further and honors node/time budgets.

Both return the same maximizing witness: the graph whose canonical form is
smallest among all maximizers, so results are reproducible bit for bit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from turanlab import kernels
from turanlab.cache import ResultCache
from turanlab.core import SimpleGraph
from turanlab.graph6 import graph6_encode
from turanlab.patterns import FamilySpec

ENGINE_VERSION = 1

_BRUTE_FORCE_CAP = 9  # one-per-isomorphism-class enumeration stays sane to here


class SearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    """Optional node / wall-clock caps for the branch and bound engine."""

    node_limit: int | None = None
    time_limit: float | None = None


@dataclass(frozen=True)
class ExtremalRecord:
    family: str
    n: int
    max_edges: int
    exact: bool
    witness: str  # graph6 of the least-canonical maximizer ('' if truncated at 0)
    nodes: int
    elapsed: float
    engine: str
    version: int = ENGINE_VERSION

    def witness_graph(self) -> SimpleGraph | None:
        from turanlab.graph6 import graph6_decode

        return graph6_decode(self.witness) if self.witness else None


def _key_to_graph6(key: bytes, n: int) -> str:
    rows = kernels.unpack_key(key, n)
    return graph6_encode(SimpleGraph.from_rows(n, rows))


def brute_force_ex(n: int, family: FamilySpec, backend=None) -> ExtremalRecord:
    """Exhaustive enumeration up to isomorphism; exact but n-capped."""
    if n < 1:
        raise SearchError(f"need n >= 1, got {n}")
    if n > _BRUTE_FORCE_CAP:
        raise SearchError(
            f"brute force is capped at n={_BRUTE_FORCE_CAP} (asked for {n}); "
            "use branch_and_bound_ex"
        )
    impl = backend or kernels
    pats = family.as_kernel()
    t0 = time.time()
    keys = [kernels.pack_key([0], 1)]
    total = 1
    for k in range(1, n):
        keys = impl.extend_free_level(keys, k, pats)
        total += len(keys)
    best_m = -1
    best_key = None
    for key in keys:
        m = sum(byte.bit_count() for byte in key)
        if m > best_m or (m == best_m and key < best_key):
            best_m, best_key = m, key
    return ExtremalRecord(
        family=family.canonical(),
        n=n,
        max_edges=best_m,
        exact=True,
        witness=_key_to_graph6(best_key, n),
        nodes=total,
        elapsed=time.time() - t0,
        engine=getattr(impl, "BACKEND", kernels.BACKEND),
        version=ENGINE_VERSION,
    )


def branch_and_bound_ex(
    n: int,
    family: FamilySpec,
    budget: SearchBudget | None = None,
    initial_lb: int = 0,
    backend=None,
) -> ExtremalRecord:
    """Edge-by-edge search. initial_lb is a claimed lower bound (say, the
    edge count of a known construction); the search only keeps graphs at
    least that large, which tightens pruning. A completed run that ends
    below the hint means the hint was wrong, and that raises rather than
    returning a silently truncated value."""
    if n < 1:
        raise SearchError(f"need n >= 1, got {n}")
    if initial_lb < 0:
        raise SearchError(f"initial_lb must be >= 0, got {initial_lb}")
    impl = backend or kernels
    budget = budget or SearchBudget()
    t0 = time.time()
    best_m, best_key, nodes, completed = impl.bb_search(
        n,
        family.as_kernel(),
        node_limit=budget.node_limit,
        time_limit=budget.time_limit,
        initial_lb=initial_lb,
    )
    if completed and best_m < initial_lb:
        # pruning kept only graphs with >= initial_lb edges, and none exist
        raise SearchError(
            f"lower-bound hint {initial_lb} falsified: no {family}-free graph "
            f"on {n} vertices has that many edges"
        )
    return ExtremalRecord(
        family=family.canonical(),
        n=n,
        max_edges=best_m,
        exact=completed,
        witness=_key_to_graph6(best_key, n),
        nodes=nodes,
        elapsed=time.time() - t0,
        engine=getattr(impl, "BACKEND", kernels.BACKEND),
        version=ENGINE_VERSION,
    )


def extremal_table(
    n_values,
    family: FamilySpec,
    budget: SearchBudget | None = None,
    cache: ResultCache | None = None,
    backend=None,
) -> list[ExtremalRecord]:
    """Branch and bound over a run of n values, cache-aware and resumable.

    Proven values are read from and written to the cache; each new n seeds
    its search with the previous exact value (ex is monotone in n, since
    an extra isolated vertex never creates a forbidden pattern).
    """
    fam_key = family.canonical()
    out = []
    last_exact = 0
    for n in sorted(set(n_values)):
        hit = cache.get(fam_key, n) if cache is not None else None
        if hit is not None:
            out.append(hit)
            last_exact = hit.max_edges
            continue
        rec = branch_and_bound_ex(n, family, budget=budget, initial_lb=last_exact, backend=backend)
        if rec.exact:
            last_exact = rec.max_edges
            if cache is not None:
                cache.put(rec)
        out.append(rec)
    return out
