"""Pure-Python kernel backend: pattern finders, canonical forms, search cores.

Graphs enter as (rows, n) where rows[v] is an int bitmask of neighbors. All
functions treat rows as read-only and are fully deterministic: finders return
the lexicographically least witness, the canonical form is the byte-least
column-major packing of the upper triangle over all vertex labelings, and the
search cores visit branches in a fixed order. The compiled backend mirrors
this module function for function and must agree bit for bit.

Pattern tuples crossing the kernel boundary are 4-int tuples:
    (0, L, 0, induced)  for a cycle on L vertices
    (1, s, t, induced)  for a complete bipartite s-by-t pattern, s <= t
"""

from __future__ import annotations

import time
from itertools import combinations

BACKEND = "pure"

CYCLE = 0
KST = 1


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# counting and codegree

def count_triangles(rows, n):
    """Number of unordered vertex triples inducing at least three edges."""
    total = 0
    for v in range(n):
        rv = rows[v]
        for u in _bits(rv & (-1 << (v + 1))):
            total += ((rows[u] & rv) >> (u + 1)).bit_count()
    return total


def max_codegree_nonadjacent(rows, n):
    """(count, (u, v)) maximizing |N(u) & N(v)| over non-adjacent pairs.

    Ties break to the lexicographically least pair. (0, None) when every
    pair of vertices is adjacent (or n < 2).
    """
    best = 0
    pair = None
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if (ru >> v) & 1:
                continue
            c = (ru & rows[v]).bit_count()
            if pair is None or c > best:
                best = c
                pair = (u, v)
    return (best, pair)


# ---------------------------------------------------------------------------
# finders

def find_kst(rows, n, s, t, induced):
    """Least witness (A, B) of a complete bipartite s-by-t pattern, else None.

    A is an s-set, B a t-set of common neighbors of A; in induced mode both
    sides must also be independent sets. Witnesses compare as the
    concatenated tuple A + B.
    """
    if s + t > n:
        return None
    full = (1 << n) - 1
    for a_tuple in combinations(range(n), s):
        amask = 0
        for a in a_tuple:
            amask |= 1 << a
        if induced:
            skip = False
            for a in a_tuple:
                if rows[a] & amask:
                    skip = True
                    break
            if skip:
                continue
        common = full
        for a in a_tuple:
            common &= rows[a]
        if common.bit_count() < t:
            continue
        if not induced:
            b = []
            c = common
            while len(b) < t:
                low = c & -c
                b.append(low.bit_length() - 1)
                c ^= low
            return (a_tuple, tuple(b))
        b = _least_independent(rows, common, t)
        if b is not None:
            return (a_tuple, b)
    return None


def _least_independent(rows, cand, t):
    """Lexicographically least independent t-subset of the candidate mask."""
    chosen = []

    def rec(cand):
        if len(chosen) == t:
            return True
        if len(chosen) + cand.bit_count() < t:
            return False
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            chosen.append(v)
            if rec(cand & (-1 << (v + 1)) & ~rows[v]):
                return True
            chosen.pop()
        return False

    if rec(cand):
        return tuple(chosen)
    return None


def find_cycle(rows, n, length, induced):
    """Least witness tuple of a cycle on ``length`` vertices, else None.

    The witness is the least vertex sequence (c0, ..., c_{L-1}) over all
    traversals of all cycles; induced mode requires the cycle chordless.
    """
    L = length
    if L > n:
        return None
    for root in range(n - L + 1):
        allowed = -1 << root
        if rows[root] & allowed == 0:
            continue
        # distance-from-root masks within the allowed vertex set
        dist_mask = [1 << root]
        seen = 1 << root
        frontier = 1 << root
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            nxt &= allowed & ~seen
            seen |= nxt
            dist_mask.append(dist_mask[-1] | nxt)
            frontier = nxt
        while len(dist_mask) <= L:
            dist_mask.append(dist_mask[-1])
        path = [root]
        found = _cycle_dfs(rows, root, allowed, dist_mask, L, path, 1 << root, 0, induced)
        if found is not None:
            return found
    return None


def _cycle_dfs(rows, root, allowed, dist_mask, L, path, used, forb, induced):
    i = len(path)
    prev = path[-1]
    if i == L - 1:
        cand = rows[prev] & rows[root] & allowed & ~used
        if induced:
            cand &= ~forb
        if cand:
            low = cand & -cand
            return tuple(path) + (low.bit_length() - 1,)
        return None
    cand = rows[prev] & allowed & ~used & dist_mask[L - i]
    if induced:
        # forb tracks neighborhoods of c_1..c_{i-2}; the root's neighborhood
        # is excluded separately so the closing step can still reach it
        cand &= ~forb
        if i >= 2:
            cand &= ~rows[root]
    nforb = forb | (rows[prev] if i >= 2 else 0)
    for v in _bits(cand):
        path.append(v)
        res = _cycle_dfs(rows, root, allowed, dist_mask, L, path, used | (1 << v), nforb, induced)
        if res is not None:
            return res
        path.pop()
    return None


def has_path_on(rows, n, p):
    """Least witness of a path on p vertices (p-1 edges), else None."""
    if p < 1 or p > n:
        return None
    if p == 1:
        return (0,)
    path = []

    def rec(v, used):
        path.append(v)
        if len(path) == p:
            return True
        for u in _bits(rows[v] & ~used):
            if rec(u, used | (1 << u)):
                return True
        path.pop()
        return False

    for start in range(n):
        if rec(start, 1 << start):
            return tuple(path)
    return None


def violated_pattern(rows, n, patterns):
    """Index and witness of the first violated pattern in list order, else None."""
    for idx, (kind, a, b, ind) in enumerate(patterns):
        if kind == CYCLE:
            w = find_cycle(rows, n, a, ind)
        else:
            w = find_kst(rows, n, a, b, ind)
        if w is not None:
            return idx, w
    return None


# ---------------------------------------------------------------------------
# packing and canonical form

def pack_key(rows, n, perm=None):
    """Pack the column-major upper triangle into big-endian bytes.

    With perm, position i takes the original vertex perm[i] first.
    """
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return b""
    word = 0
    if perm is None:
        for v in range(1, n):
            rv = rows[v]
            for u in range(v):
                word = (word << 1) | ((rv >> u) & 1)
    else:
        for v in range(1, n):
            rv = rows[perm[v]]
            for u in range(v):
                word = (word << 1) | ((rv >> perm[u]) & 1)
    nbytes = (nbits + 7) // 8
    return (word << (nbytes * 8 - nbits)).to_bytes(nbytes, "big")


def unpack_key(key, n):
    """Invert pack_key back to bit rows."""
    rows = [0] * n
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return rows
    word = int.from_bytes(key, "big") >> (len(key) * 8 - nbits)
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if (word >> pos) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def _refine(rows, n, colors):
    """Equitable refinement; color ids are ranks of (old color, profile)."""
    while True:
        k = max(colors) + 1
        sigs = []
        for v in range(n):
            cnt = [0] * k
            for u in _bits(rows[v]):
                cnt[colors[u]] += 1
            sigs.append((colors[v], tuple(cnt)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canon_key(rows, n):
    """Byte-least pack_key over all vertex labelings.

    Equitable-partition refinement prunes the labeling search; branching
    individualizes each vertex of the first non-singleton color class, with
    interchangeable twins explored once. The result is a canonical form:
    equal keys iff isomorphic.
    """
    if n <= 1:
        return b""
    degs = [r.bit_count() for r in rows]
    order = {d: i for i, d in enumerate(sorted(set(degs)))}
    colors = _refine(rows, n, [order[d] for d in degs])
    best = [None]

    def rec(colors):
        k = max(colors) + 1
        if k == n:
            vert_at = [0] * n
            for v in range(n):
                vert_at[colors[v]] = v
            key = pack_key(rows, n, vert_at)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        cell_color = 0
        while colors.count(cell_color) == 1:
            cell_color += 1
        cell = [v for v in range(n) if colors[v] == cell_color]
        branched = []
        for x in cell:
            twin = False
            for y in branched:
                mask = ~((1 << x) | (1 << y))
                if rows[x] & mask == rows[y] & mask:
                    twin = True
                    break
            if twin:
                continue
            branched.append(x)
            nxt = [c * 2 for c in colors]
            nxt[x] -= 1
            rec(_refine(rows, n, nxt))

    rec(colors)
    return best[0]


# ---------------------------------------------------------------------------
# enumeration by canonical augmentation

def extend_free_level(keys, k, patterns):
    """Canonical keys of all pattern-free graphs on k+1 vertices whose
    parents (any single-vertex deletion) lie among the given k-vertex keys.

    When the key list covers every pattern-free class on k vertices, the
    result covers every pattern-free class on k+1 vertices: freeness of
    both subgraph and induced patterns is hereditary under vertex deletion.
    """
    out = set()
    for key in keys:
        rows = unpack_key(key, k)
        rows.append(0)
        n1 = k + 1
        for mask in range(1 << k):
            child = list(rows)
            child[k] = mask
            for u in _bits(mask):
                child[u] |= 1 << k
            if mask and violated_pattern(child, n1, patterns) is not None:
                continue
            out.add(canon_key(child, n1))
    return sorted(out)


# ---------------------------------------------------------------------------
# branch and bound over edge variables

def _present_path_exists(rows, n, u, v, edges_needed):
    """Is there a u..v path with exactly edges_needed edges, all distinct?"""
    # BFS distances to v for pruning
    INF = edges_needed + 1
    dist = [INF] * n
    dist[v] = 0
    frontier = 1 << v
    seen = 1 << v
    d = 0
    while frontier and d < edges_needed:
        d += 1
        nxt = 0
        for w in _bits(frontier):
            nxt |= rows[w]
        nxt &= ~seen
        for w in _bits(nxt):
            dist[w] = d
        seen |= nxt
        frontier = nxt
    if dist[u] > edges_needed:
        return False

    def rec(x, used, rem):
        if rem == 0:
            return x == v
        cand = rows[x] & ~used
        if rem == 1:
            return bool((cand >> v) & 1)
        for y in _bits(cand):
            if dist[y] < rem and y != v:
                if rec(y, used | (1 << y), rem - 1):
                    return True
        return False

    return rec(u, 1 << u, edges_needed)


def _kst_completed(rows, n, u, v, s, t):
    """Does a K_{s,t} with the new edge (u,v) on its crossing side exist?"""
    for r, other in ((u, v), (v, u)):
        rr = rows[r]
        if s == 1:
            if (rr >> other) & 1 and rr.bit_count() >= t:
                return True
            continue
        pool = [w for w in range(n) if w != r]
        for x_tuple in combinations(pool, s - 1):
            common = rr
            for x in x_tuple:
                common &= rows[x]
            if (common >> other) & 1 and common.bit_count() >= t:
                return True
    return False


def _edge_cap(n, patterns):
    """Static edge ceiling implied by subgraph-mode K_{s,t} members.

    For s == 2, summing codegrees over vertex pairs and convexity give
    2m(2m - n) <= (t-1)(n-1)n^2; for s == 1 the max degree is at most t-1.
    Returns n(n-1)/2 when no pattern applies.
    """
    cap = n * (n - 1) // 2
    for kind, s, t, ind in patterns:
        if kind != KST or ind:
            continue
        if s == 1:
            cap = min(cap, n * (t - 1) // 2)
        elif s == 2:
            m = cap
            while m > 0 and 2 * m * (2 * m - n) > (t - 1) * (n - 1) * n * n:
                m -= 1
            cap = min(cap, m)
    return cap


def bb_search(n, patterns, node_limit=None, time_limit=None, initial_lb=None):
    """Maximum edges over pattern-free graphs on n vertices, by DFS over
    column-major edge variables.

    Present branches are tried first. Subgraph-mode patterns prune per set
    edge (they are monotone under edge addition); induced-mode patterns are
    conclusive only on fully decided vertex prefixes, so they run when a
    column completes. Labelings are restricted by an adjacent-transposition
    symmetry break on consecutive columns. Returns
    (best_m, best_canonical_key, nodes, completed); the key is the least
    canonical form among all maximizers the search visited.
    """
    nbits = n * (n - 1) // 2
    empty_key = b"\x00" * ((nbits + 7) // 8)
    if n <= 1:
        return (0, b"", 1, True)
    edge_list = [(u, v) for v in range(1, n) for u in range(v)]
    sub_cycles = [a for kind, a, b, ind in patterns if kind == CYCLE and not ind]
    sub_ksts = [(a, b) for kind, a, b, ind in patterns if kind == KST and not ind]
    induced = [p for p in patterns if p[3]]
    cap = _edge_cap(n, patterns)
    rows = [0] * n
    state = {"m": 0, "key": empty_key, "nodes": 0, "stop": False}
    lb = initial_lb if initial_lb is not None else 0
    deadline = time.monotonic() + time_limit if time_limit is not None else None

    def column_ok(v):
        # symmetry break: col(v) and col(v-1) restricted to {0..v-2},
        # compared with vertex 0 as the most significant bit
        if v >= 2:
            a = 0
            b = 0
            for u in range(v - 1):
                a = (a << 1) | ((rows[v] >> u) & 1)
                b = (b << 1) | ((rows[v - 1] >> u) & 1)
            if a > b:
                return False
        if induced:
            pre = rows[: v + 1]
            for kind, pa, pb, ind in induced:
                if kind == CYCLE:
                    if find_cycle(pre, v + 1, pa, True) is not None:
                        return False
                else:
                    if find_kst(pre, v + 1, pa, pb, True) is not None:
                        return False
        return True

    def rec(idx, m_cur):
        if state["stop"]:
            return
        state["nodes"] += 1
        if node_limit is not None and state["nodes"] > node_limit:
            state["stop"] = True
            return
        if deadline is not None and state["nodes"] % 2048 == 0 and time.monotonic() > deadline:
            state["stop"] = True
            return
        if idx == nbits:
            if m_cur > state["m"]:
                state["m"] = m_cur
                state["key"] = canon_key(rows, n)
            elif m_cur == state["m"]:
                key = canon_key(rows, n)
                if key < state["key"]:
                    state["key"] = key
            return
        potential = m_cur + (nbits - idx)
        if potential > cap:
            potential = cap
        if potential < state["m"] or potential < lb:
            return
        u, v = edge_list[idx]
        closing = u == v - 1
        # present branch
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        ok = True
        for L in sub_cycles:
            if _present_path_exists(rows, n, u, v, L - 1):
                ok = False
                break
        if ok:
            for s, t in sub_ksts:
                if _kst_completed(rows, n, u, v, s, t):
                    ok = False
                    break
        if ok and closing:
            ok = column_ok(v)
        if ok:
            rec(idx + 1, m_cur + 1)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        # absent branch
        if not closing or column_ok(v):
            rec(idx + 1, m_cur)

    rec(0, 0)
    return (state["m"], state["key"], state["nodes"], not state["stop"])
