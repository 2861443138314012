# cython: language_level=3
"""Compiled kernel backend: single-word bitset versions of the pure kernels.

Graphs with at most 62 vertices run on C uint64 rows; larger inputs delegate
to the pure backend, which has no word-size limit. Iteration order mirrors
_pykernels exactly, so witnesses, canonical keys, node counts, and budget
truncation points agree bit for bit between the backends.
"""

from itertools import combinations
from time import monotonic as _monotonic

from turanlab import _pykernels as _py

BACKEND = "compiled"

CYCLE = 0
KST = 1

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef u64 ONE = 1
cdef u64 ALLM = ~(<u64>0)

# shifts must stay below the 64-bit word; beyond this the pure backend runs
cdef int _WORD_CAP = 62


cdef inline int _popcnt(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(u64 x) nogil:
    return __builtin_ctzll(x)


cdef inline void _load_rows(object rows, int n, u64 *r):
    cdef int v
    for v in range(n):
        r[v] = rows[v]


# ---------------------------------------------------------------------------
# counting and codegree

def count_triangles(rows, n):
    """Number of unordered vertex triples inducing at least three edges."""
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.count_triangles(rows, n)
    cdef u64 r[64]
    cdef u64 rv, c, low
    cdef int v, u
    cdef long long total = 0
    _load_rows(rows, nn, r)
    for v in range(nn):
        rv = r[v]
        c = rv & (ALLM << (v + 1))
        while c:
            low = c & (~c + 1)
            u = _ctz(low)
            c ^= low
            total += _popcnt((r[u] & rv) >> (u + 1))
    return total


def max_codegree_nonadjacent(rows, n):
    """(count, (u, v)) maximizing |N(u) & N(v)| over non-adjacent pairs.

    Ties break to the lexicographically least pair. (0, None) when every
    pair of vertices is adjacent (or n < 2).
    """
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.max_codegree_nonadjacent(rows, n)
    cdef u64 r[64]
    cdef u64 ru
    cdef int u, v, c, best = 0, bu = 0, bv = 0
    cdef bint have = False
    _load_rows(rows, nn, r)
    for u in range(nn):
        ru = r[u]
        for v in range(u + 1, nn):
            if (ru >> v) & 1:
                continue
            c = _popcnt(ru & r[v])
            if (not have) or c > best:
                best = c
                bu = u
                bv = v
                have = True
    if have:
        return (best, (bu, bv))
    return (0, None)


# ---------------------------------------------------------------------------
# finders

cdef bint _li_rec(u64 *r, u64 cand, int t, int *chosen, int depth):
    cdef u64 c, low
    cdef int v
    if depth == t:
        return True
    if depth + _popcnt(cand) < t:
        return False
    c = cand
    while c:
        low = c & (~c + 1)
        v = _ctz(low)
        c ^= low
        chosen[depth] = v
        if _li_rec(r, cand & (ALLM << (v + 1)) & ~r[v], t, chosen, depth + 1):
            return True
    return False


cdef object _least_independent_c(u64 *r, u64 cand, int t):
    cdef int chosen[64]
    cdef int i
    if _li_rec(r, cand, t, chosen, 0):
        return tuple([chosen[i] for i in range(t)])
    return None


cdef object _find_kst_c(u64 *r, int n, int s, int t, bint induced):
    cdef u64 full, amask, common, c, low
    cdef int ai
    cdef bint skip
    if s + t > n:
        return None
    full = (ONE << n) - 1
    for a_tuple in combinations(range(n), s):
        amask = 0
        for a in a_tuple:
            ai = a
            amask |= ONE << ai
        if induced:
            skip = False
            for a in a_tuple:
                ai = a
                if r[ai] & amask:
                    skip = True
                    break
            if skip:
                continue
        common = full
        for a in a_tuple:
            ai = a
            common &= r[ai]
        if _popcnt(common) < t:
            continue
        if not induced:
            blist = []
            c = common
            while len(blist) < t:
                low = c & (~c + 1)
                blist.append(_ctz(low))
                c ^= low
            return (a_tuple, tuple(blist))
        b = _least_independent_c(r, common, t)
        if b is not None:
            return (a_tuple, b)
    return None


def find_kst(rows, n, s, t, induced):
    """Least witness (A, B) of a complete bipartite s-by-t pattern, else None.

    A is an s-set, B a t-set of common neighbors of A; in induced mode both
    sides must also be independent sets. Witnesses compare as the
    concatenated tuple A + B.
    """
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.find_kst(rows, n, s, t, induced)
    cdef u64 r[64]
    _load_rows(rows, nn, r)
    return _find_kst_c(r, nn, s, t, bool(induced))


cdef object _cycle_dfs_c(u64 *r, int root, u64 allowed, u64 *dist_mask, int L,
                         int *path, int plen, u64 used, u64 forb, bint induced):
    cdef int i = plen
    cdef int prev = path[plen - 1]
    cdef u64 cand, low, nforb
    cdef int v, j
    if i == L - 1:
        cand = r[prev] & r[root] & allowed & ~used
        if induced:
            cand &= ~forb
        if cand:
            low = cand & (~cand + 1)
            return tuple([path[j] for j in range(plen)]) + (_ctz(low),)
        return None
    cand = r[prev] & allowed & ~used & dist_mask[L - i]
    if induced:
        # forb tracks neighborhoods of c_1..c_{i-2}; the root's neighborhood
        # is excluded separately so the closing step can still reach it
        cand &= ~forb
        if i >= 2:
            cand &= ~r[root]
    nforb = forb | (r[prev] if i >= 2 else 0)
    while cand:
        low = cand & (~cand + 1)
        v = _ctz(low)
        cand ^= low
        path[plen] = v
        res = _cycle_dfs_c(r, root, allowed, dist_mask, L, path, plen + 1,
                           used | low, nforb, induced)
        if res is not None:
            return res
    return None


cdef object _find_cycle_c(u64 *r, int n, int L, bint induced):
    cdef u64 allowed, seen, frontier, nxt, c, low
    cdef u64 dist_mask[68]
    cdef int path[64]
    cdef int root, w, nd
    if L > n:
        return None
    for root in range(n - L + 1):
        allowed = ALLM << root
        if (r[root] & allowed) == 0:
            continue
        # distance-from-root masks within the allowed vertex set
        dist_mask[0] = ONE << root
        nd = 1
        seen = ONE << root
        frontier = seen
        while frontier:
            nxt = 0
            c = frontier
            while c:
                low = c & (~c + 1)
                w = _ctz(low)
                c ^= low
                nxt |= r[w]
            nxt &= allowed & ~seen
            seen |= nxt
            dist_mask[nd] = dist_mask[nd - 1] | nxt
            nd += 1
            frontier = nxt
        while nd <= L:
            dist_mask[nd] = dist_mask[nd - 1]
            nd += 1
        path[0] = root
        found = _cycle_dfs_c(r, root, allowed, dist_mask, L, path, 1,
                             ONE << root, 0, induced)
        if found is not None:
            return found
    return None


def find_cycle(rows, n, length, induced):
    """Least witness tuple of a cycle on ``length`` vertices, else None.

    The witness is the least vertex sequence (c0, ..., c_{L-1}) over all
    traversals of all cycles; induced mode requires the cycle chordless.
    """
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.find_cycle(rows, n, length, induced)
    cdef u64 r[64]
    _load_rows(rows, nn, r)
    return _find_cycle_c(r, nn, length, bool(induced))


cdef bint _path_rec(u64 *r, int *path, int depth, int v, u64 used, int p):
    cdef u64 cand, low
    cdef int u
    path[depth] = v
    if depth + 1 == p:
        return True
    cand = r[v] & ~used
    while cand:
        low = cand & (~cand + 1)
        u = _ctz(low)
        cand ^= low
        if _path_rec(r, path, depth + 1, u, used | low, p):
            return True
    return False


cdef object _has_path_c(u64 *r, int n, int p):
    cdef int path[64]
    cdef int start, j
    if p < 1 or p > n:
        return None
    if p == 1:
        return (0,)
    for start in range(n):
        if _path_rec(r, path, 0, start, ONE << start, p):
            return tuple([path[j] for j in range(p)])
    return None


def has_path_on(rows, n, p):
    """Least witness of a path on p vertices (p-1 edges), else None."""
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.has_path_on(rows, n, p)
    cdef u64 r[64]
    _load_rows(rows, nn, r)
    return _has_path_c(r, nn, p)


cdef object _violated_c(u64 *r, int n, patterns):
    cdef int idx, kind, a, b
    cdef bint ind
    for idx, (kind, a, b, ind) in enumerate(patterns):
        if kind == CYCLE:
            w = _find_cycle_c(r, n, a, ind)
        else:
            w = _find_kst_c(r, n, a, b, ind)
        if w is not None:
            return idx, w
    return None


def violated_pattern(rows, n, patterns):
    """Index and witness of the first violated pattern in list order, else None."""
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.violated_pattern(rows, n, patterns)
    cdef u64 r[64]
    _load_rows(rows, nn, r)
    return _violated_c(r, nn, patterns)


# ---------------------------------------------------------------------------
# packing and canonical form

cdef bytes _pack_c(u64 *r, int n, int *perm):
    cdef int nbits = n * (n - 1) // 2
    cdef unsigned char buf[240]
    cdef int nbytes, idx, u, v
    cdef u64 rv
    if nbits == 0:
        return b""
    nbytes = (nbits + 7) // 8
    for idx in range(nbytes):
        buf[idx] = 0
    idx = 0
    if perm == NULL:
        for v in range(1, n):
            rv = r[v]
            for u in range(v):
                if (rv >> u) & 1:
                    buf[idx >> 3] |= 1 << (7 - (idx & 7))
                idx += 1
    else:
        for v in range(1, n):
            rv = r[perm[v]]
            for u in range(v):
                if (rv >> perm[u]) & 1:
                    buf[idx >> 3] |= 1 << (7 - (idx & 7))
                idx += 1
    return (<char *>buf)[:nbytes]


cdef void _unpack_c(object key, int n, u64 *out):
    cdef bytes bkey = key
    cdef const unsigned char *kb = bkey
    cdef int nbits = n * (n - 1) // 2
    cdef int idx = 0, u, v
    for v in range(n):
        out[v] = 0
    if nbits == 0:
        return
    for v in range(1, n):
        for u in range(v):
            if (kb[idx >> 3] >> (7 - (idx & 7))) & 1:
                out[u] |= ONE << v
                out[v] |= ONE << u
            idx += 1


def pack_key(rows, n, perm=None):
    """Pack the column-major upper triangle into big-endian bytes.

    With perm, position i takes the original vertex perm[i] first.
    """
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.pack_key(rows, n, perm)
    cdef u64 r[64]
    cdef int p[64]
    cdef int v
    _load_rows(rows, nn, r)
    if perm is None:
        return _pack_c(r, nn, NULL)
    for v in range(nn):
        p[v] = perm[v]
    return _pack_c(r, nn, p)


def unpack_key(key, n):
    """Invert pack_key back to bit rows."""
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.unpack_key(key, n)
    cdef u64 r[64]
    cdef int v
    _unpack_c(key, nn, r)
    return [r[v] for v in range(nn)]


cdef void _refine_c(u64 *r, int n, int *colors):
    """Equitable refinement; color ids are ranks of (old color, profile).

    Signatures are compared as fixed-length byte strings, which orders them
    exactly as the (color, count-vector) tuples would. An individualized
    vertex carries color -1: it sorts before color 0 (the byte stores
    color + 1) and its count lands in the top bucket, matching the pure
    backend's list indexing.
    """
    cdef int cnt[128]
    cdef unsigned char sigbuf[132]
    cdef int newc[64]
    cdef u64 c, low
    cdef int k, v, u, i, ci
    cdef bint changed
    while True:
        k = 0
        for v in range(n):
            if colors[v] > k:
                k = colors[v]
        k += 1
        sigs = []
        for v in range(n):
            for i in range(k):
                cnt[i] = 0
            c = r[v]
            while c:
                low = c & (~c + 1)
                u = _ctz(low)
                c ^= low
                ci = colors[u]
                if ci < 0:
                    ci += k
                cnt[ci] += 1
            sigbuf[0] = <unsigned char>(colors[v] + 1)
            for i in range(k):
                sigbuf[i + 1] = <unsigned char>cnt[i]
            sigs.append((<char *>sigbuf)[:k + 1])
        order = {}
        for i, s in enumerate(sorted(set(sigs))):
            order[s] = i
        changed = False
        for v in range(n):
            newc[v] = order[sigs[v]]
            if newc[v] != colors[v]:
                changed = True
        if not changed:
            return
        for v in range(n):
            colors[v] = newc[v]


cdef class _Canon:
    cdef u64 *r
    cdef int n
    cdef object best

    cdef void rec(self, int *colors):
        cdef int vert_at[64]
        cdef int nxt[64]
        cdef int branched[64]
        cdef u64 mask
        cdef int n = self.n
        cdef int k, v, i, cell_color, cnt, x, y, nb
        cdef bint twin
        k = 0
        for v in range(n):
            if colors[v] > k:
                k = colors[v]
        k += 1
        if k == n:
            for v in range(n):
                vert_at[colors[v]] = v
            key = _pack_c(self.r, n, vert_at)
            if self.best is None or key < <bytes>self.best:
                self.best = key
            return
        cell_color = 0
        while True:
            cnt = 0
            for v in range(n):
                if colors[v] == cell_color:
                    cnt += 1
            if cnt != 1:
                break
            cell_color += 1
        nb = 0
        for x in range(n):
            if colors[x] != cell_color:
                continue
            twin = False
            for i in range(nb):
                y = branched[i]
                mask = ~((ONE << x) | (ONE << y))
                if (self.r[x] & mask) == (self.r[y] & mask):
                    twin = True
                    break
            if twin:
                continue
            branched[nb] = x
            nb += 1
            for v in range(n):
                nxt[v] = colors[v] * 2
            nxt[x] -= 1
            _refine_c(self.r, n, nxt)
            self.rec(nxt)


cdef bytes _canon_c(u64 *r, int n):
    cdef int colors[64]
    cdef int degs[64]
    cdef int uniq[64]
    cdef int nu, v, i, j, d
    cdef _Canon state
    if n <= 1:
        return b""
    for v in range(n):
        degs[v] = _popcnt(r[v])
    nu = 0
    for v in range(n):
        d = degs[v]
        i = 0
        while i < nu and uniq[i] < d:
            i += 1
        if i < nu and uniq[i] == d:
            continue
        j = nu
        while j > i:
            uniq[j] = uniq[j - 1]
            j -= 1
        uniq[i] = d
        nu += 1
    for v in range(n):
        i = 0
        while uniq[i] != degs[v]:
            i += 1
        colors[v] = i
    _refine_c(r, n, colors)
    state = _Canon()
    state.r = r
    state.n = n
    state.best = None
    state.rec(colors)
    return <bytes>state.best


def canon_key(rows, n):
    """Byte-least pack_key over all vertex labelings.

    Equitable-partition refinement prunes the labeling search; branching
    individualizes each vertex of the first non-singleton color class, with
    interchangeable twins explored once. The result is a canonical form:
    equal keys iff isomorphic.
    """
    cdef int nn = n
    if nn > _WORD_CAP:
        return _py.canon_key(rows, n)
    if nn <= 1:
        return b""
    cdef u64 r[64]
    _load_rows(rows, nn, r)
    return _canon_c(r, nn)


# ---------------------------------------------------------------------------
# enumeration by canonical augmentation

def extend_free_level(keys, k, patterns):
    """Canonical keys of all pattern-free graphs on k+1 vertices whose
    parents (any single-vertex deletion) lie among the given k-vertex keys.

    When the key list covers every pattern-free class on k vertices, the
    result covers every pattern-free class on k+1 vertices: freeness of
    both subgraph and induced patterns is hereditary under vertex deletion.
    """
    cdef int kk = k
    if kk + 1 > _WORD_CAP:
        return _py.extend_free_level(keys, k, patterns)
    cdef u64 base[64]
    cdef u64 child[64]
    cdef u64 mask, top, c, low
    cdef int n1 = kk + 1, u, v
    out = set()
    top = ONE << kk
    for key in keys:
        _unpack_c(key, kk, base)
        base[kk] = 0
        mask = 0
        while mask < top:
            for v in range(n1):
                child[v] = base[v]
            child[kk] = mask
            c = mask
            while c:
                low = c & (~c + 1)
                u = _ctz(low)
                c ^= low
                child[u] |= ONE << kk
            if mask == 0 or _violated_c(child, n1, patterns) is None:
                out.add(_canon_c(child, n1))
            mask += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# branch and bound over edge variables

cdef bint _pp_rec(u64 *r, int *dist, int v, int x, u64 used, int rem):
    cdef u64 cand, low
    cdef int y
    if rem == 0:
        return x == v
    cand = r[x] & ~used
    if rem == 1:
        return ((cand >> v) & 1) != 0
    while cand:
        low = cand & (~cand + 1)
        y = _ctz(low)
        cand ^= low
        if dist[y] < rem and y != v:
            if _pp_rec(r, dist, v, y, used | low, rem - 1):
                return True
    return False


cdef bint _present_path_c(u64 *r, int n, int u, int v, int edges_needed):
    """Is there a u..v path with exactly edges_needed edges, all distinct?"""
    cdef int dist[64]
    cdef u64 frontier, seen, nxt, c, low
    cdef int INF = edges_needed + 1
    cdef int d = 0, w
    # BFS distances to v for pruning
    for w in range(n):
        dist[w] = INF
    dist[v] = 0
    frontier = ONE << v
    seen = frontier
    while frontier != 0 and d < edges_needed:
        d += 1
        nxt = 0
        c = frontier
        while c:
            low = c & (~c + 1)
            w = _ctz(low)
            c ^= low
            nxt |= r[w]
        nxt &= ~seen
        c = nxt
        while c:
            low = c & (~c + 1)
            w = _ctz(low)
            c ^= low
            dist[w] = d
        seen |= nxt
        frontier = nxt
    if dist[u] > edges_needed:
        return False
    return _pp_rec(r, dist, v, u, ONE << u, edges_needed)


cdef bint _kst_completed_c(u64 *r, int n, int u, int v, int s, int t):
    """Does a K_{s,t} with the new edge (u,v) on its crossing side exist?"""
    cdef u64 rr, common
    cdef int i, rvert, other, x, xi
    for i in range(2):
        rvert = u if i == 0 else v
        other = v if i == 0 else u
        rr = r[rvert]
        if s == 1:
            if ((rr >> other) & 1) and _popcnt(rr) >= t:
                return True
            continue
        if s == 2:
            for x in range(n):
                if x == rvert:
                    continue
                common = rr & r[x]
                if ((common >> other) & 1) and _popcnt(common) >= t:
                    return True
            continue
        pool = [w for w in range(n) if w != rvert]
        for x_tuple in combinations(pool, s - 1):
            common = rr
            for xx in x_tuple:
                xi = xx
                common &= r[xi]
            if ((common >> other) & 1) and _popcnt(common) >= t:
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


cdef class _BB:
    cdef u64 r[64]
    cdef int eu[2016]
    cdef int ev[2016]
    cdef int subc[32]
    cdef int kst_s[32]
    cdef int kst_t[32]
    cdef int n, nbits, n_subc, n_kst, cap, best_m, lb
    cdef list induced
    cdef bint has_node_limit, has_deadline, stop
    cdef long long nodes, node_limit
    cdef double deadline
    cdef object best_key

    cdef bint column_ok(self, int v):
        # symmetry break: col(v) and col(v-1) restricted to {0..v-2},
        # compared with vertex 0 as the most significant bit
        cdef u64 a = 0, b = 0
        cdef int u, kind, pa, pb
        cdef bint ind
        if v >= 2:
            for u in range(v - 1):
                a = (a << 1) | ((self.r[v] >> u) & 1)
                b = (b << 1) | ((self.r[v - 1] >> u) & 1)
            if a > b:
                return False
        if self.induced is not None:
            for (kind, pa, pb, ind) in self.induced:
                if kind == CYCLE:
                    if _find_cycle_c(self.r, v + 1, pa, True) is not None:
                        return False
                else:
                    if _find_kst_c(self.r, v + 1, pa, pb, True) is not None:
                        return False
        return True

    cdef void rec(self, int idx, int m_cur):
        cdef int i, u, v, potential
        cdef bint ok, closing
        if self.stop:
            return
        self.nodes += 1
        if self.has_node_limit and self.nodes > self.node_limit:
            self.stop = True
            return
        if self.has_deadline and self.nodes % 2048 == 0 and _monotonic() > self.deadline:
            self.stop = True
            return
        if idx == self.nbits:
            if m_cur > self.best_m:
                self.best_m = m_cur
                self.best_key = _canon_c(self.r, self.n)
            elif m_cur == self.best_m:
                key = _canon_c(self.r, self.n)
                if key < <bytes>self.best_key:
                    self.best_key = key
            return
        potential = m_cur + (self.nbits - idx)
        if potential > self.cap:
            potential = self.cap
        if potential < self.best_m or potential < self.lb:
            return
        u = self.eu[idx]
        v = self.ev[idx]
        closing = u == v - 1
        # present branch
        self.r[u] |= ONE << v
        self.r[v] |= ONE << u
        ok = True
        for i in range(self.n_subc):
            if _present_path_c(self.r, self.n, u, v, self.subc[i] - 1):
                ok = False
                break
        if ok:
            for i in range(self.n_kst):
                if _kst_completed_c(self.r, self.n, u, v, self.kst_s[i], self.kst_t[i]):
                    ok = False
                    break
        if ok and closing:
            ok = self.column_ok(v)
        if ok:
            self.rec(idx + 1, m_cur + 1)
        self.r[u] &= ~(ONE << v)
        self.r[v] &= ~(ONE << u)
        # absent branch
        if (not closing) or self.column_ok(v):
            self.rec(idx + 1, m_cur)


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
    cdef int nn = n
    if nn > _WORD_CAP or len(patterns) > 32:
        return _py.bb_search(n, patterns, node_limit, time_limit, initial_lb)
    cdef _BB bb
    cdef int u, v, idx, kind, a, b
    cdef bint ind
    nbits = nn * (nn - 1) // 2
    empty_key = b"\x00" * ((nbits + 7) // 8)
    if nn <= 1:
        return (0, b"", 1, True)
    bb = _BB()
    bb.n = nn
    bb.nbits = nbits
    idx = 0
    for v in range(1, nn):
        for u in range(v):
            bb.eu[idx] = u
            bb.ev[idx] = v
            idx += 1
    bb.n_subc = 0
    bb.n_kst = 0
    induced = [p for p in patterns if p[3]]
    bb.induced = induced if induced else None
    for (kind, a, b, ind) in patterns:
        if ind:
            continue
        if kind == CYCLE:
            bb.subc[bb.n_subc] = a
            bb.n_subc += 1
        else:
            bb.kst_s[bb.n_kst] = a
            bb.kst_t[bb.n_kst] = b
            bb.n_kst += 1
    bb.cap = _edge_cap(nn, patterns)
    for v in range(nn):
        bb.r[v] = 0
    bb.best_m = 0
    bb.best_key = empty_key
    bb.nodes = 0
    bb.stop = False
    bb.lb = initial_lb if initial_lb is not None else 0
    bb.has_node_limit = node_limit is not None
    bb.node_limit = node_limit if node_limit is not None else 0
    bb.has_deadline = time_limit is not None
    bb.deadline = _monotonic() + time_limit if time_limit is not None else 0.0
    bb.rec(0, 0)
    return (bb.best_m, bb.best_key, int(bb.nodes), not bb.stop)
