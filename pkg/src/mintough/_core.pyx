# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels (n <= 64).

Mirror of :mod:`mintough._pycore`; see that module for the conventions.
"""
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil

cdef enum:
    MAXN = 64

INFINITE = 1
FINITE = 0

TT_OK = 0
TT_COMPLETE = 1
TT_DISCONNECTED = 2
TT_BAD_BLOCK = 3
TT_LOW_MD = 4

TREE_OK = 0
TREE_NOT_TREE = 1
TREE_LOW_DEGREE = 2
TREE_Y_DEPENDENT = 3
TREE_Y_DEGREE = 4
TREE_NEIGHBOR_DEGREE = 5


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t full_mask(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef inline uint64_t bit(int v) noexcept nogil:
    return (<uint64_t>1) << v


cdef int load(object adj, uint64_t* out) except -1:
    cdef Py_ssize_t n = len(adj)
    cdef Py_ssize_t i
    if n > MAXN:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(n):
        out[i] = adj[i]
    return <int>n


cdef list dump(uint64_t* a, int n):
    return [a[i] for i in range(n)]


cdef inline int c_count(const uint64_t* adj, uint64_t alive) noexcept nogil:
    cdef int count = 0
    cdef uint64_t comp, frontier, new
    cdef int v
    while alive:
        frontier = alive & (~alive + 1)
        comp = frontier
        while frontier:
            v = ctz(frontier)
            frontier &= frontier - 1
            new = adj[v] & alive & ~comp
            comp |= new
            frontier |= new
        alive &= ~comp
        count += 1
    return count


cdef inline uint64_t c_reach(const uint64_t* adj, uint64_t alive, int src) noexcept nogil:
    cdef uint64_t comp = bit(src)
    cdef uint64_t frontier = comp
    cdef uint64_t new
    cdef int v
    while frontier:
        v = ctz(frontier)
        frontier &= frontier - 1
        new = adj[v] & alive & ~comp
        comp |= new
        frontier |= new
    return comp


cdef inline bint c_complete(const uint64_t* adj, int n) noexcept nogil:
    cdef uint64_t full = full_mask(n)
    cdef int v
    for v in range(n):
        if adj[v] != (full ^ bit(v)):
            return False
    return True


cdef uint64_t c_simplicial(const uint64_t* adj, int n) noexcept nogil:
    cdef uint64_t out = 0
    cdef uint64_t nb, rest
    cdef int v, w
    cdef bint ok
    for v in range(n):
        nb = adj[v]
        rest = nb
        ok = True
        while rest:
            w = ctz(rest)
            rest &= rest - 1
            if (nb & ~bit(w)) & ~adj[w]:
                ok = False
                break
        if ok:
            out |= bit(v)
    return out


cdef inline int64_t c_gcd(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


def adjacency_from_edge_mask(int n, emask):
    # the edge mask has n(n-1)/2 bits, beyond 64 once n >= 12, so walk its bytes
    cdef int nbits = n * (n - 1) // 2
    cdef bytes raw = int(emask).to_bytes((nbits + 8) // 8, "little")
    cdef const unsigned char[:] data = raw
    cdef uint64_t a[MAXN]
    cdef int i, j, k = 0
    for i in range(n):
        a[i] = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k >> 3] >> (k & 7)) & 1:
                a[i] |= bit(j)
                a[j] |= bit(i)
            k += 1
    return dump(a, n)


def edge_mask_from_adjacency(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef int nbits = n * (n - 1) // 2
    cdef bytearray out = bytearray((nbits + 8) // 8)
    cdef int i, j, k = 0
    for j in range(1, n):
        for i in range(j):
            if (a[j] >> i) & 1:
                out[k >> 3] |= 1 << (k & 7)
            k += 1
    return int.from_bytes(out, "little")


def is_complete(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    return c_complete(a, n)


def count_components(adj, uint64_t alive):
    cdef uint64_t a[MAXN]
    load(adj, a)
    return c_count(a, alive)


def component_masks(adj, uint64_t alive):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef list comps = []
    cdef uint64_t comp
    while alive:
        comp = c_reach(a, alive, ctz(alive))
        alive &= ~comp
        comps.append(comp)
    return comps


def simplicial_mask(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    return c_simplicial(a, n)


# ---------------------------------------------------------------- toughness

cdef int c_toughness(const uint64_t* adj, int n, int64_t* num, int64_t* den,
                     uint64_t* mask, int* comps) noexcept nogil:
    """Returns 1 for infinite toughness, else 0 and fills the outputs."""
    cdef uint64_t full = full_mask(n)
    cdef int w, k
    if c_complete(adj, n):
        num[0] = 0
        den[0] = 1
        mask[0] = 0
        comps[0] = 1 if n else 0
        return 1
    w = c_count(adj, full)
    if w != 1:
        num[0] = 0
        den[0] = 1
        mask[0] = 0
        comps[0] = w
        return 0
    cdef uint64_t cand = full & ~c_simplicial(adj, n)
    cdef int64_t bn = 0, bd = 0
    cdef uint64_t bm = 0
    cdef bint have = False
    cdef uint64_t s = 0
    while True:
        s = (s - cand) & cand
        if s == 0:
            break
        k = popc(s)
        if have and k * bd >= bn * (n - k):
            continue
        w = c_count(adj, full & ~s)
        if w < 2:
            continue
        if not have or k * bd < bn * w:
            bn = k
            bd = w
            bm = s
            have = True
    cdef int64_t g = c_gcd(bn, bd)
    num[0] = bn // g
    den[0] = bd // g
    mask[0] = bm
    comps[0] = <int>bd
    return 0


def toughness(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef int64_t num, den
    cdef uint64_t mask
    cdef int comps
    cdef int inf = c_toughness(a, n, &num, &den, &mask, &comps)
    return (INFINITE if inf else FINITE, num, den, mask, comps)


def toughness_plain(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef uint64_t full = full_mask(n)
    cdef int w, k
    if c_complete(a, n):
        return (INFINITE, 0, 1, 0, 1 if n else 0)
    w = c_count(a, full)
    if w != 1:
        return (FINITE, 0, 1, 0, w)
    cdef int64_t bn = 0, bd = 0
    cdef uint64_t bm = 0, s
    cdef bint have = False
    s = 1
    while s < full:
        w = c_count(a, full & ~s)
        if w >= 2:
            k = popc(s)
            if not have or k * bd < bn * w:
                bn = k
                bd = w
                bm = s
                have = True
        s += 1
    cdef int64_t g = c_gcd(bn, bd)
    return (FINITE, bn // g, bd // g, bm, <int>bd)


cdef int64_t c_cutset_below(const uint64_t* adj, int n, int64_t p, int64_t q) noexcept nogil:
    cdef uint64_t full = full_mask(n)
    cdef int w, k
    w = c_count(adj, full)
    if w >= 2:
        return 0 if p > 0 else -1
    cdef uint64_t cand = full & ~c_simplicial(adj, n)
    cdef uint64_t s = 0
    while True:
        s = (s - cand) & cand
        if s == 0:
            return -1
        k = popc(s)
        if k * q >= p * (n - k):
            continue
        w = c_count(adj, full & ~s)
        if w >= 2 and k * q < p * w:
            return <int64_t>s


def find_cutset_below(adj, int n, int64_t p, int64_t q):
    cdef uint64_t a[MAXN]
    load(adj, a)
    return c_cutset_below(a, n, p, q)


def minimality(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef int64_t p, q
    cdef uint64_t mask, rest
    cdef int comps, u, v
    c_toughness(a, n, &p, &q, &mask, &comps)
    for u in range(n):
        rest = a[u] >> (u + 1) if u < 63 else 0
        while rest:
            v = ctz(rest) + u + 1
            rest &= rest - 1
            a[u] &= ~bit(v)
            a[v] &= ~bit(u)
            if c_cutset_below(a, n, p, q) < 0:
                return (False, p, q, u, v)
            a[u] |= bit(v)
            a[v] |= bit(u)
    return (True, p, q, -1, -1)


def vertex_connectivity(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    if c_complete(a, n):
        return max(n - 1, 0)
    cdef uint64_t full = full_mask(n)
    if c_count(a, full) != 1:
        return 0
    cdef int best = n, k
    cdef uint64_t s = 1
    while s < full:
        k = popc(s)
        if k < best and c_count(a, full & ~s) >= 2:
            best = k
        s += 1
    return best


cdef int c_min_separator(const uint64_t* adj, int n, int u, int v, uint64_t* out) noexcept nogil:
    cdef uint64_t full = full_mask(n)
    cdef uint64_t rest = full & ~bit(u) & ~bit(v)
    cdef int best_k = n + 1, k
    cdef uint64_t best_s = 0
    cdef uint64_t s = 0
    while True:
        k = popc(s)
        if k < best_k and not ((c_reach(adj, full & ~s, u) >> v) & 1):
            best_k = k
            best_s = s
        s = (s - rest) & rest
        if s == 0:
            break
    out[0] = best_s
    return best_k


def min_separator(adj, int n, int u, int v):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef uint64_t s
    cdef int k = c_min_separator(a, n, u, v, &s)
    if k > n:
        return (k, -1)
    return (k, s)


def edge_witness(adj, int n, int u, int v, int64_t p, int64_t q):
    cdef uint64_t a[MAXN]
    cdef uint64_t b[MAXN]
    load(adj, a)
    cdef int i
    for i in range(n):
        b[i] = a[i]
    b[u] &= ~bit(v)
    b[v] &= ~bit(u)
    cdef uint64_t sep
    cdef int64_t paths = 1 + c_min_separator(b, n, u, v, &sep)
    cdef bint cond_a = paths * q >= 2 * p + q
    cdef uint64_t full = full_mask(n)
    cdef uint64_t rest = full & ~bit(u) & ~bit(v)
    cdef uint64_t s = 0, alive
    cdef int64_t checked = 0
    cdef int w
    while True:
        alive = full & ~s
        if not ((c_reach(b, alive, u) >> v) & 1):
            w = c_count(a, alive)
            if w >= 2:
                checked += 1
                if popc(s) * q < (w + 1) * p:
                    return (paths, cond_a, checked, s)
        s = (s - rest) & rest
        if s == 0:
            break
    return (paths, cond_a, checked, -1)


def modified_degrees(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef uint64_t full = full_mask(n)
    return [c_count(a, full & ~bit(v)) for v in range(n)]


# ----------------------------------------------------------------- chordal

cdef void c_lexbfs(const uint64_t* adj, int n, int* order) noexcept nogil:
    cdef uint64_t labels[MAXN]
    cdef uint64_t unvisited = full_mask(n)
    cdef uint64_t rest
    cdef int i, v, best
    for i in range(n):
        labels[i] = 0
    for i in range(n):
        best = -1
        rest = unvisited
        while rest:
            v = ctz(rest)
            rest &= rest - 1
            if best < 0 or labels[v] > labels[best]:
                best = v
        order[i] = best
        unvisited &= ~bit(best)
        rest = adj[best] & unvisited
        while rest:
            v = ctz(rest)
            rest &= rest - 1
            labels[v] |= bit(n - 1 - i)


cdef bint c_is_peo(const uint64_t* adj, int n, const int* order) noexcept nogil:
    cdef uint64_t later = full_mask(n)
    cdef uint64_t nb, rest
    cdef int i, v, w
    for i in range(n):
        v = order[i]
        later &= ~bit(v)
        nb = adj[v] & later
        rest = nb
        while rest:
            w = ctz(rest)
            rest &= rest - 1
            if (nb & ~bit(w)) & ~adj[w]:
                return False
    return True


cdef bint c_chordal(const uint64_t* adj, int n, int* peo) noexcept nogil:
    cdef int visit[MAXN]
    cdef int i
    c_lexbfs(adj, n, visit)
    for i in range(n):
        peo[i] = visit[n - 1 - i]
    return c_is_peo(adj, n, peo)


def lexbfs(adj, int n):
    cdef uint64_t a[MAXN]
    cdef int order[MAXN]
    load(adj, a)
    c_lexbfs(a, n, order)
    return [order[i] for i in range(n)]


def is_peo(adj, int n, order):
    cdef uint64_t a[MAXN]
    cdef int o[MAXN]
    load(adj, a)
    cdef int i
    for i in range(n):
        o[i] = order[i]
    return c_is_peo(a, n, o)


def is_chordal(adj, int n):
    cdef uint64_t a[MAXN]
    cdef int peo[MAXN]
    load(adj, a)
    if c_chordal(a, n, peo):
        return [peo[i] for i in range(n)]
    return None


cdef list members(uint64_t x):
    cdef list out = []
    while x:
        out.append(ctz(x))
        x &= x - 1
    return out


def peo_cliques(adj, int n, peo):
    cdef uint64_t a[MAXN]
    cdef uint64_t cands[MAXN]
    load(adj, a)
    cdef uint64_t later = full_mask(n)
    cdef int i, j, v
    cdef bint maximal
    for i in range(n):
        v = peo[i]
        later &= ~bit(v)
        cands[i] = bit(v) | (a[v] & later)
    cdef list out = []
    for i in range(n):
        maximal = True
        for j in range(n):
            if cands[i] != cands[j] and (cands[i] & cands[j]) == cands[i]:
                maximal = False
                break
        if maximal:
            out.append(cands[i])
    out.sort(key=members)
    return out


def clique_tree_edges(cliques):
    cdef int k = len(cliques)
    if k > MAXN:
        raise ValueError("compiled kernels handle at most 64 cliques")
    cdef uint64_t c[MAXN]
    cdef int parent[MAXN]
    cdef int i, j, w, ri, rj
    for i in range(k):
        c[i] = cliques[i]
        parent[i] = i
    cand = []
    for i in range(k):
        for j in range(i + 1, k):
            w = popc(c[i] & c[j])
            if w:
                cand.append((-w, i, j))
    cand.sort()
    out = []
    for nw, i, j in cand:
        ri = i
        while parent[ri] != ri:
            ri = parent[ri]
        rj = j
        while parent[rj] != rj:
            rj = parent[rj]
        if ri != rj:
            parent[ri] = rj
            out.append((i, j, -nw))
    return out


cdef bint tree_adjacency(int k, edges, uint64_t* tadj) except -1:
    cdef int i, j
    for i in range(k):
        tadj[i] = 0
    if len(edges) != k - 1:
        return False
    for e in edges:
        i = e[0]
        j = e[1]
        if i < 0 or j < 0 or i >= k or j >= k or i == j or (tadj[i] >> j) & 1:
            return False
        tadj[i] |= bit(j)
        tadj[j] |= bit(i)
    if k and c_count(tadj, full_mask(k)) != 1:
        return False
    return True


def verify_clique_intersection(cliques, edges):
    cdef int k = len(cliques)
    if k > MAXN:
        raise ValueError("compiled kernels handle at most 64 cliques")
    cdef uint64_t c[MAXN]
    cdef uint64_t tadj[MAXN]
    cdef int parent[MAXN]
    cdef int queue[MAXN]
    cdef int i, a, b, x, y, head, tail
    cdef uint64_t seen, rest, common
    for i in range(k):
        c[i] = cliques[i]
    if not tree_adjacency(k, edges, tadj):
        return False
    for a in range(k):
        seen = bit(a)
        queue[0] = a
        head = 0
        tail = 1
        while head < tail:
            x = queue[head]
            head += 1
            rest = tadj[x] & ~seen
            while rest:
                y = ctz(rest)
                rest &= rest - 1
                seen |= bit(y)
                parent[y] = x
                queue[tail] = y
                tail += 1
        for b in range(a + 1, k):
            common = c[a] & c[b]
            x = b
            while x != a:
                if common & ~c[x]:
                    return False
                x = parent[x]
    return True


def verify_induced_subtree(cliques, edges, int n):
    cdef int k = len(cliques)
    if k > MAXN:
        raise ValueError("compiled kernels handle at most 64 cliques")
    cdef uint64_t c[MAXN]
    cdef uint64_t tadj[MAXN]
    cdef int i, v
    cdef uint64_t holders
    for i in range(k):
        c[i] = cliques[i]
    if not tree_adjacency(k, edges, tadj):
        return False
    for v in range(n):
        holders = 0
        for i in range(k):
            if (c[i] >> v) & 1:
                holders |= bit(i)
        if holders == 0 or c_count(tadj, holders) != 1:
            return False
    return True


# ---------------------------------------------------------------- interval

cdef bint c_find_at(const uint64_t* adj, int n, int* out) noexcept nogil:
    cdef uint64_t full = full_mask(n)
    cdef int x, y, z
    for x in range(n):
        for y in range(x + 1, n):
            if (adj[x] >> y) & 1:
                continue
            for z in range(y + 1, n):
                if (adj[x] >> z) & 1 or (adj[y] >> z) & 1:
                    continue
                if not ((c_reach(adj, full & ~adj[z], x) >> y) & 1):
                    continue
                if not ((c_reach(adj, full & ~adj[y], x) >> z) & 1):
                    continue
                if not ((c_reach(adj, full & ~adj[x], y) >> z) & 1):
                    continue
                out[0] = x
                out[1] = y
                out[2] = z
                return True
    return False


def find_asteroidal_triple(adj, int n):
    cdef uint64_t a[MAXN]
    cdef int t[3]
    t[0] = t[1] = t[2] = -1
    load(adj, a)
    if c_find_at(a, n, t):
        return (t[0], t[1], t[2])
    return None


# ------------------------------------------------------------------ TT-graphs

def tt_decompose(adj, int n):
    cdef uint64_t a[MAXN]
    cdef uint64_t cut[MAXN]
    load(adj, a)
    if c_complete(a, n):
        return (TT_COMPLETE, [])
    cdef uint64_t full = full_mask(n)
    if c_count(a, full) != 1:
        return (TT_DISCONNECTED, [])
    cdef int u, v, w, x, i, c, mu, md
    cdef uint64_t rest, common, ra, on_triangle = 0
    cdef list tris = []
    for u in range(n):
        rest = a[u] >> (u + 1) if u < 63 else 0
        while rest:
            v = ctz(rest) + u + 1
            rest &= rest - 1
            common = a[u] & a[v]
            c = popc(common)
            if c == 0:
                a[u] &= ~bit(v)
                a[v] &= ~bit(u)
                ra = c_reach(a, full, u)
                a[u] |= bit(v)
                a[v] |= bit(u)
                if (ra >> v) & 1:
                    return (TT_BAD_BLOCK, [])
            elif c == 1:
                w = ctz(common)
                if w < v:
                    # triangle already handled from its smaller pair
                    continue
                for i in range(n):
                    cut[i] = a[i]
                cut[u] &= ~(bit(v) | bit(w))
                cut[v] &= ~(bit(u) | bit(w))
                cut[w] &= ~(bit(u) | bit(v))
                ra = c_reach(cut, full, u)
                if (ra >> v) & 1 or (ra >> w) & 1 or (c_reach(cut, full, v) >> w) & 1:
                    return (TT_BAD_BLOCK, [])
                tris.append((u, v, w))
                on_triangle |= bit(u) | bit(v) | bit(w)
            else:
                return (TT_BAD_BLOCK, [])
    mu = 0
    for x in range(n):
        md = c_count(a, full & ~bit(x))
        if md > mu:
            mu = md
    rest = on_triangle
    while rest:
        x = ctz(rest)
        rest &= rest - 1
        if c_count(a, full & ~bit(x)) < mu:
            return (TT_LOW_MD, [])
    tris.sort()
    return (TT_OK, tris)


def claw_tree(adj, int n, triangles):
    cdef int m = n + len(triangles)
    if m > MAXN:
        raise ValueError("compiled kernels handle at most 64 vertices")
    cdef uint64_t t[MAXN]
    cdef int i, k, a, b, c, centre
    for i in range(m):
        t[i] = adj[i] if i < n else 0
    for k in range(len(triangles)):
        a, b, c = triangles[k]
        t[a] &= ~(bit(b) | bit(c))
        t[b] &= ~(bit(a) | bit(c))
        t[c] &= ~(bit(a) | bit(b))
        centre = n + k
        t[a] |= bit(centre)
        t[b] |= bit(centre)
        t[c] |= bit(centre)
        t[centre] = bit(a) | bit(b) | bit(c)
    return dump(t, m)


def tt_replay(tree_adj, int n, uint64_t ymask):
    cdef uint64_t t[MAXN]
    cdef uint64_t out[MAXN]
    cdef int index[MAXN]
    load(tree_adj, t)
    cdef int v, w, y, m = 0, i, j, cnt
    cdef int nb[MAXN]
    cdef uint64_t rest, row
    for v in range(n):
        if (ymask >> v) & 1:
            index[v] = -1
        else:
            index[v] = m
            m += 1
    for v in range(n):
        if index[v] < 0:
            continue
        row = 0
        rest = t[v] & ~ymask
        while rest:
            w = ctz(rest)
            rest &= rest - 1
            row |= bit(index[w])
        out[index[v]] = row
    rest = ymask
    while rest:
        y = ctz(rest)
        rest &= rest - 1
        cnt = 0
        row = t[y] & ~ymask
        while row:
            w = ctz(row)
            row &= row - 1
            nb[cnt] = index[w]
            cnt += 1
        for i in range(cnt):
            for j in range(i + 1, cnt):
                out[nb[i]] |= bit(nb[j])
                out[nb[j]] |= bit(nb[i])
    return dump(out, m)


cdef bint c_is_tree(const uint64_t* t, int n) noexcept nogil:
    cdef int v, total = 0
    if n == 0:
        return False
    for v in range(n):
        total += popc(t[v])
    return total == 2 * (n - 1) and c_count(t, full_mask(n)) == 1


def tt_validate(tree_adj, int n, uint64_t ymask):
    cdef uint64_t t[MAXN]
    load(tree_adj, t)
    if not c_is_tree(t, n):
        return (TREE_NOT_TREE, "")
    cdef int v, w, delta = 0
    cdef uint64_t rest, nbrs = 0, deg3 = 0, r2
    for v in range(n):
        if popc(t[v]) > delta:
            delta = popc(t[v])
        if popc(t[v]) == 3:
            deg3 |= bit(v)
    if delta < 3:
        return (TREE_LOW_DEGREE, "")
    rest = ymask
    while rest:
        v = ctz(rest)
        rest &= rest - 1
        if t[v] & ymask:
            return (TREE_Y_DEPENDENT, "")
    rest = ymask
    while rest:
        v = ctz(rest)
        rest &= rest - 1
        if popc(t[v]) != 3:
            return (TREE_Y_DEGREE, "")
        nbrs |= t[v]
    cdef bint all2 = nbrs != 0, alldelta = True
    r2 = nbrs
    while r2:
        w = ctz(r2)
        r2 &= r2 - 1
        if popc(t[w]) != 2:
            all2 = False
        if popc(t[w]) != delta:
            alldelta = False
    if ymask and delta == 3 and ymask == deg3 and all2:
        return (TREE_OK, "a")
    if alldelta:
        return (TREE_OK, "b")
    return (TREE_NEIGHBOR_DEGREE, "")


def valid_removal_sets(tree_adj, int n):
    cdef uint64_t t[MAXN]
    load(tree_adj, t)
    if n == 0:
        return []
    cdef int v, w, delta = 0, i, ncand = 0
    cdef int cand[MAXN]
    cdef uint64_t deg3 = 0, rest, r2, ymask, sub
    cdef bint ok
    for v in range(n):
        if popc(t[v]) > delta:
            delta = popc(t[v])
        if popc(t[v]) == 3:
            deg3 |= bit(v)
    if delta < 3:
        return []
    out = []
    if delta == 3:
        ok = True
        rest = deg3
        while rest and ok:
            v = ctz(rest)
            rest &= rest - 1
            if t[v] & deg3:
                ok = False
            r2 = t[v]
            while r2:
                w = ctz(r2)
                r2 &= r2 - 1
                if popc(t[w]) != 2:
                    ok = False
        if ok:
            out.append((deg3, "a"))
    rest = deg3
    while rest:
        v = ctz(rest)
        rest &= rest - 1
        ok = True
        r2 = t[v]
        while r2:
            w = ctz(r2)
            r2 &= r2 - 1
            if popc(t[w]) != delta:
                ok = False
        if ok:
            cand[ncand] = v
            ncand += 1
    sub = 0
    while sub < ((<uint64_t>1) << ncand):
        ymask = 0
        for i in range(ncand):
            if (sub >> i) & 1:
                ymask |= bit(cand[i])
        ok = True
        rest = ymask
        while rest:
            v = ctz(rest)
            rest &= rest - 1
            if t[v] & ymask:
                ok = False
                break
        if ok:
            out.append((ymask, "b"))
        sub += 1
    out.sort()
    return out


def prufer_tree(int n, object index):
    cdef uint64_t a[MAXN]
    cdef int seq[MAXN]
    cdef int degree[MAXN]
    cdef int i, x, leaf, u, v
    for i in range(n):
        a[i] = 0
        degree[i] = 1
    if n < 2:
        return dump(a, n)
    for i in range(n - 2):
        seq[n - 3 - i] = index % n
        index //= n
    for i in range(n - 2):
        degree[seq[i]] += 1
    for i in range(n - 2):
        x = seq[i]
        leaf = 0
        while degree[leaf] != 1:
            leaf += 1
        a[leaf] |= bit(x)
        a[x] |= bit(leaf)
        degree[leaf] -= 1
        degree[x] -= 1
    u = v = -1
    for i in range(n):
        if degree[i] == 1:
            if u < 0:
                u = i
            else:
                v = i
    a[u] |= bit(v)
    a[v] |= bit(u)
    return dump(a, n)


# ------------------------------------------------------------------ sweeps

def select_graphs(int n, uint64_t start, uint64_t stop, bint connected, bint chordal,
                  bint noncomplete):
    cdef uint64_t a[MAXN]
    cdef int peo[MAXN]
    cdef uint64_t full = full_mask(n)
    cdef int npairs = n * (n - 1) // 2
    cdef uint64_t complete = full_mask(npairs)
    cdef uint64_t emask
    cdef int i, j, k
    cdef list out = []
    emask = start
    while emask < stop:
        if noncomplete and emask == complete:
            emask += 1
            continue
        for i in range(n):
            a[i] = 0
        k = 0
        for j in range(1, n):
            for i in range(j):
                if (emask >> k) & 1:
                    a[i] |= bit(j)
                    a[j] |= bit(i)
                k += 1
        if connected and c_count(a, full) != 1:
            emask += 1
            continue
        if chordal and not c_chordal(a, n, peo):
            emask += 1
            continue
        out.append(emask)
        emask += 1
    return out


# ------------------------------------------------------------------ oracles

def has_induced_long_cycle(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef uint64_t s, rest
    cdef uint64_t top = full_mask(n)
    cdef int v
    cdef bint ok
    s = 0
    while True:
        if popc(s) >= 4:
            ok = True
            rest = s
            while rest:
                v = ctz(rest)
                rest &= rest - 1
                if popc(a[v] & s) != 2:
                    ok = False
                    break
            if ok and c_count(a, s) == 1:
                return True
        if s == top:
            break
        s += 1
    return False


def brute_maximal_cliques(adj, int n):
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef uint64_t full = full_mask(n)
    cdef uint64_t s, rest
    cdef int v
    cdef bint ok
    cdef list out = []
    s = 1
    while s <= full and s != 0:
        ok = True
        rest = s
        while rest:
            v = ctz(rest)
            rest &= rest - 1
            if (s & ~bit(v)) & ~a[v]:
                ok = False
                break
        if ok:
            rest = full & ~s
            while rest:
                v = ctz(rest)
                rest &= rest - 1
                if (s & ~a[v]) == 0:
                    ok = False
                    break
        if ok:
            out.append(s)
        if s == full:
            break
        s += 1
    out.sort(key=members)
    return out


def interval_model_exists(adj, int n):
    if n == 0:
        return True
    if n > 24:
        raise ValueError("interval model search limited to 24 vertices")
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef uint64_t full = full_mask(n)
    cdef bytearray seen_buf = bytearray(1 << n)
    cdef unsigned char* seen = seen_buf
    cdef list stack_buf = []
    cdef uint64_t opened, still_open, rest, nxt
    cdef int v
    stack_buf.append(0)
    seen[0] = 1
    while stack_buf:
        opened = stack_buf.pop()
        if opened == full:
            return True
        still_open = 0
        rest = opened
        while rest:
            v = ctz(rest)
            rest &= rest - 1
            if a[v] & ~opened:
                still_open |= bit(v)
        rest = full & ~opened
        while rest:
            v = ctz(rest)
            rest &= rest - 1
            if still_open & ~a[v]:
                continue
            nxt = opened | bit(v)
            if not seen[nxt]:
                seen[nxt] = 1
                stack_buf.append(nxt)
    return False
