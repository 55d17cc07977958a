"""Pure-Python bitmask kernels.

Every function here has a twin of the same name and signature in the
compiled ``_core`` extension; :mod:`mintough.kernels` picks one at import.
A graph on ``n`` vertices is passed as ``adj``, a list of ``n`` ints where
bit ``w`` of ``adj[v]`` is set iff ``vw`` is an edge.  Vertex sets are int
masks.  Python ints are unbounded, so this backend also serves ``n > 64``.
"""
from __future__ import annotations

from math import gcd

INFINITE = 1
FINITE = 0

# reason codes shared with the compiled backend
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


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _full(n: int) -> int:
    return (1 << n) - 1


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def adjacency_from_edge_mask(n: int, emask: int) -> list[int]:
    """Bit ``k`` of ``emask`` is the ``k``-th pair in graph6 order (column-major upper triangle)."""
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (emask >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return adj


def edge_mask_from_adjacency(adj: list[int], n: int) -> int:
    emask = 0
    k = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            if (row >> i) & 1:
                emask |= 1 << k
            k += 1
    return emask


def is_complete(adj: list[int], n: int) -> bool:
    full = _full(n)
    return all(adj[v] == full ^ (1 << v) for v in range(n))


def count_components(adj: list[int], alive: int) -> int:
    count = 0
    while alive:
        frontier = alive & -alive
        comp = frontier
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = adj[b.bit_length() - 1] & alive & ~comp
            comp |= new
            frontier |= new
        alive &= ~comp
        count += 1
    return count


def component_masks(adj: list[int], alive: int) -> list[int]:
    comps = []
    while alive:
        frontier = alive & -alive
        comp = frontier
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = adj[b.bit_length() - 1] & alive & ~comp
            comp |= new
            frontier |= new
        alive &= ~comp
        comps.append(comp)
    return comps


def _reach(adj: list[int], alive: int, src: int) -> int:
    comp = frontier = 1 << src
    while frontier:
        b = frontier & -frontier
        frontier ^= b
        new = adj[b.bit_length() - 1] & alive & ~comp
        comp |= new
        frontier |= new
    return comp


def simplicial_mask(adj: list[int], n: int) -> int:
    out = 0
    for v in range(n):
        nb = adj[v]
        if all((nb & ~(1 << w)) & ~adj[w] == 0 for w in _bits(nb)):
            out |= 1 << v
    return out


def _without_edge(adj: list[int], u: int, v: int) -> list[int]:
    adj2 = list(adj)
    adj2[u] &= ~(1 << v)
    adj2[v] &= ~(1 << u)
    return adj2


# ---------------------------------------------------------------- toughness

def toughness(adj: list[int], n: int):
    """Return ``(kind, num, den, mask, comps)``.

    Only cutsets free of simplicial vertices are scanned: dropping a
    simplicial vertex from a cutset never raises its ratio, so every
    minimiser lives there.  Ties go to the smallest mask.
    """
    if is_complete(adj, n):
        return (INFINITE, 0, 1, 0, 1 if n else 0)
    full = _full(n)
    w0 = count_components(adj, full)
    if w0 != 1:
        return (FINITE, 0, 1, 0, w0)
    cand = full & ~simplicial_mask(adj, n)
    best_num = best_den = 0
    best_mask = -1
    best_comps = 0
    s = 0
    while True:
        s = (s - cand) & cand
        if s == 0:
            break
        k = _popcount(s)
        if best_mask >= 0 and k * best_den >= best_num * (n - k):
            continue
        w = count_components(adj, full & ~s)
        if w < 2:
            continue
        if best_mask < 0 or k * best_den < best_num * w:
            best_num, best_den, best_mask, best_comps = k, w, s, w
    g = gcd(best_num, best_den)
    return (FINITE, best_num // g, best_den // g, best_mask, best_comps)


def toughness_plain(adj: list[int], n: int):
    """Unpruned scan over every vertex subset; the oracle for :func:`toughness`."""
    if is_complete(adj, n):
        return (INFINITE, 0, 1, 0, 1 if n else 0)
    full = _full(n)
    w0 = count_components(adj, full)
    if w0 != 1:
        return (FINITE, 0, 1, 0, w0)
    best = None
    for s in range(1, full):
        w = count_components(adj, full & ~s)
        if w < 2:
            continue
        k = _popcount(s)
        if best is None or k * best[1] < best[0] * w:
            best = (k, w, s)
    g = gcd(best[0], best[1])
    return (FINITE, best[0] // g, best[1] // g, best[2], best[1])


def find_cutset_below(adj: list[int], n: int, p: int, q: int) -> int:
    """Some cutset ``S`` (the empty set if disconnected) with ``|S|/w(G-S) < p/q``, else -1."""
    full = _full(n)
    w0 = count_components(adj, full)
    if w0 >= 2:
        return 0 if p > 0 else -1
    cand = full & ~simplicial_mask(adj, n)
    s = 0
    while True:
        s = (s - cand) & cand
        if s == 0:
            return -1
        k = _popcount(s)
        if k * q >= p * (n - k):
            continue
        w = count_components(adj, full & ~s)
        if w >= 2 and k * q < p * w:
            return s


def minimality(adj: list[int], n: int):
    """``(minimal, num, den, u, v)`` for a connected noncomplete graph.

    ``(u, v)`` is the first edge, in lexicographic order, whose deletion
    leaves the toughness unchanged; ``(-1, -1)`` when every deletion lowers it.
    """
    _, p, q, _, _ = toughness(adj, n)
    for u in range(n):
        for v in _bits(adj[u] >> (u + 1)):
            v += u + 1
            if find_cutset_below(_without_edge(adj, u, v), n, p, q) < 0:
                return (False, p, q, u, v)
    return (True, p, q, -1, -1)


def vertex_connectivity(adj: list[int], n: int) -> int:
    if is_complete(adj, n):
        return max(n - 1, 0)
    full = _full(n)
    if count_components(adj, full) != 1:
        return 0
    best = n
    for s in range(1, full):
        k = _popcount(s)
        if k < best and count_components(adj, full & ~s) >= 2:
            best = k
    return best


def min_separator(adj: list[int], n: int, u: int, v: int):
    """Smallest (then lowest-mask) ``S`` avoiding ``u, v`` that separates them; ``u, v`` nonadjacent."""
    full = _full(n)
    rest = full & ~(1 << u) & ~(1 << v)
    best_k = n + 1
    best_s = -1
    s = 0
    while True:
        k = _popcount(s)
        if k < best_k and not (_reach(adj, full & ~s, u) >> v) & 1:
            best_k, best_s = k, s
        s = (s - rest) & rest
        if s == 0:
            break
    return (best_k, best_s)


def edge_witness(adj: list[int], n: int, u: int, v: int, p: int, q: int):
    """``(paths, cond_a, checked, failing)`` for edge ``uv`` at toughness ``p/q``."""
    full = _full(n)
    adj2 = _without_edge(adj, u, v)
    paths = 1 + min_separator(adj2, n, u, v)[0]
    cond_a = paths * q >= 2 * p + q
    rest = full & ~(1 << u) & ~(1 << v)
    checked = 0
    s = 0
    while True:
        alive = full & ~s
        if not (_reach(adj2, alive, u) >> v) & 1:
            w = count_components(adj, alive)
            if w >= 2:
                checked += 1
                if _popcount(s) * q < (w + 1) * p:
                    return (paths, cond_a, checked, s)
        s = (s - rest) & rest
        if s == 0:
            break
    return (paths, cond_a, checked, -1)


def modified_degrees(adj: list[int], n: int) -> list[int]:
    full = _full(n)
    return [count_components(adj, full & ~(1 << v)) for v in range(n)]


# ----------------------------------------------------------------- chordal

def lexbfs(adj: list[int], n: int) -> list[int]:
    """LexBFS visit order; ties to the smallest id, so the scan starts at 0.

    A label is a bitmask whose bit ``n-1-i`` records a visited neighbour
    at step ``i``; integer order on these masks is lexicographic order on
    the label sequences.
    """
    labels = [0] * n
    unvisited = _full(n)
    order = []
    for i in range(n):
        best = -1
        for v in _bits(unvisited):
            if best < 0 or labels[v] > labels[best]:
                best = v
        order.append(best)
        unvisited &= ~(1 << best)
        for w in _bits(adj[best] & unvisited):
            labels[w] |= 1 << (n - 1 - i)
    return order


def is_peo(adj: list[int], n: int, order: list[int]) -> bool:
    later = _full(n)
    for v in order:
        later &= ~(1 << v)
        nb = adj[v] & later
        for w in _bits(nb):
            if (nb & ~(1 << w)) & ~adj[w]:
                return False
    return True


def is_chordal(adj: list[int], n: int):
    order = lexbfs(adj, n)
    order.reverse()
    return order if is_peo(adj, n, order) else None


def peo_cliques(adj: list[int], n: int, peo: list[int]) -> list[int]:
    """Maximal cliques from a perfect elimination order, sorted by member tuple."""
    later = _full(n)
    cands = []
    for v in peo:
        later &= ~(1 << v)
        cands.append((1 << v) | (adj[v] & later))
    out = [c for c in cands if not any(c != d and c & d == c for d in cands)]
    out.sort(key=lambda c: list(_bits(c)))
    return out


def clique_tree_edges(cliques: list[int]):
    """Maximum-weight spanning forest; candidate edges ordered by weight desc, then index pair."""
    k = len(cliques)
    cand = []
    for i in range(k):
        for j in range(i + 1, k):
            w = _popcount(cliques[i] & cliques[j])
            if w:
                cand.append((-w, i, j))
    cand.sort()
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out = []
    for nw, i, j in cand:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            out.append((i, j, -nw))
    return out


def _tree_adjacency(k: int, edges) -> list[int] | None:
    tadj = [0] * k
    for i, j, _ in edges:
        if not (0 <= i < k and 0 <= j < k) or i == j or (tadj[i] >> j) & 1:
            return None
        tadj[i] |= 1 << j
        tadj[j] |= 1 << i
    if len(edges) != k - 1 or (k and count_components(tadj, _full(k)) != 1):
        return None
    return tadj


def verify_clique_intersection(cliques: list[int], edges) -> bool:
    k = len(cliques)
    tadj = _tree_adjacency(k, edges)
    if tadj is None:
        return False
    for a in range(k):
        # parents of a BFS tree rooted at a give every a-b path
        parent = [-1] * k
        seen = 1 << a
        queue = [a]
        for x in queue:
            for y in _bits(tadj[x] & ~seen):
                seen |= 1 << y
                parent[y] = x
                queue.append(y)
        for b in range(a + 1, k):
            common = cliques[a] & cliques[b]
            x = b
            while x != a:
                if common & ~cliques[x]:
                    return False
                x = parent[x]
    return True


def verify_induced_subtree(cliques: list[int], edges, n: int) -> bool:
    k = len(cliques)
    tadj = _tree_adjacency(k, edges)
    if tadj is None:
        return False
    for v in range(n):
        holders = 0
        for i in range(k):
            if (cliques[i] >> v) & 1:
                holders |= 1 << i
        if holders == 0 or count_components(tadj, holders) != 1:
            return False
    return True


# ---------------------------------------------------------------- interval

def find_asteroidal_triple(adj: list[int], n: int):
    full = _full(n)
    for x in range(n):
        for y in range(x + 1, n):
            if (adj[x] >> y) & 1:
                continue
            for z in range(y + 1, n):
                if (adj[x] >> z) & 1 or (adj[y] >> z) & 1:
                    continue
                if not (_reach(adj, full & ~adj[z], x) >> y) & 1:
                    continue
                if not (_reach(adj, full & ~adj[y], x) >> z) & 1:
                    continue
                if not (_reach(adj, full & ~adj[x], y) >> z) & 1:
                    continue
                return (x, y, z)
    return None


# ------------------------------------------------------------------ TT-graphs

def tt_decompose(adj: list[int], n: int):
    """``(code, triangles)``; code ``TT_OK`` iff every block is an edge or a
    triangle and every triangle vertex has maximum modified degree."""
    if is_complete(adj, n):
        return (TT_COMPLETE, [])
    full = _full(n)
    if count_components(adj, full) != 1:
        return (TT_DISCONNECTED, [])
    tris = set()
    for u in range(n):
        for v in _bits(adj[u] >> (u + 1)):
            v += u + 1
            common = adj[u] & adj[v]
            c = _popcount(common)
            if c == 0:
                if (_reach(_without_edge(adj, u, v), full, u) >> v) & 1:
                    return (TT_BAD_BLOCK, [])
            elif c == 1:
                w = common.bit_length() - 1
                tri = tuple(sorted((u, v, w)))
                if tri in tris:
                    continue
                a, b, c3 = tri
                cut = _without_edge(_without_edge(_without_edge(adj, a, b), a, c3), b, c3)
                ra = _reach(cut, full, a)
                if (ra >> b) & 1 or (ra >> c3) & 1 or (_reach(cut, full, b) >> c3) & 1:
                    return (TT_BAD_BLOCK, [])
                tris.add(tri)
            else:
                return (TT_BAD_BLOCK, [])
    md = modified_degrees(adj, n)
    mu = max(md)
    for tri in tris:
        if any(md[x] < mu for x in tri):
            return (TT_LOW_MD, [])
    return (TT_OK, sorted(tris))


def claw_tree(adj: list[int], n: int, triangles) -> list[int]:
    """Replace triangle ``k`` by a claw on a fresh centre ``n + k``; keep every other edge."""
    m = n + len(triangles)
    tadj = [0] * m
    for u in range(n):
        tadj[u] = adj[u]
    for k, (a, b, c) in enumerate(triangles):
        for x, y in ((a, b), (a, c), (b, c)):
            tadj[x] &= ~(1 << y)
            tadj[y] &= ~(1 << x)
        centre = n + k
        for x in (a, b, c):
            tadj[x] |= 1 << centre
            tadj[centre] |= 1 << x
    return tadj


def tt_replay(tree_adj: list[int], n: int, ymask: int) -> list[int]:
    """Delete ``Y`` and join each deleted vertex's neighbours pairwise; kept vertices renumbered ascending."""
    kept = [v for v in range(n) if not (ymask >> v) & 1]
    index = {v: i for i, v in enumerate(kept)}
    out = [0] * len(kept)
    for v in kept:
        row = 0
        for w in _bits(tree_adj[v] & ~ymask):
            row |= 1 << index[w]
        out[index[v]] = row
    for y in _bits(ymask):
        nb = [index[w] for w in _bits(tree_adj[y]) if w in index]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                out[nb[i]] |= 1 << nb[j]
                out[nb[j]] |= 1 << nb[i]
    return out


def _degrees(adj: list[int], n: int) -> list[int]:
    return [_popcount(adj[v]) for v in range(n)]


def tt_validate(tree_adj: list[int], n: int, ymask: int):
    """``(code, case)`` with ``case`` in ``{"a", "b", ""}``."""
    if n == 0 or sum(_degrees(tree_adj, n)) != 2 * (n - 1) \
            or count_components(tree_adj, _full(n)) != 1:
        return (TREE_NOT_TREE, "")
    deg = _degrees(tree_adj, n)
    delta = max(deg)
    if delta < 3:
        return (TREE_LOW_DEGREE, "")
    for y in _bits(ymask):
        if tree_adj[y] & ymask:
            return (TREE_Y_DEPENDENT, "")
    for y in _bits(ymask):
        if deg[y] != 3:
            return (TREE_Y_DEGREE, "")
    nbrs = 0
    for y in _bits(ymask):
        nbrs |= tree_adj[y]
    nb_deg = {deg[w] for w in _bits(nbrs)}
    deg3 = sum(1 << v for v in range(n) if deg[v] == 3)
    if ymask and delta == 3 and ymask == deg3 and nb_deg == {2}:
        return (TREE_OK, "a")
    if nb_deg <= {delta}:
        return (TREE_OK, "b")
    return (TREE_NEIGHBOR_DEGREE, "")


def valid_removal_sets(tree_adj: list[int], n: int):
    """Every ``(ymask, case)`` accepted by :func:`tt_validate`, ``Y = 0`` included."""
    if n == 0:
        return []
    deg = _degrees(tree_adj, n)
    delta = max(deg)
    if delta < 3:
        return []
    out = []
    deg3 = sum(1 << v for v in range(n) if deg[v] == 3)
    if delta == 3 and all(not (tree_adj[y] & deg3) for y in _bits(deg3)) \
            and all(deg[w] == 2 for y in _bits(deg3) for w in _bits(tree_adj[y])):
        out.append((deg3, "a"))
    cand = [y for y in _bits(deg3) if all(deg[w] == delta for w in _bits(tree_adj[y]))]
    for sub in range(1 << len(cand)):
        ymask = 0
        for i, y in enumerate(cand):
            if (sub >> i) & 1:
                ymask |= 1 << y
        if all(not (tree_adj[y] & ymask) for y in _bits(ymask)):
            out.append((ymask, "b"))
    out.sort()
    return out


def prufer_tree(n: int, index: int) -> list[int]:
    """Labelled tree number ``index`` in ``0 .. n**(n-2) - 1``; base-``n`` digits of ``index`` form the Pruefer code."""
    adj = [0] * n
    if n < 2:
        return adj
    seq = []
    for _ in range(n - 2):
        seq.append(index % n)
        index //= n
    seq.reverse()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    for x in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                break
        adj[leaf] |= 1 << x
        adj[x] |= 1 << leaf
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return adj


# ------------------------------------------------------------------ sweeps

def select_graphs(n: int, start: int, stop: int, connected: bool, chordal: bool,
                  noncomplete: bool) -> list[int]:
    """Edge masks in ``[start, stop)`` passing the requested filters."""
    full = _full(n)
    complete = (1 << (n * (n - 1) // 2)) - 1
    out = []
    for emask in range(start, stop):
        if noncomplete and emask == complete:
            continue
        adj = adjacency_from_edge_mask(n, emask)
        if connected and count_components(adj, full) != 1:
            continue
        if chordal and is_chordal(adj, n) is None:
            continue
        out.append(emask)
    return out


# ------------------------------------------------------------------ oracles

def has_induced_long_cycle(adj: list[int], n: int) -> bool:
    """Brute force: some vertex set of size >= 4 induces a connected 2-regular graph."""
    for s in range(1 << n):
        if _popcount(s) < 4:
            continue
        if all(_popcount(adj[v] & s) == 2 for v in _bits(s)) and count_components(adj, s) == 1:
            return True
    return False


def brute_maximal_cliques(adj: list[int], n: int) -> list[int]:
    full = _full(n)
    out = []
    for s in range(1, 1 << n):
        if any((s & ~(1 << v)) & ~adj[v] for v in _bits(s)):
            continue
        if any((s & ~adj[w]) == 0 for w in _bits(full & ~s)):
            continue
        out.append(s)
    out.sort(key=lambda c: list(_bits(c)))
    return out


def interval_model_exists(adj: list[int], n: int) -> bool:
    """Search over left-to-right endpoint sequences of an interval model.

    Opening ``v`` needs every open interval adjacent to ``v``; closing ``v``
    needs all of ``N(v)`` opened.  Closing as soon as allowed is never
    worse, so a state is just the set of opened vertices.
    """
    full = _full(n)
    seen = {0}
    stack = [0]
    while stack:
        opened = stack.pop()
        if opened == full:
            return True
        still_open = 0
        for w in _bits(opened):
            if adj[w] & ~opened:
                still_open |= 1 << w
        for v in _bits(full & ~opened):
            if still_open & ~adj[v]:
                continue
            nxt = opened | (1 << v)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return n == 0
