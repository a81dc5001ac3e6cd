# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` function for function."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_KERNEL_ORDER = 64

cdef enum:
    MAXN = 64
    CONNECTIVITY_EVERY = 2
    MAX_GENERATORS = 256


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int v) noexcept nogil:
    return (<uint64_t>1) << v


cdef inline uint64_t full_mask(int n) noexcept nogil:
    if n >= 64:
        return ~(<uint64_t>0)
    return bit(n) - 1


cdef int load(object masks, int n, uint64_t* adj) except -1:
    if n > MAXN:
        raise ValueError(f"kernel order bound is {MAXN}, got {n}")
    cdef int v
    for v in range(n):
        adj[v] = <uint64_t>masks[v]
    return 0


cdef bint reaches_all(const uint64_t* adj, int root, uint64_t region) noexcept nogil:
    cdef uint64_t seen = bit(root)
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[lowbit(f)]
            f &= f - 1
        nxt &= region & ~seen
        seen |= nxt
        frontier = nxt
    return (seen & region) == region


# ---------------------------------------------------------------------------
# Hamiltonian cycles and paths

cdef struct Walk:
    uint64_t adj[MAXN]
    int path[MAXN]
    int n
    int start
    int length


cdef bint cycle_extend(Walk* w, int cur, int depth, uint64_t unvisited) noexcept nogil:
    cdef uint64_t avail, u, cand
    cdef int x, v
    if unvisited == 0:
        return (w.adj[cur] & bit(w.start)) != 0
    avail = unvisited | bit(cur) | bit(w.start)
    u = unvisited
    while u:
        x = lowbit(u)
        u &= u - 1
        if popcount(w.adj[x] & avail) < 2:
            return False
    if depth % CONNECTIVITY_EVERY == 0 and not reaches_all(w.adj, cur, avail):
        return False
    cand = w.adj[cur] & unvisited
    while cand:
        v = lowbit(cand)
        cand &= cand - 1
        w.path[depth] = v
        if cycle_extend(w, v, depth + 1, unvisited & ~bit(v)):
            return True
    return False


cdef bint path_extend(Walk* w, int cur, int depth, uint64_t unvisited) noexcept nogil:
    cdef uint64_t avail, u, cand
    cdef int x, v, c, ends = 0
    if unvisited == 0:
        return True
    avail = unvisited | bit(cur)
    u = unvisited
    while u:
        x = lowbit(u)
        u &= u - 1
        c = popcount(w.adj[x] & avail)
        if c == 0:
            return False
        if c == 1:
            ends += 1
            if ends > 1:
                return False
    if depth % CONNECTIVITY_EVERY == 0 and not reaches_all(w.adj, cur, avail):
        return False
    cand = w.adj[cur] & unvisited
    while cand:
        v = lowbit(cand)
        cand &= cand - 1
        w.path[depth] = v
        if path_extend(w, v, depth + 1, unvisited & ~bit(v)):
            return True
    return False


cdef bint fixed_extend(Walk* w, int cur, int depth, uint64_t unvisited) noexcept nogil:
    cdef uint64_t cand
    cdef int v
    if depth == w.length:
        return (w.adj[cur] >> w.start) & 1
    cand = w.adj[cur] & unvisited
    if depth == w.length - 1:
        cand &= w.adj[w.start]
    while cand:
        v = lowbit(cand)
        cand &= cand - 1
        w.path[depth] = v
        if fixed_extend(w, v, depth + 1, unvisited & ~bit(v)):
            return True
    return False


def hamiltonian_cycle(masks, int n):
    """Return a Hamiltonian cycle as a vertex list, or None."""
    cdef Walk w
    cdef int v
    cdef bint found
    if n < 3:
        return None
    load(masks, n, w.adj)
    for v in range(n):
        if popcount(w.adj[v]) < 2:
            return None
    if not reaches_all(w.adj, 0, full_mask(n)):
        return None
    w.n = n
    w.start = 0
    w.path[0] = 0
    with nogil:
        found = cycle_extend(&w, 0, 1, full_mask(n) & ~bit(0))
    if found:
        return [w.path[v] for v in range(n)]
    return None


def hamiltonian_path(masks, int n):
    """Return a Hamiltonian path as a vertex list, or None."""
    cdef Walk w
    cdef int v, d, nleaves = 0, first_leaf = -1, s, s_end
    cdef bint found = False
    if n == 0:
        return None
    if n == 1:
        return [0]
    load(masks, n, w.adj)
    for v in range(n):
        d = popcount(w.adj[v])
        if d == 0:
            return None
        if d == 1:
            if nleaves == 0:
                first_leaf = v
            nleaves += 1
    if nleaves > 2 or not reaches_all(w.adj, 0, full_mask(n)):
        return None
    w.n = n
    if nleaves:
        s, s_end = first_leaf, first_leaf + 1
    else:
        s, s_end = 0, n
    with nogil:
        while s < s_end:
            w.path[0] = s
            if path_extend(&w, s, 1, full_mask(n) & ~bit(s)):
                found = True
                break
            s += 1
    if found:
        return [w.path[v] for v in range(n)]
    return None


def cycle_of_length(masks, int n, int length):
    """Return a cycle on exactly ``length`` vertices, or None."""
    cdef Walk w
    cdef int s, v
    cdef bint found = False
    if length < 3 or length > n:
        return None
    if length == n:
        return hamiltonian_cycle(masks, n)
    load(masks, n, w.adj)
    w.n = n
    w.length = length
    with nogil:
        for s in range(n - length + 1):
            w.start = s
            w.path[0] = s
            if fixed_extend(&w, s, 1, full_mask(n) & ~(bit(s + 1) - 1)):
                found = True
                break
    if found:
        return [w.path[v] for v in range(length)]
    return None


# ---------------------------------------------------------------------------
# Maximum independent set

cdef struct Mis:
    uint64_t adj[MAXN]
    int best_size
    uint64_t best


cdef int cover_bound(Mis* m, uint64_t p) noexcept nogil:
    cdef int k = 0
    cdef uint64_t clique, cand, wbit
    while p:
        clique = p & (~p + 1)
        cand = p & m.adj[lowbit(clique)]
        while cand:
            wbit = cand & (~cand + 1)
            clique |= wbit
            cand &= m.adj[lowbit(wbit)]
        p &= ~clique
        k += 1
    return k


cdef void mis_rec(Mis* m, uint64_t p, uint64_t chosen, int size) noexcept nogil:
    cdef int forced, pick, pick_deg, v, d
    cdef uint64_t q, b
    while True:
        if p == 0:
            if size > m.best_size:
                m.best_size = size
                m.best = chosen
            return
        forced = -1
        pick = -1
        pick_deg = -1
        q = p
        while q:
            v = lowbit(q)
            q &= q - 1
            d = popcount(m.adj[v] & p)
            if d <= 1:
                forced = v
                break
            if d > pick_deg:
                pick = v
                pick_deg = d
        if forced < 0:
            break
        chosen |= bit(forced)
        size += 1
        p &= ~(m.adj[forced] | bit(forced))
    if size + cover_bound(m, p) <= m.best_size:
        return
    b = bit(pick)
    mis_rec(m, p & ~(m.adj[pick] | b), chosen | b, size + 1)
    mis_rec(m, p & ~b, chosen, size)


def max_independent_set(masks, int n):
    """Return a maximum independent set as a bitmask (branch and bound)."""
    cdef Mis m
    cdef uint64_t raw[MAXN]
    cdef uint64_t row, r
    cdef int order[MAXN]
    cdef int pos[MAXN]
    cdef int deg[MAXN]
    cdef int i, j, v, key
    if n == 0:
        return 0
    load(masks, n, raw)
    for v in range(n):
        deg[v] = popcount(raw[v])
        order[v] = v
    # stable insertion sort by descending degree
    for i in range(1, n):
        key = order[i]
        j = i - 1
        while j >= 0 and deg[order[j]] < deg[key]:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = key
    for i in range(n):
        pos[order[i]] = i
    for i in range(n):
        row = 0
        r = raw[order[i]]
        while r:
            row |= bit(pos[lowbit(r)])
            r &= r - 1
        m.adj[i] = row
    m.best_size = 0
    m.best = 0
    with nogil:
        mis_rec(&m, full_mask(n), 0, 0)
    result = 0
    r = m.best
    while r:
        result |= 1 << order[lowbit(r)]
        r &= r - 1
    return result


# ---------------------------------------------------------------------------
# Canonical labeling

cdef struct Canon:
    uint64_t adj[MAXN]
    int n
    bint have_first
    uint64_t first[MAXN]
    int first_perm[MAXN]
    uint64_t best[MAXN]
    int best_perm[MAXN]
    int ngens
    int* gens


cdef int refine_cells(const uint64_t* adj, int n, uint64_t* cells, int ncells) noexcept nogil:
    cdef uint64_t out[MAXN]
    cdef uint64_t groups[MAXN + 1]
    cdef uint64_t w_cell, x, xs
    cdef int changed = 1
    cdef int wi, xi, nout, c, v, k, ngroups
    while changed:
        changed = 0
        for wi in range(ncells):
            w_cell = cells[wi]
            nout = 0
            for xi in range(ncells):
                x = cells[xi]
                if (x & (x - 1)) == 0:
                    out[nout] = x
                    nout += 1
                    continue
                for k in range(n + 1):
                    groups[k] = 0
                ngroups = 0
                xs = x
                while xs:
                    v = lowbit(xs)
                    xs &= xs - 1
                    c = popcount(adj[v] & w_cell)
                    if groups[c] == 0:
                        ngroups += 1
                    groups[c] |= bit(v)
                if ngroups == 1:
                    out[nout] = x
                    nout += 1
                else:
                    for k in range(n + 1):
                        if groups[k]:
                            out[nout] = groups[k]
                            nout += 1
                    changed = 1
            if changed:
                memcpy(cells, out, nout * sizeof(uint64_t))
                ncells = nout
                break
    return ncells


cdef int compare_rows(const uint64_t* a, const uint64_t* b, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef void add_gen(Canon* st, const int* src_perm, const int* perm) noexcept nogil:
    cdef int i
    cdef int* g
    if st.ngens >= MAX_GENERATORS:
        return
    g = st.gens + st.ngens * MAXN
    for i in range(st.n):
        g[src_perm[i]] = perm[i]
    st.ngens += 1


cdef void leaf(Canon* st, const uint64_t* cells) noexcept nogil:
    cdef int perm[MAXN]
    cdef int pos[MAXN]
    cdef uint64_t rows[MAXN]
    cdef uint64_t row, r
    cdef int i, c, n = st.n
    for i in range(n):
        perm[i] = lowbit(cells[i])
        pos[perm[i]] = i
    for i in range(n):
        row = 0
        r = st.adj[perm[i]]
        while r:
            row |= bit(pos[lowbit(r)])
            r &= r - 1
        rows[i] = row
    if not st.have_first:
        st.have_first = True
        memcpy(st.first, rows, n * sizeof(uint64_t))
        memcpy(st.best, rows, n * sizeof(uint64_t))
        memcpy(st.first_perm, perm, n * sizeof(int))
        memcpy(st.best_perm, perm, n * sizeof(int))
    elif compare_rows(rows, st.first, n) == 0:
        add_gen(st, st.first_perm, perm)
    else:
        c = compare_rows(rows, st.best, n)
        if c < 0:
            memcpy(st.best, rows, n * sizeof(uint64_t))
            memcpy(st.best_perm, perm, n * sizeof(int))
        elif c == 0:
            add_gen(st, st.best_perm, perm)


cdef int uf_find(int* parent, int a) noexcept nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef void orbit_roots(Canon* st, const int* prefix, int plen, int* roots) noexcept nogil:
    cdef int parent[MAXN]
    cdef int gi, i, a, ra, rb
    cdef int* g
    cdef bint fixes
    for a in range(st.n):
        parent[a] = a
    for gi in range(st.ngens):
        g = st.gens + gi * MAXN
        fixes = True
        for i in range(plen):
            if g[prefix[i]] != prefix[i]:
                fixes = False
                break
        if not fixes:
            continue
        for a in range(st.n):
            ra = uf_find(parent, a)
            rb = uf_find(parent, g[a])
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    for a in range(st.n):
        roots[a] = uf_find(parent, a)


cdef void search(Canon* st, const uint64_t* cells, int ncells, int* prefix, int plen) noexcept nogil:
    cdef int t = -1
    cdef int i, v, nexp = 0, nchild
    cdef int explored[MAXN]
    cdef int roots[MAXN]
    cdef uint64_t child[MAXN]
    cdef uint64_t target, rest, b
    cdef bint skip
    for i in range(ncells):
        if cells[i] & (cells[i] - 1):
            t = i
            break
    if t < 0:
        leaf(st, cells)
        return
    target = cells[t]
    rest = target
    while rest:
        v = lowbit(rest)
        rest &= rest - 1
        if nexp and st.ngens:
            orbit_roots(st, prefix, plen, roots)
            skip = False
            for i in range(nexp):
                if roots[v] == roots[explored[i]]:
                    skip = True
                    break
            if skip:
                continue
        b = bit(v)
        for i in range(t):
            child[i] = cells[i]
        child[t] = b
        child[t + 1] = target & ~b
        for i in range(t + 1, ncells):
            child[i + 1] = cells[i]
        nchild = refine_cells(st.adj, st.n, child, ncells + 1)
        prefix[plen] = v
        search(st, child, nchild, prefix, plen + 1)
        explored[nexp] = v
        nexp += 1


def refine(masks, cells):
    """Coarsest equitable refinement of an ordered partition (list of bitmasks)."""
    cdef uint64_t adj[MAXN]
    cdef uint64_t buf[MAXN]
    cdef int n = len(masks), k, i
    load(masks, n, adj)
    k = len(cells)
    for i in range(k):
        buf[i] = <uint64_t>cells[i]
    k = refine_cells(adj, n, buf, k)
    return [buf[i] for i in range(k)]


def canonical_labeling(masks, int n):
    """Return ``(perm, rows)``: the canonical vertex order and relabeled rows."""
    cdef Canon* st
    cdef uint64_t cells[MAXN]
    cdef int prefix[MAXN]
    cdef int ncells, i
    if n == 0:
        return [], ()
    st = <Canon*>malloc(sizeof(Canon))
    if st == NULL:
        raise MemoryError()
    st.gens = <int*>malloc(MAX_GENERATORS * MAXN * sizeof(int))
    if st.gens == NULL:
        free(st)
        raise MemoryError()
    try:
        load(masks, n, st.adj)
        st.n = n
        st.have_first = False
        st.ngens = 0
        cells[0] = full_mask(n)
        with nogil:
            ncells = refine_cells(st.adj, n, cells, 1)
            search(st, cells, ncells, prefix, 0)
        perm = [st.best_perm[i] for i in range(n)]
        rows = tuple([st.best[i] for i in range(n)])
    finally:
        free(st.gens)
        free(st)
    return perm, rows
