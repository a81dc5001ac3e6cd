"""Pure-Python hot kernels.

Every routine works on adjacency bit rows: ``masks[v]`` has bit ``u`` set iff
``uv`` is an edge.  The compiled module ``_ckernels`` implements the same
functions with identical results; this module is the fallback when the
extension is unavailable (or ``DEGSEQ_PURE_PYTHON=1``).
"""

MAX_KERNEL_ORDER = 64

# connectivity of the unvisited remainder is re-checked every this many extensions
CONNECTIVITY_EVERY = 2

# cap on stored automorphism generators during canonical search (pruning only)
MAX_GENERATORS = 256


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _popcount(x):
    return bin(x).count("1")


def _reaches_all(masks, root, region):
    """True iff every vertex of ``region`` is reachable from ``root`` inside it."""
    seen = 1 << root
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        nxt &= region & ~seen
        seen |= nxt
        frontier = nxt
    return seen & region == region


# ---------------------------------------------------------------------------
# Hamiltonian cycles and paths


def hamiltonian_cycle(masks, n):
    """Return a Hamiltonian cycle as a vertex list, or None."""
    if n < 3:
        return None
    full = (1 << n) - 1
    for v in range(n):
        if _popcount(masks[v]) < 2:
            return None
    if not _reaches_all(masks, 0, full):
        return None
    path = [0]
    start_bit = 1

    def extend(cur, depth, unvisited):
        if not unvisited:
            return bool(masks[cur] & start_bit)
        avail = unvisited | (1 << cur) | start_bit
        for w in _bits(unvisited):
            if _popcount(masks[w] & avail) < 2:
                return False
        if depth % CONNECTIVITY_EVERY == 0 and not _reaches_all(masks, cur, avail):
            return False
        for v in _bits(masks[cur] & unvisited):
            path.append(v)
            if extend(v, depth + 1, unvisited & ~(1 << v)):
                return True
            path.pop()
        return False

    if extend(0, 1, full & ~1):
        return path
    return None


def hamiltonian_path(masks, n):
    """Return a Hamiltonian path as a vertex list, or None."""
    if n == 0:
        return None
    if n == 1:
        return [0]
    full = (1 << n) - 1
    leaves = []
    for v in range(n):
        d = _popcount(masks[v])
        if d == 0:
            return None
        if d == 1:
            leaves.append(v)
    if len(leaves) > 2 or not _reaches_all(masks, 0, full):
        return None
    starts = leaves[:1] if leaves else range(n)
    path = []

    def extend(cur, depth, unvisited):
        if not unvisited:
            return True
        avail = unvisited | (1 << cur)
        ends = 0
        for w in _bits(unvisited):
            c = _popcount(masks[w] & avail)
            if c == 0:
                return False
            if c == 1:
                ends += 1
                if ends > 1:
                    return False
        if depth % CONNECTIVITY_EVERY == 0 and not _reaches_all(masks, cur, avail):
            return False
        for v in _bits(masks[cur] & unvisited):
            path.append(v)
            if extend(v, depth + 1, unvisited & ~(1 << v)):
                return True
            path.pop()
        return False

    for s in starts:
        path[:] = [s]
        if extend(s, 1, full & ~(1 << s)):
            return list(path)
    return None


def cycle_of_length(masks, n, length):
    """Return a cycle on exactly ``length`` vertices (3 <= length <= n), or None.

    The cycle's smallest vertex is taken as its start, so each start only
    explores larger vertices.
    """
    if length < 3 or length > n:
        return None
    if length == n:
        return hamiltonian_cycle(masks, n)
    full = (1 << n) - 1
    path = []

    def extend(s, cur, depth, unvisited):
        if depth == length:
            return bool(masks[cur] >> s & 1)
        cand = masks[cur] & unvisited
        if depth == length - 1:
            cand &= masks[s]
        for v in _bits(cand):
            path.append(v)
            if extend(s, v, depth + 1, unvisited & ~(1 << v)):
                return True
            path.pop()
        return False

    for s in range(n - length + 1):
        allowed = full & ~((1 << (s + 1)) - 1)
        path[:] = [s]
        if extend(s, s, 1, allowed):
            return list(path)
    return None


# ---------------------------------------------------------------------------
# Maximum independent set


def max_independent_set(masks, n):
    """Return a maximum independent set as a bitmask.

    Branch and bound: vertices of degree <= 1 in the remaining set are taken
    greedily; otherwise branch on a max-degree vertex.  The bound is a greedy
    clique cover in degree order.
    """
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: (-_popcount(masks[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * n
    for i, v in enumerate(order):
        row = 0
        for u in _bits(masks[v]):
            row |= 1 << pos[u]
        adj[i] = row
    best = [0, 0]  # size, mask

    def cover_bound(p):
        k = 0
        while p:
            clique = p & -p
            cand = p & adj[clique.bit_length() - 1]
            while cand:
                w = cand & -cand
                clique |= w
                cand &= adj[w.bit_length() - 1]
            p &= ~clique
            k += 1
        return k

    def rec(p, chosen, size):
        while True:
            if not p:
                if size > best[0]:
                    best[0], best[1] = size, chosen
                return
            forced = -1
            pick, pick_deg = -1, -1
            for v in _bits(p):
                d = _popcount(adj[v] & p)
                if d <= 1:
                    forced = v
                    break
                if d > pick_deg:
                    pick, pick_deg = v, d
            if forced < 0:
                break
            chosen |= 1 << forced
            size += 1
            p &= ~(adj[forced] | (1 << forced))
        if size + cover_bound(p) <= best[0]:
            return
        bit = 1 << pick
        rec(p & ~(adj[pick] | bit), chosen | bit, size + 1)
        rec(p & ~bit, chosen, size)

    rec((1 << n) - 1, 0, 0)
    result = 0
    for i in _bits(best[1]):
        result |= 1 << order[i]
    return result


# ---------------------------------------------------------------------------
# Canonical labeling


def refine(masks, cells):
    """Coarsest equitable refinement of an ordered partition (list of bitmasks).

    Cells split by neighbour count into the first splitter that separates
    anything, sub-cells ordered by ascending count; repeat until stable.
    """
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for w_cell in cells:
            out = []
            for x in cells:
                if not x & (x - 1):
                    out.append(x)
                    continue
                groups = {}
                for v in _bits(x):
                    c = _popcount(masks[v] & w_cell)
                    groups[c] = groups.get(c, 0) | (1 << v)
                if len(groups) == 1:
                    out.append(x)
                else:
                    out.extend(groups[c] for c in sorted(groups))
                    changed = True
            if changed:
                cells = out
                break
    return cells


def _leaf_rows(masks, perm):
    n = len(perm)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for v in perm:
        row = 0
        for u in _bits(masks[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _orbit_roots(n, gens, prefix):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        if any(g[p] != p for p in prefix):
            continue
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(a) for a in range(n)]


def canonical_labeling(masks, n):
    """Return ``(perm, rows)``: the canonical vertex order and relabeled rows.

    ``rows`` is the lexicographically smallest relabeled adjacency over all
    leaves of the individualization-refinement tree; subtrees equivalent under
    automorphisms already found are skipped.
    """
    if n == 0:
        return [], ()
    state = {"first": None, "first_perm": None, "best": None, "best_perm": None, "gens": []}

    def add_gen(src_perm, perm):
        if len(state["gens"]) >= MAX_GENERATORS:
            return
        g = [0] * n
        for a, b in zip(src_perm, perm):
            g[a] = b
        state["gens"].append(g)

    def leaf(cells):
        perm = [c.bit_length() - 1 for c in cells]
        rows = _leaf_rows(masks, perm)
        if state["first"] is None:
            state["first"] = state["best"] = rows
            state["first_perm"] = state["best_perm"] = perm
        elif rows == state["first"]:
            add_gen(state["first_perm"], perm)
        elif rows < state["best"]:
            state["best"], state["best_perm"] = rows, perm
        elif rows == state["best"]:
            add_gen(state["best_perm"], perm)

    def search(cells, prefix):
        t = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                t = i
                break
        if t < 0:
            leaf(cells)
            return
        target = cells[t]
        explored = []
        for v in _bits(target):
            if explored and state["gens"]:
                roots = _orbit_roots(n, state["gens"], prefix)
                if any(roots[v] == roots[u] for u in explored):
                    continue
            bit = 1 << v
            child = cells[:t] + [bit, target & ~bit] + cells[t + 1:]
            search(refine(masks, child), prefix + [v])
            explored.append(v)

    search(refine(masks, [(1 << n) - 1]), [])
    return state["best_perm"], state["best"]
