"""Exponential-search kernels on int64 adjacency bitsets.

Every function here is numba-compilable; see :mod:`nglab._accel` for the
pure-Python switch.  Inputs are ``adj`` arrays where bit ``u`` of ``adj[v]``
marks the edge ``uv``.  Searches are iterative (explicit stacks) so that they
compile without recursion.
"""

import numpy as np

from ._accel import jit

ALIVE = 1 << 30


@jit
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@jit
def complement_adj(adj):
    n = adj.shape[0]
    full = (np.int64(1) << n) - 1
    out = np.empty(n, np.int64)
    for v in range(n):
        out[v] = full & ~adj[v] & ~(np.int64(1) << v)
    return out


@jit
def adj_from_key(key, n):
    """Adjacency of the graph whose graph6 bit string, read as a numeral, is ``key``."""
    adj = np.zeros(n, np.int64)
    bit = n * (n - 1) // 2 - 1
    for v in range(1, n):
        for u in range(v):
            if (key >> bit) & 1:
                adj[u] |= np.int64(1) << v
                adj[v] |= np.int64(1) << u
            bit -= 1
    return adj


@jit
def key_from_adj(adj):
    n = adj.shape[0]
    key = np.int64(0)
    for v in range(1, n):
        for u in range(v):
            key = (key << 1) | ((adj[v] >> u) & 1)
    return key


# ---------------------------------------------------------------- chromatic


@jit
def greedy_clique_size(adj):
    n = adj.shape[0]
    best = 0
    for s in range(n):
        clique = np.int64(1) << s
        size = 1
        cand = adj[s]
        for v in range(n):
            if (cand >> v) & 1:
                clique |= np.int64(1) << v
                cand &= adj[v]
                size += 1
        if size > best:
            best = size
    return best


@jit
def chromatic_kernel(adj):
    """Exact chromatic number and an optimal 0-based coloring.

    Branch and bound over vertices in descending-degree order (stable, so
    ties go to the lowest index); colors tried lowest first; a greedy clique
    gives the lower bound that ends the search early.
    """
    n = adj.shape[0]
    colors = np.full(n, -1, np.int64)
    if n == 0:
        return 0, colors
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = popcount(adj[v])
    order = np.argsort(-deg, kind="mergesort")
    lb = greedy_clique_size(adj)

    cmask = np.zeros(n, np.int64)
    best = 0
    for i in range(n):
        v = order[i]
        c = 0
        while adj[v] & cmask[c]:
            c += 1
        colors[v] = c
        cmask[c] |= np.int64(1) << v
        if c + 1 > best:
            best = c + 1
    bestcol = colors.copy()
    if best <= lb:
        return best, bestcol

    colors[:] = -1
    cmask[:] = 0
    trycol = np.zeros(n, np.int64)
    nused = np.zeros(n + 1, np.int64)
    pos = 0
    while pos >= 0:
        v = order[pos]
        if colors[v] >= 0:
            cmask[colors[v]] &= ~(np.int64(1) << v)
            colors[v] = -1
        c = trycol[pos]
        limit = nused[pos]
        if limit > best - 2:
            limit = best - 2
        while c <= limit and (adj[v] & cmask[c]) != 0:
            c += 1
        if c > limit:
            pos -= 1
            continue
        colors[v] = c
        cmask[c] |= np.int64(1) << v
        trycol[pos] = c + 1
        used = nused[pos]
        if c + 1 > used:
            used = c + 1
        if pos == n - 1:
            best = used
            bestcol[:] = colors
            if best <= lb:
                break
            continue
        pos += 1
        nused[pos] = used
        trycol[pos] = 0
    return best, bestcol


@jit
def chromatic_number_kernel(adj):
    return chromatic_kernel(adj)[0]


@jit
def chromatic_pairs_for_keys(keys, n):
    """(chi(G), chi(complement G)) for each labeled graph given by edge key."""
    out = np.empty((keys.shape[0], 2), np.int64)
    for i in range(keys.shape[0]):
        adj = adj_from_key(keys[i], n)
        out[i, 0] = chromatic_kernel(adj)[0]
        out[i, 1] = chromatic_kernel(complement_adj(adj))[0]
    return out


# ------------------------------------------------------------ automorphisms


@jit
def automorphism_kernel(adj, fixed):
    """All automorphisms fixing every vertex in bitmask ``fixed``; rows are image arrays.

    Vertices are mapped in index order; a target must match degree and the
    sum of neighbor degrees, and must preserve adjacency to every vertex
    already mapped.
    """
    n = adj.shape[0]
    if n == 0:
        return np.zeros((1, 0), np.int64)
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = popcount(adj[v])
    nsum = np.zeros(n, np.int64)
    for v in range(n):
        for u in range(n):
            if (adj[v] >> u) & 1:
                nsum[v] += deg[u]

    cap = 64
    out = np.empty((cap, n), np.int64)
    count = 0
    img = np.full(n, -1, np.int64)
    nxt = np.zeros(n, np.int64)
    used = np.int64(0)
    i = 0
    while i >= 0:
        if img[i] >= 0:
            used &= ~(np.int64(1) << img[i])
            img[i] = -1
        found = -1
        fixed_i = (fixed >> i) & 1
        t = nxt[i]
        while t < n:
            ok = ((used >> t) & 1) == 0 and deg[t] == deg[i] and nsum[t] == nsum[i]
            if ok and fixed_i and t != i:
                ok = False
            if ok and t != i and ((fixed >> t) & 1):
                ok = False
            if ok:
                for j in range(i):
                    if ((adj[i] >> j) & 1) != ((adj[t] >> img[j]) & 1):
                        ok = False
                        break
            if ok:
                found = t
                break
            t += 1
        if found < 0:
            i -= 1
            continue
        img[i] = found
        used |= np.int64(1) << found
        nxt[i] = found + 1
        if i == n - 1:
            if count == cap:
                bigger = np.empty((cap * 2, n), np.int64)
                bigger[:cap] = out
                out = bigger
                cap *= 2
            out[count] = img
            count += 1
            continue
        i += 1
        nxt[i] = 0
    return out[:count].copy()


# --------------------------------------------------------- distinguishing


@jit
def distinguishing_search(adj, perms, r, proper, find_all):
    """Search colorings with colors 0..r-1 that no row of ``perms`` preserves.

    ``perms`` must exclude the identity.  Colorings are canonical (each new
    color is the smallest unused one) because both properness and the
    distinguishing property are invariant under renaming colors.  A
    permutation is "killed" once some vertex and its image carry different
    colors; a branch dies as soon as a live permutation has its whole support
    colored.  Returns ``(count, colorings)``; with ``find_all`` false the
    search stops at the first hit.
    """
    n = adj.shape[0]
    g = perms.shape[0]
    cap = 1 if not find_all else 64
    out = np.empty((cap, n), np.int64)
    count = 0
    if n == 0:
        if g == 0:
            return 1, out[:1].copy()
        return 0, out[:0].copy()
    if r <= 0:
        return 0, out[:0].copy()

    inv = np.empty((g, n), np.int64)
    last = np.zeros(g, np.int64)
    for p in range(g):
        for v in range(n):
            inv[p, perms[p, v]] = v
            if perms[p, v] != v:
                last[p] = v
    killed = np.full(g, ALIVE, np.int64)
    colors = np.full(n, -1, np.int64)
    cmask = np.zeros(n, np.int64)
    trycol = np.zeros(n, np.int64)
    nused = np.zeros(n + 1, np.int64)
    pos = 0
    while pos >= 0:
        v = pos
        if colors[v] >= 0:
            for p in range(g):
                if killed[p] == pos:
                    killed[p] = ALIVE
            cmask[colors[v]] &= ~(np.int64(1) << v)
            colors[v] = -1
        c = trycol[pos]
        limit = nused[pos]
        if limit > r - 1:
            limit = r - 1
        if proper:
            while c <= limit and (adj[v] & cmask[c]) != 0:
                c += 1
        if c > limit:
            pos -= 1
            continue
        colors[v] = c
        cmask[c] |= np.int64(1) << v
        trycol[pos] = c + 1
        dead = False
        for p in range(g):
            if killed[p] != ALIVE:
                continue
            w = perms[p, v]
            if w < v and colors[w] != c:
                killed[p] = pos
                continue
            u = inv[p, v]
            if u < v and colors[u] != c:
                killed[p] = pos
                continue
            if last[p] <= pos:
                dead = True
        if dead:
            continue
        if pos == n - 1:
            if count == cap:
                bigger = np.empty((cap * 2, n), np.int64)
                bigger[:cap] = out
                out = bigger
                cap *= 2
            out[count] = colors
            count += 1
            if not find_all:
                break
            continue
        used = nused[pos]
        if c + 1 > used:
            used = c + 1
        pos += 1
        nused[pos] = used
        trycol[pos] = 0
    return count, out[:count].copy()


@jit
def min_distinguishing_colors(adj, perms, start, proper):
    """Smallest r >= start admitting a (proper if asked) distinguishing coloring."""
    n = adj.shape[0]
    if n == 0:
        return 0, np.zeros(0, np.int64)
    r = start
    if r < 1:
        r = 1
    while True:
        count, found = distinguishing_search(adj, perms, r, proper, False)
        if count > 0:
            return r, found[0].copy()
        r += 1


# ----------------------------------------------------------- canonical form


@jit
def canonical_kernel(adj):
    """Minimum edge key over all relabelings, and a relabeling achieving it.

    Positions are filled left to right; placing position k fixes the k
    bits of column k of the upper triangle, which are exactly the next most
    significant key bits.  A branch whose column exceeds the best column at
    that depth is cut; a strictly smaller column resets the deeper bests.
    """
    n = adj.shape[0]
    perm = np.arange(n)
    if n <= 1:
        return np.int64(0), perm
    inf = np.int64(1) << 62
    best_col = np.full(n, inf, np.int64)
    p = np.full(n, -1, np.int64)
    nxt = np.zeros(n, np.int64)
    used = np.int64(0)
    k = 0
    while k >= 0:
        if p[k] >= 0:
            used &= ~(np.int64(1) << p[k])
            p[k] = -1
        found = -1
        col = np.int64(0)
        t = nxt[k]
        while t < n:
            if ((used >> t) & 1) == 0:
                col = np.int64(0)
                for j in range(k):
                    col = (col << 1) | ((adj[t] >> p[j]) & 1)
                if col <= best_col[k]:
                    found = t
                    break
            t += 1
        if found < 0:
            k -= 1
            continue
        if col < best_col[k]:
            best_col[k] = col
            for j in range(k + 1, n):
                best_col[j] = inf
        p[k] = found
        used |= np.int64(1) << found
        nxt[k] = found + 1
        if k == n - 1:
            perm[:] = p
            continue
        k += 1
        nxt[k] = 0
    key = np.int64(0)
    for j in range(1, n):
        key = (key << j) | best_col[j]
    return key, perm


@jit
def canonical_key(adj):
    return canonical_kernel(adj)[0]


@jit
def extension_keys(rep_keys, m):
    """Canonical keys of every one-vertex extension of each graph on m vertices."""
    n = m + 1
    per = np.int64(1) << m
    out = np.empty(rep_keys.shape[0] * per, np.int64)
    idx = 0
    for i in range(rep_keys.shape[0]):
        base = adj_from_key(rep_keys[i], m)
        adj = np.zeros(n, np.int64)
        for s in range(per):
            for u in range(m):
                adj[u] = base[u]
                if (s >> u) & 1:
                    adj[u] |= np.int64(1) << m
            adj[m] = s
            out[idx] = canonical_kernel(adj)[0]
            idx += 1
    return out
