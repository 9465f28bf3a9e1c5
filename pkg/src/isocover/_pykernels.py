"""Pure-Python kernels.

Reference implementations of the hot loops.  ``_kernels.pyx`` mirrors every
function here with the same signature and the same tie-breaking, so the two
backends return identical results.

Graphs are passed as bitmask adjacency: ``adj[i]`` is an int whose bit ``j``
is set iff ``i`` and ``j`` are adjacent.  BFS takes CSR arrays instead.
"""
from collections import deque

BACKEND = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _component(adj, allowed, start):
    """Bitmask of the component of ``start`` inside ``allowed``."""
    comp = 1 << start
    frontier = comp
    while frontier:
        reach = 0
        for i in _bits(frontier):
            reach |= adj[i]
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


def treewidth_dp(adj):
    """Exact treewidth by DP over vertex subsets.

    ``tw[S]`` is the best width achievable when the vertices of ``S`` are
    eliminated first; eliminating ``v`` after ``S`` costs ``|Q(S, v)|``, the
    set of vertices outside ``S + v`` reachable from ``v`` through ``S``.

    Returns ``(width, order)`` with ``order`` an optimal elimination order.
    """
    n = len(adj)
    if n == 0:
        return -1, []
    full = (1 << n) - 1
    tw = [0] * (1 << n)
    choice = [0] * (1 << n)
    tw[0] = -1
    for S in range(1, 1 << n):
        best = n + 1
        arg = -1
        for v in _bits(S):
            rest = S ^ (1 << v)
            sub = tw[rest]
            if sub >= best:
                continue
            comp = _component(adj, rest | (1 << v), v)
            nb = 0
            for i in _bits(comp):
                nb |= adj[i]
            q = bin(nb & ~comp & full & ~rest).count("1")
            cost = sub if sub > q else q
            if cost < best:
                best = cost
                arg = v
        tw[S] = best
        choice[S] = arg
    order = []
    S = full
    while S:
        v = choice[S]
        order.append(v)
        S ^= 1 << v
    order.reverse()
    return tw[full], order


def vertex_separation_dp(adj):
    """Exact vertex separation number (= pathwidth) by DP over prefixes.

    Returns ``(width, order)``; the linear order realises the width.
    """
    n = len(adj)
    if n == 0:
        return -1, []
    full = (1 << n) - 1
    vs = [0] * (1 << n)
    choice = [0] * (1 << n)
    for S in range(1, 1 << n):
        boundary = 0
        outside = full & ~S
        for u in _bits(S):
            if adj[u] & outside:
                boundary += 1
        best = n + 1
        arg = -1
        for v in _bits(S):
            sub = vs[S ^ (1 << v)]
            if sub < best:
                best = sub
                arg = v
        vs[S] = boundary if boundary > best else best
        choice[S] = arg
    order = []
    S = full
    while S:
        v = choice[S]
        order.append(v)
        S ^= 1 << v
    order.reverse()
    return vs[full], order


def treedepth_dp(adj):
    """Exact treedepth by DP over vertex subsets.

    Returns ``(depth, parent)`` where ``parent[v]`` is the parent of ``v`` in
    an optimal elimination forest, ``-1`` for roots.
    """
    n = len(adj)
    if n == 0:
        return 0, []
    full = (1 << n) - 1
    td = [0] * (1 << n)
    choice = [-1] * (1 << n)
    for S in range(1, 1 << n):
        low = (S & -S).bit_length() - 1
        comp = _component(adj, S, low)
        if comp != S:
            a = td[comp]
            b = td[S ^ comp]
            td[S] = a if a > b else b
            continue
        best = n + 1
        arg = -1
        for v in _bits(S):
            sub = td[S ^ (1 << v)]
            if sub < best:
                best = sub
                arg = v
        td[S] = best + 1
        choice[S] = arg
    parent = [-1] * n
    stack = [(full, -1)]
    while stack:
        S, above = stack.pop()
        if not S:
            continue
        low = (S & -S).bit_length() - 1
        comp = _component(adj, S, low)
        if comp != S:
            stack.append((comp, above))
            stack.append((S ^ comp, above))
            continue
        v = choice[S]
        parent[v] = above
        stack.append((S ^ (1 << v), v))
    return td[full], parent


def bfs_many(indptr, indices, sources):
    """BFS from each source on a CSR graph; ``-1`` marks unreachable vertices."""
    n = len(indptr) - 1
    rows = []
    for source in sources:
        if source < 0 or source >= n:
            raise IndexError(f"source {source} out of range")
        dist = [-1] * n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            d = dist[x] + 1
            for k in range(indptr[x], indptr[x + 1]):
                y = indices[k]
                if dist[y] < 0:
                    dist[y] = d
                    queue.append(y)
        rows.append(dist)
    return rows
