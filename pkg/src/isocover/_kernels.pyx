# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts and tie-breaking as ``_pykernels``."""
from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int8_t, int32_t

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAX_N = 30


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t component(const uint64_t* adj, uint64_t allowed, int start) nogil:
    cdef uint64_t comp = (<uint64_t>1) << start
    cdef uint64_t frontier = comp
    cdef uint64_t reach, f
    while frontier:
        reach = 0
        f = frontier
        while f:
            reach |= adj[lowbit(f)]
            f &= f - 1
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


cdef int load_adj(object adj, uint64_t* out) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > MAX_N:
        raise ValueError(f"compiled kernels support at most {MAX_N} vertices")
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return n


def treewidth_dp(adj):
    cdef uint64_t cadj[MAX_N]
    cdef int n = load_adj(adj, cadj)
    if n == 0:
        return -1, []
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t size = (<uint64_t>1) << n
    cdef int8_t* tw = <int8_t*>malloc(size)
    cdef int8_t* choice = <int8_t*>malloc(size)
    if tw == NULL or choice == NULL:
        free(tw)
        free(choice)
        raise MemoryError()
    cdef uint64_t S, rest, comp, nb, bits, c
    cdef int v, best, arg, sub, q, cost
    with nogil:
        tw[0] = -1
        S = 1
        while S < size:
            best = n + 1
            arg = -1
            bits = S
            while bits:
                v = lowbit(bits)
                bits &= bits - 1
                rest = S ^ ((<uint64_t>1) << v)
                sub = tw[rest]
                if sub >= best:
                    continue
                comp = component(cadj, rest | ((<uint64_t>1) << v), v)
                nb = 0
                c = comp
                while c:
                    nb |= cadj[lowbit(c)]
                    c &= c - 1
                q = popcount(nb & ~comp & full & ~rest)
                cost = sub if sub > q else q
                if cost < best:
                    best = cost
                    arg = v
            tw[S] = <int8_t>best
            choice[S] = <int8_t>arg
            S += 1
    order = []
    S = full
    while S:
        v = choice[S]
        order.append(v)
        S ^= (<uint64_t>1) << v
    order.reverse()
    width = tw[full]
    free(tw)
    free(choice)
    return width, order


def vertex_separation_dp(adj):
    cdef uint64_t cadj[MAX_N]
    cdef int n = load_adj(adj, cadj)
    if n == 0:
        return -1, []
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t size = (<uint64_t>1) << n
    cdef int8_t* vs = <int8_t*>malloc(size)
    cdef int8_t* choice = <int8_t*>malloc(size)
    if vs == NULL or choice == NULL:
        free(vs)
        free(choice)
        raise MemoryError()
    cdef uint64_t S, outside, bits
    cdef int u, v, boundary, best, arg, sub
    with nogil:
        vs[0] = 0
        S = 1
        while S < size:
            boundary = 0
            outside = full & ~S
            bits = S
            while bits:
                u = lowbit(bits)
                bits &= bits - 1
                if cadj[u] & outside:
                    boundary += 1
            best = n + 1
            arg = -1
            bits = S
            while bits:
                v = lowbit(bits)
                bits &= bits - 1
                sub = vs[S ^ ((<uint64_t>1) << v)]
                if sub < best:
                    best = sub
                    arg = v
            vs[S] = <int8_t>(boundary if boundary > best else best)
            choice[S] = <int8_t>arg
            S += 1
    order = []
    S = full
    while S:
        v = choice[S]
        order.append(v)
        S ^= (<uint64_t>1) << v
    order.reverse()
    width = vs[full]
    free(vs)
    free(choice)
    return width, order


def treedepth_dp(adj):
    cdef uint64_t cadj[MAX_N]
    cdef int n = load_adj(adj, cadj)
    if n == 0:
        return 0, []
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t size = (<uint64_t>1) << n
    cdef int8_t* td = <int8_t*>malloc(size)
    cdef int8_t* choice = <int8_t*>malloc(size)
    if td == NULL or choice == NULL:
        free(td)
        free(choice)
        raise MemoryError()
    cdef uint64_t S, comp, bits
    cdef int v, a, b, best, arg, sub
    with nogil:
        td[0] = 0
        choice[0] = -1
        S = 1
        while S < size:
            comp = component(cadj, S, lowbit(S))
            if comp != S:
                a = td[comp]
                b = td[S ^ comp]
                td[S] = <int8_t>(a if a > b else b)
                choice[S] = -1
                S += 1
                continue
            best = n + 1
            arg = -1
            bits = S
            while bits:
                v = lowbit(bits)
                bits &= bits - 1
                sub = td[S ^ ((<uint64_t>1) << v)]
                if sub < best:
                    best = sub
                    arg = v
            td[S] = <int8_t>(best + 1)
            choice[S] = <int8_t>arg
            S += 1
    parent = [-1] * n
    stack = [(full, -1)]
    while stack:
        S, above = stack.pop()
        if not S:
            continue
        comp = component(cadj, S, lowbit(S))
        if comp != S:
            stack.append((comp, above))
            stack.append((S ^ comp, above))
            continue
        v = choice[S]
        parent[v] = above
        stack.append((S ^ ((<uint64_t>1) << v), v))
    depth = td[full]
    free(td)
    free(choice)
    return depth, parent


def bfs_many(indptr, indices, sources):
    cdef int n = len(indptr) - 1
    cdef int m = len(indices)
    cdef int32_t* ptr = <int32_t*>malloc((n + 1) * sizeof(int32_t))
    cdef int32_t* idx = <int32_t*>malloc((m + 1) * sizeof(int32_t))
    cdef int32_t* dist = <int32_t*>malloc((n + 1) * sizeof(int32_t))
    cdef int32_t* queue = <int32_t*>malloc((n + 1) * sizeof(int32_t))
    if ptr == NULL or idx == NULL or dist == NULL or queue == NULL:
        free(ptr)
        free(idx)
        free(dist)
        free(queue)
        raise MemoryError()
    cdef int i, k, x, y, head, tail, source
    for i in range(n + 1):
        ptr[i] = indptr[i]
    for i in range(m):
        idx[i] = indices[i]
    rows = []
    for source in sources:
        if source < 0 or source >= n:
            free(ptr)
            free(idx)
            free(dist)
            free(queue)
            raise IndexError(f"source {source} out of range")
        with nogil:
            for i in range(n):
                dist[i] = -1
            dist[source] = 0
            head = 0
            tail = 1
            queue[0] = source
            while head < tail:
                x = queue[head]
                head += 1
                for k in range(ptr[x], ptr[x + 1]):
                    y = idx[k]
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        queue[tail] = y
                        tail += 1
        rows.append([dist[i] for i in range(n)])
    free(ptr)
    free(idx)
    free(dist)
    free(queue)
    return rows
