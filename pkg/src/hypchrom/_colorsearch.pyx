# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled backtracking color search with unit propagation.

Semantics mirror _colorsearch_py exactly: same visit order, same witness,
same statistics.  The hot state lives in flat C arrays; the propagation
queue, trail, and assignment log are preallocated to worst-case sizes.
"""

from libc.stdlib cimport malloc, free

UNCOLORED = -1

BACKEND = "compiled"

cdef struct SearchState:
    int n
    int k
    int *indptr
    int *indices
    int *colors
    unsigned int *feasible
    int *trail_v          # vertex whose mask changed
    unsigned int *trail_m # previous mask
    long trail_len
    int *assigned
    long assigned_len
    int *queue_v
    unsigned int *queue_b
    long nodes
    long max_depth
    long forced


cdef bint _assign(SearchState *st, int v, unsigned int color_bit) noexcept:
    cdef long qhead = 0, qtail = 0
    cdef int u, w, t, c
    cdef unsigned int bit, old, new
    st.queue_v[qtail] = v
    st.queue_b[qtail] = color_bit
    qtail += 1
    while qhead < qtail:
        u = st.queue_v[qhead]
        bit = st.queue_b[qhead]
        qhead += 1
        if st.colors[u] != -1:
            if st.feasible[u] == bit:
                continue
            return False
        c = 0
        new = bit
        while new > 1:
            new >>= 1
            c += 1
        st.colors[u] = c
        st.assigned[st.assigned_len] = u
        st.assigned_len += 1
        st.trail_v[st.trail_len] = u
        st.trail_m[st.trail_len] = st.feasible[u]
        st.trail_len += 1
        st.feasible[u] = bit
        for t in range(st.indptr[u], st.indptr[u + 1]):
            w = st.indices[t]
            old = st.feasible[w]
            if st.colors[w] != -1:
                if old == bit:
                    return False
                continue
            if old & bit:
                new = old & ~bit
                if new == 0:
                    return False
                st.trail_v[st.trail_len] = w
                st.trail_m[st.trail_len] = old
                st.trail_len += 1
                st.feasible[w] = new
                if (new & (new - 1)) == 0:
                    st.forced += 1
                    st.queue_v[qtail] = w
                    st.queue_b[qtail] = new
                    qtail += 1
    return True


cdef void _rollback(SearchState *st, long trail_mark, long assigned_mark) noexcept:
    while st.assigned_len > assigned_mark:
        st.assigned_len -= 1
        st.colors[st.assigned[st.assigned_len]] = -1
    while st.trail_len > trail_mark:
        st.trail_len -= 1
        st.feasible[st.trail_v[st.trail_len]] = st.trail_m[st.trail_len]


cdef bint _walk(SearchState *st, int vertex) noexcept:
    cdef unsigned int mask, bit
    cdef long t_mark, a_mark
    st.nodes += 1
    if vertex == st.n:
        return True
    if vertex + 1 > st.max_depth:
        st.max_depth = vertex + 1
    if st.colors[vertex] != -1:
        return _walk(st, vertex + 1)
    mask = st.feasible[vertex]
    while mask:
        bit = mask & (~mask + 1)
        mask ^= bit
        t_mark = st.trail_len
        a_mark = st.assigned_len
        if _assign(st, vertex, bit):
            if _walk(st, vertex + 1):
                return True
        _rollback(st, t_mark, a_mark)
    return False


cdef void _free_state(SearchState *st) noexcept:
    if st.indptr != NULL: free(st.indptr)
    if st.indices != NULL: free(st.indices)
    if st.colors != NULL: free(st.colors)
    if st.feasible != NULL: free(st.feasible)
    if st.trail_v != NULL: free(st.trail_v)
    if st.trail_m != NULL: free(st.trail_m)
    if st.assigned != NULL: free(st.assigned)
    if st.queue_v != NULL: free(st.queue_v)
    if st.queue_b != NULL: free(st.queue_b)


def search(n, indptr, indices, k, preassigned):
    """Drop-in replacement for the pure-Python kernel's search()."""
    if k < 1 or k > 32:
        raise ValueError("color count must be between 1 and 32")
    cdef int cn = n
    cdef int ck = k
    cdef long m = len(indices)
    cdef long m_alloc = m if m > 0 else 1
    cdef long trail_cap = 2 * (m + cn) + 64
    cdef long i
    cdef int v, color
    cdef unsigned int bit
    cdef bint ok = True
    cdef bint found = False
    cdef SearchState st
    st.n = cn
    st.k = ck
    st.nodes = 0
    st.max_depth = 0
    st.forced = 0
    st.trail_len = 0
    st.assigned_len = 0
    st.indptr = <int *> malloc((cn + 1) * sizeof(int))
    st.indices = <int *> malloc(m_alloc * sizeof(int))
    st.colors = <int *> malloc(cn * sizeof(int))
    st.feasible = <unsigned int *> malloc(cn * sizeof(unsigned int))
    st.trail_v = <int *> malloc(trail_cap * sizeof(int))
    st.trail_m = <unsigned int *> malloc(trail_cap * sizeof(unsigned int))
    st.assigned = <int *> malloc((cn + 1) * sizeof(int))
    st.queue_v = <int *> malloc((cn + 1) * sizeof(int))
    st.queue_b = <unsigned int *> malloc((cn + 1) * sizeof(unsigned int))
    if (st.indptr == NULL or st.indices == NULL or st.colors == NULL
            or st.feasible == NULL or st.trail_v == NULL or st.trail_m == NULL
            or st.assigned == NULL or st.queue_v == NULL or st.queue_b == NULL):
        _free_state(&st)
        raise MemoryError()

    try:
        for i in range(cn + 1):
            st.indptr[i] = indptr[i]
        for i in range(m):
            st.indices[i] = indices[i]
        for i in range(cn):
            st.colors[i] = -1
            st.feasible[i] = (<unsigned int> 1 << ck) - 1

        for v, color in preassigned:
            bit = <unsigned int> 1 << color
            if st.colors[v] != -1:
                if st.feasible[v] == bit:
                    continue
                ok = False
                break
            if not st.feasible[v] & bit:
                ok = False
                break
            if not _assign(&st, v, bit):
                ok = False
                break

        if ok:
            found = _walk(&st, 0)
        result = [st.colors[i] for i in range(cn)] if found else None
        stats = (st.nodes, st.max_depth, st.forced)
    finally:
        _free_state(&st)
    return result, stats
