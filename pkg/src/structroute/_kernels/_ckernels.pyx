# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the functions in ``_pykernels``."""

from libc.stdlib cimport malloc, free


def reach(int[:] offsets, int[:] nbr, int[:] eid, int n, starts,
          const unsigned char[:] blocked):
    cdef bytearray seen_buf = bytearray(n)
    cdef unsigned char[:] seen = seen_buf
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    cdef int top = 0
    cdef int v, w, k, s
    if stack == NULL:
        raise MemoryError()
    try:
        for s in starts:
            if not seen[s]:
                seen[s] = 1
                stack[top] = s
                top += 1
        while top > 0:
            top -= 1
            v = stack[top]
            for k in range(offsets[v], offsets[v + 1]):
                w = nbr[k]
                if not seen[w] and not blocked[eid[k]]:
                    seen[w] = 1
                    stack[top] = w
                    top += 1
    finally:
        free(stack)
    return seen_buf


def simple_paths(int[:] offsets, int[:] nbr, int[:] eid, int n, int src,
                 int dst, const unsigned char[:] blocked):
    if src == dst:
        return [()]
    cdef list out = []
    cdef int *vert = <int *> malloc((n + 1) * sizeof(int))
    cdef int *slot = <int *> malloc((n + 1) * sizeof(int))
    cdef int *arcs = <int *> malloc((n + 1) * sizeof(int))
    cdef unsigned char *on_path = <unsigned char *> malloc(n + 1)
    cdef int depth, v, k, w, a, j
    if vert == NULL or slot == NULL or arcs == NULL or on_path == NULL:
        free(vert); free(slot); free(arcs); free(on_path)
        raise MemoryError()
    try:
        for j in range(n):
            on_path[j] = 0
        on_path[src] = 1
        vert[0] = src
        slot[0] = offsets[src]
        depth = 0
        while depth >= 0:
            v = vert[depth]
            k = slot[depth]
            if k == offsets[v + 1]:
                on_path[v] = 0
                depth -= 1
                continue
            slot[depth] = k + 1
            w = nbr[k]
            a = eid[k]
            if on_path[w] or blocked[a]:
                continue
            arcs[depth] = a
            if w == dst:
                out.append(tuple([arcs[j] for j in range(depth + 1)]))
                continue
            on_path[w] = 1
            depth += 1
            vert[depth] = w
            slot[depth] = offsets[w]
    finally:
        free(vert); free(slot); free(arcs); free(on_path)
    return out
