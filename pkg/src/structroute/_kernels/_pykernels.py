"""Pure-Python graph kernels.

Graphs are passed in CSR form: for vertex ``v`` the adjacency entries are
``offsets[v]:offsets[v + 1]``; ``nbr[k]`` is the neighbouring vertex and
``eid[k]`` the arc index. ``blocked`` is a byte per arc (nonzero = unusable).
The Cython module ``_ckernels`` implements the same functions.
"""


def reach(offsets, nbr, eid, n, starts, blocked):
    """Return a bytearray flagging every vertex reachable from ``starts``."""
    seen = bytearray(n)
    stack = []
    for s in starts:
        if not seen[s]:
            seen[s] = 1
            stack.append(s)
    while stack:
        v = stack.pop()
        for k in range(offsets[v], offsets[v + 1]):
            w = nbr[k]
            if not seen[w] and not blocked[eid[k]]:
                seen[w] = 1
                stack.append(w)
    return seen


def simple_paths(offsets, nbr, eid, n, src, dst, blocked):
    """All simple ``src -> dst`` paths as tuples of arc indices.

    Adjacency entries are visited in stored order, so with arcs sorted per
    vertex the output is lexicographic in the arc-index sequence.
    """
    if src == dst:
        return [()]
    out = []
    on_path = bytearray(n)
    on_path[src] = 1
    arcs = []
    # iterative DFS; each frame is (vertex, next adjacency slot)
    stack = [[src, offsets[src]]]
    while stack:
        frame = stack[-1]
        v, k = frame
        if k == offsets[v + 1]:
            stack.pop()
            on_path[v] = 0
            if arcs:
                arcs.pop()
            continue
        frame[1] = k + 1
        w = nbr[k]
        a = eid[k]
        if on_path[w] or blocked[a]:
            continue
        if w == dst:
            arcs.append(a)
            out.append(tuple(arcs))
            arcs.pop()
            continue
        on_path[w] = 1
        arcs.append(a)
        stack.append([w, offsets[w]])
    return out
