# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels; mirrors ``_kernels_py`` exactly (same inputs, same outputs)."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef int[::1] _as_ints(object seq):
    import array
    return array.array("i", seq)


def lex_search(offsets, targets, int root, bint depth_first):
    cdef int[::1] off = _as_ints(offsets)
    cdef int[::1] tg = _as_ints(targets)
    cdef Py_ssize_t n = off.shape[0] - 1
    cdef Py_ssize_t m = tg.shape[0]
    # every push is bounded by the edge count, plus the root
    cdef int *buf = <int *> malloc((m + 1) * sizeof(int))
    cdef char *seen = <char *> malloc(n + 1)
    cdef Py_ssize_t top = 0, head = 0, tail = 0, k
    cdef int v, w
    out = []
    if buf == NULL or seen == NULL:
        free(buf); free(seen)
        raise MemoryError()
    memset(seen, 0, n + 1)
    try:
        if depth_first:
            buf[0] = root
            top = 1
            while top > 0:
                top -= 1
                v = buf[top]
                if seen[v]:
                    continue
                seen[v] = 1
                out.append(v)
                k = off[v + 1] - 1
                while k >= off[v]:
                    w = tg[k]
                    if not seen[w]:
                        buf[top] = w
                        top += 1
                    k -= 1
        else:
            buf[0] = root
            tail = 1
            while head < tail:
                v = buf[head]
                head += 1
                if seen[v]:
                    continue
                seen[v] = 1
                out.append(v)
                for k in range(off[v], off[v + 1]):
                    w = tg[k]
                    if not seen[w]:
                        buf[tail] = w
                        tail += 1
    finally:
        free(buf)
        free(seen)
    return out


cdef bint _less(int *p, int *pr, int plen, int *q, int *qr, int qlen, bint shortlex) noexcept:
    cdef int m, i
    if shortlex and plen != qlen:
        return plen < qlen
    m = plen if plen < qlen else qlen
    i = 1
    while i < m and p[i] == q[i]:
        i += 1
    if i == m:
        return plen < qlen
    return pr[i - 1] < qr[i - 1]


def least_proper_path(offsets, targets, int source, int target, bint shortlex):
    cdef int[::1] off = _as_ints(offsets)
    cdef int[::1] tg = _as_ints(targets)
    cdef int n = off.shape[0] - 1
    if source == target:
        return [source]
    cdef int *path = <int *> malloc((n + 1) * sizeof(int))
    cdef int *ranks = <int *> malloc((n + 1) * sizeof(int))
    cdef int *cursor = <int *> malloc((n + 1) * sizeof(int))
    cdef int *best = <int *> malloc((n + 1) * sizeof(int))
    cdef int *best_ranks = <int *> malloc((n + 1) * sizeof(int))
    cdef char *on_path = <char *> malloc(n + 1)
    cdef int depth, v, w, k, best_len = 0, i
    if not (path and ranks and cursor and best and best_ranks and on_path):
        free(path); free(ranks); free(cursor); free(best); free(best_ranks); free(on_path)
        raise MemoryError()
    memset(on_path, 0, n + 1)
    try:
        # path[0..depth] is the current prefix; ranks[i] is the rank of edge path[i] -> path[i+1]
        depth = 0
        path[0] = source
        on_path[source] = 1
        cursor[0] = off[source]
        while depth >= 0:
            v = path[depth]
            k = cursor[depth]
            if k == off[v + 1]:
                on_path[v] = 0
                depth -= 1
                continue
            cursor[depth] = k + 1
            w = tg[k]
            if on_path[w]:
                continue
            ranks[depth] = k - off[v]
            path[depth + 1] = w
            if w == target:
                if best_len == 0 or _less(path, ranks, depth + 2, best, best_ranks, best_len, shortlex):
                    best_len = depth + 2
                    for i in range(best_len):
                        best[i] = path[i]
                    for i in range(best_len - 1):
                        best_ranks[i] = ranks[i]
                continue
            depth += 1
            on_path[w] = 1
            cursor[depth] = off[w]
        if best_len == 0:
            return None
        return [best[i] for i in range(best_len)]
    finally:
        free(path); free(ranks); free(cursor); free(best); free(best_ranks); free(on_path)


def edge_maps(int n_src, src_adj, int n_dst, dst_adj, int src_point, int dst_point, bint pointed):
    cdef unsigned char[::1] sa = bytearray(src_adj)
    cdef unsigned char[::1] da = bytearray(dst_adj)
    out = []
    if n_src == 0:
        out.append(())
        return out
    cdef int *image = <int *> malloc(n_src * sizeof(int))
    cdef int *nxt = <int *> malloc(n_src * sizeof(int))
    cdef int i, j, x, y
    cdef bint ok
    if image == NULL or nxt == NULL:
        free(image); free(nxt)
        raise MemoryError()
    try:
        i = 0
        nxt[0] = 0
        while i >= 0:
            if nxt[i] == n_dst:
                i -= 1
                continue
            x = nxt[i]
            nxt[i] = x + 1
            if pointed and ((i == src_point) != (x == dst_point)):
                continue
            ok = True
            for j in range(i):
                y = image[j]
                if sa[i * n_src + j] and not da[x * n_dst + y]:
                    ok = False
                    break
                if sa[j * n_src + i] and not da[y * n_dst + x]:
                    ok = False
                    break
            if not ok:
                continue
            image[i] = x
            if i == n_src - 1:
                out.append(tuple([image[j] for j in range(n_src)]))
            else:
                i += 1
                nxt[i] = 0
    finally:
        free(image)
        free(nxt)
    return out
