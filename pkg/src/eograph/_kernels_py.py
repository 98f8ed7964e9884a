"""Pure-Python kernels. Same contract as the compiled ``_kernels`` module.

Graphs arrive in compressed-row form: the out-neighbours of vertex ``i`` are
``targets[offsets[i]:offsets[i + 1]]``, listed in neighbourhood order, so the
rank of an edge is its position inside that slice.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence


def lex_search(offsets: Sequence[int], targets: Sequence[int], root: int, depth_first: bool) -> list[int]:
    """Visit order of the lexicographic DFS/BFS from ``root`` (reachable vertices only)."""
    n = len(offsets) - 1
    seen = [False] * n
    order: list[int] = []
    if depth_first:
        stack = [root]
        while stack:
            v = stack.pop()
            if seen[v]:
                continue
            seen[v] = True
            order.append(v)
            for k in range(offsets[v + 1] - 1, offsets[v] - 1, -1):
                w = targets[k]
                if not seen[w]:
                    stack.append(w)
    else:
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if seen[v]:
                continue
            seen[v] = True
            order.append(v)
            for k in range(offsets[v], offsets[v + 1]):
                w = targets[k]
                if not seen[w]:
                    queue.append(w)
    return order


def _less(p: list[int], pr: list[int], q: list[int], qr: list[int], shortlex: bool) -> bool:
    # p, q: co-initial vertex sequences; pr, qr: ranks of their edges
    if shortlex and len(p) != len(q):
        return len(p) < len(q)
    m = min(len(p), len(q))
    i = 1
    while i < m and p[i] == q[i]:
        i += 1
    if i == m:
        return len(p) < len(q)
    return pr[i - 1] < qr[i - 1]


def least_proper_path(
    offsets: Sequence[int], targets: Sequence[int], source: int, target: int, shortlex: bool
) -> list[int] | None:
    """Enumerate every proper path ``source -> target`` and keep the least one.

    Each finished path is compared against the incumbent with the literal
    first-divergent-edge rule; no pruning, so the cost is the proper-path count.
    """
    if source == target:
        return [source]
    n = len(offsets) - 1
    on_path = [False] * n
    path = [source]
    ranks: list[int] = []
    best: list[int] | None = None
    best_ranks: list[int] = []
    on_path[source] = True
    # iterative DFS: cursor[d] is the next slot to try at depth d
    cursor = [offsets[source]]
    while cursor:
        v = path[-1]
        k = cursor[-1]
        if k == offsets[v + 1]:
            cursor.pop()
            on_path[path.pop()] = False
            if ranks:
                ranks.pop()
            continue
        cursor[-1] = k + 1
        w = targets[k]
        if on_path[w]:
            continue
        rank = k - offsets[v]
        if w == target:
            cand = path + [w]
            cand_ranks = ranks + [rank]
            if best is None or _less(cand, cand_ranks, best, best_ranks, shortlex):
                best, best_ranks = cand, cand_ranks
            continue
        path.append(w)
        ranks.append(rank)
        on_path[w] = True
        cursor.append(offsets[w])
    return best


def edge_maps(
    n_src: int,
    src_adj: Sequence[int],
    n_dst: int,
    dst_adj: Sequence[int],
    src_point: int,
    dst_point: int,
    pointed: bool,
) -> list[tuple[int, ...]]:
    """All maps ``src -> dst`` sending edges to edges, in lexicographic order of image tuples.

    ``src_adj``/``dst_adj`` are row-major 0/1 adjacency matrices. With
    ``pointed`` the source point, and only it, must land on the target point.
    """
    out: list[tuple[int, ...]] = []
    image = [0] * n_src

    def extend(i: int) -> None:
        if i == n_src:
            out.append(tuple(image))
            return
        for x in range(n_dst):
            if pointed and ((i == src_point) != (x == dst_point)):
                continue
            ok = True
            for j in range(i):
                y = image[j]
                if src_adj[i * n_src + j] and not dst_adj[x * n_dst + y]:
                    ok = False
                    break
                if src_adj[j * n_src + i] and not dst_adj[y * n_dst + x]:
                    ok = False
                    break
            if ok:
                image[i] = x
                extend(i + 1)

    if n_src:
        extend(0)
    else:
        out.append(())
    return out
