"""Canonical labeling for small graphs.

Strategy: iterated degree refinement fixes an isomorphism-invariant cell
order, then a backtracking search over cell-respecting labelings picks the
one minimizing the packed upper-triangle bit rows.  Two prunes keep the
tree small at the orders we enumerate (n <= 9): only per-depth minimal
rows are extended, and structural twins (equal neighborhoods outside the
pair) branch once.  Worst cases are highly symmetric regular graphs, which
are rare and still cheap at this scale.
"""

from __future__ import annotations

from .graphs import Graph, graph6_encode


def refinement_cells(n: int, adj: tuple[int, ...]) -> list[list[int]]:
    """Stable vertex partition by iterated neighbor-class counting.

    Cells come back in an invariant order (initially by decreasing degree,
    then by the refinement signature chain), each cell sorted by index.
    """
    color = {}
    keys = sorted({m.bit_count() for m in adj}, reverse=True)
    rank = {k: i for i, k in enumerate(keys)}
    for v in range(n):
        color[v] = rank[adj[v].bit_count()]
    ncolors = len(keys)
    while True:
        masks = [0] * ncolors
        for v in range(n):
            masks[color[v]] |= 1 << v
        sig = {
            v: (color[v], tuple((adj[v] & masks[c]).bit_count() for c in range(ncolors)))
            for v in range(n)
        }
        new_keys = sorted(set(sig.values()))
        if len(new_keys) == ncolors:
            break
        new_rank = {k: i for i, k in enumerate(new_keys)}
        color = {v: new_rank[sig[v]] for v in range(n)}
        ncolors = len(new_keys)
    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for v in range(n):
        cells[color[v]].append(v)
    return cells


def _twin_class(n: int, adj: tuple[int, ...]) -> list[int]:
    """Label vertices so twins (same neighbors outside the pair) share an id."""
    cls = list(range(n))
    for u in range(n):
        if cls[u] != u:
            continue
        for v in range(u + 1, n):
            if cls[v] != v:
                continue
            off = ~((1 << u) | (1 << v))
            if adj[u] & off == adj[v] & off:
                cls[v] = u
    return cls


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """Permutation old -> new realizing the canonical labeling."""
    n = g.n
    adj = g.adj
    if n == 1:
        return (0,)
    cells = refinement_cells(n, adj)
    cell_of_pos = []
    for ci, cell in enumerate(cells):
        cell_of_pos.extend([ci] * len(cell))
    twin = _twin_class(n, adj)

    best_rows: list[int] | None = None
    best_perm: list[int] | None = None
    best_gen = 0

    perm = [0] * n
    assigned_mask = 0
    rows = [0] * n
    top = 1 << (n - 1)

    # rows[k]: adjacency of perm[k] to perm[0..k-1], earlier position = higher bit

    def rec(k: int, eq: bool):
        nonlocal best_rows, best_perm, best_gen, assigned_mask
        if k == n:
            if not eq:
                best_rows = rows.copy()
                best_perm = perm.copy()
                best_gen += 1
            return
        candidates = [v for v in cells[cell_of_pos[k]] if not assigned_mask >> v & 1]
        # one branch per twin class; twins give automorphic subtrees
        seen_twins = set()
        reps = []
        for v in candidates:
            if twin[v] not in seen_twins:
                seen_twins.add(twin[v])
                reps.append(v)
        # row value for each representative
        scored = []
        for v in reps:
            av = adj[v]
            r = 0
            for j in range(k):
                if av >> perm[j] & 1:
                    r |= top >> j
            scored.append((r, v))
        rmin = min(s[0] for s in scored)
        for r, v in scored:
            if r != rmin:
                continue  # lex order is settled at this row; larger rows lose
            my_gen = best_gen
            if eq and best_rows is not None:
                if r > best_rows[k]:
                    continue
                child_eq = r == best_rows[k]
            else:
                child_eq = False
            rows[k] = r
            perm[k] = v
            assigned_mask |= 1 << v
            rec(k + 1, child_eq)
            assigned_mask &= ~(1 << v)
            if best_gen != my_gen:
                # best changed inside this subtree, so our prefix now ties it
                eq = rows[:k] == best_rows[:k]

    rec(0, False)
    out = [0] * n
    for new_pos, v in enumerate(best_perm):
        out[v] = new_pos
    return tuple(out)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_permutation(g))


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant: order plus canonical adjacency masks."""
    cg = canonical_graph(g)
    return (cg.n, cg.adj)


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_graph(g))
