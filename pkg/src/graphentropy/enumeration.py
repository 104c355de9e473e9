"""Isomorph-free generation of graphs and trees, plus canonical forms.

Canonical form. Among all vertex orderings of a graph, take the one whose
upper-triangle adjacency bits (in graph6 column order) are lexicographically
smallest; the graph relabeled by that ordering is the canonical
representative, and its graph6 encoding is the canonical byte string. The
search is individualization-refinement: an equitable partition refinement
splits vertices by their neighbor counts into splitter cells until stable,
and where a non-singleton cell remains, each member is individualized in
turn. Two orderings that produce the same encoding differ by an
automorphism; discovered automorphisms prune sibling branches through their
orbits, which keeps highly symmetric graphs (complete, complete bipartite)
from exploding. Exact but exponential in the worst case; intended for the
orders this package works at (n <= 16).

Generation. Canonical augmentation: a graph on k+1 vertices is produced from
its parent on k vertices by deleting one vertex; fixing, per isomorphism
class, a canonical choice of that deleted vertex makes the parent/child
relation a tree on isomorphism classes, so a DFS from K_1 that only accepts
children whose new vertex is a legitimate canonical deletion point emits
every class exactly once, with no global seen-set. Memory stays linear in
the recursion depth; the emission order (children sorted by edge count then
canonical bytes, within their parent) is deterministic, including under the
optional process-pool sharding.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import networkx as nx

from .graphs import Graph, Graph6Error, parse_graph6, write_graph6

_INF = 1 << 70  # exceeds any column encoding (columns have < 64 bits)
_AUT_CAP = 64  # keep at most this many discovered automorphisms per search


def _refine(n: int, adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Repeatedly split every cell by its members' neighbor counts into each
    splitter cell (sub-cells ordered by count); stops when stable. Cell order
    is preserved, which is what makes the canonical search deterministic.
    """
    cells = [list(c) for c in cells]
    queue = [sum(1 << v for v in c) for c in cells]
    while queue:
        splitter = queue.pop()
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            by_count: dict[int, list[int]] = {}
            for v in cell:
                by_count.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(by_count) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for k in sorted(by_count):
                    sub = by_count[k]
                    new_cells.append(sub)
                    queue.append(sum(1 << v for v in sub))
        if changed:
            cells = new_cells
    return cells


def _canon_search(n: int, adj: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(canonical column encoding, canonical ordering) for the graph.

    The ordering maps position -> original vertex. Column j of an ordering
    is the j-bit integer whose bits are adjacency between position j and
    positions 0..j-1 (earliest position most significant), matching graph6
    bit order, so comparing column tuples compares graph6 bodies.
    """
    if n == 1:
        return (0,), (0,)
    best_cols = [_INF] * n
    best_perm: list[int] | None = None
    auts: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_perm
        added = 0
        idx = len(prefix)
        pruned = False
        while idx < len(cells) and len(cells[idx]) == 1:
            v = cells[idx][0]
            av = adj[v]
            col = 0
            for u in prefix:
                col = (col << 1) | ((av >> u) & 1)
            b = best_cols[idx]
            if col > b:
                pruned = True
                break
            if col < b:
                # this prefix is strictly better than anything recorded:
                # truncate best to it and let the subtree's leaves fill in
                best_cols[idx] = col
                for j in range(idx + 1, n):
                    best_cols[j] = _INF
                best_perm = None
            prefix.append(v)
            added += 1
            idx += 1
        if not pruned:
            if idx == len(cells):
                if best_perm is None:
                    best_perm = prefix.copy()
                elif prefix != best_perm:
                    sigma = [0] * n
                    for pos in range(n):
                        sigma[best_perm[pos]] = prefix[pos]
                    if len(auts) < _AUT_CAP:
                        auts.append(tuple(sigma))
            else:
                cell = cells[idx]
                rest = cells[idx + 1:]
                head = cells[:idx]
                done: set[int] = set()
                for v in cell:
                    if v in done:
                        continue
                    others = [u for u in cell if u != v]
                    child = _refine(n, adj, head + [[v], others] + rest)
                    search(child)
                    # orbit closure of the tried candidates under automorphisms
                    # that fix the current prefix pointwise
                    done.add(v)
                    stable = [s for s in auts if all(s[p] == p for p in prefix)]
                    grew = True
                    while grew:
                        grew = False
                        for s in stable:
                            for u in list(done):
                                w = s[u]
                                if w not in done:
                                    done.add(w)
                                    grew = True
        del prefix[len(prefix) - added:]

    search(_refine(n, adj, [list(range(n))]))
    assert best_perm is not None
    return tuple(best_cols), tuple(best_perm)


def _relabel(n: int, adj: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    """Adjacency of the graph relabeled so position i takes vertex perm[i]."""
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    out = [0] * n
    for v in range(n):
        row = adj[v]
        acc = 0
        while row:
            low = row & -row
            acc |= 1 << pos[low.bit_length() - 1]
            row ^= low
        out[pos[v]] = acc
    return tuple(out)


def _wrap(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph(n, adj, sum(r.bit_count() for r in adj) // 2)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Canonical byte string of a graph; equal bytes iff isomorphic graphs."""

    bytes: bytes

    def graph(self) -> Graph:
        """The canonical representative itself."""
        return parse_graph6(self.bytes.decode("ascii"))


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form of g (positions ordered by the minimal encoding)."""
    if g.n > 16:
        raise ValueError("canonical forms are supported for n <= 16")
    cols, perm = _canon_search(g.n, g.adj)
    return CanonicalForm(write_graph6(_wrap(g.n, _relabel(g.n, g.adj, perm))).encode("ascii"))


def _delete_vertex(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    out = []
    for u in range(len(adj)):
        if u == v:
            continue
        row = adj[u]
        out.append((row & low) | ((row >> (v + 1)) << v))
    return tuple(out)


def _accepted(nc: int, adjc: tuple[int, ...], parent_cols: tuple[int, ...]) -> bool:
    """Is the newest vertex (nc - 1) a canonical deletion point of this child?

    The rule: among vertices minimizing the invariant (degree, sorted
    neighbor degrees), the new vertex must be present, and no other minimal
    vertex may yield a smaller deletion canon than canon(child - new) ==
    canon(parent). This makes each child reachable from exactly one parent
    class; duplicates within one parent are removed by the caller.
    """
    degs = [a.bit_count() for a in adjc]
    vnew = nc - 1
    dn = degs[vnew]
    ties = []
    inv_new: list[int] | None = None
    for v in range(vnew):
        dv = degs[v]
        if dv > dn:
            continue
        if dv < dn:
            return False
        if inv_new is None:
            row = adjc[vnew]
            inv_new = sorted(degs[u.bit_length() - 1] for u in _low_bits(row))
        row = adjc[v]
        inv_v = sorted(degs[u.bit_length() - 1] for u in _low_bits(row))
        if inv_v < inv_new:
            return False
        if inv_v == inv_new:
            ties.append(v)
    for v in ties:
        dcols, _ = _canon_search(nc - 1, _delete_vertex(adjc, v))
        if dcols < parent_cols:
            return False
    return True


def _low_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _children(
    k: int, adj: tuple[int, ...], cols: tuple[int, ...]
) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Accepted, deduplicated children of a canonical representative.

    Returns (m, adjacency, columns) triples for the canonically relabeled
    children on k+1 vertices, sorted by (m, columns).
    """
    nc = k + 1
    degs = [a.bit_count() for a in adj]
    m_parent = sum(degs) // 2
    seen: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
    for x in range(1 << k):
        dn = x.bit_count()
        # the new vertex must end up with minimum degree, else it cannot be
        # a canonical deletion point under the degree-first invariant
        ok = True
        for v in range(k):
            if degs[v] + ((x >> v) & 1) < dn:
                ok = False
                break
        if not ok:
            continue
        child = tuple(adj[v] | (((x >> v) & 1) << k) for v in range(k)) + (x,)
        if not _accepted(nc, child, cols):
            continue
        ccols, perm = _canon_search(nc, child)
        if ccols not in seen:
            seen[ccols] = (m_parent + dn, _relabel(nc, child, perm))
    return sorted((m, a, c) for c, (m, a) in seen.items())


def _expand(
    k: int,
    adj: tuple[int, ...],
    cols: tuple[int, ...],
    n: int,
    connected_only: bool,
) -> Iterator[tuple[int, ...]]:
    """DFS from one representative down to order n, yielding adjacencies."""
    if k == n:
        if not connected_only or _connected(k, adj):
            yield adj
        return
    for _, cadj, ccols in _children(k, adj, cols):
        yield from _expand(k + 1, cadj, ccols, n, connected_only)


def _connected(n: int, adj: tuple[int, ...]) -> bool:
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        row = frontier
        while row:
            low = row & -row
            nxt |= adj[low.bit_length() - 1]
            row ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


_SHARD_DEPTH = 4  # split the DFS at this order when sharding across workers


def _shard_work(args: tuple[tuple[int, ...], int, bool]) -> list[tuple[int, ...]]:
    adj, n, connected_only = args
    k = len(adj)
    cols, _ = _canon_search(k, adj)
    return list(_expand(k, adj, cols, n, connected_only))


def enumerate_graphs(n: int, connected_only: bool = False, workers: int = 1) -> Iterator[Graph]:
    """All graphs on n vertices, one per isomorphism class.

    Streaming and deterministic: the sequence is identical for any
    ``workers`` value. Orders up to 10 are practical (the counts grow as
    1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168); beyond that the
    pure-Python search is honest but slow.
    """
    if not 1 <= n <= 64:
        raise ValueError(f"order must be in 1..64, got {n}")
    seed = ((0,), (0,))  # K_1 and its column encoding
    if workers > 1 and n > _SHARD_DEPTH + 1:
        yield from _parallel(n, connected_only, workers)
        return
    for adj in _expand(1, seed[0], seed[1], n, connected_only):
        yield _wrap(n, adj)


def _parallel(n: int, connected_only: bool, workers: int) -> Iterator[Graph]:
    import multiprocessing

    shards = [
        (adj, n, connected_only)
        for adj in _expand(1, (0,), (0,), _SHARD_DEPTH, False)
    ]
    ctx = multiprocessing.get_context("fork" if os.name == "posix" else "spawn")
    with ctx.Pool(workers) as pool:
        for batch in pool.imap(_shard_work, shards):
            for adj in batch:
                yield _wrap(n, adj)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All free trees on n vertices, one per isomorphism class.

    Level-sequence successor generation (constant amortized time per tree),
    provided by networkx; the single-vertex tree is handled directly.
    """
    if not 1 <= n <= 64:
        raise ValueError(f"order must be in 1..64, got {n}")
    if n == 1:
        yield Graph(1, (0,), 0)
        return
    if n == 2:
        # the successor generator needs n >= 3; K_2 is the only tree here
        yield Graph(2, (2, 1), 1)
        return
    for t in nx.nonisomorphic_trees(n):
        adj = [0] * n
        for u, v in t.edges():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield _wrap(n, tuple(adj))


def stream_graph6(
    lines: Iterable[str],
    strict: bool = True,
    on_error: Callable[[int, Graph6Error], None] | None = None,
) -> Iterator[Graph]:
    """Parse newline-delimited graph6 input, yielding graphs in order.

    Whitespace-only lines are skipped. In strict mode the first bad line
    raises (message includes the 1-based line number); otherwise bad lines
    are reported through ``on_error`` and skipped.
    """
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            wrapped = Graph6Error(f"line {lineno}: {exc}")
            if strict:
                raise wrapped from None
            if on_error is not None:
                on_error(lineno, wrapped)
