"""Normal-graph representation of elementary trapping sets.

The induced subgraph of an elementary set reduces losslessly to a simple
graph on the variable nodes: every satisfied (degree-2) check becomes an
edge, every unsatisfied (degree-1) check is dropped.  Given the left degree
the reduction inverts exactly, so structure enumeration can run over these
small simple graphs instead of bipartite ones.

Cycle lengths double under the reduction: a length-k simple cycle of the
normal graph is a length-2k cycle of the Tanner subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from etskit.errors import GraphConstraintError
from etskit.tanner import Members, TannerGraph, classify, members_of


@dataclass(frozen=True)
class NormalGraph:
    """Connected simple undirected graph on nodes ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        norm = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphConstraintError(f"self-loop at node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphConstraintError(f"edge ({i},{j}) out of range for n={n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if n < 1:
            raise GraphConstraintError("normal graph needs at least one node")
        if not self._is_connected():
            raise GraphConstraintError("normal graph must be connected")

    def _is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        seen = 1
        stack = [0]
        while stack:
            v = stack.pop()
            new = adj[v] & ~seen
            while new:
                w = (new & -new).bit_length() - 1
                new &= new - 1
                seen |= 1 << w
                stack.append(w)
        return seen == (1 << self.n) - 1

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj_masks)

    @property
    def m(self) -> int:
        return len(self.edges)


def to_normal(graph: TannerGraph, s: Members) -> NormalGraph:
    """Reduce the induced subgraph of an elementary in-pool set."""
    members = members_of(graph, s)
    rec = classify(graph, members)
    if not rec.elementary:
        raise GraphConstraintError("set is not elementary, normal graph undefined")
    if not rec.in_t:
        raise GraphConstraintError(
            "set is disconnected or has a member with fewer than two satisfied checks"
        )
    index = {v: i for i, v in enumerate(members)}
    smask = 0
    for v in members:
        smask |= 1 << v
    edges = []
    seen = set()
    for v in members:
        for c in graph.var_adj[v]:
            if c in seen:
                continue
            seen.add(c)
            inside = graph.chk_vmask[c] & smask
            if inside.bit_count() == 2:
                lo = (inside & -inside).bit_length() - 1
                hi = inside.bit_length() - 1
                edges.append((index[lo], index[hi]))
    return NormalGraph(len(members), edges)


def from_normal(n: NormalGraph, d_l: int) -> TannerGraph:
    """Expand a normal graph back to its Tanner form for left degree ``d_l``.

    Check ids are deterministic: one degree-2 check per edge in sorted edge
    order, then the degree-1 checks in node order, so round trips are exact.
    """
    for v, deg in enumerate(n.degrees):
        if deg > d_l:
            raise GraphConstraintError(
                f"node {v} has degree {deg}, above left degree {d_l}"
            )
    var_adj = [[] for _ in range(n.n)]
    for cid, (i, j) in enumerate(n.edges):
        var_adj[i].append(cid)
        var_adj[j].append(cid)
    next_chk = n.m
    for v in range(n.n):
        for _ in range(d_l - n.degrees[v]):
            var_adj[v].append(next_chk)
            next_chk += 1
    return TannerGraph.from_var_adj(var_adj, next_chk)


def normal_b(n: NormalGraph, d_l: int) -> int:
    """Unsatisfied-check count of the expanded set: sum of (d_l - deg)."""
    for v, deg in enumerate(n.degrees):
        if deg > d_l:
            raise GraphConstraintError(
                f"node {v} has degree {deg}, above left degree {d_l}"
            )
    return n.n * d_l - 2 * n.m


def _cycles_upto(n: int, adj: Sequence[int], max_nodes: int):
    """All simple cycles with at most ``max_nodes`` nodes, each once.

    Canonical traversal: smallest node first, direction toward the smaller
    of the two start neighbors.
    """
    out = []
    for start in range(n):
        above = -1 << (start + 1)  # nodes strictly greater than start
        if (adj[start] & above).bit_count() < 2:
            continue
        # path stack: (vertex, visited_mask, path)
        stack = [(start, 1 << start, (start,))]
        while stack:
            v, visited, path = stack.pop()
            nbrs = adj[v]
            if len(path) >= 3 and (nbrs >> start) & 1 and path[1] < path[-1]:
                out.append(path)
            if len(path) == max_nodes:
                continue
            cand = nbrs & ~visited & above
            while cand:
                w = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                stack.append((w, visited | 1 << w, path + (w,)))
    return out


class CycleCensus:
    """Simple cycles of a normal graph, reported at Tanner lengths (2x)."""

    def __init__(self, n: NormalGraph, max_normal_len: int | None = None):
        cap = n.n if max_normal_len is None else min(max_normal_len, n.n)
        counts: dict[int, int] = {}
        sets: dict[int, set[tuple[int, ...]]] = {}
        for path in _cycles_upto(n.n, n.adj_masks, cap):
            length = 2 * len(path)
            counts[length] = counts.get(length, 0) + 1
            sets.setdefault(length, set()).add(tuple(sorted(path)))
        self.counts = dict(sorted(counts.items()))
        self._sets = {k: tuple(sorted(v)) for k, v in sorted(sets.items())}

    @property
    def tanner_lengths(self) -> tuple[int, ...]:
        return tuple(self.counts)

    def node_sets(self, tanner_length: int) -> tuple[tuple[int, ...], ...]:
        return self._sets.get(tanner_length, ())


def normal_cycle_lengths(n: NormalGraph) -> CycleCensus:
    """Census of every simple cycle, keyed by Tanner length."""
    return CycleCensus(n)


def to_text(n: NormalGraph) -> str:
    lines = [f"{n.n} {n.m}"]
    lines += [f"{i} {j}" for i, j in n.edges]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> NormalGraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphConstraintError("expected 'n m' header")
    nn, m = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != m:
        raise GraphConstraintError(f"expected {m} edge lines, got {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphConstraintError(f"bad edge line {' '.join(row)!r}")
        i, j = int(row[0]), int(row[1])
        if not i < j:
            raise GraphConstraintError(f"edge {i} {j} not in i < j form")
        edges.append((i, j))
    return NormalGraph(nn, edges)


def to_graph6(n: NormalGraph) -> str:
    """Standard graph6 line (column-major upper triangle, 6-bit chars)."""
    if n.n > 62:
        raise GraphConstraintError("graph6 support here is limited to n <= 62")
    bits = []
    masks = n.adj_masks
    for j in range(1, n.n):
        for i in range(j):
            bits.append((masks[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + n.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def from_graph6(text: str) -> NormalGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphConstraintError("empty graph6 string")
    nn = ord(s[0]) - 63
    if nn < 1 or nn > 62:
        raise GraphConstraintError("unsupported graph6 node count")
    need = (nn * (nn - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphConstraintError(
            f"graph6 body has {len(body)} chars, expected {need}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise GraphConstraintError(f"invalid graph6 character {ch!r}")
        bits += [(val >> k) & 1 for k in range(5, -1, -1)]
    edges = []
    idx = 0
    for j in range(1, nn):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return NormalGraph(nn, edges)
