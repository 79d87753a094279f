"""Shared fixtures-adjacent helpers: deterministic random graphs, alist
rendering, and the independent brute-force oracles the suite checks the
fast paths against."""

from __future__ import annotations

import itertools
import random
from collections import Counter

from etskit.normal import NormalGraph
from etskit.tanner import TannerGraph, classify


def to_alist(g: TannerGraph) -> str:
    vmax = g.d_l
    cmax = max((len(c) for c in g.chk_adj), default=0)
    lines = [f"{g.num_var} {g.num_chk}", f"{vmax} {cmax}"]
    lines.append(" ".join(str(g.d_l) for _ in range(g.num_var)))
    lines.append(" ".join(str(len(c)) for c in g.chk_adj))
    for row in g.var_adj:
        lines.append(" ".join(str(c + 1) for c in row) + " 0" * (vmax - len(row)))
    for row in g.chk_adj:
        lines.append(" ".join(str(v + 1) for v in row) + " 0" * (cmax - len(row)))
    return "\n".join(lines) + "\n"


def random_tanner(num_var: int, d_l: int, num_chk: int, seed: int,
                  girth_exactly=None) -> TannerGraph:
    """Deterministic random left-regular graph with girth >= 6.

    Two variables never share two checks (that is exactly girth >= 6 in a
    bipartite graph).  With ``girth_exactly`` set, seeds are retried until
    the girth matches.
    """
    for attempt in range(200):
        rng = random.Random(seed * 1009 + attempt)
        rows: list[tuple[int, ...]] = []
        pair_seen: set[tuple[int, int]] = set()
        ok = True
        for _ in range(num_var):
            placed = None
            for _ in range(200):
                cand = tuple(sorted(rng.sample(range(num_chk), d_l)))
                pairs = list(itertools.combinations(cand, 2))
                if all(p not in pair_seen for p in pairs):
                    placed = cand
                    pair_seen.update(pairs)
                    break
            if placed is None:
                ok = False
                break
            rows.append(placed)
        if not ok:
            continue
        graph = TannerGraph.from_var_adj(rows, num_chk)
        if girth_exactly is None or graph.girth == girth_exactly:
            return graph
    raise RuntimeError("could not build a random graph with the requested girth")


def tutte_coxeter() -> TannerGraph:
    """Duad-syntheme incidence: 15+15 nodes, 3-regular both sides, girth 8."""
    duads = list(itertools.combinations(range(6), 2))
    synthemes = []
    for matching in itertools.permutations(range(1, 6)):
        parts = frozenset(
            [frozenset({0, matching[0]}),
             frozenset({matching[1], matching[2]}),
             frozenset({matching[3], matching[4]})]
        )
        if len(parts) == 3 and parts not in synthemes:
            synthemes.append(parts)
    synthemes = sorted(synthemes, key=sorted)
    assert len(synthemes) == 15
    rows = []
    for d in duads:
        rows.append(tuple(
            i for i, s in enumerate(synthemes) if frozenset(d) in s
        ))
    return TannerGraph.from_var_adj(rows, 15)


def brute_gamma(graph: TannerGraph, members) -> tuple[set, set]:
    """Naive per-check degree count over the induced subgraph."""
    members = set(members)
    odd, even = set(), set()
    for c in range(graph.num_chk):
        deg = sum(1 for v in graph.chk_adj[c] if v in members)
        if deg == 0:
            continue
        (odd if deg % 2 else even).add(c)
    return odd, even


def brute_one_expansion(graph: TannerGraph, members) -> set:
    """All v whose addition yields an in-pool elementary superset."""
    members = tuple(sorted(members))
    out = set()
    for v in range(graph.num_var):
        if v in members:
            continue
        rec = classify(graph, members + (v,))
        if rec.elementary and rec.in_t:
            out.add(tuple(sorted(members + (v,))))
    return out


def pool_ets_up_to(graph: TannerGraph, k: int):
    """Every in-pool elementary set of size <= k, by exhaustive subsets."""
    found = []
    for size in range(2, k + 1):
        for combo in itertools.combinations(range(graph.num_var), size):
            rec = classify(graph, combo)
            if rec.elementary and rec.in_t:
                found.append((combo, rec.b))
    return found


def labeled_structure_buckets(a: int, m: int, max_deg: int,
                              triangle_free: bool):
    """Brute-force isomorphism classes of connected [2, max_deg]-degree
    graphs with ``a`` nodes and ``m`` edges, bucketed with the permutation
    oracle (independent of canonical forms)."""
    from etskit.canon import are_isomorphic_oracle

    pairs = list(itertools.combinations(range(a), 2))
    deg = [0] * a
    adj = [0] * a
    chosen: list[int] = []
    buckets: dict[tuple, list[NormalGraph]] = {}

    def record():
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
        if seen != (1 << a) - 1:
            return
        if min(deg) < 2:
            return
        g = NormalGraph(a, [pairs[k] for k in chosen])
        key = tuple(sorted(g.degrees))
        for other in buckets.setdefault(key, []):
            if are_isomorphic_oracle(g, other):
                return
        buckets[key].append(g)

    def rec(idx: int, left: int):
        if left == 0:
            record()
            return
        if len(pairs) - idx < left:
            return
        need = sum(2 - d for d in deg if d < 2)
        if need > 2 * left:
            return
        i, j = pairs[idx]
        if deg[i] < max_deg and deg[j] < max_deg and not (
            triangle_free and adj[i] & adj[j]
        ):
            deg[i] += 1
            deg[j] += 1
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            chosen.append(idx)
            rec(idx + 1, left - 1)
            chosen.pop()
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
            deg[i] -= 1
            deg[j] -= 1
        rec(idx + 1, left)

    if a <= m <= len(pairs):
        rec(0, m)
    return [g for group in buckets.values() for g in group]


def cycles_by_arrangement(n: NormalGraph) -> Counter:
    """Cycle-length multiset by checking every cyclic vertex arrangement."""
    adj = n.adj_masks
    counts: Counter = Counter()
    for size in range(3, n.n + 1):
        for combo in itertools.combinations(range(n.n), size):
            first = combo[0]
            rest = combo[1:]
            for perm in itertools.permutations(rest):
                if size > 2 and perm[0] > perm[-1]:
                    continue  # direction dedup
                cyc = (first,) + perm
                if all(
                    adj[cyc[i]] >> cyc[(i + 1) % size] & 1 for i in range(size)
                ):
                    counts[2 * size] += 1
    return counts


def assert_nested(frontier) -> None:
    """Every grown set keeps a one-smaller ancestor in the frontier."""
    for size, layer in frontier.by_size.items():
        for members in layer:
            if members in frontier.seeds:
                continue
            assert any(
                tuple(m for m in members if m != v) in frontier.by_size.get(size - 1, ())
                for v in members
            ), f"set {members} has no size-{size - 1} ancestor"
