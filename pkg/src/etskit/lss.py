"""Layered-superset machinery: one-node expansion, expansion to size k,
cycle enumeration, and the LSS classification of catalog structures.

A set S' of size a+1 in the pool can only extend an in-pool elementary set
S of size a through a variable node with at least two edges into S's
unsatisfied checks and none into its satisfied checks, so the one-step
expansion below is complete: no candidate outside that scan exists.  The
scan walks the unsatisfied-check adjacency and therefore touches at most
b*(d_r - 1) distinct variables.

A structure is labeled with the smallest Tanner cycle length x such that
expanding all its length-x cycle node sets reaches the full structure; NA
when no cycle length works (such structures are invisible to cycle-seeded
search by construction).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from etskit.normal import CycleCensus, NormalGraph, from_normal
from etskit.structgen import NA, CatalogEntry, Catalog, LssLabelValue
from etskit.tanner import Members, TannerGraph, classify, members_of

MAX_K = 12


@dataclass(frozen=True)
class LssLabel:
    value: LssLabelValue  # Tanner cycle length, or NA

    @property
    def is_na(self) -> bool:
        return self.value == NA


class ExpansionFrontier:
    """Deduplicated in-pool ETSs found per size (the algorithm's output lists)."""

    def __init__(self, k: int):
        self.k = k
        self.by_size: dict[int, set[tuple[int, ...]]] = {}
        self.seeds: set[tuple[int, ...]] = set()

    def add(self, members: tuple[int, ...]) -> bool:
        size = len(members)
        layer = self.by_size.setdefault(size, set())
        if members in layer:
            return False
        layer.add(members)
        return True

    def sets(self, size: int) -> frozenset[tuple[int, ...]]:
        return frozenset(self.by_size.get(size, ()))

    def all_sets(self) -> list[tuple[int, ...]]:
        out = []
        for size in sorted(self.by_size):
            out.extend(sorted(self.by_size[size]))
        return out

    def __contains__(self, members) -> bool:
        members = tuple(sorted(members))
        return members in self.by_size.get(len(members), ())

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.by_size.values())

    def export_lines(self, graph: TannerGraph) -> list[str]:
        """One line per set: ``a<TAB>b<TAB>comma-separated members``."""
        from etskit.tanner import gamma_split

        lines = []
        for members in self.all_sets():
            b = len(gamma_split(graph, members).odd)
            lines.append(
                f"{len(members)}\t{b}\t{','.join(str(v) for v in members)}"
            )
        return lines


def _odd_even_masks(graph: TannerGraph, members: tuple[int, ...]):
    smask = 0
    for v in members:
        smask |= 1 << v
    odd: list[int] = []
    even_mask = 0
    seen = set()
    for v in members:
        for c in graph.var_adj[v]:
            if c in seen:
                continue
            seen.add(c)
            if (graph.chk_vmask[c] & smask).bit_count() % 2 == 1:
                odd.append(c)
            else:
                even_mask |= 1 << c
    return smask, odd, even_mask


def _expand_members(graph: TannerGraph, members: tuple[int, ...]):
    """Routine core: all one-node extensions of an in-pool elementary set."""
    smask, odd, even_mask = _odd_even_masks(graph, members)
    counts: dict[int, int] = {}
    for c in odd:
        outside = graph.chk_vmask[c] & ~smask
        while outside:
            v = (outside & -outside).bit_length() - 1
            outside &= outside - 1
            counts[v] = counts.get(v, 0) + 1
    # the scan above is bounded by b*(d_r - 1) distinct candidates
    assert len(counts) <= len(odd) * max(graph.max_chk_degree - 1, 0)
    out = set()
    for v, hits in counts.items():
        if hits < 2:
            continue
        vmask = 0
        for c in graph.var_adj[v]:
            vmask |= 1 << c
        if vmask & even_mask:
            continue
        out.add(tuple(sorted(members + (v,))))
    return out


def one_expansion(graph: TannerGraph, s: Members) -> set[tuple[int, ...]]:
    """All size-(|s|+1) in-pool ETSs containing ``s``."""
    members = members_of(graph, s)
    rec = classify(graph, members)
    if not (rec.elementary and rec.in_t):
        raise ValueError("expansion input is not an elementary set in the pool")
    return _expand_members(graph, members)


def expand_to_k(
    graph: TannerGraph,
    seeds: Iterable[Members],
    k: int,
    _validate: bool = True,
) -> ExpansionFrontier:
    """Layered expansion of the seeds to every reachable set of size <= k."""
    if k > MAX_K:
        raise ValueError(f"k={k} above cap {MAX_K}")
    frontier = ExpansionFrontier(k)
    for idx, seed in enumerate(seeds):
        members = members_of(graph, seed)
        if len(members) > k:
            continue
        if _validate:
            rec = classify(graph, members)
            if not (rec.elementary and rec.in_t):
                raise ValueError(f"seed {idx} is not an elementary set in the pool")
        frontier.add(members)
        frontier.seeds.add(members)
    for size in range(2, k):
        layer = frontier.by_size.get(size)
        if not layer:
            continue
        for members in sorted(layer):
            for grown in _expand_members(graph, members):
                frontier.add(grown)
    return frontier


def enumerate_tanner_cycles(
    graph: TannerGraph, max_len: int
) -> dict[int, list[tuple[int, ...]]]:
    """Variable-node sets of all cycles of length girth..max_len.

    A length-2m cycle yields its m-element variable set; per length, node
    sets are deduplicated (two cycles on the same variables count once).
    """
    girth = graph.girth
    if girth != float("inf"):
        if max_len < girth:
            raise ValueError(f"max_len {max_len} below girth {girth}")
        if max_len > girth + 12:
            raise ValueError(f"max_len {max_len} above girth+12 cap")
    nv = graph.num_var
    adj = [tuple(c + nv for c in row) for row in graph.var_adj]
    adj += [graph.chk_adj[c] for c in range(graph.num_chk)]
    found: dict[int, set[tuple[int, ...]]] = {}
    max_nodes = max_len  # a length-L cycle visits L nodes
    for start in range(nv):
        stack = [(start, frozenset([start]), (start,))]
        while stack:
            v, visited, path = stack.pop()
            for w in adj[v]:
                if w == start and len(path) >= 4 and path[1] < path[-1]:
                    vars_only = tuple(sorted(u for u in path if u < nv))
                    found.setdefault(len(path), set()).add(vars_only)
                if w <= start or w in visited:
                    continue
                if len(path) < max_nodes:
                    stack.append((w, visited | {w}, path + (w,)))
    return {
        length: sorted(found[length])
        for length in sorted(found)
        if length <= max_len
    }


def classify_lss(entry: CatalogEntry) -> LssLabel:
    """Smallest Tanner cycle length whose cycles expand to the structure."""
    structure = entry.normal_graph()
    return lss_label_of(structure, entry.spec.d_l)


def lss_label_of(structure: NormalGraph, d_l: int) -> LssLabel:
    graph = from_normal(structure, d_l)
    full = tuple(range(structure.n))
    for normal_len in range(3, structure.n + 1):
        census = CycleCensus(structure, max_normal_len=normal_len)
        seeds = census.node_sets(2 * normal_len)
        seeds = [s for s in seeds if len(s) == normal_len]
        if not seeds:
            continue
        for seed in seeds:
            rec = classify(graph, seed)
            assert rec.elementary and rec.in_t, "cycle seed must be in the pool"
        frontier = expand_to_k(graph, seeds, k=structure.n, _validate=False)
        if full in frontier:
            return LssLabel(2 * normal_len)
    return LssLabel(NA)


def label_catalog(catalog: Catalog, threads: int = 1) -> Catalog:
    """Catalog with every entry labeled; deterministic across thread counts."""
    from dataclasses import replace

    entries = catalog.entries
    if threads > 1 and len(entries) >= 64:
        import multiprocessing
        from concurrent.futures import ProcessPoolExecutor

        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:  # pragma: no cover - platform dependent
            ctx = multiprocessing.get_context()
        with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as pool:
            labels = list(pool.map(_label_worker, entries, chunksize=16))
    else:
        labels = [classify_lss(e).value for e in entries]
    labeled = [replace(e, lss=val) for e, val in zip(entries, labels)]
    return Catalog(spec=catalog.spec, entries=labeled, reason=catalog.reason)


def _label_worker(entry: CatalogEntry) -> LssLabelValue:
    return classify_lss(entry).value
