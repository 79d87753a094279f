"""Pure-Python canonical-labeling kernel.

``canonical_bits`` maps a small simple graph (adjacency bitmasks) to a
relabeling-invariant byte string: one length byte, then the row-major
upper-triangle adjacency bitmap of the lexicographically smallest
relabeling.  Two graphs are isomorphic iff the byte strings are equal.

The search is individualization-refinement: iterated neighbor-count
refinement of an ordered partition, branching on the first non-singleton
cell.  Cells whose members are mutually interchangeable (equal outside
neighborhoods, cell internally empty or complete) branch only once.

``src/etskit/_ckernel.pyx`` is a typed transliteration of this module and
must stay behaviorally identical; ``tests/test_kernel_parity.py`` holds the
two to byte equality.
"""

from __future__ import annotations

BACKEND = "pure"

NODE_CAP = 16


def _refine(n, adj, cells):
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        sigs = [tuple((adj[v] & m).bit_count() for m in masks) for v in range(n)]
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets = {}
            for v in cell:
                buckets.setdefault(sigs[v], []).append(v)
            if len(buckets) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    out.append(buckets[key])
        cells = out
        if not changed:
            return cells


def _bitmap(n, adj, order):
    acc = 0
    bits = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            acc = (acc << 1) | ((ai >> order[j]) & 1)
            bits += 1
    pad = (-bits) % 8
    return (acc << pad).to_bytes((bits + pad) // 8, "big")


def canonical_bits(n, adj):
    """Return ``(form, perm)`` for the graph on ``n`` nodes given as bitmasks.

    ``form`` is the canonical byte encoding; ``perm[i]`` is the original
    vertex placed at canonical position ``i``.
    """
    if n > NODE_CAP:
        raise ValueError(f"node count {n} exceeds kernel cap {NODE_CAP}")
    if n == 0:
        return b"\x00", ()
    best = None
    best_perm = None

    def rec(cells):
        nonlocal best, best_perm
        cells = _refine(n, adj, cells)
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target < 0:
            order = [cell[0] for cell in cells]
            bm = _bitmap(n, adj, order)
            if best is None or bm < best:
                best = bm
                best_perm = tuple(order)
            return
        cell = cells[target]
        cmask = 0
        for v in cell:
            cmask |= 1 << v
        branch = cell
        outside = {adj[v] & ~cmask for v in cell}
        if len(outside) == 1:
            # interchangeable members: any two can be swapped by an
            # automorphism when the cell induces nothing, everything, a
            # perfect matching, or the complement of one
            internal = [adj[v] & cmask for v in cell]
            degs = {x.bit_count() for x in internal}
            if degs <= {0} or degs <= {len(cell) - 1} or degs <= {1} or (
                len(cell) > 2 and degs <= {len(cell) - 2}
            ):
                branch = cell[:1]
        for v in branch:
            rest = [u for u in cell if u != v]
            rec(cells[:target] + [[v], rest] + cells[target + 1:])

    rec([list(range(n))])
    return bytes([n]) + best, best_perm
