"""Canonical labeling and isomorphism testing for normal graphs.

``canonical_form`` is the workhorse used for isomorphism rejection during
structure generation; ``are_isomorphic_oracle`` is a deliberately
independent brute-force check (permutation search with degree-sequence
pruning) kept around so the canonical form can be audited against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from etskit import kernel
from etskit.errors import NodeCapError
from etskit.normal import NormalGraph


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-ordered byte encoding; equal bytes iff isomorphic graphs."""

    data: bytes

    @property
    def n(self) -> int:
        return self.data[0]

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalForm":
        return cls(bytes.fromhex(text))

    def decode_edges(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        """Recover node count and edge list from the encoding."""
        n = self.data[0]
        bits = self.data[1:]
        edges = []
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if bits[k >> 3] >> (7 - (k & 7)) & 1:
                    edges.append((i, j))
                k += 1
        return n, tuple(edges)

    def decode(self) -> NormalGraph:
        n, edges = self.decode_edges()
        return NormalGraph(n, edges)


def canonical_masks(n: int, adj_masks) -> tuple[bytes, tuple[int, ...]]:
    """Kernel entry point on raw bitmasks; returns (form bytes, labeling)."""
    if n > kernel.NODE_CAP:
        raise NodeCapError(f"{n} nodes exceeds the {kernel.NODE_CAP}-node cap")
    return kernel.canonical_bits(n, adj_masks)


def canonical_form(n: NormalGraph) -> CanonicalForm:
    form, _ = canonical_masks(n.n, n.adj_masks)
    return CanonicalForm(form)


def are_isomorphic_oracle(n1: NormalGraph, n2: NormalGraph) -> bool:
    """Exhaustive permutation search, independent of ``canonical_form``."""
    if n1.n != n2.n or n1.m != n2.m:
        return False
    if sorted(n1.degrees) != sorted(n2.degrees):
        return False
    n = n1.n
    a1 = n1.adj_masks
    a2 = n2.adj_masks
    deg1 = n1.degrees
    deg2 = n2.degrees
    mapping = [-1] * n  # n1 vertex -> n2 vertex
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or deg1[v] != deg2[w]:
                continue
            ok = True
            for u in range(v):
                if (a1[v] >> u & 1) != (a2[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)
