"""Exhaustive generation of non-isomorphic trapping-set structures.

A class is named by (d_l, g, a, b).  Its structures correspond one-to-one
to connected simple graphs with ``a`` nodes, ``(a*d_l - b)/2`` edges, and
node degrees in ``[2, d_l]``; a girth-8 class additionally requires the
graph to be triangle-free (Tanner cycle lengths are twice normal ones).

Generation is orderly: edge sets grow one edge at a time and a grown graph
survives only if the edge that the canonical form marks for deletion leads
back to the parent it actually grew from, so each isomorphism class is
produced exactly once.  Degree caps, girth, and edge-count feasibility
prune during growth; connectivity and the minimum degree of 2 are final
filters (they are not closed under edge deletion).

Dense classes (more than half of all possible edges) are generated through
their complements: the degree window mirrors, the complement is grown the
same way, and results are complemented back before canonical encoding.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Union

from etskit.canon import CanonicalForm, canonical_masks
from etskit.errors import GraphConstraintError
from etskit.normal import NormalGraph

NA = "NA"
MIN_DL, MAX_DL = 3, 6
MIN_A, MAX_A = 4, 10
MAX_B = 10
GIRTHS = (6, 8)

LssLabelValue = Union[int, str]  # Tanner cycle length, or NA


@dataclass(frozen=True)
class ClassSpec:
    """One (d_l, g, a, b) trapping-set class."""

    d_l: int
    g: int
    a: int
    b: int

    def __post_init__(self):
        if self.d_l < MIN_DL or self.d_l > MAX_DL:
            raise ValueError(f"d_l={self.d_l} outside supported range {MIN_DL}..{MAX_DL}")
        if self.g not in GIRTHS:
            raise ValueError(f"girth {self.g} not in {GIRTHS}")
        if self.a < MIN_A or self.a > MAX_A:
            raise ValueError(f"a={self.a} outside supported range {MIN_A}..{MAX_A}")
        if self.b < 0 or self.b > MAX_B:
            raise ValueError(f"b={self.b} outside supported range 0..{MAX_B}")

    @property
    def num_edges(self) -> int:
        return (self.a * self.d_l - self.b) // 2


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    reason: str

    def __bool__(self) -> bool:
        return self.feasible


def class_feasible(spec: ClassSpec) -> Feasibility:
    """Cheap necessary conditions; "possibly feasible" is not a guarantee."""
    if spec.b > spec.a * (spec.d_l - 2):
        return Feasibility(
            False, f"b exceeds a*(d_l-2) = {spec.a * (spec.d_l - 2)}"
        )
    if (spec.a * spec.d_l - spec.b) % 2 != 0:
        return Feasibility(False, "parity: a*d_l - b must be even")
    if spec.num_edges > spec.a * (spec.a - 1) // 2:
        return Feasibility(False, "edge count exceeds simple-graph capacity")
    return Feasibility(True, "possibly feasible")


@dataclass(frozen=True)
class CatalogEntry:
    form: CanonicalForm
    spec: ClassSpec
    absorbing: bool
    lss: Optional[LssLabelValue] = None  # None = not yet classified

    def normal_graph(self) -> NormalGraph:
        return self.form.decode()


@dataclass
class Catalog:
    spec: ClassSpec
    entries: list[CatalogEntry] = field(default_factory=list)
    reason: Optional[str] = None  # set when the class is infeasible outright

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def absorbing_count(self) -> int:
        return sum(1 for e in self.entries if e.absorbing)

    def label_histogram(self, absorbing_only: bool = False) -> dict[LssLabelValue, int]:
        hist: dict[LssLabelValue, int] = {}
        for e in self.entries:
            if absorbing_only and not e.absorbing:
                continue
            key = e.lss if e.lss is not None else "?"
            hist[key] = hist.get(key, 0) + 1
        return dict(sorted(hist.items(), key=_label_sort_key))


def _label_sort_key(item):
    key = item[0]
    return (1, 0) if isinstance(key, str) else (0, key)


def _is_absorbing(degrees, d_l: int) -> bool:
    return all(2 * d > d_l for d in degrees)


def annotate_absorbing(entry: CatalogEntry) -> CatalogEntry:
    degs = entry.normal_graph().degrees
    return replace(entry, absorbing=_is_absorbing(degs, entry.spec.d_l))


# ---------------------------------------------------------------------------
# orderly generation


@dataclass(frozen=True)
class _GenTask:
    n: int
    m: int
    max_deg: int
    min_girth: int
    min_deg_final: int


def _creates_c4(adj, u: int, v: int) -> bool:
    au = adj[u] & ~(1 << v)
    block = ~(1 << u)
    while au:
        x = (au & -au).bit_length() - 1
        au &= au - 1
        if adj[x] & adj[v] & block:
            return True
    return False


def _feasible_partial(task: _GenTask, degs, k: int) -> bool:
    rem = task.m - k
    capacity = 0
    deficit = 0
    for d in degs:
        capacity += task.max_deg - d
        if d < task.min_deg_final:
            deficit += task.min_deg_final - d
    return 2 * rem <= capacity and deficit <= 2 * rem


def _deletion_edge(form: bytes, perm) -> tuple[int, int]:
    """Original-label edge whose canonical position is last in the bitmap."""
    n = form[0]
    bits = form[1:]
    k = n * (n - 1) // 2 - 1
    while k >= 0:
        if bits[k >> 3] >> (7 - (k & 7)) & 1:
            break
        k -= 1
    # map flat upper-triangle index back to (i, j)
    i = 0
    row = n - 1
    while k >= row:
        k -= row
        row -= 1
        i += 1
    j = i + 1 + k
    a, b = perm[i], perm[j]
    return (a, b) if a < b else (b, a)


def _children(task: _GenTask, adj, degs, k: int, form: bytes):
    """Accepted one-edge extensions of the current graph, deduplicated."""
    n = task.n
    out = []
    seen = set()
    for u in range(n):
        if degs[u] >= task.max_deg:
            continue
        au = adj[u]
        for v in range(u + 1, n):
            if degs[v] >= task.max_deg or (au >> v) & 1:
                continue
            if task.min_girth >= 4 and au & adj[v]:
                continue
            if task.min_girth >= 5 and _creates_c4(adj, u, v):
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            degs[u] += 1
            degs[v] += 1
            if _feasible_partial(task, degs, k + 1):
                child_form, perm = canonical_masks(n, adj)
                if child_form not in seen:
                    seen.add(child_form)
                    fu, fv = _deletion_edge(child_form, perm)
                    if (fu, fv) == (u, v):
                        ok = True
                    else:
                        adj[fu] &= ~(1 << fv)
                        adj[fv] &= ~(1 << fu)
                        parent_form, _ = canonical_masks(n, adj)
                        adj[fu] |= 1 << fv
                        adj[fv] |= 1 << fu
                        ok = parent_form == form
                    if ok:
                        out.append((list(adj), child_form))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            degs[u] -= 1
            degs[v] -= 1
    return out


def _run_subtree(task: _GenTask, adj, k: int, form: bytes):
    """Depth-first completion of one generation subtree."""
    finals = []
    stack = [(list(adj), k, form)]
    while stack:
        cur, depth, cur_form = stack.pop()
        if depth == task.m:
            cdegs = [m.bit_count() for m in cur]
            if all(d >= task.min_deg_final for d in cdegs):
                finals.append((cur, cur_form))
            continue
        degs = [m.bit_count() for m in cur]
        stack.extend(
            (child, depth + 1, child_form)
            for child, child_form in _children(task, cur, degs, depth, cur_form)
        )
    return finals


def _subtree_worker(args):
    task, adj, k, form = args
    return _run_subtree(task, adj, k, form)


def _mask_connected(adj) -> bool:
    n = len(adj)
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
    return seen == (1 << n) - 1


def generate_forms(
    a: int,
    m: int,
    max_deg: int,
    min_normal_girth: int = 3,
    threads: int = 1,
) -> list[CanonicalForm]:
    """All connected graphs on ``a`` nodes, ``m`` edges, degrees in
    [2, max_deg], normal girth at least ``min_normal_girth``; one canonical
    form per isomorphism class, sorted."""
    if m < a or m > a * (a - 1) // 2:
        return []  # connected with minimum degree 2 forces m >= a
    total_pairs = a * (a - 1) // 2
    complemented = min_normal_girth == 3 and m > total_pairs // 2
    if complemented:
        task = _GenTask(
            n=a,
            m=total_pairs - m,
            max_deg=a - 3,  # complement of min-degree-2
            min_girth=3,
            min_deg_final=max(0, a - 1 - max_deg),
        )
    else:
        task = _GenTask(n=a, m=m, max_deg=max_deg, min_girth=min_normal_girth,
                        min_deg_final=2)

    root_adj = [0] * a
    root_form, _ = canonical_masks(a, root_adj)
    if task.m == 0:
        raw = [(root_adj, root_form)] if task.min_deg_final == 0 else []
    elif threads <= 1:
        raw = _run_subtree(task, root_adj, 0, root_form)
    else:
        frontier = [(list(root_adj), 0, root_form)]
        depth = 0
        while depth < task.m and len(frontier) < 8 * threads:
            nxt = []
            for adj, k, form in frontier:
                degs = [x.bit_count() for x in adj]
                nxt.extend(
                    (child, k + 1, cform)
                    for child, cform in _children(task, adj, degs, k, form)
                )
            frontier = nxt
            depth += 1
            if not frontier:
                break
        raw = []
        if frontier:
            try:
                ctx = multiprocessing.get_context("fork")
            except ValueError:  # pragma: no cover - platform dependent
                ctx = multiprocessing.get_context()
            with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as pool:
                args = [(task, adj, k, form) for adj, k, form in frontier]
                for part in pool.map(_subtree_worker, args, chunksize=1):
                    raw.extend(part)

    forms = []
    if complemented:
        full = (1 << a) - 1
        for adj, _ in raw:
            orig = [full & ~x & ~(1 << v) for v, x in enumerate(adj)]
            if not _mask_connected(orig):
                continue
            form, _ = canonical_masks(a, orig)
            forms.append(form)
    else:
        forms = [form for adj, form in raw if _mask_connected(adj)]
    forms.sort()
    return [CanonicalForm(f) for f in forms]


def generate_structures(spec: ClassSpec, threads: int = 1) -> Catalog:
    """Catalog of all non-isomorphic structures of the class, unlabeled."""
    feas = class_feasible(spec)
    if not feas:
        return Catalog(spec=spec, entries=[], reason=feas.reason)
    min_girth = 3 if spec.g == 6 else 4
    forms = generate_forms(
        spec.a, spec.num_edges, spec.d_l, min_girth, threads=threads
    )
    entries = [
        CatalogEntry(
            form=form,
            spec=spec,
            absorbing=_is_absorbing(form.decode().degrees, spec.d_l),
        )
        for form in forms
    ]
    return Catalog(spec=spec, entries=entries)


# ---------------------------------------------------------------------------
# catalog files: "# dl g a b" header, then "hexform\tabsorbing\tlss" rows


def format_catalog(catalog: Catalog) -> str:
    spec = catalog.spec
    lines = [f"# {spec.d_l} {spec.g} {spec.a} {spec.b}"]
    for e in catalog.entries:
        lss = "?" if e.lss is None else str(e.lss)
        lines.append(f"{e.form.hex()}\t{1 if e.absorbing else 0}\t{lss}")
    return "\n".join(lines) + "\n"


def parse_catalog(text: str) -> Catalog:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise GraphConstraintError("catalog must start with '# dl g a b' header")
    head = lines[0][1:].split()
    if len(head) != 4:
        raise GraphConstraintError("catalog header must be '# dl g a b'")
    spec = ClassSpec(*(int(x) for x in head))
    entries = []
    for ln in lines[1:]:
        parts = ln.split("\t")
        if len(parts) != 3:
            raise GraphConstraintError(f"bad catalog row {ln!r}")
        try:
            form = CanonicalForm.from_hex(parts[0])
        except ValueError as exc:
            raise GraphConstraintError(f"bad canonical form in {ln!r}") from exc
        if parts[1] not in ("0", "1"):
            raise GraphConstraintError(f"bad absorbing flag in {ln!r}")
        lss: Optional[LssLabelValue]
        if parts[2] == "?":
            lss = None
        elif parts[2] == NA:
            lss = NA
        else:
            lss = int(parts[2])
        graph = form.decode()
        if graph.n != spec.a or graph.m != spec.num_edges:
            raise GraphConstraintError(
                f"entry {parts[0]} does not match class (a={spec.a}, b={spec.b})"
            )
        entries.append(
            CatalogEntry(form=form, spec=spec, absorbing=parts[1] == "1", lss=lss)
        )
    entries.sort(key=lambda e: e.form.data)
    return Catalog(spec=spec, entries=entries)


def write_catalog(catalog: Catalog, path: Union[str, Path]) -> None:
    Path(path).write_text(format_catalog(catalog))


def read_catalog(path: Union[str, Path]) -> Catalog:
    return parse_catalog(Path(path).read_text())
