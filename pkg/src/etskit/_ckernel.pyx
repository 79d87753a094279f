# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical-labeling kernel.

Typed transliteration of ``_kernel.py``: same refinement discipline (full
simultaneous passes, fragments ascending by signature, stable within equal
signatures), same branching rule (first non-singleton cell, interchangeable
cells branch once), same encoding.  Outputs are byte-identical with the
pure kernel; tests/test_kernel_parity.py enforces that.
"""

BACKEND = "c"

NODE_CAP = 16

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int _etskit_popcount(unsigned int x) { return __builtin_popcount(x); }
    #else
    static inline int _etskit_popcount(unsigned int x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int _etskit_popcount(unsigned int x) nogil


cdef struct State:
    int n
    int nbits
    int nbytes
    unsigned int adj[16]
    unsigned char best[32]
    int best_perm[16]
    bint have_best


cdef void _leaf(State *st, int *verts):
    cdef unsigned char buf[32]
    cdef int i, j, bit, k = 0
    cdef unsigned int ai
    for i in range(st.nbytes):
        buf[i] = 0
    for i in range(st.n):
        ai = st.adj[verts[i]]
        for j in range(i + 1, st.n):
            bit = (ai >> verts[j]) & 1
            if bit:
                buf[k >> 3] |= 1 << (7 - (k & 7))
            k += 1
    cdef int cmp = 0  # -1 better, 0 equal, 1 worse
    if st.have_best:
        for i in range(st.nbytes):
            if buf[i] != st.best[i]:
                cmp = -1 if buf[i] < st.best[i] else 1
                break
    else:
        cmp = -1
    if cmp < 0:
        for i in range(st.nbytes):
            st.best[i] = buf[i]
        for i in range(st.n):
            st.best_perm[i] = verts[i]
        st.have_best = True


cdef void _refine(State *st, int *verts, unsigned char *cell_end):
    cdef int n = st.n
    cdef unsigned int cellmask[16]
    cdef int sig[16][16]
    cdef int cellof[16]
    cdef int i, j, p, q, v, ncells, start, changed_any
    cdef int tmpv
    while True:
        # collect cells in positional order
        ncells = 0
        start = 0
        for p in range(n):
            if cell_end[p]:
                cellmask[ncells] = 0
                for q in range(start, p + 1):
                    cellmask[ncells] |= (<unsigned int>1) << verts[q]
                ncells += 1
                start = p + 1
        for v in range(n):
            for j in range(ncells):
                sig[v][j] = _etskit_popcount(st.adj[v] & cellmask[j])
        changed_any = 0
        start = 0
        for p in range(n):
            if not cell_end[p]:
                continue
            if p > start:
                # stable insertion sort of verts[start..p] by signature vector
                for i in range(start + 1, p + 1):
                    tmpv = verts[i]
                    q = i - 1
                    while q >= start and _sig_gt(sig[verts[q]], sig[tmpv], ncells):
                        verts[q + 1] = verts[q]
                        q -= 1
                    verts[q + 1] = tmpv
                # mark new cell boundaries at signature changes
                for i in range(start, p):
                    if not _sig_eq(sig[verts[i]], sig[verts[i + 1]], ncells):
                        if not cell_end[i]:
                            cell_end[i] = 1
                            changed_any = 1
            start = p + 1
        if not changed_any:
            return


cdef inline bint _sig_gt(int *a, int *b, int ncells):
    cdef int j
    for j in range(ncells):
        if a[j] != b[j]:
            return a[j] > b[j]
    return False


cdef inline bint _sig_eq(int *a, int *b, int ncells):
    cdef int j
    for j in range(ncells):
        if a[j] != b[j]:
            return False
    return True


cdef void _search(State *st, int *verts, unsigned char *cell_end):
    cdef int n = st.n
    cdef int nverts[16]
    cdef unsigned char nends[16]
    cdef int i, p, q, start, tgt_start, tgt_end, v, w, deg
    cdef unsigned int cmask, outmask, inmask
    cdef bint interchangeable, empty_ok, full_ok, match_ok, co_ok
    _refine(st, verts, cell_end)
    tgt_start = -1
    start = 0
    for p in range(n):
        if cell_end[p]:
            if p > start:
                tgt_start = start
                tgt_end = p
                break
            start = p + 1
    if tgt_start < 0:
        _leaf(st, verts)
        return
    cmask = 0
    for p in range(tgt_start, tgt_end + 1):
        cmask |= (<unsigned int>1) << verts[p]
    # interchangeable-cell check: equal outside rows, internal degree uniform
    # 0, |C|-1, 1, or |C|-2
    interchangeable = True
    outmask = st.adj[verts[tgt_start]] & ~cmask
    for p in range(tgt_start + 1, tgt_end + 1):
        if (st.adj[verts[p]] & ~cmask) != outmask:
            interchangeable = False
            break
    if interchangeable:
        empty_ok = True
        full_ok = True
        match_ok = True
        co_ok = tgt_end - tgt_start + 1 > 2
        for p in range(tgt_start, tgt_end + 1):
            v = verts[p]
            inmask = st.adj[v] & cmask
            deg = _etskit_popcount(inmask)
            if deg != 0:
                empty_ok = False
            if deg != tgt_end - tgt_start:
                full_ok = False
            if deg != 1:
                match_ok = False
            if deg != tgt_end - tgt_start - 1:
                co_ok = False
        interchangeable = empty_ok or full_ok or match_ok or co_ok
    for p in range(tgt_start, tgt_end + 1):
        v = verts[p]
        # child partition: [v], rest in original relative order
        for i in range(n):
            nverts[i] = verts[i]
            nends[i] = cell_end[i]
        q = tgt_start + 1
        nverts[tgt_start] = v
        for i in range(tgt_start, tgt_end + 1):
            w = verts[i]
            if w != v:
                nverts[q] = w
                q += 1
        nends[tgt_start] = 1
        _search(st, nverts, nends)
        if interchangeable:
            break


def canonical_bits(n, adj):
    """Return ``(form, perm)``; see the pure kernel for the contract."""
    if n > NODE_CAP:
        raise ValueError(f"node count {n} exceeds kernel cap {NODE_CAP}")
    if n == 0:
        return b"\x00", ()
    cdef State st
    cdef int i
    st.n = n
    st.nbits = n * (n - 1) // 2
    st.nbytes = (st.nbits + 7) // 8
    st.have_best = False
    for i in range(n):
        st.adj[i] = adj[i]
    cdef int verts[16]
    cdef unsigned char cell_end[16]
    for i in range(n):
        verts[i] = i
        cell_end[i] = 0
    cell_end[n - 1] = 1
    _search(&st, verts, cell_end)
    form = bytes([n]) + bytes(st.best[i] for i in range(st.nbytes))
    perm = tuple(st.best_perm[i] for i in range(n))
    return form, perm
