# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the subset-scan and canonicalization hot loops.

Mirrors romandom._kernels_py exactly: same functions, same results,
bit for bit.  The parity suite in tests/test_kernels.py compares the two
backends on random instances.
"""

from libc.stdint cimport uint8_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND_NAME = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF MAX_SCAN = 24
DEF MAX_VERTS = 63


cdef inline int _pop(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef uint64_t* _union_table(uint64_t* masks, int n) nogil:
    cdef uint64_t size = (<uint64_t>1) << n
    cdef uint64_t* table = <uint64_t*> malloc(size * sizeof(uint64_t))
    if table == NULL:
        return NULL
    cdef uint64_t m, low
    table[0] = 0
    for m in range(1, size):
        low = m & (0 - m)
        table[m] = table[m ^ low] | masks[__builtin_ctzll(low)]
    return table


cdef int _load_masks(object rows, uint64_t* out) except -1:
    cdef int n = len(rows)
    if n > MAX_SCAN:
        raise ValueError(f"subset scan limited to {MAX_SCAN} vertices, got {n}")
    cdef int i
    for i in range(n):
        out[i] = rows[i]
    return n


def min_weight_cover(closed):
    """min over S of 2|S| + |V - N[S]|; the Roman domination number."""
    cdef uint64_t masks[MAX_SCAN]
    cdef int n = _load_masks(closed, masks)
    if n == 0:
        return 0
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t* table = _union_table(masks, n)
    if table == NULL:
        raise MemoryError()
    cdef int best = n
    cdef int base, w
    cdef uint64_t m
    with nogil:
        for m in range(1, (<uint64_t>1) << n):
            base = 2 * _pop(m)
            if base >= best:
                continue
            w = base + _pop(full & ~table[m])
            if w < best:
                best = w
    free(table)
    return best


def min_cover_masks(closed):
    cdef uint64_t masks[MAX_SCAN]
    cdef int n = _load_masks(closed, masks)
    if n == 0:
        return [0]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t* table = _union_table(masks, n)
    if table == NULL:
        raise MemoryError()
    cdef int best = n
    cdef int w
    cdef uint64_t m
    out = [0]
    for m in range(1, (<uint64_t>1) << n):
        w = 2 * _pop(m) + _pop(full & ~table[m])
        if w < best:
            best = w
            out = [m]
        elif w == best:
            out.append(m)
    free(table)
    return out


def min_dominating_size(closed):
    cdef uint64_t masks[MAX_SCAN]
    cdef int n = _load_masks(closed, masks)
    if n == 0:
        return 0
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t* table = _union_table(masks, n)
    if table == NULL:
        raise MemoryError()
    cdef int best = n
    cdef int k
    cdef uint64_t m
    with nogil:
        for m in range(1, (<uint64_t>1) << n):
            if table[m] == full:
                k = _pop(m)
                if k < best:
                    best = k
    free(table)
    return best


def min_dominating_masks(closed):
    cdef uint64_t masks[MAX_SCAN]
    cdef int n = _load_masks(closed, masks)
    if n == 0:
        return [0]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t* table = _union_table(masks, n)
    if table == NULL:
        raise MemoryError()
    cdef int best = n + 1
    cdef int k
    cdef uint64_t m
    out = []
    for m in range(1, (<uint64_t>1) << n):
        if table[m] != full:
            continue
        k = _pop(m)
        if k < best:
            best = k
            out = [m]
        elif k == best:
            out.append(m)
    free(table)
    return out


def max_differential(open_rows):
    cdef uint64_t masks[MAX_SCAN]
    cdef int n = _load_masks(open_rows, masks)
    if n == 0:
        return 0
    cdef uint64_t* table = _union_table(masks, n)
    if table == NULL:
        raise MemoryError()
    cdef int best = 0
    cdef int d
    cdef uint64_t m
    with nogil:
        for m in range(1, (<uint64_t>1) << n):
            d = _pop(table[m] & ~m) - _pop(m)
            if d > best:
                best = d
    free(table)
    return best


def max_differential_masks(open_rows):
    cdef uint64_t masks[MAX_SCAN]
    cdef int n = _load_masks(open_rows, masks)
    if n == 0:
        return [0]
    cdef uint64_t* table = _union_table(masks, n)
    if table == NULL:
        raise MemoryError()
    cdef int best = 0
    cdef int d
    cdef uint64_t m
    out = [0]
    for m in range(1, (<uint64_t>1) << n):
        d = _pop(table[m] & ~m) - _pop(m)
        if d > best:
            best = d
            out = [m]
        elif d == best:
            out.append(m)
    free(table)
    return out


def efficient_dominating_masks(closed):
    cdef uint64_t masks[MAX_SCAN]
    cdef int n = _load_masks(closed, masks)
    if n == 0:
        return [0]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t size = (<uint64_t>1) << n
    cdef uint64_t* table = _union_table(masks, n)
    if table == NULL:
        raise MemoryError()
    cdef int* sizes = <int*> malloc(size * sizeof(int))
    if sizes == NULL:
        free(table)
        raise MemoryError()
    cdef uint64_t m, low
    sizes[0] = 0
    for m in range(1, size):
        low = m & (0 - m)
        sizes[m] = sizes[m ^ low] + _pop(masks[__builtin_ctzll(low)])
    out = []
    for m in range(1, size):
        if table[m] == full and sizes[m] == n:
            out.append(m)
    free(sizes)
    free(table)
    return out


# -- canonical search --------------------------------------------------------


cdef struct CanonState:
    uint64_t rows[MAX_VERTS]
    int deg[MAX_VERTS]
    int posdeg[MAX_VERTS]
    int perm[MAX_VERTS]
    uint64_t cur[MAX_VERTS]
    uint64_t best_cols[MAX_VERTS]
    int best_perm[MAX_VERTS]
    int n
    bint has_best


cdef bint _descend(CanonState* st, int pos, uint64_t used, bint tight) nogil:
    cdef int n = st.n
    cdef int i, v, k, count
    cdef uint64_t col, row
    cdef uint64_t cand_col[MAX_VERTS]
    cdef int cand_v[MAX_VERTS]
    cdef bint improved = False, child_tight
    cdef uint64_t tmp_c
    cdef int tmp_v

    if pos == n:
        if not st.has_best:
            improved = True
        else:
            for i in range(n):
                if st.cur[i] != st.best_cols[i]:
                    improved = st.cur[i] < st.best_cols[i]
                    break
        if improved:
            for i in range(n):
                st.best_cols[i] = st.cur[i]
                st.best_perm[i] = st.perm[i]
            st.has_best = True
            return True
        return False

    count = 0
    for v in range(n):
        if (used >> v) & 1 or st.deg[v] != st.posdeg[pos]:
            continue
        row = st.rows[v]
        col = 0
        for i in range(pos):
            col = (col << 1) | ((row >> st.perm[i]) & 1)
        cand_col[count] = col
        cand_v[count] = v
        count += 1
    # insertion sort by (col, v); v order is already ascending from the scan
    for i in range(1, count):
        tmp_c = cand_col[i]
        tmp_v = cand_v[i]
        k = i - 1
        while k >= 0 and cand_col[k] > tmp_c:
            cand_col[k + 1] = cand_col[k]
            cand_v[k + 1] = cand_v[k]
            k -= 1
        cand_col[k + 1] = tmp_c
        cand_v[k + 1] = tmp_v

    for i in range(count):
        col = cand_col[i]
        v = cand_v[i]
        if tight:
            if col > st.best_cols[pos]:
                break
            child_tight = col == st.best_cols[pos]
        else:
            child_tight = False
        st.perm[pos] = v
        st.cur[pos] = col
        if _descend(st, pos + 1, used | ((<uint64_t>1) << v), child_tight):
            improved = True
            tight = True
    return improved


cdef void _canon_prepare(CanonState* st, int n) nogil:
    cdef int i, k, tmp
    st.n = n
    st.has_best = False
    for i in range(n):
        st.deg[i] = _pop(st.rows[i])
        st.posdeg[i] = st.deg[i]
    # sort position degrees descending
    for i in range(1, n):
        tmp = st.posdeg[i]
        k = i - 1
        while k >= 0 and st.posdeg[k] < tmp:
            st.posdeg[k + 1] = st.posdeg[k]
            k -= 1
        st.posdeg[k + 1] = tmp


def canonical_permutation(rows):
    """Position -> vertex list minimizing the adjacency bitstring over all
    degree-sorted placements; identical tie-breaking to the pure backend."""
    cdef int n = len(rows)
    if n > MAX_VERTS:
        raise ValueError(f"canonical search limited to {MAX_VERTS} vertices")
    if n <= 1:
        return list(range(n))
    cdef CanonState st
    cdef int i
    for i in range(n):
        st.rows[i] = rows[i]
    _canon_prepare(&st, n)
    with nogil:
        _descend(&st, 0, 0, False)
    return [st.best_perm[i] for i in range(n)]


cdef uint64_t _triangle_code(CanonState* st) nogil:
    cdef uint64_t code = 0, col
    cdef int i, j, idx = 0
    cdef uint64_t rowj
    for j in range(1, st.n):
        rowj = st.rows[st.best_perm[j]]
        col = 0
        for i in range(j):
            col = (col << 1) | ((rowj >> st.best_perm[i]) & 1)
        for i in range(j):
            code |= (((col >> (j - 1 - i)) & 1)) << idx
            idx += 1
    return code


def canonical_signature(rows):
    """Canonical upper-triangle bit code (graph6 bit order), order implicit."""
    cdef int n = len(rows)
    if n <= 1:
        return 0
    if n > 10:
        # the signature must fit one machine word; plenty for this use
        raise ValueError("canonical_signature limited to 10 vertices")
    cdef CanonState st
    cdef int i
    for i in range(n):
        st.rows[i] = rows[i]
    _canon_prepare(&st, n)
    with nogil:
        _descend(&st, 0, 0, False)
    return _triangle_code(&st)


cdef bint _connected(uint64_t* rows, int n) nogil:
    cdef uint64_t seen = 1, grow, m, low
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    while True:
        grow = seen
        m = seen
        while m:
            low = m & (0 - m)
            grow |= rows[__builtin_ctzll(low)]
            m ^= low
        if grow == seen:
            break
        seen = grow
    return seen == full


def connected_canonical_signatures(int n):
    """Canonical signatures of every connected graph on n vertices, one per
    isomorphism class, ascending.  Exhausts all labeled graphs in C."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return [0]
    if n > 7:
        raise ValueError("exhaustive connected generation limited to 7 vertices")
    cdef int nedges = n * (n - 1) // 2
    cdef uint64_t total = (<uint64_t>1) << nedges
    cdef uint8_t* seen = <uint8_t*> malloc(total)
    if seen == NULL:
        raise MemoryError()
    memset(seen, 0, total)

    cdef int pi[32]
    cdef int pj[32]
    cdef int idx = 0, i, j
    for j in range(1, n):
        for i in range(j):
            pi[idx] = i
            pj[idx] = j
            idx += 1

    cdef CanonState st
    cdef uint64_t mask, m, low, code
    cdef int e
    with nogil:
        for mask in range(total):
            for i in range(n):
                st.rows[i] = 0
            m = mask
            while m:
                low = m & (0 - m)
                e = __builtin_ctzll(low)
                st.rows[pi[e]] |= (<uint64_t>1) << pj[e]
                st.rows[pj[e]] |= (<uint64_t>1) << pi[e]
                m ^= low
            if not _connected(st.rows, n):
                continue
            _canon_prepare(&st, n)
            _descend(&st, 0, 0, False)
            code = _triangle_code(&st)
            seen[code] = 1
    out = []
    for mask in range(total):
        if seen[mask]:
            out.append(mask)
    free(seen)
    return out
