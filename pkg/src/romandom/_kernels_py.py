"""Pure-Python kernels for the subset-scan and canonicalization hot loops.

This module is the fallback backend: `romandom._kernels` (the compiled
extension) implements the same functions with the same semantics.  Every
routine works on bitmask adjacency rows (``rows[v]`` has bit ``u`` set when
``uv`` is an edge) and must return bit-identical results on both backends;
``tests/test_kernels.py`` enforces the parity.

Vertex-set arguments and results are encoded as int bitmasks over vertex
ids ``0..n-1``.
"""

BACKEND_NAME = "pure"

_MAX_SCAN_ORDER = 24


def _check_scan_order(n):
    if n > _MAX_SCAN_ORDER:
        raise ValueError(f"subset scan limited to {_MAX_SCAN_ORDER} vertices, got {n}")


def _union_table(masks):
    """table[S] = union of masks[v] over v in S, for every subset S."""
    n = len(masks)
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] | masks[low.bit_length() - 1]
    return table


def min_weight_cover(closed):
    """min over S of 2|S| + |V - N[S]| with N[S] taken from closed rows.

    This equals the Roman domination number of the graph whose closed
    neighborhoods are ``closed``.
    """
    n = len(closed)
    _check_scan_order(n)
    if n == 0:
        return 0
    full = (1 << n) - 1
    table = _union_table(closed)
    best = n  # S = empty: every vertex pays 1
    for m in range(1, 1 << n):
        base = 2 * m.bit_count()
        if base >= best:
            continue
        w = base + (full & ~table[m]).bit_count()
        if w < best:
            best = w
    return best


def min_cover_masks(closed):
    """All subsets attaining min_weight_cover, as masks in ascending order."""
    n = len(closed)
    _check_scan_order(n)
    if n == 0:
        return [0]
    full = (1 << n) - 1
    table = _union_table(closed)
    best = n
    out = [0]
    for m in range(1, 1 << n):
        w = 2 * m.bit_count() + (full & ~table[m]).bit_count()
        if w < best:
            best = w
            out = [m]
        elif w == best:
            out.append(m)
    return out


def min_dominating_size(closed):
    n = len(closed)
    _check_scan_order(n)
    if n == 0:
        return 0
    full = (1 << n) - 1
    table = _union_table(closed)
    best = n
    for m in range(1, 1 << n):
        if table[m] == full:
            k = m.bit_count()
            if k < best:
                best = k
    return best


def min_dominating_masks(closed):
    n = len(closed)
    _check_scan_order(n)
    if n == 0:
        return [0]
    full = (1 << n) - 1
    table = _union_table(closed)
    best = n + 1
    out = []
    for m in range(1, 1 << n):
        if table[m] != full:
            continue
        k = m.bit_count()
        if k < best:
            best = k
            out = [m]
        elif k == best:
            out.append(m)
    return out


def max_differential(open_rows):
    """max over S of |B(S)| - |S| where B(S) are outside vertices with a
    neighbor in S.  Uses open neighborhoods only; deliberately a separate
    code path from min_weight_cover so the two can cross-check each other.
    """
    n = len(open_rows)
    _check_scan_order(n)
    if n == 0:
        return 0
    table = _union_table(open_rows)
    best = 0  # S = empty
    for m in range(1, 1 << n):
        d = (table[m] & ~m).bit_count() - m.bit_count()
        if d > best:
            best = d
    return best


def max_differential_masks(open_rows):
    n = len(open_rows)
    _check_scan_order(n)
    if n == 0:
        return [0]
    table = _union_table(open_rows)
    best = 0
    out = [0]
    for m in range(1, 1 << n):
        d = (table[m] & ~m).bit_count() - m.bit_count()
        if d > best:
            best = d
            out = [m]
        elif d == best:
            out.append(m)
    return out


def efficient_dominating_masks(closed):
    """All S whose closed neighborhoods partition the vertex set."""
    n = len(closed)
    _check_scan_order(n)
    if n == 0:
        return [0]
    full = (1 << n) - 1
    table = _union_table(closed)
    sizes = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        sizes[m] = sizes[m ^ low] + closed[low.bit_length() - 1].bit_count()
    return [m for m in range(1, 1 << n) if table[m] == full and sizes[m] == n]


def _position_degrees(rows):
    return sorted((r.bit_count() for r in rows), reverse=True)


def canonical_permutation(rows):
    """Permutation (position -> vertex) giving the lexicographically smallest
    upper-triangle adjacency bitstring among all placements that list vertex
    degrees in nonincreasing order.

    The restriction to degree-sorted placements is isomorphism-invariant, so
    equal canonical strings still characterize isomorphism; it just prunes
    the search.
    """
    n = len(rows)
    if n <= 1:
        return list(range(n))
    deg = [r.bit_count() for r in rows]
    posdeg = _position_degrees(rows)

    perm = [0] * n
    cur = [0] * n
    best_cols = None
    best_perm = None

    def descend(pos, used, tight):
        # tight: best exists and cur[0..pos-1] equals its prefix
        nonlocal best_cols, best_perm
        if pos == n:
            if best_cols is None or cur < best_cols:
                best_cols = cur.copy()
                best_perm = perm.copy()
                return True
            return False
        want = posdeg[pos]
        cands = []
        for v in range(n):
            if used >> v & 1 or deg[v] != want:
                continue
            col = 0
            row = rows[v]
            for i in range(pos):
                col = (col << 1) | (row >> perm[i] & 1)
            cands.append((col, v))
        cands.sort()
        improved = False
        for col, v in cands:
            if tight:
                b = best_cols[pos]
                if col > b:
                    break  # candidates are sorted; the rest are worse
                child_tight = col == b
            else:
                child_tight = False
            perm[pos] = v
            cur[pos] = col
            if descend(pos + 1, used | (1 << v), child_tight):
                # best now runs through the current prefix; re-tighten so
                # the remaining sorted candidates prune against it
                improved = True
                tight = True
        return improved

    descend(0, 0, False)
    return best_perm


def _is_connected_rows(rows, n):
    if n == 0:
        return True
    seen = 1
    while True:
        grow = seen
        m = seen
        while m:
            low = m & -m
            grow |= rows[low.bit_length() - 1]
            m ^= low
        if grow == seen:
            break
        seen = grow
    return seen == (1 << n) - 1


def _triangle_code(cols, n):
    """Pack per-position column codes into the graph6 bit order.

    Bit index of pair (i, j), i < j, is j(j-1)/2 + i; column j stores bit i
    at position j-1-i (MSB first).
    """
    code = 0
    idx = 0
    for j in range(1, n):
        col = cols[j]
        for i in range(j):
            bit = (col >> (j - 1 - i)) & 1
            code |= bit << idx
            idx += 1
    return code


def canonical_signature(rows):
    """Canonical upper-triangle bit code of the graph, order implicit."""
    n = len(rows)
    if n <= 1:
        return 0
    if n > 10:
        # parity with the compiled backend, whose code is one machine word
        raise ValueError("canonical_signature limited to 10 vertices")
    perm = canonical_permutation(rows)
    cols = [0] * n
    for j in range(1, n):
        col = 0
        rowj = rows[perm[j]]
        for i in range(j):
            col = (col << 1) | (rowj >> perm[i] & 1)
        cols[j] = col
    return _triangle_code(cols, n)


def connected_canonical_signatures(n):
    """Canonical signatures of all connected graphs on n vertices, one per
    isomorphism class, ascending.  Exhausts all 2^(n(n-1)/2) labeled graphs.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return [0]
    if n > 7:
        raise ValueError("exhaustive connected generation limited to 7 vertices")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    nedges = len(pairs)
    seen = set()
    for mask in range(1 << nedges):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            m ^= low
        if not _is_connected_rows(rows, n):
            continue
        seen.add(canonical_signature(rows))
    return sorted(seen)
