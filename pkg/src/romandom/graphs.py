"""Simple undirected graphs on dense vertex ids, graph6 I/O, neighborhood
primitives, named constructions, and small-order isomorphism utilities.

Vertices are always 0..order-1.  Adjacency is stored as one bitmask per
vertex, which is what the exact-search kernels consume directly.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import Graph6Error, GraphError, LimitExceededError

CANONICAL_ORDER_LIMIT = 10


class Graph:
    """Immutable simple graph: vertex count plus adjacency bitmasks.

    Instances are hashable and safe to share; every operation below returns
    a new graph.
    """

    __slots__ = ("order", "_adj", "_hash")

    def __init__(self, order: int, adj_masks: Sequence[int]):
        if order < 0:
            raise GraphError("order must be nonnegative")
        if len(adj_masks) != order:
            raise GraphError("adjacency rows must match order")
        full = (1 << order) - 1
        for v, row in enumerate(adj_masks):
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"adjacency row {v} mentions out-of-range vertices")
        for v, row in enumerate(adj_masks):
            m = row
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not adj_masks[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
                m ^= low
        self.order = order
        self._adj = tuple(adj_masks)
        self._hash = hash((order, self._adj))

    # -- basic accessors ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def adjacency_mask(self, v: int) -> int:
        """Open neighborhood of v as a bitmask."""
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def open_rows(self) -> tuple[int, ...]:
        return self._adj

    def closed_rows(self) -> list[int]:
        return [row | (1 << v) for v, row in enumerate(self._adj)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for v in range(self.order):
            m = self._adj[v] >> (v + 1) << (v + 1)
            while m:
                low = m & -m
                out.append((v, low.bit_length() - 1))
                m ^= low
        return out

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in nonincreasing order."""
        return tuple(sorted((r.bit_count() for r in self._adj), reverse=True))

    def min_degree(self) -> int:
        if self.order == 0:
            raise GraphError("empty graph has no degrees")
        return min(r.bit_count() for r in self._adj)

    def max_degree(self) -> int:
        if self.order == 0:
            raise GraphError("empty graph has no degrees")
        return max(r.bit_count() for r in self._adj)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def bits(mask: int) -> Iterator[int]:
    """Vertex ids in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with exactly the given edges.  Loops, out-of-range endpoints
    and duplicate edges are errors."""
    adj = [0] * order
    seen = set()
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, adj)


# -- graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_order(text: str) -> tuple[int, int]:
    """Decode the graph6 length field; returns (order, chars consumed)."""
    if not text:
        raise Graph6Error("empty graph6 string")
    c0 = ord(text[0]) - 63
    if c0 < 0 or c0 > 63:
        raise Graph6Error("length character out of range 63..126")
    if c0 < 63:
        return c0, 1
    # extended forms: '~' then 3 chars, or '~~' then 6 chars
    if len(text) >= 2 and text[1] == "~":
        chars = text[2:8]
        if len(chars) < 6:
            raise Graph6Error("truncated 8-byte length field")
        n = 0
        for ch in chars:
            d = ord(ch) - 63
            if d < 0 or d > 63:
                raise Graph6Error("length character out of range 63..126")
            n = (n << 6) | d
        return n, 8
    chars = text[1:4]
    if len(chars) < 3:
        raise Graph6Error("truncated 4-byte length field")
    n = 0
    for ch in chars:
        d = ord(ch) - 63
        if d < 0 or d > 63:
            raise Graph6Error("length character out of range 63..126")
        n = (n << 6) | d
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line.  The optional ``>>graph6<<`` header is
    stripped; the character count and zero padding are validated."""
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    n, used = _g6_order(line)
    body = line[used:]
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(body) != nchars:
        raise Graph6Error(
            f"expected {nchars} adjacency characters for order {n}, got {len(body)}"
        )
    adj = [0] * n
    idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for ch in body:
        d = ord(ch) - 63
        if d < 0 or d > 63:
            raise Graph6Error(f"character {ch!r} outside 63..126")
        for k in range(5, -1, -1):
            bit = (d >> k) & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                idx += 1
            elif bit:
                raise Graph6Error("nonzero padding bits")
    return Graph(n, adj)


def write_graph6(g: Graph) -> str:
    """graph6 line for graphs of order at most 62."""
    n = g.order
    if n > 62:
        raise GraphError("write_graph6 supports order <= 62")
    out = [chr(63 + n)]
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adjacency_mask(i) >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(63 + acc))
                acc = 0
                nacc = 0
    if nacc:
        acc <<= 6 - nacc
        out.append(chr(63 + acc))
    return "".join(out)


# -- neighborhood primitives ---------------------------------------------------


def private_neighbors(g: Graph, x: int, members: Iterable[int]) -> frozenset[int]:
    """Vertices y with N[y] intersecting the set exactly in {x}.

    x itself is included when its only set member in N[x] is x.
    """
    xmask = mask_of(members)
    if not xmask >> x & 1:
        raise GraphError(f"vertex {x} is not in the given set")
    want = 1 << x
    return frozenset(
        y for y in range(g.order) if g.closed_mask(y) & xmask == want
    )


def boundary(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Vertices outside the set having a neighbor inside it."""
    smask = mask_of(vertices)
    if smask & ~g.full_mask:
        raise GraphError("set contains out-of-range vertices")
    reach = 0
    for v in bits(smask):
        reach |= g.adjacency_mask(v)
    return frozenset(bits(reach & ~smask))


# -- deletions and components --------------------------------------------------


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove v, relabel the rest contiguously; returns the old-to-new map."""
    if not (0 <= v < g.order):
        raise GraphError(f"vertex {v} not in graph of order {g.order}")
    keep = [u for u in range(g.order) if u != v]
    old_to_new = {u: i for i, u in enumerate(keep)}
    edges = [
        (old_to_new[a], old_to_new[b]) for a, b in g.edges() if a != v and b != v
    ]
    return build_graph(g.order - 1, edges), old_to_new


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove several vertices at once; same relabelling contract."""
    dropset = set(drop)
    for v in dropset:
        if not (0 <= v < g.order):
            raise GraphError(f"vertex {v} not in graph of order {g.order}")
    keep = [u for u in range(g.order) if u not in dropset]
    old_to_new = {u: i for i, u in enumerate(keep)}
    edges = [
        (old_to_new[a], old_to_new[b])
        for a, b in g.edges()
        if a not in dropset and b not in dropset
    ]
    return build_graph(len(keep), edges), old_to_new


def delete_edges(g: Graph, drop: Iterable[tuple[int, int]]) -> Graph:
    """Remove the given edges; vertex labels are preserved."""
    adj = list(g.open_rows())
    for e in drop:
        u, v = e
        if not (0 <= u < g.order and 0 <= v < g.order) or not adj[u] >> v & 1:
            raise GraphError(f"edge ({u}, {v}) not present")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.order, adj)


def incident_edges(g: Graph, v: int) -> list[tuple[int, int]]:
    return [(min(v, u), max(v, u)) for u in bits(g.adjacency_mask(v))]


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Component subgraphs with their vertex maps (new id -> old id)."""
    seen = 0
    out = []
    for start in range(g.order):
        if seen >> start & 1:
            continue
        comp = 1 << start
        while True:
            grow = comp
            for v in bits(comp):
                grow |= g.adjacency_mask(v)
            if grow == comp:
                break
            comp = grow
        seen |= comp
        old_ids = tuple(bits(comp))
        old_to_new = {u: i for i, u in enumerate(old_ids)}
        edges = [
            (old_to_new[a], old_to_new[b])
            for a, b in g.edges()
            if comp >> a & 1 and comp >> b & 1
        ]
        out.append((build_graph(len(old_ids), edges), old_ids))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.order > 0 and is_connected(g) and g.size == g.order - 1


def is_forest(g: Graph) -> bool:
    return all(c.size == c.order - 1 for c, _ in connected_components(g))


def is_unicyclic(g: Graph) -> bool:
    return is_connected(g) and g.size == g.order


# -- named constructions -------------------------------------------------------


def edgeless_graph(n: int) -> Graph:
    return build_graph(n, [])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for j in range(n) for i in range(j)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 0 or n < 0:
        raise GraphError("part sizes must be nonnegative")
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """Star on n vertices: center 0 adjacent to the n-1 leaves."""
    if n < 1:
        raise GraphError("star needs at least 1 vertex")
    return build_graph(n, [(0, i) for i in range(1, n)])


def cube_graph() -> Graph:
    """3-cube: vertices are 3-bit ids, edges join ids at Hamming distance 1."""
    edges = []
    for v in range(8):
        for b in (1, 2, 4):
            if v < v ^ b:
                edges.append((v, v ^ b))
    return build_graph(8, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    edges = g.edges() + [(a + shift, b + shift) for a, b in h.edges()]
    return build_graph(g.order + h.order, edges)


def join_graph(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    shift = g.order
    edges = g.edges() + [(a + shift, b + shift) for a, b in h.edges()]
    edges += [(a, b + shift) for a in range(g.order) for b in range(h.order)]
    return build_graph(g.order + h.order, edges)


def two_cliques_bridge(r: int) -> Graph:
    """Two disjoint copies of K_r joined by a single bridge (0, r); r >= 4."""
    if r < 4:
        raise GraphError("two_cliques_bridge requires r >= 4")
    edges = [(i, j) for j in range(r) for i in range(j)]
    edges += [(r + i, r + j) for j in range(r) for i in range(j)]
    edges.append((0, r))
    return build_graph(2 * r, edges)


def figure3_graph() -> Graph:
    """4-cycle 0-1-2-3 with pendant leaves 4,5 at vertex 0 and 6,7 at 2.

    The unique 8-vertex unicyclic graph whose Roman domination number
    survives every single-vertex deletion.
    """
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (0, 5), (2, 6), (2, 7)]
    return build_graph(8, edges)


# -- isomorphism utilities -----------------------------------------------------


def permute(g: Graph, old_to_new: Sequence[int]) -> Graph:
    """Relabel vertices: old_to_new[v] is the new id of v."""
    if sorted(old_to_new) != list(range(g.order)):
        raise GraphError("not a permutation of the vertex ids")
    edges = [(old_to_new[a], old_to_new[b]) for a, b in g.edges()]
    return build_graph(g.order, edges)


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph.

    Equal canonical forms characterize isomorphism.  Brute-force search
    pruned by degree partition; capped at order 10.
    """
    if g.order > CANONICAL_ORDER_LIMIT:
        raise LimitExceededError(
            f"canonical_form limited to order {CANONICAL_ORDER_LIMIT}, got {g.order}"
        )
    perm = kernels.canonical_permutation(g.open_rows())
    pos_of = [0] * g.order
    for pos, v in enumerate(perm):
        pos_of[v] = pos
    return write_graph6(permute(g, pos_of)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test: canonical forms for order <= 10, encoding-based
    comparison for forests of any order."""
    if g.order != h.order or g.size != h.size:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    if is_forest(g) and is_forest(h):
        return forest_canonical_key(g) == forest_canonical_key(h)
    return canonical_form(g) == canonical_form(h)


# -- tree encodings ------------------------------------------------------------


def _tree_centroids(adj: Sequence[int], vertices: Sequence[int]) -> list[int]:
    """Centroid vertices (1 or 2, adjacent) of a tree given by bitmask rows,
    restricted to the listed vertex ids."""
    n = len(vertices)
    if n == 1:
        return [vertices[0]]
    alive = mask_of(vertices)
    root = vertices[0]
    order = []
    parent = {root: None}
    stack = [root]
    seen = 1 << root
    while stack:
        v = stack.pop()
        order.append(v)
        for u in bits(adj[v] & alive):
            if not seen >> u & 1:
                seen |= 1 << u
                parent[u] = v
                stack.append(u)
    size = {v: 1 for v in vertices}
    heaviest = {v: 0 for v in vertices}
    for v in reversed(order):
        p = parent[v]
        if p is not None:
            size[p] += size[v]
            heaviest[p] = max(heaviest[p], size[v])
    best = None
    out: list[int] = []
    for v in vertices:
        weight = max(heaviest[v], n - size[v])
        if best is None or weight < best:
            best = weight
            out = [v]
        elif weight == best:
            out.append(v)
    return out


def _rooted_code(adj: Sequence[int], alive: int, v: int, parent: int | None, depth: int) -> list[int]:
    subs = sorted(
        (
            _rooted_code(adj, alive, u, v, depth + 1)
            for u in bits(adj[v] & alive)
            if u != parent
        ),
        reverse=True,
    )
    out = [depth]
    for s in subs:
        out.extend(s)
    return out


def tree_canonical_key(g: Graph) -> bytes:
    """Canonical level-sequence encoding of a tree, rooted at its centroid.

    Works for any order; equal keys characterize tree isomorphism.
    """
    if not is_tree(g):
        raise GraphError("tree_canonical_key requires a tree")
    adj = g.open_rows()
    vertices = list(range(g.order))
    cents = _tree_centroids(adj, vertices)
    alive = g.full_mask
    code = max(tuple(_rooted_code(adj, alive, c, None, 0)) for c in cents)
    return bytes([g.order]) + bytes(code)


def forest_canonical_key(g: Graph) -> bytes:
    """Multiset of component tree keys; characterizes forest isomorphism."""
    keys = []
    for comp, _ in connected_components(g):
        if comp.size != comp.order - 1:
            raise GraphError("forest_canonical_key requires a forest")
        keys.append(tree_canonical_key(comp))
    return b"|".join(sorted(keys))
