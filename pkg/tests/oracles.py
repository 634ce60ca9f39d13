"""Independent brute-force oracles used to freeze expected values.

Everything here works from first definitions (label enumerations, subset
enumerations) and never calls the package solvers, so the tests can pit
the two against each other.
"""

from itertools import combinations, product


def brute_gamma_r(g):
    """Minimum weight over all 3^n labelings satisfying the 0-needs-a-2 rule."""
    n = g.order
    best = None
    for labels in product((0, 1, 2), repeat=n):
        ok = all(
            any(labels[u] == 2 for u in g.neighbors(v))
            for v in range(n)
            if labels[v] == 0
        )
        if not ok:
            continue
        w = sum(labels)
        if best is None or w < best:
            best = w
    return 0 if best is None else best


def brute_gamma_r_functions(g):
    """All optimal labelings as (V0, V1, V2) frozenset triples."""
    n = g.order
    best = None
    out = set()
    for labels in product((0, 1, 2), repeat=n):
        ok = all(
            any(labels[u] == 2 for u in g.neighbors(v))
            for v in range(n)
            if labels[v] == 0
        )
        if not ok:
            continue
        w = sum(labels)
        if best is None or w < best:
            best = w
            out = set()
        if w == best:
            out.add(
                tuple(
                    frozenset(v for v in range(n) if labels[v] == i)
                    for i in (0, 1, 2)
                )
            )
    return out


def brute_gamma(g):
    n = g.order
    for k in range(n + 1):
        for sub in combinations(range(n), k):
            covered = set(sub)
            for v in sub:
                covered.update(g.neighbors(v))
            if len(covered) == n:
                return k
    return 0


def brute_min_dominating_sets(g):
    n = g.order
    gamma = brute_gamma(g)
    out = []
    for sub in combinations(range(n), gamma):
        covered = set(sub)
        for v in sub:
            covered.update(g.neighbors(v))
        if len(covered) == n:
            out.append(frozenset(sub))
    return out


def brute_differential(g):
    n = g.order
    best = 0
    for k in range(n + 1):
        for sub in combinations(range(n), k):
            inside = set(sub)
            bnd = set()
            for v in sub:
                bnd.update(g.neighbors(v))
            bnd -= inside
            best = max(best, len(bnd) - k)
    return best


def brute_efficient_dominating_sets(g):
    n = g.order
    out = []
    for k in range(n + 1):
        for sub in combinations(range(n), k):
            closed = [set(g.neighbors(v)) | {v} for v in sub]
            union = set().union(*closed) if closed else set()
            if len(union) == n and sum(len(c) for c in closed) == n:
                out.append(frozenset(sub))
    return out


def brute_bondage(g, brute_gamma_r_fn=brute_gamma_r, max_k=None):
    """First subset size whose deletion raises the Roman domination number."""
    from romandom.graphs import delete_edges

    base = brute_gamma_r_fn(g)
    edges = g.edges()
    top = max_k if max_k is not None else len(edges)
    for k in range(1, top + 1):
        for sub in combinations(edges, k):
            if brute_gamma_r_fn(delete_edges(g, sub)) > base:
                return k
    return None
