"""Small matroids: uniform, graphic, and direct sums."""
from itertools import combinations

from permutahedra import matroid as mt


def uniforms(max_n=6):
    return [mt.uniform(r, n) for n in range(1, max_n + 1) for r in range(n + 1)]


def _connected(n, edges):
    seen, stack = {1}, [1]
    while stack:
        v = stack.pop()
        for a, b in edges:
            for p, q in ((a, b), (b, a)):
                if p == v and q not in seen:
                    seen.add(q)
                    stack.append(q)
    return len(seen) == n


def connected_graphs(max_v=4):
    """Every connected simple graph on 2..max_v labeled vertices."""
    out = []
    for n in range(2, max_v + 1):
        all_edges = list(combinations(range(1, n + 1), 2))
        for k in range(n - 1, len(all_edges) + 1):
            for es in combinations(all_edges, k):
                if _connected(n, es):
                    out.append((n, list(es)))
    return out


def graphics(max_v=4):
    return [mt.graphic(n, es) for n, es in connected_graphs(max_v)]


def direct_sums():
    small = [mt.uniform(r, n) for n in (1, 2, 3) for r in range(n + 1)]
    return [mt.direct_sum(a, b) for a in small for b in small if a.m + b.m <= 5]


def full_corpus():
    return uniforms() + graphics() + direct_sums()
