"""Spanning-tree counts of power graphs: exact engines and closed forms."""
from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd

from .arith import DEFAULT_FACTOR_BOUND, FactoredInt, prime_power
from .determinant import det_bareiss, det_crt, ones_plus_laplacian
from .graphs import Graph, build_power_graph
from .groups import cyclic_group

BAREISS_MAX_DIM = 64  # beyond this, matrix-tree switches to the CRT determinant
DC_VERTEX_LIMIT = 12
CROSS_CHECK_MAX_DIM = 64

ENGINES = ("auto", "matrix_tree", "crt", "decomposition", "deletion_contraction")


def _require_connected(graph: Graph) -> None:
    if not graph.is_connected():
        raise ValueError("spanning-tree count requires a connected graph")


def kappa_matrix_tree(graph: Graph, det: str = "auto",
                      factor_bound: int = DEFAULT_FACTOR_BOUND) -> FactoredInt:
    """Spanning-tree count as det(J + Q) / n^2 on the whole graph.

    ``det`` picks the determinant backend: "bareiss", "crt", or "auto"
    (Bareiss up to dimension 64, CRT above).
    """
    _require_connected(graph)
    matrix = ones_plus_laplacian(graph)
    if det == "bareiss" or (det == "auto" and graph.n <= BAREISS_MAX_DIM):
        value = det_bareiss(matrix)
    elif det in ("crt", "auto"):
        value = det_crt(matrix)
    else:
        raise ValueError(f"unknown determinant backend {det!r}")
    count, rem = divmod(value, graph.n * graph.n)
    assert rem == 0, "det(J+Q) must be divisible by n^2 on a connected graph"
    return FactoredInt.from_int(count, factor_bound)


def kappa_decomposed(graph: Graph, det: str = "auto",
                     factor_bound: int = DEFAULT_FACTOR_BOUND) -> FactoredInt:
    """Spanning-tree count as the product over biconnected blocks.

    Complete blocks contribute m^(m-2) directly; every other block goes
    through the matrix-tree engine on the induced subgraph.
    """
    _require_connected(graph)
    result = FactoredInt.one()
    for block in graph.biconnected_blocks():
        sub = graph.subgraph(block)
        m = len(block)
        if sub.is_complete():
            result = result * FactoredInt.from_int(m, factor_bound) ** (m - 2)
        else:
            result = result * kappa_matrix_tree(sub, det, factor_bound)
    return result


def _multigraph_tree_count(vertices: frozenset[int],
                           edges: frozenset[tuple[int, int, int]],
                           memo: dict) -> int:
    """Deletion-contraction on a multigraph given as (u, v, multiplicity) classes."""
    if len(vertices) <= 1:
        return 1
    if not edges:
        return 0
    key = (vertices, edges)
    cached = memo.get(key)
    if cached is not None:
        return cached
    adjacency: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v, _ in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    # connectivity
    start = next(iter(vertices))
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for x in frontier:
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    if len(seen) != len(vertices):
        memo[key] = 0
        return 0
    # cut edges are forced: contract them without branching
    bridge = _find_bridge(vertices, adjacency, edges)
    if bridge is not None:
        result = _multigraph_tree_count(*_contract(vertices, edges, bridge), memo)
        memo[key] = result
        return result
    u, v, mult = min(edges)
    deleted = frozenset(e for e in edges if e != (u, v, mult))
    if mult > 1:
        deleted |= {(u, v, mult - 1)}
    result = _multigraph_tree_count(vertices, deleted, memo) + _multigraph_tree_count(
        *_contract(vertices, edges, (u, v, mult)), memo
    )
    memo[key] = result
    return result


def _find_bridge(vertices, adjacency, edges):
    multiplicity = {}
    for u, v, m in edges:
        multiplicity[(u, v)] = m
    order = {}
    low = {}
    timer = [0]
    result = []
    start = next(iter(vertices))
    stack = [(start, None, iter(adjacency[start]))]
    order[start] = low[start] = 0
    timer[0] = 1
    while stack:
        v, parent, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] > order[u]:
                    pair = (u, v) if u < v else (v, u)
                    if multiplicity[pair] == 1:
                        result.append(pair + (1,))
            continue
        if w == parent:
            continue
        if w in order:
            if order[w] < low[v]:
                low[v] = order[w]
        else:
            order[w] = low[w] = timer[0]
            timer[0] += 1
            stack.append((w, v, iter(adjacency[w])))
    return result[0] if result else None


def _contract(vertices, edges, edge):
    u, v, _ = edge
    keep, drop = (u, v) if u < v else (v, u)
    merged: dict[tuple[int, int], int] = {}
    for a, b, m in edges:
        if (a, b) == (keep, drop) or (a, b) == (drop, keep):
            continue  # contracted copies become loops and vanish
        a = keep if a == drop else a
        b = keep if b == drop else b
        if a == b:
            continue
        pair = (a, b) if a < b else (b, a)
        merged[pair] = merged.get(pair, 0) + m
    new_vertices = frozenset(x for x in vertices if x != drop)
    new_edges = frozenset((a, b, m) for (a, b), m in merged.items())
    return new_vertices, new_edges


def kappa_deletion_contraction(graph: Graph, vertex_limit: int = DC_VERTEX_LIMIT,
                               factor_bound: int = DEFAULT_FACTOR_BOUND) -> FactoredInt:
    """Spanning-tree count by the deletion-contraction recurrence (small graphs only)."""
    if graph.n > vertex_limit:
        raise ValueError(
            f"deletion-contraction is limited to {vertex_limit} vertices, got {graph.n}"
        )
    _require_connected(graph)
    vertices = frozenset(range(graph.n))
    edges = frozenset((a, b, 1) for a, b in graph.edges())
    count = _multigraph_tree_count(vertices, edges, {})
    return FactoredInt.from_int(count, factor_bound)


@dataclass(frozen=True)
class KappaReport:
    """A spanning-tree count with engine provenance."""

    kappa: FactoredInt
    engine: str
    cross_checked: bool
    wall_time: float


def compute_kappa(graph: Graph, engine: str = "auto",
                  factor_bound: int = DEFAULT_FACTOR_BOUND) -> KappaReport:
    """Run the requested engine; "auto" decomposes and cross-checks small graphs."""
    start = time.perf_counter()
    cross_checked = False
    if engine == "auto":
        value = kappa_decomposed(graph, "auto", factor_bound)
        name = "decomposition"
        if graph.n <= CROSS_CHECK_MAX_DIM:
            other = kappa_matrix_tree(graph, "bareiss", factor_bound)
            assert other.value == value.value, "engine disagreement on the same graph"
            cross_checked = True
    elif engine == "matrix_tree":
        value = kappa_matrix_tree(graph, "bareiss", factor_bound)
        name = "matrix_tree"
    elif engine == "crt":
        value = kappa_matrix_tree(graph, "crt", factor_bound)
        name = "crt"
    elif engine == "decomposition":
        value = kappa_decomposed(graph, "auto", factor_bound)
        name = "decomposition"
    elif engine == "deletion_contraction":
        value = kappa_deletion_contraction(graph, factor_bound=factor_bound)
        name = "deletion_contraction"
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return KappaReport(value, name, cross_checked, time.perf_counter() - start)


def kappa_of_group(group, engine: str = "auto",
                   factor_bound: int = DEFAULT_FACTOR_BOUND) -> KappaReport:
    return compute_kappa(build_power_graph(group), engine, factor_bound)


# -- closed forms --


def closed_form_quaternion(n: int) -> FactoredInt:
    """Tree count of the power graph of the order-4n generalized quaternion group,
    for n a power of two: 2^(5n-1) * n^(2n-2)."""
    pk = prime_power(n)
    if n < 2 or pk is None or pk[0] != 2:
        raise ValueError(f"closed form needs n a power of two with n >= 2, got {n}")
    exponent = 5 * n - 1 + pk[1] * (2 * n - 2)
    return FactoredInt(2 ** exponent, {2: exponent}, 1)


def closed_form_psl2(q: int, factor_bound: int = DEFAULT_FACTOR_BOUND) -> FactoredInt:
    """Tree count of the power graph of PSL(2, q), q = p^m a prime power.

    p^((q^2-1)(p-2)/(p-1)) times kappa of two cyclic groups raised to the
    point-pair counts; the cyclic counts come from the matrix-tree engine.
    The two smallest cases (q = 2, 3) fall outside the formula.
    """
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, _ = pk
    if q in (2, 3):
        raise ValueError(f"no closed form for q = {q}")
    k = gcd(2, q - 1)
    numerator = (q * q - 1) * (p - 2)
    assert numerator % (p - 1) == 0
    exponent = numerator // (p - 1)
    p_part = FactoredInt(p ** exponent, {p: exponent} if exponent else {}, 1)
    minus = _cyclic_kappa((q - 1) // k, factor_bound) ** (q * (q + 1) // 2)
    plus = _cyclic_kappa((q + 1) // k, factor_bound) ** (q * (q - 1) // 2)
    return p_part * minus * plus


def _cyclic_kappa(m: int, factor_bound: int) -> FactoredInt:
    if m == 1:
        return FactoredInt.one()
    return kappa_matrix_tree(build_power_graph(cyclic_group(m)), "auto", factor_bound)
