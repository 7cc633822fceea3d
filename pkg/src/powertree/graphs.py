"""Undirected graphs on bitset adjacency rows; power graphs of finite groups."""
from __future__ import annotations

import json
from dataclasses import dataclass


class Graph:
    """Simple undirected graph; row i is an int bitmask of the neighbors of i."""

    def __init__(self, n: int, rows: list[int] | None = None):
        self.n = n
        self.rows = list(rows) if rows is not None else [0] * n
        if len(self.rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(self.rows)}")

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        g = cls(n)
        for a, b in edges:
            g.add_edge(a, b)
        return g

    def add_edge(self, a: int, b: int) -> None:
        if a == b:
            raise ValueError(f"loop at vertex {a} in a simple graph")
        self.rows[a] |= 1 << b
        self.rows[b] |= 1 << a

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int):
        row = self.rows[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.rows[v] >> (v + 1) << (v + 1)  # neighbors above v
            while row:
                low = row & -row
                out.append((v, low.bit_length() - 1))
                row ^= low
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.rows[v] == full ^ (1 << v) for v in range(self.n))

    def components(self) -> list[list[int]]:
        """Connected components by breadth-first search over bitmasks."""
        unseen = (1 << self.n) - 1
        out = []
        while unseen:
            start = unseen & -unseen
            comp = start
            frontier = start
            unseen ^= start
            while frontier:
                grown = 0
                row = frontier
                while row:
                    low = row & -row
                    grown |= self.rows[low.bit_length() - 1]
                    row ^= low
                frontier = grown & unseen
                comp |= frontier
                unseen &= ~frontier
            out.append(_bits(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def subgraph(self, vertices) -> Graph:
        vertices = list(vertices)
        position = {v: i for i, v in enumerate(vertices)}
        mask = 0
        for v in vertices:
            mask |= 1 << v
        sub = Graph(len(vertices))
        for i, v in enumerate(vertices):
            row = self.rows[v] & mask
            while row:
                low = row & -row
                sub.rows[i] |= 1 << position[low.bit_length() - 1]
                row ^= low
        return sub

    def _block_search(self) -> tuple[list[list[int]], set[int]]:
        """Iterative depth-first search for biconnected blocks and cut vertices."""
        n = self.n
        disc = [0] * n
        low = [0] * n
        parent = [-1] * n
        blocks: list[list[int]] = []
        cuts: set[int] = set()
        edge_stack: list[tuple[int, int]] = []
        timer = 1
        for root in range(n):
            if disc[root]:
                continue
            disc[root] = low[root] = timer
            timer += 1
            stack = [(root, self.neighbors(root))]
            root_children = 0
            while stack:
                v, it = stack[-1]
                w = next(it, None)
                if w is None:
                    stack.pop()
                    if not stack:
                        break
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        members = set()
                        while True:
                            e = edge_stack.pop()
                            members.update(e)
                            if e == (u, v):
                                break
                        blocks.append(sorted(members))
                        if u == root:
                            root_children += 1
                        else:
                            cuts.add(u)
                    continue
                if disc[w] == 0:
                    edge_stack.append((v, w))
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, self.neighbors(w)))
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if root_children > 1:
                cuts.add(root)
        return blocks, cuts

    def biconnected_blocks(self) -> list[list[int]]:
        """Vertex sets of the biconnected blocks (each bridge is its own block)."""
        return self._block_search()[0]

    def articulation_points(self) -> set[int]:
        return self._block_search()[1]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class PowerGraph(Graph):
    """Power graph of a finite group: x ~ y iff one generates a subgroup containing the other.

    Vertices carry the underlying element indices (``element_of``), so reduced
    graphs keep stable ids after the identity is deleted.
    """

    def __init__(self, n, rows, group, element_of, identity_vertex):
        super().__init__(n, rows)
        self.group = group
        self.element_of = list(element_of)
        self.identity_vertex = identity_vertex

    @property
    def labels(self) -> list[str]:
        return [self.group.element_label(e) for e in self.element_of]


def build_power_graph(group) -> PowerGraph:
    """The (full, undirected) power graph of a finite group."""
    n = group.n
    rows = [0] * n
    for g in range(n):
        for member in group.cyclic_subgroup(g):
            if member != g:
                rows[g] |= 1 << member
                rows[member] |= 1 << g
    return PowerGraph(n, rows, group, range(n), group.identity)


def reduced_power_graph(pg: PowerGraph) -> PowerGraph:
    """The power graph with the identity vertex deleted."""
    if pg.identity_vertex is None:
        raise ValueError("graph has no identity vertex to delete")
    keep = [v for v in range(pg.n) if v != pg.identity_vertex]
    sub = pg.subgraph(keep)
    return PowerGraph(
        sub.n, sub.rows, pg.group, [pg.element_of[v] for v in keep], None
    )


@dataclass(frozen=True)
class Component:
    """One connected component of a reduced power graph."""

    elements: tuple[int, ...]  # element indices, ascending
    is_clique: bool
    witness: int | None  # generator of the cyclic p-subgroup filling a clique component

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[Component, ...]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.components]


def component_decomposition(group, reduced: PowerGraph | None = None) -> ComponentDecomposition:
    """Components of the reduced power graph, flagged as cliques with witnesses.

    For a clique component the witness is an element of maximal order (ties
    broken by smallest index) whose cyclic subgroup, minus the identity, is
    exactly the component.
    """
    if reduced is None:
        reduced = reduced_power_graph(build_power_graph(group))
    out = []
    for comp in reduced.components():
        mask = 0
        for v in comp:
            mask |= 1 << v
        clique = all(reduced.rows[v] & mask == mask ^ (1 << v) for v in comp)
        members = [reduced.element_of[v] for v in comp]
        witness = None
        if clique:
            best = max(
                members, key=lambda g: (group.order_of(g), -g)
            )
            generated = group.cyclic_subgroup(best) - {group.identity}
            if generated == set(members):
                witness = best
        out.append(Component(tuple(sorted(members)), clique, witness))
    out.sort(key=lambda c: (-c.size, c.elements))
    return ComponentDecomposition(tuple(out))


def full_degree_vertices(pg: PowerGraph) -> list[int]:
    """Element indices adjacent to every other vertex."""
    return [pg.element_of[v] for v in range(pg.n) if pg.degree(v) == pg.n - 1]


def to_dot(pg: PowerGraph) -> str:
    """GraphViz text; node ids are element indices."""
    lines = ["graph power {"]
    for v in range(pg.n):
        lines.append(f'  {pg.element_of[v]} [label="{pg.labels[v]}"];')
    for a, b in pg.edges():
        i, j = pg.element_of[a], pg.element_of[b]
        if i > j:
            i, j = j, i
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(pg: PowerGraph) -> dict:
    edges = sorted(tuple(sorted((pg.element_of[a], pg.element_of[b]))) for a, b in pg.edges())
    return {
        "n": pg.n,
        "identity": pg.identity_vertex,
        "labels": pg.labels,
        "edges": [list(e) for e in edges],
    }


def to_json(pg: PowerGraph) -> str:
    return json.dumps(to_json_dict(pg), indent=2) + "\n"
