"""Forests: validated acyclic graphs with deterministic traversal order.

Vertices are 0-based ints.  Neighbors are stored in one flat array with
per-vertex offsets (CSR layout) and are sorted ascending; every
traversal in the package walks them in that order, which makes all
downstream output reproducible byte for byte.  ``adjacency`` exposes
the same data as per-vertex lists for convenience.  A ``Forest`` is
never mutated after ``build_forest`` returns; concurrent reads are safe.
"""

from __future__ import annotations

from array import array

from .errors import ValidationError

#: A path is the ordered vertex sequence from its first to its last vertex.
VertexPath = tuple


class Forest:
    __slots__ = ("vertex_count", "edges", "neighbors", "offsets",
                 "component_id", "component_count", "_adjacency",
                 "_matching", "_support")

    def __init__(self, vertex_count, edges, neighbors, offsets,
                 component_id, component_count):
        self.vertex_count = vertex_count
        self.edges = edges            # canonical (u, v) pairs, u < v, sorted
        self.neighbors = neighbors   # flat sorted neighbor array
        self.offsets = offsets       # vertex v owns neighbors[offsets[v]:offsets[v+1]]
        self.component_id = component_id
        self.component_count = component_count
        self._adjacency = None
        self._matching = None   # memoized deterministic matching
        self._support = None    # memoized support info

    @property
    def adjacency(self) -> list:
        """Per-vertex sorted neighbor lists (materialized on demand)."""
        if self._adjacency is None:
            nbs, off = self.neighbors, self.offsets
            self._adjacency = [list(nbs[off[v]:off[v + 1]])
                               for v in range(self.vertex_count)]
        return self._adjacency

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.offsets[v + 1] - self.offsets[v]

    def neighbors_of(self, v: int) -> list:
        return list(self.neighbors[self.offsets[v]:self.offsets[v + 1]])

    def same_component(self, v: int, w: int) -> bool:
        return self.component_id[v] == self.component_id[w]

    def __eq__(self, other):
        return (isinstance(other, Forest)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __repr__(self):
        return ("Forest(n=%d, edges=%d, components=%d)"
                % (self.vertex_count, len(self.edges), self.component_count))


def build_forest(vertex_count: int, edge_list) -> Forest:
    """Validate and index an acyclic edge list.

    Rejects out-of-range vertices, loops, duplicate edges and cycles
    (a cycle report names the closing edge).
    """
    if vertex_count < 0:
        raise ValidationError("vertex count must be non-negative")
    canonical = []
    append = canonical.append
    for e in edge_list:
        u, v = e
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValidationError("edge (%r, %r) out of range for %d vertices"
                                  % (u, v, vertex_count))
        if u == v:
            raise ValidationError("loop edge at vertex %d" % u)
        if u < v:
            append(e if type(e) is tuple else (u, v))
        else:
            append((v, u))
    canonical.sort()
    prev = None
    for e in canonical:
        if e == prev:
            raise ValidationError("duplicate edge (%d, %d)" % e)
        prev = e

    neighbors, offsets = _csr(vertex_count, canonical)

    # Label components by one sweep; forests have exactly n - #components
    # edges, anything more means a cycle (named by a second, slower pass).
    component_id = [-1] * vertex_count
    count = 0
    for r in range(vertex_count):
        if component_id[r] >= 0:
            continue
        component_id[r] = count
        stack = [r]
        pop = stack.pop
        push = stack.append
        while stack:
            x = pop()
            for j in range(offsets[x], offsets[x + 1]):
                y = neighbors[j]
                if component_id[y] < 0:
                    component_id[y] = count
                    push(y)
        count += 1
    if len(canonical) != vertex_count - count:
        raise ValidationError("cycle detected at edge (%d, %d)"
                              % _find_cycle_edge(vertex_count, canonical))

    return Forest(vertex_count, canonical, neighbors, offsets,
                  component_id, count)


def _csr(vertex_count, canonical_edges):
    """Flat sorted neighbor array; sortedness follows from the edges
    being scanned in canonical order.

    The result is packed into C int arrays: compact, contiguous, and
    much kinder to the cache than int objects scattered over the heap.
    """
    degree = [0] * (vertex_count + 1)
    for u, v in canonical_edges:
        degree[u + 1] += 1
        degree[v + 1] += 1
    offsets = degree
    for i in range(1, vertex_count + 1):
        offsets[i] += offsets[i - 1]
    neighbors = [0] * (2 * len(canonical_edges))
    cursor = offsets[:vertex_count]
    for u, v in canonical_edges:
        neighbors[cursor[u]] = v
        cursor[u] += 1
        neighbors[cursor[v]] = u
        cursor[v] += 1
    return array("i", neighbors), array("i", offsets)


def _find_cycle_edge(vertex_count, edges):
    """First edge (in canonical order) that closes a cycle."""
    root = list(range(vertex_count))
    for u, v in edges:
        x = u
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        y = v
        while root[y] != y:
            root[y] = root[root[y]]
            y = root[y]
        if x == y:
            return (u, v)
        root[max(x, y)] = min(x, y)
    raise AssertionError("no cycle edge found in a cyclic edge list")


def path(f: Forest, v: int, w: int) -> VertexPath:
    """The unique path from v to w, as a directed vertex sequence."""
    _check_vertex(f, v)
    _check_vertex(f, w)
    if not f.same_component(v, w):
        raise ValidationError("vertices %d and %d lie in different components" % (v, w))
    if v == w:
        return (v,)
    neighbors, offsets = f.neighbors, f.offsets
    parent = {v: -1}
    frontier = [v]
    found = False
    while frontier and not found:
        nxt = []
        for cur in frontier:
            for j in range(offsets[cur], offsets[cur + 1]):
                nb = neighbors[j]
                if nb not in parent:
                    parent[nb] = cur
                    if nb == w:
                        found = True
                        break
                    nxt.append(nb)
            if found:
                break
        frontier = nxt
    out = []
    cur = w
    while cur != -1:
        out.append(cur)
        cur = parent[cur]
    out.reverse()
    return tuple(out)


def second_vertex(f: Forest, v: int, w: int) -> int:
    """The vertex right after v on the path from v to w."""
    if v == w:
        raise ValidationError("second vertex is undefined for v == w (v=%d)" % v)
    return path(f, v, w)[1]


def connected_components(f: Forest) -> list:
    """Vertex lists per component, components ordered by smallest member."""
    out = [[] for _ in range(f.component_count)]
    for v in range(f.vertex_count):
        out[f.component_id[v]].append(v)
    return out


class InducedForest:
    __slots__ = ("forest", "to_parent", "from_parent")

    def __init__(self, forest, to_parent, from_parent):
        self.forest = forest
        self.to_parent = to_parent    # new id -> old id (ascending old ids)
        self.from_parent = from_parent  # old id -> new id


def induced_subgraph(f: Forest, vertex_set) -> InducedForest:
    """The forest induced on ``vertex_set``, with the old/new id maps."""
    keep = sorted(set(vertex_set))
    for v in keep:
        _check_vertex(f, v)
    from_parent = {old: new for new, old in enumerate(keep)}
    edges = [(from_parent[u], from_parent[v]) for u, v in f.edges
             if u in from_parent and v in from_parent]
    return InducedForest(build_forest(len(keep), edges), keep, from_parent)


def _check_vertex(f: Forest, v: int):
    if not (0 <= v < f.vertex_count):
        raise ValidationError("vertex %r out of range for %d vertices" % (v, f.vertex_count))
