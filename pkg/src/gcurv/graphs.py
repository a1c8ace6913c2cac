"""Finite simple graphs with exact shortest-path metric utilities.

Vertices are integers 0..n-1.  Graphs are immutable once built; expensive
derived data (the distance matrix, per-edge analysis results) is cached on
the instance and computed at most once.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    InvalidParameterError,
    NotAdjacentError,
    ParseError,
    SelfLoopError,
)


class Graph:
    """Simple undirected graph.  Use build_graph to construct a validated one."""

    def __init__(self, n: int, edges: tuple, neighbors: tuple, connected: bool):
        self.n = n
        self.edges = edges          # sorted tuple of (u, v) with u < v
        self.neighbors = neighbors  # tuple of sorted vertex tuples
        self.connected = connected
        self._nbr_sets = tuple(frozenset(nb) for nb in neighbors)
        self._dist = None
        self.cache: dict = {}       # publish-once memo space for analysis modules

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def is_regular(self) -> bool:
        degs = {self.degree(v) for v in range(self.n)}
        return len(degs) == 1

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def dist_rows(self):
        """Distance matrix as a list of rows; treat as read only."""
        if self._dist is None:
            if not self.connected:
                raise DisconnectedError()
            self._dist = [_bfs_row(self, s) for s in range(self.n)]
        return self._dist

    def distance(self, u: int, v: int) -> int:
        return self.dist_rows()[u][v]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bfs_row(g: Graph, source: int) -> list:
    row = [-1] * g.n
    row[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = row[u]
        for w in g.neighbors[u]:
            if row[w] < 0:
                row[w] = du + 1
                q.append(w)
    return row


def _components(n: int, neighbors) -> list:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        q = deque([s])
        seen[s] = True
        while q:
            u = q.popleft()
            comp.append(u)
            for w in neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
        comps.append(comp)
    return comps


def _assemble(n: int, edge_list, require_connected: bool) -> Graph:
    nbrs = [[] for _ in range(n)]
    seen = set()
    norm = []
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidParameterError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(u)
        a, b = (u, v) if u < v else (v, u)
        if (a, b) in seen:
            raise DuplicateEdgeError(u, v)
        seen.add((a, b))
        norm.append((a, b))
        nbrs[a].append(b)
        nbrs[b].append(a)
    comps = _components(n, nbrs)
    connected = len(comps) == 1
    if require_connected and not connected:
        raise DisconnectedError(components=(comps[0], comps[1]))
    return Graph(
        n,
        tuple(sorted(norm)),
        tuple(tuple(sorted(nb)) for nb in nbrs),
        connected,
    )


def build_graph(n: int, edge_list) -> Graph:
    """Validated constructor: rejects self loops, duplicates, and disconnection."""
    if n < 1:
        raise InvalidParameterError("graph needs at least one vertex")
    return _assemble(n, edge_list, require_connected=True)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text edge-list format.

    First data line is "n m", followed by exactly m lines "u v" (0-based).
    Lines starting with '#' and blank lines are ignored.
    """
    header = None
    edges = []
    m_expected = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("header must be 'n m'", line=lineno)
            try:
                n, m_expected = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("header must contain two integers", line=lineno)
            header = (n, m_expected)
            continue
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge line must contain two integers", line=lineno)
        edges.append((u, v, lineno))
    if header is None:
        raise ParseError("empty input, expected 'n m' header", line=1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"expected {m} edges, found {len(edges)}")
    try:
        return build_graph(n, [(u, v) for u, v, _ in edges])
    except (SelfLoopError, DuplicateEdgeError, InvalidParameterError) as exc:
        bad = _locate_bad_edge(exc, edges)
        raise ParseError(str(exc), line=bad) from exc


def _locate_bad_edge(exc, edges):
    if isinstance(exc, SelfLoopError):
        for u, v, ln in edges:
            if u == v == exc.vertex:
                return ln
    if isinstance(exc, DuplicateEdgeError):
        seen = set()
        for u, v, ln in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                return ln
            seen.add(key)
    return None


def read_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def all_pairs_distances(g: Graph):
    """Exact BFS distance matrix as a tuple of tuples, cached on the graph."""
    key = "dist_tuple"
    if key not in g.cache:
        g.cache[key] = tuple(tuple(row) for row in g.dist_rows())
    return g.cache[key]


def sphere(g: Graph, x: int, r: int) -> tuple:
    """Vertices at distance exactly r from x, sorted."""
    if r < 0:
        raise InvalidParameterError("radius must be nonnegative")
    row = g.dist_rows()[x]
    return tuple(v for v in range(g.n) if row[v] == r)


def ball(g: Graph, x: int, r: int) -> tuple:
    """Vertices at distance at most r from x, sorted."""
    if r < 0:
        raise InvalidParameterError("radius must be nonnegative")
    row = g.dist_rows()[x]
    return tuple(v for v in range(g.n) if row[v] <= r)


@dataclass(frozen=True)
class SidePartition:
    """Split of the vertex set induced by an edge (x, y).

    side_x holds vertices strictly closer to x, side_y those strictly closer
    to y, middle the equidistant ones.  x and y are adjacent, so the three
    parts cover the vertex set and distances to x and y differ by at most 1.
    """

    x: int
    y: int
    side_x: tuple
    side_y: tuple
    middle: tuple


def side_partition(g: Graph, x: int, y: int) -> SidePartition:
    if not g.adjacent(x, y):
        raise NotAdjacentError(x, y)
    key = ("side", x, y)
    hit = g.cache.get(key)
    if hit is not None:
        return hit
    dx = g.dist_rows()[x]
    dy = g.dist_rows()[y]
    sx, sy, mid = [], [], []
    for v in range(g.n):
        if dx[v] < dy[v]:
            sx.append(v)
        elif dy[v] < dx[v]:
            sy.append(v)
        else:
            mid.append(v)
    part = SidePartition(x, y, tuple(sx), tuple(sy), tuple(mid))
    g.cache[key] = part
    return part


def effective_diameter(g: Graph) -> Fraction:
    """Average distance over all ordered vertex pairs, exact."""
    total = sum(sum(row) for row in g.dist_rows())
    return Fraction(total, g.n * g.n)


def is_locally_connected(g: Graph):
    """(True, None) if every punctured neighborhood is connected, else (False, witness)."""
    for v in range(g.n):
        nb = g.neighbors[v]
        if len(nb) <= 1:
            continue
        inside = set(nb)
        start = nb[0]
        seen = {start}
        q = deque([start])
        while q:
            u = q.popleft()
            for w in g._nbr_sets[u] & inside:
                if w not in seen:
                    seen.add(w)
                    q.append(w)
        if len(seen) != len(inside):
            return False, v
    return True, None


def induced_subgraph(g: Graph, s):
    """Induced subgraph on vertex subset s.

    Returns (subgraph, vertices) where vertices[i] is the original label of
    subgraph vertex i.  The result may be disconnected; metric operations on
    a disconnected graph raise DisconnectedError.
    """
    vs = sorted(set(s))
    if not vs:
        raise InvalidParameterError("induced subgraph needs a nonempty vertex set")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise InvalidParameterError("subset contains labels outside the graph")
    index = {v: i for i, v in enumerate(vs)}
    sub_edges = [
        (index[u], index[v])
        for (u, v) in g.edges
        if u in index and v in index
    ]
    return _assemble(len(vs), sub_edges, require_connected=False), tuple(vs)


def is_isometric_subset(g: Graph, s) -> bool:
    """True iff induced-subgraph distances agree with ambient distances on s."""
    vs = sorted(set(s))
    if len(vs) <= 1:
        return True
    sub, verts = induced_subgraph(g, vs)
    dist = g.dist_rows()
    for i, u in enumerate(verts):
        row = _bfs_row(sub, i)
        for j in range(i + 1, len(verts)):
            if row[j] != dist[u][verts[j]]:
                return False
    return True


def is_convex_subset(g: Graph, s) -> bool:
    """True iff no geodesic between members of s leaves s."""
    inside = set(s)
    outside = [z for z in range(g.n) if z not in inside]
    dist = g.dist_rows()
    vs = sorted(inside)
    for i, u in enumerate(vs):
        du = dist[u]
        for v in vs[i + 1:]:
            duv = du[v]
            dv = dist[v]
            for z in outside:
                if du[z] + dv[z] == duv:
                    return False
    return True


# --- isomorphism via color refinement plus individualization ---

def _refine(neighbors, colors):
    n = len(colors)
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in neighbors[v])))
            for v in range(n)
        ]
        palette = {s: c for c, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _joint_colors(g1: Graph, g2: Graph, pinned):
    """Stable refinement colors on the disjoint union, with optional pins.

    pinned maps (side, vertex) to a distinct negative seed color so that an
    individualized pair stays matched during refinement.
    """
    n1 = g1.n
    union_nbrs = [list(nb) for nb in g1.neighbors] + [
        [w + n1 for w in nb] for nb in g2.neighbors
    ]
    colors = [0] * (n1 + g2.n)
    for (side, v), c in pinned.items():
        colors[v + (0 if side == 0 else n1)] = c
    colors = _refine(union_nbrs, colors)
    return colors[:n1], colors[n1:]


def _class_histogram(cols):
    hist = {}
    for c in cols:
        hist[c] = hist.get(c, 0) + 1
    return hist


def _iso_search(g1, g2, pinned, depth):
    c1, c2 = _joint_colors(g1, g2, pinned)
    if _class_histogram(c1) != _class_histogram(c2):
        return None
    if len(set(c1)) == g1.n:
        mapping = [-1] * g1.n
        pos2 = {c: v for v, c in enumerate(c2)}
        for v, c in enumerate(c1):
            mapping[v] = pos2[c]
        return mapping
    # smallest non-singleton class, then individualize
    sizes = _class_histogram(c1)
    target = min((sz, c) for c, sz in sizes.items() if sz > 1)[1]
    v1 = min(v for v in range(g1.n) if c1[v] == target)
    for v2 in (v for v in range(g2.n) if c2[v] == target):
        pins = dict(pinned)
        seed = -1 - depth
        pins[(0, v1)] = seed
        pins[(1, v2)] = seed
        found = _iso_search(g1, g2, pins, depth + 1)
        if found is not None:
            return found
    return None


def are_isomorphic(g1: Graph, g2: Graph):
    """Return a vertex bijection g1 -> g2 preserving adjacency, or None.

    The returned mapping is re-verified edge by edge before being returned.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(len, g1.neighbors)) != sorted(map(len, g2.neighbors)):
        return None
    mapping = _iso_search(g1, g2, {}, 0)
    if mapping is None:
        return None
    assert sorted(mapping) == list(range(g1.n))
    image = {tuple(sorted((mapping[u], mapping[v]))) for (u, v) in g1.edges}
    if image != set(g2.edges):
        return None
    return mapping
