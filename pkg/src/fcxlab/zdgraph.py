"""The zero-divisor graph of C_c(X)_F over Finite(n).

Vertices are the nonzero zero divisors; f and g are adjacent iff f·g = 0.
The full graph is infinite (every scalar multiple is a vertex), so the
oracles run on a finite *witness graph* holding ``reps`` scalar multiples
k·1_{X∖S} for every nonempty proper zero-set class S.  The closed forms
work purely on zero sets.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import ConfigError, EqualVertices, ModelMismatch, NotAdjacent, NotVertex, TooLarge
from .ring import RingElem, indicator
from .spaces import finite

MAX_VERTICES = 10_000
#: the pair-cycle oracle is exhaustive only up to this many vertices
MAX_CYCLE_ORACLE_VERTICES = 60


def _bits(mask: int, n: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def _zmask(f: RingElem) -> int:
    return sum(1 << i for i in f.zero_set())


def _vertex_mask(f: RingElem, n: int) -> int:
    if not isinstance(f, RingElem) or f.carrier.size != n:
        raise ModelMismatch(f"expected an element of Finite({n})")
    z = _zmask(f)
    if z == 0 or z == (1 << n) - 1:
        raise NotVertex(f"{f!r} is a unit or zero, not a nonzero zero divisor")
    return z


# closed forms -----------------------------------------------------------------


def distance_closed(f: RingElem, g: RingElem, n: int) -> int:
    zf, zg = _vertex_mask(f, n), _vertex_mask(g, n)
    if f == g:
        raise EqualVertices("distance needs two distinct vertices")
    full = (1 << n) - 1
    if zf | zg == full:
        return 1
    return 2 if zf & zg else 3


def eccentricity_closed(f: RingElem, n: int) -> int:
    z = _vertex_mask(f, n)
    coz = ((1 << n) - 1) & ~z
    return 2 if bin(coz).count("1") == 1 else 3


def cycle_closed(f: RingElem, g: RingElem, n: int) -> int:
    zf, zg = _vertex_mask(f, n), _vertex_mask(g, n)
    if f == g:
        raise EqualVertices("cycle length needs two distinct vertices")
    union_full = zf | zg == (1 << n) - 1
    meet = bool(zf & zg)
    if union_full and meet:
        return 3
    if union_full or meet:
        return 4
    return 6


def triangle_predicates(mode: str, f: RingElem, g: Optional[RingElem] = None, n: Optional[int] = None) -> bool:
    """Whether a vertex (or an edge) lies on a triangle, by search over zero-set classes."""
    n = f.carrier.size if n is None else n
    full = (1 << n) - 1
    classes = range(1, full)
    zf = _vertex_mask(f, n)
    if mode == "vertex":
        return any(
            zf | b == full and zf | c == full and b | c == full
            for b in classes
            for c in classes
            if b != c
        )
    if mode == "edge":
        if g is None:
            raise ValueError("edge mode needs g")
        zg = _vertex_mask(g, n)
        if zf | zg != full:
            raise NotAdjacent("f and g are not adjacent")
        return any(zf | c == full and zg | c == full for c in classes)
    raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")


# witness graph ----------------------------------------------------------------


@dataclass(frozen=True)
class WitnessGraph:
    n: int
    reps: int
    vertices: tuple
    #: zero set of each vertex, as a bitmask
    classes: tuple
    scalars: tuple
    adj: tuple

    @property
    def order(self) -> int:
        return len(self.vertices)

    def edges(self) -> list:
        return [(i, j) for i in range(self.order) for j in sorted(self.adj[i]) if i < j]

    def index(self, f: RingElem) -> int:
        return self.vertices.index(f)

    def label(self, i: int) -> str:
        support = ((1 << self.n) - 1) & ~self.classes[i]
        return f"{self.scalars[i]}·ind({_bits(support, self.n)})"


def witness_graph(n: int, reps: int = 2) -> WitnessGraph:
    if n < 2:
        raise ConfigError("the zero-divisor graph needs n >= 2")
    if reps < 2:
        raise ConfigError("reps must be at least 2")
    if reps * ((1 << n) - 2) > MAX_VERTICES:
        raise TooLarge(f"{reps * ((1 << n) - 2)} vertices exceeds {MAX_VERTICES}")
    space = finite(n)
    full = (1 << n) - 1
    vertices, classes, scalars = [], [], []
    for S in range(1, full):
        base = indicator(space, {i for i in range(n) if not S >> i & 1})
        for k in range(1, reps + 1):
            v = base * k
            vertices.append(v)
            classes.append(_zmask(v))
            scalars.append(k)
    # u·v = 0 in a product of fields iff no coordinate is nonzero in both
    coz = [
        sum(1 << i for i, val in enumerate(v.values) if val != 0) for v in vertices
    ]
    adj = tuple(
        frozenset(j for j in range(len(vertices)) if j != i and coz[i] & coz[j] == 0)
        for i in range(len(vertices))
    )
    return WitnessGraph(n, reps, tuple(vertices), tuple(classes), tuple(scalars), adj)


# BFS oracles ------------------------------------------------------------------


def bfs_distances(G: WitnessGraph, s: int) -> list:
    dist = [math.inf] * G.order
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in G.adj[u]:
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def girth(G: WitnessGraph) -> float:
    """Shortest cycle length via a BFS from every vertex (∞ if acyclic)."""
    best = math.inf
    for r in range(G.order):
        dist = [-1] * G.order
        parent = [-1] * G.order
        dist[r] = 0
        q = deque([r])
        while q:
            u = q.popleft()
            for w in G.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class OracleMetrics:
    dist: tuple
    ecc: tuple
    diameter: float
    radius: float
    girth: float


def graph_oracle_metrics(G: WitnessGraph) -> OracleMetrics:
    dist = tuple(tuple(bfs_distances(G, s)) for s in range(G.order))
    ecc = tuple(max(d for j, d in enumerate(row) if j != i) for i, row in enumerate(dist))
    return OracleMetrics(dist, ecc, max(ecc), min(ecc), girth(G))


def cycle_oracle(G: WitnessGraph, u: int, v: int) -> float:
    """Length of the shortest cycle through both u and v (∞ if none).

    Such a cycle is a pair of internally vertex-disjoint u–v paths, so this is
    a min-cost flow of two units on the vertex-split graph, solved exactly by
    two rounds of Bellman–Ford on the residual network.
    """
    if u == v:
        raise EqualVertices("cycle through a pair needs two distinct vertices")
    if G.order > MAX_CYCLE_ORACLE_VERTICES:
        raise TooLarge(f"cycle oracle is limited to {MAX_CYCLE_ORACLE_VERTICES} vertices")
    size = 2 * G.order
    head, cap, cost, out = [], [], [], [[] for _ in range(size)]

    def arc(a: int, b: int, c: int) -> None:
        for x, y, w, k in ((a, b, c, 1), (b, a, -c, 0)):
            out[x].append(len(head))
            head.append(y)
            cap.append(k)
            cost.append(w)

    for w in range(G.order):
        arc(2 * w, 2 * w + 1, 0)
    for a, b in G.edges():
        arc(2 * a + 1, 2 * b, 1)
        arc(2 * b + 1, 2 * a, 1)
    source, sink = 2 * u + 1, 2 * v
    total = 0
    for _ in range(2):
        dist = [math.inf] * size
        via = [-1] * size
        dist[source] = 0
        for _ in range(size):
            changed = False
            for x in range(size):
                if dist[x] == math.inf:
                    continue
                for e in out[x]:
                    if cap[e] and dist[x] + cost[e] < dist[head[e]]:
                        dist[head[e]] = dist[x] + cost[e]
                        via[head[e]] = e
                        changed = True
            if not changed:
                break
        if dist[sink] == math.inf:
            return math.inf
        total += dist[sink]
        x = sink
        while x != source:
            e = via[x]
            cap[e] -= 1
            cap[e ^ 1] += 1
            x = head[e ^ 1]
    return total


def triangle_oracle_vertex(G: WitnessGraph, i: int) -> bool:
    nbrs = sorted(G.adj[i])
    return any(b in G.adj[a] for a in nbrs for b in nbrs if a < b)


def triangle_oracle_edge(G: WitnessGraph, i: int, j: int) -> bool:
    if j not in G.adj[i]:
        raise NotAdjacent("not an edge of the witness graph")
    return bool(G.adj[i] & G.adj[j])


# export -----------------------------------------------------------------------


def dot_export(G: WitnessGraph) -> str:
    """DOT text; labels read ``k·ind(bits)`` with bit i set on the support."""
    lines = [f"graph zd_n{G.n}_reps{G.reps} {{"]
    for i in range(G.order):
        lines.append(f'  v{i} [label="{G.label(i)}"];')
    for i, j in G.edges():
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Mismatch:
    kind: str
    u: int
    v: Optional[int]
    closed: float
    oracle: float

    def to_json(self) -> dict:
        return {"kind": self.kind, "u": self.u, "v": self.v, "closed": self.closed, "oracle": self.oracle}


def oracle_mismatches(G: WitnessGraph, metrics: Optional[OracleMetrics] = None, cycles: bool = True) -> list:
    """Every vertex or pair where a closed form disagrees with the oracle."""
    metrics = metrics or graph_oracle_metrics(G)
    out = []
    for i in range(G.order):
        e = eccentricity_closed(G.vertices[i], G.n)
        if e != metrics.ecc[i]:
            out.append(Mismatch("eccentricity", i, None, e, metrics.ecc[i]))
        for j in range(i + 1, G.order):
            d = distance_closed(G.vertices[i], G.vertices[j], G.n)
            if d != metrics.dist[i][j]:
                out.append(Mismatch("distance", i, j, d, metrics.dist[i][j]))
            if cycles:
                c = cycle_closed(G.vertices[i], G.vertices[j], G.n)
                o = cycle_oracle(G, i, j)
                if c != o:
                    out.append(Mismatch("cycle", i, j, c, o))
    return out
