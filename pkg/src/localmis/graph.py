"""Immutable graph representation, instance-family generators, and structural checks.

All algorithms in this package run on :class:`Graph`: a simple undirected
graph with dense node indices ``0..n-1`` stored in CSR form (sorted adjacency),
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BadArity, InfeasibleParams, UniverseMismatch, UnknownName

__all__ = [
    "Graph",
    "GirthReport",
    "NodeSet",
    "components",
    "generate_bipartite_regular",
    "generate_regular_girth",
    "generate_tree",
    "girth",
    "load_named",
    "NAMED_GRAPHS",
    "verify_independent",
    "verify_maximal_independent",
]


class Graph:
    """Simple undirected graph on nodes ``0..n-1`` with sorted CSR adjacency.

    Construction validates simplicity (no loops, no parallel edges) and
    symmetry.  The underlying arrays are frozen, so instances can be shared
    freely between concurrent readers.
    """

    __slots__ = ("n", "indptr", "indices", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("node count must be nonnegative")
        edge_arr = np.asarray(list(edges), dtype=np.int64)
        if edge_arr.size == 0:
            edge_arr = edge_arr.reshape(0, 2)
        if edge_arr.ndim != 2 or edge_arr.shape[1] != 2:
            raise ValueError("edges must be (u, v) pairs")
        if edge_arr.size and (edge_arr.min() < 0 or edge_arr.max() >= n):
            raise ValueError("edge endpoint out of range")
        if np.any(edge_arr[:, 0] == edge_arr[:, 1]):
            raise ValueError("self-loops are not allowed")
        # canonicalize u < v and reject duplicates
        lo = edge_arr.min(axis=1)
        hi = edge_arr.max(axis=1)
        canon = lo * n + hi
        if np.unique(canon).size != canon.size:
            raise ValueError("duplicate edges are not allowed")
        order = np.argsort(canon, kind="stable")
        lo, hi = lo[order], hi[order]

        self.n = int(n)
        both_src = np.concatenate([lo, hi])
        both_dst = np.concatenate([hi, lo])
        counts = np.bincount(both_src, minlength=n).astype(np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        perm = np.lexsort((both_dst, both_src))
        indices = both_dst[perm]
        self.indptr = indptr
        self.indices = indices
        self._edges = np.stack([lo, hi], axis=1)
        for arr in (self.indptr, self.indices, self._edges):
            arr.setflags(write=False)

    # -- basic accessors ---------------------------------------------------

    @property
    def node_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return self._edges.shape[0]

    @property
    def edges(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, lexicographically sorted."""
        return self._edges

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor indices of ``v`` (read-only view)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @property
    def max_degree(self) -> int:
        """Delta; 0 for the empty/edgeless graph."""
        return int(self.degrees.max()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def alive_edge_count(self, alive: np.ndarray) -> int:
        """Number of edges with both endpoints in the boolean mask ``alive``."""
        if self.edge_count == 0:
            return 0
        return int(np.count_nonzero(alive[self._edges[:, 0]] & alive[self._edges[:, 1]]))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges.shape == other._edges.shape
            and bool(np.all(self._edges == other._edges))
        )

    def __hash__(self):
        return hash((self.n, self.edge_count, self._edges.tobytes()))


@dataclass(frozen=True)
class NodeSet:
    """A subset of a graph's nodes, tagged with the universe it lives in."""

    members: frozenset[int]
    universe_size: int

    def __post_init__(self):
        if self.members and not all(0 <= v < self.universe_size for v in self.members):
            raise ValueError("member outside universe")

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "NodeSet":
        return cls(frozenset(int(v) for v in np.flatnonzero(mask)), len(mask))

    @classmethod
    def full(cls, universe_size: int) -> "NodeSet":
        return cls(frozenset(range(universe_size)), universe_size)

    @classmethod
    def empty(cls, universe_size: int) -> "NodeSet":
        return cls(frozenset(), universe_size)

    def to_mask(self) -> np.ndarray:
        mask = np.zeros(self.universe_size, dtype=bool)
        if self.members:
            mask[sorted(self.members)] = True
        return mask

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def union(self, other: "NodeSet") -> "NodeSet":
        if self.universe_size != other.universe_size:
            raise UniverseMismatch("cannot union NodeSets over different universes")
        return NodeSet(self.members | other.members, self.universe_size)


@dataclass(frozen=True)
class GirthReport:
    """Exact girth plus a witness cycle when finite (``math.inf`` for forests)."""

    girth: float
    witness_cycle: list[int] | None = field(default=None)

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.girth)


def _check_universe(g: Graph, s: NodeSet) -> None:
    if s.universe_size != g.n:
        raise UniverseMismatch(
            f"NodeSet universe {s.universe_size} != graph node count {g.n}"
        )


def verify_independent(g: Graph, s: NodeSet) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``s``."""
    _check_universe(g, s)
    if g.edge_count == 0:
        return True
    mask = s.to_mask()
    return not np.any(mask[g.edges[:, 0]] & mask[g.edges[:, 1]])


def verify_maximal_independent(g: Graph, s: NodeSet) -> bool:
    """True iff ``s`` is independent and every node outside has a neighbor in ``s``."""
    _check_universe(g, s)
    mask = s.to_mask()
    if g.edge_count and np.any(mask[g.edges[:, 0]] & mask[g.edges[:, 1]]):
        return False
    covered = mask.copy()
    for v in np.flatnonzero(mask):
        covered[g.neighbors(v)] = True
    return bool(covered.all())


def components(g: Graph, alive: NodeSet) -> list[NodeSet]:
    """Connected components of the subgraph induced by ``alive``."""
    _check_universe(g, alive)
    alive_mask = alive.to_mask()
    seen = np.zeros(g.n, dtype=bool)
    out: list[NodeSet] = []
    for start in alive:
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                y = int(y)
                if alive_mask[y] and not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(NodeSet(frozenset(comp), g.n))
    return out


def _is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g, NodeSet.full(g.n)))


def girth(g: Graph) -> GirthReport:
    """Exact girth via BFS from every node, with a verified witness cycle.

    For each root, any non-tree edge (x, y) closes a cycle through the lowest
    common ancestor of x and y; the minimum over roots and edges is the girth.
    BFS is pruned once a level can no longer improve the current best.
    """
    if g.edge_count == 0 or _is_forest(g):
        return GirthReport(math.inf, None)

    best = math.inf
    best_cycle: list[int] | None = None
    dist = np.empty(g.n, dtype=np.int64)
    parent = np.empty(g.n, dtype=np.int64)
    for root in range(g.n):
        dist.fill(-1)
        parent.fill(-1)
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                if 2 * dist[x] >= best:
                    continue
                for y in g.neighbors(x):
                    y = int(y)
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif y != parent[x]:
                        cyc = _cycle_through(parent, dist, x, y)
                        if len(cyc) < best:
                            best = len(cyc)
                            best_cycle = cyc
            frontier = nxt
    assert best_cycle is not None and _is_simple_cycle(g, best_cycle)
    return GirthReport(float(best), best_cycle)


def _cycle_through(parent: np.ndarray, dist: np.ndarray, x: int, y: int) -> list[int]:
    """Simple cycle closed by non-tree edge (x, y) through the BFS-tree LCA."""
    px, py = [x], [y]
    a, b = x, y
    while dist[a] > dist[b]:
        a = int(parent[a])
        px.append(a)
    while dist[b] > dist[a]:
        b = int(parent[b])
        py.append(b)
    while a != b:
        a = int(parent[a])
        b = int(parent[b])
        px.append(a)
        py.append(b)
    # px ends at the LCA; drop it from one side
    return px + py[-2::-1]


def _is_simple_cycle(g: Graph, cyc: Sequence[int]) -> bool:
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


# -- generators ---------------------------------------------------------------


def _find_short_cycle(adj: list[set[int]], max_len: int) -> list[int] | None:
    """Some cycle of length <= max_len in an adjacency-set graph, or None.

    Truncated BFS from every node; returns the first offending cycle found.
    Callers must have repaired self-loops and parallel edges already.
    """
    n = len(adj)
    depth_cap = max_len // 2
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if not adj[root]:
            continue
        visited = [root]
        dist[root] = 0
        parent[root] = -1
        frontier = [root]
        found: list[int] | None = None
        while frontier and found is None:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if dist[y] < 0:
                        if dist[x] + 1 <= depth_cap:
                            dist[y] = dist[x] + 1
                            parent[y] = x
                            visited.append(y)
                            nxt.append(y)
                    elif y != parent[x]:
                        cyc = _cycle_through(parent, dist, x, y)
                        if len(cyc) <= max_len:
                            found = cyc
                            break
                if found is not None:
                    break
            frontier = nxt
        for v in visited:
            dist[v] = -1
            parent[v] = -1
        if found is not None:
            return found
    return None


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


class _Multigraph:
    """Mutable multigraph state for the double-edge-swap repair loop."""

    def __init__(self, n: int, pairs: list[tuple[int, int]]):
        self.pairs = pairs
        self.count: dict[tuple[int, int], int] = {}
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in pairs:
            self._add(a, b)

    def _add(self, a: int, b: int) -> None:
        k = _key(a, b)
        self.count[k] = self.count.get(k, 0) + 1
        if a != b:
            self.adj[a].add(b)
            self.adj[b].add(a)

    def _remove(self, a: int, b: int) -> None:
        k = _key(a, b)
        self.count[k] -= 1
        if self.count[k] == 0:
            del self.count[k]
            if a != b:
                self.adj[a].discard(b)
                self.adj[b].discard(a)

    def violation_edge_index(self, min_girth: int) -> int | None:
        """Index in ``pairs`` of an edge on a violation, or None if clean."""
        for i, (a, b) in enumerate(self.pairs):
            if a == b or self.count[_key(a, b)] > 1:
                return i
        cyc = _find_short_cycle(self.adj, min_girth - 1)
        if cyc is None:
            return None
        cycle_edges = {_key(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
        for i, (a, b) in enumerate(self.pairs):
            if _key(a, b) in cycle_edges:
                return i
        raise AssertionError("cycle edge not present in pair list")

    def _creates_short_cycle(self, u: int, v: int, max_len: int) -> bool:
        """True if edge (u, v), already inserted, lies on a cycle <= max_len."""
        dist = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                if dist[x] + 1 > max_len - 1:
                    continue
                for y in self.adj[x]:
                    if x == u and y == v:
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        if y == v:
                            return True
                        nxt.append(y)
            frontier = nxt
        return False

    def try_swap(self, i: int, j: int, flip: bool, min_girth: int) -> bool:
        """Rewire pairs i=(a,b), j=(x,y) to (a,x),(b,y).

        Rejected unless the result is loop-free and duplicate-free and neither
        replacement edge closes a cycle shorter than ``min_girth``.
        """
        a, b = self.pairs[i]
        x, y = self.pairs[j]
        if flip:
            x, y = y, x
        if a == x or b == y:
            return False
        k1, k2 = _key(a, x), _key(b, y)
        if k1 == k2:
            return False
        self._remove(a, b)
        self._remove(x, y)
        if self.count.get(k1, 0) or self.count.get(k2, 0):
            self._add(a, b)
            self._add(x, y)
            return False
        self._add(a, x)
        self._add(b, y)
        if self._creates_short_cycle(a, x, min_girth - 1) or self._creates_short_cycle(
            b, y, min_girth - 1
        ):
            self._remove(a, x)
            self._remove(b, y)
            self._add(a, b)
            self._add(x, y)
            return False
        self.pairs[i] = (a, x)
        self.pairs[j] = (b, y)
        return True


def generate_regular_girth(
    n: int,
    d: int,
    min_girth: int,
    seed: int,
    *,
    max_attempts: int = 10**6,
) -> Graph:
    """d-regular simple graph with girth >= min_girth, deterministic per seed.

    Configuration-model pairing followed by degree-preserving double-edge
    swaps: each repair step picks an edge on a violation (self-loop, parallel
    edge, or cycle shorter than min_girth) and a uniformly random partner
    edge, and rewires when the result stays simple and creates no new short
    cycle.  When a violation resists repair, the pairing is restarted from
    scratch; ``max_attempts`` bounds the total number of swap proposals
    across restarts.
    """
    if n * d % 2 != 0:
        raise BadArity(f"n*d = {n * d} is odd; no {d}-regular graph on {n} nodes")
    if d < 2:
        raise InfeasibleParams("d must be >= 2")
    if min_girth < 3:
        raise InfeasibleParams("min_girth must be >= 3")
    if d >= n:
        raise InfeasibleParams(f"d = {d} requires more than {n} nodes")

    rng = np.random.default_rng(np.random.SeedSequence([int(seed), n, d, min_girth]))
    attempts = 0
    proposals_per_violation = 300

    while attempts < max_attempts:
        stubs = np.repeat(np.arange(n), d)
        rng.shuffle(stubs)
        it = iter(stubs.tolist())
        mg = _Multigraph(n, [(a, b) for a, b in zip(it, it)])

        while attempts < max_attempts:
            i = mg.violation_edge_index(min_girth)
            if i is None:
                g = Graph(n, sorted(mg.count))
                assert np.all(g.degrees == d)
                return g
            repaired = False
            for _ in range(proposals_per_violation):
                if attempts >= max_attempts:
                    break
                attempts += 1
                j = int(rng.integers(len(mg.pairs)))
                if j != i and mg.try_swap(
                    i, j, flip=bool(rng.random() < 0.5), min_girth=min_girth
                ):
                    repaired = True
                    break
            if not repaired:
                break  # dead end; restart from a fresh pairing

    raise InfeasibleParams(
        f"could not reach girth {min_girth} for (n={n}, d={d}) "
        f"within {max_attempts} swap attempts"
    )


def generate_bipartite_regular(
    n_per_side: int, d: int, seed: int, *, max_attempts: int = 10**6
) -> Graph:
    """d-regular bipartite graph on 2*n_per_side nodes (girth >= 4).

    Union of d random perfect matchings between the sides, with duplicate
    edges repaired by partner swaps within a matching.  Left nodes are
    ``0..n-1``, right nodes ``n..2n-1``.
    """
    if d < 1:
        raise InfeasibleParams("d must be >= 1")
    if d > n_per_side:
        raise InfeasibleParams(f"d = {d} exceeds side size {n_per_side}")

    rng = np.random.default_rng(np.random.SeedSequence([int(seed), n_per_side, d]))
    n = n_per_side
    matchings = [[int(r) for r in rng.permutation(n)] for _ in range(d)]
    count: dict[tuple[int, int], int] = {}
    for perm in matchings:
        for left in range(n):
            k = (left, perm[left])
            count[k] = count.get(k, 0) + 1
    worklist = deque(
        (mi, left)
        for mi, perm in enumerate(matchings)
        for left in range(n)
        if count[(left, perm[left])] > 1
    )
    attempts = 0
    proposals_per_dup = max(10 * n, 60)
    while worklist:
        if attempts >= max_attempts:
            raise InfeasibleParams(
                f"could not build duplicate-free {d}-regular bipartite graph "
                f"within {max_attempts} attempts"
            )
        mi, left = worklist.popleft()
        perm = matchings[mi]
        if count[(left, perm[left])] <= 1:
            continue
        # swap this left node's partner with a random other left node's,
        # within the same matching, provided both new edges are unused
        repaired = False
        for _ in range(proposals_per_dup):
            if attempts >= max_attempts:
                break
            attempts += 1
            other = int(rng.integers(n))
            if other == left:
                continue
            old1, old2 = (left, perm[left]), (other, perm[other])
            new1, new2 = (left, perm[other]), (other, perm[left])
            count[old1] -= 1
            count[old2] -= 1
            if count.get(new1, 0) or count.get(new2, 0):
                count[old1] += 1
                count[old2] += 1
                continue
            count[new1] = count.get(new1, 0) + 1
            count[new2] = count.get(new2, 0) + 1
            perm[left], perm[other] = perm[other], perm[left]
            repaired = True
            break
        if not repaired:
            # dead end at near-Latin-square density: resample this matching
            for l in range(n):
                count[(l, perm[l])] -= 1
            matchings[mi] = [int(r) for r in rng.permutation(n)]
            for l in range(n):
                k = (l, matchings[mi][l])
                count[k] = count.get(k, 0) + 1
                if count[k] > 1:
                    worklist.append((mi, l))
    edges = [
        (left, n + perm[left]) for perm in matchings for left in range(n)
    ]
    g = Graph(2 * n, edges)
    assert np.all(g.degrees == d)
    return g


def generate_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree on n nodes via a Pruefer sequence."""
    if n < 1:
        raise InfeasibleParams("n must be >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), n]))
    pruefer = rng.integers(0, n, size=n - 2)
    degree = np.ones(n, dtype=np.int64)
    np.add.at(degree, pruefer, 1)
    edges = []
    leaves = [int(v) for v in np.flatnonzero(degree == 1)]
    heapq.heapify(leaves)
    for a in pruefer:
        a = int(a)
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


# -- named fixture catalog -----------------------------------------------------

def _lcf(n: int, jumps: Sequence[int]) -> list[tuple[int, int]]:
    """Hamiltonian cycle 0..n-1 plus chords i -> i + jumps[i mod len]."""
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        j = (i + jumps[i % len(jumps)]) % n
        edges.add((min(i, j), max(i, j)))
    return sorted((min(a, b), max(a, b)) for a, b in edges)


_PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),          # outer 5-cycle
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),          # inner pentagram
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),          # spokes
]

# LCF codes for the three cubic cage-style fixtures.
_HEAWOOD_LCF = (14, [5, -5])                  # 3-regular, girth 6
_MCGEE_LCF = (24, [12, 7, -7])                # 3-regular, girth 7
_TUTTE_COXETER_LCF = (30, [-13, -9, 7, -7, 9, 13])  # 3-regular, girth 8

NAMED_GRAPHS = ("petersen", "heawood", "mcgee", "tutte_coxeter")


def load_named(name: str) -> Graph:
    """Catalog fixture by name.

    Fixed graphs: ``petersen``, ``heawood``, ``mcgee``, ``tutte_coxeter``.
    Parametric families: ``cycle(m)``, ``path(m)``, ``complete(m)``.
    """
    name = name.strip().lower()
    if name == "petersen":
        return Graph(10, _PETERSEN_EDGES)
    if name == "heawood":
        return Graph(*_HEAWOOD_LCF[:1], _lcf(*_HEAWOOD_LCF))
    if name == "mcgee":
        return Graph(_MCGEE_LCF[0], _lcf(*_MCGEE_LCF))
    if name == "tutte_coxeter":
        return Graph(_TUTTE_COXETER_LCF[0], _lcf(*_TUTTE_COXETER_LCF))
    for family in ("cycle", "path", "complete"):
        if name.startswith(family + "(") and name.endswith(")"):
            try:
                m = int(name[len(family) + 1:-1])
            except ValueError:
                raise UnknownName(f"bad parameter in {name!r}") from None
            if family == "cycle":
                if m < 3:
                    raise UnknownName("cycle(m) requires m >= 3")
                return Graph(m, [(i, (i + 1) % m) for i in range(m)])
            if family == "path":
                if m < 1:
                    raise UnknownName("path(m) requires m >= 1")
                return Graph(m, [(i, i + 1) for i in range(m - 1)])
            if m < 1:
                raise UnknownName("complete(m) requires m >= 1")
            return Graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])
    raise UnknownName(f"no catalog entry for {name!r}")
