"""Face graphs (skeleton and ridge), BFS metrics, and a small catalog of
named graphs for recognizing computed structures."""

from collections import deque
from itertools import combinations, product
from math import comb

import numpy as np

from .dd import _pop_rows, incidence, masks_to_words
from .errors import GraphTooLarge, InvalidDimension
from .linalg import bareiss_rank
from .tuples import enumerate_tuples


class Graph:
    """Immutable simple undirected graph on vertices 0..nv-1."""

    __slots__ = ("nv", "adj")

    def __init__(self, nv, adj):
        self.nv = nv
        self.adj = adj

    @classmethod
    def from_edges(cls, nv, edges):
        sets = [set() for _ in range(nv)]
        for a, b in edges:
            if a == b:
                raise InvalidDimension(f"loop at {a}")
            sets[a].add(b)
            sets[b].add(a)
        return cls(nv, tuple(tuple(sorted(s)) for s in sets))

    def edges(self):
        return [(a, b) for a in range(self.nv) for b in self.adj[a] if a < b]

    @property
    def edge_count(self):
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v):
        return len(self.adj[v])

    def degree_sequence(self):
        return sorted(len(s) for s in self.adj)

    def has_edge(self, a, b):
        return b in self.adj[a]

    def neighbors(self, v):
        return self.adj[v]

    def complement(self):
        edges = [(a, b) for a, b in combinations(range(self.nv), 2)
                 if b not in self.adj[a]]
        return Graph.from_edges(self.nv, edges)

    def induced(self, vertices):
        """Induced subgraph; returns (graph, original vertex per position)."""
        vs = list(vertices)
        back = {v: i for i, v in enumerate(vs)}
        edges = []
        for i, v in enumerate(vs):
            for w in self.adj[v]:
                j = back.get(w)
                if j is not None and i < j:
                    edges.append((i, j))
        return Graph.from_edges(len(vs), edges), vs

    def bfs_distances(self, src):
        dist = [-1] * self.nv
        dist[src] = 0
        q = deque([src])
        while q:
            v = q.popleft()
            for w in self.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    q.append(w)
        return dist

    def eccentricity(self, src):
        dist = self.bfs_distances(src)
        if min(dist) < 0:
            return float("inf")
        return max(dist)

    def is_connected(self):
        if self.nv == 0:
            return True
        return min(self.bfs_distances(0)) >= 0

    def connected_components(self):
        seen = [False] * self.nv
        comps = []
        for s in range(self.nv):
            if seen[s]:
                continue
            comp = []
            q = deque([s])
            seen[s] = True
            while q:
                v = q.popleft()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        q.append(w)
            comps.append(sorted(comp))
        return comps

    def __repr__(self):
        return f"Graph({self.nv} vertices, {self.edge_count} edges)"


def diameter(g, sources=None):
    """Largest eccentricity; infinity when disconnected.

    With `sources`, eccentricities are computed only from those vertices;
    this equals the true diameter whenever the sources meet every orbit of
    the automorphism group acting on the graph (eccentricity is constant
    on orbits).
    """
    if g.nv == 0:
        return 0
    verts = range(g.nv) if sources is None else sources
    best = 0
    for v in verts:
        e = g.eccentricity(v)
        if e == float("inf"):
            return e
        best = max(best, e)
    return best


def local_graph(g, v):
    """Induced subgraph on the neighbors of v."""
    sub, _ = g.induced(sorted(g.adj[v]))
    return sub


def restrict_to_orbit(face_graph, orbit_members):
    """Induced subgraph of a face graph on one orbit's members."""
    sub, _ = face_graph.graph.induced(sorted(orbit_members))
    return sub


# -- constructions ----------------------------------------------------------


def complete_graph(p):
    return Graph.from_edges(p, list(combinations(range(p), 2)))


def empty_graph(p):
    return Graph.from_edges(p, [])


def cycle_graph(p):
    if p < 3:
        raise InvalidDimension("cycle needs >= 3 vertices")
    return Graph.from_edges(p, [(i, (i + 1) % p) for i in range(p)])


def complete_multipartite(parts):
    groups = []
    v = 0
    for p in parts:
        groups.append(list(range(v, v + p)))
        v += p
    edges = []
    for ga, gb in combinations(groups, 2):
        edges.extend((a, b) for a in ga for b in gb)
    return Graph.from_edges(v, edges)


def octahedron_graph():
    return complete_multipartite([2, 2, 2])


def clique_product(sizes):
    """Cartesian product of cliques K_{s_1} x ... x K_{s_k} (Hamming graph).

    Vertices are tuples; edges join tuples differing in exactly one
    coordinate.  Size-1 factors are kept (they contribute nothing).
    """
    sizes = [int(s) for s in sizes]
    verts = list(product(*[range(s) for s in sizes]))
    pos = {t: i for i, t in enumerate(verts)}
    edges = []
    for t in verts:
        for axis, s in enumerate(sizes):
            for val in range(t[axis] + 1, s):
                u = t[:axis] + (val,) + t[axis + 1:]
                edges.append((pos[t], pos[u]))
    return Graph.from_edges(len(verts), edges)


def cube_graph():
    return clique_product([2, 2, 2])


def johnson_graph(n, k):
    tuples = enumerate_tuples(n, k)
    edges = [(i, j) for i, j in combinations(range(len(tuples)), 2)
             if len(set(tuples[i]) & set(tuples[j])) == k - 1]
    return Graph.from_edges(len(tuples), edges)


def petersen_graph():
    # Kneser graph K(5,2): 2-subsets adjacent when disjoint
    tuples = enumerate_tuples(5, 2)
    edges = [(i, j) for i, j in combinations(range(10), 2)
             if not set(tuples[i]) & set(tuples[j])]
    return Graph.from_edges(10, edges)


def complete_minus_cliques(p, q, r):
    """K_p with the edges of q disjoint K_r's removed."""
    if q * r > p:
        raise InvalidDimension("cliques do not fit")
    removed = set()
    for i in range(q):
        for a, b in combinations(range(i * r, (i + 1) * r), 2):
            removed.add((a, b))
    edges = [e for e in combinations(range(p), 2) if e not in removed]
    return Graph.from_edges(p, edges)


def complete_minus_cycle(p, q):
    """K_p with the edges of a C_q on the first q vertices removed."""
    if q > p or q < 3:
        raise InvalidDimension("cycle does not fit")
    removed = {tuple(sorted((i, (i + 1) % q))) for i in range(q)}
    edges = [e for e in combinations(range(p), 2) if e not in removed]
    return Graph.from_edges(p, edges)


def subdivide(g):
    """Replace every edge by a path of length two."""
    edges = g.edges()
    out = []
    mid = g.nv
    for a, b in edges:
        out.append((a, mid))
        out.append((mid, b))
        mid += 1
    return Graph.from_edges(mid, out)


def disjoint_union(graphs):
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((a + offset, b + offset) for a, b in g.edges())
        offset += g.nv
    return Graph.from_edges(offset, edges)


# -- isomorphism and the catalog ---------------------------------------------


def _to_networkx(g):
    import networkx as nx

    ng = nx.Graph()
    ng.add_nodes_from(range(g.nv))
    ng.add_edges_from(g.edges())
    return ng


def isomorphic(g1, g2):
    """Graph isomorphism (delegated to networkx VF2)."""
    if g1.nv != g2.nv or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    import networkx as nx

    return nx.is_isomorphic(_to_networkx(g1), _to_networkx(g2))


def _components_are_equal_cliques(g):
    """(q, r, isolated) when g is q >= 1 disjoint K_r (r >= 2) plus
    isolated vertices, else None."""
    comps = g.connected_components()
    sizes = set()
    q = 0
    isolated = 0
    for comp in comps:
        c = len(comp)
        if c == 1:
            isolated += 1
            continue
        sub, _ = g.induced(comp)
        if sub.edge_count != comb(c, 2):
            return None
        sizes.add(c)
        q += 1
    if q == 0 or len(sizes) != 1:
        return None
    return q, sizes.pop(), isolated


def _is_single_cycle_plus_isolated(g):
    comps = [c for c in g.connected_components() if len(c) > 1]
    if len(comps) != 1 or len(comps[0]) < 3:
        return None
    sub, _ = g.induced(comps[0])
    if all(sub.degree(v) == 2 for v in range(sub.nv)) and sub.is_connected():
        return len(comps[0])
    return None


def _clique_product_candidates(nv, degree):
    """Multisets of factor sizes >= 2 with matching product and degree."""
    out = []

    def rec(rest, min_s, sizes):
        if rest == 1:
            if sum(s - 1 for s in sizes) == degree:
                out.append(list(sizes))
            return
        s = min_s
        while s <= rest:
            if rest % s == 0:
                rec(rest // s, s, sizes + [s])
            s += 1

    rec(nv, 2, [])
    return out


def identify_graph(g):
    """Name a small graph against the catalog, or return None.

    The catalog covers the structures that show up as face graphs and
    R-graphs at desk scale: complete/empty/cycle graphs, Petersen, the
    octahedron and the cube, complete multipartite graphs, K_p minus
    disjoint cliques or a cycle, Johnson graphs and their complements,
    Cartesian products of cliques, and the one-point edge subdivision of
    Petersen.  Graphs over 64 vertices are refused.
    """
    nv = g.nv
    if nv > 64:
        raise GraphTooLarge(f"{nv} vertices > 64")
    if nv == 0:
        return "empty"
    m = g.edge_count
    if nv == 1:
        return "K_1"
    if m == 0:
        return "empty"
    if m == comb(nv, 2):
        return f"K_{nv}"
    if m == nv and g.is_connected() and all(g.degree(v) == 2 for v in range(nv)):
        return f"C_{nv}"
    if nv == 10 and m == 15 and isomorphic(g, petersen_graph()):
        return "Petersen"
    if nv == 8 and m == 12 and isomorphic(g, cube_graph()):
        return "cube"
    comp = g.complement()
    cliques = _components_are_equal_cliques(comp)
    if cliques is not None:
        q, r, isolated = cliques
        if isolated == 0 and r == 2 and q == 3:
            return "octahedron"
        # prefer the multipartite name while it stays short
        if isolated == 0 and q <= 7:
            parts = sorted([r] * q, reverse=True)
            return "K_{" + ",".join(str(p) for p in parts) + "}"
        return f"K_{nv} - {q}K_{r}"
    else:
        # complete multipartite with mixed part sizes: complement is
        # disjoint cliques (possibly plus isolated vertices = parts of 1)
        comps = comp.connected_components()
        if all(_is_clique(comp, c) for c in comps) and len(comps) >= 2:
            parts = sorted((len(c) for c in comps), reverse=True)
            if any(p > 1 for p in parts):
                return "K_{" + ",".join(str(p) for p in parts) + "}"
    cyc = _is_single_cycle_plus_isolated(comp)
    if cyc is not None:
        return f"K_{nv} - C_{cyc}"
    for n in range(3, 13):
        for k in range(2, n - 1):
            if comb(n, k) != nv:
                continue
            deg = k * (n - k)
            if all(g.degree(v) == deg for v in range(nv)) and \
                    isomorphic(g, johnson_graph(n, k)):
                return f"J({n},{k})"
            cdeg = nv - 1 - deg
            if all(g.degree(v) == cdeg for v in range(nv)) and \
                    isomorphic(comp, johnson_graph(n, k)):
                return f"complement of J({n},{k})"
    degs = set(g.degree_sequence())
    if len(degs) == 1:
        for sizes in _clique_product_candidates(nv, degs.pop()):
            if isomorphic(g, clique_product(sizes)):
                return "H(" + ",".join(str(s) for s in sizes) + ")"
    if nv == 25 and m == 30 and isomorphic(g, subdivide(petersen_graph())):
        return "Petersen subdivision"
    return None


def _is_clique(g, comp):
    sub, _ = g.induced(comp)
    return sub.edge_count == comb(len(comp), 2)


# -- face graphs --------------------------------------------------------------


class FaceGraph:
    """A skeleton or ridge graph with vertex names."""

    __slots__ = ("kind", "graph", "names")

    def __init__(self, kind, graph, names):
        self.kind = kind
        self.graph = graph
        self.names = list(names)

    @property
    def nv(self):
        return self.graph.nv

    @property
    def edge_count(self):
        return self.graph.edge_count

    def named_edges(self):
        return [(self.names[a], self.names[b]) for a, b in self.graph.edges()]

    def __repr__(self):
        return f"FaceGraph({self.kind}, {self.nv} vertices, {self.edge_count} edges)"


def _adjacency_edges(masks, words, rank_rows, dim, method):
    """Edges among faces given their tight-set masks.

    method "witness": no third face's tight set contains the pair's common
    set; needs masks for the complete face family.  method "rank": the
    common tight rows have rank dim-2; needs rank_rows (the vectors the
    mask bits point at).
    """
    R = len(masks)
    need = dim - 2
    edges = []
    if method == "rank":
        for i in range(R):
            mi = masks[i]
            for j in range(i + 1, R):
                common = mi & masks[j]
                if common.bit_count() < need:
                    continue
                rows = [rank_rows[b] for b in _bits(common)]
                if bareiss_rank(rows) == need:
                    edges.append((i, j))
        return edges
    for i in range(R):
        if i + 1 >= R:
            break
        tail = words[i + 1:]
        common = tail & words[i]
        pops = _pop_rows(common)
        cand = np.nonzero(pops >= need)[0]
        for start in range(0, len(cand), 48):
            sl = cand[start:start + 48]
            cc = common[sl]
            hits = ((words[:, None, :] & cc[None, :, :]) == cc[None, :, :]).all(axis=2)
            counts = hits.sum(axis=0, dtype=np.int64)
            for li, cnt in zip(sl, counts):
                if cnt == 2:
                    edges.append((i, i + 1 + int(li)))
    return edges


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _pick_method(method, n_faces, dim):
    if method != "auto":
        return method
    return "rank" if n_faces < 2 * dim else "witness"


def skeleton(cone_v, cone_h, inc=None, method="auto", names=None):
    """Ray adjacency graph of a cone given by matching V- and H-descriptions."""
    if inc is None:
        inc = incidence(cone_h, cone_v)
    dim = cone_v.dim
    method = _pick_method(method, inc.n_rays, dim)
    words = inc.ray_words() if method == "witness" else None
    rank_rows = cone_h.normal_rows() if method == "rank" else None
    edges = _adjacency_edges(inc.ray_masks, words, rank_rows, dim, method)
    if names is None:
        names = [f"r{i}" for i in range(inc.n_rays)]
    return FaceGraph("skeleton", Graph.from_edges(inc.n_rays, edges), names)


def ridge(cone_h, cone_v, inc=None, method="auto", names=None):
    """Facet adjacency graph of a cone given by matching H- and V-descriptions."""
    if inc is None:
        inc = incidence(cone_h, cone_v)
    dim = cone_h.dim
    method = _pick_method(method, inc.n_ineqs, dim)
    words = inc.ineq_words() if method == "witness" else None
    rank_rows = cone_v.ray_rows() if method == "rank" else None
    edges = _adjacency_edges(inc.ineq_masks, words, rank_rows, dim, method)
    if names is None:
        names = [iq.name or f"f{j}" for j, iq in enumerate(cone_h.inequalities)]
    return FaceGraph("ridge", Graph.from_edges(inc.n_ineqs, edges), names)


def face_neighbors(words, i, dim):
    """Witness-method neighbor row for face i against the complete family.

    words is the packed tight-set matrix of the whole face family.  Returns
    the sorted list of faces adjacent to i.
    """
    need = dim - 2
    common = words & words[i]
    pops = _pop_rows(common)
    cand = np.nonzero(pops >= need)[0]
    out = []
    for start in range(0, len(cand), 48):
        sl = cand[start:start + 48]
        cc = common[sl]
        hits = ((words[:, None, :] & cc[None, :, :]) == cc[None, :, :]).all(axis=2)
        counts = hits.sum(axis=0, dtype=np.int64)
        for j, cnt in zip(sl, counts):
            if cnt == 2 and int(j) != i:
                out.append(int(j))
    return out
