"""Hemimetric vectors, partitions, and R-graphs.

An m-hemimetric on n points is encoded as a vector over the (m+1)-subsets
of {1..n}; see tuples.TupleIndex for the coordinate order.  The simplex
inequality for an (m+2)-set W and a distinguished (m+1)-subset t of W says
that d(t) is at most the sum of d over the other (m+1)-subsets of W.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    InvalidPartition,
    InvalidTuple,
    MismatchedArity,
    WrongBlockCount,
)
from .linalg import check_exact, primitive_int_vector
from .tuples import (
    TupleIndex,
    complement_tuple,
    johnson_adjacent,
    render_tuple,
    tuple_index,
    validate_tuple,
)


class HemiVector:
    """A vector over the (m+1)-subsets of {1..n}, exact entries only."""

    __slots__ = ("index", "coords")

    def __init__(self, index, coords):
        coords = tuple(check_exact(c) for c in coords)
        if len(coords) != index.size:
            raise MismatchedArity(
                f"{len(coords)} coordinates for index of size {index.size}")
        self.index = index
        self.coords = coords

    @property
    def n(self):
        return self.index.n

    @property
    def m(self):
        return self.index.k - 1

    def value(self, t):
        return self.coords[self.index.rank(t)]

    def support(self):
        return [t for t, c in zip(self.index.tuples, self.coords) if c != 0]

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coords)

    def is_primitive(self):
        from .linalg import vec_gcd
        return self.is_integral() and any(self.coords) and \
            vec_gcd(self.coords) == 1

    def scaled_primitive(self):
        return HemiVector(self.index, primitive_int_vector(self.coords))

    def values_nonnegative(self):
        return all(c >= 0 for c in self.coords)

    def render(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __eq__(self, other):
        return (isinstance(other, HemiVector)
                and self.index == other.index
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.index.n, self.index.k, self.coords))

    def __repr__(self):
        return f"HemiVector(n={self.n}, m={self.m}, {self.render()})"


class Partition:
    """An ordered-input, canonically stored partition of {1..n}.

    Blocks are stored sorted internally and ordered by their minimum, so two
    partitions are equal iff they induce the same grouping.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        seen = set()
        cleaned = []
        for b in blocks:
            b = tuple(sorted(b))
            if not b:
                raise InvalidPartition("empty block")
            for x in b:
                if not isinstance(x, int) or not 1 <= x <= n:
                    raise InvalidPartition(f"point {x!r} outside 1..{n}")
                if x in seen:
                    raise InvalidPartition(f"point {x} in two blocks")
                seen.add(x)
            cleaned.append(b)
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise InvalidPartition(f"points {missing} not covered")
        self.n = n
        self.blocks = tuple(sorted(cleaned, key=lambda b: b[0]))

    @classmethod
    def parse(cls, n, text):
        """Parse "1|23|45" or "1,23,45" (single-digit points, n <= 9)."""
        text = text.strip().replace(",", "|")
        blocks = [[int(ch) for ch in part] for part in text.split("|") if part]
        return cls(n, blocks)

    @property
    def q(self):
        return len(self.blocks)

    def block_of(self):
        """Map point -> block position."""
        owner = [0] * (self.n + 1)
        for i, b in enumerate(self.blocks):
            for x in b:
                owner[x] = i
        return owner

    def label(self, prefix="a"):
        inner = ",".join("".join(str(x) for x in b) for b in self.blocks)
        return f"{prefix}({inner})"

    def __eq__(self, other):
        return (isinstance(other, Partition)
                and (self.n, self.blocks) == (other.n, other.blocks))

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"Partition({self.n}, {self.label()})"


def alpha_from_delta(partition, t):
    """Value of the partition hemimetric at tuple t, two ways.

    The product of the pairwise cut values over the points of t equals the
    floor of their normalized sum; both are computed and cross-checked.
    """
    t = validate_tuple(partition.n, t)
    if len(t) != partition.q:
        raise MismatchedArity(
            f"tuple arity {len(t)} != block count {partition.q}")
    owner = partition.block_of()
    pairs = list(combinations(t, 2))
    deltas = [0 if owner[a] == owner[b] else 1 for a, b in pairs]
    prod = 1
    for dlt in deltas:
        prod *= dlt
    floor_form = sum(deltas) // len(pairs)
    assert prod == floor_form, (partition, t)
    return prod


def partition_hemimetric(n, partition):
    """The 0/1 generator vector of a partition with m+1 blocks.

    Coordinate of tuple t is 1 iff t is a transversal: no two of its points
    share a block.
    """
    if partition.n != n:
        raise InvalidPartition(f"partition is over {partition.n} points, not {n}")
    q = partition.q
    if q < 2:
        raise WrongBlockCount("need at least 2 blocks")
    if q > n:
        raise WrongBlockCount(f"{q} blocks on {n} points")
    idx = tuple_index(n, q)
    owner = partition.block_of()
    coords = []
    for t in idx.tuples:
        owners = {owner[x] for x in t}
        coords.append(1 if len(owners) == len(t) else 0)
    return HemiVector(idx, coords)


def multicut_semimetric(n, partition):
    """The pairwise cut vector of a partition: 0 inside a block, 1 across."""
    if partition.q < 2:
        raise WrongBlockCount("need at least 2 blocks")
    idx = tuple_index(n, 2)
    owner = partition.block_of()
    return HemiVector(
        idx, [0 if owner[a] == owner[b] else 1 for a, b in idx.tuples])


def partition_from_hemimetric(v):
    """Recover the partition whose generator vector is v, or None.

    Two points belong to the same block iff no support tuple of v contains
    both.  The candidate partition is rebuilt and verified, so a non-0/1 or
    structurally different vector returns None.
    """
    if not all(c in (0, 1) for c in v.coords):
        return None
    n, q = v.n, v.index.k
    together = [[False] * (n + 1) for _ in range(n + 1)]
    for t in v.support():
        for a, b in combinations(t, 2):
            together[a][b] = together[b][a] = True
    # union points that never co-occur
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if not together[a][b]:
                parent[find(a)] = find(b)
    groups = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    if len(groups) != q:
        return None
    try:
        p = Partition(n, list(groups.values()))
    except InvalidPartition:
        return None
    if partition_hemimetric(n, p) == v:
        return p
    return None


def simplex_inequality_support(W, t):
    """The tuples of the simplex inequality for (m+2)-set W with head t."""
    W = tuple(W)
    others = [tuple(sorted(set(W) - {x})) for x in t]
    return t, others


def check_simplex(v):
    """All simplex inequality violations of a vector.

    Returns a list of (W, t, slack) with slack < 0, where slack is the sum
    over the non-head (m+1)-subsets of W minus the value at the head t.
    Empty list means v satisfies every simplex inequality.
    """
    idx = v.index
    n, k = idx.n, idx.k
    out = []
    for W in combinations(range(1, n + 1), k + 1):
        subs = list(combinations(W, k))
        vals = [v.coords[idx._rank[s]] for s in subs]
        total = sum(vals)
        for t, val in zip(subs, vals):
            slack = total - 2 * val
            if slack < 0:
                out.append((W, t, slack))
    return out


class RGraph:
    """Vertex-labeled subgraph of the Johnson graph induced by a support.

    Vertices are the support tuples of a vector (lex order), labels are the
    coordinate values, edges join tuples sharing all but one point.
    """

    __slots__ = ("n", "k", "vertices", "labels", "edges")

    def __init__(self, n, k, vertices, labels):
        self.n = n
        self.k = k
        self.vertices = tuple(vertices)
        self.labels = tuple(labels)
        self.edges = tuple(
            (i, j)
            for i, j in combinations(range(len(self.vertices)), 2)
            if johnson_adjacent(self.vertices[i], self.vertices[j]))

    @property
    def size(self):
        return len(self.vertices)

    def degree_sequence(self):
        deg = [0] * self.size
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return sorted(deg)

    def render_vertices(self):
        return [render_tuple(self.n, t) for t in self.vertices]

    def __repr__(self):
        return (f"RGraph({self.size} vertices, {len(self.edges)} edges, "
                f"labels {sorted(set(self.labels))})")


def r_graph(v):
    """R-graph of a vector: its support inside the Johnson graph."""
    verts = []
    labels = []
    for t, c in zip(v.index.tuples, v.coords):
        if c != 0:
            verts.append(t)
            labels.append(c)
    return RGraph(v.n, v.index.k, verts, labels)


def r_graph_is_clique_product(partition):
    """Self-test: R(alpha(partition)) is the Cartesian product of cliques.

    The R-graph of a partition generator must be isomorphic to the product
    of complete graphs K_{|S_1|} x ... x K_{|S_q|} (two transversals are
    adjacent iff they differ in the representative of exactly one block).
    Always true for valid partitions; returns the boolean so callers can
    assert it.
    """
    from . import graphs  # deferred: graphs sits above this module

    v = partition_hemimetric(partition.n, partition)
    rg = r_graph(v)
    sizes = [len(b) for b in partition.blocks]
    expected = graphs.clique_product(sizes)
    got = graphs.Graph.from_edges(rg.size, rg.edges)
    return graphs.isomorphic(got, expected)


def vector_from_pair_complement_layout(n, values):
    """Build a HemiVector with k = n-2 from coordinates listed by
    complementary pairs in pair-lex order (~12, ~13, ..., the layout used
    when tuples are printed through their 2-element complements)."""
    k = n - 2
    idx = tuple_index(n, k)
    pairs = list(combinations(range(1, n + 1), 2))
    if len(values) != len(pairs):
        raise MismatchedArity(f"{len(values)} values for {len(pairs)} pairs")
    coords = [None] * idx.size
    for pair, val in zip(pairs, values):
        coords[idx._rank[complement_tuple(n, pair)]] = val
    return HemiVector(idx, coords)
