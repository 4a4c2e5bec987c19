"""Coordinate action of Sym(n) on tuple-indexed vectors, orbits, and
orbit-level adjacency/incidence tables."""

from dataclasses import dataclass
from itertools import permutations
from math import factorial

import numpy as np

from .errors import InconsistentRelation, InvalidPermutation, MismatchedArity
from .tuples import check_permutation, permutation_source_map
from .vectors import HemiVector


class CoordinatePermutation:
    """The permutation of tuple coordinates induced by a point permutation."""

    __slots__ = ("index", "points", "src")

    def __init__(self, index, points):
        self.index = index
        self.points = check_permutation(index.n, points)
        self.src = permutation_source_map(index, self.points)

    @classmethod
    def identity(cls, index):
        return cls(index, tuple(range(1, index.n + 1)))

    def apply(self, coords):
        return tuple(coords[s] for s in self.src)

    def act(self, v):
        if v.index != self.index:
            raise MismatchedArity("vector over a different index")
        return HemiVector(self.index, self.apply(v.coords))

    def compose(self, other):
        """self after other (apply other's point map first)."""
        if self.index != other.index:
            raise MismatchedArity("permutations over different indices")
        pts = tuple(self.points[other.points[x - 1] - 1]
                    for x in range(1, self.index.n + 1))
        return CoordinatePermutation(self.index, pts)

    def inverse(self):
        inv = [0] * self.index.n
        for x, y in enumerate(self.points, start=1):
            inv[y - 1] = x
        return CoordinatePermutation(self.index, tuple(inv))

    def __repr__(self):
        return f"CoordinatePermutation({self.points})"


def act(points, v):
    """Relabel the points of a vector by a permutation of 1..n."""
    return CoordinatePermutation(v.index, tuple(points)).act(v)


def sym_generators(n):
    """Transposition (1 2) and the n-cycle: they generate Sym(n)."""
    if n < 2:
        raise InvalidPermutation("need n >= 2")
    swap = (2, 1) + tuple(range(3, n + 1))
    cycle = tuple(range(2, n + 1)) + (1,)
    return [swap, cycle] if n > 2 else [swap]


def generator_maps(index):
    return [permutation_source_map(index, g) for g in sym_generators(index.n)]


def orbit_closure(coords, gen_maps):
    """All images of a coordinate tuple under the generated group."""
    seen = {tuple(coords)}
    frontier = [tuple(coords)]
    while frontier:
        nxt = []
        for c in frontier:
            for src in gen_maps:
                img = tuple(c[s] for s in src)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


@dataclass
class Orbit:
    rep: HemiVector          # lexicographically least member
    rep_index: int           # its position in the family
    members: tuple           # sorted family positions
    closure_size: int        # full Sym(n) orbit size

    @property
    def size(self):
        return len(self.members)


class OrbitDecomposition:
    """Partition of a vector family into Sym(n) orbits.

    Orbits are sorted by their lexicographically least member, so the
    decomposition of a fixed family is deterministic.
    """

    def __init__(self, index, vectors, orbits, orbit_of):
        self.index = index
        self.vectors = vectors
        self.orbits = orbits
        self.orbit_of = orbit_of

    def __len__(self):
        return len(self.orbits)

    def sizes(self):
        return [o.size for o in self.orbits]

    def is_invariant(self):
        return all(o.size == o.closure_size for o in self.orbits)

    def orbit_of_coords(self, coords):
        coords = tuple(coords)
        for i, v in enumerate(self.vectors):
            if v.coords == coords:
                return self.orbit_of[i]
        return None

    def __repr__(self):
        return (f"OrbitDecomposition({len(self.vectors)} vectors, "
                f"{len(self.orbits)} orbits, sizes {self.sizes()})")


def decompose_orbits(index, vectors):
    """Orbit decomposition of a family of vectors over one index.

    Orbit sizes always divide n!; when the family is Sym(n)-invariant every
    closure stays inside the family and sizes() sums to the family size.
    """
    vecs = list(vectors)
    pos = {}
    for i, v in enumerate(vecs):
        if v.index != index:
            raise MismatchedArity("vector over a different index")
        if v.coords in pos:
            raise InvalidPermutation(f"duplicate vector at {i}")
        pos[v.coords] = i
    gen_maps = generator_maps(index)
    nfact = factorial(index.n)
    orbit_of = [None] * len(vecs)
    raw = []
    for i, v in enumerate(vecs):
        if orbit_of[i] is not None:
            continue
        closure = orbit_closure(v.coords, gen_maps)
        assert nfact % len(closure) == 0
        members = sorted(pos[c] for c in closure if c in pos)
        rep_coords = min(c for c in closure if c in pos)
        for mi in members:
            orbit_of[mi] = -1  # placeholder until orbits are sorted
        raw.append((rep_coords, members, len(closure)))
    raw.sort(key=lambda t: t[0])
    orbits = []
    for oid, (rep_coords, members, csize) in enumerate(raw):
        rep_index = pos[rep_coords]
        orbits.append(Orbit(vecs[rep_index], rep_index, tuple(members), csize))
        for mi in members:
            orbit_of[mi] = oid
    return OrbitDecomposition(index, vecs, orbits, orbit_of)


def family_is_invariant(index, vectors, exhaustive=False):
    """Is the family closed under Sym(n)?

    Generator closure is equivalent to full invariance; with
    exhaustive=True every one of the n! permutations is applied anyway
    (numpy fast path when coordinates fit int64).
    """
    coords = [v.coords for v in vectors]
    members = set(coords)
    if len(members) != len(coords):
        raise InvalidPermutation("duplicate vectors in family")
    if not exhaustive:
        for src in generator_maps(index):
            for c in coords:
                if tuple(c[s] for s in src) not in members:
                    return False
        return True
    fits = all(abs(x) < 2 ** 62 for c in coords for x in c)
    if fits and coords:
        mat = np.array(coords, dtype=np.int64)

        def sorted_rows(a):
            return a[np.lexsort(a.T[::-1])]

        ref = sorted_rows(mat)
        for perm in permutations(range(1, index.n + 1)):
            src = permutation_source_map(index, perm)
            img = np.ascontiguousarray(mat[:, src])
            if not np.array_equal(ref, sorted_rows(img)):
                return False
        return True
    for perm in permutations(range(1, index.n + 1)):
        src = permutation_source_map(index, perm)
        for c in coords:
            if tuple(c[s] for s in src) not in members:
                return False
    return True


@dataclass
class OrbitRow:
    label: str
    rep_label: str
    adjacencies: tuple      # counts into each orbit, orbit order
    total_adjacency: int
    incidences: tuple       # counts into each co-orbit (or a single total)
    total_incidence: int
    size: int


class OrbitTable:
    """Orbit-level summary: representative adjacency and incidence counts.

    Rows follow the decomposition's orbit order unless a display order is
    given; columns of `adjacencies` always follow decomposition order.
    """

    def __init__(self, rows, orbit_order, co_labels=None):
        self.rows = rows
        self.orbit_order = orbit_order
        self.co_labels = co_labels

    def row_for_rep(self, coords):
        coords = tuple(coords)
        for row, orig in zip(self.rows, self.orbit_order):
            if row._rep_coords == coords:
                return row
        return None

    def __iter__(self):
        return iter(self.rows)


def orbit_table(decomp, neighbors, incident, co_decomp=None, rep_labels=None,
                order="adjacency"):
    """Build an orbit table and verify the double counting identity.

    neighbors(i) -> family positions adjacent to member i (same family);
    incident(i) -> co-family positions incident to member i.  Counts are
    computed on every orbit representative; the identity
    |O_i| * adj(O_i -> O_j) == |O_j| * adj(O_j -> O_i) must hold for all
    orbit pairs or InconsistentRelation is raised.  With a co_decomp the
    incidence column splits into per-co-orbit counts, and representative
    incidence counts are checked to be constant on each orbit.
    """
    k = len(decomp.orbits)
    adj = []
    for o in decomp.orbits:
        counts = [0] * k
        for j in neighbors(o.rep_index):
            counts[decomp.orbit_of[j]] += 1
        adj.append(tuple(counts))
    for i in range(k):
        for j in range(k):
            lhs = decomp.orbits[i].size * adj[i][j]
            rhs = decomp.orbits[j].size * adj[j][i]
            if lhs != rhs:
                raise InconsistentRelation(
                    f"|O_{i + 1}|*{adj[i][j]} = {lhs} != {rhs} = "
                    f"|O_{j + 1}|*{adj[j][i]}")
    inc = []
    for o in decomp.orbits:
        hits = list(incident(o.rep_index))
        if co_decomp is None:
            inc.append((len(hits),))
        else:
            counts = [0] * len(co_decomp.orbits)
            for j in hits:
                counts[co_decomp.orbit_of[j]] += 1
            inc.append(tuple(counts))
    rows = []
    for oid, o in enumerate(decomp.orbits):
        if rep_labels is not None:
            label = rep_labels(o.rep)
        else:
            label = None
        rows.append(OrbitRow(
            label=f"O{oid + 1}",
            rep_label=label or o.rep.render(),
            adjacencies=adj[oid],
            total_adjacency=sum(adj[oid]),
            incidences=inc[oid],
            total_incidence=sum(inc[oid]),
            size=o.size,
        ))
        rows[-1]._rep_coords = o.rep.coords
    order_ids = list(range(k))
    if order == "adjacency":
        order_ids.sort(key=lambda i: (-rows[i].total_adjacency,
                                      -rows[i].total_incidence,
                                      rows[i]._rep_coords))
    elif order == "decomposition":
        pass
    elif isinstance(order, (list, tuple)):
        order_ids = list(order)
    else:
        raise ValueError(f"unknown order {order!r}")
    ordered = [rows[i] for i in order_ids]
    for disp, row in enumerate(ordered):
        row.label = f"O{disp + 1}"
    # adjacency columns must match the displayed row order
    for row in ordered:
        row.adjacencies = tuple(row.adjacencies[i] for i in order_ids)
    co_labels = None
    if co_decomp is not None:
        co_labels = [f"F{j + 1}" for j in range(len(co_decomp.orbits))]
    return OrbitTable(ordered, order_ids, co_labels)


def validate_double_counting(decomp, co_decomp, inc_matrix):
    """Exact double counting between two orbit decompositions.

    inc_matrix is the IncidenceMatrix with decomp's family as rays and
    co_decomp's family as inequalities.  Checks that per-member incidence
    counts into each co-orbit are constant on every orbit, and that
    |O_i| * I(O_i, F_j) == |F_j| * I(F_j, O_i) for all pairs.
    Returns the (orbit x co-orbit) incidence count matrix.
    """
    k, kc = len(decomp.orbits), len(co_decomp.orbits)
    per_ray = []
    for i in range(inc_matrix.n_rays):
        counts = [0] * kc
        m = inc_matrix.ray_masks[i]
        for j in _bits(m):
            counts[co_decomp.orbit_of[j]] += 1
        per_ray.append(counts)
    table = []
    for o in decomp.orbits:
        first = per_ray[o.members[0]]
        for mi in o.members[1:]:
            if per_ray[mi] != first:
                raise InconsistentRelation(
                    f"incidence counts not constant on orbit of "
                    f"{o.rep.render()}")
        table.append(first)
    per_ineq = []
    for j in range(inc_matrix.n_ineqs):
        counts = [0] * k
        m = inc_matrix.ineq_masks[j]
        for i in _bits(m):
            counts[decomp.orbit_of[i]] += 1
        per_ineq.append(counts)
    co_table = []
    for o in co_decomp.orbits:
        first = per_ineq[o.members[0]]
        for mi in o.members[1:]:
            if per_ineq[mi] != first:
                raise InconsistentRelation(
                    "incidence counts not constant on a co-orbit")
        co_table.append(first)
    for i in range(k):
        for j in range(kc):
            lhs = decomp.orbits[i].size * table[i][j]
            rhs = co_decomp.orbits[j].size * co_table[j][i]
            if lhs != rhs:
                raise InconsistentRelation(
                    f"|O_{i + 1}|*{table[i][j]} = {lhs} != {rhs} = "
                    f"|F_{j + 1}|*{co_table[j][i]}")
    return table


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low
