"""Cone descriptions: simplex/nonnegativity H-cones and partition V-cones."""

from itertools import combinations
from math import comb

from .errors import InvalidDimension, WrongBlockCount
from .linalg import bareiss_rank
from .tuples import render_tuple, tuple_index
from .vectors import HemiVector, Partition, partition_from_hemimetric, partition_hemimetric


class LinearInequality:
    """A homogeneous inequality normal . x >= 0 with a primitive normal."""

    __slots__ = ("normal", "name")

    def __init__(self, normal, name=None):
        if not normal.is_primitive():
            normal = normal.scaled_primitive()
        self.normal = normal
        self.name = name

    @property
    def coords(self):
        return self.normal.coords

    def slack(self, v):
        return sum(a * x for a, x in zip(self.normal.coords, v.coords))

    def __eq__(self, other):
        return isinstance(other, LinearInequality) and self.normal == other.normal

    def __hash__(self):
        return hash(self.normal)

    def __repr__(self):
        return f"LinearInequality({self.name or self.normal.render()})"


class ConeH:
    """Cone given by inequalities normal_i . x >= 0 over a tuple index."""

    __slots__ = ("index", "inequalities", "family")

    def __init__(self, index, inequalities, family="custom"):
        self.index = index
        self.inequalities = tuple(inequalities)
        for iq in self.inequalities:
            if iq.normal.index != index:
                raise InvalidDimension("inequality over a different index")
        self.family = family

    @property
    def dim(self):
        return self.index.size

    def normal_rows(self):
        return [iq.normal.coords for iq in self.inequalities]

    def names(self):
        return [iq.name for iq in self.inequalities]

    def __len__(self):
        return len(self.inequalities)

    def __repr__(self):
        return f"ConeH({self.family}, dim={self.dim}, {len(self)} inequalities)"


class ConeV:
    """Cone generated by primitive ray vectors over a tuple index."""

    __slots__ = ("index", "rays", "family", "labels")

    def __init__(self, index, rays, family="custom", labels=None):
        rays = tuple(rays)
        seen = set()
        for r in rays:
            if r.index != index:
                raise InvalidDimension("ray over a different index")
            if not r.is_primitive():
                raise InvalidDimension(f"ray {r.render()} is not primitive")
            if r.coords in seen:
                raise InvalidDimension(f"duplicate ray {r.render()}")
            seen.add(r.coords)
        self.index = index
        self.rays = rays
        self.family = family
        self.labels = tuple(labels) if labels is not None else (None,) * len(rays)
        if len(self.labels) != len(rays):
            raise InvalidDimension("one label per ray")

    @property
    def dim(self):
        return self.index.size

    def ray_rows(self):
        return [r.coords for r in self.rays]

    def spans_space(self):
        return bareiss_rank(self.ray_rows()) == self.dim

    def __len__(self):
        return len(self.rays)

    def __repr__(self):
        return f"ConeV({self.family}, dim={self.dim}, {len(self)} rays)"


def simplex_inequalities(n, m):
    """All simplex inequalities for m-hemimetrics on n points.

    One inequality per ((m+2)-set W, head tuple t): sum of the other
    (m+1)-subsets of W minus the head is nonnegative.  There are
    (n-m-1) * C(n, m+1) of them.
    """
    _check_nm(n, m)
    idx = tuple_index(n, m + 1)
    out = []
    for W in combinations(range(1, n + 1), m + 2):
        subs = list(combinations(W, m + 1))
        for t in subs:
            coords = [0] * idx.size
            for s in subs:
                coords[idx._rank[s]] = -1 if s == t else 1
            extra = next(x for x in W if x not in t)
            name = f"T_{render_tuple(n, t)},{extra}"
            out.append(LinearInequality(HemiVector(idx, coords), name))
    assert len(out) == (n - m - 1) * comb(n, m + 1)
    return out


def nonnegativity_inequalities(n, m):
    """One inequality x_t >= 0 per (m+1)-tuple t."""
    _check_nm(n, m)
    idx = tuple_index(n, m + 1)
    out = []
    for i, t in enumerate(idx.tuples):
        coords = [0] * idx.size
        coords[i] = 1
        out.append(LinearInequality(HemiVector(idx, coords), f"N_{render_tuple(n, t)}"))
    return out


def _check_nm(n, m):
    if m < 1:
        raise InvalidDimension(f"m = {m} < 1")
    if n < m + 2:
        raise InvalidDimension(f"need n >= m + 2, got n={n} m={m}")


def build_cone_h(family, n, m):
    """H-description of a named cone family: "hm" or "nhm"."""
    fam = family.lower()
    _check_nm(n, m)
    idx = tuple_index(n, m + 1)
    if fam == "hm":
        return ConeH(idx, simplex_inequalities(n, m), family="HM")
    if fam == "nhm":
        return ConeH(
            idx,
            simplex_inequalities(n, m) + nonnegativity_inequalities(n, m),
            family="NHM")
    raise InvalidDimension(f"unknown H-family {family!r}")


def enumerate_partitions(n, q):
    """All partitions of {1..n} into exactly q nonempty blocks.

    Enumerated via restricted growth strings in lexicographic order, so the
    output order is deterministic.  Count is the Stirling number S(n, q).
    """
    if q < 1 or q > n:
        raise WrongBlockCount(f"cannot split {n} points into {q} blocks")
    out = []

    def grow(pos, rgs, used):
        if pos == n:
            if used == q:
                blocks = [[] for _ in range(q)]
                for point, cls in enumerate(rgs, start=1):
                    blocks[cls].append(point)
                out.append(Partition(n, blocks))
            return
        # pruning: remaining positions must be able to reach q classes
        if used + (n - pos) < q:
            return
        for cls in range(min(used + 1, q)):
            rgs.append(cls)
            grow(pos + 1, rgs, used + (1 if cls == used else 0))
            rgs.pop()

    grow(0, [], 0)
    return out


def build_cone_p(n, m):
    """V-description of the partition cone: generators alpha(S_1..S_{m+1})."""
    _check_nm(n, m)
    idx = tuple_index(n, m + 1)
    rays = []
    labels = []
    seen = {}
    for p in enumerate_partitions(n, m + 1):
        v = partition_hemimetric(n, p)
        if v.coords in seen:
            # distinct (m+1)-partitions give distinct generators; keep the
            # guard anyway so a future family change cannot smuggle dupes
            continue
        seen[v.coords] = p
        rays.append(v)
        labels.append(p.label())
    return ConeV(idx, rays, family="P", labels=labels)


def classify_normal(v):
    """Human name for a normal if it matches a simplex or nonnegativity
    pattern, else None."""
    idx = v.index
    n, k = idx.n, idx.k
    supp = v.support()
    if len(supp) == 1 and v.value(supp[0]) == 1:
        return f"N_{render_tuple(n, supp[0])}"
    if len(supp) == k + 1 and all(v.value(t) in (1, -1) for t in supp):
        union = set()
        for t in supp:
            union |= set(t)
        if len(union) == k + 1:
            # union has exactly k+1 subsets of size k, so supp is all of them
            heads = [t for t in supp if v.value(t) == -1]
            if len(heads) == 1:
                t = heads[0]
                extra = next(x for x in sorted(union) if x not in t)
                return f"T_{render_tuple(n, t)},{extra}"
    return None


def classify_ray(v):
    """Partition label for a generator vector, else None."""
    p = partition_from_hemimetric(v)
    return p.label() if p is not None else None


def label_rays(cone_v):
    """Labels for a ConeV: partition names where recognizable."""
    return [classify_ray(r) for r in cone_v.rays]
