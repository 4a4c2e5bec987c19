"""Double description enumeration with exact arithmetic and certificates.

The engine converts between H-descriptions (inequality normals) and
V-descriptions (extreme rays) of pointed full-dimensional cones.  All ray
and slack arithmetic is exact Python integers; numpy only carries sign
tables and packed zero-set bitmasks, plus an int64 fast path for incidence
products under an explicit overflow bound.
"""

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

import numpy as np

from .cones import ConeH, ConeV, LinearInequality, classify_normal
from .errors import (
    InconsistentPair,
    InfeasiblePoint,
    InvalidDimension,
    NotFullDimensional,
    NotPointed,
    NotValidInequality,
    ResourceLimitReached,
    SnapshotMismatch,
)
from .linalg import (
    RationalRowBasis,
    bareiss_rank,
    dot,
    invert_columns,
    primitive_int_vector,
)
from .tuples import tuple_index
from .vectors import HemiVector

ENGINE_VERSION = "1"

_WORD = 64


def canonical_primitive(v):
    """Canonical primitive integer form of a vector (sign preserved)."""
    return HemiVector(v.index, primitive_int_vector(v.coords))


def _sign(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


if hasattr(np, "bitwise_count"):
    def _pop_rows(words):
        return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)
else:  # pragma: no cover - numpy >= 2 has bitwise_count
    _POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _pop_rows(words):
        return _POP8[words.view(np.uint8)].sum(axis=-1, dtype=np.int64)


def _row_to_int(word_row):
    return int.from_bytes(word_row.astype("<u8").tobytes(), "little")


def _iter_bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass
class DDSnapshot:
    """Resumable state of an interrupted enumeration."""

    engine_version: str
    n: int
    k: int
    dual: bool
    normals: tuple
    processed: tuple
    rays: tuple
    elapsed: float
    peak_rays: int

    def to_dict(self):
        return {
            "engine_version": self.engine_version,
            "n": self.n,
            "k": self.k,
            "dual": self.dual,
            "normals": [list(r) for r in self.normals],
            "processed": list(self.processed),
            "rays": [list(r) for r in self.rays],
            "elapsed": self.elapsed,
            "peak_rays": self.peak_rays,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            engine_version=d["engine_version"],
            n=d["n"],
            k=d["k"],
            dual=d["dual"],
            normals=tuple(tuple(int(x) for x in r) for r in d["normals"]),
            processed=tuple(int(x) for x in d["processed"]),
            rays=tuple(tuple(int(x) for x in r) for r in d["rays"]),
            elapsed=float(d["elapsed"]),
            peak_rays=int(d["peak_rays"]),
        )


class _Enumerator:
    """Incremental insertion of inequality halfspaces into a simplicial
    start cone, keeping the extreme rays of every intermediate cone."""

    def __init__(self, normals, dim, max_rays=None, max_seconds=None,
                 progress=None):
        self.normals = [tuple(r) for r in normals]
        self.M = len(self.normals)
        self.d = dim
        self.max_rays = max_rays
        self.max_seconds = max_seconds
        self.progress = progress
        self.W = max(1, (self.M + _WORD - 1) // _WORD)
        self.peak = 0
        self.elapsed0 = 0.0

    # -- state construction ------------------------------------------------

    def start_fresh(self):
        basis = RationalRowBasis(self.d)
        chosen = []
        for i, row in enumerate(self.normals):
            if basis.add(row):
                chosen.append(i)
                if len(chosen) == self.d:
                    break
        if len(chosen) < self.d:
            raise NotPointed(
                f"normals have rank {len(chosen)} < dim {self.d}; "
                "the cone contains a line")
        cols = invert_columns([self.normals[i] for i in chosen])
        rays = [primitive_int_vector(c) for c in cols]
        self.processed = set(chosen)
        self._set_rays(rays)

    def resume(self, snapshot):
        if snapshot.engine_version != ENGINE_VERSION:
            raise SnapshotMismatch(
                f"snapshot from engine {snapshot.engine_version}, "
                f"running {ENGINE_VERSION}")
        if tuple(snapshot.normals) != tuple(self.normals):
            raise SnapshotMismatch("snapshot normals differ from input")
        self.processed = set(snapshot.processed)
        self.elapsed0 = snapshot.elapsed
        self.peak = snapshot.peak_rays
        self._set_rays([tuple(r) for r in snapshot.rays])

    def _set_rays(self, rays):
        self.coords = [tuple(r) for r in rays]
        self.slacks = [[dot(nrm, r) for nrm in self.normals] for r in self.coords]
        self._rebuild_tables()
        self.peak = max(self.peak, len(self.coords))

    def _rebuild_tables(self):
        R = len(self.coords)
        self.signs = np.zeros((R, self.M), dtype=np.int8)
        self.masks = np.zeros((R, self.W), dtype=np.uint64)
        plist = sorted(self.processed)
        for r, srow in enumerate(self.slacks):
            srow_signs = self.signs[r]
            for i, s in enumerate(srow):
                srow_signs[i] = _sign(s)
            self.masks[r] = self._mask_words(srow, plist)

    def _mask_words(self, slack_row, plist):
        words = [0] * self.W
        for i in plist:
            if slack_row[i] == 0:
                words[i >> 6] |= 1 << (i & 63)
        return np.array(
            [w & 0xFFFFFFFFFFFFFFFF for w in words], dtype=np.uint64)

    # -- main loop ----------------------------------------------------------

    def run(self):
        t0 = time.monotonic()
        while len(self.processed) < self.M:
            self._check_ceilings(t0)
            cols = np.array(
                [j for j in range(self.M) if j not in self.processed],
                dtype=np.int64)
            counts = (self.signs[:, cols] == -1).sum(axis=0)
            if self.progress is not None:
                self.progress(len(self.processed), self.M, len(self.coords))
            zero_cols = cols[counts == 0]
            if len(zero_cols):
                # these inequalities cut nothing off; just record tightness
                for j in zero_cols:
                    j = int(j)
                    tight = self.signs[:, j] == 0
                    self.masks[tight, j >> 6] |= np.uint64(1 << (j & 63))
                    self.processed.add(j)
                continue
            j = int(cols[int(np.argmin(counts))])
            self._insert(j)
        elapsed = self.elapsed0 + (time.monotonic() - t0)
        self._final_check()
        order = sorted(range(len(self.coords)), key=lambda i: self.coords[i])
        return [self.coords[i] for i in order], elapsed

    def _check_ceilings(self, t0):
        elapsed = self.elapsed0 + (time.monotonic() - t0)
        reason = None
        if self.max_rays is not None and len(self.coords) > self.max_rays:
            reason = f"ray count {len(self.coords)} exceeds max-rays {self.max_rays}"
        elif self.max_seconds is not None and elapsed > self.max_seconds:
            reason = f"elapsed {elapsed:.1f}s exceeds max-seconds {self.max_seconds}"
        if reason is not None:
            raise ResourceLimitReached(reason, self._snapshot(elapsed))

    def _snapshot(self, elapsed):
        return DDSnapshot(
            engine_version=ENGINE_VERSION,
            n=0, k=0, dual=False,  # caller stamps identity
            normals=tuple(self.normals),
            processed=tuple(sorted(self.processed)),
            rays=tuple(self.coords),
            elapsed=elapsed,
            peak_rays=self.peak,
        )

    def _insert(self, j):
        col = self.signs[:, j]
        neg = np.nonzero(col == -1)[0]
        pos = np.nonzero(col == 1)[0]
        pairs = self._adjacent_pairs(pos, neg)

        new_coords = []
        new_slacks = []
        seen = set()
        for p, q in pairs:
            sp = self.slacks[p][j]
            sn = self.slacks[q][j]
            raw = [sp * b - sn * a
                   for a, b in zip(self.coords[p], self.coords[q])]
            g = 0
            for x in raw:
                g = gcd(g, x)
            coords = tuple(x // g for x in raw)
            if coords in seen:
                continue
            seen.add(coords)
            srow = [(sp * b - sn * a) // g
                    for a, b in zip(self.slacks[p], self.slacks[q])]
            assert srow[j] == 0
            new_coords.append(coords)
            new_slacks.append(srow)

        # record tightness at j for surviving old rays, then drop negatives
        tight = col == 0
        self.masks[tight, j >> 6] |= np.uint64(1 << (j & 63))
        keep = col >= 0
        keep_idx = np.nonzero(keep)[0]
        self.coords = [self.coords[i] for i in keep_idx]
        self.slacks = [self.slacks[i] for i in keep_idx]
        self.signs = self.signs[keep]
        self.masks = self.masks[keep]

        if new_coords:
            self.processed.add(j)
            plist = sorted(self.processed)
            add_signs = np.zeros((len(new_coords), self.M), dtype=np.int8)
            add_masks = np.zeros((len(new_coords), self.W), dtype=np.uint64)
            for r, srow in enumerate(new_slacks):
                row = add_signs[r]
                for i, s in enumerate(srow):
                    row[i] = _sign(s)
                add_masks[r] = self._mask_words(srow, plist)
            self.coords.extend(new_coords)
            self.slacks.extend(new_slacks)
            self.signs = np.concatenate([self.signs, add_signs])
            self.masks = np.concatenate([self.masks, add_masks])
        else:
            self.processed.add(j)
        self.peak = max(self.peak, len(self.coords))

    # -- adjacency ----------------------------------------------------------

    def _adjacent_pairs(self, pos, neg):
        if len(pos) == 0 or len(neg) == 0:
            return []
        need = self.d - 2
        if len(self.coords) < 2 * self.d:
            return self._adjacent_pairs_rank(pos, neg, need)
        return self._adjacent_pairs_witness(pos, neg, need)

    def _adjacent_pairs_rank(self, pos, neg, need):
        """Tight-set rank test: adjacent iff common tight normals have
        rank d-2.  Valid for any pointed cone, any ray count."""
        out = []
        ints = {int(i): _row_to_int(self.masks[i]) for i in np.concatenate([pos, neg])}
        for p in pos:
            p = int(p)
            for q in neg:
                q = int(q)
                common = ints[p] & ints[q]
                if common.bit_count() < need:
                    continue
                rows = [self.normals[i] for i in _iter_bits(common)]
                if bareiss_rank(rows) == need:
                    out.append((p, q))
        return out

    def _adjacent_pairs_witness(self, pos, neg, need):
        """Combinatorial test: adjacent iff no third ray's zero set contains
        the pair's common zero set.  Valid because the current ray list is
        the complete extreme ray list of the current intermediate cone.

        The scan for a third containing ray is routed through the sparsest
        tight column of each candidate pair: any containing ray is tight
        wherever the pair is jointly tight, so only the rays tight at that
        column need to be checked rather than the whole family.
        """
        masks = self.masks
        if len(pos) <= len(neg):
            small, large, small_is_pos = pos, neg, True
        else:
            small, large, small_is_pos = neg, pos, False

        # candidate pairs: common tight sets large enough to span a ridge
        parts_s, parts_l, parts_c = [], [], []
        for s in small:
            s = int(s)
            common = masks[large] & masks[s]
            sel = np.nonzero(_pop_rows(common) >= need)[0]
            if len(sel):
                parts_s.append(np.full(len(sel), s, dtype=np.int64))
                parts_l.append(large[sel])
                parts_c.append(common[sel])
        if not parts_s:
            return []
        cs = np.concatenate(parts_s)
        cl = np.concatenate(parts_l)
        cc = np.concatenate(parts_c)

        nmasks = np.bitwise_not(masks)
        colsize = (self.signs == 0).sum(axis=0, dtype=np.int64)
        unused = len(self.coords) + 1
        colcost = np.full(self.W * _WORD, unused, dtype=np.int64)
        colcost[:self.M] = colsize
        col_rows = {}

        kept = []
        for start in range(0, len(cs), 4096):
            ccs = cc[start:start + 4096]
            bits = np.unpackbits(
                ccs.view(np.uint8), axis=1, bitorder="little").astype(bool)
            score = np.where(bits, colcost[None, :], unused)
            istar = score.argmin(axis=1)
            for i in np.unique(istar):
                i = int(i)
                rows = col_rows.get(i)
                if rows is None:
                    rows = np.nonzero(self.signs[:, i] == 0)[0]
                    col_rows[i] = rows
                nm = nmasks[rows]
                grp = np.nonzero(istar == i)[0]
                for g0 in range(0, len(grp), 256):
                    gsl = grp[g0:g0 + 256]
                    cg = ccs[gsl]
                    viol = (nm[:, None, :] & cg[None, :, :]).any(axis=2)
                    ok = np.nonzero(
                        (~viol).sum(axis=0, dtype=np.int64) == 2)[0]
                    if len(ok):
                        kept.append(start + gsl[ok])
        if not kept:
            return []
        ks = np.concatenate(kept)
        if small_is_pos:
            return [(int(cs[k]), int(cl[k])) for k in ks]
        return [(int(cl[k]), int(cs[k])) for k in ks]

    # -- validation ----------------------------------------------------------

    def _final_check(self):
        for srow in self.slacks:
            assert all(s >= 0 for s in srow)


def _run_engine(normals, dim, max_rays, max_seconds, snapshot, progress,
                stamp):
    eng = _Enumerator(normals, dim, max_rays=max_rays,
                      max_seconds=max_seconds, progress=progress)
    if snapshot is not None:
        if (snapshot.n, snapshot.k, snapshot.dual) != stamp:
            raise SnapshotMismatch(
                f"snapshot is for n={snapshot.n} k={snapshot.k} "
                f"dual={snapshot.dual}, expected {stamp}")
        eng.resume(snapshot)
    else:
        eng.start_fresh()
    try:
        rays, elapsed = eng.run()
    except ResourceLimitReached as exc:
        exc.snapshot.n, exc.snapshot.k, exc.snapshot.dual = stamp
        raise
    return rays, elapsed


def rays_from_inequalities(cone_h, max_rays=None, max_seconds=None,
                           snapshot=None, progress=None):
    """Extreme rays of a pointed H-cone, canonically sorted.

    Raises NotPointed if the normals do not span, ResourceLimitReached
    (carrying a resumable DDSnapshot) if a ceiling stops the run.
    """
    idx = cone_h.index
    stamp = (idx.n, idx.k, False)
    rays, _ = _run_engine(cone_h.normal_rows(), cone_h.dim, max_rays,
                          max_seconds, snapshot, progress, stamp)
    return ConeV(idx, [HemiVector(idx, r) for r in rays], family="computed")


def facets_from_rays(cone_v, max_rays=None, max_seconds=None,
                     snapshot=None, progress=None):
    """Facet normals of a full-dimensional V-cone, canonically sorted.

    Runs the same enumeration on the dual problem: the rays act as the
    inequality normals of the polar cone, whose extreme rays are exactly
    the facet normals of the input.
    """
    idx = cone_v.index
    if not cone_v.spans_space():
        raise NotFullDimensional(
            f"{len(cone_v)} rays span a proper subspace of dim {cone_v.dim}")
    stamp = (idx.n, idx.k, True)
    normals, _ = _run_engine(cone_v.ray_rows(), cone_v.dim, max_rays,
                             max_seconds, snapshot, progress, stamp)
    ineqs = []
    for r in normals:
        hv = HemiVector(idx, r)
        ineqs.append(LinearInequality(hv, classify_normal(hv)))
    return ConeH(idx, ineqs, family="computed")


@dataclass
class ExtremalityCertificate:
    is_extreme: bool
    tight_indices: tuple
    rank: int
    dim: int


@dataclass
class FacetCertificate:
    is_facet: bool
    tight_ray_indices: tuple
    rank: int
    dim: int


def slack_vector(cone_h, v):
    return [dot(iq.normal.coords, v.coords) for iq in cone_h.inequalities]


def is_extreme_ray(cone_h, v):
    """Certified extremality test for a point of the cone.

    Raises InfeasiblePoint when v violates an inequality; otherwise returns
    a certificate whose rank of tight normals must be dim-1 for an extreme
    ray.
    """
    slacks = slack_vector(cone_h, v)
    bad = [(i, cone_h.inequalities[i].name, s)
           for i, s in enumerate(slacks) if s < 0]
    if bad:
        raise InfeasiblePoint(bad)
    if all(c == 0 for c in v.coords):
        return ExtremalityCertificate(False, (), 0, cone_h.dim)
    tight = tuple(i for i, s in enumerate(slacks) if s == 0)
    rank = bareiss_rank([cone_h.inequalities[i].normal.coords for i in tight])
    return ExtremalityCertificate(rank == cone_h.dim - 1, tight, rank, cone_h.dim)


def is_facet(cone_v, ineq):
    """Certified facet test for a valid inequality of a V-cone.

    Raises NotValidInequality when some ray violates it; otherwise returns
    a certificate whose rank of tight rays must be dim-1 for a facet.
    """
    slacks = [dot(ineq.normal.coords, r.coords) for r in cone_v.rays]
    bad = [(i, s) for i, s in enumerate(slacks) if s < 0]
    if bad:
        raise NotValidInequality(bad)
    tight = tuple(i for i, s in enumerate(slacks) if s == 0)
    rank = bareiss_rank([cone_v.rays[i].coords for i in tight])
    return FacetCertificate(rank == cone_v.dim - 1, tight, rank, cone_v.dim)


class IncidenceMatrix:
    """Tightness bits between rays (rows) and inequalities (columns)."""

    __slots__ = ("n_rays", "n_ineqs", "ray_masks", "ineq_masks")

    def __init__(self, n_rays, n_ineqs, ray_masks, ineq_masks):
        self.n_rays = n_rays
        self.n_ineqs = n_ineqs
        self.ray_masks = list(ray_masks)
        self.ineq_masks = list(ineq_masks)

    def bit(self, ray, ineq):
        return (self.ray_masks[ray] >> ineq) & 1

    def ray_tight_count(self, ray):
        return self.ray_masks[ray].bit_count()

    def ineq_tight_count(self, ineq):
        return self.ineq_masks[ineq].bit_count()

    def ray_words(self):
        return masks_to_words(self.ray_masks, self.n_ineqs)

    def ineq_words(self):
        return masks_to_words(self.ineq_masks, self.n_rays)


def masks_to_words(masks, nbits):
    """Pack python-int bitmasks into a numpy uint64 word matrix."""
    W = max(1, (nbits + _WORD - 1) // _WORD)
    out = np.zeros((len(masks), W), dtype=np.uint64)
    for r, m in enumerate(masks):
        w = 0
        while m:
            out[r, w] = m & 0xFFFFFFFFFFFFFFFF
            m >>= 64
            w += 1
    return out


def incidence(cone_h, cone_v):
    """IncidenceMatrix of a matching H/V pair.

    Raises InconsistentPair if any ray strictly violates any inequality.
    """
    if cone_h.index != cone_v.index:
        raise InvalidDimension("H and V descriptions over different indices")
    normals = cone_h.normal_rows()
    rays = cone_v.ray_rows()
    signs = _product_signs(rays, normals)
    bad = []
    ray_masks = [0] * len(rays)
    ineq_masks = [0] * len(normals)
    for i in range(len(rays)):
        row = signs[i]
        for j in range(len(normals)):
            s = row[j]
            if s < 0:
                bad.append((i, j))
                if len(bad) >= 5:
                    raise InconsistentPair(
                        f"rays violate inequalities at (ray, ineq) {bad} ...")
            elif s == 0:
                ray_masks[i] |= 1 << j
                ineq_masks[j] |= 1 << i
    if bad:
        raise InconsistentPair(
            f"rays violate inequalities at (ray, ineq) {bad}")
    return IncidenceMatrix(len(rays), len(normals), ray_masks, ineq_masks)


def _product_signs(rays, normals):
    """Sign matrix of rays x normals^T, exact, with an int64 fast path."""
    if not rays or not normals:
        return [[0] * len(normals) for _ in rays]
    d = len(rays[0])
    maxr = max(max(abs(c) for c in r) for r in rays)
    maxn = max(max(abs(c) for c in r) for r in normals)
    if d * maxr * maxn < 2 ** 62:
        A = np.array(rays, dtype=np.int64)
        B = np.array(normals, dtype=np.int64)
        return np.sign(A @ B.T).astype(np.int64)
    return [[_sign(dot(r, nrm)) for nrm in normals] for r in rays]


def brute_force_rays(cone_h, max_subsets=500_000):
    """Oracle enumeration of extreme rays by nullspaces of (d-1)-subsets.

    Exponential; guarded to small dimensions.  Returns the same canonically
    sorted ray list rays_from_inequalities would.
    """
    from .linalg import kernel_basis

    d = cone_h.dim
    rows = cone_h.normal_rows()
    M = len(rows)
    if d > 8 or comb(M, d - 1) > max_subsets:
        raise InvalidDimension(
            f"brute force refused: C({M},{d - 1}) subsets in dim {d}")
    found = {}
    for sub in combinations(range(M), d - 1):
        ker = kernel_basis([rows[i] for i in sub], d)
        if len(ker) != 1:
            continue
        v = ker[0]
        for cand in (v, tuple(-x for x in v)):
            slacks = [dot(r, cand) for r in rows]
            if all(s >= 0 for s in slacks):
                found[cand] = True
                break
    idx = cone_h.index
    rays = [HemiVector(idx, c) for c in sorted(found)]
    return ConeV(idx, rays, family="computed")


def brute_force_facets(cone_v, max_subsets=500_000):
    """Oracle facet enumeration: brute force on the polar cone."""
    idx = cone_v.index
    dual_h = ConeH(
        idx,
        [LinearInequality(r) for r in cone_v.rays],
        family="custom")
    dual_v = brute_force_rays(dual_h, max_subsets=max_subsets)
    ineqs = [LinearInequality(r, classify_normal(r)) for r in dual_v.rays]
    return ConeH(idx, ineqs, family="computed")
