import pytest

from hemicones.cones import (
    LinearInequality,
    build_cone_h,
    build_cone_p,
    simplex_inequalities,
)
from hemicones.dd import (
    DDSnapshot,
    brute_force_facets,
    brute_force_rays,
    facets_from_rays,
    incidence,
    is_extreme_ray,
    is_facet,
    rays_from_inequalities,
    slack_vector,
)
from hemicones.errors import (
    InconsistentPair,
    NotFullDimensional,
    ResourceLimitReached,
    SnapshotMismatch,
)
from hemicones.tuples import tuple_index
from hemicones.vectors import HemiVector


def rays_set(cone_v):
    return {r.coords for r in cone_v.rays}


def facet_set(cone_h):
    return {iq.normal.coords for iq in cone_h.inequalities}


def test_nhm42_rays():
    cone = build_cone_h("nhm", 4, 2)
    rays = rays_from_inequalities(cone)
    assert len(rays) == 6
    # every ray is a 0/1 partition vector with support size 2
    assert all(sorted(set(r.coords)) == [0, 1] for r in rays.rays)


def test_hm42_rays():
    cone = build_cone_h("hm", 4, 2)
    rays = rays_from_inequalities(cone)
    assert rays_set(rays) == {
        (-1, 1, 1, 1), (1, -1, 1, 1), (1, 1, -1, 1), (1, 1, 1, -1)}


def test_facets_from_rays_roundtrip_nhm42():
    cone = build_cone_h("nhm", 4, 2)
    rays = rays_from_inequalities(cone)
    facets = facets_from_rays(rays)
    assert len(facets) == 8
    assert facet_set(facets) == {iq.normal.coords for iq in cone.inequalities}


def test_output_is_sorted_and_primitive():
    cone = build_cone_h("nhm", 5, 2)
    rays = rays_from_inequalities(cone)
    coords = [r.coords for r in rays.rays]
    assert coords == sorted(coords)
    assert all(r.is_primitive() for r in rays.rays)


def test_p52_facets():
    facets = facets_from_rays(build_cone_p(5, 2))
    assert len(facets) == 120


def test_not_full_dimensional_raises():
    p = build_cone_p(5, 2)
    from hemicones.cones import ConeV
    small = ConeV(p.index, list(p.rays[:3]), family="test")
    with pytest.raises(NotFullDimensional):
        facets_from_rays(small)


def test_brute_force_agrees_nhm42():
    cone = build_cone_h("nhm", 4, 2)
    assert rays_set(brute_force_rays(cone)) == rays_set(
        rays_from_inequalities(cone))


def test_brute_force_agrees_hm42():
    cone = build_cone_h("hm", 4, 2)
    assert rays_set(brute_force_rays(cone)) == rays_set(
        rays_from_inequalities(cone))


def test_brute_force_facets_agrees_p42():
    p = build_cone_p(4, 2)
    assert facet_set(brute_force_facets(p)) == facet_set(facets_from_rays(p))


def test_slack_vector():
    cone = build_cone_h("nhm", 4, 2)
    idx = cone.index
    v = HemiVector(idx, (1, 1, 0, 0))
    slacks = slack_vector(cone, v)
    assert len(slacks) == len(cone.inequalities)
    assert all(s >= 0 for s in slacks)


def test_is_extreme_ray_accepts_and_rejects():
    cone = build_cone_h("nhm", 4, 2)
    idx = cone.index
    good = HemiVector(idx, (1, 1, 0, 0))
    cert = is_extreme_ray(cone, good)
    assert cert.is_extreme
    assert cert.rank == cone.dim - 1
    # an interior-ish point: sum of two extreme rays
    mid = HemiVector(idx, (1, 1, 1, 1))
    assert not is_extreme_ray(cone, mid).is_extreme


def test_is_extreme_ray_infeasible():
    from hemicones.errors import InfeasiblePoint

    cone = build_cone_h("nhm", 4, 2)
    bad = HemiVector(cone.index, (-1, 0, 0, 0))
    with pytest.raises(InfeasiblePoint) as exc:
        is_extreme_ray(cone, bad)
    names = [name for _, name, _ in exc.value.violations]
    assert "N_123" in names


def test_is_facet_accepts_and_rejects():
    p = build_cone_p(4, 2)
    idx = p.index
    t = simplex_inequalities(4, 2)[0]
    assert is_facet(p, t).is_facet
    # valid but not facet-inducing: sum of two facet normals
    loose = LinearInequality(HemiVector(idx, (1, 1, 1, 1)))
    assert not is_facet(p, loose).is_facet


def test_is_facet_invalid_inequality():
    from hemicones.errors import NotValidInequality

    p = build_cone_p(4, 2)
    bad = LinearInequality(HemiVector(p.index, (-1, 0, 0, 0)))
    with pytest.raises(NotValidInequality):
        is_facet(p, bad)


def test_incidence_counts_p42():
    p = build_cone_p(4, 2)
    facets = facets_from_rays(p)
    inc = incidence(facets, p)
    # each of the 6 generators lies on exactly 4 of the 8 facets
    for i in range(len(p)):
        assert inc.ray_tight_count(i) == 4


def test_incidence_mismatched_index():
    p4 = build_cone_p(4, 2)
    h5 = build_cone_h("nhm", 5, 2)
    with pytest.raises(Exception):
        incidence(h5, p4)


def test_max_rays_interrupt_and_resume():
    cone = build_cone_h("nhm", 5, 2)
    direct = rays_from_inequalities(cone)
    with pytest.raises(ResourceLimitReached) as exc:
        rays_from_inequalities(cone, max_rays=10)
    snap = exc.value.snapshot
    assert isinstance(snap, DDSnapshot)
    assert snap.processed  # partial progress recorded
    resumed = rays_from_inequalities(cone, snapshot=snap)
    assert rays_set(resumed) == rays_set(direct)


def test_resume_after_serialization():
    cone = build_cone_h("nhm", 5, 2)
    with pytest.raises(ResourceLimitReached) as exc:
        rays_from_inequalities(cone, max_rays=10)
    snap = DDSnapshot.from_dict(exc.value.snapshot.to_dict())
    resumed = rays_from_inequalities(cone, snapshot=snap)
    assert rays_set(resumed) == rays_set(rays_from_inequalities(cone))


def test_snapshot_mismatch_detected():
    cone5 = build_cone_h("nhm", 5, 2)
    cone4 = build_cone_h("nhm", 4, 2)
    with pytest.raises(ResourceLimitReached) as exc:
        rays_from_inequalities(cone5, max_rays=10)
    with pytest.raises(SnapshotMismatch):
        rays_from_inequalities(cone4, snapshot=exc.value.snapshot)


def test_max_seconds_zero_interrupts_immediately():
    cone = build_cone_h("nhm", 5, 2)
    with pytest.raises(ResourceLimitReached):
        rays_from_inequalities(cone, max_seconds=0.0)


def test_snapshot_roundtrips_through_dict():
    cone = build_cone_h("nhm", 5, 2)
    with pytest.raises(ResourceLimitReached) as exc:
        rays_from_inequalities(cone, max_rays=10)
    snap = exc.value.snapshot
    again = DDSnapshot.from_dict(snap.to_dict())
    assert again.processed == snap.processed
    assert again.rays == snap.rays
    assert (again.n, again.k, again.dual) == (snap.n, snap.k, snap.dual)


def test_redundant_inequalities_are_harmless():
    # duplicating rows must not change the answer
    cone = build_cone_h("nhm", 4, 2)
    from hemicones.cones import ConeH
    doubled = ConeH(cone.index, list(cone.inequalities) * 2, family="test")
    assert rays_set(rays_from_inequalities(doubled)) == rays_set(
        rays_from_inequalities(cone))


def test_m1_met5_rays():
    # the semimetric cone on 5 points has 25 extreme rays
    cone = build_cone_h("nhm", 5, 1)
    rays = rays_from_inequalities(cone)
    assert len(rays) == 25


def test_m1_cut5_facets():
    # the cut cone on 5 points has 40 facets
    cut5 = build_cone_p(5, 1)
    assert len(facets_from_rays(cut5)) == 40
