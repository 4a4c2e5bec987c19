"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 bad configuration,
3 resource ceiling reached (a resumable snapshot is saved and its path
printed).
"""

import argparse
import json
import sys

from . import conjectures, dd, graphs, ioformats
from .cache import ResultCache
from .cones import build_cone_h, classify_ray
from .errors import HemiconesError, ResourceLimitReached
from .symmetry import (
    decompose_orbits,
    family_is_invariant,
    orbit_table,
    validate_double_counting,
)
from .tuples import tuple_index
from .vectors import Partition, partition_hemimetric, r_graph


def _add_cone_args(p, family_required=True):
    p.add_argument("--family", choices=["p", "nhm", "hm"],
                   required=family_required)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)


def _add_common(p):
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--max-rays", type=int, default=None)
    p.add_argument("--resume", default=None, metavar="SNAPSHOT")
    p.add_argument("--output", "-o", default=None)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hemicones",
        description="Exact enumeration toolkit for hemimetric cones")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="compute and cache rays and facets")
    _add_cone_args(p)
    _add_common(p)

    p = sub.add_parser("rays", help="extreme rays")
    _add_cone_args(p)
    _add_common(p)
    p.add_argument("--format", choices=["tsv", "json", "ext"], default="tsv")

    p = sub.add_parser("facets", help="facet inequalities")
    _add_cone_args(p)
    _add_common(p)
    p.add_argument("--format", choices=["tsv", "json", "ine"], default="tsv")

    p = sub.add_parser("orbits", help="orbit decomposition")
    _add_cone_args(p)
    _add_common(p)
    p.add_argument("--of", choices=["rays", "facets"], default="rays")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    p = sub.add_parser("graph", help="skeleton or ridge graph")
    _add_cone_args(p)
    _add_common(p)
    p.add_argument("--kind", choices=["skeleton", "ridge"], default="skeleton")
    p.add_argument("--format", choices=["tsv", "dot", "json"], default="tsv")

    p = sub.add_parser("diameter", help="graph diameter")
    _add_cone_args(p)
    _add_common(p)
    p.add_argument("--kind", choices=["skeleton", "ridge"], default="skeleton")

    p = sub.add_parser("table", help="orbit adjacency/incidence table")
    _add_cone_args(p)
    _add_common(p)
    p.add_argument("--of", choices=["rays", "facets"], default="rays")
    p.add_argument("--order", choices=["adjacency", "decomposition"],
                   default="adjacency")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    p = sub.add_parser("rgraph", help="R-graph of a ray or partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", default=None,
                   help='blocks like "1|23|45"')
    p.add_argument("--family", choices=["p", "nhm", "hm"], default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--index", type=int, default=None,
                   help="ray position when using --family")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--format", choices=["dot", "tsv"], default="dot")

    p = sub.add_parser("verify", help="certify a cone end to end")
    _add_cone_args(p)
    _add_common(p)
    p.add_argument("--exhaustive", action="store_true",
                   help="check invariance under all n! permutations")

    p = sub.add_parser("conjecture", help="run a conjecture check")
    p.add_argument("--id", type=int, required=True, choices=[1, 2, 3, 4])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("summary", help="families-at-a-glance table")
    p.add_argument("--rows", default=None,
                   help='comma list like "p:2:4,nhm:2:5" (default: stock list)')
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--compute", action="store_true",
                   help="compute missing entries instead of printing ?")
    return ap


def _emit(text, args):
    if getattr(args, "output", None):
        ioformats.atomic_write_text(args.output, text)
    else:
        sys.stdout.write(text)


def _store(args):
    return ResultCache(getattr(args, "cache_dir", None))


def _ceilings(args):
    return {
        "max_rays": getattr(args, "max_rays", None),
        "max_seconds": getattr(args, "max_seconds", None),
    }


def _load_descriptions(args, store):
    fam, m, n = args.family, args.m, args.n
    kw = _ceilings(args)
    if args.resume:
        snap = ResultCache.load_snapshot(args.resume)
        if snap.dual:
            base = store.base_cone(fam, m, n)
            if fam != "p":
                base = store.rays(fam, m, n, **kw)
            cone_h = dd.facets_from_rays(base, snapshot=snap, **kw)
            ioformats.write_ine(cone_h, store.path_for(fam, m, n, "facets.ine"))
        else:
            cone_v = dd.rays_from_inequalities(
                store.base_cone(fam, m, n), snapshot=snap, **kw)
            ioformats.write_ext(cone_v, store.path_for(fam, m, n, "rays.ext"))
    rays = store.rays(fam, m, n, **kw)
    facets = store.facets(fam, m, n, **kw)
    return rays, facets


def _ray_labels(cone_v):
    out = []
    for i, r in enumerate(cone_v.rays):
        out.append(classify_ray(r) or f"r{i}")
    return out


def _facet_labels(cone_h):
    return [iq.name or f"f{j}" for j, iq in enumerate(cone_h.inequalities)]


def cmd_build(args):
    store = _store(args)
    rays, facets = _load_descriptions(args, store)
    print(f"{args.family}_{args.n}^{args.m}: {len(rays)} rays, "
          f"{len(facets)} facets")
    print(f"cache: {store.path_for(args.family, args.m, args.n, '')}")
    return 0


def cmd_rays(args):
    store = _store(args)
    fam, m, n = args.family, args.m, args.n
    if args.resume:
        _load_descriptions(args, store)
    cone_v = store.rays(fam, m, n, **_ceilings(args))
    if args.format == "ext":
        _emit(ioformats.format_ext(cone_v), args)
    elif args.format == "json":
        _emit(ioformats.json_report({
            "family": fam, "m": m, "n": n,
            "rays": [list(r.coords) for r in cone_v.rays],
            "labels": _ray_labels(cone_v),
        }), args)
    else:
        lines = []
        for label, r in zip(_ray_labels(cone_v), cone_v.rays):
            lines.append(label + "\t" + "\t".join(str(c) for c in r.coords))
        _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_facets(args):
    store = _store(args)
    if args.resume:
        _load_descriptions(args, store)
    cone_h = store.facets(args.family, args.m, args.n, **_ceilings(args))
    if args.format == "ine":
        _emit(ioformats.format_ine(cone_h), args)
    elif args.format == "json":
        _emit(ioformats.json_report({
            "family": args.family, "m": args.m, "n": args.n,
            "facets": [list(iq.normal.coords) for iq in cone_h.inequalities],
            "labels": _facet_labels(cone_h),
        }), args)
    else:
        lines = []
        for label, iq in zip(_facet_labels(cone_h), cone_h.inequalities):
            lines.append(label + "\t" + "\t".join(str(c) for c in iq.normal.coords))
        _emit("\n".join(lines) + "\n", args)
    return 0


def _decomposition(args, store, of):
    rays, facets = _load_descriptions(args, store)
    idx = rays.index
    if of == "rays":
        return decompose_orbits(idx, list(rays.rays)), rays, facets
    vecs = [iq.normal for iq in facets.inequalities]
    return decompose_orbits(idx, vecs), rays, facets


def cmd_orbits(args):
    store = _store(args)
    decomp, _, _ = _decomposition(args, store, args.of)
    rows = []
    for i, o in enumerate(decomp.orbits):
        label = classify_ray(o.rep) or (
            f"({', '.join(str(c) for c in o.rep.coords)})")
        rows.append({"orbit": i + 1, "size": o.size, "representative": label})
    if args.format == "json":
        _emit(ioformats.json_report({"of": args.of, "orbits": rows}), args)
    else:
        lines = ["orbit\tsize\trepresentative"]
        lines += [f"{r['orbit']}\t{r['size']}\t{r['representative']}" for r in rows]
        _emit("\n".join(lines) + "\n", args)
    return 0


def _face_graph(args, store):
    rays, facets = _load_descriptions(args, store)
    inc = dd.incidence(facets, rays)
    if args.kind == "skeleton":
        return graphs.skeleton(rays, facets, inc=inc, names=_ray_labels(rays))
    return graphs.ridge(facets, rays, inc=inc, names=_facet_labels(facets))


def cmd_graph(args):
    store = _store(args)
    fg = _face_graph(args, store)
    if args.format == "dot":
        _emit(ioformats.emit_dot(fg.graph, names=fg.names, title=fg.kind), args)
    elif args.format == "json":
        _emit(ioformats.json_report({
            "kind": fg.kind, "vertices": fg.names,
            "edges": fg.graph.edges()}), args)
    else:
        lines = [f"{fg.names[a]}\t{fg.names[b]}" for a, b in fg.graph.edges()]
        _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_diameter(args):
    store = _store(args)
    fg = _face_graph(args, store)
    d = graphs.diameter(fg.graph)
    print(f"{args.kind} diameter of {args.family}_{args.n}^{args.m}: {d}")
    return 0


def cmd_table(args):
    store = _store(args)
    decomp, rays, facets = _decomposition(args, store, args.of)
    inc = dd.incidence(facets, rays)
    idx = rays.index
    if args.of == "rays":
        words = inc.ray_words()
        co_vecs = [iq.normal for iq in facets.inequalities]
        co_decomp = decompose_orbits(idx, co_vecs)
        validate_double_counting(decomp, co_decomp, inc)

        def neighbors(i):
            return graphs.face_neighbors(words, i, idx.size)

        def incident(i):
            return _bit_list(inc.ray_masks[i])

        labeler = lambda v: classify_ray(v)
    else:
        words = inc.ineq_words()
        co_decomp = decompose_orbits(idx, list(rays.rays))

        def neighbors(j):
            return graphs.face_neighbors(words, j, idx.size)

        def incident(j):
            return _bit_list(inc.ineq_masks[j])

        from .cones import classify_normal
        labeler = lambda v: classify_normal(v)
    table = orbit_table(decomp, neighbors, incident, co_decomp=co_decomp,
                        rep_labels=labeler, order=args.order)
    if args.format == "json":
        _emit(ioformats.json_report({
            "of": args.of,
            "rows": [{
                "orbit": row.label, "representative": row.rep_label,
                "adjacencies": list(row.adjacencies),
                "total_adjacency": row.total_adjacency,
                "incidences": list(row.incidences),
                "total_incidence": row.total_incidence,
                "size": row.size,
            } for row in table.rows]}), args)
    else:
        _emit(ioformats.format_orbit_table(table), args)
    return 0


def _bit_list(x):
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def cmd_rgraph(args):
    if args.partition:
        p = Partition.parse(args.n, args.partition)
        v = partition_hemimetric(args.n, p)
        title = p.label()
    elif args.family is not None and args.m is not None and args.index is not None:
        store = _store(args)
        cone_v = store.rays(args.family, args.m, args.n)
        if not 0 <= args.index < len(cone_v):
            print(f"ray index {args.index} out of range 0..{len(cone_v) - 1}",
                  file=sys.stderr)
            return 2
        v = cone_v.rays[args.index]
        title = f"{args.family}_{args.n}^{args.m}[{args.index}]"
    else:
        print("need --partition or (--family --m --index)", file=sys.stderr)
        return 2
    rg = r_graph(v)
    if args.format == "dot":
        _emit(ioformats.emit_rgraph_dot(rg, title=title), args)
    else:
        names = rg.render_vertices()
        lines = [f"{names[a]}\t{names[b]}" for a, b in rg.edges]
        _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_verify(args):
    store = _store(args)
    fam, m, n = args.family, args.m, args.n
    rays, facets = _load_descriptions(args, store)
    idx = rays.index
    failures = 0

    def check(label, ok):
        nonlocal failures
        print(f"{'ok  ' if ok else 'FAIL'} {label}")
        if not ok:
            failures += 1

    base = store.base_cone(fam, m, n)
    if fam == "p":
        cert_h = facets
    else:
        cert_h = base
    check("every ray is an extreme ray (tight rank = dim-1)",
          all(dd.is_extreme_ray(cert_h, r).is_extreme for r in rays.rays))
    check("every facet is a facet (tight ray rank = dim-1)",
          all(dd.is_facet(rays, iq).is_facet for iq in facets.inequalities))
    rt_v = dd.rays_from_inequalities(facets)
    check("V -> H -> V roundtrip reproduces the rays",
          sorted(r.coords for r in rt_v.rays)
          == sorted(r.coords for r in rays.rays))
    rt_h = dd.facets_from_rays(rays)
    check("H -> V -> H roundtrip reproduces the facets",
          sorted(iq.normal.coords for iq in rt_h.inequalities)
          == sorted(iq.normal.coords for iq in facets.inequalities))
    ray_dec = decompose_orbits(idx, list(rays.rays))
    facet_dec = decompose_orbits(idx, [iq.normal for iq in facets.inequalities])
    inc = dd.incidence(facets, rays)
    try:
        validate_double_counting(ray_dec, facet_dec, inc)
        check("orbit double counting identity", True)
    except HemiconesError as exc:
        print(f"     {exc}")
        check("orbit double counting identity", False)
    check("ray set invariant under the symmetric group",
          family_is_invariant(idx, list(rays.rays), exhaustive=args.exhaustive))
    check("facet set invariant under the symmetric group",
          family_is_invariant(idx, [iq.normal for iq in facets.inequalities],
                              exhaustive=args.exhaustive))
    if fam in ("p", "nhm"):
        hm = build_cone_h("hm", n, m)
        ok = all(s >= 0 for r in rays.rays for s in dd.slack_vector(hm, r))
        check("rays satisfy the simplex inequalities (containment)", ok)
    if fam == "p":
        nhm = build_cone_h("nhm", n, m)
        ok = all(s >= 0 for r in rays.rays for s in dd.slack_vector(nhm, r))
        check("rays satisfy nonnegativity (containment in NHM)", ok)
    return 1 if failures else 0


def cmd_conjecture(args):
    store = _store(args)
    report = conjectures.check_conjecture(args.id, args.m, args.n, store)
    if args.format == "json":
        _emit(ioformats.json_report(report.to_dict()), args)
    else:
        lines = [f"conjecture {args.id} at (m={args.m}, n={args.n}): "
                 f"{report.verdict} ({report.checked} checks)"]
        for w in report.witnesses[:10]:
            lines.append(f"  witness: {w}")
        for note in report.notes:
            lines.append(f"  note: {note}")
        _emit("\n".join(lines) + "\n", args)
    return 0 if report.verdict == "holds" else 1


_STOCK_ROWS = [
    ("p", 1, 4), ("nhm", 1, 4), ("p", 1, 5), ("nhm", 1, 5),
    ("p", 1, 6), ("nhm", 1, 6),
    ("p", 2, 4), ("nhm", 2, 4), ("hm", 2, 4),
    ("p", 2, 5), ("nhm", 2, 5), ("hm", 2, 5),
    ("p", 2, 6), ("nhm", 2, 6),
    ("p", 3, 6), ("nhm", 3, 6),
    ("p", 4, 7), ("nhm", 4, 7),
]

_FAMILY_TITLES = {"p": "P", "nhm": "NHM", "hm": "HM"}


def _summary_row(store, fam, m, n, compute):
    import os

    idx = tuple_index(n, m + 1)
    name = f"{_FAMILY_TITLES[fam]}_{n}^{m}"
    row = {"name": name, "dim": idx.size, "rays": "?", "ray_orbits": "?",
           "facets": "?", "facet_orbits": "?", "skeleton_diam": "?",
           "ridge_diam": "?"}
    have_rays = os.path.exists(store.path_for(fam, m, n, "rays.ext"))
    have_facets = os.path.exists(store.path_for(fam, m, n, "facets.ine"))
    if fam == "p":
        have_rays = True  # generators come straight from the partitions
    if not compute and not have_rays:
        return row
    try:
        rays = store.rays(fam, m, n) if (have_rays or compute) else None
    except HemiconesError:
        rays = None
    if rays is not None:
        row["rays"] = len(rays)
        row["ray_orbits"] = len(decompose_orbits(rays.index, list(rays.rays)))
    facets = None
    if have_facets or compute:
        try:
            facets = store.facets(fam, m, n)
        except ResourceLimitReached:
            raise
        except HemiconesError:
            facets = None
    if facets is not None:
        row["facets"] = len(facets)
        row["facet_orbits"] = len(decompose_orbits(
            facets.index, [iq.normal for iq in facets.inequalities]))
    elif os.path.exists(store.path_for(fam, m, n, "snapshot.json")):
        snap = ResultCache.load_snapshot(store.path_for(fam, m, n, "snapshot.json"))
        if snap.dual and rays is not None:
            count, orbits = dd_facet_lower_bound(snap, rays)
            row["facets"] = f">= {count}"
            row["facet_orbits"] = f">= {orbits}"
    if rays is not None and facets is not None:
        inc = dd.incidence(facets, rays)
        if len(rays) <= 700:
            sk = graphs.skeleton(rays, facets, inc=inc)
            row["skeleton_diam"] = graphs.diameter(sk.graph)
        if len(facets) <= 700:
            rg = graphs.ridge(facets, rays, inc=inc)
            row["ridge_diam"] = graphs.diameter(rg.graph)
    return row


def dd_facet_lower_bound(snapshot, cone_v):
    """Certified facets recoverable from an interrupted dual snapshot.

    Counts snapshot rays that are valid for every generator and tight on a
    rank dim-1 set; each is a true facet of the finished cone.
    """
    from .cones import LinearInequality
    from .linalg import dot as _dot
    from .vectors import HemiVector

    idx = cone_v.index
    certified = []
    for coords in snapshot.rays:
        slacks = [_dot(coords, r.coords) for r in cone_v.rays]
        if any(s < 0 for s in slacks):
            continue
        hv = HemiVector(idx, coords)
        if dd.is_facet(cone_v, LinearInequality(hv)).is_facet:
            certified.append(hv)
    orbits = len(decompose_orbits(idx, certified)) if certified else 0
    return len(certified), orbits


def cmd_summary(args):
    store = _store(args)
    rows = []
    if args.rows:
        triples = []
        for part in args.rows.split(","):
            fam, m, n = part.strip().split(":")
            triples.append((fam, int(m), int(n)))
    else:
        triples = _STOCK_ROWS
    for fam, m, n in triples:
        rows.append(_summary_row(store, fam, m, n, args.compute))
    _emit(ioformats.format_summary_rows(rows), args)
    return 0


_COMMANDS = {
    "build": cmd_build,
    "rays": cmd_rays,
    "facets": cmd_facets,
    "orbits": cmd_orbits,
    "graph": cmd_graph,
    "diameter": cmd_diameter,
    "table": cmd_table,
    "rgraph": cmd_rgraph,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "summary": cmd_summary,
}


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.verb](args)
    except ResourceLimitReached as exc:
        store = _store(args)
        fam = getattr(args, "family", None)
        if fam is not None:
            path = store.save_snapshot(exc.snapshot, family=fam,
                                       m=args.m, n=args.n)
        else:
            path = store.save_snapshot(exc.snapshot, path="snapshot.json")
        print(f"stopped: {exc.reason}", file=sys.stderr)
        print(f"snapshot saved to {path}; resume with --resume {path}",
              file=sys.stderr)
        return 3
    except HemiconesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
