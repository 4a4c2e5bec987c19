"""cdd-compatible .ine/.ext files, DOT output, TSV tables, JSON reports.

File rows are (b, a_1..a_d) meaning b + a.x >= 0; homogeneous cones always
write b = 0.  A comment line "* hemicones n=<n> k=<k> family=<fam>" lets
the reader rebuild the tuple index; cdd tools ignore comments, so the files
stay interchangeable.
"""

import json
import os
import tempfile
from fractions import Fraction

from .cones import ConeH, ConeV, LinearInequality
from .errors import ParseError
from .linalg import primitive_int_vector
from .tuples import tuple_index
from .vectors import HemiVector


def _meta_comment(index, family):
    return f"* hemicones n={index.n} k={index.k} family={family}"


def format_ine(cone_h):
    lines = [_meta_comment(cone_h.index, cone_h.family), "H-representation", "begin"]
    rows = cone_h.normal_rows()
    lines.append(f" {len(rows)} {cone_h.dim + 1} integer")
    for r in rows:
        lines.append(" 0 " + " ".join(str(x) for x in r))
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_ext(cone_v):
    lines = [_meta_comment(cone_v.index, cone_v.family), "V-representation", "begin"]
    rows = cone_v.ray_rows()
    lines.append(f" {len(rows)} {cone_v.dim + 1} integer")
    for r in rows:
        lines.append(" 0 " + " ".join(str(x) for x in r))
    lines.append("end")
    return "\n".join(lines) + "\n"


def write_ine(cone_h, path):
    atomic_write_text(path, format_ine(cone_h))


def write_ext(cone_v, path):
    atomic_write_text(path, format_ext(cone_v))


def _parse_number(tok, line_no):
    try:
        if "/" in tok or "." in tok:
            return Fraction(tok)
        return int(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(line_no, f"bad number {tok!r}") from exc


def _parse_body(text, want_kind, n=None, k=None):
    meta_n, meta_k, family = n, k, "custom"
    kind = None
    rows = []
    expect = None
    in_body = False
    done = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("*"):
            if line.startswith("* hemicones"):
                for part in line.split()[2:]:
                    key, _, val = part.partition("=")
                    if key == "n":
                        meta_n = int(val)
                    elif key == "k":
                        meta_k = int(val)
                    elif key == "family":
                        family = val
            continue
        low = line.lower()
        if low in ("h-representation", "v-representation"):
            kind = low[0].upper()
            continue
        if low == "begin":
            in_body = True
            continue
        if low == "end":
            done = True
            in_body = False
            continue
        if done:
            continue  # trailing cdd options (hull, incidence, ...) ignored
        if in_body and expect is None:
            toks = line.split()
            if len(toks) < 3:
                raise ParseError(line_no, f"bad size line {line!r}")
            try:
                nrows, ncols = int(toks[0]), int(toks[1])
            except ValueError as exc:
                raise ParseError(line_no, f"bad size line {line!r}") from exc
            if toks[2] not in ("integer", "rational", "real"):
                raise ParseError(line_no, f"unknown number type {toks[2]!r}")
            expect = (nrows, ncols)
            continue
        if in_body:
            toks = line.split()
            if len(toks) != expect[1]:
                raise ParseError(
                    line_no, f"row has {len(toks)} entries, want {expect[1]}")
            rows.append(([_parse_number(t, line_no) for t in toks], line_no))
            continue
        raise ParseError(line_no, f"unexpected line {line!r}")
    if kind is None:
        raise ParseError(0, "missing H-representation/V-representation line")
    if kind != want_kind:
        raise ParseError(0, f"wanted {want_kind}-representation, found {kind}")
    if expect is None:
        raise ParseError(0, "missing begin/size lines")
    if len(rows) != expect[0]:
        raise ParseError(0, f"expected {expect[0]} rows, found {len(rows)}")
    if meta_n is None or meta_k is None:
        raise ParseError(
            0, "no '* hemicones n=.. k=..' comment; pass n and k explicitly")
    idx = tuple_index(meta_n, meta_k)
    if expect[1] != idx.size + 1:
        raise ParseError(
            0, f"{expect[1] - 1} coordinates but C({meta_n},{meta_k}) = {idx.size}")
    return idx, family, rows


def read_ine(path, n=None, k=None):
    with open(path) as fh:
        text = fh.read()
    idx, family, rows = _parse_body(text, "H", n=n, k=k)
    ineqs = []
    for row, line_no in rows:
        if row[0] != 0:
            raise ParseError(line_no, f"inhomogeneous row (b = {row[0]})")
        coords = primitive_int_vector(row[1:])
        from .cones import classify_normal

        hv = HemiVector(idx, coords)
        ineqs.append(LinearInequality(hv, classify_normal(hv)))
    return ConeH(idx, ineqs, family=family)


def read_ext(path, n=None, k=None):
    with open(path) as fh:
        text = fh.read()
    idx, family, rows = _parse_body(text, "V", n=n, k=k)
    rays = []
    for row, line_no in rows:
        if row[0] == 1 and all(x == 0 for x in row[1:]):
            continue  # apex row some tools print for cones
        if row[0] != 0:
            raise ParseError(line_no, f"not a ray row (leading {row[0]})")
        rays.append(HemiVector(idx, primitive_int_vector(row[1:])))
    return ConeV(idx, rays, family=family)


def atomic_write_text(path, text):
    """Write via a temp file in the same directory, then rename."""
    path = os.fspath(path)
    d = os.path.dirname(path) or "."
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


# -- DOT ----------------------------------------------------------------------


def emit_dot(graph, names=None, labels=None, title="G"):
    """Deterministic DOT text for a small graph.

    names: vertex display names; labels: extra per-vertex annotations
    (e.g. R-graph coordinate values), appended to the name.
    """
    lines = [f"graph {json.dumps(title)} {{"]
    for v in range(graph.nv):
        name = names[v] if names else str(v)
        if labels is not None and labels[v] is not None:
            name = f"{name} [{labels[v]}]"
        lines.append(f'  n{v} [label={json.dumps(str(name))}];')
    for a, b in sorted(graph.edges()):
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_rgraph_dot(rg, title=None):
    from .graphs import Graph
    from .tuples import render_tuple

    g = Graph.from_edges(rg.size, rg.edges)
    names = [render_tuple(rg.n, t) for t in rg.vertices]
    labels = [str(c) if c != 1 else None for c in rg.labels]
    return emit_dot(g, names=names, labels=labels, title=title or "R")


# -- tables and reports --------------------------------------------------------


def format_orbit_table(table, header=True):
    """TSV rendering of an OrbitTable."""
    out = []
    k = len(table.rows)
    if header:
        cols = ["orbit", "representative"]
        cols += [f"adj_O{j + 1}" for j in range(k)]
        cols += ["adj_total"]
        if table.co_labels:
            cols += [f"inc_{c}" for c in table.co_labels]
        cols += ["inc_total", "size"]
        out.append("\t".join(cols))
    for row in table.rows:
        cells = [row.label, row.rep_label]
        cells += [str(c) for c in row.adjacencies]
        cells += [str(row.total_adjacency)]
        if table.co_labels:
            cells += [str(c) for c in row.incidences]
        cells += [str(row.total_incidence), str(row.size)]
        out.append("\t".join(cells))
    return "\n".join(out) + "\n"


def format_summary_rows(rows, header=True):
    """TSV summary in the style of a families-at-a-glance table.

    Each row is a dict with keys name, dim, rays, ray_orbits, facets,
    facet_orbits, skeleton_diam, ridge_diam; string values pass through, so
    callers can annotate lower bounds (">= 950000") or unknowns ("?").
    """
    out = []
    if header:
        out.append("cone\tdim\trays(orbits)\tfacets(orbits)\tdiameters")
    for r in rows:
        rays = f"{r['rays']}({r['ray_orbits']})"
        facets = f"{r['facets']}({r['facet_orbits']})"
        diams = f"{r['skeleton_diam']}; {r['ridge_diam']}"
        out.append(f"{r['name']}\t{r['dim']}\t{rays}\t{facets}\t{diams}")
    return "\n".join(out) + "\n"


def json_report(payload):
    return json.dumps({"schema": "hemicones.report/1", "payload": payload},
                      indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "__dict__"):
        return obj.__dict__
    raise TypeError(f"cannot serialize {type(obj).__name__}")
