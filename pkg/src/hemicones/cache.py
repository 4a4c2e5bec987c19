"""On-disk store of computed descriptions, keyed by family, m, n and the
engine version.  Snapshot files for interrupted runs live here too."""

import json
import os

from . import dd, ioformats
from .cones import build_cone_h, build_cone_p
from .errors import InvalidDimension

ENV_CACHE_DIR = "HEMICONES_CACHE_DIR"


def default_cache_dir():
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "hemicones")


class ResultCache:
    """Content store for ray/facet computations.

    Layout: <root>/engine-<version>/<family>-m<m>-n<n>/{rays.ext,facets.ine}.
    Files are written atomically; integer serialization is exact, so a
    cache round trip is bit-identical.
    """

    def __init__(self, root=None):
        self.root = os.fspath(root) if root else default_cache_dir()

    def _dir(self, family, m, n):
        return os.path.join(
            self.root, f"engine-{dd.ENGINE_VERSION}", f"{family.lower()}-m{m}-n{n}")

    def path_for(self, family, m, n, artifact):
        return os.path.join(self._dir(family, m, n), artifact)

    # -- cones -----------------------------------------------------------

    def base_cone(self, family, m, n):
        """The defining description of a family: H for hm/nhm, V for p."""
        fam = family.lower()
        if fam in ("hm", "nhm"):
            return build_cone_h(fam, n, m)
        if fam == "p":
            return build_cone_p(n, m)
        raise InvalidDimension(f"unknown family {family!r}")

    def rays(self, family, m, n, max_rays=None, max_seconds=None,
             progress=None, refresh=False):
        """Extreme rays of the family cone, cached on disk."""
        fam = family.lower()
        path = self.path_for(fam, m, n, "rays.ext")
        if not refresh and os.path.exists(path):
            return ioformats.read_ext(path)
        base = self.base_cone(fam, m, n)
        if fam == "p":
            cone_v = base  # generators are the extreme rays; certified in tests
        else:
            cone_v = dd.rays_from_inequalities(
                base, max_rays=max_rays, max_seconds=max_seconds,
                progress=progress)
        ioformats.write_ext(cone_v, path)
        return ioformats.read_ext(path)

    def facets(self, family, m, n, max_rays=None, max_seconds=None,
               progress=None, refresh=False):
        """Facets of the family cone, cached on disk."""
        fam = family.lower()
        path = self.path_for(fam, m, n, "facets.ine")
        if not refresh and os.path.exists(path):
            return ioformats.read_ine(path)
        if fam == "p":
            cone_h = dd.facets_from_rays(
                self.base_cone(fam, m, n), max_rays=max_rays,
                max_seconds=max_seconds, progress=progress)
        else:
            cone_v = self.rays(fam, m, n, max_rays=max_rays,
                               max_seconds=max_seconds, progress=progress)
            cone_h = dd.facets_from_rays(
                cone_v, max_rays=max_rays, max_seconds=max_seconds,
                progress=progress)
        ioformats.write_ine(cone_h, path)
        return ioformats.read_ine(path)

    # -- snapshots ---------------------------------------------------------

    def save_snapshot(self, snapshot, path=None, family=None, m=None, n=None):
        if path is None:
            if family is None:
                raise InvalidDimension("need a path or a (family, m, n) key")
            path = self.path_for(family, m, n, "snapshot.json")
        ioformats.atomic_write_text(
            path, json.dumps(snapshot.to_dict()) + "\n")
        return path

    @staticmethod
    def load_snapshot(path):
        with open(path) as fh:
            return dd.DDSnapshot.from_dict(json.load(fh))
