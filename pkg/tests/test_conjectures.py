import os

import pytest

from hemicones.cache import ResultCache
from hemicones.errors import InvalidDimension
from hemicones.conjectures import (
    check_conjecture,
    check_conjecture_1,
    check_conjecture_2,
    check_conjecture_3,
    check_conjecture_4,
    cycle_vector,
    lift_vector,
)
from hemicones import graphs
from hemicones.tuples import tuple_index
from hemicones.vectors import r_graph


_REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture(scope="module")
def store():
    # share the repository cache so enumerations run once across the suite
    root = os.environ.get("HEMICONES_CACHE_DIR") or os.path.join(
        _REPO_ROOT, ".cache")
    return ResultCache(root)


def test_conjecture_1_p52(store):
    rep = check_conjecture_1(2, 5, store)
    assert rep.verdict == "holds"
    assert rep.checked > 0


def test_conjecture_1_p42(store):
    # octahedron skeleton: the three diagonal pairs are the non-edges
    rep = check_conjecture_1(2, 4, store)
    assert rep.verdict == "holds"


def test_conjecture_2_holds_at_25(store):
    rep = check_conjecture_2(2, 5, store)
    assert rep.verdict == "holds"


def test_conjecture_2_fails_at_24(store):
    # the simplex-facet ridge graph of the hemimetric cone on 4 points is
    # K_4, but those facets bound a cube in the nonnegative cone: the
    # embedding direction fails, and the report must say so
    rep = check_conjecture_2(2, 4, store)
    assert rep.verdict == "fails"
    assert rep.witnesses


def test_conjecture_3_p52(store):
    rep = check_conjecture_3(2, 5, store)
    assert rep.verdict == "holds"


def test_conjecture_3_p63(store):
    rep = check_conjecture_3(3, 6, store)
    assert rep.verdict == "holds"


def test_conjecture_4_lifting_25(store):
    rep = check_conjecture_4(2, 5, store)
    assert rep.verdict == "holds"
    assert rep.checked > 0


def test_lift_vector_shape():
    idx4 = tuple_index(4, 2)
    from hemicones.vectors import HemiVector

    v = HemiVector(idx4, (1, 1, 0, 1, 0, 0))
    w = lift_vector(v, 5)
    assert w.index.n == 5 and w.index.k == 3
    # value on a triple {i,j,5} equals the original on {i,j}
    assert w.value((1, 2, 5)) == v.value((1, 2))
    assert w.value((1, 4, 5)) == v.value((1, 4))
    # triples inside {1..4} vanish
    assert w.value((1, 2, 3)) == 0


def test_cycle_vector_supports():
    # i=3 support: complements of {1,2},{2,3},{3,1} in {1..5} for m=2
    v = cycle_vector(2, 3)
    assert v.index.n == 5
    g = r_graph(v)
    assert graphs.isomorphic(
        graphs.Graph.from_edges(g.size, g.edges), graphs.cycle_graph(3))
    for i in (4, 5):
        v = cycle_vector(2, i)
        g = r_graph(v)
        assert graphs.isomorphic(
            graphs.Graph.from_edges(g.size, g.edges), graphs.cycle_graph(i))


def test_cycle_vector_is_pentagon_ray():
    v = cycle_vector(2, 5)
    support = {t for t in v.index.tuples if v.value(t) != 0}
    assert support == {(1, 2, 3), (1, 2, 5), (1, 4, 5), (2, 3, 4), (3, 4, 5)}


def test_check_conjecture_dispatch(store):
    rep = check_conjecture(1, 2, 4, store)
    assert rep.conjecture == 1
    with pytest.raises(InvalidDimension):
        check_conjecture(9, 2, 4, store)


def test_report_to_dict(store):
    rep = check_conjecture_1(2, 4, store)
    d = rep.to_dict()
    assert d["verdict"] == "holds"
    assert d["conjecture"] == 1
