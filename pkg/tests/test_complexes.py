import json
import random

import pytest

from cellforge.cells import CosimplicialFunctor, build_tower
from cellforge.complexes import (
    ASC,
    GSCDiagram,
    InvalidComplex,
    ParseError,
    asc_closure,
    asc_from_json,
    asc_to_gsc,
    asc_to_json,
    asc_to_sset,
    attach_handles,
    check_sphere_indices,
    coyoneda_witness,
    gsc_colimit,
    gsc_from_json,
    gsc_to_asc,
    gsc_to_json,
    gsc_validate,
    realize,
    sphere,
    sphere_indices,
    vertex_tuples,
)
from cellforge.finset import fs_object, fs_witnesses
from cellforge.kernel import CategoryError, compose, find_isomorphism, hom_list, identity, points
from cellforge.sset import SSET, standard_simplex

import oracles
from helpers import hollow_triangle

EDGE = GSCDiagram(((0, 1), ("e",)), ((1, "e", 0), (0, "e", 1)))
TRIANGLE = GSCDiagram(((0, 1, 2), ("a", "b", "c")),
                      ((1, "a", 0), (0, "a", 1), (2, "b", 0), (1, "b", 1), (2, "c", 0), (0, "c", 1)))
FULL = GSCDiagram(((0, 1, 2), ("a", "b", "c"), ("T",)),
                  TRIANGLE.arrows + (("b", "T", 0), ("c", "T", 1), ("a", "T", 2)))


# --- sphere indices and spheres --------------------------------------------------------

def test_sphere_index_examples():
    assert sphere_indices(2, 0, 1) == (0, 0)
    assert sphere_indices(2, 0, 2) == (1, 0)
    with pytest.raises(IndexError):
        sphere_indices(2, 1, 1)


def test_sphere_indices_hold_in_towers(fs_tower, ss_tower):
    for t in (fs_tower, ss_tower):
        for n in range(2, t.N + 1):
            assert check_sphere_indices(t, n)


def test_sphere_indices_match_formula():
    for n in range(2, 7):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                a, b = sphere_indices(n, i, j)
                lhs = [oracles.face_table(n, i)[k] for k in oracles.face_table(n - 1, a)]
                rhs = [oracles.face_table(n, j)[k] for k in oracles.face_table(n - 1, b)]
                assert lhs == rhs


def test_finset_spheres(fs_tower):
    sizes = [len(sphere(fs_tower, n).vertex) for n in range(5)]
    assert sizes == [0, 2, 3, 4, 5]
    for n in range(5):
        assert sphere(fs_tower, n).is_monic
    s1 = sphere(fs_tower, 1)
    w = fs_tower.witnesses
    assert sorted(compose(s1.inclusion, l).table[0] for l in s1.legs) == \
        sorted([w.endpoint0.table[0], w.endpoint1.table[0]])


def test_sset_spheres(ss_tower):
    assert sphere(ss_tower, 1).vertex.nondegenerate_counts()[:2] == [2, 0]
    s2 = sphere(ss_tower, 2)
    assert s2.vertex.nondegenerate_counts()[:3] == [3, 3, 0] and s2.is_monic
    assert find_isomorphism(s2.vertex, hollow_triangle(4)) is not None
    s3 = sphere(ss_tower, 3)
    assert s3.is_monic
    # census of the union of the face images inside F_3
    f3 = ss_tower.cells[3]
    want = []
    for n in range(4):
        image = {ss_tower.faces[(3, i)].levels[n][k] for i in range(4)
                 for k in range(ss_tower.cells[2].sizes[n])}
        degenerate = {f3.degens[n - 1][i][k] for i in range(n) for k in range(f3.sizes[n - 1])} if n else set()
        want.append(len(image - degenerate))
    assert s3.vertex.nondegenerate_counts()[:4] == want


def test_sphere_out_of_range(fs_tower):
    with pytest.raises(IndexError):
        sphere(fs_tower, fs_tower.N + 1)


# --- handles -------------------------------------------------------------------------

def test_attach_loop(ss_tower):
    pt = SSET.point(4)
    s1 = sphere(ss_tower, 1).vertex
    alpha = hom_list(s1, pt)[0]
    a = attach_handles(ss_tower, pt, [(1, alpha)])
    assert a.vertex.nondegenerate_counts()[:2] == [1, 1]


def test_attach_nothing(fs_tower):
    x = fs_object("pq")
    a = attach_handles(fs_tower, x, [])
    assert a.vertex == x and a.base == identity(x)


def test_attach_interval_to_two_points(fs_tower):
    x = fs_object("pq")
    s0 = sphere(fs_tower, 1).vertex
    bij = [f for f in hom_list(s0, x) if len(set(f.table)) == 2]
    for alpha in bij:
        a = attach_handles(fs_tower, x, [(1, alpha)])
        assert len(a.vertex) == 2
        assert len(a.vertex) == oracles.equivalence_classes(2, 2, [(k, alpha.table[k]) for k in range(2)])


def test_attach_checks_domains(fs_tower):
    x = fs_object("pq")
    with pytest.raises(CategoryError):
        attach_handles(fs_tower, x, [(2, hom_list(sphere(fs_tower, 1).vertex, x)[0])])


# --- ASC ---------------------------------------------------------------------------------

def test_asc_validation():
    with pytest.raises(InvalidComplex):
        ASC((0, 1), frozenset({frozenset({0, 1})})).validate()
    with pytest.raises(InvalidComplex):
        ASC((0,), frozenset({frozenset({0}), frozenset({5})})).validate()
    with pytest.raises(InvalidComplex, match="not a face"):
        ASC((0, 1), frozenset({frozenset({0})})).validate()
    assert asc_closure([0, 1, 2], [(0, 1, 2)]).dimension == 2
    assert frozenset({3}) in asc_closure([0, 3], [(0,)]).faces


def test_asc_json_roundtrip():
    a = asc_closure("abc", [("a", "b"), ("c",)])
    assert asc_from_json(json.loads(json.dumps(asc_to_json(a)))) == a


@pytest.mark.parametrize("obj,field", [
    ([], "<root>"),
    ({"faces": []}, "vertices"),
    ({"vertices": [0], "faces": 3}, "faces"),
    ({"vertices": [0], "faces": [5]}, "faces[0]"),
])
def test_asc_parse_errors_name_field(obj, field):
    with pytest.raises(ParseError) as e:
        asc_from_json(obj)
    assert e.value.field == field


def test_asc_to_sset_examples():
    assert asc_to_sset(asc_closure([0], [(0,)]), 3) == SSET.point(3)
    edge = asc_to_sset(asc_closure([0, 1], [(0, 1)]), 3)
    assert find_isomorphism(edge, standard_simplex(1, 3)) is not None
    tri = asc_to_sset(asc_closure([0, 1, 2], [(0, 1), (1, 2), (0, 2)]), 3)
    assert tri.nondegenerate_counts()[:3] == [3, 3, 0]


def test_asc_to_sset_census():
    """Nondegenerate n-simplices are exactly the n-faces."""
    rng = random.Random(6)
    for _ in range(10):
        verts = list(range(rng.randint(1, 5)))
        a = asc_closure(verts, [tuple(rng.sample(verts, rng.randint(1, min(3, len(verts))))) for _ in range(3)])
        x = asc_to_sset(a, 3)
        want = [sum(1 for f in a.faces if len(f) == n + 1) for n in range(4)]
        assert x.nondegenerate_counts() == want


# --- level diagrams ----------------------------------------------------------------------

def test_gsc_validation():
    with pytest.raises(InvalidComplex):
        gsc_validate(GSCDiagram(((0, 0),), ()))
    with pytest.raises(InvalidComplex):
        gsc_validate(GSCDiagram(((0,), (), ("T",)), ((0, "T", 0),)))
    with pytest.raises(InvalidComplex):
        gsc_validate(GSCDiagram(((0, 1), ("e",)), ((0, "e", 2),)))
    with pytest.raises(InvalidComplex):
        gsc_validate(GSCDiagram(((0, 1), ("e",)), ((0, "e", 0), (1, "e", 0))))


def test_gsc_json_roundtrip():
    assert gsc_from_json(json.loads(json.dumps(gsc_to_json(TRIANGLE)))) == TRIANGLE
    with pytest.raises(ParseError) as e:
        gsc_from_json({"levels": [[0]], "arrows": [{"from": 0, "to": 1}]})
    assert e.value.field == "arrows[0].j"


def test_gsc_colimit_examples(fs_tower, ss_tower):
    for t in (fs_tower, ss_tower):
        single = gsc_colimit(t, GSCDiagram(((), ("e",)), ()))
        assert find_isomorphism(single.vertex, t.cells[1]) is not None
        edge = gsc_colimit(t, EDGE)
        assert find_isomorphism(edge.vertex, t.cells[1]) is not None
        tri = gsc_colimit(t, TRIANGLE)
        assert find_isomorphism(tri.vertex, sphere(t, 2).vertex) is not None
        full = gsc_colimit(t, FULL)
        assert find_isomorphism(full.vertex, t.cells[2]) is not None


def test_gsc_to_asc_examples():
    assert gsc_to_asc(EDGE) == asc_closure([0, 1], [(0, 1)])
    assert gsc_to_asc(TRIANGLE) == asc_closure([0, 1, 2], [(0, 1), (1, 2), (0, 2)])
    assert gsc_to_asc(FULL) == asc_closure([0, 1, 2], [(0, 1, 2)])
    assert vertex_tuples(FULL)["T"] == (0, 1, 2)


def test_gsc_asc_roundtrip():
    rng = random.Random(9)
    for _ in range(10):
        verts = list(range(rng.randint(1, 5)))
        a = asc_closure(verts, [tuple(rng.sample(verts, rng.randint(1, min(3, len(verts))))) for _ in range(3)])
        assert gsc_to_asc(asc_to_gsc(a)) == a


def test_conversion_cycle_commutes(ss_tower, ss_cf):
    for g in (EDGE, TRIANGLE, FULL):
        lhs = gsc_colimit(ss_tower, g).vertex
        rhs = realize(ss_cf, asc_to_sset(gsc_to_asc(g), ss_tower.N + 1)).vertex
        assert find_isomorphism(lhs, rhs) is not None


def test_gsc_colimit_needs_tall_tower():
    t = build_tower(1, fs_witnesses())
    with pytest.raises(CategoryError):
        gsc_colimit(t, FULL)


# --- realization -------------------------------------------------------------------------

def test_realize_point(fs_cf, ss_cf):
    for cf in (fs_cf, ss_cf):
        r = realize(cf, SSET.point(cf.tower.N + 1))
        assert find_isomorphism(r.vertex, cf.tower.cells[0]) is not None


@pytest.mark.parametrize("n", range(4))
def test_coyoneda(fs_cf, ss_cf, n):
    for cf in (fs_cf, ss_cf):
        w = coyoneda_witness(cf, n, D=max(n, 1) if cf is fs_cf else 4)
        assert w.ok
        assert compose(w.leg_inverse, w.leg) == identity(cf.tower.cells[n])


def test_realize_circle_is_sphere(ss_cf, ss_tower):
    r = realize(ss_cf, hollow_triangle(4))
    assert find_isomorphism(r.vertex, sphere(ss_tower, 2).vertex) is not None


def test_realize_rejects_short_tower():
    cf = CosimplicialFunctor(build_tower(2, fs_witnesses()))
    with pytest.raises(CategoryError, match="truncation"):
        realize(cf, standard_simplex(3, 3))


def test_finset_realization_counts_vertices(fs_cf):
    """The realized hollow triangle has as many points as the boundary of F_2."""
    r = realize(fs_cf, hollow_triangle(3))
    assert len(r.vertex) == len(points(sphere(fs_cf.tower, 2).vertex))
