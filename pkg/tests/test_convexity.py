import pytest

from cellforge.cells import DeltaMorphism, apply_functor, build_tower, wedge_of_cells
from cellforge.convexity import base, base_map, cone, verify_convexity
from cellforge.finset import fs_witnesses
from cellforge.kernel import CategoryError, compose, hom_list, identity, terminal_morphism

import oracles
from helpers import in_vertex_coordinates

FAMILIES = ("cone_faces", "cone_naturality", "cone_base", "base_naturality", "characterization_agreement")


def test_cones_into_point_are_terminal(fs_tower, ss_tower):
    for t in (fs_tower, ss_tower):
        c = cone(t, 0)
        for n in range(3):
            for s in hom_list(t.cells[n], t.cells[0]):
                assert c(n, s) == terminal_morphism(t.cells[n + 1])


def test_cone_of_identity_restricts_to_identity(fs_tower, ss_tower):
    for t in (fs_tower, ss_tower):
        c1 = cone(t, 1)(1, identity(t.cells[1]))
        assert compose(c1, t.faces[(2, 2)]) == identity(t.cells[1])


def cone_table(sigma_table, m):
    """Independent cone in vertex coordinates: extend σ by sending the new last vertex to m."""
    return list(sigma_table) + [m]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_cone_values_match_tables(fs_tower, m):
    t = fs_tower
    c = cone(t, m)
    for n in range(3):
        for s in hom_list(t.cells[n], t.cells[m]):
            got = c(n, s)
            assert got == compose(t.degens[(m, m)], wedge_of_cells(t, s, n, m))
            st = in_vertex_coordinates(t, s, n, m)
            if st == sorted(st):
                assert in_vertex_coordinates(t, got, n + 1, m) == cone_table(st, m)


@pytest.mark.parametrize("m", range(4))
def test_convexity_finset(fs_tower, m):
    rep = verify_convexity(fs_tower, m, max_n=3)
    assert rep.ok(), rep.failures[:3]
    assert set(rep.counts()) == set(FAMILIES)


@pytest.mark.parametrize("m", range(3))
def test_convexity_sset(ss_tower, m):
    rep = verify_convexity(ss_tower, m, max_n=2)
    assert rep.ok(), rep.failures[:3]


def test_mirrored_orientation_fails_for_recipe():
    t = build_tower(4, fs_witnesses())
    rep = verify_convexity(t, 2, orientation="first")
    bad = {x.family for x in rep.failures}
    assert {"cone_base", "cone_faces", "cone_naturality"} <= bad
    assert rep.ok(("characterization_agreement", "base_naturality"))


def test_planted_degeneracy_defect_is_named():
    t = build_tower(4, fs_witnesses())
    rep = verify_convexity(t, 2, family=cone(t, 2, 0))
    bad = {x.family for x in rep.failures}
    assert bad and bad <= {"cone_base", "cone_faces"}
    x = rep.failures[0]
    assert "n" in x.params and "sigma" in x.params


def test_base_map(fs_cf, ss_cf):
    t = fs_cf.tower
    one = t.cells[0]
    bm = base_map(fs_cf, one, 0)
    assert len(bm) == 1 and list(bm.values()) == [identity(one)]
    for s, b in base_map(fs_cf, t.cells[2], 1).items():
        assert b == compose(s, t.faces[(2, 0)])
        assert in_vertex_coordinates(t, b, 1, 2) == [in_vertex_coordinates(t, s, 2, 2)[k]
                                                     for k in oracles.face_table(2, 0)]
    m = 2
    c = cone(t, m)
    for s in hom_list(t.cells[1], t.cells[m]):
        assert base(t, c(1, s), 1, "last") == s
    with pytest.raises(IndexError):
        base_map(ss_cf, one, ss_cf.tower.N)


def test_base_is_the_shifted_face(fs_cf):
    """base in orientation 'first' is the functor image of the coface skipping 0."""
    t = fs_cf.tower
    d = apply_functor(fs_cf, DeltaMorphism.face(2, 0))
    for s in hom_list(t.cells[2], t.cells[1]):
        assert base(t, s, 1) == compose(s, d)


def test_cone_arguments_checked(fs_tower):
    t = fs_tower
    with pytest.raises(IndexError):
        cone(t, t.N)
    with pytest.raises(IndexError):
        cone(t, 2, 3)
    with pytest.raises(CategoryError):
        cone(t, 2)(1, identity(t.cells[1]))
    with pytest.raises(IndexError):
        verify_convexity(t, 1, max_n=t.N)
