"""Spheres, handle attachment, level diagrams of cells, abstract simplicial
complexes, and realization of simplicial sets by gluing cells.

Level diagrams are indexed from 0: a node at level l stands for a copy of
F_l, and an arrow (u, v, j) from level l to level l+1 is sent to the face
map face(l+1, j): F_l → F_{l+1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Optional

from .cells import CellTower, CosimplicialFunctor
from .kernel import (
    CategoryError,
    ColimitData,
    InconsistencyError,
    colimit,
    compose,
    factor_through_colimit,
    find_isomorphism,
    initial_morphism,
    inverse,
    is_monic,
)


class InvalidComplex(ValueError):
    pass


class ParseError(ValueError):
    """Malformed JSON input; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# --- abstract simplicial complexes ---------------------------------------------------

@dataclass(frozen=True)
class ASC:
    vertices: tuple
    faces: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "faces", frozenset(frozenset(f) for f in self.faces))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def validate(self) -> "ASC":
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidComplex("repeated vertex")
        known = set(self.vertices)
        for f in self.faces:
            if not f:
                raise InvalidComplex("empty face")
            if not f <= known:
                raise InvalidComplex(f"face {sorted(map(str, f))} uses an unknown vertex")
            for k in range(1, len(f)):
                for sub in itertools.combinations(f, k):
                    if frozenset(sub) not in self.faces:
                        raise InvalidComplex(f"not closed under subsets: {sorted(map(str, sub))} missing")
        for v in self.vertices:
            if frozenset([v]) not in self.faces:
                raise InvalidComplex(f"vertex {v!r} is not a face")
        return self

    def ordered_faces(self) -> list:
        """Faces as vertex tuples in the global order, by size then lexicographically."""
        order = {v: k for k, v in enumerate(self.vertices)}
        out = [tuple(sorted(f, key=order.__getitem__)) for f in self.faces]
        return sorted(out, key=lambda s: (len(s), [order[v] for v in s]))


def asc_closure(vertices, maximal) -> ASC:
    """The ASC generated by the given faces and the singleton of every vertex."""
    faces = {frozenset([v]) for v in vertices}
    for f in maximal:
        f = tuple(f)
        for k in range(1, len(f) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(f, k))
    return ASC(tuple(vertices), frozenset(faces))


def asc_to_json(a: ASC) -> dict:
    return {"vertices": list(a.vertices), "faces": [list(f) for f in a.ordered_faces()]}


def asc_from_json(obj) -> ASC:
    if not isinstance(obj, dict):
        raise ParseError("<root>", "expected an object")
    if not isinstance(obj.get("vertices"), list):
        raise ParseError("vertices", "expected a list")
    if not isinstance(obj.get("faces"), list):
        raise ParseError("faces", "expected a list of lists")
    for k, f in enumerate(obj["faces"]):
        if not isinstance(f, list):
            raise ParseError(f"faces[{k}]", "expected a list")
    try:
        a = ASC(tuple(obj["vertices"]), frozenset(frozenset(f) for f in obj["faces"]))
    except TypeError as e:
        raise ParseError("faces", f"unhashable vertex ({e})")
    try:
        return a.validate()
    except InvalidComplex as e:
        raise ParseError("faces", str(e))


def asc_to_sset(a: ASC, D: int):
    """Nondecreasing vertex sequences whose support is a face, truncated at D."""
    from .sset import from_vertex_sequences
    a.validate()
    verts = a.vertices
    x, _ = from_vertex_sequences(len(verts), lambda s: frozenset(verts[i] for i in s) in a.faces, D)
    return x


# --- level diagrams ---------------------------------------------------------------------

@dataclass(frozen=True)
class GSCDiagram:
    levels: tuple            # levels[l] = node ids at level l
    arrows: tuple            # (from, to, j)

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(tuple(l) for l in self.levels))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))

    @property
    def dimension(self) -> int:
        return len(self.levels) - 1

    def level_of(self) -> dict:
        return {v: l for l, nodes in enumerate(self.levels) for v in nodes}

    def nodes(self) -> list:
        return [v for nodes in self.levels for v in nodes]


def gsc_validate(g: GSCDiagram) -> GSCDiagram:
    lev = {}
    for l, nodes in enumerate(g.levels):
        for v in nodes:
            if v in lev:
                raise InvalidComplex(f"node {v!r} appears twice")
            lev[v] = l
    seen = set()
    for u, v, j in g.arrows:
        if u not in lev or v not in lev:
            raise InvalidComplex(f"arrow {u!r}->{v!r} mentions an unknown node")
        if lev[v] != lev[u] + 1:
            raise InvalidComplex(f"arrow {u!r}->{v!r} does not connect consecutive levels")
        if not isinstance(j, int) or not 0 <= j <= lev[v]:
            raise InvalidComplex(f"arrow {u!r}->{v!r} has face index {j!r} outside 0..{lev[v]}")
        if (v, j) in seen:
            raise InvalidComplex(f"node {v!r} receives two arrows with face index {j}")
        seen.add((v, j))
    return g


def gsc_to_json(g: GSCDiagram) -> dict:
    return {"levels": [list(l) for l in g.levels],
            "arrows": [{"from": u, "to": v, "j": j} for u, v, j in g.arrows]}


def gsc_from_json(obj) -> GSCDiagram:
    if not isinstance(obj, dict):
        raise ParseError("<root>", "expected an object")
    if not isinstance(obj.get("levels"), list) or any(not isinstance(l, list) for l in obj["levels"]):
        raise ParseError("levels", "expected a list of lists of node ids")
    arrows = obj.get("arrows", [])
    if not isinstance(arrows, list):
        raise ParseError("arrows", "expected a list")
    out = []
    for k, a in enumerate(arrows):
        if not isinstance(a, dict):
            raise ParseError(f"arrows[{k}]", "expected an object")
        for key in ("from", "to", "j"):
            if key not in a:
                raise ParseError(f"arrows[{k}].{key}", "missing")
        if not isinstance(a["j"], int):
            raise ParseError(f"arrows[{k}].j", "expected an integer")
        out.append((a["from"], a["to"], a["j"]))
    g = GSCDiagram(tuple(obj["levels"]), tuple(out))
    try:
        return gsc_validate(g)
    except InvalidComplex as e:
        raise ParseError("arrows", str(e))


@dataclass(frozen=True)
class CellColimit:
    """Colimit of a diagram of cells; ``legs`` follow ``nodes``."""
    nodes: tuple
    vertex: Any
    legs: tuple
    dimension: int
    colimit: Optional[ColimitData] = None


def gsc_colimit(t: CellTower, g: GSCDiagram) -> CellColimit:
    gsc_validate(g)
    if g.dimension > t.N:
        raise CategoryError(f"diagram has level {g.dimension} but the tower stops at {t.N}")
    lev = g.level_of()
    nodes = g.nodes()
    if not nodes:
        empty = initial_morphism(t.cells[0]).dom
        return CellColimit((), empty, (), -1)
    pos = {v: k for k, v in enumerate(nodes)}
    objects = [t.cells[lev[v]] for v in nodes]
    arrows = [(pos[u], pos[v], t.faces[(lev[v], j)]) for u, v, j in g.arrows]
    cd = colimit(objects, arrows)
    return CellColimit(tuple(nodes), cd.vertex, cd.legs, g.dimension, cd)


def vertex_tuples(g: GSCDiagram) -> dict:
    """The ordered vertex tuple of every node, traced down to level 0."""
    gsc_validate(g)
    lev = g.level_of()
    incoming = {}
    for u, v, j in g.arrows:
        incoming.setdefault(v, []).append((u, j))
    tup = {v: (v,) for v in g.levels[0]} if g.levels else {}
    for l in range(1, len(g.levels)):
        for v in g.levels[l]:
            slots = [None] * (l + 1)
            for u, j in incoming.get(v, []):
                for k in range(l + 1):
                    if k == j:
                        continue
                    val = tup[u][k if k < j else k - 1]
                    if slots[k] is None:
                        slots[k] = val
                    elif slots[k] != val:
                        raise InvalidComplex(f"node {v!r}: faces disagree on vertex {k}")
            if any(s is None for s in slots):
                raise InvalidComplex(f"node {v!r}: not enough faces to determine its vertices")
            if len(set(slots)) != len(slots):
                raise InvalidComplex(f"node {v!r}: vertex tracing is not injective")
            tup[v] = tuple(slots)
    return tup


def gsc_to_asc(g: GSCDiagram) -> ASC:
    tup = vertex_tuples(g)
    faces = {}
    for v, s in tup.items():
        f = frozenset(s)
        if f in faces:
            raise InvalidComplex(f"nodes {faces[f]!r} and {v!r} span the same vertices")
        faces[f] = v
    verts = tuple(g.levels[0]) if g.levels else ()
    return ASC(verts, frozenset(faces)).validate()


def asc_to_gsc(a: ASC) -> GSCDiagram:
    """One node per face (named by its vertex tuple) with all face arrows."""
    a.validate()
    simplices = a.ordered_faces()
    levels = [[] for _ in range(a.dimension + 1)]
    arrows = []
    for s in simplices:
        n = len(s) - 1
        node = s[0] if n == 0 else s
        levels[n].append(node)
        if n >= 1:
            for j in range(n + 1):
                sub = s[:j] + s[j + 1:]
                arrows.append((sub[0] if len(sub) == 1 else sub, node, j))
    return GSCDiagram(tuple(levels), tuple(arrows))


# --- spheres ----------------------------------------------------------------------------

def sphere_indices(n: int, i: int, j: int) -> tuple:
    """(α, β) with face(n, i)∘face(n-1, α) = face(n, j)∘face(n-1, β) for i < j."""
    if not 0 <= i < j <= n:
        raise IndexError("sphere indices need 0 ≤ i < j ≤ n")
    return j - 1, i


def check_sphere_indices(t: CellTower, n: int) -> bool:
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            a, b = sphere_indices(n, i, j)
            if compose(t.faces[(n, i)], t.faces[(n - 1, a)]) != compose(t.faces[(n, j)], t.faces[(n - 1, b)]):
                return False
    return True


@dataclass(frozen=True)
class SphereData:
    n: int
    vertex: Any          # the boundary sphere of F_n
    inclusion: Any       # vertex → F_n
    is_monic: bool
    legs: tuple = ()     # copy i of F_{n-1} → vertex, for i = 0..n
    colimit: Optional[ColimitData] = None


def sphere(t: CellTower, n: int) -> SphereData:
    """The boundary of F_n as a colimit of its faces glued along shared faces."""
    if not 0 <= n <= t.N:
        raise IndexError("sphere dimension outside the tower")
    if n == 0:
        inc = initial_morphism(t.cells[0])
        return SphereData(0, inc.dom, inc, is_monic(inc))
    objects = [t.cells[n - 1]] * (n + 1)
    arrows = []
    cocone = [t.faces[(n, i)] for i in range(n + 1)]
    if n >= 2:
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                a, b = sphere_indices(n, i, j)
                k = len(objects)
                objects.append(t.cells[n - 2])
                arrows.append((k, i, t.faces[(n - 1, a)]))
                arrows.append((k, j, t.faces[(n - 1, b)]))
                cocone.append(compose(t.faces[(n, i)], t.faces[(n - 1, a)]))
    cd = colimit(objects, arrows)
    inc = factor_through_colimit(cd, cocone)
    for i in range(n + 1):
        if compose(inc, cd.legs[i]) != t.faces[(n, i)]:
            raise InconsistencyError("sphere inclusion does not restrict to the face maps")
    return SphereData(n, cd.vertex, inc, is_monic(inc), tuple(cd.legs[: n + 1]), cd)


# --- handles ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Attachment:
    vertex: Any
    base: Any            # x → result
    handles: tuple       # F_k → result, one per attached handle


def attach_handles(t: CellTower, x, specs) -> Attachment:
    """Glue a copy of F_k to x along α: S^{k-1} → x for each (k, α) in specs."""
    from .kernel import identity
    specs = list(specs)
    if not specs:
        return Attachment(x, identity(x), ())
    objects, arrows = [x], []
    for k, alpha in specs:
        s = sphere(t, k)
        if alpha.dom != s.vertex:
            raise CategoryError(f"attaching map for a {k}-handle must start at the boundary of F_{k}")
        if alpha.cod != x:
            raise CategoryError("attaching map must land in x")
        src = len(objects)
        objects += [s.vertex, t.cells[k]]
        arrows += [(src, 0, alpha), (src, src + 1, s.inclusion)]
    cd = colimit(objects, arrows)
    return Attachment(cd.vertex, cd.legs[0], tuple(cd.legs[2::2]))


# --- realization ------------------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    vertex: Any
    cells: tuple         # (n, simplex id) per copy of F_n
    legs: tuple          # F_n → vertex per copy
    top_degree: int

    def leg(self, n: int, simplex: int):
        return self.legs[self.cells.index((n, simplex))]


def realize(cf: CosimplicialFunctor, x) -> Realization:
    """Glue one copy of F_n per n-simplex of x along faces and degeneracies."""
    t = cf.tower
    counts = x.nondegenerate_counts()
    top = max((n for n, c in enumerate(counts) if c), default=-1)
    if top < 0:
        empty = initial_morphism(t.cells[0]).dom
        return Realization(empty, (), (), -1)
    if top > t.N:
        raise CategoryError(f"truncation too small: x has nondegenerate {top}-simplices, tower stops at {t.N}")
    cells = [(n, s) for n in range(top + 1) for s in range(x.sizes[n])]
    pos = {c: k for k, c in enumerate(cells)}
    objects = [t.cells[n] for n, _ in cells]
    arrows = []
    for n in range(1, top + 1):
        for s in range(x.sizes[n]):
            for i in range(n + 1):
                arrows.append((pos[(n - 1, x.faces[n][i][s])], pos[(n, s)], t.faces[(n, i)]))
    for n in range(top):
        for s in range(x.sizes[n]):
            for i in range(n + 1):
                arrows.append((pos[(n + 1, x.degens[n][i][s])], pos[(n, s)], t.degens[(n, i)]))
    cd = colimit(objects, arrows)
    return Realization(cd.vertex, tuple(cells), cd.legs, top)


@dataclass(frozen=True)
class CoYonedaWitness:
    n: int
    leg: Any               # F_n → realize(Δ[n]), the copy of the top simplex
    leg_inverse: Any
    iso: Any               # independently found by isomorphism search
    iso_inverse: Any

    @property
    def ok(self) -> bool:
        return self.leg_inverse is not None and self.iso is not None


def coyoneda_witness(cf: CosimplicialFunctor, n: int, D: Optional[int] = None, budget=None) -> CoYonedaWitness:
    """realize(Δ[n]) ≅ F_n, checked both through the top leg and by search."""
    from .sset import standard_simplex
    D = max(n, 1) if D is None else D
    if D < n:
        raise CategoryError("truncation below the simplex dimension")
    x = standard_simplex(n, D)
    r = realize(cf, x)
    top = x.sizes[n] - 1 if n == 0 else _top_simplex(x, n)
    leg = r.leg(n, top)
    found = find_isomorphism(cf.tower.cells[n], r.vertex, budget)
    return CoYonedaWitness(n, leg, inverse(leg), *(found or (None, None)))


def _top_simplex(x, n: int) -> int:
    nd = x.nondegenerate(n)
    if len(nd) != 1:
        raise InconsistencyError("a standard simplex has one top simplex")
    return nd[0]
