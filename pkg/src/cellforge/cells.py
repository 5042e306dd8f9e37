"""The cell tower F_0..F_N with faces, degeneracies and centroids, and the
cosimplicial functor it defines.

Index conventions: face(n, i): F_{n-1} → F_n and degeneracy(n, i):
F_{n+1} → F_n, mirroring the generators d_{n,i}: [n-1] → [n] (skips i)
and s_{n,i}: [n+1] → [n] (hits i twice).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Any, Optional

from .kernel import (
    AxiomWitnesses,
    CategoryError,
    InconsistencyError,
    compose,
    factor_through_pushout,
    identity,
    inverse,
    pair,
    terminal_morphism,
)
from .wedge import (
    WedgeData,
    derive_wedge_contraction,
    flatten_at_point,
    wedge_morphism,
    wedge_object,
)


# --- the simplex category ----------------------------------------------------

@dataclass(frozen=True)
class DeltaMorphism:
    m: int
    n: int
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.m < 0 or self.n < 0 or len(self.images) != self.m + 1:
            raise ValueError("a map [m] → [n] needs m+1 images")
        if any(not 0 <= v <= self.n for v in self.images):
            raise ValueError("image out of range")
        if any(a > b for a, b in zip(self.images, self.images[1:])):
            raise ValueError("images must be weakly increasing")

    def __call__(self, k: int) -> int:
        return self.images[k]

    def after(self, other: "DeltaMorphism") -> "DeltaMorphism":
        """self∘other."""
        if other.n != self.m:
            raise ValueError("not composable")
        return DeltaMorphism(other.m, self.n, [self.images[v] for v in other.images])

    @staticmethod
    def identity(n: int) -> "DeltaMorphism":
        return DeltaMorphism(n, n, range(n + 1))

    @staticmethod
    def face(n: int, i: int) -> "DeltaMorphism":
        """d_{n,i}: [n-1] → [n] skipping i."""
        if not (n >= 1 and 0 <= i <= n):
            raise ValueError("face index out of range")
        return DeltaMorphism(n - 1, n, [k if k < i else k + 1 for k in range(n)])

    @staticmethod
    def degeneracy(n: int, i: int) -> "DeltaMorphism":
        """s_{n,i}: [n+1] → [n] hitting i twice."""
        if not (n >= 0 and 0 <= i <= n):
            raise ValueError("degeneracy index out of range")
        return DeltaMorphism(n + 1, n, [k if k <= i else k - 1 for k in range(n + 2)])


def all_delta_morphisms(m: int, n: int):
    import itertools
    for c in itertools.combinations_with_replacement(range(n + 1), m + 1):
        yield DeltaMorphism(m, n, c)


def delta_factorize(phi: DeltaMorphism) -> tuple:
    """Canonical word for φ: faces then degeneracies, leftmost applied last.

    Entries are ("d", n, i) or ("s", n, j).  Faces appear with decreasing
    skipped values, degeneracies with increasing collapsed positions.
    """
    img = phi.images
    k = len(set(img)) - 1
    missing = sorted(set(range(phi.n + 1)) - set(img), reverse=True)
    word = []
    level = phi.n
    for i in missing:
        word.append(("d", level, i))
        level -= 1
    collapse = [j for j in range(phi.m) if img[j] == img[j + 1]]
    for step, j in enumerate(collapse):
        word.append(("s", k + step, j))
    return tuple(word)


def word_to_delta(word, m: int) -> DeltaMorphism:
    """Compose a generator word (leftmost applied last) starting at [m]."""
    out = DeltaMorphism.identity(m)
    for kind, n, i in reversed(word):
        g = DeltaMorphism.face(n, i) if kind == "d" else DeltaMorphism.degeneracy(n, i)
        out = g.after(out)
    return out


# --- the tower -----------------------------------------------------------------

@dataclass(frozen=True)
class CellTower:
    N: int
    witnesses: AxiomWitnesses
    cells: tuple
    wedges: dict            # n ↦ WedgeData of F_n (0 ≤ n < N)
    faces: dict             # (n, i) ↦ F_{n-1} → F_n
    degens: dict            # (n, i) ↦ F_{n+1} → F_n
    centroids: dict         # n ↦ 1 → F_n
    contractions: dict      # n ↦ F_n×F_1 → F_n onto the centroid
    iota: Any               # F_1 → Wedge(F_0)
    iota_inv: Any
    notes: tuple = ()

    @property
    def backend(self):
        return self.cells[0].backend


def face(t: CellTower, n: int, i: int):
    if not (1 <= n <= t.N and 0 <= i <= n):
        raise IndexError(f"face ({n},{i}) outside the tower")
    return t.faces[(n, i)]


def degeneracy(t: CellTower, n: int, i: int):
    if not (0 <= n < t.N and 0 <= i <= n):
        raise IndexError(f"degeneracy ({n},{i}) outside the tower")
    return t.degens[(n, i)]


def centroid(t: CellTower, n: int):
    if not (1 <= n <= t.N):
        raise IndexError(f"centroid {n} outside the tower")
    return t.centroids[n]


def bottom(t: CellTower, n: int):
    """Bottom_{F_n}: F_n → F_{n+1} (equal to face(n+1, n+1))."""
    return t.wedges[n].bottom if n >= 1 else t.faces[(1, 1)]


def build_tower(N: int, w: AxiomWitnesses, budget=None) -> CellTower:
    if N < 1:
        raise CategoryError("the tower needs N ≥ 1")
    notes = []
    f0, f1 = w.terminal, w.interval
    for name, m in (("endpoint0", w.endpoint0), ("endpoint1", w.endpoint1), ("basepoint", w.basepoint)):
        if m.dom != f0 or m.cod != f1:
            raise CategoryError(f"witness {name} must be a map 1 → F_1")
    cells = [f0, f1]
    wedges = {0: wedge_object(f0, w)}
    w0 = wedges[0]
    # F_1 ≅ Wedge(F_0): t ↦ Pinch(*, t)
    iota = compose(w0.pinch, pair(terminal_morphism(f1), identity(f1), w0.cylinder))
    iota_inv = factor_through_pushout(w0.square, w.endpoint1, w0.cylinder.proj2)
    if compose(iota_inv, iota) != identity(f1) or compose(iota, iota_inv) != identity(w0.vertex):
        raise InconsistencyError("F_1 is not isomorphic to Wedge(F_0) through the pinch map")
    faces = {(1, 0): w.endpoint1, (1, 1): w.endpoint0}
    degens = {(0, 0): terminal_morphism(f1)}
    centroids = {1: w.basepoint}
    contractions = {}
    if w.contraction is not None:
        contractions[1] = w.contraction
    for n in range(1, N):
        wn = wedge_object(cells[n], w)
        wedges[n] = wn
        cells.append(wn.vertex)
        for j in range(n + 1):
            f = wedge_morphism(faces[(n, j)], wedges[n - 1], wn)
            faces[(n + 1, j)] = compose(f, iota) if n == 1 else f
        faces[(n + 1, n + 1)] = wn.bottom
        centroids[n + 1] = compose(wn.pinch, pair(centroids[n], centroids[1], wn.cylinder))
        for j in range(n):
            s = wedge_morphism(degens[(n - 1, j)], wn, wedges[n - 1])
            degens[(n, j)] = compose(iota_inv, s) if n == 1 else s
        degens[(n, n)] = flatten_at_point(cells[n], centroids[n], wn,
                                          contraction=contractions.get(n), budget=budget)
        if n not in contractions:
            notes.append(f"contraction of F_{n} found by search")
        # contraction of F_{n+1} onto its apex, for the next top degeneracy
        if n + 1 < N and 1 in contractions:
            if centroids[n + 1] == wn.top:
                contractions[n + 1] = derive_wedge_contraction(wn, contractions[1])
            else:
                notes.append(f"centroid of F_{n + 1} is not the apex; its contraction is searched")
    t = CellTower(N, w, tuple(cells), wedges, faces, degens, centroids, contractions,
                  iota, iota_inv, tuple(notes))
    for n in range(N):
        if compose(t.degens[(n, n)], t.faces[(n + 1, n + 1)]) != identity(cells[n]):
            raise InconsistencyError(f"top degeneracy of F_{n} is not a left inverse of Bottom")
    return t


def vertex_points(t: CellTower, n: int) -> list:
    """The n+1 canonical vertices of F_n: the apex of F_k carried up by Bottoms."""
    pts = []
    for k in range(n + 1):
        if k == 0:
            p = identity(t.cells[0])
        elif k == 1:
            p = t.faces[(1, 0)]
        else:
            p = t.wedges[k - 1].top
        for m in range(k + 1, n + 1):
            p = compose(t.faces[(m, m)], p)
        pts.append(p)
    return pts


def finset_labeling(t: CellTower, n: int) -> list:
    """Element indices of the canonical vertices of F_n (finite-set backend)."""
    pts = vertex_points(t, n)
    idx = [p.table[0] for p in pts]
    if sorted(idx) != list(range(len(t.cells[n]))):
        raise InconsistencyError(f"canonical vertices of F_{n} are not a bijection onto F_{n}")
    return idx


@dataclass
class OracleReport:
    ok: bool
    checked: int
    mismatches: list

    def to_json(self):
        return {"ok": self.ok, "checked": self.checked, "mismatches": self.mismatches}


def compare_with_simplex(t: CellTower) -> OracleReport:
    """Finite-set backend: every face/degeneracy table equals the combinatorial
    map of the simplex category once F_n is labelled by its canonical vertices."""
    if t.backend.name != "finset":
        raise CategoryError("the simplex comparison needs the finite-set backend")
    labels = [finset_labeling(t, n) for n in range(t.N + 1)]
    mism, checked = [], 0

    def table_as_delta(f, a, b):
        pos = {e: k for k, e in enumerate(labels[b])}
        return [pos[f.table[labels[a][k]]] for k in range(a + 1)]

    for (n, i), f in sorted(t.faces.items()):
        checked += 1
        got, want = table_as_delta(f, n - 1, n), list(DeltaMorphism.face(n, i).images)
        if got != want:
            mism.append({"map": f"face({n},{i})", "got": got, "want": want})
    for (n, i), f in sorted(t.degens.items()):
        checked += 1
        got, want = table_as_delta(f, n + 1, n), list(DeltaMorphism.degeneracy(n, i).images)
        if got != want:
            mism.append({"map": f"degeneracy({n},{i})", "got": got, "want": want})
    return OracleReport(not mism, checked, mism)


# --- the functor ---------------------------------------------------------------

@dataclass
class CosimplicialFunctor:
    tower: CellTower
    cache: dict = field(default_factory=dict)


def apply_word(t: CellTower, word, m: int):
    out = identity(t.cells[m])
    for kind, n, i in reversed(word):
        g = t.faces[(n, i)] if kind == "d" else t.degens[(n, i)]
        out = compose(g, out)
    return out


def apply_functor(cf: CosimplicialFunctor, phi: DeltaMorphism):
    t = cf.tower
    if phi.n > t.N or phi.m > t.N:
        raise IndexError("Δ-morphism exceeds the tower")
    got = cf.cache.get(phi)
    if got is None:
        got = apply_word(t, delta_factorize(phi), phi.m)
        cf.cache[phi] = got
    return got


# --- identity verification -------------------------------------------------------

@dataclass
class Instance:
    family: str
    params: dict
    ok: bool
    lhs: Any = None
    rhs: Any = None

    def to_json(self):
        out = {"family": self.family, "params": self.params, "ok": self.ok}
        if not self.ok and self.lhs is not None:
            be = self.lhs.backend
            out["lhs"] = be.mor_to_json(self.lhs)
            out["rhs"] = be.mor_to_json(self.rhs)
        return out


@dataclass
class IdentityReport:
    instances: list

    @property
    def failures(self):
        return [x for x in self.instances if not x.ok]

    def ok(self, families=None) -> bool:
        return all(x.ok for x in self.instances if families is None or x.family in families)

    def counts(self) -> dict:
        out = {}
        for x in self.instances:
            c = out.setdefault(x.family, {"checked": 0, "failed": 0})
            c["checked"] += 1
            c["failed"] += 0 if x.ok else 1
        return out

    def to_json(self, full=False):
        return {"ok": self.ok(), "families": self.counts(),
                "failures": [x.to_json() for x in self.failures],
                **({"instances": [x.to_json() for x in self.instances]} if full else {})}


SIMPLICIAL_FAMILIES = ("dd", "sd_lower", "sd_equal", "sd_next", "sd_upper", "ss")
AUX_FAMILIES = ("wedge_bottom_bottom", "wedge_face_bottom", "flatten_wedge_bottom",
                "flatten_face", "degeneracy_bottom", "flatten_bottom")
CORRECTED_FAMILIES = ("bottom_naturality_top_degeneracy", "flatten_face_lower")


def verify_simplicial_identities(t: CellTower, aux: bool = True) -> IdentityReport:
    """Check the simplicial identities (cosimplicial form) up to level N.

      dd        d_{n+1,i} d_{n,j} = d_{n+1,j+1} d_{n,i}      i ≤ j
      sd_lower  s_{n-1,j} d_{n,i} = d_{n-1,i} s_{n-2,j-1}    i < j
      sd_equal  s_{n-1,j} d_{n,j} = id
      sd_next   s_{n-1,j} d_{n,j+1} = id
      sd_upper  s_{n-1,j} d_{n,i} = d_{n-1,i-1} s_{n-2,j}    i > j+1
      ss        s_{n-1,j} s_{n,i} = s_{n-1,i} s_{n,j+1}      i ≤ j

    With ``aux`` the wedge-level identities used to prove the above are
    checked as stated, plus corrected variants of two of them.
    """
    d, s, N = t.faces, t.degens, t.N
    out = []

    def chk(family, params, lhs, rhs):
        ok = lhs == rhs
        out.append(Instance(family, params, ok, None if ok else lhs, None if ok else rhs))

    for n in range(1, N):
        for j in range(n + 1):
            for i in range(j + 1):
                chk("dd", {"n": n, "i": i, "j": j},
                    compose(d[(n + 1, i)], d[(n, j)]), compose(d[(n + 1, j + 1)], d[(n, i)]))
    for n in range(1, N + 1):
        for j in range(n):
            ident = identity(t.cells[n - 1])
            chk("sd_equal", {"n": n, "j": j}, compose(s[(n - 1, j)], d[(n, j)]), ident)
            chk("sd_next", {"n": n, "j": j}, compose(s[(n - 1, j)], d[(n, j + 1)]), ident)
            for i in range(n + 1):
                if i < j:
                    chk("sd_lower", {"n": n, "i": i, "j": j},
                        compose(s[(n - 1, j)], d[(n, i)]), compose(d[(n - 1, i)], s[(n - 2, j - 1)]))
                elif i > j + 1:
                    chk("sd_upper", {"n": n, "i": i, "j": j},
                        compose(s[(n - 1, j)], d[(n, i)]), compose(d[(n - 1, i - 1)], s[(n - 2, j)]))
    for n in range(1, N):
        for j in range(n):
            for i in range(j + 1):
                chk("ss", {"n": n, "i": i, "j": j},
                    compose(s[(n - 1, j)], s[(n, i)]), compose(s[(n - 1, i)], s[(n, j + 1)]))
    if aux:
        _aux_identities(t, chk)
    return IdentityReport(out)


def wedge_of_cells(t: CellTower, f, a: int, b: int):
    """Wedge(f): F_{a+1} → F_{b+1} for f: F_a → F_b, reading Wedge(F_0) as F_1."""
    out = wedge_morphism(f, t.wedges[a], t.wedges[b])
    if a == 0:
        out = compose(out, t.iota)
    if b == 0:
        out = compose(t.iota_inv, out)
    return out


def _aux_identities(t: CellTower, chk):
    d, s, N, W = t.faces, t.degens, t.N, t.wedges

    def wedge_of(f, a, b):
        return wedge_of_cells(t, f, a, b)

    def btm(n):
        return W[n].bottom

    for n in range(2, N):
        chk("wedge_bottom_bottom", {"n": n},
            compose(wedge_of(btm(n - 1), n - 1, n), btm(n - 1)), compose(btm(n), btm(n - 1)))
        for i in range(n):
            chk("wedge_face_bottom", {"n": n, "i": i},
                compose(wedge_of(d[(n, i)], n - 1, n), btm(n - 1)),
                compose(btm(n), wedge_of(d[(n - 1, i)], n - 2, n - 1)))
    for n in range(3, N + 1):
        chk("flatten_wedge_bottom", {"n": n},
            compose(s[(n - 1, n - 1)], wedge_of(btm(n - 2), n - 2, n - 1)),
            compose(btm(n - 2), s[(n - 2, n - 2)]))
        chk("bottom_naturality_top_degeneracy", {"n": n},
            compose(wedge_of(s[(n - 2, n - 2)], n - 1, n - 2), btm(n - 1)),
            compose(btm(n - 2), s[(n - 2, n - 2)]))
    for n in range(2, N + 1):
        for i in range(n):
            lhs = compose(s[(n - 1, n - 1)], d[(n, i)])
            rhs = compose(d[(n - 1, i)], s[(n - 2, n - 2)])
            chk("flatten_face", {"n": n, "i": i}, lhs, rhs)
            if i < n - 1:
                chk("flatten_face_lower", {"n": n, "i": i}, lhs, rhs)
    for n in range(3, N + 1):
        for j in range(n - 2):
            chk("degeneracy_bottom", {"n": n, "j": j},
                compose(s[(n - 1, j)], btm(n - 1)), compose(btm(n - 2), s[(n - 2, j)]))
    for n in range(N):
        chk("flatten_bottom", {"n": n}, compose(s[(n, n)], d[(n + 1, n + 1)]), identity(t.cells[n]))


# --- mutation helpers -------------------------------------------------------------

def with_face(t: CellTower, n: int, i: int, f) -> CellTower:
    faces = dict(t.faces)
    faces[(n, i)] = f
    return dataclasses.replace(t, faces=faces)


def swap_entries(f, a: int, b: int, level: int = 0):
    """The same morphism with the images of elements a and b exchanged
    (at the given level in the simplicial backend).  Generally not a valid
    morphism of the backend; used to plant defects."""
    if f.backend.name == "finset":
        from .finset import FinMap
        tab = list(f.table)
        tab[a], tab[b] = tab[b], tab[a]
        return FinMap(f.dom, f.cod, tab)
    from .sset import SMap
    levels = [list(l) for l in f.levels]
    levels[level][a], levels[level][b] = levels[level][b], levels[level][a]
    return SMap(f.dom, f.cod, levels)


# --- serialization ------------------------------------------------------------------

def tower_to_json(t: CellTower) -> dict:
    be = t.backend
    out = {"backend": be.name, "N": t.N,
           "cells": [be.obj_to_json(c) for c in t.cells],
           "census": [be.census(c) for c in t.cells]}

    def tables(f):
        if be.name == "finset":
            return list(f.table)
        return [list(l) for l in f.levels]

    out["faces"] = {f"{n},{i}": tables(f) for (n, i), f in sorted(t.faces.items())}
    out["degens"] = {f"{n},{i}": tables(f) for (n, i), f in sorted(t.degens.items())}
    out["centroids"] = {str(n): tables(p) for n, p in sorted(t.centroids.items())}
    if be.name == "finset":
        out["vertex_labels"] = [finset_labeling(t, n) for n in range(t.N + 1)]
    out["notes"] = list(t.notes)
    return out
