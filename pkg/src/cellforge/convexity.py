"""Base maps, the cone construction for cells, and convexity checks.

Two orientations are supported.  "last" puts the cone point at the last
vertex: the base face of F_{n+1} is face(n+1, n+1) and faces keep their
index under the shift.  "first" is the mirror image: the base face is
face(n+1, 0) and the shift sends face(n, i) to face(n+1, i+1).  The cone
built from the wedge construction has its apex at the last vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .cells import CellTower, CosimplicialFunctor, Instance, IdentityReport, wedge_of_cells
from .kernel import CategoryError, as_budget, compose, hom_list

ORIENTATIONS = ("last", "first")


def _base_index(n: int, orientation: str) -> int:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    return n if orientation == "last" else 0


def _shift(i: int, orientation: str) -> int:
    return i if orientation == "last" else i + 1


def _unshift(j: int, orientation: str) -> int:
    return j if orientation == "last" else j - 1


def base(t: CellTower, tau, n: int, orientation: str = "first"):
    """τ∘face(n+1, b) for τ: F_{n+1} → x."""
    return compose(tau, t.faces[(n + 1, _base_index(n + 1, orientation))])


def base_map(cf: CosimplicialFunctor, x, n: int, orientation: str = "first", budget=None) -> dict:
    """σ ↦ σ∘face(n+1, b) on Hom(F_{n+1}, x), with b the base index (0 by default)."""
    t = cf.tower
    if not 0 <= n < t.N:
        raise IndexError("base map level outside the tower")
    return {s: base(t, s, n, orientation) for s in hom_list(t.cells[n + 1], x, budget)}


@dataclass
class ConeFamily:
    tower: CellTower
    m: int
    degeneracy_index: int
    cache: dict = field(default_factory=dict)

    @property
    def target(self):
        return self.tower.cells[self.m]

    def __call__(self, n: int, sigma):
        """Cone_n(σ) = s̃_{m,m}∘Wedge(σ) : F_{n+1} → F_m."""
        key = (n, sigma)
        got = self.cache.get(key)
        if got is None:
            t, m = self.tower, self.m
            if sigma.dom != t.cells[n] or sigma.cod != t.cells[m]:
                raise CategoryError("σ must be a map F_n → F_m")
            got = compose(t.degens[(m, self.degeneracy_index)], wedge_of_cells(t, sigma, n, m))
            self.cache[key] = got
        return got


def cone(t: CellTower, m: int, degeneracy_index: Optional[int] = None) -> ConeFamily:
    """The cone family into F_m.  ``degeneracy_index`` other than m plants a defect."""
    if not 0 <= m < t.N:
        raise IndexError("cone target must satisfy m ≤ N-1")
    j = m if degeneracy_index is None else degeneracy_index
    if not 0 <= j <= m:
        raise IndexError("degeneracy index out of range")
    return ConeFamily(t, m, j)


def verify_convexity(t: CellTower, m: int, max_n: Optional[int] = None,
                     orientation: str = "last", family: Optional[ConeFamily] = None,
                     budget=None) -> IdentityReport:
    """Check the cone identities for every σ: F_n → F_m with n ≤ max_n.

      cone_faces        Cone_n(σ)∘face(n+1, b) = σ and, for the other faces,
                        Cone_n(σ)∘face(n+1, shift(i)) = Cone_{n-1}(σ∘face(n, i))
      cone_naturality   the second clause alone (naturality of the cone)
      cone_base         base after cone is the identity on Hom(F_n, F_m)
      base_naturality   base commutes with the shifted faces
      characterization_agreement  a σ passes cone_faces exactly when it
                        passes cone_naturality and cone_base
    """
    budget = as_budget(budget)
    if max_n is None:
        max_n = t.N - 1
    if max_n > t.N - 1:
        raise IndexError("cone levels need n ≤ N-1")
    fam = family or cone(t, m)
    target = t.cells[m]
    out = []
    homs = {n: hom_list(t.cells[n], target, budget) for n in range(max_n + 1)}
    for n in range(max_n + 1):
        b = _base_index(n + 1, orientation)
        for k, sigma in enumerate(homs[n]):
            c = fam(n, sigma)
            p = {"n": n, "m": m, "sigma": k}
            # right inverse of base, then naturality along shifted faces
            based = base(t, c, n, orientation)
            base_ok = based == sigma
            out.append(Instance("cone_base", p, base_ok, None if base_ok else based,
                                None if base_ok else sigma))
            nat_ok = True
            for i in range(n + 1 if n >= 1 else 0):
                lhs = compose(c, t.faces[(n + 1, _shift(i, orientation))])
                rhs = fam(n - 1, compose(sigma, t.faces[(n, i)]))
                ok = lhs == rhs
                nat_ok = nat_ok and ok
                out.append(Instance("cone_naturality", {**p, "i": i}, ok,
                                    None if ok else lhs, None if ok else rhs))
            # every face of F_{n+1} at once
            faces_ok = True
            for j in range(n + 2):
                lhs = compose(c, t.faces[(n + 1, j)])
                if j == b:
                    rhs = sigma
                elif n == 0:
                    continue
                else:
                    rhs = fam(n - 1, compose(sigma, t.faces[(n, _unshift(j, orientation))]))
                ok = lhs == rhs
                faces_ok = faces_ok and ok
                out.append(Instance("cone_faces", {**p, "face": j}, ok,
                                    None if ok else lhs, None if ok else rhs))
            out.append(Instance("characterization_agreement", p, faces_ok == (base_ok and nat_ok)))
    # base naturality on Hom(F_{n+2}, F_m)
    for n in range(max_n):
        if n + 2 > t.N:
            break
        for k, sigma in enumerate(hom_list(t.cells[n + 2], target, budget)):
            for i in range(n + 1):
                b2, b1 = _base_index(n + 2, orientation), _base_index(n + 1, orientation)
                lhs = compose(sigma, t.faces[(n + 2, _shift(i, orientation))], t.faces[(n + 1, b1)])
                rhs = compose(sigma, t.faces[(n + 2, b2)], t.faces[(n + 1, i)])
                ok = lhs == rhs
                out.append(Instance("base_naturality", {"n": n, "m": m, "sigma": k, "i": i}, ok,
                                    None if ok else lhs, None if ok else rhs))
    return IdentityReport(out)
