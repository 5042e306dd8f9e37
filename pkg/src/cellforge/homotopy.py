"""Homotopy search and contractibility.

A homotopy f ≃ g is H: X×F_1 → Y with H⟨id, e0∘!⟩ = f and H⟨id, e1∘!⟩ = g.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .kernel import (
    AxiomWitnesses,
    CategoryError,
    as_budget,
    compose,
    hom,
    hom_list,
    identity,
    pair,
    points,
    product,
    product_map,
    terminal_morphism,
)
from .wedge import at_end


@dataclass(frozen=True)
class HomotopyWitness:
    f: Any
    g: Any
    H: Any


def default_witnesses(x) -> AxiomWitnesses:
    if x.backend.name == "finset":
        from .finset import fs_witnesses
        return fs_witnesses()
    from .sset import ss_witnesses
    return ss_witnesses(x.dim)


def restrictions(H, x, w: AxiomWitnesses):
    cyl = product(x, w.interval)
    return compose(H, at_end(x, cyl, w.endpoint0)), compose(H, at_end(x, cyl, w.endpoint1))


def is_homotopy(H, f, g, w: AxiomWitnesses) -> bool:
    return restrictions(H, f.dom, w) == (f, g)


def homotopies(f, g, w: Optional[AxiomWitnesses] = None, budget=None):
    """Iterate over all homotopies f ≃ g."""
    if f.dom != g.dom or f.cod != g.cod:
        raise CategoryError("homotopy needs parallel morphisms")
    w = w or default_witnesses(f.dom)
    x = f.dom
    cyl = product(x, w.interval)
    cons = ((at_end(x, cyl, w.endpoint0), f), (at_end(x, cyl, w.endpoint1), g))
    return hom(cyl.vertex, f.cod, budget, constraints=cons)


def are_homotopic(f, g, budget=None, w: Optional[AxiomWitnesses] = None) -> Optional[HomotopyWitness]:
    """Return a witness H for f ≃ g, or None when none exists.

    Raises BudgetExceeded when the search is cut short.
    """
    for H in homotopies(f, g, w, budget):
        return HomotopyWitness(f, g, H)
    return None


def contraction_to(x, pt, w: Optional[AxiomWitnesses] = None, budget=None):
    """Some C: X×F_1 → X with C at endpoint 0 = id and at endpoint 1 = pt∘!."""
    found = are_homotopic(identity(x), compose(pt, terminal_morphism(x)), budget, w)
    return None if found is None else found.H


def is_contractible(x, budget=None, w: Optional[AxiomWitnesses] = None):
    """Return (point, contraction) or None if no point admits a contraction."""
    w = w or default_witnesses(x)
    budget = as_budget(budget)
    for pt in points(x):
        c = contraction_to(x, pt, w, budget)
        if c is not None:
            return pt, c
    return None


def swap_homotopy(h: HomotopyWitness, w: AxiomWitnesses) -> HomotopyWitness:
    """Turn a witness of f ≃ g into one of g ≃ f using the swap witness."""
    if w.swap is None:
        raise CategoryError("no swap witness available")
    x = h.f.dom
    cyl = product(x, w.interval)
    flipped = compose(h.H, product_map(identity(x), w.swap, cyl, cyl))
    return HomotopyWitness(h.g, h.f, flipped)


def product_homotopy(a, h: HomotopyWitness, w: AxiomWitnesses) -> HomotopyWitness:
    """From f ≃ g build A×f ≃ A×g (homotopies are preserved under products)."""
    x, y = h.f.dom, h.f.cod
    ax, ay = product(a, x), product(a, y)
    cyl = product(ax.vertex, w.interval)
    inner = product(x, w.interval)
    # ((a, x), t) ↦ (a, H(x, t))
    to_inner = pair(compose(ax.proj2, cyl.proj1), cyl.proj2, inner)
    H = pair(compose(ax.proj1, cyl.proj1), compose(h.H, to_inner), ay)
    return HomotopyWitness(product_map(identity(a), h.f, ax, ay),
                           product_map(identity(a), h.g, ax, ay), H)


@dataclass
class RelationReport:
    size: int
    related: list = field(default_factory=list)   # pairs (p, q) with maps[p] ≃ maps[q]
    reflexive: bool = False
    symmetric: bool = False
    transitive: bool = False
    classes: Optional[list] = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"size": self.size, "related": [list(p) for p in self.related],
                "reflexive": self.reflexive, "symmetric": self.symmetric,
                "transitive": self.transitive, "classes": self.classes, "notes": self.notes}


def check_homotopy_relation(x, y, budget=None, w: Optional[AxiomWitnesses] = None,
                            audit=None) -> RelationReport:
    """The full one-sided homotopy relation on Hom(x, y)."""
    w = w or default_witnesses(x)
    budget = as_budget(budget)
    maps = hom_list(x, y, budget)
    n = len(maps)
    rel = [[are_homotopic(maps[p], maps[q], budget, w) is not None for q in range(n)] for p in range(n)]
    rep = RelationReport(n)
    rep.related = [(p, q) for p in range(n) for q in range(n) if rel[p][q]]
    rep.reflexive = all(rel[p][p] for p in range(n))
    rep.symmetric = all(rel[q][p] for p in range(n) for q in range(n) if rel[p][q])
    rep.transitive = all(rel[p][r] for p in range(n) for q in range(n) for r in range(n)
                         if rel[p][q] and rel[q][r])
    if rep.reflexive and rep.symmetric and rep.transitive:
        seen, classes = set(), []
        for p in range(n):
            if p not in seen:
                c = [q for q in range(n) if rel[p][q]]
                seen.update(c)
                classes.append(c)
        rep.classes = classes
    if audit is not None:
        verdicts = {e.axiom: e.verdict for e in audit.entries}
        if verdicts.get("A:swap") == "pass" and not rep.symmetric:
            rep.notes.append("A:swap passes but the relation is not symmetric")
        if verdicts.get("A:F1_join") == "pass" and not rep.transitive:
            rep.notes.append("A:F1_join passes but the relation is not transitive")
        if verdicts.get("A:swap") != "pass":
            rep.notes.append("A:swap does not pass; symmetry is not guaranteed")
        if verdicts.get("A:F1_join") != "pass":
            rep.notes.append("A:F1_join does not pass; transitivity is not guaranteed")
    return rep
