"""Category contract shared by the backends.

Objects and morphisms are backend values (``FinSet``/``FinMap`` or
``SSet``/``SMap``).  Every object carries its backend, so the free functions
below dispatch on their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Iterator, Optional, Sequence


class CategoryError(ValueError):
    """Raised on ill-typed requests (mismatched domains, cross-backend use)."""


class InconsistencyError(RuntimeError):
    """A construction produced data that fails its own universal property."""


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before reaching a verdict."""


class Budget:
    """Counter of candidate assignments explored by a search."""

    def __init__(self, limit: Optional[int] = None):
        if limit is not None and limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} exhausted")

    def __repr__(self):
        return f"Budget(used={self.used}, limit={self.limit})"


def as_budget(b) -> Budget:
    if isinstance(b, Budget):
        return b
    return Budget(b)


class Obj:
    backend: "Backend"


class Mor:
    dom: Any
    cod: Any
    backend: "Backend"


@dataclass(frozen=True)
class Span:
    apex: Any
    left: Any
    right: Any

    def __post_init__(self):
        if self.left.dom != self.apex or self.right.dom != self.apex:
            raise CategoryError("span legs must start at the apex")
        _same_backend(self.left, self.right)


@dataclass(frozen=True)
class ProductData:
    left: Any
    right: Any
    vertex: Any
    proj1: Any
    proj2: Any


@dataclass(frozen=True)
class PushoutData:
    span: Span
    vertex: Any
    inj_left: Any
    inj_right: Any


@dataclass(frozen=True)
class CoproductData:
    objects: tuple
    vertex: Any
    injections: tuple


@dataclass(frozen=True)
class ColimitData:
    """Colimit of a finite diagram: objects plus arrows (src, dst, morphism)."""

    objects: tuple
    arrows: tuple
    vertex: Any
    legs: tuple


@dataclass(frozen=True)
class JoinStructure:
    left: Any
    right: Any
    mid: Any


@dataclass(frozen=True)
class AxiomWitnesses:
    terminal: Any
    interval: Any
    endpoint0: Any
    endpoint1: Any
    basepoint: Any
    swap: Any = None
    join: Optional[JoinStructure] = None
    contraction: Any = None
    label: str = ""


class Backend:
    """Interface implemented by each concrete category."""

    name = "abstract"

    def identity(self, x): raise NotImplementedError
    def compose(self, g, f): raise NotImplementedError
    def terminal(self): raise NotImplementedError
    def terminal_morphism(self, x): raise NotImplementedError
    def initial(self): raise NotImplementedError
    def initial_morphism(self, x): raise NotImplementedError
    def product(self, a, b) -> ProductData: raise NotImplementedError
    def pair(self, f, g, p: ProductData): raise NotImplementedError
    def pushout(self, s: Span) -> PushoutData: raise NotImplementedError
    def factor_through_pushout(self, p, cl, cr): raise NotImplementedError
    def coproduct(self, objs) -> CoproductData: raise NotImplementedError
    def copair(self, maps, c: CoproductData): raise NotImplementedError
    def factor_jointly_epic(self, vertex, legs, maps): raise NotImplementedError
    def hom(self, a, b, budget: Budget, constraints=(), injective=False) -> Iterator: raise NotImplementedError
    def inverse(self, f): raise NotImplementedError
    def is_monic(self, f) -> bool: raise NotImplementedError
    def points(self, x): raise NotImplementedError
    def maybe_isomorphic(self, a, b) -> bool: return True
    def census(self, x) -> dict: raise NotImplementedError
    def obj_to_json(self, x): raise NotImplementedError
    def mor_to_json(self, f): raise NotImplementedError


def _same_backend(*items):
    b = items[0].backend
    for it in items[1:]:
        if it.backend is not b:
            raise CategoryError("objects from different backends cannot be mixed")
    return b


# --- basic structure ------------------------------------------------------

def identity(x):
    return x.backend.identity(x)


def compose(g, *fs):
    """compose(g, f) = g∘f; extra arguments compose right to left."""
    out = g
    for f in fs:
        _same_backend(out, f)
        if f.cod != out.dom:
            raise CategoryError("codomain of the right factor differs from domain of the left")
        out = out.backend.compose(out, f)
    return out


def terminal(backend: Backend):
    return backend.terminal()


def terminal_morphism(x):
    return x.backend.terminal_morphism(x)


def initial(backend: Backend):
    return backend.initial()


def initial_morphism(x):
    return x.backend.initial_morphism(x)


@lru_cache(maxsize=4096)
def product(a, b) -> ProductData:
    _same_backend(a, b)
    return a.backend.product(a, b)


def pair(f, g, p: ProductData):
    _same_backend(f, g)
    if f.dom != g.dom:
        raise CategoryError("pairing needs a common domain")
    if f.cod != p.left or g.cod != p.right:
        raise CategoryError("pairing components do not land in the product factors")
    return f.backend.pair(f, g, p)


def product_map(f, g, pa: ProductData, pb: ProductData):
    """f×g : pa.vertex → pb.vertex."""
    return pair(compose(f, pa.proj1), compose(g, pa.proj2), pb)


@lru_cache(maxsize=4096)
def pushout(s: Span) -> PushoutData:
    return s.apex.backend.pushout(s)


def factor_through_pushout(p: PushoutData, cocone_left, cocone_right):
    _same_backend(cocone_left, cocone_right)
    if cocone_left.dom != p.inj_left.dom or cocone_right.dom != p.inj_right.dom:
        raise CategoryError("cocone legs do not start at the pushout legs' codomains")
    if cocone_left.cod != cocone_right.cod:
        raise CategoryError("cocone legs must share a codomain")
    if compose(cocone_left, p.span.left) != compose(cocone_right, p.span.right):
        raise CategoryError("cocone does not commute over the span")
    u = cocone_left.backend.factor_through_pushout(p, cocone_left, cocone_right)
    if compose(u, p.inj_left) != cocone_left or compose(u, p.inj_right) != cocone_right:
        raise InconsistencyError("pushout factorization failed its equations")
    return u


def coproduct(objs: Sequence) -> CoproductData:
    objs = tuple(objs)
    if not objs:
        raise CategoryError("coproduct of an empty sequence; use initial()")
    _same_backend(*objs)
    return objs[0].backend.coproduct(objs)


def copair(maps: Sequence, c: CoproductData):
    maps = tuple(maps)
    if len(maps) != len(c.objects):
        raise CategoryError("one map per coproduct summand is required")
    cod = maps[0].cod
    for m, o in zip(maps, c.objects):
        if m.dom != o or m.cod != cod:
            raise CategoryError("copairing components are ill-typed")
    return maps[0].backend.copair(maps, c)


def equal_morphisms(f, g) -> bool:
    _same_backend(f, g)
    if f.dom != g.dom or f.cod != g.cod:
        raise CategoryError("equality is only defined for parallel morphisms")
    return f == g


def inverse(f):
    """Two-sided inverse of f, or None when f is not invertible."""
    return f.backend.inverse(f)


def is_monic(f) -> bool:
    """Left-cancellable; levelwise injective in the shipped backends."""
    return f.backend.is_monic(f)


def points(x) -> list:
    """All morphisms 1 → x, in deterministic order."""
    return x.backend.points(x)


def constant(x, y, pt):
    """The constant morphism x → y with value pt: 1 → y."""
    return compose(pt, terminal_morphism(x))


def hom(a, b, budget=None, constraints: Iterable = (), injective: bool = False) -> Iterator:
    """Enumerate Hom(a, b) in a deterministic order.

    ``constraints`` is a sequence of pairs (i, r) with i: c → a and r: c → b,
    restricting the search to maps h with h∘i = r.
    """
    _same_backend(a, b)
    constraints = tuple(constraints)
    for i, r in constraints:
        if i.cod != a or r.cod != b or i.dom != r.dom:
            raise CategoryError("ill-typed hom constraint")
    return a.backend.hom(a, b, as_budget(budget), constraints, injective)


def hom_list(a, b, budget=None, **kw) -> list:
    return list(hom(a, b, budget, **kw))


def find_isomorphism(a, b, budget=None):
    """Return (f, f_inverse) for some isomorphism a → b, or None."""
    _same_backend(a, b)
    if not a.backend.maybe_isomorphic(a, b):
        return None
    for f in hom(a, b, budget, injective=True):
        g = inverse(f)
        if g is not None:
            return f, g
    return None


def colimit(objects: Sequence, arrows: Sequence) -> ColimitData:
    """Colimit of a finite diagram.

    ``arrows`` holds triples (src, dst, m) with m: objects[src] → objects[dst].
    Computed as a coequalizer of two maps out of a coproduct, the coequalizer
    itself being one pushout.
    """
    objects = tuple(objects)
    arrows = tuple(arrows)
    if not objects:
        raise CategoryError("empty diagram; use initial()")
    _same_backend(*objects)
    for s, d, m in arrows:
        if m.dom != objects[s] or m.cod != objects[d]:
            raise CategoryError(f"diagram arrow {s}->{d} is ill-typed")
    c = coproduct(objects)
    if not arrows:
        return ColimitData(objects, arrows, c.vertex, c.injections)
    doms = coproduct([m.dom for _, _, m in arrows])
    f = copair([compose(c.injections[d], m) for s, d, m in arrows], doms)
    g = copair([c.injections[s] for s, _, _ in arrows], doms)
    twice = coproduct([doms.vertex, doms.vertex])
    fg = copair([f, g], twice)
    fold = copair([identity(doms.vertex), identity(doms.vertex)], twice)
    po = pushout(Span(twice.vertex, fg, fold))
    legs = tuple(compose(po.inj_left, j) for j in c.injections)
    return ColimitData(objects, arrows, po.vertex, legs)


def factor_through_colimit(cd: ColimitData, cocone: Sequence):
    """Unique u with u∘legs[k] = cocone[k]; the cocone must commute."""
    cocone = tuple(cocone)
    for s, d, m in cd.arrows:
        if compose(cocone[d], m) != cocone[s]:
            raise CategoryError(f"cocone does not commute on arrow {s}->{d}")
    u = cocone[0].backend.factor_jointly_epic(cd.vertex, cd.legs, cocone)
    for leg, k in zip(cd.legs, cocone):
        if compose(u, leg) != k:
            raise InconsistencyError("colimit factorization failed its equations")
    return u


# --- axiom audit ------------------------------------------------------------

AXIOMS = ("A:C", "A:brace", "A:swap", "A:F1_join", "A:pushout", "A:1_0_cell", "A:1_contract")


@dataclass(frozen=True)
class AxiomEntry:
    axiom: str
    verdict: str                 # "pass", "fail" or "inconclusive"
    note: str = ""
    witnesses: tuple = ()
    counterexample: Optional[dict] = None

    def to_json(self):
        out = {"axiom": self.axiom, "verdict": self.verdict, "note": self.note}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class AxiomReport:
    label: str
    entries: tuple

    def verdicts(self) -> dict:
        return {e.axiom: e.verdict for e in self.entries}

    def entry(self, axiom: str) -> AxiomEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def to_json(self):
        return {"backend": self.label, "entries": [e.to_json() for e in self.entries]}


def _unique_factorizations(p: PushoutData, target, budget) -> bool:
    """Every commuting cocone into target factors through p exactly once."""
    for cl in hom(p.inj_left.dom, target, budget):
        for cr in hom(p.inj_right.dom, target, budget):
            if compose(cl, p.span.left) != compose(cr, p.span.right):
                continue
            sols = [u for u in hom(p.vertex, target, budget)
                    if compose(u, p.inj_left) == cl and compose(u, p.inj_right) == cr]
            if len(sols) != 1 or factor_through_pushout(p, cl, cr) != sols[0]:
                return False
    return True


def _audit_terminal(w, budget):
    one, f1 = w.terminal, w.interval
    corpus = [one, f1, product(f1, f1).vertex]
    for x in corpus:
        if len(hom_list(x, one, budget)) != 1:
            return AxiomEntry("A:C", "fail", "terminal object admits several maps from a test object")
    p = product(f1, f1)
    for f in hom(f1, f1, budget):
        for g in hom(f1, f1, budget):
            sols = [u for u in hom(f1, p.vertex, budget)
                    if compose(p.proj1, u) == f and compose(p.proj2, u) == g]
            if sols != [pair(f, g, p)]:
                return AxiomEntry("A:C", "fail", "F_1×F_1 fails the product universal property")
    return AxiomEntry("A:C", "pass", "terminal object and F_1×F_1 checked by exhaustive search")


def _audit_brace(w, budget):
    for e in (w.endpoint0, w.endpoint1):
        if e.dom != w.terminal or e.cod != w.interval:
            return AxiomEntry("A:brace", "fail", "endpoints must be maps 1 → F_1")
    if w.endpoint0 == w.endpoint1:
        return AxiomEntry("A:brace", "fail", "the two endpoints coincide")
    return AxiomEntry("A:brace", "pass", "F_1 with two distinct endpoints",
                      (w.endpoint0, w.endpoint1))


def _audit_swap(w, budget):
    s = w.swap
    if s is None:
        note = "fail: witness absent"
        found = [f for f in hom(w.interval, w.interval, budget)
                 if compose(f, w.endpoint0) == w.endpoint1 and compose(f, w.endpoint1) == w.endpoint0]
        if not found:
            note += "; no endomorphism of F_1 exchanges the endpoints"
        return AxiomEntry("A:swap", "fail", note)
    if s.dom != w.interval or s.cod != w.interval:
        return AxiomEntry("A:swap", "fail", "swap must be an endomorphism of F_1")
    if compose(s, s) != identity(w.interval):
        return AxiomEntry("A:swap", "fail", "swap is not an involution")
    if compose(s, w.endpoint0) != w.endpoint1:
        return AxiomEntry("A:swap", "fail", "swap does not exchange the endpoints")
    return AxiomEntry("A:swap", "pass", "involution exchanging the endpoints", (s,))


def _audit_join(w, budget):
    f1 = w.interval
    p = pushout(Span(w.terminal, w.endpoint0, w.endpoint1))
    cex = {"join": p.vertex.backend.census(p.vertex), "interval": f1.backend.census(f1)}
    if w.join is not None:
        j = w.join
        if compose(j.left, w.endpoint0) != compose(j.right, w.endpoint1) or compose(j.left, w.endpoint0) != j.mid:
            return AxiomEntry("A:F1_join", "fail", "supplied join square does not commute", (), cex)
    found = find_isomorphism(p.vertex, f1, budget)
    if found is None:
        return AxiomEntry("A:F1_join", "fail",
                          "the two halves glued end to end are not isomorphic to F_1; "
                          "the basepoint witness stands in for the midpoint", (), cex)
    phi, _ = found
    mid = compose(phi, p.inj_left, w.endpoint0)
    return AxiomEntry("A:F1_join", "pass", "join is isomorphic to F_1",
                      (compose(phi, p.inj_left), compose(phi, p.inj_right), mid))


def _audit_pushout(w, budget):
    one, f1 = w.terminal, w.interval
    spans = [Span(one, w.endpoint0, w.endpoint1),
             Span(one, w.endpoint1, identity(one)),
             Span(f1, identity(f1), terminal_morphism(f1))]
    for s in spans:
        p = pushout(s)
        if compose(p.inj_left, s.left) != compose(p.inj_right, s.right):
            return AxiomEntry("A:pushout", "fail", "pushout square does not commute")
        if not _unique_factorizations(p, f1, budget):
            return AxiomEntry("A:pushout", "fail", "pushout is not universal for cocones into F_1")
    return AxiomEntry("A:pushout", "pass", f"{len(spans)} spans checked against all cocones into F_1")


def _audit_zero_cell(w, budget):
    one = w.terminal
    if hom_list(one, one, budget) != [identity(one)] or terminal_morphism(one) != identity(one):
        return AxiomEntry("A:1_0_cell", "fail", "F_0 is not terminal")
    return AxiomEntry("A:1_0_cell", "pass", "F_0 is the terminal object")


def _audit_contract(w, budget):
    c = w.contraction
    if c is None:
        return AxiomEntry("A:1_contract", "fail", "fail: witness absent")
    f1 = w.interval
    cyl = product(f1, f1)
    if c.dom != cyl.vertex or c.cod != f1:
        return AxiomEntry("A:1_contract", "fail", "contraction must be a map F_1×F_1 → F_1")
    bang = terminal_morphism(f1)
    at0 = compose(c, pair(identity(f1), compose(w.endpoint0, bang), cyl))
    at1 = compose(c, pair(identity(f1), compose(w.endpoint1, bang), cyl))
    if at0 != identity(f1):
        return AxiomEntry("A:1_contract", "fail", "contraction is not the identity at endpoint 0")
    consts = [compose(x, bang) for x in points(f1)]
    if at1 not in consts:
        return AxiomEntry("A:1_contract", "fail", "contraction is not constant at endpoint 1")
    return AxiomEntry("A:1_contract", "pass", "contraction restricts to id and to a constant", (c,))


_AUDITS = {"A:C": _audit_terminal, "A:brace": _audit_brace, "A:swap": _audit_swap,
           "A:F1_join": _audit_join, "A:pushout": _audit_pushout,
           "A:1_0_cell": _audit_zero_cell, "A:1_contract": _audit_contract}


def audit_axioms(w: AxiomWitnesses, budget=None) -> AxiomReport:
    """One verdict per axiom; a search that runs out of budget is inconclusive.

    Verdicts on the shipped witness bundles:

        axiom         finset   sset
        A:C           pass     pass
        A:brace       pass     pass
        A:swap        pass     fail (witness absent)
        A:F1_join     fail     fail
        A:pushout     pass     pass
        A:1_0_cell    pass     pass
        A:1_contract  pass     pass

    The join of two intervals at an endpoint has 3 points in finset against
    2 for F_1, and 2 nondegenerate edges in sset against 1.
    """
    limit = budget.limit if isinstance(budget, Budget) else budget
    entries = []
    for ax in AXIOMS:
        try:
            entries.append(_AUDITS[ax](w, Budget(limit)))
        except BudgetExceeded as e:
            entries.append(AxiomEntry(ax, "inconclusive", str(e)))
    return AxiomReport(w.label, tuple(entries))
