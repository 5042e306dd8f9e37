"""The wedge construction Wedge(X) = (X×F_1) with X×{endpoint 1} collapsed to a point."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from .kernel import (
    AxiomWitnesses,
    CategoryError,
    InconsistencyError,
    ProductData,
    PushoutData,
    Span,
    compose,
    factor_through_pushout,
    identity,
    inverse,
    pair,
    product,
    pushout,
    terminal_morphism,
)


@dataclass(frozen=True)
class WedgeData:
    input: Any
    vertex: Any
    top: Any       # 1 → Wedge(X)
    pinch: Any     # X×F_1 → Wedge(X)
    bottom: Any    # X → Wedge(X)
    cylinder: ProductData
    square: PushoutData
    witnesses: AxiomWitnesses


def at_end(x, cyl: ProductData, end):
    """⟨id, end∘!⟩ : X → X×F_1, the inclusion of X at an endpoint."""
    return pair(identity(x), compose(end, terminal_morphism(x)), cyl)


@lru_cache(maxsize=1024)
def wedge_object(x, w: AxiomWitnesses) -> WedgeData:
    cyl = product(x, w.interval)
    top_leg = terminal_morphism(x)
    side_leg = at_end(x, cyl, w.endpoint1)
    sq = pushout(Span(x, top_leg, side_leg))
    top, pinch = sq.inj_left, sq.inj_right
    bottom = compose(pinch, at_end(x, cyl, w.endpoint0))
    if compose(pinch, side_leg) != compose(top, top_leg):
        raise InconsistencyError("wedge square does not commute")
    return WedgeData(x, sq.vertex, top, pinch, bottom, cyl, sq, w)


def wedge_morphism(phi, wa: WedgeData, wb: WedgeData):
    """Wedge(φ): the factorization of (Top_b, Pinch_b∘(φ×F_1)) through wa's square."""
    if phi.dom != wa.input or phi.cod != wb.input:
        raise CategoryError("φ must run from wa.input to wb.input")
    phi_cyl = pair(compose(phi, wa.cylinder.proj1), wa.cylinder.proj2, wb.cylinder)
    return factor_through_pushout(wa.square, wb.top, compose(wb.pinch, phi_cyl))


def flatten_from_contraction(w: WedgeData, contraction, pt):
    """Factor the cocone (pt, contraction) through the wedge square."""
    x = w.input
    if contraction.dom != w.cylinder.vertex or contraction.cod != x:
        raise CategoryError("contraction must be a map X×F_1 → X")
    if pt.cod != x:
        raise CategoryError("pt must be a point of X")
    wit = w.witnesses
    if compose(contraction, at_end(x, w.cylinder, wit.endpoint0)) != identity(x):
        raise CategoryError("contraction does not restrict to the identity at endpoint 0")
    if compose(contraction, at_end(x, w.cylinder, wit.endpoint1)) != compose(pt, terminal_morphism(x)):
        raise CategoryError("contraction does not restrict to the constant at endpoint 1")
    return factor_through_pushout(w.square, pt, contraction)


def flatten_contractible(x, contraction, pt, w: WedgeData):
    """Flatten_X : Wedge(X) → X with Flatten∘Bottom = id and Flatten∘Pinch = contraction."""
    if w.input != x:
        raise CategoryError("wedge data belongs to a different object")
    u = flatten_from_contraction(w, contraction, pt)
    if compose(u, w.bottom) != identity(x):
        raise InconsistencyError("Flatten is not a left inverse of Bottom")
    return u


def flatten_at_point(x, pt, w: WedgeData, contraction=None, budget=None):
    """The map u: Wedge(x) → x with u∘bottom = id and u∘top = pt.

    Built from a contraction of x onto pt; when none is given, one is
    searched for.
    """
    if contraction is None:
        from .homotopy import contraction_to
        contraction = contraction_to(x, pt, w.witnesses, budget=budget)
        if contraction is None:
            raise CategoryError("no contraction of x onto the requested point exists")
    u = flatten_contractible(x, contraction, pt, w)
    if compose(u, w.top) != pt:
        raise InconsistencyError("Flatten does not send the apex to the point")
    return u


def derive_wedge_contraction(w: WedgeData, c1):
    """Contraction of Wedge(X) onto its apex: [x, s], t ↦ [x, C_1(s, t)].

    Built by factoring through Wedge(X)×F_1, presented as the pushout of
    F_1 ← X×F_1 → (X×F_1)×F_1, and inverting the comparison map.
    """
    wit = w.witnesses
    x, f1 = w.input, wit.interval
    cyl = w.cylinder
    sq1 = product(f1, f1)
    if c1.dom != sq1.vertex or c1.cod != f1:
        raise CategoryError("interval contraction must be F_1×F_1 → F_1")
    one_f1 = terminal_morphism(f1)
    e1_const = compose(wit.endpoint1, one_f1)
    if compose(c1, pair(e1_const, identity(f1), sq1)) != e1_const:
        raise CategoryError("interval contraction must fix endpoint 1")
    big = product(cyl.vertex, f1)                       # (X×F_1)×F_1
    apex = cyl                                          # X×F_1 standing for (X×1)×F_1
    left = apex.proj2
    right = pair(pair(apex.proj1, compose(wit.endpoint1, terminal_morphism(apex.vertex)), cyl),
                 apex.proj2, big)
    sq = pushout(Span(apex.vertex, left, right))
    q = product(w.vertex, f1)                           # Wedge(X)×F_1
    kappa = factor_through_pushout(
        sq,
        pair(compose(w.top, one_f1), identity(f1), q),
        pair(compose(w.pinch, big.proj1), big.proj2, q))
    kappa_inv = inverse(kappa)
    if kappa_inv is None:
        raise InconsistencyError("Wedge(X)×F_1 is not the expected pushout")
    s_coord = compose(cyl.proj2, big.proj1)
    moved = pair(compose(cyl.proj1, big.proj1), compose(c1, pair(s_coord, big.proj2, sq1)), cyl)
    u = factor_through_pushout(sq, compose(w.top, one_f1), compose(w.pinch, moved))
    c = compose(u, kappa_inv)
    v = w.vertex
    if compose(c, at_end(v, q, wit.endpoint0)) != identity(v):
        raise InconsistencyError("derived contraction is not the identity at endpoint 0")
    if compose(c, at_end(v, q, wit.endpoint1)) != compose(w.top, terminal_morphism(v)):
        raise InconsistencyError("derived contraction is not constant at endpoint 1")
    return c
