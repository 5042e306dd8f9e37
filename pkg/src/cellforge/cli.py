"""Command line entry point.

Exit codes: 0 everything passed, 1 a verification failed, 2 bad input,
3 a bounded search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Optional

from .kernel import BudgetExceeded, CategoryError, audit_axioms

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    backend: str
    N: int
    D: int
    budget: Optional[int]
    seed: int
    out: Optional[str]


def _config(args) -> RunConfig:
    return RunConfig(args.backend, args.n, args.dim, args.budget, args.seed, args.out)


def witnesses(cfg: RunConfig):
    if cfg.backend == "finset":
        from .finset import fs_witnesses
        return fs_witnesses()
    from .sset import ss_witnesses
    return ss_witnesses(cfg.D)


def tower(cfg: RunConfig, N: Optional[int] = None):
    from .cells import build_tower
    return build_tower(cfg.N if N is None else N, witnesses(cfg), cfg.budget)


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})")


def _object(cfg: RunConfig, obj, path: str):
    """A backend object from finite-set, simplicial-set or ASC JSON."""
    from .complexes import ParseError, asc_from_json, asc_to_sset
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        if "vertices" in obj:
            a = asc_from_json(obj)
            if cfg.backend == "finset":
                raise InputError(f"{path}: an ASC needs --backend sset")
            return asc_to_sset(a, cfg.D)
        if cfg.backend == "finset":
            from .finset import fs_from_json
            return fs_from_json(obj)
        from .sset import ss_from_json
        x = ss_from_json(obj)
    except ParseError as e:
        raise InputError(f"{path}: field {e}")
    except CategoryError as e:
        raise InputError(f"{path}: {e}")
    if x.dim != cfg.D:
        raise InputError(f"{path}: field dim: object is truncated at {x.dim} but --dim is {cfg.D}")
    return x


def _morphism(cfg: RunConfig, obj, path: str):
    try:
        if cfg.backend == "finset":
            from .finset import fs_map_from_json
            return fs_map_from_json(obj)
        from .sset import ss_map_from_json
        f = ss_map_from_json(obj)
    except (CategoryError, TypeError) as e:
        raise InputError(f"{path}: {e}")
    if f.dom.dim != cfg.D:
        raise InputError(f"{path}: field dim: map is truncated at {f.dom.dim} but --dim is {cfg.D}")
    return f


# --- commands ----------------------------------------------------------------------

def cmd_cells(cfg: RunConfig, args):
    from .cells import compare_with_simplex, tower_to_json
    t = tower(cfg)
    rep = {"tower": tower_to_json(t)}
    if cfg.backend == "finset":
        o = compare_with_simplex(t)
        rep["checks"] = {"simplex_tables": o.to_json()}
        ok = o.ok
    else:
        from .sset import ss_validate
        v = [ss_validate(c).to_json() for c in t.cells]
        rep["checks"] = {"ss_validate": v}
        ok = all(x["ok"] for x in v)
    return rep, ok


def _functor_words(t, seed: int, trials: int = 50):
    """Random composable pairs of Δ-maps: F(ψ∘φ) = F(ψ)∘F(φ)."""
    from .cells import CosimplicialFunctor, DeltaMorphism, apply_functor
    from .kernel import compose
    rng = random.Random(seed)
    cf = CosimplicialFunctor(t)

    def rand_map(m, n):
        return DeltaMorphism(m, n, sorted(rng.randint(0, n) for _ in range(m + 1)))

    bad = []
    for k in range(trials):
        a, b, c = (rng.randint(0, t.N) for _ in range(3))
        phi, psi = rand_map(a, b), rand_map(b, c)
        if apply_functor(cf, psi.after(phi)) != compose(apply_functor(cf, psi), apply_functor(cf, phi)):
            bad.append({"phi": list(phi.images), "psi": list(psi.images)})
    return {"ok": not bad, "checked": trials, "failures": bad}


def cmd_verify(cfg: RunConfig, args):
    from .cells import AUX_FAMILIES, CORRECTED_FAMILIES, SIMPLICIAL_FAMILIES, verify_simplicial_identities
    from .convexity import verify_convexity
    t = tower(cfg)
    ids = verify_simplicial_identities(t, aux=True)
    cap = args.max_cone if args.max_cone is not None else (3 if cfg.backend == "finset" else 2)
    top = min(t.N - 1, cap)
    conv = {}
    for m in range(top + 1):
        r = verify_convexity(t, m, max_n=top, budget=cfg.budget)
        conv[str(m)] = r.to_json()
    words = _functor_words(t, cfg.seed)
    sections = {
        "simplicial": ids.ok(SIMPLICIAL_FAMILIES),
        "auxiliary": ids.ok(AUX_FAMILIES),
        "corrected": ids.ok(CORRECTED_FAMILIES),
        "convexity": all(c["ok"] for c in conv.values()),
        "functor_words": words["ok"],
    }
    rep = {"identities": ids.to_json(), "convexity": conv, "functor_words": words,
           "sections": sections}
    return rep, all(sections.values())


def cmd_audit(cfg: RunConfig, args):
    rep = audit_axioms(witnesses(cfg), cfg.budget)
    verdicts = rep.verdicts()
    if "inconclusive" in verdicts.values():
        raise BudgetExceeded("axiom audit inconclusive: " +
                             ", ".join(k for k, v in verdicts.items() if v == "inconclusive"))
    return rep.to_json(), all(v == "pass" for v in verdicts.values())


def cmd_homology(cfg: RunConfig, args):
    from .cells import CosimplicialFunctor
    from .homology import nerve_homology
    x = _object(cfg, _load(args.object), args.object)
    t = tower(cfg, max(cfg.N, args.max_degree + 1))
    groups = nerve_homology(CosimplicialFunctor(t), x, args.max_degree, cfg.budget)
    return {"object": x.backend.census(x),
            "homology": [{"degree": g.degree, **g.to_json(), "group": str(g)} for g in groups]}, True


def cmd_realize(cfg: RunConfig, args):
    from .cells import CosimplicialFunctor
    from .complexes import (ParseError, asc_from_json, asc_to_sset, gsc_colimit, gsc_from_json,
                            gsc_to_asc, realize)
    from .kernel import find_isomorphism
    data = _load(args.complex)
    try:
        if isinstance(data, dict) and "levels" in data and "arrows" in data:
            g = gsc_from_json(data)
            a = gsc_to_asc(g)
        else:
            g = None
            a = asc_from_json(data)
    except ParseError as e:
        raise InputError(f"{args.complex}: field {e}")
    except ValueError as e:
        raise InputError(f"{args.complex}: {e}")
    dim = max(a.dimension, 1)
    t = tower(cfg, max(cfg.N, dim))
    x = asc_to_sset(a, max(cfg.D, dim))
    r = realize(CosimplicialFunctor(t), x)
    be = t.backend
    rep = {"complex": {"vertices": len(a.vertices), "faces": len(a.faces), "dimension": a.dimension},
           "realization": be.census(r.vertex)}
    ok = True
    if g is not None:
        c = gsc_colimit(t, g)
        iso = find_isomorphism(c.vertex, r.vertex, cfg.budget)
        rep["diagram_colimit"] = be.census(c.vertex)
        rep["routes_agree"] = iso is not None
        ok = iso is not None
    return rep, ok


def cmd_homotopy(cfg: RunConfig, args):
    from .homotopy import are_homotopic
    f = _morphism(cfg, _load(args.f), args.f)
    g = _morphism(cfg, _load(args.g), args.g)
    if f.dom != g.dom or f.cod != g.cod:
        raise InputError("f and g must be parallel morphisms")
    h = are_homotopic(f, g, cfg.budget)
    rep = {"homotopic": h is not None}
    if h is not None:
        rep["witness"] = f.backend.mor_to_json(h.H)
    return rep, h is not None


COMMANDS = {"cells": cmd_cells, "verify": cmd_verify, "audit": cmd_audit,
            "homology": cmd_homology, "realize": cmd_realize, "homotopy": cmd_homotopy}


def _positive(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=("finset", "sset"), default="finset")
    common.add_argument("--n", type=int, default=3, help="tower height N (≥ 1)")
    common.add_argument("--dim", type=int, default=5, help="truncation D for simplicial sets (≥ 2)")
    common.add_argument("--budget", type=_positive, default=None,
                        help="maximum number of candidate assignments per search")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write the JSON report here instead of stdout")

    p = argparse.ArgumentParser(prog="cellforge", description="Cell towers, homotopy and homology in finite categories.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("cells", parents=[common], help="build and serialize the cell tower")
    v = sub.add_parser("verify", parents=[common], help="check simplicial identities and convexity")
    v.add_argument("--max-cone", type=int, default=None, help="largest n and m for convexity checks")
    sub.add_parser("audit", parents=[common], help="audit the axiom witnesses")
    h = sub.add_parser("homology", parents=[common], help="homology of an object's nerve")
    h.add_argument("--object", required=True)
    h.add_argument("--max-degree", type=int, default=2)
    r = sub.add_parser("realize", parents=[common], help="realize an ASC or level diagram")
    r.add_argument("--complex", required=True)
    ht = sub.add_parser("homotopy", parents=[common], help="search for a homotopy f ≃ g")
    ht.add_argument("--f", required=True)
    ht.add_argument("--g", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.error("--n must be at least 1")
    if args.backend == "sset" and args.dim < 2:
        parser.error("--dim must be at least 2 for the simplicial backend")
    if getattr(args, "max_degree", 0) < 0:
        parser.error("--max-degree must be non-negative")
    cfg = _config(args)
    try:
        body, ok = COMMANDS[args.command](cfg, args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    report = {"command": args.command,
              "config": {"backend": cfg.backend, "N": cfg.N, "D": cfg.D if cfg.backend == "sset" else None,
                         "budget": cfg.budget, "seed": cfg.seed},
              "verdict": "pass" if ok else "fail", **body}
    text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
