"""Finite simplicial sets truncated at a dimension bound D.

Simplices are dense integer ids per level.  ``faces[n][i]`` maps level n to
level n-1 (1 ≤ n ≤ D) and ``degens[n][i]`` maps level n to level n+1
(0 ≤ n < D).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .kernel import (
    AxiomWitnesses,
    Backend,
    CategoryError,
    CoproductData,
    InconsistencyError,
    Mor,
    Obj,
    ProductData,
    PushoutData,
    Span,
)
from .unionfind import UnionFind


class SSet(Obj):
    __slots__ = ("dim", "sizes", "faces", "degens", "_hash", "_nondeg", "_dec")

    def __init__(self, dim, sizes, faces, degens, check=True):
        self.dim = dim
        self.sizes = tuple(sizes)
        self.faces = tuple(tuple(tuple(t) for t in lvl) for lvl in faces)
        self.degens = tuple(tuple(tuple(t) for t in lvl) for lvl in degens)
        self._nondeg = None
        self._dec = None
        self._shape_check()
        self._hash = hash(("sset", self.dim, self.sizes, self.faces, self.degens))
        if check:
            rep = ss_validate(self)
            if not rep.ok:
                raise CategoryError(f"simplicial identities violated: {rep.violations[0]}")

    def _shape_check(self):
        D = self.dim
        if D < 0 or len(self.sizes) != D + 1:
            raise CategoryError("one level size per degree 0..D is required")
        if len(self.faces) != D + 1 or len(self.degens) != D + 1:
            raise CategoryError("face/degeneracy tables must be indexed by level 0..D")
        for n in range(D + 1):
            nf = n + 1 if n >= 1 else 0
            if len(self.faces[n]) != nf:
                raise CategoryError(f"level {n} needs {nf} face tables")
            for t in self.faces[n]:
                if len(t) != self.sizes[n] or any(not 0 <= v < self.sizes[n - 1] for v in t):
                    raise CategoryError(f"face table at level {n} is not a total map")
            nd = n + 1 if n < D else 0
            if len(self.degens[n]) != nd:
                raise CategoryError(f"level {n} needs {nd} degeneracy tables")
            for t in self.degens[n]:
                if len(t) != self.sizes[n] or any(not 0 <= v < self.sizes[n + 1] for v in t):
                    raise CategoryError(f"degeneracy table at level {n} is not a total map")

    @property
    def backend(self):
        return SSET

    def __eq__(self, other):
        return self is other or (isinstance(other, SSet) and self._hash == other._hash
                                 and self.dim == other.dim and self.sizes == other.sizes
                                 and self.faces == other.faces and self.degens == other.degens)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SSet(dim={self.dim}, nondegenerate={self.nondegenerate_counts()})"

    def nondegenerate(self, n: int) -> tuple:
        """Ids of the nondegenerate simplices at level n."""
        if self._nondeg is None:
            nd = []
            for k in range(self.dim + 1):
                if k == 0:
                    nd.append(tuple(range(self.sizes[0])))
                    continue
                image = set()
                for t in self.degens[k - 1]:
                    image.update(t)
                nd.append(tuple(x for x in range(self.sizes[k]) if x not in image))
            self._nondeg = tuple(nd)
        return self._nondeg[n]

    def nondegenerate_counts(self) -> list:
        return [len(self.nondegenerate(n)) for n in range(self.dim + 1)]

    def decomposition(self, n: int, x: int):
        """For degenerate x at level n, some (i, w) with s_i(w) = x; else None."""
        if self._dec is None:
            dec = [dict()]
            for k in range(1, self.dim + 1):
                d = {}
                for i, t in enumerate(self.degens[k - 1]):
                    for w, y in enumerate(t):
                        if y not in d:
                            d[y] = (i, w)
                dec.append(d)
            self._dec = dec
        return self._dec[n].get(x)


class SMap(Mor):
    __slots__ = ("dom", "cod", "levels", "_hash")

    def __init__(self, dom: SSet, cod: SSet, levels):
        self.dom = dom
        self.cod = cod
        self.levels = tuple(tuple(l) for l in levels)
        if dom.dim != cod.dim:
            raise CategoryError("simplicial maps need equal dimension bounds")
        if len(self.levels) != dom.dim + 1:
            raise CategoryError("one level map per degree is required")
        for n, l in enumerate(self.levels):
            if len(l) != dom.sizes[n]:
                raise CategoryError(f"level map {n} is not total")
        self._hash = hash((dom, cod, self.levels))

    @property
    def backend(self):
        return SSET

    def __eq__(self, other):
        return self is other or (isinstance(other, SMap) and self._hash == other._hash
                                 and self.levels == other.levels and self.dom == other.dom
                                 and self.cod == other.cod)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SMap(vertices={list(self.levels[0])})"


def smap(dom, cod, levels, check=True) -> SMap:
    """Build a simplicial map, verifying naturality unless check=False."""
    f = SMap(dom, cod, levels)
    if check:
        bad = map_violations(f)
        if bad:
            raise CategoryError(f"not a simplicial map: {bad[0]}")
    return f


def map_violations(f: SMap, limit: int = 1) -> list:
    a, b, L = f.dom, f.cod, f.levels
    out = []
    for n in range(a.dim + 1):
        if n >= 1:
            for i in range(n + 1):
                fa, fb = a.faces[n][i], b.faces[n][i]
                for x in range(a.sizes[n]):
                    if L[n - 1][fa[x]] != fb[L[n][x]]:
                        out.append(f"face d_{i} at level {n}, simplex {x}")
                        if len(out) >= limit:
                            return out
        if n < a.dim:
            for i in range(n + 1):
                sa, sb = a.degens[n][i], b.degens[n][i]
                for x in range(a.sizes[n]):
                    if L[n + 1][sa[x]] != sb[L[n][x]]:
                        out.append(f"degeneracy s_{i} at level {n}, simplex {x}")
                        if len(out) >= limit:
                            return out
    return out


# --- validation -----------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    relation: str
    n: int
    i: int
    j: int
    simplex: int

    def __str__(self):
        return f"{self.relation} (n={self.n}, i={self.i}, j={self.j}) fails at simplex {self.simplex}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    checked: int
    violations: tuple

    def to_json(self):
        return {"ok": self.ok, "checked": self.checked,
                "violations": [dict(relation=v.relation, n=v.n, i=v.i, j=v.j, simplex=v.simplex)
                               for v in self.violations]}


def ss_validate(x: SSet, max_violations: int = 1000) -> ValidationReport:
    """Check the simplicial identities on every simplex.

    Relations (x at level n):
      dd: d_i d_j = d_{j-1} d_i          (i < j)
      ds: d_i s_j = s_{j-1} d_i          (i < j)
      ds_id: d_j s_j = id = d_{j+1} s_j
      ds_hi: d_i s_j = s_j d_{i-1}       (i > j+1)
      ss: s_i s_j = s_{j+1} s_i          (i ≤ j)
    """
    D, F, S = x.dim, x.faces, x.degens
    viol = []
    checked = 0

    def bad(rel, n, i, j, k):
        if len(viol) < max_violations:
            viol.append(Violation(rel, n, i, j, k))

    for n in range(D + 1):
        size = x.sizes[n]
        if n >= 2:
            for j in range(n + 1):
                for i in range(j):
                    a1, a2 = F[n][j], F[n - 1][i]
                    b1, b2 = F[n][i], F[n - 1][j - 1]
                    for k in range(size):
                        checked += 1
                        if a2[a1[k]] != b2[b1[k]]:
                            bad("dd", n, i, j, k)
        if n < D:
            for j in range(n + 1):
                s = S[n][j]
                up = F[n + 1]
                for i in range(n + 2):
                    for k in range(size):
                        checked += 1
                        lhs = up[i][s[k]]
                        if i in (j, j + 1):
                            if lhs != k:
                                bad("ds_id", n, i, j, k)
                        elif i < j:
                            if lhs != S[n - 1][j - 1][F[n][i][k]]:
                                bad("ds", n, i, j, k)
                        else:
                            if lhs != S[n - 1][j][F[n][i - 1][k]]:
                                bad("ds_hi", n, i, j, k)
        if n + 1 < D:
            for j in range(n + 1):
                for i in range(j + 1):
                    for k in range(size):
                        checked += 1
                        if S[n + 1][i][S[n][j][k]] != S[n + 1][j + 1][S[n][i][k]]:
                            bad("ss", n, i, j, k)
    return ValidationReport(not viol, checked, tuple(viol))


# --- constructions ----------------------------------------------------------

def _point(D):
    return SSet(D, [1] * (D + 1),
                [[] if n == 0 else [[0]] * (n + 1) for n in range(D + 1)],
                [[[0]] * (n + 1) if n < D else [] for n in range(D + 1)], check=False)


def _empty(D):
    return SSet(D, [0] * (D + 1),
                [[] if n == 0 else [[]] * (n + 1) for n in range(D + 1)],
                [[[]] * (n + 1) if n < D else [] for n in range(D + 1)], check=False)


def from_vertex_sequences(nverts: int, allowed, D: int, check=True):
    """Simplicial set whose n-simplices are nondecreasing vertex sequences
    of length n+1 whose underlying set satisfies ``allowed``.  Returns the
    object and the per-level lists of sequences (in id order)."""
    levels = []
    for n in range(D + 1):
        seqs = [s for s in itertools.combinations_with_replacement(range(nverts), n + 1)
                if allowed(frozenset(s))]
        levels.append(seqs)
    index = [{s: k for k, s in enumerate(l)} for l in levels]
    faces, degens = [], []
    for n in range(D + 1):
        if n == 0:
            faces.append([])
        else:
            faces.append([[index[n - 1][s[:i] + s[i + 1:]] for s in levels[n]] for i in range(n + 1)])
        if n < D:
            degens.append([[index[n + 1][s[:i + 1] + s[i:]] for s in levels[n]] for i in range(n + 1)])
        else:
            degens.append([])
    x = SSet(D, [len(l) for l in levels], faces, degens, check=check)
    return x, levels


def standard_simplex(k: int, D: int) -> SSet:
    """Δ[k] truncated at D; n-simplices are nondecreasing tuples in lexicographic order."""
    if k < 0 or D < 0:
        raise CategoryError("Δ[k] needs k, D ≥ 0")
    return from_vertex_sequences(k + 1, lambda s: True, D)[0]


def simplex_sequences(k: int, D: int) -> list:
    return from_vertex_sequences(k + 1, lambda s: True, D, check=False)[1]


class SSetBackend(Backend):
    name = "sset"

    def __init__(self):
        self._points = {}
        self._empties = {}

    def point(self, D):
        if D not in self._points:
            self._points[D] = _point(D)
        return self._points[D]

    def empty(self, D):
        if D not in self._empties:
            self._empties[D] = _empty(D)
        return self._empties[D]

    def identity(self, x):
        return SMap(x, x, [range(s) for s in x.sizes])

    def compose(self, g, f):
        return SMap(f.dom, g.cod, [[gl[v] for v in fl] for gl, fl in zip(g.levels, f.levels)])

    def terminal(self):
        raise CategoryError("the simplicial backend needs a dimension bound; use point(D)")

    def terminal_morphism(self, x):
        return SMap(x, self.point(x.dim), [[0] * s for s in x.sizes])

    def initial(self):
        raise CategoryError("the simplicial backend needs a dimension bound; use empty(D)")

    def initial_morphism(self, x):
        return SMap(self.empty(x.dim), x, [[] for _ in x.sizes])

    def product(self, a, b):
        if a.dim != b.dim:
            raise CategoryError("mismatched dimension bounds")
        D = a.dim
        sizes = [a.sizes[n] * b.sizes[n] for n in range(D + 1)]
        faces, degens = [], []
        for n in range(D + 1):
            if n == 0:
                faces.append([])
            else:
                nb1 = b.sizes[n - 1]
                faces.append([[fa[p] * nb1 + fb[q] for p in range(a.sizes[n]) for q in range(b.sizes[n])]
                              for fa, fb in zip(a.faces[n], b.faces[n])])
            if n < D:
                nb1 = b.sizes[n + 1]
                degens.append([[sa[p] * nb1 + sb[q] for p in range(a.sizes[n]) for q in range(b.sizes[n])]
                               for sa, sb in zip(a.degens[n], b.degens[n])])
            else:
                degens.append([])
        v = SSet(D, sizes, faces, degens, check=False)
        p1 = SMap(v, a, [[p for p in range(a.sizes[n]) for _ in range(b.sizes[n])] for n in range(D + 1)])
        p2 = SMap(v, b, [[q for _ in range(a.sizes[n]) for q in range(b.sizes[n])] for n in range(D + 1)])
        return ProductData(a, b, v, p1, p2)

    def pair(self, f, g, p):
        b = p.right
        return SMap(f.dom, p.vertex, [[x * b.sizes[n] + y for x, y in zip(fl, gl)]
                                      for n, (fl, gl) in enumerate(zip(f.levels, g.levels))])

    def pushout(self, s: Span):
        lc, rc = s.left.cod, s.right.cod
        if lc.dim != rc.dim:
            raise CategoryError("mismatched dimension bounds")
        D = lc.dim
        reps_l, cls_l = [], []
        for n in range(D + 1):
            nl = lc.sizes[n]
            uf = UnionFind(nl + rc.sizes[n])
            for a, b in zip(s.left.levels[n], s.right.levels[n]):
                uf.union(a, nl + b)
            reps, cls = uf.classes()
            reps_l.append(reps)
            cls_l.append(cls)
        v = _quotient_structure(D, [lc, rc], reps_l, cls_l)
        il = SMap(lc, v, [cls_l[n][:lc.sizes[n]] for n in range(D + 1)])
        ir = SMap(rc, v, [cls_l[n][lc.sizes[n]:] for n in range(D + 1)])
        return PushoutData(s, v, il, ir)

    def factor_through_pushout(self, p, cl, cr):
        return self.factor_jointly_epic(p.vertex, (p.inj_left, p.inj_right), (cl, cr))

    def coproduct(self, objs):
        D = objs[0].dim
        if any(o.dim != D for o in objs):
            raise CategoryError("mismatched dimension bounds")
        sizes = [sum(o.sizes[n] for o in objs) for n in range(D + 1)]
        faces, degens = [], []
        offs = [[0] * len(objs) for _ in range(D + 1)]
        for n in range(D + 1):
            acc = 0
            for k, o in enumerate(objs):
                offs[n][k] = acc
                acc += o.sizes[n]
        for n in range(D + 1):
            if n == 0:
                faces.append([])
            else:
                faces.append([[offs[n - 1][k] + v for k, o in enumerate(objs) for v in o.faces[n][i]]
                              for i in range(n + 1)])
            if n < D:
                degens.append([[offs[n + 1][k] + v for k, o in enumerate(objs) for v in o.degens[n][i]]
                               for i in range(n + 1)])
            else:
                degens.append([])
        vtx = SSet(D, sizes, faces, degens, check=False)
        injs = tuple(SMap(o, vtx, [range(offs[n][k], offs[n][k] + o.sizes[n]) for n in range(D + 1)])
                     for k, o in enumerate(objs))
        return CoproductData(tuple(objs), vtx, injs)

    def copair(self, maps, c):
        return SMap(c.vertex, maps[0].cod,
                    [[v for m in maps for v in m.levels[n]] for n in range(c.vertex.dim + 1)])

    def factor_jointly_epic(self, vertex, legs, maps):
        cod = maps[0].cod
        levels = []
        for n in range(vertex.dim + 1):
            out = [None] * vertex.sizes[n]
            for leg, m in zip(legs, maps):
                for a, t in zip(leg.levels[n], m.levels[n]):
                    if out[a] is None:
                        out[a] = t
                    elif out[a] != t:
                        raise CategoryError("cocone is not constant on an identified class")
            if any(t is None for t in out):
                raise InconsistencyError("colimit legs are not jointly surjective")
            levels.append(out)
        return SMap(vertex, cod, levels)

    def hom(self, a, b, budget, constraints=(), injective=False):
        return ss_hom_iter(a, b, budget, constraints, injective)

    def inverse(self, f):
        inv = []
        for n, l in enumerate(f.levels):
            if len(l) != f.cod.sizes[n] or len(set(l)) != len(l):
                return None
            t = [0] * len(l)
            for k, v in enumerate(l):
                t[v] = k
            inv.append(t)
        return SMap(f.cod, f.dom, inv)

    def is_monic(self, f):
        return all(len(set(l)) == len(l) for l in f.levels)

    def points(self, x):
        pt = self.point(x.dim)
        out = []
        for v in range(x.sizes[0]):
            levels = [[v]]
            for n in range(x.dim):
                levels.append([x.degens[n][0][levels[-1][0]]])
            out.append(SMap(pt, x, levels))
        return out

    def maybe_isomorphic(self, a, b):
        return a.dim == b.dim and a.sizes == b.sizes and a.nondegenerate_counts() == b.nondegenerate_counts()

    def census(self, x):
        return {"dim": x.dim, "sizes": list(x.sizes), "nondegenerate": x.nondegenerate_counts()}

    def obj_to_json(self, x):
        return ss_to_json(x)

    def mor_to_json(self, f):
        return {"dom": ss_to_json(f.dom), "cod": ss_to_json(f.cod),
                "levels": [list(l) for l in f.levels]}


def _quotient_structure(D, parts, reps_l, cls_l) -> SSet:
    """Structure tables of a levelwise quotient of a disjoint union of parts.

    reps_l[n] lists a representative (index into the concatenated level n)
    for every class; cls_l[n] gives the class of every concatenated element.
    """
    offsets = []
    for n in range(D + 1):
        acc, offs = 0, []
        for p in parts:
            offs.append(acc)
            acc += p.sizes[n]
        offsets.append(offs)

    def locate(n, r):
        for k in range(len(parts) - 1, -1, -1):
            if r >= offsets[n][k]:
                return k, r - offsets[n][k]
        raise AssertionError

    sizes = [len(r) for r in reps_l]
    faces, degens = [], []
    loc = [[locate(n, r) for r in reps_l[n]] for n in range(D + 1)]
    for n in range(D + 1):
        if n == 0:
            faces.append([])
        else:
            faces.append([[cls_l[n - 1][offsets[n - 1][k] + parts[k].faces[n][i][e]] for k, e in loc[n]]
                          for i in range(n + 1)])
        if n < D:
            degens.append([[cls_l[n + 1][offsets[n + 1][k] + parts[k].degens[n][i][e]] for k, e in loc[n]]
                           for i in range(n + 1)])
        else:
            degens.append([])
    return SSet(D, sizes, faces, degens, check=False)


# --- hom enumeration --------------------------------------------------------

def ss_hom_iter(a: SSet, b: SSet, budget, constraints=(), injective=False):
    """Backtracking enumeration of simplicial maps a → b.

    Nondegenerate simplices of a are assigned by increasing degree; degenerate
    simplices follow by f(s_i w) = s_i f(w).
    """
    if a.dim != b.dim:
        raise CategoryError("mismatched dimension bounds")
    D = a.dim
    # fixed values from constraints
    fixed = [dict() for _ in range(D + 1)]
    for i, r in constraints:
        for n in range(D + 1):
            fx = fixed[n]
            for x, y in zip(i.levels[n], r.levels[n]):
                if fx.setdefault(x, y) != y:
                    return
    # roots: every simplex is s_I(z) for a unique nondegenerate z
    order = [(n, z) for n in range(D + 1) for z in a.nondegenerate(n)]
    pos = {nz: k for k, nz in enumerate(order)}
    # degenerate simplices whose value is checkable once root k is assigned
    checks_at = [[] for _ in order]
    for n in range(1, D + 1):
        for x in range(a.sizes[n]):
            if a.decomposition(n, x) is not None and x in fixed[n]:
                checks_at[pos[_root(a, n, x)]].append((n, x))
    nd_b = [frozenset(b.nondegenerate(n)) for n in range(D + 1)]
    # candidate index: level n, tuple of faces → targets
    cand_index = []
    for n in range(D + 1):
        idx = {}
        for y in range(b.sizes[n]):
            if injective and y not in nd_b[n]:
                continue
            key = tuple(b.faces[n][i][y] for i in range(n + 1)) if n else ()
            idx.setdefault(key, []).append(y)
        cand_index.append(idx)
    assign = [dict() for _ in range(D + 1)]

    def value(n, x):
        v = assign[n].get(x)
        if v is not None:
            return v
        i, w = a.decomposition(n, x)
        return b.degens[n - 1][i][value(n - 1, w)]

    def candidates(k):
        n, z = order[k]
        key = tuple(value(n - 1, a.faces[n][i][z]) for i in range(n + 1)) if n else ()
        cands = cand_index[n].get(key, ())
        if z in fixed[n]:
            want = fixed[n][z]
            cands = [want] if want in cands else []
        return cands

    used = [set() for _ in range(D + 1)]
    total = len(order)
    if total == 0:
        yield _finish(a, b, value)
        return
    stack = [iter(candidates(0))]
    while stack:
        k = len(stack) - 1
        n, z = order[k]
        if z in assign[n]:
            used[n].discard(assign[n].pop(z))
        advanced = False
        for y in stack[-1]:
            budget.spend()
            if injective and y in used[n]:
                continue
            assign[n][z] = y
            if all(value(m, x) == fixed[m][x] for m, x in checks_at[k]):
                used[n].add(y)
                advanced = True
                break
            del assign[n][z]
        if not advanced:
            stack.pop()
            continue
        if k + 1 == total:
            f = _finish(a, b, value)
            if not injective or all(len(set(l)) == len(l) for l in f.levels):
                yield f
            continue
        stack.append(iter(candidates(k + 1)))


def _root(a, n, x):
    while True:
        d = a.decomposition(n, x)
        if d is None:
            return n, x
        n, x = n - 1, d[1]


def _finish(a, b, value):
    levels = [[value(n, x) for x in range(a.sizes[n])] for n in range(a.dim + 1)]
    f = SMap(a, b, levels)
    bad = map_violations(f)
    if bad:
        raise InconsistencyError(f"hom search produced a non-simplicial map: {bad[0]}")
    return f


def ss_hom_enumerate(a: SSet, b: SSet, budget=None) -> list:
    from .kernel import as_budget
    return list(ss_hom_iter(a, b, as_budget(budget)))


def ss_hom_bruteforce(a: SSet, b: SSet) -> list:
    """All tuples of level maps satisfying naturality, found by trying every
    tuple at each level against the levels below (tiny inputs only)."""
    partial = [()]
    for n in range(a.dim + 1):
        grown = []
        for prev in partial:
            for lv in itertools.product(range(b.sizes[n]), repeat=a.sizes[n]):
                if n >= 1 and any(prev[n - 1][a.faces[n][i][x]] != b.faces[n][i][lv[x]]
                                  for i in range(n + 1) for x in range(a.sizes[n])):
                    continue
                if n >= 1 and any(lv[a.degens[n - 1][i][x]] != b.degens[n - 1][i][prev[n - 1][x]]
                                  for i in range(n) for x in range(a.sizes[n - 1])):
                    continue
                grown.append(prev + (lv,))
        partial = grown
    out = [SMap(a, b, levels) for levels in partial]
    for f in out:
        if map_violations(f):
            raise InconsistencyError("brute-force enumeration produced a non-simplicial map")
    return out


# --- serialization ------------------------------------------------------------

def ss_to_json(x: SSet) -> dict:
    faces = {f"{n},{i}": list(x.faces[n][i]) for n in range(1, x.dim + 1) for i in range(n + 1)}
    degens = {f"{n},{i}": list(x.degens[n][i]) for n in range(x.dim) for i in range(n + 1)}
    return {"dim": x.dim, "levels": list(x.sizes), "faces": faces, "degens": degens}


def ss_from_json(obj) -> SSet:
    try:
        D = obj["dim"]
        sizes = obj["levels"]
        fj, dj = obj["faces"], obj["degens"]
    except (KeyError, TypeError) as e:
        raise CategoryError(f"simplicial set JSON is missing field {e}") from None
    if not isinstance(D, int) or not isinstance(sizes, list):
        raise CategoryError("'dim' must be an integer and 'levels' a list of counts")
    try:
        faces = [[] if n == 0 else [fj[f"{n},{i}"] for i in range(n + 1)] for n in range(D + 1)]
        degens = [[dj[f"{n},{i}"] for i in range(n + 1)] if n < D else [] for n in range(D + 1)]
    except KeyError as e:
        raise CategoryError(f"missing structure table {e.args[0]}") from None
    return SSet(D, sizes, faces, degens)


def ss_map_from_json(obj) -> SMap:
    for key in ("dom", "cod", "levels"):
        if key not in obj:
            raise CategoryError(f"simplicial map JSON is missing '{key}'")
    return smap(ss_from_json(obj["dom"]), ss_from_json(obj["cod"]), obj["levels"])


SSET = SSetBackend()


def ss_product(a, b) -> ProductData:
    from .kernel import product
    return product(a, b)


def ss_pushout(s: Span) -> PushoutData:
    from .kernel import pushout
    return pushout(s)


def ss_coproduct(objs) -> CoproductData:
    from .kernel import coproduct
    return coproduct(objs)


def ss_witnesses(D: int) -> AxiomWitnesses:
    """Point, Δ[1], vertex inclusions, basepoint = vertex 1, max contraction.

    Δ[1] has no automorphism exchanging its endpoints, so no swap is supplied.
    """
    if D < 2:
        raise CategoryError("the simplicial backend needs D ≥ 2")
    pt = SSET.point(D)
    f1 = standard_simplex(1, D)
    e0, e1 = SSET.points(f1)
    sq = SSET.product(f1, f1)
    seqs = simplex_sequences(1, D)
    index = [{s: k for k, s in enumerate(l)} for l in seqs]
    levels = []
    for n in range(D + 1):
        nb = f1.sizes[n]
        row = []
        for p in range(f1.sizes[n]):
            for q in range(nb):
                u, t = seqs[n][p], seqs[n][q]
                row.append(index[n][tuple(max(x, y) for x, y in zip(u, t))])
        levels.append(row)
    contraction = smap(sq.vertex, f1, levels)
    return AxiomWitnesses(pt, f1, e0, e1, basepoint=e1, swap=None, join=None,
                          contraction=contraction, label=f"sset(D={D})")
