"""Nerves, normalized chain complexes, Smith normal form and homology over ℤ."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .cells import CosimplicialFunctor
from .kernel import CategoryError, InconsistencyError, as_budget, compose, hom_list

Matrix = list  # list of rows of Python ints


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def eye(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, cols: int) -> Matrix:
    """a·b where b has ``cols`` columns (needed when b has no rows)."""
    bt = [[row[j] for row in b] for j in range(cols)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


# --- Smith normal form ----------------------------------------------------------

@dataclass
class SNF:
    D: Matrix
    U: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix
    diagonal: list      # nonzero invariant factors d_1 | d_2 | ...

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(M: Matrix, cols: Optional[int] = None) -> SNF:
    """U·M·V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.

    Pivot rule: smallest nonzero absolute value in the remaining block, ties
    broken by lowest row, then lowest column.  ``cols`` gives the width of
    a matrix with no rows.
    """
    m = len(M)
    n = len(M[0]) if m else (cols or 0)
    A = [list(r) for r in M]
    U, Ui, V, Vi = eye(m), eye(m), eye(n), eye(n)

    def row_swap(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        if i != j:
            for r in A:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_add(dst, src, q):
        # row_dst += q·row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]
        for r in Ui:
            r[src] -= q * r[dst]

    def col_add(dst, src, q):
        # col_dst += q·col_src
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]
        Vi[src] = [x - q * y for x, y in zip(Vi[src], Vi[dst])]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    diag = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, i, j = best
            row_swap(t, i)
            col_swap(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is not None:
                row_add(t, bad[0], 1)
                continue
            break
        if t >= m or t >= n or A[t][t] == 0:
            break
        if A[t][t] < 0:
            row_neg(t)
        diag.append(A[t][t])
    return SNF(A, U, V, Ui, Vi, diag)


# --- chain complexes ------------------------------------------------------------------

@dataclass
class ChainComplex:
    ranks: list                    # rank of C_n for n = 0..top
    boundaries: dict               # n ↦ matrix C_n → C_{n-1} (rows: n-1, cols: n)
    generators: Optional[list] = None

    def check(self) -> bool:
        for n in range(2, len(self.ranks)):
            a, b = self.boundaries[n - 1], self.boundaries[n]
            if any(any(r) for r in matmul(a, b, self.ranks[n])):
                return False
        return True


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    betti: int
    torsion: tuple

    def to_json(self):
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}

    def __str__(self):
        parts = (["Z"] if self.betti == 1 else [f"Z^{self.betti}"] if self.betti else [])
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


@dataclass
class HomologyBasis:
    """Data for reading off homology coordinates of cycles in degree n."""
    group: HomologyGroup
    rank_dn: int            # rank of ∂_n
    V_inv: Matrix           # from the SNF of ∂_n
    V: Matrix
    Bsnf: SNF               # SNF of the boundary image inside the cycle basis
    k: int                  # dimension of the cycle module

    def coordinates(self, z: list) -> list:
        """Torsion coordinates (mod d) followed by free coordinates."""
        y = [sum(a * b for a, b in zip(row, z)) for row in self.V_inv][self.rank_dn:]
        w = [sum(a * b for a, b in zip(row, y)) for row in self.Bsnf.U] if self.k else []
        rb = self.Bsnf.rank
        tors = [w[i] % d for i, d in enumerate(self.Bsnf.diagonal) if d > 1]
        return tors + w[rb:]

    def generators(self) -> list:
        """Cycle representatives: torsion generators, then free generators."""
        cols = [i for i, d in enumerate(self.Bsnf.diagonal) if d > 1] + list(range(self.Bsnf.rank, self.k))
        out = []
        Ui = self.Bsnf.U_inv
        for c in cols:
            y = [Ui[r][c] for r in range(self.k)]
            full = [0] * self.rank_dn + y
            out.append([sum(a * b for a, b in zip(row, full)) for row in self.V])
        return out


def homology_bases(c: ChainComplex, max_degree: int) -> list:
    if max_degree + 1 >= len(c.ranks) + 1:
        raise CategoryError("complex too short for the requested degree")
    out = []
    for n in range(max_degree + 1):
        rn = c.ranks[n]
        if n >= 1:
            dn = smith_normal_form(c.boundaries[n], cols=rn)
        else:
            dn = smith_normal_form([], cols=rn)
        r = dn.rank
        k = rn - r
        if n + 1 < len(c.ranks) and c.ranks[n + 1]:
            B = matmul(dn.V_inv, c.boundaries[n + 1], c.ranks[n + 1])[r:]
            Bs = smith_normal_form(B, cols=c.ranks[n + 1])
        else:
            Bs = smith_normal_form(zeros(k, 0), cols=0)
        tors = tuple(d for d in Bs.diagonal if d > 1)
        grp = HomologyGroup(n, k - Bs.rank, tors)
        out.append(HomologyBasis(grp, r, dn.V_inv, dn.V, Bs, k))
    return out


def homology_groups(c: ChainComplex, max_degree: int) -> list:
    return [b.group for b in homology_bases(c, max_degree)]


# --- nerve -------------------------------------------------------------------------

@dataclass
class NerveLevel:
    degree: int
    elements: list
    index: dict
    faces: list                           # faces[i][k] = index of elements[k]∘face(n, i)
    degens: list = field(default_factory=list)   # degens[i][k] = index of elements[k]∘s̃_{n,i} at n+1


def nerve(cf: CosimplicialFunctor, x, max_degree: int, budget=None) -> list:
    """Levels n ↦ Hom(F_n, x) for n ≤ max_degree with precomposition actions."""
    t = cf.tower
    if max_degree > t.N:
        raise CategoryError("nerve degree exceeds the tower height")
    budget = as_budget(budget)
    levels = []
    for n in range(max_degree + 1):
        els = hom_list(t.cells[n], x, budget)
        levels.append(NerveLevel(n, els, {e: k for k, e in enumerate(els)}, []))
    for n in range(1, max_degree + 1):
        prev = levels[n - 1]
        levels[n].faces = [[prev.index[compose(e, t.faces[(n, i)])] for e in levels[n].elements]
                           for i in range(n + 1)]
    for n in range(max_degree):
        nxt = levels[n + 1]
        levels[n].degens = [[nxt.index[compose(e, t.degens[(n, i)])] for e in levels[n].elements]
                            for i in range(n + 1)]
    return levels


def nondegenerate_indices(levels: list, n: int) -> list:
    if n == 0:
        return list(range(len(levels[0].elements)))
    image = set()
    for tab in levels[n - 1].degens:
        image.update(tab)
    return [k for k in range(len(levels[n].elements)) if k not in image]


def normalized_chain_complex(levels: list) -> ChainComplex:
    """Chains on nondegenerate elements; degenerate faces are dropped."""
    top = len(levels) - 1
    gens = [nondegenerate_indices(levels, n) for n in range(top + 1)]
    pos = [{g: k for k, g in enumerate(gs)} for gs in gens]
    ranks = [len(g) for g in gens]
    bd = {}
    for n in range(1, top + 1):
        mat = zeros(ranks[n - 1], ranks[n])
        for col, g in enumerate(gens[n]):
            for i in range(n + 1):
                img = levels[n].faces[i][g]
                row = pos[n - 1].get(img)
                if row is not None:
                    mat[row][col] += -1 if i % 2 else 1
        bd[n] = mat
    c = ChainComplex(ranks, bd, [[levels[n].elements[g] for g in gens[n]] for n in range(top + 1)])
    if not c.check():
        raise InconsistencyError("boundary of a boundary is not zero")
    return c


def nerve_homology(cf: CosimplicialFunctor, x, max_degree: int, budget=None) -> list:
    levels = nerve(cf, x, max_degree + 1, budget)
    return homology_groups(normalized_chain_complex(levels), max_degree)


# --- induced maps ------------------------------------------------------------------

@dataclass
class InducedMap:
    source: list      # HomologyGroup per degree
    target: list
    matrices: list    # per degree: rows = target generators, cols = source generators

    def to_json(self):
        return {"source": [g.to_json() for g in self.source],
                "target": [g.to_json() for g in self.target],
                "matrices": self.matrices}


def chain_map_matrices(cx: ChainComplex, cy: ChainComplex, f) -> list:
    """Postcomposition with f as matrices C_n(x) → C_n(y) on normalized chains."""
    out = []
    for n in range(len(cx.ranks)):
        pos = {e: k for k, e in enumerate(cy.generators[n])}
        mat = zeros(cy.ranks[n], cx.ranks[n])
        for col, e in enumerate(cx.generators[n]):
            row = pos.get(compose(f, e))
            if row is not None:
                mat[row][col] = 1
        out.append(mat)
    return out


def induced_map_on_homology(cf: CosimplicialFunctor, f, max_degree: int, budget=None) -> InducedMap:
    budget = as_budget(budget)
    lx = nerve(cf, f.dom, max_degree + 1, budget)
    ly = nerve(cf, f.cod, max_degree + 1, budget)
    cx, cy = normalized_chain_complex(lx), normalized_chain_complex(ly)
    maps = chain_map_matrices(cx, cy, f)
    for n in range(1, len(cx.ranks)):
        if matmul(cy.boundaries[n], maps[n], cx.ranks[n]) != matmul(maps[n - 1], cx.boundaries[n], cx.ranks[n]):
            raise InconsistencyError(f"postcomposition is not a chain map in degree {n}")
    bx, by = homology_bases(cx, max_degree), homology_bases(cy, max_degree)
    mats = []
    for n in range(max_degree + 1):
        cols = []
        for z in bx[n].generators():
            image = [sum(a * b for a, b in zip(row, z)) for row in maps[n]]
            cols.append(by[n].coordinates(image))
        rows = len(by[n].group.torsion) + by[n].group.betti
        mats.append([[cols[c][r] for c in range(len(cols))] for r in range(rows)])
    return InducedMap([b.group for b in bx], [b.group for b in by], mats)


# --- classical complexes ------------------------------------------------------------

def asc_chain_complex(a) -> ChainComplex:
    """Oriented chains of an abstract simplicial complex, boundary by the
    alternating sum of codimension-one faces."""
    from .complexes import ASC
    if not isinstance(a, ASC):
        raise CategoryError("expected an ASC")
    a.validate()
    order = {v: k for k, v in enumerate(a.vertices)}
    simplices = sorted((tuple(sorted(f, key=order.__getitem__)) for f in a.faces),
                       key=lambda s: (len(s), [order[v] for v in s]))
    top = max((len(s) for s in simplices), default=0) - 1
    by_dim = [[s for s in simplices if len(s) == n + 1] for n in range(top + 1)]
    pos = [{s: k for k, s in enumerate(l)} for l in by_dim]
    bd = {}
    for n in range(1, top + 1):
        mat = zeros(len(by_dim[n - 1]), len(by_dim[n]))
        for col, s in enumerate(by_dim[n]):
            for i in range(n + 1):
                mat[pos[n - 1][s[:i] + s[i + 1:]]][col] += -1 if i % 2 else 1
        bd[n] = mat
    c = ChainComplex([len(l) for l in by_dim], bd, by_dim)
    if not c.check():
        raise InconsistencyError("boundary of a boundary is not zero")
    return c


def padded_homology(c: ChainComplex, max_degree: int) -> list:
    """Homology up to max_degree, reading missing degrees as zero groups."""
    top = len(c.ranks) - 1
    groups = homology_groups(c, min(top, max_degree)) if top >= 0 else []
    for n in range(len(groups), max_degree + 1):
        groups.append(HomologyGroup(n, 0, ()))
    return groups


def matrix_to_text(m: Matrix) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in m)
