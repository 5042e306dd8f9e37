"""The category of finite sets and functions."""

from __future__ import annotations

import itertools
import json

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


class FinSet(Obj):
    __slots__ = ("labels", "_index", "_hash")

    def __init__(self, labels):
        labels = tuple(labels)
        index = {lab: k for k, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise CategoryError("finite-set labels must be distinct")
        self.labels = labels
        self._index = index
        self._hash = hash(("finset", labels))

    @property
    def backend(self):
        return FINSET

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise CategoryError(f"{label!r} is not an element") from None

    def __eq__(self, other):
        return self is other or (isinstance(other, FinSet) and self._hash == other._hash
                                 and self.labels == other.labels)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinSet({list(self.labels)!r})"


class FinMap(Mor):
    """A function stored as a table of codomain indices."""

    __slots__ = ("dom", "cod", "table", "_hash")

    def __init__(self, dom: FinSet, cod: FinSet, table):
        table = tuple(table)
        if len(table) != len(dom):
            raise CategoryError("table must be total on the domain")
        n = len(cod)
        for t in table:
            if not 0 <= t < n:
                raise CategoryError("table entry outside the codomain")
        self.dom = dom
        self.cod = cod
        self.table = table
        self._hash = hash((dom, cod, table))

    @property
    def backend(self):
        return FINSET

    def __call__(self, label):
        return self.cod.labels[self.table[self.dom.index(label)]]

    def as_dict(self) -> dict:
        return {a: self.cod.labels[t] for a, t in zip(self.dom.labels, self.table)}

    def __eq__(self, other):
        return self is other or (isinstance(other, FinMap) and self._hash == other._hash
                                 and self.table == other.table and self.dom == other.dom
                                 and self.cod == other.cod)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinMap({self.as_dict()!r})"


def fs_object(labels) -> FinSet:
    return FinSet(labels)


def fs_map(dom: FinSet, cod: FinSet, mapping) -> FinMap:
    """Build a map from a dict label→label or a sequence of codomain labels."""
    if isinstance(mapping, dict):
        return FinMap(dom, cod, [cod.index(mapping[a]) for a in dom.labels])
    return FinMap(dom, cod, [cod.index(b) for b in mapping])


class FinSetBackend(Backend):
    name = "finset"

    def __init__(self):
        self._one = FinSet(("*",))
        self._empty = FinSet(())

    def identity(self, x):
        return FinMap(x, x, range(len(x)))

    def compose(self, g, f):
        gt = g.table
        return FinMap(f.dom, g.cod, [gt[t] for t in f.table])

    def terminal(self):
        return self._one

    def terminal_morphism(self, x):
        return FinMap(x, self._one, [0] * len(x))

    def initial(self):
        return self._empty

    def initial_morphism(self, x):
        return FinMap(self._empty, x, ())

    def product(self, a, b):
        v = FinSet((x, y) for x in a.labels for y in b.labels)
        nb = len(b)
        p1 = FinMap(v, a, [i for i in range(len(a)) for _ in range(nb)])
        p2 = FinMap(v, b, [j for _ in range(len(a)) for j in range(nb)])
        return ProductData(a, b, v, p1, p2)

    def pair(self, f, g, p):
        nb = len(p.right)
        return FinMap(f.dom, p.vertex, [i * nb + j for i, j in zip(f.table, g.table)])

    def pushout(self, s: Span):
        lc, rc = s.left.cod, s.right.cod
        nl = len(lc)
        uf = UnionFind(nl + len(rc))
        for a, b in zip(s.left.table, s.right.table):
            uf.union(a, nl + b)
        # classes ordered by their least member; members are in creation order
        reps, cls = uf.classes()
        labels = [(0, lc.labels[r]) if r < nl else (1, rc.labels[r - nl]) for r in reps]
        v = FinSet(labels)
        il = FinMap(lc, v, cls[:nl])
        ir = FinMap(rc, v, cls[nl:])
        return PushoutData(s, v, il, ir)

    def factor_through_pushout(self, p, cl, cr):
        return self.factor_jointly_epic(p.vertex, (p.inj_left, p.inj_right), (cl, cr))

    def coproduct(self, objs):
        labels = [(k, lab) for k, o in enumerate(objs) for lab in o.labels]
        v = FinSet(labels)
        injs, off = [], 0
        for o in objs:
            injs.append(FinMap(o, v, range(off, off + len(o))))
            off += len(o)
        return CoproductData(tuple(objs), v, tuple(injs))

    def copair(self, maps, c):
        table = []
        for m in maps:
            table.extend(m.table)
        return FinMap(c.vertex, maps[0].cod, table)

    def factor_jointly_epic(self, vertex, legs, maps):
        cod = maps[0].cod
        out = [None] * len(vertex)
        for leg, m in zip(legs, maps):
            for a, t in zip(leg.table, m.table):
                if out[a] is None:
                    out[a] = t
                elif out[a] != t:
                    raise CategoryError("cocone is not constant on an identified class")
        if any(t is None for t in out):
            raise InconsistencyError("colimit legs are not jointly surjective")
        return FinMap(vertex, cod, out)

    def hom(self, a, b, budget, constraints=(), injective=False):
        fixed = {}
        for i, r in constraints:
            for x, y in zip(i.table, r.table):
                if fixed.setdefault(x, y) != y:
                    return iter(())
        free = [k for k in range(len(a)) if k not in fixed]
        return self._hom_iter(a, b, budget, fixed, free, injective)

    def _hom_iter(self, a, b, budget, fixed, free, injective):
        nb = len(b)
        if injective and len(a) > nb:
            return
        if injective and len(set(fixed.values())) != len(fixed):
            return
        base = [fixed.get(k, 0) for k in range(len(a))]
        for choice in itertools.product(range(nb), repeat=len(free)):
            budget.spend()
            for k, v in zip(free, choice):
                base[k] = v
            if injective and len(set(base)) != len(base):
                continue
            yield FinMap(a, b, base)

    def inverse(self, f):
        if len(f.dom) != len(f.cod) or len(set(f.table)) != len(f.table):
            return None
        inv = [0] * len(f.table)
        for k, t in enumerate(f.table):
            inv[t] = k
        return FinMap(f.cod, f.dom, inv)

    def is_monic(self, f):
        return len(set(f.table)) == len(f.table)

    def points(self, x):
        return [FinMap(self._one, x, (k,)) for k in range(len(x))]

    def maybe_isomorphic(self, a, b):
        return len(a) == len(b)

    def census(self, x):
        return {"size": len(x)}

    def obj_to_json(self, x):
        return {"labels": [_label_json(l) for l in x.labels]}

    def mor_to_json(self, f):
        return {"dom": self.obj_to_json(f.dom), "cod": self.obj_to_json(f.cod),
                "map": {_label_key(a): _label_json(b) for a, b in f.as_dict().items()}}


def _label_json(label):
    if isinstance(label, tuple):
        return [_label_json(x) for x in label]
    return label


def _label_from_json(obj):
    if isinstance(obj, list):
        return tuple(_label_from_json(x) for x in obj)
    return obj


def _label_key(label) -> str:
    if isinstance(label, str):
        return label
    return json.dumps(_label_json(label), separators=(",", ":"))


def fs_from_json(obj) -> FinSet:
    if not isinstance(obj, dict) or "labels" not in obj or not isinstance(obj["labels"], list):
        raise CategoryError("finite set JSON needs a 'labels' list")
    return FinSet(_label_from_json(l) for l in obj["labels"])


def fs_map_from_json(obj) -> FinMap:
    for key in ("dom", "cod", "map"):
        if key not in obj:
            raise CategoryError(f"finite map JSON is missing '{key}'")
    dom, cod = fs_from_json(obj["dom"]), fs_from_json(obj["cod"])
    m = obj["map"]
    if not isinstance(m, dict):
        raise CategoryError("'map' must be an object")
    try:
        table = [cod.index(_label_from_json(m[_label_key(a)])) for a in dom.labels]
    except KeyError as e:
        raise CategoryError(f"'map' has no entry for {e.args[0]}") from None
    return FinMap(dom, cod, table)


FINSET = FinSetBackend()


def fs_product(a, b) -> ProductData:
    from .kernel import product
    return product(a, b)


def fs_pushout(s: Span) -> PushoutData:
    from .kernel import pushout
    return pushout(s)


def fs_witnesses() -> AxiomWitnesses:
    one = FINSET.terminal()
    f1 = FinSet((0, 1))
    e0 = FinMap(one, f1, (0,))
    e1 = FinMap(one, f1, (1,))
    swap = FinMap(f1, f1, (1, 0))
    sq = FINSET.product(f1, f1).vertex
    # (u, t) ↦ u at t = 0, and ↦ 1 at t = 1
    contraction = FinMap(sq, f1, [u if t == 0 else 1 for (u, t) in sq.labels])
    return AxiomWitnesses(one, f1, e0, e1, basepoint=e1, swap=swap, join=None,
                          contraction=contraction, label="finset")
