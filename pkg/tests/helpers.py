"""Small objects and random generators shared by the tests."""

import itertools
import random

from cellforge.finset import fs_object
from cellforge.kernel import hom_list
from cellforge.sset import SSET, from_vertex_sequences, standard_simplex


def hollow_triangle(D):
    x, _ = from_vertex_sequences(3, lambda s: len(s) <= 2, D)
    return x


def full_triangle(D):
    x, _ = from_vertex_sequences(3, lambda s: True, D)
    return x


def two_edges(D):
    """0 - 1 - 2 as a path of two edges."""
    x, _ = from_vertex_sequences(3, lambda s: s in ({0}, {1}, {2}, {0, 1}, {1, 2}), D)
    return x


def random_fs(rng: random.Random, lo=0, hi=4):
    n = rng.randint(lo, hi)
    return fs_object([f"x{k}" for k in range(n)])


def ss_corpus(D):
    """Small simplicial sets: point, Δ[1], a path, two points, hollow triangle."""
    pts, _ = from_vertex_sequences(2, lambda s: len(s) == 1, D)
    return [SSET.point(D), standard_simplex(1, D), two_edges(D), pts, hollow_triangle(D)]


def random_map(rng: random.Random, a, b):
    maps = hom_list(a, b)
    return rng.choice(maps) if maps else None


def subsets(xs):
    xs = list(xs)
    return [c for k in range(len(xs) + 1) for c in itertools.combinations(xs, k)]


def canonical_labels(t, n):
    """Element indices of vertices 0..n of F_n, read off the wedge structure
    alone: F_n sits in F_{n+1} through Bottom and the apex is the new vertex."""
    w = t.witnesses
    labels = [w.endpoint0.table[0], w.endpoint1.table[0]]
    for k in range(1, n):
        wd = t.wedges[k]
        labels = [wd.bottom.table[e] for e in labels] + [wd.top.table[0]]
    return labels[: n + 1] if n >= 1 else [0]


def in_vertex_coordinates(t, f, a, b):
    la, lb = canonical_labels(t, a), canonical_labels(t, b)
    pos = {e: k for k, e in enumerate(lb)}
    return [pos[f.table[la[k]]] for k in range(a + 1)]
