"""Union-find with deterministic class numbering."""

from __future__ import annotations


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # the smaller index stays the root, so roots are least members
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb

    def classes(self):
        """Return (reps, cls): least member of each class in increasing order,
        and the class number of every element."""
        reps, number, cls = [], {}, []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in number:
                number[r] = len(reps)
                reps.append(r)
            cls.append(number[r])
        return reps, cls
