"""
Disjoint-set forest over hashable keys, path compression and union by rank
"""

from typing import Dict, Hashable, List


class UnionFind:
    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Dict[Hashable, int] = {}

    def add(self, key: Hashable) -> Hashable:
        if key not in self.parent:
            self.parent[key] = key
            self.rank[key] = 0
        return key

    def find(self, key: Hashable) -> Hashable:
        self.add(key)
        root = key
        while root != self.parent[root]:
            root = self.parent[root]
        node = key
        while node != root:
            self.parent[node], node = root, self.parent[node]
        return root

    def union(self, a: Hashable, b: Hashable) -> bool:
        """Merge the sets of a and b; False when they were already joined"""
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        if self.rank[root_a] == self.rank[root_b]:
            self.rank[root_a] += 1
        return True

    def groups(self) -> List[List[Hashable]]:
        """Members of every set, each sorted, sets ordered by their smallest member"""
        buckets: Dict[Hashable, List[Hashable]] = {}
        for key in self.parent:
            buckets.setdefault(self.find(key), []).append(key)
        return sorted((sorted(members) for members in buckets.values()), key=lambda m: m[0])
