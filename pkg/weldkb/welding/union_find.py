from typing import List, Optional, Tuple


class UnionFind:
    """Growable disjoint sets over ``0 .. len-1`` with union by size and path compression."""

    def __init__(self, size: int = 0):
        self.parent: List[int] = list(range(size))
        self.size: List[int] = [1] * size

    def __len__(self) -> int:
        return len(self.parent)

    def add(self) -> int:
        element = len(self.parent)
        self.parent.append(element)
        self.size.append(1)
        return element

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> Optional[Tuple[int, int]]:
        """Join the sets of ``x`` and ``y``; returns ``(kept, absorbed)`` roots, or None if already joined."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return None
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return x, y

    def reps(self) -> List[int]:
        return [x for x in range(len(self.parent)) if self.parent[x] == x]
