"""
Union-find closure of group actions on finite sets
"""
from dataclasses import dataclass
from typing import Callable, Dict, Generic, Hashable, Iterable, List, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind(Generic[T]):
    """Disjoint sets with path compression and union by rank"""

    def __init__(self, universe: Iterable[T]):
        self.parent: Dict[T, T] = {x: x for x in universe}
        self.rank: Dict[T, int] = {x: 0 for x in self.parent}
        self.size: Dict[T, int] = {x: 1 for x in self.parent}

    def find(self, x: T) -> T:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: T, y: T) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        del self.rank[y]
        return True

    def roots(self) -> List[T]:
        return list(self.rank)

    def __len__(self) -> int:
        return len(self.rank)


@dataclass
class PartitionOfSet(Generic[T]):
    """Blocks of a finite universe; every block is named by its minimum element"""
    block_of: Dict[T, T]

    @classmethod
    def from_union_find(cls, uf: UnionFind) -> "PartitionOfSet":
        members: Dict = {}
        for x in uf.parent:
            members.setdefault(uf.find(x), []).append(x)
        block_of = {}
        for block in members.values():
            name = min(block)
            for x in block:
                block_of[x] = name
        return cls(block_of)

    def blocks(self) -> Dict[T, List[T]]:
        grouped: Dict[T, List[T]] = {}
        for x in sorted(self.block_of):
            grouped.setdefault(self.block_of[x], []).append(x)
        return dict(sorted(grouped.items()))

    def block_count(self) -> int:
        return len(set(self.block_of.values()))

    def block_sizes(self) -> List[int]:
        return [len(block) for block in self.blocks().values()]

    def same_block(self, x: T, y: T) -> bool:
        return self.block_of[x] == self.block_of[y]

    def __len__(self) -> int:
        return self.block_count()


def find_orbits(gens: Iterable, space: Iterable[T], action: Callable) -> PartitionOfSet:
    """Orbits of the group generated by gens acting on space"""
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    return PartitionOfSet.from_union_find(uf)
