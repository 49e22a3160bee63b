"""Welding by coincidence processing"""

from .union_find import UnionFind
from .weld import WeldWorklist, is_welded, weld

__all__ = ["UnionFind", "WeldWorklist", "is_welded", "weld"]
