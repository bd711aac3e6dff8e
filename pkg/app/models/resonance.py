from typing import List, Set, Tuple

from .base import FrozenModel, IntPair, Rational
from .symbol import PolynomialSymbol


class ResonancePairSet(FrozenModel):
    """Pi(v): finitely many explicit pairs plus families {k, s-k} kept symbolically"""
    symbol: PolynomialSymbol
    slope: Rational
    finite_pairs: Tuple[IntPair, ...] = ()
    infinite_families: Tuple[int, ...] = ()

    def is_empty(self) -> bool:
        return not self.finite_pairs and not self.infinite_families

    def finite_vertices(self) -> List[int]:
        return sorted({k for pair in self.finite_pairs for k in pair})

    def family_pairs_in_window(self, window: int) -> Set[Tuple[int, int]]:
        pairs = set()
        for s in self.infinite_families:
            for k in range(-window, window + 1):
                m = s - k
                if k < m and abs(m) <= window:
                    pairs.add((k, m))
        return pairs

    def pairs_in_window(self, window: int) -> Set[Tuple[int, int]]:
        """Every resonant pair with both ends in [-window, window]"""
        pairs = {p for p in self.finite_pairs if abs(p[0]) <= window and abs(p[1]) <= window}
        return pairs | self.family_pairs_in_window(window)


class ResonanceClass(FrozenModel):
    """Xi_k(v): every m with the same lambda as the anchor k"""
    anchor: int
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)
