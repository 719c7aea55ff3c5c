"""Interface a B(infinity) realization must provide to the extended layer.

Elements are immutable and hashable; the realization object itself carries the
rank and all operator logic.  Raising operators return None when they
annihilate an element, so None plays the role of the formal zero.
"""

from __future__ import annotations

from .rootdata import RootLattice, RootLatticeElem


class AbstractCrystal:
    """Contract for a realization of the crystal B(infinity) of type A_n."""

    n: int
    lattice: RootLattice

    @property
    def highest(self):
        """The highest-weight element."""
        raise NotImplementedError

    def indices(self) -> range:
        return range(1, self.n + 1)

    def validate(self, b) -> None:
        """Reject elements that do not belong to this realization."""

    def lowering(self, b, i: int):
        raise NotImplementedError

    def raising(self, b, i: int):
        """Inverse of lowering along i; None when nothing can be raised."""
        raise NotImplementedError

    def star_lowering(self, b, i: int):
        raise NotImplementedError

    def star_raising(self, b, i: int):
        raise NotImplementedError

    def epsilon(self, b, i: int) -> int:
        raise NotImplementedError

    def epsilon_star(self, b, i: int) -> int:
        raise NotImplementedError

    def phi(self, b, i: int) -> int:
        return self.epsilon(b, i) + self.lattice.pair(i, self.weight(b))

    def weight(self, b) -> RootLatticeElem:
        raise NotImplementedError

    def height(self, b) -> int:
        """Height of minus the weight; zero exactly on the highest element."""
        raise NotImplementedError

    def star(self, b):
        """The star involution of the realization."""
        raise NotImplementedError
