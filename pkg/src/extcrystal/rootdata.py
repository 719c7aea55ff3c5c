"""Cartan data of finite type A_n and exact root-lattice arithmetic.

Root-lattice elements are stored in simple-root coordinates: an integer
vector (c_1, ..., c_n) stands for sum_j c_j alpha_j.  The rank is a runtime
parameter, kept small because everything downstream is desk-scale.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_RANK = 64


def check_rank(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_RANK:
        raise ValueError(f"rank must be an integer between 1 and {MAX_RANK}, got {n!r}")


@dataclass(frozen=True)
class CartanA:
    """Cartan matrix of type A_n: 2 on the diagonal, -1 between neighbours."""

    n: int

    def __post_init__(self) -> None:
        check_rank(self.n)

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"Cartan index ({i},{j}) out of range for rank {self.n}")
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0


@dataclass(frozen=True)
class RootLatticeElem:
    """Integer vector of coefficients in the simple roots alpha_1..alpha_n."""

    coeffs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def coeff(self, j: int) -> int:
        """Coefficient of alpha_j, with j counted from 1."""
        if not 1 <= j <= self.rank:
            raise ValueError(f"coefficient index {j} out of range for rank {self.rank}")
        return self.coeffs[j - 1]

    def __add__(self, other: RootLatticeElem) -> RootLatticeElem:
        self._check_same_rank(other)
        return RootLatticeElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RootLatticeElem) -> RootLatticeElem:
        self._check_same_rank(other)
        return RootLatticeElem(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RootLatticeElem:
        return RootLatticeElem(tuple(-a for a in self.coeffs))

    def height(self) -> int:
        """Sum of the simple-root coefficients."""
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def _check_same_rank(self, other: RootLatticeElem) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.coeffs) + ")"


@dataclass(frozen=True)
class RootLattice:
    """Root lattice of type A_n with its symmetric bilinear pairing."""

    n: int

    def __post_init__(self) -> None:
        check_rank(self.n)

    def zero(self) -> RootLatticeElem:
        return RootLatticeElem((0,) * self.n)

    def alpha(self, i: int) -> RootLatticeElem:
        """The simple root alpha_i."""
        self._check_index(i)
        return RootLatticeElem(tuple(1 if j == i else 0 for j in range(1, self.n + 1)))

    def from_coeffs(self, coeffs) -> RootLatticeElem:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        return RootLatticeElem(coeffs)

    def pair(self, i: int, v: RootLatticeElem) -> int:
        """Pairing (alpha_i, v) in simple-root coordinates.

        In type A this is 2 c_i - c_{i-1} - c_{i+1}, missing neighbours
        contributing nothing.
        """
        self._check_index(i)
        if v.rank != self.n:
            raise ValueError(f"rank mismatch: lattice {self.n}, element {v.rank}")
        c = v.coeffs
        total = 2 * c[i - 1]
        if i >= 2:
            total -= c[i - 2]
        if i <= self.n - 1:
            total -= c[i]
        return total

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range for rank {self.n}")
