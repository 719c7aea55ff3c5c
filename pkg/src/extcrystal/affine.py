"""Affine model: lattice nodes, blocks, highest weights and the direct rule.

Nodes (i, a) with 1 <= i <= n and a - i odd label the fundamental data of the
affine type A model of rank n.  The dual shift sends (i, a) to
(n+1-i, a+n+1); its iterates cut the node set into blocks, block zero being
the triangle i-1 <= a <= 2n-1-i, and block k its image under k dual shifts.

Each node corresponds to a segment placed in the slot given by its block:
the segment [a,b] in slot k maps to the k-fold dual shift of the node
(b-a+1, b+a-2).  Transporting the extended-crystal operators through this
correspondence gives a direct rule on formal sums of nodes with nonnegative
coefficients, the highest weights: the operator along (i, k) scans a fixed
ordered list of 2n nodes, reads coefficients off as runs of alternating
minus and plus symbols, cancels adjacent (+,-) pairs, and moves one unit of
coefficient between neighbouring list positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extended import ExtElement, ExtendedCrystal
from .msegment import Multisegment, MultisegmentCrystal, Segment
from .parsing import ParseError, Scanner
from .rootdata import RootLatticeElem, check_rank
from .signature import leftmost_plus, reduce_signature, rightmost_minus


@dataclass(frozen=True)
class HLNode:
    """Lattice node (i, a); the coordinates differ by an odd number."""

    i: int
    a: int

    def __post_init__(self) -> None:
        if not (isinstance(self.i, int) and isinstance(self.a, int)):
            raise ValueError(f"node coordinates must be integers, got ({self.i!r},{self.a!r})")
        if self.i < 1:
            raise ValueError(f"node ({self.i},{self.a}): first coordinate must be positive")
        if (self.a - self.i) % 2 == 0:
            raise ValueError(f"node ({self.i},{self.a}): coordinates must differ by an odd number")

    def __str__(self) -> str:
        return f"({self.i},{self.a})"


def _node_sort_key(p: HLNode) -> tuple[int, int]:
    return (p.a, p.i)


@dataclass(frozen=True)
class HLWeight:
    """Formal sum of nodes with positive integer coefficients."""

    terms: tuple[tuple[HLNode, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[HLNode, int] = {}
        for p, c in self.terms:
            if not isinstance(c, int):
                raise ValueError(f"coefficient of {p} must be an integer, got {c!r}")
            merged[p] = merged.get(p, 0) + c
        for p, c in merged.items():
            if c < 0:
                raise ValueError(f"negative coefficient {c} at node {p}")
        canon = tuple(sorted(((p, c) for p, c in merged.items() if c > 0), key=lambda t: _node_sort_key(t[0])))
        object.__setattr__(self, "terms", canon)

    @staticmethod
    def from_counts(counts: dict[HLNode, int]) -> "HLWeight":
        return HLWeight(tuple(counts.items()))

    def coeff(self, p: HLNode) -> int:
        for q, c in self.terms:
            if q == p:
                return c
        return 0

    def add_node(self, p: HLNode, count: int = 1) -> "HLWeight":
        return HLWeight(self.terms + ((p, count),))

    def remove_node(self, p: HLNode, count: int = 1) -> "HLWeight":
        if self.coeff(p) < count:
            raise ValueError(f"cannot remove {count} of {p}: coefficient is {self.coeff(p)}")
        return HLWeight(self.terms + ((p, -count),))

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def support(self) -> tuple[HLNode, ...]:
        return tuple(p for p, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return format_hl_weight(self)


ZERO_WEIGHT = HLWeight()


@dataclass(frozen=True)
class SignatureNodes:
    """The ordered nodes one operator scans, first position last in the scan.

    Position t (counted from 1) holds the node written a_t; odd positions
    emit minus symbols and even positions emit plus symbols.  The scan runs
    from the last position down to the first.
    """

    nodes: tuple[HLNode, ...]

    def node_at(self, t: int) -> HLNode:
        return self.nodes[t - 1]

    def sign_at(self, t: int) -> str:
        return "+" if t % 2 == 0 else "-"

    def __len__(self) -> int:
        return len(self.nodes)


class AffineModel:
    """Block lattice, segment correspondence and the direct operator rule."""

    def __init__(self, n: int):
        check_rank(n)
        self.n = n
        self.crystal = MultisegmentCrystal(n)
        self.ext = ExtendedCrystal(self.crystal)
        self._signature_nodes_cache: dict[tuple[int, int], SignatureNodes] = {}

    # -- the node lattice -------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"operator index {i} out of range for rank {self.n}")

    def check_node(self, p: HLNode) -> None:
        if not 1 <= p.i <= self.n:
            raise ValueError(f"node {p} out of range for rank {self.n}")

    def dual_shift(self, p: HLNode, k: int = 1) -> HLNode:
        """Apply the dual shift k times; k may be negative."""
        i = p.i if k % 2 == 0 else self.n + 1 - p.i
        return HLNode(i, p.a + k * (self.n + 1))

    def _in_base_block(self, p: HLNode) -> bool:
        return 1 <= p.i <= self.n and p.i - 1 <= p.a <= 2 * self.n - 1 - p.i

    def block_of(self, p: HLNode) -> int:
        """The unique k whose block contains p."""
        self.check_node(p)
        guess = p.a // (self.n + 1)
        hits = [k for k in range(guess - 2, guess + 3) if self._in_base_block(self.dual_shift(p, -k))]
        assert len(hits) == 1, f"blocks failed to tile at {p}: {hits}"
        return hits[0]

    def base_block_nodes(self) -> tuple[HLNode, ...]:
        out = []
        for i in range(1, self.n + 1):
            for a in range(i - 1, 2 * self.n - i, 2):
                out.append(HLNode(i, a))
        return tuple(sorted(out, key=_node_sort_key))

    def block_nodes(self, k: int) -> tuple[HLNode, ...]:
        shifted = (self.dual_shift(p, k) for p in self.base_block_nodes())
        return tuple(sorted(shifted, key=_node_sort_key))

    def generator_node(self, i: int) -> HLNode:
        """The node of the one-segment element [i,i] in slot zero."""
        self._check_index(i)
        return HLNode(1, 2 * (i - 1))

    # -- correspondence with slotted multisegments ------------------------

    def node_of_segment(self, seg: Segment, k: int) -> HLNode:
        """Node of the segment [a,b] placed in slot k."""
        if seg.b > self.n:
            raise ValueError(f"segment {seg} does not fit inside rank {self.n}")
        return self.dual_shift(HLNode(seg.b - seg.a + 1, seg.b + seg.a - 2), k)

    def segment_of_node(self, p: HLNode) -> tuple[Segment, int]:
        """The (segment, slot) pair a node stands for."""
        k = self.block_of(p)
        q = self.dual_shift(p, -k)
        a = (q.a - q.i + 3) // 2
        b = (q.a + q.i + 1) // 2
        return Segment(a, b), k

    def to_weight(self, c: ExtElement) -> HLWeight:
        """Total node count of a slotted multisegment element."""
        counts: dict[HLNode, int] = {}
        for k, m in c.slots:
            for seg in m:
                p = self.node_of_segment(seg, k)
                counts[p] = counts.get(p, 0) + 1
        return HLWeight.from_counts(counts)

    def to_extended(self, lam: HLWeight) -> ExtElement:
        """Inverse of to_weight."""
        per_slot: dict[int, list[Segment]] = {}
        for p, c in lam.terms:
            seg, k = self.segment_of_node(p)
            per_slot.setdefault(k, []).extend([seg] * c)
        return self.ext.element({k: Multisegment.from_iterable(v) for k, v in per_slot.items()})

    # -- weights ----------------------------------------------------------

    def node_weight(self, p: HLNode) -> RootLatticeElem:
        """Root-lattice weight of a node, alternating in sign with its block."""
        k = self.block_of(p)
        q = self.dual_shift(p, -k)
        lo = (q.a - q.i + 3) // 2
        hi = (q.a + q.i + 1) // 2
        coeffs = tuple(-1 if lo <= j <= hi else 0 for j in range(1, self.n + 1))
        v = RootLatticeElem(coeffs)
        return -v if k % 2 else v

    def weight(self, lam: HLWeight) -> RootLatticeElem:
        total = self.crystal.lattice.zero()
        for p, c in lam.terms:
            w = self.node_weight(p)
            for _ in range(c):
                total = total + w
        return total

    def dual_shift_weight(self, lam: HLWeight, k: int = 1) -> HLWeight:
        return HLWeight(tuple((self.dual_shift(p, k), c) for p, c in lam.terms))

    # -- the direct operator rule -----------------------------------------

    def signature_nodes(self, i: int, k: int) -> SignatureNodes:
        """The 2n nodes the (i, k) operator scans, in closed form.

        In block zero, position 2j-1 holds (j, 2(i-1)+j-1) and position 2j
        holds (j, 2(i-1)+j+1); block k is its elementwise k-fold dual shift,
        which preserves positions.
        """
        self._check_index(i)
        cached = self._signature_nodes_cache.get((i, k))
        if cached is not None:
            return cached
        base = []
        for j in range(1, self.n + 1):
            base.append(HLNode(j, 2 * (i - 1) + j - 1))
            base.append(HLNode(j, 2 * (i - 1) + j + 1))
        sn = SignatureNodes(tuple(self.dual_shift(p, k) for p in base))
        self._signature_nodes_cache[(i, k)] = sn
        return sn

    def signature(self, lam: HLWeight, i: int, k: int) -> list[tuple[str, int]]:
        """Signature word of lam along (i, k), tags being list positions.

        Scanning from the last position down to the first, a position emits
        one copy of its sign per unit of coefficient at its node.
        """
        sn = self.signature_nodes(i, k)
        out: list[tuple[str, int]] = []
        for t in range(len(sn), 0, -1):
            c = lam.coeff(sn.node_at(t))
            if c:
                out.extend([(sn.sign_at(t), t)] * c)
        return out

    def lowering(self, lam: HLWeight, i: int, k: int) -> HLWeight:
        """Move one unit from the leftmost surviving plus to the next position up.

        Past the last position the unit disappears; with no surviving plus a
        unit appears at the first position.
        """
        sn = self.signature_nodes(i, k)
        t = leftmost_plus(reduce_signature(self.signature(lam, i, k)))
        if t is None:
            return lam.add_node(sn.node_at(1))
        out = lam.remove_node(sn.node_at(t))
        if t < len(sn):
            out = out.add_node(sn.node_at(t + 1))
        return out

    def raising(self, lam: HLWeight, i: int, k: int) -> HLWeight:
        """Move one unit from the rightmost surviving minus one position down.

        Past the first position the unit disappears; with no surviving minus
        a unit appears at the last position.
        """
        sn = self.signature_nodes(i, k)
        s = rightmost_minus(reduce_signature(self.signature(lam, i, k)))
        if s is None:
            return lam.add_node(sn.node_at(len(sn)))
        out = lam.remove_node(sn.node_at(s))
        if s > 1:
            out = out.add_node(sn.node_at(s - 1))
        return out


def format_hl_weight(lam: HLWeight) -> str:
    """Canonical text form, e.g. "(1,-2),2*(2,-1),(3,4)"; zero is "0"."""
    if lam.is_zero():
        return "0"
    parts = []
    for p, c in lam.terms:
        parts.append(f"{c}*{p}" if c > 1 else str(p))
    return ",".join(parts)


def parse_hl_weight(text: str) -> HLWeight:
    """Parse comma-separated "(i,a)" terms with optional "c*" prefixes; "0" is zero."""
    if text.strip() == "0":
        return ZERO_WEIGHT
    sc = Scanner(text)
    terms: list[tuple[HLNode, int]] = []
    while True:
        count = 1
        if sc.peek().isdigit():
            at = sc.pos
            count = sc.take_int()
            if count < 1:
                raise ParseError(text, at, "coefficient must be at least 1")
            sc.expect("*")
        at = sc.pos
        sc.expect("(")
        i = sc.take_int()
        sc.expect(",")
        a = sc.take_int()
        sc.expect(")")
        try:
            node = HLNode(i, a)
        except ValueError as exc:
            raise ParseError(text, at, str(exc)) from None
        terms.append((node, count))
        if sc.eof():
            break
        sc.expect(",")
    return HLWeight(tuple(terms))


def weight_to_json_terms(lam: HLWeight) -> list[dict]:
    """JSON mirror of the text form: a list of {i, a, c} objects."""
    return [{"i": p.i, "a": p.a, "c": c} for p, c in lam.terms]
