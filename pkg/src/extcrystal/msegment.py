"""Multisegment model of the crystal B(infinity) in finite type A_n.

A segment [a,b] is an integer interval with 1 <= a <= b <= n and weight
-(alpha_a + ... + alpha_b).  A multisegment is a finite multiset of segments;
the empty multisegment is the highest-weight element.

Both operator families act through signature words:

* plain operators along i look at segments [i,t] (minus) and [i+1,t] (plus),
  arranged largest first in the left order, which compares right endpoints
  first and breaks ties by larger left endpoint being smaller;
* starred operators along i look at segments [t,i] (plus) and [t,i-1]
  (minus), arranged largest first in the right order, which compares left
  endpoints first and breaks ties by larger right endpoint being smaller.

After cancelling adjacent (+,-) pairs, lowering edits the surviving symbol
closest to the appropriate end or appends the length-one segment [i,i], and
raising edits the opposite end or annihilates.  Raising a length-one segment
out of existence deletes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .crystal import AbstractCrystal
from .parsing import ParseError, Scanner
from .rootdata import RootLattice, RootLatticeElem, check_rank
from .signature import count_sign, leftmost_plus, reduce_signature, rightmost_minus


@dataclass(frozen=True)
class Segment:
    """The interval [a,b] with 1 <= a <= b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise ValueError(f"segment endpoints must be integers, got [{self.a!r},{self.b!r}]")
        if not 1 <= self.a <= self.b:
            raise ValueError(f"invalid segment [{self.a},{self.b}]: need 1 <= a <= b")

    @property
    def height(self) -> int:
        return self.b - self.a + 1

    def __str__(self) -> str:
        return f"[{self.a}]" if self.a == self.b else f"[{self.a},{self.b}]"


def left_order_key(seg: Segment) -> tuple[int, int]:
    """Sorting ascending by this key realizes the left order."""
    return (seg.b, -seg.a)


def right_order_key(seg: Segment) -> tuple[int, int]:
    """Sorting ascending by this key realizes the right order."""
    return (seg.a, -seg.b)


@dataclass(frozen=True)
class Multisegment:
    """Finite multiset of segments, stored largest first in the left order."""

    segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        canon = tuple(sorted(self.segments, key=left_order_key, reverse=True))
        object.__setattr__(self, "segments", canon)

    @staticmethod
    def from_iterable(segs) -> "Multisegment":
        return Multisegment(tuple(segs))

    def is_empty(self) -> bool:
        return not self.segments

    def height(self) -> int:
        return sum(seg.height for seg in self.segments)

    def counts(self) -> list[tuple[Segment, int]]:
        """(segment, multiplicity) pairs in storage order."""
        out: list[tuple[Segment, int]] = []
        for seg in self.segments:
            if out and out[-1][0] == seg:
                out[-1] = (seg, out[-1][1] + 1)
            else:
                out.append((seg, 1))
        return out

    def add(self, seg: Segment) -> "Multisegment":
        return Multisegment(self.segments + (seg,))

    def replace_one(self, old: Segment, new: Segment | None) -> "Multisegment":
        """Remove one copy of old and insert new unless new is None."""
        segs = list(self.segments)
        segs.remove(old)
        if new is not None:
            segs.append(new)
        return Multisegment(tuple(segs))

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __str__(self) -> str:
        return format_multisegment(self)


EMPTY = Multisegment()


def left_signature(m: Multisegment, i: int) -> list[tuple[str, Segment]]:
    """Signature word of the plain operators along i, largest segment first."""
    out = []
    for seg in m.segments:
        if seg.a == i:
            out.append(("-", seg))
        elif seg.a == i + 1:
            out.append(("+", seg))
    return out


def right_signature(m: Multisegment, i: int) -> list[tuple[str, Segment]]:
    """Signature word of the starred operators along i, largest segment first.

    For i = 1 no segment ends at i - 1 = 0, so only plus symbols occur.
    """
    picked = [seg for seg in m.segments if seg.b == i or seg.b == i - 1]
    picked.sort(key=right_order_key, reverse=True)
    return [("+" if seg.b == i else "-", seg) for seg in picked]


@lru_cache(maxsize=1 << 18)
def _reduced_left(m: Multisegment, i: int) -> tuple:
    return tuple(reduce_signature(left_signature(m, i)))


@lru_cache(maxsize=1 << 18)
def _reduced_right(m: Multisegment, i: int) -> tuple:
    return tuple(reduce_signature(right_signature(m, i)))


def lowering(m: Multisegment, i: int) -> Multisegment:
    """Shift the leftmost surviving plus [i+1,t] to [i,t], or append [i,i]."""
    seg = leftmost_plus(_reduced_left(m, i))
    if seg is None:
        return m.add(Segment(i, i))
    return m.replace_one(seg, Segment(i, seg.b))


def raising(m: Multisegment, i: int) -> Multisegment | None:
    """Shift the rightmost surviving minus [i,t] to [i+1,t]; None if no minus."""
    seg = rightmost_minus(_reduced_left(m, i))
    if seg is None:
        return None
    return m.replace_one(seg, Segment(i + 1, seg.b) if seg.b > i else None)


def star_lowering(m: Multisegment, i: int) -> Multisegment:
    """Grow the rightmost surviving minus [t,i-1] to [t,i], or append [i,i]."""
    seg = rightmost_minus(_reduced_right(m, i))
    if seg is None:
        return m.add(Segment(i, i))
    return m.replace_one(seg, Segment(seg.a, i))


def star_raising(m: Multisegment, i: int) -> Multisegment | None:
    """Trim the leftmost surviving plus [t,i] to [t,i-1]; None if no plus."""
    seg = leftmost_plus(_reduced_right(m, i))
    if seg is None:
        return None
    return m.replace_one(seg, Segment(seg.a, i - 1) if seg.a < i else None)


def epsilon(m: Multisegment, i: int) -> int:
    """Number of surviving minus symbols; the raising string length along i."""
    return count_sign(_reduced_left(m, i), "-")


def epsilon_star(m: Multisegment, i: int) -> int:
    """Number of surviving plus symbols of the starred signature along i."""
    return count_sign(_reduced_right(m, i), "+")


def weight(m: Multisegment, n: int) -> RootLatticeElem:
    """Weight in rank n: minus the multiplicity with which each index is covered."""
    check_rank(n)
    coeffs = [0] * n
    for seg in m.segments:
        if seg.b > n:
            raise ValueError(f"segment {seg} does not fit inside rank {n}")
        for j in range(seg.a, seg.b + 1):
            coeffs[j - 1] -= 1
    return RootLatticeElem(tuple(coeffs))


@lru_cache(maxsize=1 << 16)
def star(m: Multisegment) -> Multisegment:
    """The star involution, computed by peeling one raising step at a time.

    Raise along the smallest applicable index i, star the rest recursively,
    then star-lower along the same i.  The empty multisegment is fixed.
    """
    if m.is_empty():
        return m
    for i in sorted({seg.a for seg in m.segments}):
        if epsilon(m, i) > 0:
            return star_lowering(star(raising(m, i)), i)
    raise AssertionError(f"no raising operator applies to non-highest {m}")


class MultisegmentCrystal(AbstractCrystal):
    """B(infinity) of type A_n realized on multisegments inside {1..n}."""

    def __init__(self, n: int):
        check_rank(n)
        self.n = n
        self.lattice = RootLattice(n)

    @property
    def highest(self) -> Multisegment:
        return EMPTY

    def validate(self, b) -> None:
        if not isinstance(b, Multisegment):
            raise ValueError(f"expected a multisegment, got {b!r}")
        for seg in b.segments:
            if seg.b > self.n:
                raise ValueError(f"segment {seg} does not fit inside rank {self.n}")

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"operator index {i} out of range for rank {self.n}")

    def lowering(self, b: Multisegment, i: int) -> Multisegment:
        self._check_index(i)
        return lowering(b, i)

    def raising(self, b: Multisegment, i: int) -> Multisegment | None:
        self._check_index(i)
        return raising(b, i)

    def star_lowering(self, b: Multisegment, i: int) -> Multisegment:
        self._check_index(i)
        return star_lowering(b, i)

    def star_raising(self, b: Multisegment, i: int) -> Multisegment | None:
        self._check_index(i)
        return star_raising(b, i)

    def epsilon(self, b: Multisegment, i: int) -> int:
        self._check_index(i)
        return epsilon(b, i)

    def epsilon_star(self, b: Multisegment, i: int) -> int:
        self._check_index(i)
        return epsilon_star(b, i)

    def weight(self, b: Multisegment) -> RootLatticeElem:
        return weight(b, self.n)

    def height(self, b: Multisegment) -> int:
        return b.height()

    def star(self, b: Multisegment) -> Multisegment:
        return star(b)


def format_multisegment(m: Multisegment) -> str:
    """Canonical text form, e.g. "2*[1,3],[2]"; the empty multisegment is "1"."""
    if m.is_empty():
        return "1"
    parts = []
    for seg, mult in m.counts():
        parts.append(f"{mult}*{seg}" if mult > 1 else str(seg))
    return ",".join(parts)


def parse_multisegment(text: str) -> Multisegment:
    """Parse the text form: comma-separated segments with optional "k*" prefixes."""
    if text.strip() in ("", "1"):
        return EMPTY
    sc = Scanner(text)
    segs: list[Segment] = []
    while True:
        count = 1
        if sc.peek().isdigit():
            at = sc.pos
            count = sc.take_int()
            if count < 1:
                raise ParseError(text, at, "multiplicity must be at least 1")
            sc.expect("*")
        at = sc.pos
        sc.expect("[")
        a = sc.take_int()
        b = a
        if sc.peek() == ",":
            sc.expect(",")
            b = sc.take_int()
        sc.expect("]")
        try:
            seg = Segment(a, b)
        except ValueError as exc:
            raise ParseError(text, at, str(exc)) from None
        segs.extend([seg] * count)
        if sc.eof():
            break
        sc.expect(",")
    return Multisegment.from_iterable(segs)
