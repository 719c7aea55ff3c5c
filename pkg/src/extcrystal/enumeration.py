"""Exhaustive and randomized generation of desk-scale test elements."""

from __future__ import annotations

import random
from typing import Iterator

from .extended import ExtElement, ExtendedCrystal
from .msegment import EMPTY, Multisegment, Segment


def all_segments(n: int) -> list[Segment]:
    return [Segment(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def multisegments_by_height(n: int, max_ht: int) -> list[list[Multisegment]]:
    """All multisegments inside rank n grouped by height 0..max_ht."""
    segs = all_segments(n)
    groups: list[list[Multisegment]] = [[] for _ in range(max_ht + 1)]

    def rec(idx: int, budget: int, acc: list[Segment]) -> None:
        if idx == len(segs):
            m = Multisegment.from_iterable(acc)
            groups[max_ht - budget].append(m)
            return
        seg = segs[idx]
        count = 0
        while count * seg.height <= budget:
            rec(idx + 1, budget - count * seg.height, acc + [seg] * count)
            count += 1

    rec(0, max_ht, [])
    for g in groups:
        g.sort(key=str)
    return groups


def iter_multisegments(n: int, max_ht: int) -> Iterator[Multisegment]:
    for group in multisegments_by_height(n, max_ht):
        yield from group


def multisegments_by_count(n: int, max_count: int) -> list[Multisegment]:
    """All multisegments inside rank n with at most max_count segments."""
    segs = all_segments(n)
    out: list[Multisegment] = []

    def rec(idx: int, budget: int, acc: list[Segment]) -> None:
        if idx == len(segs):
            out.append(Multisegment.from_iterable(acc))
            return
        for count in range(budget + 1):
            rec(idx + 1, budget - count, acc + [segs[idx]] * count)

    rec(0, max_count, [])
    return out


def iter_ext_elements(ext: ExtendedCrystal, window: tuple[int, int], max_ht: int) -> Iterator[ExtElement]:
    """All elements with support inside the window and total height at most max_ht."""
    kmin, kmax = window
    if kmin > kmax:
        raise ValueError(f"empty slot window {kmin}..{kmax}")
    groups = multisegments_by_height(ext.n, max_ht)
    slots = list(range(kmin, kmax + 1))

    def rec(idx: int, budget: int, acc: dict[int, Multisegment]) -> Iterator[ExtElement]:
        if idx == len(slots):
            yield ext.element(dict(acc))
            return
        for h in range(budget + 1):
            for m in groups[h]:
                if h > 0:
                    acc[slots[idx]] = m
                yield from rec(idx + 1, budget - h, acc)
                acc.pop(slots[idx], None)

    yield from rec(0, max_ht, {})


def count_ext_elements(n: int, window: tuple[int, int], max_ht: int) -> int:
    """Independent size oracle: polynomial arithmetic instead of enumeration.

    The per-slot counting series is a product of geometric series, one per
    segment, graded by height; the window raises it to the number of slots.
    """
    width = window[1] - window[0] + 1
    per_slot = [0] * (max_ht + 1)
    per_slot[0] = 1
    for seg in all_segments(n):
        h = seg.height
        for d in range(h, max_ht + 1):
            per_slot[d] += per_slot[d - h]
    total = [0] * (max_ht + 1)
    total[0] = 1
    for _ in range(width):
        new = [0] * (max_ht + 1)
        for d1, c1 in enumerate(total):
            for d2 in range(max_ht + 1 - d1):
                new[d1 + d2] += c1 * per_slot[d2]
        total = new
    return sum(total)


def random_multisegment(rng: random.Random, n: int, max_ht: int) -> Multisegment:
    segs: list[Segment] = []
    budget = rng.randint(0, max_ht)
    pool = all_segments(n)
    while True:
        fits = [s for s in pool if s.height <= budget]
        if not fits or rng.random() < 0.2:
            break
        s = rng.choice(fits)
        segs.append(s)
        budget -= s.height
    return Multisegment.from_iterable(segs)


def random_ext_element(rng: random.Random, ext: ExtendedCrystal, window: tuple[int, int], max_ht: int) -> ExtElement:
    mapping: dict[int, Multisegment] = {}
    budget = rng.randint(0, max_ht)
    for k in range(window[0], window[1] + 1):
        if budget <= 0:
            break
        take = rng.randint(0, budget)
        if take:
            m = random_multisegment(rng, ext.n, take)
            if m != EMPTY:
                mapping[k] = m
                budget -= m.height()
    return ext.element(mapping)
