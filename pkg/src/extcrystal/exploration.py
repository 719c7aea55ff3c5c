"""Breadth-first exploration of a finite window of an extended crystal.

The closure runs over lowering and raising arrows (i, k) with k inside the
slot window, keeping only elements whose support stays inside the window and
whose total height stays under the bound.  Raising steps are recorded as the
reversed lowering edge, so the edge set consists of lowering arrows only.
Discovery order is deterministic: FIFO over nodes, slots ascending, then
index ascending, lowering before raising.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .extended import ExtElement, ExtendedCrystal, format_ext_element
from .msegment import format_multisegment


@dataclass
class ExploreGraph:
    """Explored nodes in discovery order plus deduplicated lowering edges."""

    nodes: list[ExtElement]
    edges: list[tuple[int, int, int, int]]

    def node_ids(self) -> dict[ExtElement, int]:
        return {c: idx for idx, c in enumerate(self.nodes)}

    def to_dot(self, format_slot=format_multisegment) -> str:
        lines = ["digraph extended_crystal {"]
        for idx, c in enumerate(self.nodes):
            label = format_ext_element(c, format_slot)
            lines.append(f'  {idx} [label="{label}"];')
        for src, dst, i, k in self.edges:
            lines.append(f'  {src} -> {dst} [label="({i},{k})"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self, format_slot=format_multisegment) -> dict:
        nodes = [
            {"id": idx, "slots": {str(k): format_slot(b) for k, b in c.slots}}
            for idx, c in enumerate(self.nodes)
        ]
        edges = [{"src": src, "dst": dst, "i": i, "k": k} for src, dst, i, k in self.edges]
        return {"nodes": nodes, "edges": edges}

    def to_json(self, format_slot=format_multisegment) -> str:
        return json.dumps(self.to_json_dict(format_slot), indent=2) + "\n"


def explore(ext: ExtendedCrystal, seed: ExtElement, window: tuple[int, int], max_ht: int) -> ExploreGraph:
    kmin, kmax = window
    if kmin > kmax:
        raise ValueError(f"empty slot window {kmin}..{kmax}")
    if ext.total_height(seed) > max_ht:
        raise ValueError("seed exceeds the height bound")
    if any(not kmin <= k <= kmax for k in seed.support()):
        raise ValueError(f"seed support {seed.support()} leaves the window {kmin}..{kmax}")

    def admissible(c: ExtElement) -> bool:
        if ext.total_height(c) > max_ht:
            return False
        return all(kmin <= k <= kmax for k in c.support())

    order: dict[ExtElement, int] = {seed: 0}
    queue = [seed]
    raw_edges: set[tuple[ExtElement, ExtElement, int, int]] = set()
    head = 0
    while head < len(queue):
        c = queue[head]
        head += 1
        for k in range(kmin, kmax + 1):
            for i in ext.crystal.indices():
                d = ext.lowering(c, i, k)
                if admissible(d):
                    raw_edges.add((c, d, i, k))
                    if d not in order:
                        order[d] = len(queue)
                        queue.append(d)
                p = ext.raising(c, i, k)
                if admissible(p):
                    raw_edges.add((p, c, i, k))
                    if p not in order:
                        order[p] = len(queue)
                        queue.append(p)
    edges = sorted((order[s], order[d], i, k) for s, d, i, k in raw_edges)
    return ExploreGraph(nodes=queue, edges=edges)
