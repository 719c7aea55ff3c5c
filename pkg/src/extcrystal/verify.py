"""Verification sweeps: every structural identity as an executable check.

Each suite enumerates (or samples, for the randomized ones) a space of cases
and returns a list of violation messages; an empty list is a pass.  Messages
quote elements in the same text grammar the command-line parsers accept, so
a counterexample can be replayed with the ``apply`` subcommand.

Suites are built from a deterministic item list plus a per-item check
function, which lets a sweep fan out over worker processes; results are
re-assembled in item order, so output never depends on scheduling.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .affine import AffineModel, HLWeight, format_hl_weight
from .enumeration import (
    count_ext_elements,
    iter_ext_elements,
    random_ext_element,
    random_multisegment,
)
from .extended import HIGHEST, ExtElement, ExtendedCrystal, format_ext_element
from .invariants import d_invariant, lambda_left, lambda_right
from .msegment import (
    Multisegment,
    MultisegmentCrystal,
    left_signature,
    right_signature,
    format_multisegment,
)
from .rootdata import CartanA
from .signature import reduce_signature, signs
from .sl2 import Sl2Crystal, explicit_lowering


@dataclass(frozen=True)
class SweepConfig:
    """Knobs shared by all suites; individual suites read what they need."""

    n: int
    window: tuple[int, int] = (-2, 2)
    max_ht: int = 4
    seed: int = 0
    cases: int = 10000
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.window[0] > self.window[1]:
            raise ValueError(f"empty window {self.window}")
        if self.max_ht < 0:
            raise ValueError("height bound must be non-negative")


@functools.lru_cache(maxsize=None)
def _crystal(n: int) -> MultisegmentCrystal:
    return MultisegmentCrystal(n)


@functools.lru_cache(maxsize=None)
def _ext(n: int) -> ExtendedCrystal:
    return ExtendedCrystal(_crystal(n))


@functools.lru_cache(maxsize=None)
def _affine(n: int) -> AffineModel:
    return AffineModel(n)


def _case_rng(cfg: SweepConfig, idx: int) -> random.Random:
    return random.Random(cfg.seed * 0x9E3779B1 + idx)


def _bad(prop: str, cfg: SweepConfig, detail: str) -> str:
    return f"{prop}: n={cfg.n} {detail}"


def _ops(cfg: SweepConfig):
    lo, hi = cfg.window
    for k in range(lo, hi + 1):
        for i in range(1, cfg.n + 1):
            yield i, k


# ----------------------------------------------------------------------
# multisegment level


def _check_crystal_axioms(cfg: SweepConfig, idx: int) -> list[str]:
    rng = _case_rng(cfg, idx)
    cry = _crystal(cfg.n)
    m = random_multisegment(rng, cfg.n, cfg.max_ht)
    text = format_multisegment(m)
    out: list[str] = []
    for i in cry.indices():
        f = cry.lowering(m, i)
        if cry.raising(f, i) != m:
            out.append(_bad("raise-of-lower", cfg, f"i={i} elem={text!r}"))
        if cry.epsilon(f, i) != cry.epsilon(m, i) + 1:
            out.append(_bad("lower-counter-step", cfg, f"i={i} elem={text!r}"))
        if cry.weight(f) != cry.weight(m) - cry.lattice.alpha(i):
            out.append(_bad("lower-weight-step", cfg, f"i={i} elem={text!r}"))
        e = cry.raising(m, i)
        if (e is None) != (cry.epsilon(m, i) == 0):
            out.append(_bad("raise-definedness", cfg, f"i={i} elem={text!r}"))
        if e is not None and cry.lowering(e, i) != m:
            out.append(_bad("lower-of-raise", cfg, f"i={i} elem={text!r}"))
        steps, cur = 0, m
        while (cur := cry.raising(cur, i)) is not None:
            steps += 1
        if steps != cry.epsilon(m, i):
            out.append(_bad("raise-string-length", cfg, f"i={i} elem={text!r}"))

        sf = cry.star_lowering(m, i)
        if cry.star_raising(sf, i) != m:
            out.append(_bad("star-raise-of-lower", cfg, f"i={i} elem={text!r}"))
        if cry.epsilon_star(sf, i) != cry.epsilon_star(m, i) + 1:
            out.append(_bad("star-lower-counter-step", cfg, f"i={i} elem={text!r}"))
        if cry.weight(sf) != cry.weight(m) - cry.lattice.alpha(i):
            out.append(_bad("star-lower-weight-step", cfg, f"i={i} elem={text!r}"))
        se = cry.star_raising(m, i)
        if (se is None) != (cry.epsilon_star(m, i) == 0):
            out.append(_bad("star-raise-definedness", cfg, f"i={i} elem={text!r}"))
        if se is not None and cry.star_lowering(se, i) != m:
            out.append(_bad("star-lower-of-raise", cfg, f"i={i} elem={text!r}"))
        steps, cur = 0, m
        while (cur := cry.star_raising(cur, i)) is not None:
            steps += 1
        if steps != cry.epsilon_star(m, i):
            out.append(_bad("star-raise-string-length", cfg, f"i={i} elem={text!r}"))

    st = cry.star(m)
    if cry.star(st) != m:
        out.append(_bad("star-involution", cfg, f"elem={text!r}"))
    if cry.weight(st) != cry.weight(m):
        out.append(_bad("star-weight", cfg, f"elem={text!r}"))
    for i in cry.indices():
        if cry.epsilon_star(m, i) != cry.epsilon(st, i):
            out.append(_bad("star-counter-swap", cfg, f"i={i} elem={text!r}"))
        if cry.star(cry.lowering(m, i)) != cry.star_lowering(st, i):
            out.append(_bad("star-lower-conjugation", cfg, f"i={i} elem={text!r}"))
        # the recursion defining star may pick any index that admits a raise
        if cry.epsilon(m, i) > 0:
            rebuilt = cry.star_lowering(cry.star(cry.raising(m, i)), i)
            if rebuilt != st:
                out.append(_bad("star-branch-free", cfg, f"i={i} elem={text!r}"))
    return out


def _check_reduce_confluence(cfg: SweepConfig, idx: int) -> list[str]:
    rng = _case_rng(cfg, idx)
    length = rng.randrange(0, 2 * cfg.max_ht + 5)
    sig = [(rng.choice("+-"), t) for t in range(length)]
    stacked = reduce_signature(sig)
    out: list[str] = []

    work = list(sig)
    while True:
        pairs = [j for j in range(len(work) - 1) if work[j][0] == "+" and work[j + 1][0] == "-"]
        if not pairs:
            break
        j = rng.choice(pairs)
        del work[j : j + 2]
    if work != stacked:
        out.append(_bad("reduce-confluence", cfg, f"sig={signs(sig)!r}"))
    red = signs(stacked)
    if "+" in red and "-" in red.split("+", 1)[1]:
        out.append(_bad("reduce-shape", cfg, f"sig={signs(sig)!r}"))
    return out


# ----------------------------------------------------------------------
# extended level


def _items_ext(cfg: SweepConfig) -> list[ExtElement]:
    return list(iter_ext_elements(_ext(cfg.n), cfg.window, cfg.max_ht))


def _check_inverse_pairs(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    text = format_ext_element(c)
    out = []
    for i, k in _ops(cfg):
        at = f"i={i} k={k} elem={text!r}"
        if ext.raising(ext.lowering(c, i, k), i, k) != c:
            out.append(_bad("raise-of-lower", cfg, at))
        if ext.lowering(ext.raising(c, i, k), i, k) != c:
            out.append(_bad("lower-of-raise", cfg, at))
        if ext.star_raising(ext.star_lowering(c, i, k), i, k) != c:
            out.append(_bad("star-raise-of-lower", cfg, at))
        if ext.star_lowering(ext.star_raising(c, i, k), i, k) != c:
            out.append(_bad("star-lower-of-raise", cfg, at))
    return out


def _check_counters(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    cry = ext.crystal
    text = format_ext_element(c)
    out = []
    for i, k in _ops(cfg):
        at = f"i={i} k={k} elem={text!r}"
        sel = ext.branch_selector(c, i, k)
        if ext.branch_selector(ext.lowering(c, i, k), i, k) != sel + 1:
            out.append(_bad("lower-selector-step", cfg, at))
        if ext.branch_selector(ext.raising(c, i, k), i, k) != sel - 1:
            out.append(_bad("raise-selector-step", cfg, at))
        ssel = ext.star_branch_selector(c, i, k)
        if ext.star_branch_selector(ext.star_lowering(c, i, k), i, k) != ssel + 1:
            out.append(_bad("star-lower-selector-step", cfg, at))
        if ext.star_branch_selector(ext.star_raising(c, i, k), i, k) != ssel - 1:
            out.append(_bad("star-raise-selector-step", cfg, at))
    if len(c.slots) == 1:
        k0, b = c.slots[0]
        for i in cry.indices():
            at = f"i={i} k={k0} elem={text!r}"
            if ext.lowering(c, i, k0) != ext.inject(cry.lowering(b, i), k0):
                out.append(_bad("slot-embedding-lower", cfg, at))
            if cry.epsilon(b, i) > 0 and ext.raising(c, i, k0) != ext.inject(cry.raising(b, i), k0):
                out.append(_bad("slot-embedding-raise", cfg, at))
            if ext.star_lowering(c, i, k0) != ext.inject(cry.star_lowering(b, i), k0):
                out.append(_bad("slot-embedding-star-lower", cfg, at))
            if cry.epsilon_star(b, i) > 0 and ext.star_raising(c, i, k0) != ext.inject(
                cry.star_raising(b, i), k0
            ):
                out.append(_bad("slot-embedding-star-raise", cfg, at))
    return out


def _check_weights(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    w = ext.weight(c)
    ht = ext.total_height(c)
    text = format_ext_element(c)
    out = []
    for i, k in _ops(cfg):
        at = f"i={i} k={k} elem={text!r}"
        alpha = ext.lattice.alpha(i)
        step = alpha if k % 2 else -alpha
        # height moves with the slot acted on: the k-branch edits slot k, the
        # other branch edits slot k+1 in the inverse direction
        f = ext.lowering(c, i, k)
        if ext.weight(f) != w + step:
            out.append(_bad("lower-weight-step", cfg, at))
        f_step = 1 if ext.branch_selector(c, i, k) >= 0 else -1
        if ext.total_height(f) != ht + f_step:
            out.append(_bad("lower-height-step", cfg, at))
        e = ext.raising(c, i, k)
        if ext.weight(e) != w - step:
            out.append(_bad("raise-weight-step", cfg, at))
        e_step = -1 if ext.branch_selector(c, i, k) > 0 else 1
        if ext.total_height(e) != ht + e_step:
            out.append(_bad("raise-height-step", cfg, at))
    return out


def _check_star_identities(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    text = format_ext_element(c)
    out = []
    flipped = ext.star_flip(c)
    for i, k in _ops(cfg):
        at = f"i={i} k={k} elem={text!r}"
        if ext.star_lowering(c, i, k) != ext.raising(c, i, k - 1):
            out.append(_bad("star-lower-as-raise", cfg, at))
        if ext.star_raising(c, i, k) != ext.lowering(c, i, k - 1):
            out.append(_bad("star-raise-as-lower", cfg, at))
        if ext.star_branch_selector(c, i, k) != -ext.branch_selector(c, i, k - 1):
            out.append(_bad("selector-flip", cfg, at))
        if ext.star_lowering(c, i, k) != ext.star_flip(ext.lowering(flipped, i, -k)):
            out.append(_bad("flip-conjugates-lower", cfg, at))
        if ext.star_raising(c, i, k) != ext.star_flip(ext.raising(flipped, i, -k)):
            out.append(_bad("flip-conjugates-raise", cfg, at))
    return out


def _check_star_flip(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    text = format_ext_element(c)
    out = []
    flipped = ext.star_flip(c)
    if ext.star_flip(flipped) != c:
        out.append(_bad("flip-involution", cfg, f"elem={text!r}"))
    if ext.weight(flipped) != ext.weight(c):
        out.append(_bad("flip-weight", cfg, f"elem={text!r}"))
    if ext.total_height(flipped) != ext.total_height(c):
        out.append(_bad("flip-height", cfg, f"elem={text!r}"))
    return out


def _check_shift_commutation(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    text = format_ext_element(c)
    out = []
    w = ext.weight(c)
    for t in (-2, -1, 1, 2):
        moved = ext.shift(c, t)
        if ext.shift(moved, -t) != c:
            out.append(_bad("shift-inverse", cfg, f"t={t} elem={text!r}"))
        expect = -w if t % 2 else w
        if ext.weight(moved) != expect:
            out.append(_bad("shift-weight", cfg, f"t={t} elem={text!r}"))
        for i, k in _ops(cfg):
            at = f"i={i} k={k} t={t} elem={text!r}"
            if ext.shift(ext.lowering(c, i, k), t) != ext.lowering(moved, i, k + t):
                out.append(_bad("shift-commutes-lower", cfg, at))
            if ext.shift(ext.raising(c, i, k), t) != ext.raising(moved, i, k + t):
                out.append(_bad("shift-commutes-raise", cfg, at))
    return out


def _check_connectedness(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    text = format_ext_element(c)
    out = []
    path = ext.path_to_highest(c)
    if len(path) != ext.total_height(c):
        out.append(_bad("path-length", cfg, f"elem={text!r}"))
    cur = c
    for i, k in path:
        cur = ext.raising(cur, i, k)
    if not cur.is_highest():
        out.append(_bad("path-reaches-highest", cfg, f"elem={text!r}"))
    rebuilt = HIGHEST
    for i, k in reversed(path):
        rebuilt = ext.lowering(rebuilt, i, k)
    if rebuilt != c:
        out.append(_bad("path-replay", cfg, f"elem={text!r}"))
    return out


_EXT_CHECKS = (
    _check_inverse_pairs,
    _check_counters,
    _check_weights,
    _check_star_identities,
    _check_star_flip,
    _check_shift_commutation,
    _check_connectedness,
)


def _check_ext_properties(cfg: SweepConfig, c: ExtElement) -> list[str]:
    out: list[str] = []
    for check in _EXT_CHECKS:
        out.extend(check(cfg, c))
    return out


# ----------------------------------------------------------------------
# rank-one explicit oracle


def _items_sl2(cfg: SweepConfig) -> range:
    lo, hi = cfg.window
    return range((cfg.max_ht + 1) ** (hi - lo + 1))


def _check_sl2(cfg: SweepConfig, code: int) -> list[str]:
    lo, hi = cfg.window
    base = cfg.max_ht + 1
    entries: dict[int, int] = {}
    for k in range(lo, hi + 1):
        code, digit = divmod(code, base)
        if digit:
            entries[k] = digit
    ext = ExtendedCrystal(Sl2Crystal())
    c = ExtElement(tuple(entries.items()))
    out = []
    for k in range(lo, hi + 1):
        got = dict(ext.lowering(c, 1, k).slots)
        expect = {kk: v for kk, v in explicit_lowering(entries, k).items() if v}
        if got != expect:
            out.append(_bad("sl2-oracle", cfg, f"k={k} elem={entries!r}"))
    return out


# ----------------------------------------------------------------------
# affine level

# The window names the operator slots; elements may occupy one extra slot
# above it because a raising at the top slot writes to slot k+1.


def _items_affine(cfg: SweepConfig) -> list[ExtElement]:
    lo, hi = cfg.window
    return list(iter_ext_elements(_ext(cfg.n), (lo, hi + 1), cfg.max_ht))


def _check_cr_commutation(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    model = _affine(cfg.n)
    lam = model.to_weight(c)
    text = format_ext_element(c)
    out = []
    for i, k in _ops(cfg):
        at = f"i={i} k={k} elem={text!r}"
        if model.lowering(lam, i, k) != model.to_weight(ext.lowering(c, i, k)):
            out.append(_bad("conversion-commutes-lower", cfg, at))
        if model.raising(lam, i, k) != model.to_weight(ext.raising(c, i, k)):
            out.append(_bad("conversion-commutes-raise", cfg, at))
    return out


def _check_hl_inverse(cfg: SweepConfig, c: ExtElement) -> list[str]:
    model = _affine(cfg.n)
    lam = model.to_weight(c)
    text = format_hl_weight(lam)
    out = []
    for i, k in _ops(cfg):
        at = f"i={i} k={k} elem={text!r}"
        if model.raising(model.lowering(lam, i, k), i, k) != lam:
            out.append(_bad("raise-of-lower", cfg, at))
        if model.lowering(model.raising(lam, i, k), i, k) != lam:
            out.append(_bad("lower-of-raise", cfg, at))
    return out


def _check_dual_commutation(cfg: SweepConfig, c: ExtElement) -> list[str]:
    ext = _ext(cfg.n)
    model = _affine(cfg.n)
    lam = model.to_weight(c)
    text = format_hl_weight(lam)
    out = []
    for t in (-1, 1):
        if model.to_weight(ext.shift(c, t)) != model.dual_shift_weight(lam, t):
            out.append(_bad("conversion-commutes-shift", cfg, f"t={t} elem={text!r}"))
    moved = model.dual_shift_weight(lam, 1)
    for i, k in _ops(cfg):
        at = f"i={i} k={k} elem={text!r}"
        if model.dual_shift_weight(model.lowering(lam, i, k), 1) != model.lowering(moved, i, k + 1):
            out.append(_bad("dual-shift-commutes-lower", cfg, at))
        if model.dual_shift_weight(model.raising(lam, i, k), 1) != model.raising(moved, i, k + 1):
            out.append(_bad("dual-shift-commutes-raise", cfg, at))
    return out


def _items_sig_seq(cfg: SweepConfig) -> list[tuple[int, HLWeight]]:
    model = _affine(cfg.n)
    items: list[tuple[int, HLWeight]] = []
    lo, hi = cfg.window
    for k in range(lo, hi + 1):
        nodes = model.block_nodes(k) + model.block_nodes(k + 1)

        def rec(idx: int, budget: int, counts: dict) -> None:
            items.append((k, HLWeight.from_counts(counts)))
            if budget == 0:
                return
            for j in range(idx, len(nodes)):
                counts[nodes[j]] = counts.get(nodes[j], 0) + 1
                rec(j, budget - 1, counts)
                counts[nodes[j]] -= 1

        rec(0, cfg.max_ht, {})
    return items


def _check_sig_seq(cfg: SweepConfig, item: tuple[int, HLWeight]) -> list[str]:
    k, lam = item
    model = _affine(cfg.n)
    lower_part: list = []
    upper_part: list = []
    for p in lam.support():
        seg, block = model.segment_of_node(p)
        (lower_part if block == k else upper_part).extend([seg] * lam.coeff(p))
    m_low = Multisegment.from_iterable(lower_part)
    m_high = Multisegment.from_iterable(upper_part)
    out = []
    for i in range(1, cfg.n + 1):
        expect = signs(right_signature(m_high, i)) + signs(left_signature(m_low, i))
        got = signs(model.signature(lam, i, k))
        if got != expect:
            out.append(
                _bad("signature-concat", cfg, f"i={i} k={k} elem={format_hl_weight(lam)!r}")
            )
    return out


# ----------------------------------------------------------------------
# invariants


def _items_root_axiom(cfg: SweepConfig) -> list[tuple[int, int]]:
    return [(i, k) for i in range(1, cfg.n + 1) for k in range(-5, 6)]


def _check_root_axiom(cfg: SweepConfig, item: tuple[int, int]) -> list[str]:
    i, k = item
    ext = _ext(cfg.n)
    c = ext.inject(ext.crystal.lowering(ext.crystal.highest, i))
    expect = 1 if abs(k) == 1 else 0
    if d_invariant(ext, c, i, k) != expect:
        return [_bad("root-axiom", cfg, f"i={i} k={k} elem={format_ext_element(c)!r}")]
    return []


def _items_duality_datum(cfg: SweepConfig) -> list[tuple[int, int, int]]:
    return [
        (i, j, k)
        for i in range(1, cfg.n + 1)
        for j in range(1, cfg.n + 1)
        if i != j
        for k in range(-5, 6)
    ]


def _check_duality_datum(cfg: SweepConfig, item: tuple[int, int, int]) -> list[str]:
    i, j, k = item
    ext = _ext(cfg.n)
    c = ext.inject(ext.crystal.lowering(ext.crystal.highest, j))
    expect = -CartanA(cfg.n).entry(i, j) if k == 0 else 0
    if d_invariant(ext, c, i, k) != expect:
        return [_bad("duality-datum", cfg, f"i={i} j={j} k={k}")]
    return []


def _random_query(cfg: SweepConfig, idx: int):
    rng = _case_rng(cfg, idx)
    ext = _ext(cfg.n)
    c = random_ext_element(rng, ext, cfg.window, cfg.max_ht)
    i = rng.randrange(1, cfg.n + 1)
    k = rng.randrange(cfg.window[0] - 1, cfg.window[1] + 2)
    return ext, c, i, k, rng


def _check_bilinear(cfg: SweepConfig, idx: int) -> list[str]:
    ext, c, i, k, _rng = _random_query(cfg, idx)
    left = lambda_left(ext, c, i, k)
    right = lambda_right(ext, c, i, k)
    out = []
    at = f"i={i} k={k} elem={format_ext_element(c)!r}"
    if left + right != 2 * d_invariant(ext, c, i, k):
        out.append(_bad("bilinear", cfg, at))
    if (left - right) % 2:
        out.append(_bad("parity", cfg, at))
    return out


def _check_shift_covariance(cfg: SweepConfig, idx: int) -> list[str]:
    ext, c, i, k, rng = _random_query(cfg, idx)
    t = rng.randrange(-3, 4)
    moved = ext.shift(c, t)
    out = []
    at = f"i={i} k={k} t={t} elem={format_ext_element(c)!r}"
    if d_invariant(ext, moved, i, k + t) != d_invariant(ext, c, i, k):
        out.append(_bad("shift-covariance-d", cfg, at))
    if lambda_left(ext, moved, i, k + t) != lambda_left(ext, c, i, k):
        out.append(_bad("shift-covariance-left", cfg, at))
    if lambda_right(ext, moved, i, k + t) != lambda_right(ext, c, i, k):
        out.append(_bad("shift-covariance-right", cfg, at))
    return out


# ----------------------------------------------------------------------
# graph


def _check_graph_count(cfg: SweepConfig, _item: int) -> list[str]:
    ext = _ext(cfg.n)
    graph = ext.explore(HIGHEST, cfg.window, cfg.max_ht)
    out = []
    expect = count_ext_elements(cfg.n, cfg.window, cfg.max_ht)
    if len(graph.nodes) != expect:
        out.append(_bad("graph-node-count", cfg, f"got={len(graph.nodes)} want={expect}"))
    if set(graph.nodes) != set(iter_ext_elements(ext, cfg.window, cfg.max_ht)):
        out.append(_bad("graph-node-set", cfg, "reachable set differs from enumeration"))
    ids = graph.node_ids()
    nodes = graph.nodes
    for src, dst, i, k in graph.edges:
        if ids[ext.lowering(nodes[src], i, k)] != dst:
            out.append(_bad("graph-edge", cfg, f"i={i} k={k} src={format_ext_element(nodes[src])!r}"))
    again = ext.explore(HIGHEST, cfg.window, cfg.max_ht)
    if again.to_dot() != graph.to_dot():
        out.append(_bad("graph-determinism", cfg, "repeated run differs"))
    return out


# ----------------------------------------------------------------------
# registry and runner


def _items_cases(cfg: SweepConfig) -> range:
    return range(cfg.cases)


def _items_single(cfg: SweepConfig) -> range:
    return range(1)


_SUITES = {
    "crystal-axioms": (_items_cases, _check_crystal_axioms),
    "reduce-confluence": (_items_cases, _check_reduce_confluence),
    "inverse-pairs": (_items_ext, _check_inverse_pairs),
    "counters": (_items_ext, _check_counters),
    "weights": (_items_ext, _check_weights),
    "star-identities": (_items_ext, _check_star_identities),
    "star-flip": (_items_ext, _check_star_flip),
    "shift-commutation": (_items_ext, _check_shift_commutation),
    "connectedness": (_items_ext, _check_connectedness),
    "ext-properties": (_items_ext, _check_ext_properties),
    "sl2": (_items_sl2, _check_sl2),
    "cr-commutation": (_items_affine, _check_cr_commutation),
    "hl-inverse": (_items_affine, _check_hl_inverse),
    "dual-commutation": (_items_affine, _check_dual_commutation),
    "sig-seq": (_items_sig_seq, _check_sig_seq),
    "root-axiom": (_items_root_axiom, _check_root_axiom),
    "duality-datum": (_items_duality_datum, _check_duality_datum),
    "bilinear": (_items_cases, _check_bilinear),
    "shift-covariance": (_items_cases, _check_shift_covariance),
    "graph-count": (_items_single, _check_graph_count),
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def base_suite_names() -> tuple[str, ...]:
    return tuple(_SUITES)


def suite_size(name: str, cfg: SweepConfig) -> int:
    """Number of items the named suite would sweep."""
    if name == "all":
        return sum(suite_size(sub, cfg) for sub in _SUITES)
    return len(_SUITES[name][0](cfg))


def _dispatch(name: str, cfg: SweepConfig, item) -> list[str]:
    return _SUITES[name][1](cfg, item)


def run_suite(name: str, cfg: SweepConfig) -> list[str]:
    """Run one suite (or "all") and return violations in enumeration order."""
    if name == "all":
        out = []
        for sub in _SUITES:
            out.extend(f"{sub} {msg}" for msg in run_suite(sub, cfg))
        return out
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}")
    items_fn, check = _SUITES[name]
    items = items_fn(cfg)
    if cfg.jobs > 1 and len(items) > 64:
        import multiprocessing

        chunk = max(1, len(items) // (cfg.jobs * 8))
        with multiprocessing.Pool(cfg.jobs) as pool:
            batches = pool.map(functools.partial(_dispatch, name, cfg), items, chunksize=chunk)
        out = []
        for batch in batches:
            out.extend(batch)
        return out
    out = []
    for item in items:
        out.extend(check(cfg, item))
    return out
