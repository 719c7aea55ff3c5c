"""Closed-form pairing invariants between a dual-shifted generator and a general element.

For an extended element c, an index i and a slot k, three integers are defined
from the four counters

    x = epsilon_star(c, i, k + 1)      r = epsilon(c, i, k)
    s = epsilon_star(c, i, k)          y = epsilon(c, i, k - 1)

together with weight pairings taken relative to the base slot k.  Writing
w_t for the plain weight of the content of slot t and

    rel(t) = (-1)^(t - k) * <alpha_i, w_t>

(the pairing of alpha_i with the slot weight, sign-adjusted to the base k),
the invariants are

    lambda_left  = 2 * max(x, r) + sum_t  (-1)^[t > k] * rel(t)
    lambda_right = 2 * max(y, s) + sum_t  (-1)^[t < k] * rel(t)
    d_pair       = max(x, r) + max(y, s) + <alpha_i, w_k>

All sums are finite because c has finite support.  The base-relative sign
makes every formula invariant under shifting c and k together, and the
left/right pair always satisfies lambda_left + lambda_right = 2 * d_pair:
the sum telescopes to twice the t = k term, whose relative sign is +1.
"""

from __future__ import annotations

from .extended import ExtElement, ExtendedCrystal


def _counters(ext: ExtendedCrystal, c: ExtElement, i: int, k: int):
    x = ext.epsilon_star(c, i, k + 1)
    r = ext.epsilon(c, i, k)
    s = ext.epsilon_star(c, i, k)
    y = ext.epsilon(c, i, k - 1)
    return x, r, s, y


def _relative_pairing(ext: ExtendedCrystal, c: ExtElement, i: int, k: int, t: int) -> int:
    """<alpha_i, w_t> with the sign (-1)^(t-k) of the slot relative to the base."""
    b = c.slot(t)
    if b is None:
        return 0
    term = ext.lattice.pair(i, ext.crystal.weight(b))
    return -term if (t - k) % 2 else term


def lambda_left(ext: ExtendedCrystal, c: ExtElement, i: int, k: int) -> int:
    """Pairing invariant with the shifted generator on the left."""
    x, r, _s, _y = _counters(ext, c, i, k)
    total = 2 * max(x, r)
    for t, _b in c.slots:
        term = _relative_pairing(ext, c, i, k, t)
        total += -term if t > k else term
    return total


def lambda_right(ext: ExtendedCrystal, c: ExtElement, i: int, k: int) -> int:
    """Pairing invariant with the shifted generator on the right."""
    _x, _r, s, y = _counters(ext, c, i, k)
    total = 2 * max(y, s)
    for t, _b in c.slots:
        term = _relative_pairing(ext, c, i, k, t)
        total += -term if t < k else term
    return total


def d_invariant(ext: ExtendedCrystal, c: ExtElement, i: int, k: int) -> int:
    """Symmetrized invariant: half the sum of the two lambda forms."""
    x, r, s, y = _counters(ext, c, i, k)
    return max(x, r) + max(y, s) + _relative_pairing(ext, c, i, k, k)
