"""Plus/minus signature words and the cancellation rule every operator shares.

A signature is a list of (sign, tag) pairs where sign is "+" or "-".  The tag
records which object emitted the symbol, so that after cancellation the
surviving symbols can be traced back to the segment or lattice node that has
to be edited.  Cancellation deletes adjacent (+, -) pairs, in that order,
until none remain; the result is independent of the deletion order and always
has the shape minuses-then-pluses.
"""

from __future__ import annotations


def reduce_signature(sig: list) -> list:
    """Cancel all adjacent (+, -) pairs of a signature word."""
    stack: list = []
    for item in sig:
        if item[0] == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append(item)
    return stack


def count_sign(sig: list, sign: str) -> int:
    return sum(1 for item in sig if item[0] == sign)


def leftmost_plus(sig: list):
    """Tag of the first "+" symbol, or None."""
    for item in sig:
        if item[0] == "+":
            return item[1]
    return None


def rightmost_minus(sig: list):
    """Tag of the last "-" symbol, or None."""
    for item in reversed(sig):
        if item[0] == "-":
            return item[1]
    return None


def signs(sig: list) -> str:
    """The bare sign word, tags dropped."""
    return "".join(item[0] for item in sig)
