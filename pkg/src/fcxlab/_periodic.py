"""Ultimately periodic sequences over ℕ in (transient, block) form.

A sequence ``s`` is stored as a finite prefix ``transient`` of length T and a
non-empty repeating ``block`` of length p, so that ``s[i] = transient[i]`` for
``i < T`` and ``s[i] = block[(i - T) % p]`` otherwise.  The canonical form has
the minimal period and then the minimal transient; two sequences are equal iff
their canonical forms are identical.
"""

from __future__ import annotations

from math import lcm
from typing import Callable, Sequence, Tuple, TypeVar

T = TypeVar("T")


def value_at(transient: Sequence[T], block: Sequence[T], i: int) -> T:
    if i < 0:
        raise IndexError(i)
    if i < len(transient):
        return transient[i]
    return block[(i - len(transient)) % len(block)]


def _divisors(p: int) -> list[int]:
    return [d for d in range(1, p + 1) if p % d == 0]


def canonical(transient: Sequence[T], block: Sequence[T]) -> Tuple[tuple, tuple]:
    """Return the canonical ``(transient, block)`` pair for the sequence."""
    transient = tuple(transient)
    block = tuple(block)
    if not block:
        raise ValueError("block must be non-empty")
    p = len(block)
    # every period of a purely periodic tail is a multiple of the minimal one
    for d in _divisors(p):
        if all(block[i] == block[i % d] for i in range(p)):
            block = block[:d]
            break
    while transient and transient[-1] == block[-1]:
        block = (transient[-1],) + block[:-1]
        transient = transient[:-1]
    return transient, block


def expand(transient: Sequence[T], block: Sequence[T], t: int, p: int) -> Tuple[tuple, tuple]:
    """Re-express the sequence with transient length ``t`` and period ``p``.

    ``t`` must be at least ``len(transient)`` and ``p`` a multiple of
    ``len(block)``.
    """
    if t < len(transient) or p % len(block):
        raise ValueError("cannot expand to a shorter transient or non-multiple period")
    new_t = tuple(value_at(transient, block, i) for i in range(t))
    new_b = tuple(value_at(transient, block, t + j) for j in range(p))
    return new_t, new_b


def combine(op: Callable, *seqs: Tuple[Sequence, Sequence]) -> Tuple[tuple, tuple]:
    """Apply ``op`` pointwise to several (transient, block) sequences."""
    t = max(len(tr) for tr, _ in seqs)
    p = lcm(*(len(bl) for _, bl in seqs))
    expanded = [expand(tr, bl, t, p) for tr, bl in seqs]
    new_t = tuple(op(*vals) for vals in zip(*(e[0] for e in expanded)))
    new_b = tuple(op(*vals) for vals in zip(*(e[1] for e in expanded)))
    return canonical(new_t, new_b)


def probe_bound(*seqs: Tuple[Sequence, Sequence]) -> int:
    """Number of leading indices that determine every sequence pointwise.

    Covers the longest transient plus two full common periods.
    """
    t = max(len(tr) for tr, _ in seqs)
    p = lcm(*(len(bl) for _, bl in seqs))
    return t + 2 * p
