"""Brute-force checkers that share no code path with the fast routines.

Each one enumerates a bounded search space directly and only prunes
branches that provably cannot reach the target.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .errors import DomainError, ResourceError

HYPERBINARY_BRUTE_CAP = 10_000


def hyperbinary_representations(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every digit vector ``(c0, c1, ...)`` with ``c_i in {0, 1, 2}``
    and ``sum(c_i * 2**i) == n``, highest power chosen first."""
    if n < 0:
        raise DomainError(f"negative target {n}")
    top = max(n.bit_length() - 1, 0)
    digits = [0] * (top + 1)

    def walk(i: int, rest: int) -> Iterator[tuple[int, ...]]:
        if i < 0:
            if rest == 0:
                yield tuple(digits)
            return
        power = 1 << i
        # powers below 2^i can contribute at most 2 * (2^i - 1)
        for c in (0, 1, 2):
            left = rest - c * power
            if left < 0:
                break
            if left > 2 * (power - 1):
                continue
            digits[i] = c
            yield from walk(i - 1, left)
        digits[i] = 0

    yield from walk(top, n)


def hyperbinary_brute(n: int, cap: int = HYPERBINARY_BRUTE_CAP) -> int:
    if n > cap:
        raise ResourceError(f"brute-force hyperbinary count capped at {cap}, got {n}")
    return sum(1 for _ in hyperbinary_representations(n))


def engel_unique_brute(r, max_len: int, max_den: int) -> int:
    """Count nondecreasing ``2 <= n1 <= ... <= nk`` (``k <= max_len``,
    ``n_i <= max_den``) with ``1/n1 + 1/(n1 n2) + ... == r``."""
    r = Fraction(r)
    if not 0 < r < 1:
        raise DomainError(f"need 0 < r < 1, got {r}")

    def count(total: Fraction, weight: Fraction, low: int, slots: int) -> int:
        found = 0
        for n in range(low, max_den + 1):
            term = weight / n
            # even filling every slot with n cannot reach r; larger n only shrink
            tail = sum(weight / n**t for t in range(1, slots + 1))
            if total + tail < r:
                break
            reached = total + term
            if reached == r:
                found += 1
            elif reached < r and slots > 1:
                found += count(reached, term, n, slots - 1)
        return found

    return count(Fraction(0), Fraction(1), 2, max_len)


def _cf_value(prefix: list[int], tail: Fraction | None) -> Fraction | None:
    """``[a0; a1, ..., aj, tail]``; ``tail=None`` drops the tail entirely."""
    value = tail
    for a in reversed(prefix):
        value = Fraction(a) if value is None else a + 1 / value
    return value


def cf_unique_brute(r, max_sum: int) -> list[tuple[int, ...]]:
    """Every quotient sequence with ``a0 >= 0``, ``a_j >= 1`` and total at
    most ``max_sum`` whose trailing-1 value equals ``r``.

    A prefix ``a0..aj`` can only complete to values ``[a0; ..., aj, x]``
    with ``x >= 1``, which lie between the prefix's value at ``x = 1`` and
    at ``x -> infinity``; prefixes whose range misses ``r`` are dropped.
    """
    r = Fraction(r)
    hits = []
    prefix: list[int] = []

    def walk(budget: int) -> None:
        at_one = _cf_value(prefix, Fraction(1))
        at_inf = _cf_value(prefix, None)
        if not min(at_one, at_inf) <= r <= max(at_one, at_inf):
            return
        if at_one == r:
            hits.append(tuple(prefix))
        for a in range(1, budget + 1):
            prefix.append(a)
            walk(budget - a)
            prefix.pop()

    for a0 in range(0, max_sum + 1):
        prefix.append(a0)
        walk(max_sum - a0)
        prefix.pop()
    return hits
