"""Enumerations of the positive rationals presented as sequences.

Each forward map ``k -> rational`` comes with the inverse (a rank) where
the enumeration is a bijection, or with a witness/partial inverse where it
is only a surjection or injection.
"""

from __future__ import annotations

import re
import threading
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from .errors import DomainError, InvariantError, NotInImage
from .numerics import as_positive, cf_eval, factorize_int, prime_index


def _check_index(k: int) -> None:
    if k < 1:
        raise DomainError(f"indices start at 1, got {k}")


# -- Ting's recursion ---------------------------------------------------------

def ting_gamma(k: int) -> Fraction:
    """gamma(1) = 1, gamma(2k) = 1 + gamma(k), gamma(2k+1) = 1/gamma(2k).

    Walks the binary digits of ``k`` below the leading one, so the cost is
    linear in ``k.bit_length()``.
    """
    _check_index(k)
    p = q = 1
    for bit in bin(k)[3:]:
        p += q
        if bit == "1":
            p, q = q, p
    return Fraction(p, q)


def ting_rank(r) -> int:
    r = as_positive(r)
    p, q = r.numerator, r.denominator
    low = 0
    pos = 0
    while (p, q) != (1, 1):
        if p > q:
            # gamma(2k) = 1 + gamma(k): each unit subtracted is a trailing 0 bit
            steps = (p - 1) // q
            p -= steps * q
            pos += steps
        else:
            # r = 1/(1 + gamma(k)) sits at 2k + 1
            p, q = q - p, p
            low |= 1 << pos
            pos += 1
    return (1 << pos) | low


@dataclass(frozen=True)
class TingConstruction:
    """A finite set of positive integers and the gaps between its members."""

    members: frozenset[int]
    gaps: tuple[int, ...]

    def gamma(self) -> Fraction:
        # rho = 1/(a1 + 1/(... + 1/(an + 1/1))), gamma = 1/rho - 1
        rho = 1 / cf_eval(self.gaps)
        return 1 / rho - 1


def ting_sets(k: int) -> TingConstruction:
    _check_index(k)
    members = {1}
    for bit in bin(k)[3:]:
        members = {x + 1 for x in members}
        if bit == "1":
            members.add(1)
    ordered = sorted(members)
    gaps = tuple(b - a for a, b in zip([0] + ordered, ordered))
    return TingConstruction(frozenset(members), gaps)


# -- hyperbinary numbers and the Calkin-Wilf sequence -------------------------

class _HyperbinaryTable:
    """Append-only memo of b(0), b(1), ... filled by the two-term recursion."""

    def __init__(self, limit: int = 1 << 20):
        self.limit = limit
        self._lock = threading.Lock()
        self._values = [1]

    def get(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            b = list(values)
            for j in range(len(b), n + 1):
                if j & 1:
                    b.append(b[(j - 1) >> 1])
                else:
                    b.append(b[(j - 2) >> 1] + b[j >> 1])
            self._values = b
            return b[n]


_hyperbinary = _HyperbinaryTable()


def _stern_pair(n: int) -> tuple[int, int]:
    """(b(n-1), b(n)) for n >= 1, by descent over the bits of ``n``."""
    # s(n) = b(n-1) obeys s(2j) = s(j), s(2j+1) = s(j) + s(j+1)
    a, b = 0, 1
    for bit in bin(n)[2:]:
        if bit == "1":
            a = a + b
        else:
            b = a + b
    return a, b


def hyperbinary(n: int) -> int:
    """Number of ways to write ``n`` as a sum of powers of two, each used
    at most twice."""
    if n < 0:
        raise DomainError(f"hyperbinary count of a negative number {n}")
    if n <= _hyperbinary.limit:
        return _hyperbinary.get(n)
    return _stern_pair(n + 1)[0]


def calkin_wilf(k: int) -> Fraction:
    _check_index(k)
    before, at = _stern_pair(k)
    return Fraction(before, at)


def calkin_wilf_rank(r) -> int:
    r = as_positive(r)
    p, q = r.numerator, r.denominator
    low = 0
    pos = 0
    while (p, q) != (1, 1):
        if p < q:
            # left child: k = 2 * parent
            steps = (q - 1) // p
            q -= steps * p
            pos += steps
        else:
            # right child: k = 2 * parent + 1
            steps = (p - 1) // q
            p -= steps * q
            low |= ((1 << steps) - 1) << pos
            pos += steps
    return (1 << pos) | low


# -- denominator-ordered listing ---------------------------------------------

class _TotientSums:
    """prefix[d] = phi(2) + ... + phi(d); prefix[0] = prefix[1] = 0."""

    def __init__(self):
        self._lock = threading.Lock()
        self._prefix = [0, 0]

    def upto(self, d: int) -> list[int]:
        prefix = self._prefix
        if d < len(prefix):
            return prefix
        with self._lock:
            if d >= len(self._prefix):
                self._grow(max(d, 2 * len(self._prefix)))
            return self._prefix

    def covering(self, j: int) -> list[int]:
        """A prefix table whose last entry exceeds ``j``."""
        prefix = self._prefix
        while prefix[-1] <= j:
            prefix = self.upto(2 * len(prefix))
        return prefix

    def _grow(self, bound: int) -> None:
        phi = list(range(bound + 1))
        for p in range(2, bound + 1):
            if phi[p] == p:
                for m in range(p, bound + 1, p):
                    phi[m] -= phi[m] // p
        prefix = [0, 0]
        total = 0
        for d in range(2, bound + 1):
            total += phi[d]
            prefix.append(total)
        self._prefix = prefix


_totients = _TotientSums()


def _coprime_upto(x: int, primes: list[int]) -> int:
    """How many of 1..x avoid every prime in ``primes``."""
    total = 0
    for size in range(len(primes) + 1):
        sign = -1 if size & 1 else 1
        for combo in combinations(primes, size):
            total += sign * (x // prod(combo))
    return total


def lauwerier_unrank(k: int) -> Fraction:
    """1/1, 1/2, 2/1, 1/3, 3/1, 2/3, 3/2, ...: proper fractions by
    denominator then numerator, each followed by its reciprocal."""
    _check_index(k)
    if k == 1:
        return Fraction(1)
    j, flip = divmod(k - 2, 2)
    prefix = _totients.covering(j)
    d = bisect_right(prefix, j)
    target = j - prefix[d - 1] + 1
    primes = list(factorize_int(d))
    lo, hi = 1, d - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _coprime_upto(mid, primes) >= target:
            hi = mid
        else:
            lo = mid + 1
    return Fraction(d, lo) if flip else Fraction(lo, d)


def lauwerier_rank(r) -> int:
    r = as_positive(r)
    p, q = r.numerator, r.denominator
    if p == q:
        return 1
    if p > q:
        return lauwerier_rank(Fraction(q, p)) + 1
    prefix = _totients.upto(q)
    before = prefix[q - 1] + _coprime_upto(p - 1, list(factorize_int(q)))
    return 2 + 2 * before


# -- Engel expansions and Cohen's code ----------------------------------------

@dataclass(frozen=True)
class EngelExpansion:
    """Denominators n1 <= n2 <= ... of r = 1/n1 + 1/(n1 n2) + ..."""

    denoms: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.denoms)
        object.__setattr__(self, "denoms", d)
        if not d:
            raise InvariantError("an Engel expansion has at least one term")
        if d[0] < 2:
            raise InvariantError(f"first denominator must be >= 2, got {d[0]}")
        if any(b < a for a, b in zip(d, d[1:])):
            raise InvariantError(f"denominators must be nondecreasing: {d}")


def engel_expand(r) -> EngelExpansion:
    r = Fraction(r)
    if not 0 < r < 1:
        raise DomainError(f"Engel expansions need 0 < r < 1, got {r}")
    p, q = r.numerator, r.denominator
    denoms = []
    while p:
        n = -(-q // p)
        denoms.append(n)
        p, q = p * n - q, q
        g = gcd(p, q)
        p, q = p // g, q // g
    return EngelExpansion(tuple(denoms))


def engel_eval(e: EngelExpansion | tuple[int, ...]) -> Fraction:
    if not isinstance(e, EngelExpansion):
        e = EngelExpansion(tuple(e))
    # Horner form: (1 + (1 + ...)/n2)/n1
    a, b = 0, 1
    for n in reversed(e.denoms):
        a, b = a + b, b * n
    return Fraction(a, b)


def cohen_encode(x) -> int:
    x = as_positive(x)
    p, q = x.numerator, x.denominator
    out = 0
    for j, n in enumerate(engel_expand(Fraction(p, p + q)).denoms, start=1):
        out |= 1 << (n + j - 3)
    return out


def cohen_decode(k: int) -> Fraction:
    _check_index(k)
    denoms = []
    pos = 0
    while k:
        if k & 1:
            denoms.append(pos - len(denoms) + 2)
        k >>= 1
        pos += 1
    r = engel_eval(EngelExpansion(tuple(denoms)))
    return r / (1 - r)


# -- digit-counting surjection ------------------------------------------------

def grant_priest(x: int) -> Fraction:
    """(fours + 1)/(sevens + 1) over the decimal digits of ``x``."""
    _check_index(x)
    digits = str(x)
    return Fraction(digits.count("4") + 1, digits.count("7") + 1)


def grant_priest_preimage(r) -> int:
    r = as_positive(r)
    digits = "4" * (r.numerator - 1) + "7" * (r.denominator - 1)
    return int(digits) if digits else 1


def prime_power_surjection(k: int) -> Fraction:
    """``p_m ** n -> n/m`` on prime powers; every other integer maps to 1."""
    _check_index(k)
    factors = factorize_int(k)
    if len(factors) != 1:
        return Fraction(1)
    ((p, n),) = factors.items()
    return Fraction(n, prime_index(p))


# -- base-12 injection of all rationals ---------------------------------------

_SYMBOL_VALUE = {**{str(d): d for d in range(10)}, "/": 10, "-": 11}
_VALUE_SYMBOL = {v: s for s, v in _SYMBOL_VALUE.items()}
_CANONICAL = re.compile(r"-?(0|[1-9][0-9]*)/[1-9][0-9]*")


def ginsberg_string(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def ginsberg_encode(q) -> int:
    """Read the text ``[-]a/b`` as a base-12 numeral ('/' = 10, '-' = 11)."""
    out = 0
    for ch in ginsberg_string(q):
        out = out * 12 + _SYMBOL_VALUE[ch]
    return out


def ginsberg_decode(k: int) -> Fraction:
    if k < 1:
        raise NotInImage(f"{k} is not a base-12 fraction code")
    symbols = []
    while k:
        k, d = divmod(k, 12)
        symbols.append(_VALUE_SYMBOL[d])
    text = "".join(reversed(symbols))
    if text.startswith("/"):
        # a numerator of 0 vanishes as a leading zero digit
        text = "0" + text
    if not _CANONICAL.fullmatch(text):
        raise NotInImage(f"{text!r} is not a fraction")
    num, den = text.split("/")
    a, b = int(num), int(den)
    if gcd(a, b) != 1 or (a == 0 and num != "0"):
        raise NotInImage(f"{text!r} is not in lowest terms")
    return Fraction(a, b)
