"""Exact arithmetic building blocks: rationals, primes, factorizations,
finite continued fractions and the integer folding codecs.

Every rational handled by the package is a :class:`fractions.Fraction`,
which is always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import enum
import threading
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping

import sympy

from .errors import DomainError, InvariantError, ResourceError

__all__ = [
    "ContinuedFraction",
    "IntFoldCodec",
    "PrimeTable",
    "cf_eval",
    "cf_expand",
    "defactorize",
    "factorize",
    "factorize_int",
    "fold_int",
    "format_rational",
    "is_prime",
    "nth_prime",
    "parse_rational",
    "prime_index",
    "reduce",
    "unfold_int",
]


# -- rationals ---------------------------------------------------------------

def reduce(p: int, q: int) -> Fraction:
    """Return the positive rational ``p/q`` in lowest terms."""
    if p < 1 or q < 1:
        raise DomainError(f"positive numerator and denominator required, got {p}/{q}")
    return Fraction(p, q)


def as_positive(r) -> Fraction:
    r = Fraction(r)
    if r <= 0:
        raise DomainError(f"positive rational required, got {format_rational(r)}")
    return r


def format_rational(r: Fraction) -> str:
    """Canonical text form ``p/q``; the denominator is always printed."""
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a bare integer. Whitespace inside is rejected."""
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        if not slash:
            return Fraction(_parse_int(num))
        d = _parse_int(den)
        if d <= 0:
            raise ValueError
        return Fraction(_parse_int(num), d)
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None


def _parse_int(s: str) -> int:
    body = s[1:] if s[:1] in "+-" else s
    if not body.isdigit() or not body.isascii():
        raise ValueError(s)
    return int(s)


# -- primes --------------------------------------------------------------------

class PrimeTable:
    """Extendable Eratosthenes sieve.

    Reads never block; extension is serialized by a lock and publishes a
    fresh list, so a reader sees either the old table or the new one.
    ``max_primes`` caps how many primes :meth:`nth` is allowed to produce.
    """

    def __init__(self, max_primes: int = 100_000, initial_bound: int = 1 << 16):
        self.max_primes = max_primes
        self._lock = threading.Lock()
        self._bound = 1
        self._primes: list[int] = []
        self._extend_to(initial_bound)

    @property
    def bound(self) -> int:
        return self._bound

    @property
    def primes(self) -> list[int]:
        return self._primes

    def _extend_to(self, bound: int) -> None:
        with self._lock:
            if bound <= self._bound:
                return
            bound = max(bound, 2 * self._bound)
            sieve = bytearray([1]) * (bound + 1)
            sieve[0:2] = b"\x00\x00"
            for p in range(2, isqrt(bound) + 1):
                if sieve[p]:
                    sieve[p * p :: p] = bytes(len(range(p * p, bound + 1, p)))
            self._primes = [i for i, flag in enumerate(sieve) if flag]
            self._bound = bound

    def nth(self, i: int) -> int:
        if i < 1:
            raise DomainError(f"prime index must be >= 1, got {i}")
        if i > self.max_primes:
            raise ResourceError(f"prime #{i} exceeds the table cap of {self.max_primes}")
        while len(self._primes) < i:
            self._extend_to(2 * self._bound)
        return self._primes[i - 1]

    def index(self, p: int) -> int:
        """1-based position of the prime ``p`` in increasing order."""
        if p > self._bound:
            if p > self.nth(self.max_primes):
                raise ResourceError(f"prime {p} lies beyond the table cap")
        primes = self._primes
        i = bisect_left(primes, p)
        if i == len(primes) or primes[i] != p:
            raise DomainError(f"{p} is not prime")
        return i + 1

    def is_prime(self, n: int) -> bool:
        if n <= self._bound:
            primes = self._primes
            i = bisect_left(primes, n)
            return i < len(primes) and primes[i] == n
        return bool(sympy.isprime(n))

    def factorize(self, n: int) -> dict[int, int]:
        if n < 1:
            raise DomainError(f"cannot factor {n}")
        out: dict[int, int] = {}
        for p in self._primes:
            if p * p > n:
                break
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out[p] = e
        else:
            if n > 1 and not self.is_prime(n):
                # residue has no factor below the sieve bound
                for p, e in sorted(sympy.factorint(n).items()):
                    out[int(p)] = int(e)
                return out
        if n > 1:
            out[n] = out.get(n, 0) + 1
        return out


_table = PrimeTable()


def prime_table() -> PrimeTable:
    return _table


def nth_prime(i: int) -> int:
    """The ``i``-th prime, counting ``nth_prime(1) == 2``."""
    return _table.nth(i)


def prime_index(p: int) -> int:
    return _table.index(p)


def is_prime(n: int) -> bool:
    return n >= 2 and _table.is_prime(n)


def factorize_int(n: int) -> dict[int, int]:
    return _table.factorize(n)


def factorize(r) -> dict[int, int]:
    """Prime -> exponent map of a positive rational.

    Primes of the denominator get negative exponents; keys come out in
    increasing order and ``1`` factors to the empty map.
    """
    r = as_positive(r)
    out = dict(factorize_int(r.numerator))
    for p, e in factorize_int(r.denominator).items():
        out[p] = -e
    return dict(sorted(out.items()))


def defactorize(exponents: Mapping[int, int]) -> Fraction:
    num = den = 1
    last = 1
    for p, e in exponents.items():
        if p <= last:
            raise InvariantError("primes must be listed in strictly increasing order")
        if not is_prime(p):
            raise InvariantError(f"{p} is not prime")
        if e == 0:
            raise InvariantError(f"zero exponent stored for prime {p}")
        if e > 0:
            num *= p**e
        else:
            den *= p**-e
        last = p
    return Fraction(num, den)


# -- continued fractions -------------------------------------------------------

@dataclass(frozen=True)
class ContinuedFraction:
    """Partial quotients ``a0, ..., an`` of a finite continued fraction.

    The value is ``a0 + 1/(a1 + 1/(... + 1/(an + 1/1)))``: the closing
    ``1/1`` is implied by evaluation and is not stored. Under that
    convention every positive rational has exactly one expansion.
    """

    quotients: tuple[int, ...]

    def __post_init__(self):
        q = tuple(self.quotients)
        object.__setattr__(self, "quotients", q)
        if not q:
            raise InvariantError("a continued fraction needs at least one quotient")
        if q[0] < 0 or any(a < 1 for a in q[1:]):
            raise InvariantError(f"bad partial quotients {q}")

    @property
    def partial_sums(self) -> tuple[int, ...]:
        sums = []
        total = 0
        for a in self.quotients:
            total += a
            sums.append(total)
        return tuple(sums)

    def value(self) -> Fraction:
        return cf_eval(self)


def cf_expand(r) -> ContinuedFraction:
    r = as_positive(r)
    p, q = r.numerator, r.denominator
    quotients = []
    while q:
        a, rem = divmod(p, q)
        quotients.append(a)
        p, q = q, rem
    # Euclid ends on a quotient >= 2 (or a lone integer); peel off the 1/1
    quotients[-1] -= 1
    return ContinuedFraction(tuple(quotients))


def cf_eval(cf: ContinuedFraction | Iterable[int]) -> Fraction:
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))
    p, q = 1, 1
    for a in reversed(cf.quotients):
        # a + 1/(p/q) = (a p + q)/p
        p, q = a * p + q, p
    return Fraction(p, q)


# -- integer folding codecs -----------------------------------------------------

class IntFoldCodec(str, enum.Enum):
    """Bijections from the integers onto the naturals that fix 0."""

    SIGN_FOLD = "sign-fold"
    NEGABINARY = "negabinary"

    def fold(self, a: int) -> int:
        if self is IntFoldCodec.SIGN_FOLD:
            return 2 * a if a >= 0 else -2 * a - 1
        out = 0
        bit = 0
        while a:
            r = a & 1
            if r:
                out |= 1 << bit
            a = (a - r) // -2
            bit += 1
        return out

    def unfold(self, b: int) -> int:
        if b < 0:
            raise DomainError(f"cannot unfold a negative value {b}")
        if self is IntFoldCodec.SIGN_FOLD:
            return b // 2 if b % 2 == 0 else -(b + 1) // 2
        out = 0
        place = 1
        while b:
            if b & 1:
                out += place
            b >>= 1
            place *= -2
        return out


def fold_int(codec: IntFoldCodec | str, a: int) -> int:
    return IntFoldCodec(codec).fold(a)


def unfold_int(codec: IntFoldCodec | str, b: int) -> int:
    return IntFoldCodec(codec).unfold(b)
