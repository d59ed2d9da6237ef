"""Maps from pairs of positive integers into the positive integers.

Three of the schemes (``odd-pow2``, ``cantor``, ``box-l``) are bijections;
the other five are injections whose images thin out exponentially. Every
scheme has a decoder; for the injective ones it raises
:class:`~ratcount.errors.NotInImage` off the image.
"""

from __future__ import annotations

import enum
from itertools import islice
from math import isqrt
from typing import Iterator, NamedTuple

from .errors import DomainError, NotInImage
from .numerics import factorize_int, nth_prime, prime_index


class LatticePair(NamedTuple):
    n: int
    m: int

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


class PairingScheme(str, enum.Enum):
    ODD_POW2 = "odd-pow2"
    ONES_ZEROS = "ones-zeros"
    UNARY_SEP = "unary-sep"
    TWO_BITS = "two-bits"
    GODEL = "godel"
    PRIME_POWER = "prime-power"
    CANTOR = "cantor"
    BOX_L = "box-l"

    @property
    def bijective(self) -> bool:
        return self in _BIJECTIVE


_BIJECTIVE = frozenset({PairingScheme.ODD_POW2, PairingScheme.CANTOR, PairingScheme.BOX_L})


def _check_pair(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise DomainError(f"pair coordinates must be positive, got ({n},{m})")


def _two_adic(k: int) -> tuple[int, int]:
    """Split ``k`` as ``odd * 2**v`` and return ``(odd, v)``."""
    v = (k & -k).bit_length() - 1
    return k >> v, v


def encode_pair(scheme: PairingScheme | str, pair: tuple[int, int]) -> int:
    n, m = pair
    _check_pair(n, m)
    scheme = PairingScheme(scheme)
    if scheme is PairingScheme.ODD_POW2:
        return (2 * n - 1) << (m - 1)
    if scheme is PairingScheme.ONES_ZEROS:
        return ((1 << n) - 1) << m
    if scheme is PairingScheme.UNARY_SEP:
        return (1 << (n + m + 1)) - 1 - (1 << m)
    if scheme is PairingScheme.TWO_BITS:
        return (1 << n) + (1 << (n + m))
    if scheme is PairingScheme.GODEL:
        return (1 << n) * 3**m
    if scheme is PairingScheme.PRIME_POWER:
        return nth_prime(m) ** n
    if scheme is PairingScheme.CANTOR:
        s = n + m
        return (s - 1) * (s - 2) // 2 + n
    big = max(n, m)
    return big * big - big + m - n + 1


def decode_pair(scheme: PairingScheme | str, k: int) -> LatticePair:
    if k < 1:
        raise DomainError(f"codes are positive integers, got {k}")
    scheme = PairingScheme(scheme)
    return _DECODERS[scheme](k)


def _not_in_image(scheme: PairingScheme, k: int) -> NotInImage:
    return NotInImage(f"{k} is not a {scheme.value} code")


def _decode_odd_pow2(k: int) -> LatticePair:
    odd, v = _two_adic(k)
    return LatticePair((odd + 1) // 2, v + 1)


def _decode_ones_zeros(k: int) -> LatticePair:
    odd, m = _two_adic(k)
    n = odd.bit_length()
    if m < 1 or odd != (1 << n) - 1:
        raise _not_in_image(PairingScheme.ONES_ZEROS, k)
    return LatticePair(n, m)


def _decode_unary_sep(k: int) -> LatticePair:
    ones, sep, tail = bin(k)[2:].partition("0")
    if not sep or not tail or set(tail) != {"1"}:
        raise _not_in_image(PairingScheme.UNARY_SEP, k)
    return LatticePair(len(ones), len(tail))


def _decode_two_bits(k: int) -> LatticePair:
    low, n = _two_adic(k)
    high = low - 1
    if n < 1 or high < 2 or high & (high - 1):
        raise _not_in_image(PairingScheme.TWO_BITS, k)
    return LatticePair(n, high.bit_length() - 1)


def _decode_godel(k: int) -> LatticePair:
    rest, n = _two_adic(k)
    m = 0
    while rest % 3 == 0:
        rest //= 3
        m += 1
    if n < 1 or m < 1 or rest != 1:
        raise _not_in_image(PairingScheme.GODEL, k)
    return LatticePair(n, m)


def _decode_prime_power(k: int) -> LatticePair:
    factors = factorize_int(k)
    if len(factors) != 1:
        raise _not_in_image(PairingScheme.PRIME_POWER, k)
    ((p, n),) = factors.items()
    return LatticePair(n, prime_index(p))


def _decode_cantor(k: int) -> LatticePair:
    # diagonal s = n + m - 1 holds codes T(s-1)+1 .. T(s), T(s) = s(s+1)/2
    s = (isqrt(8 * k) + 1) // 2
    while s * (s + 1) // 2 < k:
        s += 1
    while s > 1 and (s - 1) * s // 2 >= k:
        s -= 1
    n = k - (s - 1) * s // 2
    return LatticePair(n, s + 1 - n)


def _decode_box_l(k: int) -> LatticePair:
    big = isqrt(k - 1) + 1  # ceil(sqrt(k))
    offset = k - (big - 1) ** 2
    if offset <= big:
        return LatticePair(big, offset)
    return LatticePair(big * big - k + 1, big)


_DECODERS = {
    PairingScheme.ODD_POW2: _decode_odd_pow2,
    PairingScheme.ONES_ZEROS: _decode_ones_zeros,
    PairingScheme.UNARY_SEP: _decode_unary_sep,
    PairingScheme.TWO_BITS: _decode_two_bits,
    PairingScheme.GODEL: _decode_godel,
    PairingScheme.PRIME_POWER: _decode_prime_power,
    PairingScheme.CANTOR: _decode_cantor,
    PairingScheme.BOX_L: _decode_box_l,
}


def iter_l2() -> Iterator[LatticePair]:
    """The box-ordered list that interleaves each pair with its swap.

    Shell ``M`` contributes ``(1,M), (M,1), (2,M), (M,2), ..., (M,M)``.
    """
    big = 1
    while True:
        for n in range(1, big):
            yield LatticePair(n, big)
            yield LatticePair(big, n)
        yield LatticePair(big, big)
        big += 1


def l2_prefix(count: int) -> list[LatticePair]:
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return list(islice(iter_l2(), count))
