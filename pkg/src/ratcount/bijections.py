"""Bijections between the positive rationals and the positive integers
built from prime factorizations and from continued fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import DomainError
from .numerics import (
    ContinuedFraction,
    IntFoldCodec,
    as_positive,
    cf_eval,
    cf_expand,
    factorize,
    factorize_int,
    nth_prime,
    prime_index,
)


def factor_fold(r, codec: IntFoldCodec | str = IntFoldCodec.SIGN_FOLD) -> int:
    """Fold every prime exponent of ``r`` into a natural number.

    >>> factor_fold(Fraction(3, 5))
    45
    """
    codec = IntFoldCodec(codec)
    out = 1
    for p, e in factorize(r).items():
        out *= p ** codec.fold(e)
    return out


def factor_unfold(k: int, codec: IntFoldCodec | str = IntFoldCodec.SIGN_FOLD) -> Fraction:
    if k < 1:
        raise DomainError(f"codes are positive integers, got {k}")
    codec = IntFoldCodec(codec)
    num = den = 1
    for p, b in factorize_int(k).items():
        e = codec.unfold(b)
        if e > 0:
            num *= p**e
        else:
            den *= p**-e
    return Fraction(num, den)


class IntegerPolynomial:
    """Polynomial with integer coefficients, stored sparsely by degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        for d, c in sorted((coeffs or {}).items()):
            if d < 0:
                raise DomainError(f"negative degree {d}")
            if c:
                clean[d] = c
        self._coeffs = clean

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __getitem__(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntegerPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return IntegerPolynomial(out)

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return self + (-other)

    def __repr__(self) -> str:
        return f"IntegerPolynomial({self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self._coeffs.items():
            mag = abs(c)
            if d == 0:
                term = str(mag)
            else:
                term = "x" if d == 1 else f"x^{d}"
                if mag != 1:
                    term = f"{mag}*{term}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def to_polynomial(r) -> IntegerPolynomial:
    """Exponent of the ``(d+1)``-th prime becomes the coefficient of ``x^d``."""
    return IntegerPolynomial({prime_index(p) - 1: e for p, e in factorize(r).items()})


def from_polynomial(poly: IntegerPolynomial) -> Fraction:
    num = den = 1
    for d, c in poly.coeffs.items():
        p = nth_prime(d + 1)
        if c > 0:
            num *= p**c
        else:
            den *= p**-c
    return Fraction(num, den)


def poly_route_fold(r, codec: IntFoldCodec | str = IntFoldCodec.SIGN_FOLD) -> int:
    """Rational -> Z[x] -> N[x] (coefficient-wise fold) -> positive integer."""
    codec = IntFoldCodec(codec)
    poly = to_polynomial(r)
    folded = IntegerPolynomial({d: codec.fold(c) for d, c in poly.coeffs.items()})
    out = 1
    for d, b in folded.coeffs.items():
        out *= nth_prime(d + 1) ** b
    return out


def poly_route_unfold(k: int, codec: IntFoldCodec | str = IntFoldCodec.SIGN_FOLD) -> Fraction:
    if k < 1:
        raise DomainError(f"codes are positive integers, got {k}")
    codec = IntFoldCodec(codec)
    natural = IntegerPolynomial({prime_index(p) - 1: b for p, b in factorize_int(k).items()})
    return from_polynomial(IntegerPolynomial({d: codec.unfold(b) for d, b in natural.coeffs.items()}))


def cf_encode(r) -> int:
    """Set bit ``b`` for every running sum ``b`` of the partial quotients."""
    out = 0
    for b in cf_expand(as_positive(r)).partial_sums:
        out |= 1 << b
    return out


def cf_decode(k: int) -> Fraction:
    if k < 1:
        raise DomainError(f"codes are positive integers, got {k}")
    quotients = []
    prev = 0
    pos = 0
    while k:
        if k & 1:
            quotients.append(pos - prev)
            prev = pos
        k >>= 1
        pos += 1
    return cf_eval(ContinuedFraction(tuple(quotients)))
