"""One rank/unrank interface over every enumeration in the package, plus
prefix verification.

``unrank(k)`` is the value at position ``k``; ``rank(value)`` is the
position of ``value``. For the pairing schemes the pairing function itself
is the rank.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable

from . import bijections, sequences
from .errors import DomainError, NotFound, NotInImage
from .numerics import IntFoldCodec
from .pairings import LatticePair, PairingScheme, decode_pair, encode_pair

BIJECTIVE = "bijective"
INJECTIVE = "injective"
SURJECTIVE = "surjective"


@dataclass(frozen=True)
class SchemeDescriptor:
    id: str
    domain: str  # "Q+", "Q" or "pairs"
    kind: str
    has_rank: bool
    has_unrank: bool
    summary: str = ""
    rank: Callable[[Any], int] | None = field(default=None, repr=False, compare=False)
    unrank: Callable[[int], Any] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.kind == BIJECTIVE and not (self.has_rank and self.has_unrank):
            raise ValueError(f"bijective scheme {self.id} needs both directions")
        if self.has_rank != (self.rank is not None) or self.has_unrank != (self.unrank is not None):
            raise ValueError(f"scheme {self.id}: direction flags disagree with callables")

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "domain": self.domain,
            "kind": self.kind,
            "has_rank": self.has_rank,
            "has_unrank": self.has_unrank,
            "summary": self.summary,
        }


_PAIRING_SUMMARIES = {
    PairingScheme.ODD_POW2: "(2n-1)*2^(m-1)",
    PairingScheme.ONES_ZEROS: "(2^n-1)*2^m, binary 1^n 0^m",
    PairingScheme.UNARY_SEP: "2^(n+m+1)-1-2^m, binary 1^n 0 1^m",
    PairingScheme.TWO_BITS: "2^n+2^(n+m), binary 1 0^(m-1) 1 0^n",
    PairingScheme.GODEL: "2^n * 3^m",
    PairingScheme.PRIME_POWER: "p_m^n, p_1 = 2, p_2 = 3, ...",
    PairingScheme.CANTOR: "diagonal order (n+m-1)(n+m-2)/2+n",
    PairingScheme.BOX_L: "upside-down L shells M^2-M+m-n+1",
}


def _pairing_descriptor(scheme: PairingScheme) -> SchemeDescriptor:
    return SchemeDescriptor(
        id=scheme.value,
        domain="pairs",
        kind=BIJECTIVE if scheme.bijective else INJECTIVE,
        has_rank=True,
        has_unrank=True,
        summary=_PAIRING_SUMMARIES[scheme],
        rank=partial(encode_pair, scheme),
        unrank=partial(decode_pair, scheme),
    )


def _q_plus(id, summary, rank, unrank, kind=BIJECTIVE, domain="Q+") -> SchemeDescriptor:
    return SchemeDescriptor(
        id=id,
        domain=domain,
        kind=kind,
        has_rank=rank is not None,
        has_unrank=unrank is not None,
        summary=summary,
        rank=rank,
        unrank=unrank,
    )


_SCHEMES: dict[str, SchemeDescriptor] = {}

for _scheme in PairingScheme:
    _SCHEMES[_scheme.value] = _pairing_descriptor(_scheme)

for _desc in (
    _q_plus(
        "factor-signfold",
        "fold prime exponents with a -> 2a / -2a-1",
        partial(bijections.factor_fold, codec=IntFoldCodec.SIGN_FOLD),
        partial(bijections.factor_unfold, codec=IntFoldCodec.SIGN_FOLD),
    ),
    _q_plus(
        "factor-negabinary",
        "fold prime exponents by reading base -2 digits in base 2",
        partial(bijections.factor_fold, codec=IntFoldCodec.NEGABINARY),
        partial(bijections.factor_unfold, codec=IntFoldCodec.NEGABINARY),
    ),
    _q_plus(
        "poly-signfold",
        "exponents as a Z[x] polynomial, coefficient-wise sign fold",
        partial(bijections.poly_route_fold, codec=IntFoldCodec.SIGN_FOLD),
        partial(bijections.poly_route_unfold, codec=IntFoldCodec.SIGN_FOLD),
    ),
    _q_plus(
        "cf-binary",
        "sum of 2^b over running sums b of the continued fraction quotients "
        "(positive rationals only: 0 has no expansion with a trailing 1)",
        bijections.cf_encode,
        bijections.cf_decode,
    ),
    _q_plus(
        "ting",
        "g(1)=1, g(2k)=1+g(k), g(2k+1)=1/g(2k)",
        sequences.ting_rank,
        sequences.ting_gamma,
    ),
    _q_plus(
        "calkin-wilf",
        "ratios b(k-1)/b(k) of hyperbinary counts",
        sequences.calkin_wilf_rank,
        sequences.calkin_wilf,
    ),
    _q_plus(
        "lauwerier",
        "proper fractions by denominator, each followed by its reciprocal",
        sequences.lauwerier_rank,
        sequences.lauwerier_unrank,
    ),
    _q_plus(
        "cohen-engel",
        "Engel denominators of x/(x+1) packed as bits n_j+j-3",
        sequences.cohen_encode,
        sequences.cohen_decode,
    ),
    _q_plus(
        "grant-priest",
        "(fours+1)/(sevens+1) over decimal digits",
        None,
        sequences.grant_priest,
        kind=SURJECTIVE,
    ),
    _q_plus(
        "prime-power-surjection",
        "p_m^n -> n/m, everything else -> 1/1",
        None,
        sequences.prime_power_surjection,
        kind=SURJECTIVE,
    ),
    _q_plus(
        "ginsberg",
        "the text [-]a/b read in base 12 ('/'=10, '-'=11)",
        sequences.ginsberg_encode,
        sequences.ginsberg_decode,
        kind=INJECTIVE,
        domain="Q",
    ),
):
    _SCHEMES[_desc.id] = _desc


def get_scheme(id: str) -> SchemeDescriptor:
    try:
        return _SCHEMES[id]
    except KeyError:
        raise NotFound(f"unknown scheme {id!r}") from None


def scheme_ids() -> list[str]:
    return list(_SCHEMES)


def schemes() -> list[SchemeDescriptor]:
    return list(_SCHEMES.values())


def _require_qplus_bijection(desc: SchemeDescriptor) -> None:
    if desc.kind != BIJECTIVE or desc.domain != "Q+":
        raise DomainError(f"{desc.id} is not a bijection onto the positive rationals")


def compose_permutation(a: str, b: str, k: int) -> int:
    """Position under ``b`` of the ``k``-th rational under ``a``."""
    first, second = get_scheme(a), get_scheme(b)
    _require_qplus_bijection(first)
    _require_qplus_bijection(second)
    return second.rank(first.unrank(k))


# -- prefix verification --------------------------------------------------------

@dataclass
class VerificationReport:
    scheme: str
    prefix: int
    checks: list[str] = field(default_factory=list)
    failure: tuple[int, str] | None = None
    notes: list[str] = field(default_factory=list)
    all_failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_json(self) -> str:
        data = {
            "scheme": self.scheme,
            "prefix": self.prefix,
            "checks": self.checks,
            "passed": self.passed,
            "failure": None,
            "notes": self.notes,
        }
        if self.failure is not None:
            data["failure"] = {"index": self.failure[0], "detail": self.failure[1]}
        if self.all_failures:
            data["all_failures"] = [{"index": k, "detail": d} for k, d in self.all_failures]
        return json.dumps(data, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL at k={self.failure[0]}: {self.failure[1]}"
        return f"{self.scheme} prefix={self.prefix} checks={','.join(self.checks)} {status}"


_GAP = object()
_BROKEN = object()


def _scan(scheme_id: str, lo: int, hi: int, stop_first: bool = True) -> tuple[list, list]:
    """Unrank ``lo..hi`` and round-trip each value."""
    desc = get_scheme(scheme_id)
    values: list = []
    failures: list[tuple[int, str]] = []
    for k in range(lo, hi + 1):
        if failures and stop_first:
            break
        try:
            value = desc.unrank(k)
        except NotInImage:
            if desc.kind == INJECTIVE:
                values.append(_GAP)
            else:
                values.append(_BROKEN)
                failures.append((k, "unrank undefined"))
            continue
        except Exception as exc:
            values.append(_BROKEN)
            failures.append((k, f"unrank raised {type(exc).__name__}: {exc}"))
            continue
        values.append(value)
        if desc.has_rank:
            try:
                back = desc.rank(value)
            except Exception as exc:
                failures.append((k, f"rank({_show(value)}) raised {type(exc).__name__}: {exc}"))
                continue
            if back != k:
                failures.append((k, f"rank({_show(value)}) = {back}"))
    return values, failures


def _show(value) -> str:
    if isinstance(value, LatticePair):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def _pairing_image_gaps(scheme: PairingScheme, limit: int) -> list[tuple[int, str]]:
    """Enumerate every pair whose code is <= limit.

    For the bijective pairings codes increase in ``m`` for fixed ``n`` and
    the ``(n, 1)`` codes increase in ``n``, which bounds both loops.
    """
    hits = bytearray(limit + 1)
    out = []
    n = 1
    while encode_pair(scheme, (n, 1)) <= limit:
        m = 1
        while (code := encode_pair(scheme, (n, m))) <= limit:
            if hits[code]:
                out.append((code, f"code {code} hit twice"))
            hits[code] = 1
            m += 1
        n += 1
    out.extend((k, f"code {k} not hit by any pair") for k in range(1, limit + 1) if not hits[k])
    return sorted(out)


def verify_prefix(
    scheme_id: str, n: int, workers: int = 1, all_failures: bool = False
) -> VerificationReport:
    """Check positions 1..n of a scheme.

    Unrank must be defined (injective schemes may skip codes outside their
    image), values must be distinct unless the scheme is only a surjection,
    and rank must invert unrank wherever rank exists. Bijective pairings
    additionally have every code up to ``n`` hit exactly once.

    The report names the lowest failing index whatever ``workers`` is;
    ``all_failures`` also lists every failure found.
    """
    desc = get_scheme(scheme_id)
    if n < 1:
        raise DomainError(f"prefix length must be >= 1, got {n}")
    report = VerificationReport(scheme_id, n, checks=["unrank"])
    if desc.kind != SURJECTIVE:
        report.checks.append("distinct")
    if desc.has_rank:
        report.checks.append("rank-roundtrip")

    stop_first = not all_failures
    workers = max(1, min(workers, n // 1000 or 1))
    step = -(-n // workers)
    bounds = [(lo, min(lo + step - 1, n)) for lo in range(1, n + 1, step)]
    if workers == 1:
        chunks = [_scan(scheme_id, 1, n, stop_first)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(_scan, [scheme_id] * len(bounds), *zip(*bounds), [stop_first] * len(bounds))
            )

    failures = [f for _, chunk_failures in chunks for f in chunk_failures]
    # a chunk stopped early only has trustworthy values below its failure
    horizon = min((k for k, _ in failures), default=n + 1) if stop_first else n + 1
    gaps = 0
    if desc.kind != SURJECTIVE:
        first_seen: dict = {}
        for (lo, _), (values, _) in zip(bounds, chunks):
            for k, value in enumerate(values, start=lo):
                if k >= horizon:
                    break
                if value is _GAP:
                    gaps += 1
                    continue
                if value is _BROKEN:
                    continue
                if value in first_seen:
                    failures.append((k, f"{_show(value)} already at k={first_seen[value]}"))
                    if stop_first:
                        horizon = k
                        break
                    continue
                first_seen[value] = k
    if desc.domain == "pairs" and desc.kind == BIJECTIVE:
        report.checks.append("image-prefix")
        failures.extend(_pairing_image_gaps(PairingScheme(scheme_id), n))
    if failures:
        failures.sort()
        report.failure = failures[0]
        if all_failures:
            report.all_failures = failures
    if gaps:
        report.notes.append(f"{gaps} of {n} codes lie outside the image (injection, not surjection)")
    return report
