"""Enumerations of the positive rationals behind one rank/unrank interface."""

from .bijections import (
    IntegerPolynomial,
    cf_decode,
    cf_encode,
    factor_fold,
    factor_unfold,
    from_polynomial,
    poly_route_fold,
    poly_route_unfold,
    to_polynomial,
)
from .errors import DomainError, InvariantError, NotFound, NotInImage, RatCountError, ResourceError
from .numerics import (
    ContinuedFraction,
    IntFoldCodec,
    cf_eval,
    cf_expand,
    defactorize,
    factorize,
    fold_int,
    format_rational,
    nth_prime,
    parse_rational,
    reduce,
    unfold_int,
)
from .oracles import cf_unique_brute, engel_unique_brute, hyperbinary_brute
from .pairings import LatticePair, PairingScheme, decode_pair, encode_pair, l2_prefix
from .registry import SchemeDescriptor, VerificationReport, compose_permutation, get_scheme, verify_prefix
from .sequences import (
    EngelExpansion,
    TingConstruction,
    calkin_wilf,
    calkin_wilf_rank,
    cohen_decode,
    cohen_encode,
    engel_eval,
    engel_expand,
    ginsberg_decode,
    ginsberg_encode,
    grant_priest,
    grant_priest_preimage,
    hyperbinary,
    lauwerier_rank,
    lauwerier_unrank,
    prime_power_surjection,
    ting_gamma,
    ting_rank,
    ting_sets,
)

__version__ = "0.1.0"
