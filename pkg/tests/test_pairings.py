import pytest

from ratcount.errors import DomainError, NotInImage
from ratcount.pairings import LatticePair, PairingScheme, decode_pair, encode_pair, l2_prefix

SCHEMES = list(PairingScheme)
BIJECTIVE = [s for s in SCHEMES if s.bijective]
INJECTIVE = [s for s in SCHEMES if not s.bijective]


def test_bijective_metadata():
    assert {s.value for s in BIJECTIVE} == {"odd-pow2", "cantor", "box-l"}


@pytest.mark.parametrize(
    "scheme, pair, expected",
    [
        ("cantor", (3, 1), 6),
        ("box-l", (3, 2), 6),
        ("unary-sep", (2, 3), int("110111", 2)),
        ("odd-pow2", (1, 1), 1),
        ("godel", (2, 3), 4 * 27),
        ("ones-zeros", (3, 2), int("11100", 2)),
        ("two-bits", (2, 3), int("100100", 2)),
        ("prime-power", (3, 2), 27),
    ],
)
def test_encode_pair(scheme, pair, expected):
    assert encode_pair(scheme, pair) == expected


@pytest.mark.parametrize(
    "scheme, k, expected",
    [("odd-pow2", 12, (2, 3)), ("cantor", 5, (2, 2)), ("godel", 108, (2, 3)), ("prime-power", 32, (5, 1))],
)
def test_decode_pair(scheme, k, expected):
    assert decode_pair(scheme, k) == expected


@pytest.mark.parametrize(
    "scheme, k",
    [("godel", 30), ("godel", 8), ("godel", 9), ("ones-zeros", 7), ("two-bits", 3), ("unary-sep", 7),
     ("prime-power", 6), ("prime-power", 1)],
)
def test_decode_not_in_image(scheme, k):
    with pytest.raises(NotInImage):
        decode_pair(scheme, k)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_domain_errors(scheme):
    with pytest.raises(DomainError):
        encode_pair(scheme, (0, 1))
    with pytest.raises(DomainError):
        decode_pair(scheme, 0)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_round_trip(scheme):
    for n in range(1, 65):
        for m in range(1, 65):
            assert decode_pair(scheme, encode_pair(scheme, (n, m))) == (n, m)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_injective_on_200_square(scheme):
    codes = {encode_pair(scheme, (n, m)) for n in range(1, 201) for m in range(1, 201)}
    assert len(codes) == 200 * 200


@pytest.mark.parametrize("scheme", BIJECTIVE)
def test_bijective_prefix(scheme):
    limit = 10_000
    # codes increase in m, and (n, 1) codes increase in n; see the test below
    hits = []
    n = 1
    while encode_pair(scheme, (n, 1)) <= limit:
        m = 1
        while (code := encode_pair(scheme, (n, m))) <= limit:
            hits.append(code)
            m += 1
        n += 1
    assert sorted(hits) == list(range(1, limit + 1))


@pytest.mark.parametrize("scheme", BIJECTIVE)
def test_codes_increase_along_rows_and_first_column(scheme):
    for n in range(1, 200):
        assert encode_pair(scheme, (n + 1, 1)) > encode_pair(scheme, (n, 1))
        for m in range(1, 200):
            assert encode_pair(scheme, (n, m + 1)) > encode_pair(scheme, (n, m))


@pytest.mark.parametrize("scheme", INJECTIVE)
def test_injective_decoder_matches_image(scheme):
    limit = 5000
    image = {
        encode_pair(scheme, (n, m)): (n, m)
        for n in range(1, 14)
        for m in range(1, 670)
        if encode_pair(scheme, (n, m)) <= limit
    }
    for k in range(1, limit + 1):
        if k in image:
            assert decode_pair(scheme, k) == image[k]
        else:
            with pytest.raises(NotInImage):
                decode_pair(scheme, k)


@pytest.mark.parametrize(
    "scheme, template",
    [
        ("ones-zeros", lambda n, m: "1" * n + "0" * m),
        ("unary-sep", lambda n, m: "1" * n + "0" + "1" * m),
        ("two-bits", lambda n, m: "1" + "0" * (m - 1) + "1" + "0" * n),
    ],
)
def test_binary_string_semantics(scheme, template):
    for n in range(1, 21):
        for m in range(1, 21):
            assert bin(encode_pair(scheme, (n, m)))[2:] == template(n, m)


def test_cantor_diagonal_identity():
    for n in range(1, 101):
        for m in range(1, 101):
            assert sum(range(1, n + m - 1)) == encode_pair("cantor", (n, m)) - n


def test_printed_orders():
    assert [decode_pair("cantor", k) for k in range(1, 7)] == [
        (1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)
    ]
    assert [decode_pair("box-l", k) for k in range(1, 10)] == [
        (1, 1), (2, 1), (2, 2), (1, 2), (3, 1), (3, 2), (3, 3), (2, 3), (1, 3)
    ]


@pytest.mark.parametrize(
    "count, expected",
    [
        (1, [(1, 1)]),
        (4, [(1, 1), (1, 2), (2, 1), (2, 2)]),
        (9, [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (3, 2), (3, 3)]),
    ],
)
def test_l2_prefix(count, expected):
    assert l2_prefix(count) == expected
    assert all(isinstance(p, LatticePair) for p in l2_prefix(count))


def test_l2_covers_each_pair_once():
    side = 40
    prefix = l2_prefix(side * side)
    assert set(prefix) == {(n, m) for n in range(1, side + 1) for m in range(1, side + 1)}
    assert len(set(prefix)) == len(prefix)


def test_l2_swaps_follow_their_pairs():
    prefix = l2_prefix(900)
    upper = [p for p in prefix if p.n <= p.m]
    # shells in order, increasing n inside a shell
    assert upper == sorted(upper, key=lambda p: (p.m, p.n))
    for i, p in enumerate(prefix):
        if p.n < p.m:
            assert prefix[i + 1] == (p.m, p.n)


def test_l2_prefix_rejects_zero():
    with pytest.raises(DomainError):
        l2_prefix(0)
