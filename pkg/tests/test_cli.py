import csv
import io
import json

import pytest

from ratcount.cli import main
from ratcount.registry import get_scheme


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "scheme, count, expected",
    [
        ("lauwerier", 4, ["1/1", "1/2", "2/1", "1/3"]),
        ("calkin-wilf", 3, ["1/1", "1/2", "2/1"]),
        ("grant-priest", 2, ["1/1", "1/1"]),
    ],
)
def test_list(capsys, scheme, count, expected):
    code, out, _ = run(capsys, "list", scheme, "--count", str(count))
    assert code == 0
    assert out.splitlines() == expected


def test_list_start_and_gaps(capsys):
    code, out, _ = run(capsys, "list", "godel", "--start", "5", "--count", "4")
    assert code == 0
    assert out.splitlines() == ["-", "(1,1)", "-", "-"]


def test_list_csv(capsys):
    code, out, _ = run(capsys, "list", "ting", "--count", "3", "--format", "csv")
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [["index", "value"], ["1", "1/1"], ["2", "2/1"], ["3", "1/2"]]


def test_list_jsonl(capsys):
    code, out, _ = run(capsys, "--format", "jsonl", "list", "calkin-wilf", "--count", "2")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [
        {"index": 1, "value": "1/1", "scheme": "calkin-wilf"},
        {"index": 2, "value": "1/2", "scheme": "calkin-wilf"},
    ]


@pytest.mark.parametrize(
    "scheme, value, expected",
    [("factor-signfold", "125/16", "2000000"), ("ting", "1/1", "1"), ("ginsberg", "1/2", "266"),
     ("cantor", "3,1", "6")],
)
def test_rank(capsys, scheme, value, expected):
    code, out, _ = run(capsys, "rank", scheme, value)
    assert code == 0
    assert out.strip() == expected


def test_rank_ginsberg_negative(capsys):
    code, out, _ = run(capsys, "rank", "ginsberg", "-1/2")
    assert code == 0
    assert out.strip() == "19274"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["rank", "ting", "0/1"], 3),
        (["rank", "grant-priest", "1/2"], 3),
        (["unrank", "godel", "30"], 3),
        (["unrank", "ting", "0"], 3),
        (["list", "nope"], 2),
        (["rank", "ting", "1/0"], 2),
        (["rank", "ting", "x"], 2),
        (["rank", "cantor", "1-2"], 2),
        (["engel", "3/2"], 3),
        (["cf", "0"], 3),
        (["list", "ting", "--count", "0"], 2),
    ],
)
def test_exit_codes(capsys, argv, expected):
    code, _, err = run(capsys, *argv)
    assert code == expected
    assert err.startswith("error:")


def test_argparse_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["unrank", "ting", "abc"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_unrank(capsys):
    code, out, _ = run(capsys, "unrank", "factor-signfold", "2000000")
    assert (code, out) == (0, "125/16\n")


def test_compare_single_row(capsys):
    code, out, _ = run(capsys, "compare", "calkin-wilf", "ting", "--prefix", "1")
    assert (code, out) == (0, "1 1/1 1\n")


def test_compare_last_row(capsys):
    code, out, _ = run(capsys, "compare", "calkin-wilf", "ting", "--prefix", "5")
    assert code == 0
    assert out.splitlines()[-1] == "5 3/2 6"


def test_compare_needs_bijections(capsys):
    code, out, _ = run(capsys, "compare", "calkin-wilf", "grant-priest", "--prefix", "5")
    assert code == 3
    assert out == ""


def test_compare_parallel_identical(capsys):
    for fmt in ("plain", "csv", "jsonl"):
        _, serial, _ = run(capsys, "compare", "lauwerier", "cf-binary", "--prefix", "5000", "--format", fmt)
        _, parallel, _ = run(
            capsys, "compare", "lauwerier", "cf-binary", "--prefix", "5000", "--format", fmt, "--parallel"
        )
        assert serial == parallel


@pytest.mark.parametrize("scheme", ["cf-binary", "odd-pow2"])
def test_verify_passes(capsys, scheme):
    code, out, _ = run(capsys, "verify", scheme, "--prefix", "10000")
    assert code == 0
    lines = out.splitlines()
    assert "PASS" in lines[0]
    assert json.loads(lines[-1])["passed"] is True
    if scheme == "odd-pow2":
        assert "image-prefix" in json.loads(lines[-1])["checks"]


def test_verify_unknown_scheme(capsys):
    code, _, _ = run(capsys, "verify", "badname", "--prefix", "10")
    assert code == 2


def test_verify_note_for_injection(capsys):
    code, out, _ = run(capsys, "verify", "godel", "--prefix", "100")
    assert code == 0
    assert any(line.startswith("note:") for line in out.splitlines())


def test_verify_parallel_identical(capsys):
    _, serial, _ = run(capsys, "verify", "calkin-wilf", "--prefix", "20000")
    _, parallel, _ = run(capsys, "verify", "calkin-wilf", "--prefix", "20000", "--parallel")
    assert serial == parallel


def test_verify_failure_exits_1(capsys, monkeypatch):
    from ratcount import registry

    real = get_scheme("calkin-wilf")
    broken = registry.SchemeDescriptor(
        "broken", "Q+", "bijective", True, True, rank=lambda v: 1, unrank=real.unrank
    )
    monkeypatch.setitem(registry._SCHEMES, "broken", broken)
    code, out, _ = run(capsys, "verify", "broken", "--prefix", "50", "--all-failures")
    assert code == 1
    assert "FAIL at k=2" in out.splitlines()[0]
    assert any(line.startswith("also failed at k=3") for line in out.splitlines())


def test_schemes_catalog(capsys):
    code, out, _ = run(capsys, "schemes", "--format", "jsonl")
    assert code == 0
    rows = {json.loads(line)["id"]: json.loads(line) for line in out.splitlines()}
    assert rows["calkin-wilf"]["kind"] == "bijective"
    assert rows["grant-priest"]["has_rank"] is False
    code, out, _ = run(capsys, "schemes")
    assert code == 0 and "lauwerier" in out


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["cf", "2/3"], "0 1 1"),
        (["cf", "1"], "0"),
        (["engel", "3/7"], "3 4 7"),
        (["hyperbinary", "5"], "2"),
        (["hyperbinary", "12"], "5"),
        (["pair", "cantor", "3", "1"], "6"),
        (["unpair", "odd-pow2", "12"], "(2,3)"),
    ],
)
def test_helpers(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert (code, out.strip()) == (0, expected)


def test_unpair_outside_image(capsys):
    code, _, _ = run(capsys, "unpair", "godel", "30")
    assert code == 3


def test_seed_free_is_accepted(capsys):
    a = run(capsys, "list", "ting", "--count", "5", "--seed-free")
    b = run(capsys, "--seed-free", "list", "ting", "--count", "5")
    assert a == b and a[0] == 0


@pytest.mark.parametrize("desc", ["calkin-wilf", "ting", "lauwerier", "cf-binary", "factor-negabinary",
                                  "poly-signfold", "cohen-engel", "ginsberg", "box-l", "godel"])
def test_listed_values_rank_back(capsys, desc):
    code, out, _ = run(capsys, "list", desc, "--start", "100", "--count", "300", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    for index, value in rows[::37]:
        if value == "-":
            continue
        code, back, _ = run(capsys, "rank", desc, value.strip("()"))
        assert code == 0
        assert back.strip() == index
    assert get_scheme(desc).has_rank
