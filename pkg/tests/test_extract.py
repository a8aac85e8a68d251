from decimal import Decimal

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbithop.extract import extract_byte, extract_bytes, fraction_digits


def oracle_digits(x):
    """Fewest fixed-point decimals that still round-trip to x.

    Works on the exact binary value: at each length try the decimals just
    below and above x, keep those that parse back to x, take the nearer
    (an exact tie goes to the even last digit).
    """
    x = abs(x)
    if x == 0.0 or x >= 1.0:
        return ""
    exact = Decimal(x)
    for places in range(1, 1100):
        unit = Decimal(1).scaleb(-places)
        down = (exact // unit) * unit
        ok = [c for c in (down, down + unit) if float(c) == x]
        if not ok:
            continue
        best = min(ok, key=lambda c: (abs(c - exact), int(c.scaleb(places)) % 2))
        return format(best, f".{places}f")[2:]
    raise AssertionError("no round-trip representation")


def oracle_byte(x):
    d = oracle_digits(x)
    d = d + "0" * (8 - len(d)) if len(d) < 8 else d[len(d) - 8:]
    return int(d) % 256


@pytest.mark.parametrize("x,want", [
    (0.33461, 8),
    (0.9442345679457, 97),
    (0.0, 0),
    (-0.33461, 8),
    (1.0, 0),
    (-1.0, 0),
])
def test_vectors(x, want):
    assert extract_byte(x) == want


def test_digit_strings():
    assert fraction_digits(0.33461) == "33461"
    assert fraction_digits(0.9442345679457) == "9442345679457"
    assert fraction_digits(1.5e-5) == "000015"
    assert fraction_digits(0.0012391499) == "0012391499"


def test_hand_worked_small_values():
    # 0.000015 -> "000015" -> "00001500" -> 1500 % 256
    assert extract_byte(1.5e-5) == 1500 % 256
    # 0.0012391499 -> "0012391499" -> "12391499" -> % 256
    assert extract_byte(0.0012391499) == 12391499 % 256


@given(st.floats(-1.0, 1.0))
def test_against_format_oracle(x):
    assert extract_byte(x) == oracle_byte(x)


def test_power_of_two_lopsided_interval():
    # 2**-24 = 0.000000059604644775390625. Of the two 23-place neighbours
    # only the upper one parses back, since the gap below a power of two is
    # half the gap above.
    x = 2.0 ** -24
    assert float("0.00000005960464477539062") != x
    assert fraction_digits(x) == oracle_digits(x) == "00000005960464477539063"


def test_exact_ties_go_to_even():
    x = 0.007814407348632812  # 4097 / 2**19, exactly ...8125
    assert Decimal(x) == Decimal("0.0078144073486328125")
    assert fraction_digits(x) == oracle_digits(x) == "007814407348632812"


@given(st.lists(st.floats(-1.0, 1.0), max_size=200))
def test_vectorised_matches_scalar(values):
    assert extract_bytes(np.array(values, dtype=np.float64)) == bytes(extract_byte(v) for v in values)


def test_vectorised_matches_scalar_bulk():
    rng = np.random.default_rng(7)
    values = np.concatenate([
        rng.random(100_000),
        -rng.random(20_000) ** 12,
        np.cos(rng.random(50_000) * np.pi),
        np.round(rng.random(20_000), 6),
        [0.0, -0.0, 1.0, -1.0, 5e-324, 1e-5, 9.999999999999999e-5],
    ])
    assert extract_bytes(values) == bytes(extract_byte(v) for v in values.tolist())


def test_vectorised_empty():
    assert extract_bytes(np.array([])) == b""
