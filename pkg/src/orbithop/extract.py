"""Byte extraction from orbit points.

The fractional digits of |x| are taken from its shortest round-trip decimal
form (Python's ``repr``), padded on the right or trimmed on the left to eight
digits, and reduced mod 256.
"""

from __future__ import annotations

import numpy as np
import polars as pl

DIGITS = 8


def fraction_digits(x: float) -> str:
    """Fractional digits of |x| in shortest round-trip fixed-point form.

    '' for zero and for |x| >= 1 (no fractional digits to use).
    """
    x = abs(x)
    if not x < 1.0:  # also catches nan
        return ""
    text = repr(x)
    if "e" in text:
        mantissa, exponent = text.split("e")
        return "0" * (-int(exponent) - 1) + mantissa.replace(".", "")
    digits = text[2:]
    return "" if digits == "0" else digits


def extract_byte(x: float) -> int:
    digits = fraction_digits(x)
    if len(digits) < DIGITS:
        digits = digits.ljust(DIGITS, "0")
    else:
        digits = digits[-DIGITS:]
    return int(digits) % 256


def extract_bytes(values) -> bytes:
    """Vectorised ``extract_byte`` over an array of floats.

    Polars renders floats with the same shortest digits as ``repr`` but picks
    scientific notation for small magnitudes; those rows go through the scalar
    path.
    """
    arr = np.abs(np.asarray(values, dtype=np.float64))
    if arr.size == 0:
        return b""
    text = pl.Series(arr).cast(pl.Utf8)
    frame = pl.DataFrame({"t": text})
    out = frame.select(
        pl.when(pl.col("t").str.starts_with("0."))
        .then(
            pl.col("t")
            .str.slice(2)
            .str.replace(r"^0$", "")
            .str.pad_end(DIGITS, "0")
            .str.slice(-DIGITS, DIGITS)
            .cast(pl.Int64, strict=False)
            % 256
        )
        .otherwise(None)
        .alias("b")
    )["b"]
    result = out.fill_null(-1).to_numpy().astype(np.int64)
    for i in np.flatnonzero(result < 0):
        result[i] = extract_byte(float(arr[i]))
    return result.astype(np.uint8).tobytes()
