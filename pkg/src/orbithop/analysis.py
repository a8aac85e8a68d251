"""Byte histograms and desk-scale randomness checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import NormalDist

import numpy as np

from orbithop.errors import InsufficientData

ALPHA = 0.001
MIN_CHI_TOTAL = 2560
MIN_BITS = 100
P_THRESHOLD = 0.01


def _as_u8(data) -> np.ndarray:
    if isinstance(data, np.ndarray):
        return data.astype(np.uint8, copy=False).ravel()
    return np.frombuffer(bytes(data), dtype=np.uint8)


@dataclass(frozen=True)
class Histogram:
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_csv(self) -> str:
        rows = ["byte,count"]
        rows.extend(f"{b},{c}" for b, c in enumerate(self.counts))
        return "\n".join(rows) + "\n"


def histogram(data) -> Histogram:
    counts = np.bincount(_as_u8(data), minlength=256)
    return Histogram(tuple(int(c) for c in counts))


def wilson_hilferty(dof: int, upper_tail: float) -> float:
    """Approximate chi-square quantile with the given upper-tail probability."""
    z = NormalDist().inv_cdf(1.0 - upper_tail)
    h = 2.0 / (9.0 * dof)
    return dof * (1.0 - h + z * math.sqrt(h)) ** 3


@dataclass(frozen=True)
class UniformityReport:
    chi_square: float
    degrees_of_freedom: int
    critical_value_p001: float
    passed: bool


def chi_square_uniform(h: Histogram) -> UniformityReport:
    total = h.total
    if total < MIN_CHI_TOTAL:
        raise InsufficientData(f"need at least {MIN_CHI_TOTAL} bytes, got {total}")
    expected = total / 256
    counts = np.asarray(h.counts, dtype=np.float64)
    chi2 = float(np.sum((counts - expected) ** 2) / expected)
    dof = 255
    crit = wilson_hilferty(dof, ALPHA)
    return UniformityReport(chi2, dof, crit, chi2 < crit)


@dataclass(frozen=True)
class BitTestResult:
    name: str
    statistic: float
    p_value: float
    passed: bool


@dataclass(frozen=True)
class BitTestReport:
    monobit: BitTestResult
    runs: BitTestResult

    @property
    def passed(self) -> bool:
        return self.monobit.passed and self.runs.passed


def monobit_and_runs(data) -> BitTestReport:
    """Frequency (monobit) and runs tests, bits taken MSB first.

    The runs test only runs if monobit passed and the ones proportion is
    within 2/sqrt(n) of one half; otherwise it is reported as failed with
    p = 0.
    """
    bits = np.unpackbits(_as_u8(data))
    n = bits.size
    if n < MIN_BITS:
        raise InsufficientData(f"need at least {MIN_BITS} bits, got {n}")
    ones = int(bits.sum())
    s_obs = abs(2 * ones - n) / math.sqrt(n)
    p_mono = math.erfc(s_obs / math.sqrt(2))
    monobit = BitTestResult("monobit", s_obs, p_mono, p_mono >= P_THRESHOLD)

    pi = ones / n
    if not monobit.passed or abs(pi - 0.5) >= 2 / math.sqrt(n):
        runs = BitTestResult("runs", float("nan"), 0.0, False)
    else:
        v_obs = 1 + int(np.count_nonzero(bits[1:] != bits[:-1]))
        num = abs(v_obs - 2 * n * pi * (1 - pi))
        den = 2 * math.sqrt(2 * n) * pi * (1 - pi)
        p_runs = math.erfc(num / den)
        runs = BitTestResult("runs", float(v_obs), p_runs, p_runs >= P_THRESHOLD)
    return BitTestReport(monobit, runs)
