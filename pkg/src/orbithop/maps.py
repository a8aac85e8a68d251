"""Chaotic map bank: logistic and Chebyshev maps and orbit iteration.

"Degree k" Chebyshev maps here are x -> cos(2**k * arccos(x)), i.e. the
Chebyshev polynomial of order 2**k. ``ChebyshevUnit`` is the same map moved
onto (0, 1) with x = 1 - 2y; on that interval it equals k steps of the
r = 4 logistic map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from orbithop.errors import DegenerateOrbit, DomainEscape, MapSpecError


@dataclass(frozen=True)
class Logistic:
    r: float

    def __post_init__(self):
        if not 0.0 < self.r <= 4.0:
            raise MapSpecError(f"logistic parameter r must be in (0, 4], got {self.r!r}")

    def __str__(self):
        return f"logistic {self.r!r}"


@dataclass(frozen=True)
class Chebyshev:
    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise MapSpecError(f"Chebyshev degree must be an integer >= 1, got {self.k!r}")

    @property
    def multiplier(self) -> float:
        return float(2 ** self.k)

    def __str__(self):
        return f"chebyshev {self.k}"


@dataclass(frozen=True)
class ChebyshevUnit(Chebyshev):
    def __str__(self):
        return f"chebyshev-unit {self.k}"


MapSpec = Union[Logistic, Chebyshev, ChebyshevUnit]


def step(spec: MapSpec, x: float) -> float:
    """Apply one map iteration, raising DomainEscape if the result is unusable."""
    if isinstance(spec, Logistic):
        y = spec.r * x * (1.0 - x)
        if not 0.0 < y < 1.0:
            raise DomainEscape(f"{spec}: {x!r} -> {y!r} left (0, 1)")
    elif isinstance(spec, ChebyshevUnit):
        y = (1.0 - math.cos(spec.multiplier * math.acos(1.0 - 2.0 * x))) / 2.0
        if not 0.0 < y < 1.0:
            raise DomainEscape(f"{spec}: {x!r} -> {y!r} left (0, 1)")
    elif isinstance(spec, Chebyshev):
        y = math.cos(spec.multiplier * math.acos(x))
    else:
        raise MapSpecError(f"unknown map spec {spec!r}")
    return y


def iterate(spec: MapSpec, x: float, n: int) -> float:
    for _ in range(n):
        x = step(spec, x)
    return x


def in_domain(spec: MapSpec, x: float) -> bool:
    if isinstance(spec, Logistic) or isinstance(spec, ChebyshevUnit):
        return 0.0 < x < 1.0
    return -1.0 < x <= 1.0


def orbit_samples(spec: MapSpec, x0: float, settles: int, count: int) -> list[float]:
    """Return x[settles+1] ... x[settles+count] of the orbit seeded at x0.

    Raises DegenerateOrbit when an iterate escapes the domain or when two or
    more samples were asked for and all are the same value (fixed-point
    capture).
    """
    if settles < 0 or count < 1:
        raise ValueError("need settles >= 0 and count >= 1")
    if not in_domain(spec, x0):
        raise DegenerateOrbit(f"{spec}: seed {x0!r} outside the map domain")
    try:
        x = iterate(spec, x0, settles)
        out = []
        for _ in range(count):
            x = step(spec, x)
            out.append(x)
    except DomainEscape as exc:
        raise DegenerateOrbit(str(exc)) from exc
    if count > 1 and all(v == out[0] for v in out):
        raise DegenerateOrbit(f"{spec}: orbit from {x0!r} is stuck at {out[0]!r}")
    return out


def logistic4_conjugate(x: float, k: int) -> float:
    """k steps of x -> 4x(1-x) in closed form."""
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must be in (0, 1), got {x!r}")
    if not 1 <= k <= 10:
        raise ValueError(f"k must be in [1, 10], got {k!r}")
    return (1.0 - math.cos(2.0 ** k * math.acos(1.0 - 2.0 * x))) / 2.0


class MapBank(tuple):
    """An ordered, nonempty tuple of map specs."""

    def __new__(cls, maps: Iterable[MapSpec]):
        maps = tuple(maps)
        if not maps:
            raise MapSpecError("a map bank needs at least one map")
        for m in maps:
            if not isinstance(m, (Logistic, Chebyshev)):
                raise MapSpecError(f"not a map spec: {m!r}")
        return super().__new__(cls, maps)

    def __repr__(self):
        return f"MapBank({list(self)!r})"

    def to_text(self) -> str:
        return "".join(f"{m}\n" for m in self)


DEFAULT_BANK = MapBank([
    Logistic(3.901),
    Logistic(3.931),
    Logistic(3.963),
    Logistic(4.0),
    Chebyshev(3),
    Chebyshev(4),
    Chebyshev(5),
    Chebyshev(6),
])


def parse_bank(text: str) -> MapBank:
    """Read a bank file: one ``logistic <r>``, ``chebyshev <k>`` or
    ``chebyshev-unit <k>`` per line; ``#`` starts a comment."""
    maps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MapSpecError(f"line {lineno}: expected '<kind> <parameter>', got {raw!r}")
        kind, arg = parts[0].lower(), parts[1]
        try:
            if kind == "logistic":
                maps.append(Logistic(float(arg)))
            elif kind == "chebyshev":
                maps.append(Chebyshev(int(arg)))
            elif kind == "chebyshev-unit":
                maps.append(ChebyshevUnit(int(arg)))
            else:
                raise MapSpecError(f"unknown map kind {parts[0]!r}")
        except (ValueError, MapSpecError) as exc:
            raise MapSpecError(f"line {lineno}: {exc}") from None
    return MapBank(maps)


def kind_code(spec: MapSpec) -> tuple[int, float]:
    """(kind, parameter) pair understood by the compiled orbit kernel."""
    if isinstance(spec, Logistic):
        return 0, float(spec.r)
    if isinstance(spec, ChebyshevUnit):
        return 2, spec.multiplier
    return 1, spec.multiplier

