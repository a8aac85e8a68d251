"""The orbit-hopping keystream generator.

Maps are visited cyclically in bank order. On each visit a map runs
``orbits`` fresh orbits, the j-th starting at frac(seed + j * offset) with j
continuing from where the previous visit of that map stopped. Every orbit
settles for ``settles`` steps and then contributes ``samples`` bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from orbithop import _kernel
from orbithop.errors import BankTooSmall, DegenerateOrbit, GeneratorPoisoned
from orbithop.extract import extract_byte, extract_bytes
from orbithop.keying import KeyMaterial, SubkeyParams, decode_key
from orbithop.maps import DEFAULT_BANK, MapSpec, kind_code, orbit_samples


def orbit_start(seed: float, offset: float, j: int) -> float:
    v = seed + j * offset
    return v - math.floor(v)


@dataclass
class MapSlot:
    spec: MapSpec
    params: SubkeyParams
    orbit_counter: int = 0


@dataclass
class KeystreamGenerator:
    """Single-consumer keystream state. Not safe for concurrent calls."""

    slots: list[MapSlot]
    map_index: int = 0
    pending: bytearray = field(default_factory=bytearray)
    poisoned: str | None = None
    bytes_emitted: int = 0

    @classmethod
    def from_params(cls, specs: Sequence[MapSpec], params: Sequence[SubkeyParams]):
        if len(specs) != len(params) or not specs:
            raise ValueError("need one subkey per map and at least one map")
        return cls([MapSlot(s, p) for s, p in zip(specs, params)])

    @property
    def bytes_per_round(self) -> int:
        return sum(s.params.orbits * s.params.samples for s in self.slots)

    def _visit(self) -> np.ndarray:
        """Run the current map's next visit and return its raw sample values."""
        slot = self.slots[self.map_index]
        p = slot.params
        kind, param = kind_code(slot.spec)
        buf = np.empty(p.orbits * p.samples, dtype=np.float64)
        n, status, bad_j, bad_x = _kernel.run_visit(
            kind, param, p.seed, p.offset, slot.orbit_counter,
            p.orbits, p.settles, p.samples, buf,
        )
        if status != _kernel.OK:
            what = "left its domain" if status == _kernel.ESCAPED else "is stuck at a fixed point"
            self.poisoned = (
                f"map {self.map_index} ({slot.spec}) orbit {bad_j} {what} (value {bad_x!r})"
            )
            self.pending.clear()
            raise DegenerateOrbit(self.poisoned)
        slot.orbit_counter += p.orbits
        self.map_index = (self.map_index + 1) % len(self.slots)
        return buf[:n]

    def next_bytes(self, count: int) -> bytes:
        if count < 0:
            raise ValueError("count must be >= 0")
        if self.poisoned:
            raise GeneratorPoisoned(self.poisoned)
        need = count - len(self.pending)
        values = []
        while need > 0:
            v = self._visit()
            values.append(v)
            need -= len(v)
        if values:
            self.pending += extract_bytes(np.concatenate(values))
        out = bytes(self.pending[:count])
        del self.pending[:count]
        self.bytes_emitted += count
        return out

    def round_orbit_counts(self) -> list[int]:
        return [s.params.orbits for s in self.slots]


def new_generator(key: KeyMaterial, bank: Sequence[MapSpec] = DEFAULT_BANK) -> KeystreamGenerator:
    params = decode_key(key)
    if len(params) > len(bank):
        raise BankTooSmall(f"key needs {len(params)} maps but the bank has {len(bank)}")
    return KeystreamGenerator.from_params(list(bank[:len(params)]), params)


def reference_keystream(specs: Sequence[MapSpec], params: Sequence[SubkeyParams],
                        count: int) -> bytes:
    """Slow pure-Python keystream built from ``maps.orbit_samples``.

    Independent of the compiled kernel and the vectorised extractor; used to
    cross-check them.
    """
    if len(specs) != len(params):
        raise ValueError("need one subkey per map")
    out = bytearray()
    counters = [0] * len(specs)
    i = 0
    while len(out) < count:
        spec, p = specs[i], params[i]
        for j in range(counters[i], counters[i] + p.orbits):
            x0 = orbit_start(p.seed, p.offset, j)
            if x0 == 0.0:
                continue
            out.extend(extract_byte(x) for x in orbit_samples(spec, x0, p.settles, p.samples))
        counters[i] += p.orbits
        i = (i + 1) % len(specs)
    return bytes(out[:count])
