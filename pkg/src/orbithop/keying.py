"""Key material, subkey layout and decoding.

A key is a sequence of hex nibbles: two header nibbles selecting the number
of maps, then 14 nibbles (56 bits) per map. Each subkey is laid out as

    seed (6 nibbles) | offset (4) | settles (2) | orbits (1) | samples (1)

and decodes to the control parameters of one chaotic map.
"""

from __future__ import annotations

import random
import secrets
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable, Sequence

from orbithop.errors import (
    DegenerateOffset,
    DegenerateSeed,
    InvalidNibble,
    LengthMismatch,
    UnsupportedMapCount,
)

HEADER_NIBBLES = 2
SUBKEY_NIBBLES = 14
MIN_MAPS = 2
MAX_MAPS = 8

SETTLES_BASE = 30
COUNT_BASE = 4
OFFSET_SCALE = 9

_WHITESPACE = frozenset(" \t\r\n\f\v")


def map_count_for_header(header: int) -> int:
    return MIN_MAPS + header % 7


@dataclass(frozen=True)
class KeyMaterial:
    nibbles: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "nibbles", tuple(self.nibbles))
        for i, n in enumerate(self.nibbles):
            if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= 15:
                raise InvalidNibble(f"nibble {i} is {n!r}, expected an integer in [0, 15]")

    def __len__(self) -> int:
        return len(self.nibbles)

    @classmethod
    def from_hex(cls, text: str) -> "KeyMaterial":
        """Parse hex digits, ignoring any whitespace. Case-insensitive."""
        out = []
        for pos, ch in enumerate(text):
            if ch in _WHITESPACE:
                continue
            try:
                out.append(int(ch, 16))
            except ValueError:
                raise InvalidNibble(f"character {ch!r} at offset {pos} is not a hex digit") from None
        return cls(tuple(out))

    def to_hex(self, grouped: bool = False) -> str:
        digits = "".join("%X" % n for n in self.nibbles)
        if not grouped:
            return digits
        head, body = digits[:HEADER_NIBBLES], digits[HEADER_NIBBLES:]
        groups = [body[i:i + SUBKEY_NIBBLES] for i in range(0, len(body), SUBKEY_NIBBLES)]
        return " ".join([head, *groups])

    @property
    def header(self) -> int:
        return self.nibbles[0] * 16 + self.nibbles[1]


def _nibbles_to_int(nibbles: Sequence[int]) -> int:
    value = 0
    for n in nibbles:
        value = (value << 4) | n
    return value


def _int_to_nibbles(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> (4 * (width - 1 - i))) & 0xF for i in range(width))


@dataclass(frozen=True)
class SubkeyRecord:
    """The raw 56-bit fields of one subkey."""

    seed_code: int
    offset_code: int
    settles_code: int
    orbits_code: int
    samples_code: int

    WIDTHS = (6, 4, 2, 1, 1)

    def __post_init__(self):
        for name, width in zip(self._fields(), self.WIDTHS):
            value = getattr(self, name)
            if not 0 <= value < 16 ** width:
                raise InvalidNibble(f"{name}={value!r} does not fit in {4 * width} bits")

    @staticmethod
    def _fields() -> tuple[str, ...]:
        return ("seed_code", "offset_code", "settles_code", "orbits_code", "samples_code")

    @classmethod
    def from_nibbles(cls, nibbles: Sequence[int]) -> "SubkeyRecord":
        if len(nibbles) != SUBKEY_NIBBLES:
            raise LengthMismatch(f"a subkey is {SUBKEY_NIBBLES} nibbles, got {len(nibbles)}")
        values = []
        pos = 0
        for width in cls.WIDTHS:
            values.append(_nibbles_to_int(nibbles[pos:pos + width]))
            pos += width
        return cls(*values)

    def to_nibbles(self) -> tuple[int, ...]:
        out: tuple[int, ...] = ()
        for name, width in zip(self._fields(), self.WIDTHS):
            out += _int_to_nibbles(getattr(self, name), width)
        return out


@dataclass(frozen=True)
class SubkeyParams:
    """Decoded control parameters for one map.

    ``seed_text`` and ``offset_text`` keep the exact fixed-point decimal the
    codes decode to; ``seed`` and ``offset`` are the nearest binary64 values
    used for iteration.
    """

    seed: float
    offset: float
    settles: int
    orbits: int
    samples: int
    seed_text: str = ""
    offset_text: str = ""

    @property
    def bytes_per_visit(self) -> int:
        return self.orbits * self.samples

    @classmethod
    def from_decimals(cls, seed: Decimal | str, offset: Decimal | str,
                      settles: int, orbits: int, samples: int) -> "SubkeyParams":
        seed, offset = Decimal(seed), Decimal(offset)
        return cls(float(seed), float(offset), settles, orbits, samples,
                   _fixed(seed), _fixed(offset))


def _fixed(value: Decimal) -> str:
    """Plain fixed-point text without trailing zeros, e.g. '0.00001499'."""
    return format(value.normalize(), "f")


def decode_seed(seed_code: int) -> Decimal:
    """'0.' + '00' + decimal digits of the code, read as a number."""
    if seed_code == 0:
        raise DegenerateSeed("seed code is zero")
    digits = str(seed_code)
    return Decimal("0.00" + digits)


def decode_offset(offset_code: int) -> Decimal:
    if offset_code == 0:
        raise DegenerateOffset("offset code is zero; every orbit would start at the seed")
    return Decimal(offset_code).scaleb(-OFFSET_SCALE)


def decode_subkey(rec: SubkeyRecord) -> SubkeyParams:
    return SubkeyParams.from_decimals(
        decode_seed(rec.seed_code),
        decode_offset(rec.offset_code),
        SETTLES_BASE + rec.settles_code,
        COUNT_BASE + rec.orbits_code,
        COUNT_BASE + rec.samples_code,
    )


def parse_key(key: KeyMaterial | Sequence[int]) -> tuple[int, list[SubkeyRecord]]:
    """Split key material into the map count and one record per map."""
    if not isinstance(key, KeyMaterial):
        key = KeyMaterial(tuple(key))
    if len(key) < HEADER_NIBBLES:
        raise LengthMismatch(f"key has {len(key)} nibbles, need at least {HEADER_NIBBLES}")
    map_count = map_count_for_header(key.header)
    body = key.nibbles[HEADER_NIBBLES:]
    if len(body) != SUBKEY_NIBBLES * map_count:
        raise LengthMismatch(
            f"header selects {map_count} maps, which needs {SUBKEY_NIBBLES * map_count} "
            f"subkey nibbles; got {len(body)}"
        )
    records = [
        SubkeyRecord.from_nibbles(body[i:i + SUBKEY_NIBBLES])
        for i in range(0, len(body), SUBKEY_NIBBLES)
    ]
    return map_count, records


def decode_key(key: KeyMaterial | Sequence[int]) -> list[SubkeyParams]:
    _, records = parse_key(key)
    return [decode_subkey(r) for r in records]


def encode_key(header: int, records: Iterable[SubkeyRecord]) -> KeyMaterial:
    if not 0 <= header <= 0xFF:
        raise InvalidNibble(f"header {header!r} is not a byte")
    nibbles = [header >> 4, header & 0xF]
    for rec in records:
        nibbles.extend(rec.to_nibbles())
    return KeyMaterial(tuple(nibbles))


def generate_key(map_count: int, entropy: random.Random | None = None) -> KeyMaterial:
    """Draw a fresh key for ``map_count`` maps.

    ``entropy`` defaults to the OS CSPRNG. Subkeys with a zero seed or
    offset code are redrawn.
    """
    if not MIN_MAPS <= map_count <= MAX_MAPS:
        raise UnsupportedMapCount(f"map count must be in [{MIN_MAPS}, {MAX_MAPS}], got {map_count}")
    rng = entropy if entropy is not None else secrets.SystemRandom()
    headers = [b for b in range(256) if map_count_for_header(b) == map_count]
    header = rng.choice(headers)
    records = []
    while len(records) < map_count:
        nibbles = [rng.randrange(16) for _ in range(SUBKEY_NIBBLES)]
        rec = SubkeyRecord.from_nibbles(nibbles)
        if rec.seed_code == 0 or rec.offset_code == 0:
            continue
        records.append(rec)
    return encode_key(header, records)


# Worked 8-map example key.
EXAMPLE_KEY_HEX = (
    "1B BD144B3A8E6977 1EAE62EF9717B0 8A716B84B9E534 371AE759565F8B "
    "F185F15EE7887A E6B7F42200B92A B4690A8F7ED392 31D3639AFE54F3"
)


def example_key() -> KeyMaterial:
    return KeyMaterial.from_hex(EXAMPLE_KEY_HEX)
