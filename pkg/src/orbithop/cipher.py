"""XOR combination of keystream and data.

Encryption and decryption are the same operation. Ciphertexts only decrypt
on a build whose binary64 arithmetic and libm cos/acos agree bit-for-bit with
the encrypting build; see ``PLATFORM_FINGERPRINT``.
"""

from __future__ import annotations

from typing import BinaryIO, Sequence

import numpy as np

from orbithop.keying import KeyMaterial
from orbithop.keystream import KeystreamGenerator, new_generator
from orbithop.maps import DEFAULT_BANK, MapSpec

CHUNK = 1 << 16

# First 64 keystream bytes of the worked example key with the default bank.
PLATFORM_FINGERPRINT = bytes.fromhex(
    "c5bc375e3b24070973d5abfd55bb3f38b6b3185ed93f5799a047517d93d2eaa8"
    "35b3ff371b4807d164a5069a7d6d8e4355ff763ac4e402547a100f11a564b030"
)


class CipherSession:
    def __init__(self, generator: KeystreamGenerator):
        self.generator = generator
        self.bytes_processed = 0

    @classmethod
    def from_key(cls, key: KeyMaterial, bank: Sequence[MapSpec] = DEFAULT_BANK):
        return cls(new_generator(key, bank))

    def apply(self, data: bytes | bytearray | memoryview) -> bytes:
        data = np.frombuffer(bytes(data), dtype=np.uint8)
        ks = np.frombuffer(self.generator.next_bytes(len(data)), dtype=np.uint8)
        self.bytes_processed += len(data)
        return np.bitwise_xor(data, ks).tobytes()

    def apply_stream(self, src: BinaryIO, dst: BinaryIO, chunk: int = CHUNK) -> int:
        total = 0
        while True:
            block = src.read(chunk)
            if not block:
                return total
            dst.write(self.apply(block))
            total += len(block)


def encrypt(key: KeyMaterial, data: bytes, bank: Sequence[MapSpec] = DEFAULT_BANK) -> bytes:
    return CipherSession.from_key(key, bank).apply(data)


decrypt = encrypt
