"""Multi-map orbit-hopping chaotic stream cipher."""

from orbithop.analysis import chi_square_uniform, histogram, monobit_and_runs
from orbithop.cipher import CipherSession, decrypt, encrypt
from orbithop.errors import (
    BankTooSmall,
    DegenerateOffset,
    DegenerateOrbit,
    DegenerateSeed,
    DomainEscape,
    GeneratorPoisoned,
    InsufficientData,
    InvalidNibble,
    KeyFormatError,
    LengthMismatch,
    OrbitHopError,
    UnsupportedMapCount,
)
from orbithop.extract import extract_byte, extract_bytes
from orbithop.keying import (
    KeyMaterial,
    SubkeyParams,
    SubkeyRecord,
    decode_subkey,
    example_key,
    generate_key,
    parse_key,
)
from orbithop.keystream import KeystreamGenerator, new_generator
from orbithop.maps import (
    DEFAULT_BANK,
    Chebyshev,
    ChebyshevUnit,
    Logistic,
    MapBank,
    logistic4_conjugate,
    orbit_samples,
    step,
)

__version__ = "0.1.0"
