"""Command-line front end.

Keys are only ever read from files (``--key-file``) so they stay out of shell
history.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import random
import sys
from pathlib import Path
from typing import BinaryIO, Iterator, Sequence

from orbithop import analysis, golden
from orbithop.cipher import PLATFORM_FINGERPRINT, CipherSession
from orbithop.errors import OrbitHopError
from orbithop.extract import extract_byte
from orbithop.keying import (
    MAX_MAPS,
    MIN_MAPS,
    KeyMaterial,
    SubkeyParams,
    decode_subkey,
    example_key,
    generate_key,
    parse_key,
)
from orbithop.keystream import new_generator, reference_keystream
from orbithop.maps import DEFAULT_BANK, Logistic, logistic4_conjugate, parse_bank

log = logging.getLogger("orbithop")

HEX_LINE = 32


@contextlib.contextmanager
def _open_in(path: str) -> Iterator[BinaryIO]:
    if path == "-":
        yield sys.stdin.buffer
    else:
        with open(path, "rb") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path: str) -> Iterator[BinaryIO]:
    if path == "-":
        yield sys.stdout.buffer
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            yield fh


def _load_key(path: str) -> KeyMaterial:
    with _open_in(path) as fh:
        text = fh.read().decode("ascii", errors="replace")
    return KeyMaterial.from_hex(text)


def _load_bank(path: str | None):
    if path is None:
        return DEFAULT_BANK
    return parse_bank(Path(path).read_text())


def cmd_keygen(args) -> int:
    key = generate_key(args.maps)
    with _open_out(args.out) as fh:
        fh.write((key.to_hex(grouped=True) + "\n").encode("ascii"))
    return 0


def cmd_inspect_key(args) -> int:
    key = _load_key(args.key_file)
    bank = _load_bank(args.bank)
    map_count, records = parse_key(key)
    out = sys.stdout
    out.write(f"maps: {map_count} (header 0x{key.header:02X})\n")
    out.write("map\tSeed\tOffset\t#Settles\t#Orbits\t#Samples\tmap definition\n")
    total = 0
    for i, rec in enumerate(records):
        p = decode_subkey(rec)
        kind = str(bank[i]) if i < len(bank) else "(no bank entry)"
        out.write(f"#{i}\t{p.seed_text}\t{p.offset_text}\t{p.settles}\t{p.orbits}\t{p.samples}\t{kind}\n")
        total += p.orbits * p.samples
    out.write(f"bytes per round: {total}\n")
    return 0


def cmd_keystream(args) -> int:
    gen = new_generator(_load_key(args.key_file), _load_bank(args.bank))
    with _open_out(args.out) as fh:
        remaining = args.count
        carry = b""
        while remaining:
            n = min(remaining, 1 << 16)
            data = gen.next_bytes(n)
            remaining -= n
            if not args.hex:
                fh.write(data)
                continue
            data = carry + data
            cut = len(data) - len(data) % HEX_LINE if remaining else len(data)
            for i in range(0, cut, HEX_LINE):
                fh.write(data[i:i + HEX_LINE].hex().encode("ascii") + b"\n")
            carry = data[cut:]
    return 0


def cmd_crypt(args) -> int:
    session = CipherSession.from_key(_load_key(args.key_file), _load_bank(args.bank))
    with _open_in(args.input) as src, _open_out(args.out) as dst:
        n = session.apply_stream(src, dst)
    log.info("%s: %d bytes", args.command, n)
    return 0


def cmd_analyze(args) -> int:
    with _open_in(args.input) as fh:
        data = fh.read()
    h = analysis.histogram(data)
    if args.csv:
        with _open_out(args.csv) as fh:
            fh.write(h.to_csv().encode("ascii"))
    out = sys.stdout
    out.write(f"bytes: {h.total}\n")
    try:
        u = analysis.chi_square_uniform(h)
        verdict = "pass" if u.passed else "fail"
        out.write(f"chi-square: {u.chi_square:.3f} (dof {u.degrees_of_freedom}, "
                  f"critical {u.critical_value_p001:.3f} at p=0.001) {verdict}\n")
    except analysis.InsufficientData as exc:
        out.write(f"chi-square: skipped ({exc})\n")
    try:
        bits = analysis.monobit_and_runs(data)
        for r in (bits.monobit, bits.runs):
            out.write(f"{r.name}: statistic {r.statistic:.4f} p {r.p_value:.6g} "
                      f"{'pass' if r.passed else 'fail'}\n")
    except analysis.InsufficientData as exc:
        out.write(f"monobit/runs: skipped ({exc})\n")
    return 0


def selftest_checks() -> list[tuple[str, bool]]:
    results = []
    key = example_key()
    map_count, records = parse_key(key)
    params = [decode_subkey(r) for r in records]
    results.append(("example key selects 8 maps", map_count == 8))
    for i in golden.TABLE_ROWS_CONSISTENT:
        p = params[i]
        got = (p.seed_text, p.offset_text, p.settles, p.orbits, p.samples)
        results.append((f"parameter table row #{i}", got == golden.REFERENCE_TABLE[i]))
    results.append(("row #5 offset", params[5].offset_text == golden.ROW5_OFFSET))
    for x, want in golden.EXTRACTION_VECTORS:
        results.append((f"extract {x!r} -> {want}", extract_byte(x) == want))
    rng = random.Random(0)
    ok = True
    for _ in range(200):
        x = rng.uniform(0.001, 0.999)
        for k in range(1, 7):
            y = x
            for _ in range(k):
                y = 4.0 * y * (1.0 - y)
            ok &= abs(logistic4_conjugate(x, k) - y) < 2 ** k * 1e-12
    results.append(("closed-form logistic conjugacy", ok))
    fast = new_generator(key).next_bytes(2000)
    slow = reference_keystream(list(DEFAULT_BANK[:8]), params, 2000)
    results.append(("compiled keystream matches reference", fast == slow))
    results.append(("platform fingerprint", fast[:64] == PLATFORM_FINGERPRINT))
    msg = bytes(range(256)) * 8
    ct = CipherSession.from_key(key).apply(msg)
    results.append(("encrypt/decrypt round trip", CipherSession.from_key(key).apply(ct) == msg))
    bad = new_generator(key)
    bad.slots[0].spec = Logistic(4.0)
    bad.slots[0].params = SubkeyParams(0.5, 1e-3, 0, 4, 4)
    try:
        bad.next_bytes(1)
        results.append(("degenerate orbit detected", False))
    except OrbitHopError:
        results.append(("degenerate orbit detected", True))
    return results


def cmd_selftest(args) -> int:
    results = selftest_checks()
    for name, ok in results:
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
    failed = sum(not ok for _, ok in results)
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def _count(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbithop",
        description="Multi-map orbit-hopping chaotic stream cipher (research artifact, not a vetted cipher).",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("keygen", help="write a fresh random key")
    p.add_argument("--maps", type=int, required=True, choices=range(MIN_MAPS, MAX_MAPS + 1),
                   metavar=f"{{{MIN_MAPS}..{MAX_MAPS}}}")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("inspect-key", help="print the decoded parameter table")
    p.add_argument("--key-file", required=True)
    p.add_argument("--bank", help="map bank file (default: built-in 8-map bank)")
    p.set_defaults(func=cmd_inspect_key)

    p = sub.add_parser("keystream", help="dump raw keystream bytes")
    p.add_argument("--key-file", required=True)
    p.add_argument("--count", type=_count, required=True)
    p.add_argument("--hex", action="store_true", help="lowercase hex, 32 bytes per line")
    p.add_argument("--out", default="-")
    p.add_argument("--bank")
    p.set_defaults(func=cmd_keystream)

    for name in ("encrypt", "decrypt"):
        p = sub.add_parser(name, help=f"{name} a file (XOR with the keystream)")
        p.add_argument("--key-file", required=True)
        p.add_argument("--in", dest="input", required=True)
        p.add_argument("--out", required=True)
        p.add_argument("--bank")
        p.set_defaults(func=cmd_crypt)

    p = sub.add_parser("analyze", help="byte histogram, chi-square, monobit and runs")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("selftest", help="check the worked example and internal consistency")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (OrbitHopError, OSError) as exc:
        sys.stderr.write(f"orbithop {args.command}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
