"""Byte histograms of a plaintext and its ciphertext under the example key.

Writes plain.csv and cipher.csv ("byte,count") into the output directory and
prints the chi-square report for each.

    python scripts/histograms.py --text tests/data/english_pd.txt.gz --out-dir out/
"""

import argparse
import gzip
from dataclasses import dataclass
from pathlib import Path

from orbithop.analysis import chi_square_uniform, histogram
from orbithop.cipher import encrypt
from orbithop.keying import KeyMaterial, example_key


@dataclass
class Config:
    text: Path
    out_dir: Path
    key_file: Path | None = None


def read_text(path: Path) -> bytes:
    raw = path.read_bytes()
    return gzip.decompress(raw) if path.suffix == ".gz" else raw


def run(cfg: Config) -> None:
    key = KeyMaterial.from_hex(cfg.key_file.read_text()) if cfg.key_file else example_key()
    plain = read_text(cfg.text)
    cipher = encrypt(key, plain)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for name, data in (("plain", plain), ("cipher", cipher)):
        h = histogram(data)
        (cfg.out_dir / f"{name}.csv").write_text(h.to_csv())
        u = chi_square_uniform(h)
        print(f"{name}: {h.total} bytes, chi2 {u.chi_square:.2f} "
              f"(critical {u.critical_value_p001:.2f}) {'pass' if u.passed else 'fail'}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--text", type=Path, default=Path("tests/data/english_pd.txt.gz"))
    p.add_argument("--out-dir", type=Path, default=Path("out/histograms"))
    p.add_argument("--key-file", type=Path)
    a = p.parse_args()
    run(Config(a.text, a.out_dir, a.key_file))


if __name__ == "__main__":
    main()
