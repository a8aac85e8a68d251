"""First samples of every orbit in each map's first visit, as CSV.

Columns: map,orbit,start,sample,value. Useful for plotting how far apart
neighbouring orbits land after settling.

    python scripts/orbit_points.py --samples 4 > orbits.csv
"""

import argparse
import sys
from dataclasses import dataclass

from orbithop.keystream import new_generator, orbit_start
from orbithop.keying import KeyMaterial, example_key
from orbithop.maps import orbit_samples


@dataclass
class Config:
    samples: int = 4
    key_hex: str | None = None


def run(cfg: Config, out=sys.stdout) -> None:
    key = KeyMaterial.from_hex(cfg.key_hex) if cfg.key_hex else example_key()
    out.write("map,orbit,start,sample,value\n")
    for i, slot in enumerate(new_generator(key).slots):
        p = slot.params
        n = min(cfg.samples, p.samples)
        for j in range(p.orbits):
            x0 = orbit_start(p.seed, p.offset, j)
            for s, v in enumerate(orbit_samples(slot.spec, x0, p.settles, n)):
                out.write(f"{i},{j},{x0!r},{s},{v!r}\n")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=4)
    p.add_argument("--key-file")
    a = p.parse_args()
    key_hex = open(a.key_file).read() if a.key_file else None
    run(Config(a.samples, key_hex))


if __name__ == "__main__":
    main()
