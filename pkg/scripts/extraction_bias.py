"""Measure the bias introduced by shortest-repr digit extraction.

The last significant digit of a shortest round-trip decimal is never 0, so the
8-digit window feeding each byte is skewed. This prints, for keystreams of
growing length under the example key (or random keys):

* the distribution of the final digit of the window,
* the fraction of odd bytes,
* chi-square, monobit and runs results.

    python scripts/extraction_bias.py --sizes 65536 262144 1048576
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from orbithop.analysis import chi_square_uniform, histogram, monobit_and_runs
from orbithop.extract import fraction_digits
from orbithop.keying import example_key, generate_key
from orbithop.keystream import new_generator, orbit_start
from orbithop.maps import orbit_samples


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: [65536, 262144, 1 << 20])
    random_keys: int = 0
    seed: int = 0


def last_digit_counts(n: int) -> Counter:
    values = []
    for slot in new_generator(example_key()).slots:
        p = slot.params
        for j in range(p.orbits):
            values.extend(orbit_samples(slot.spec, orbit_start(p.seed, p.offset, j), p.settles, p.samples))
    digits = Counter()
    for x in values[:n]:
        d = fraction_digits(x)
        window = d.ljust(8, "0") if len(d) < 8 else d[-8:]
        digits[window[-1]] += 1
    return digits


def report(label: str, data: bytes) -> None:
    arr = np.frombuffer(data, dtype=np.uint8)
    u = chi_square_uniform(histogram(data))
    bits = monobit_and_runs(data)
    print(f"{label}: n={len(data)} odd={np.mean(arr & 1):.4f} "
          f"chi2={u.chi_square:.1f}/{u.critical_value_p001:.1f} "
          f"monobit p={bits.monobit.p_value:.3g} runs p={bits.runs.p_value:.3g}")


def run(cfg: Config) -> None:
    counts = last_digit_counts(5000)
    total = sum(counts.values())
    print("final window digit:", " ".join(f"{d}:{counts[d] / total:.3f}" for d in "0123456789"))
    for n in cfg.sizes:
        report("example key", new_generator(example_key()).next_bytes(n))
    rng = random.Random(cfg.seed)
    for i in range(cfg.random_keys):
        key = generate_key(rng.randint(2, 8), rng)
        report(f"random key {i}", new_generator(key).next_bytes(max(cfg.sizes)))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[65536, 262144, 1 << 20])
    p.add_argument("--random-keys", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    run(Config(a.sizes, a.random_keys, a.seed))


if __name__ == "__main__":
    main()
