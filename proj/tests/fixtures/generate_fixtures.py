#!/usr/bin/env python3
"""Regenerates the synthetic measurement fixtures (sources.csv, aut.csv,
aut_sweep.s1p). Deterministic; run from this directory."""

import numpy as np

rng = np.random.default_rng(20260809)

# --- Tier-one source samples: 50 repeated characterizations of five sources.
n = 50
cols = {
    "open.c0": rng.normal(5.02e-14, 1.5e-15, n),
    "open.offset_length": rng.normal(5.001e-3, 1.2e-5, n),
    "tcc_mag": rng.normal(1.0004, 1.4e-3, n),
    "rcc_mag": np.abs(rng.normal(1.2e-3, 9e-4, n)),
    "noise_floor_mag": np.abs(rng.normal(8e-4, 2e-4, n)),
}
with open("sources.csv", "w") as f:
    f.write(",".join(cols.keys()) + "\n")
    for i in range(n):
        f.write(",".join(f"{cols[k][i]:.12e}" for k in cols) + "\n")

# --- Tier-two AUT samples: 50 repeated dB readings per frequency, mildly
# left-skewed like the simulated distributions.
freqs = [1e9, 2e9, 3e9, 4e9]
with open("aut.csv", "w") as f:
    f.write(",".join(f"{fq:.0f}" for fq in freqs) + "\n")
    base = {1e9: -30.05, 2e9: -29.92, 3e9: -30.11, 4e9: -29.97}
    for _ in range(n):
        row = []
        for fq in freqs:
            z = rng.normal()
            skew_part = -0.35 * (np.abs(rng.normal()) - np.sqrt(2 / np.pi))
            row.append(f"{base[fq] + 0.82 * z + skew_part:.12e}")
        f.write(",".join(row) + "\n")

# --- A small sweep for parser and dut-from-s1p coverage.
with open("aut_sweep.s1p", "w") as f:
    f.write("! synthetic AUT sweep\n# GHz S RI R 50\n")
    for fq in freqs:
        mag = 10 ** (base[fq] / 20)
        phase = -4 * np.pi * fq * 0.012 / 2.99792458e8
        f.write(f"{fq/1e9:.1f} {mag*np.cos(phase):.12e} {mag*np.sin(phase):.12e}\n")

print("fixtures written")
