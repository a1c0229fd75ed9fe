"""Deterministic seed derivation for all randomness in the package.

Every random choice is driven by a numpy PCG64 generator keyed by a
64-bit child seed.  Child seeds are derived from a parent seed plus a
sequence of string/int tags via SHA-256, so any sub-stream can be
regenerated in isolation:

    child_seed(master, "inst", size, index)   -> per-instance seed
    child_seed(master, "run", inst_seed, r)   -> per-run seed
    rng_for(seed, "shuffle", attempt, j)      -> generator for one shuffle

The derivation rule is: join the parts with "\\x1f" after str(), hash
with SHA-256, and take the first 8 bytes big-endian.  This is stable
across platforms and Python versions.
"""

from __future__ import annotations

import hashlib

import numpy as np


def child_seed(*parts) -> int:
    """Derive a 64-bit seed from a tag sequence (ints and strings)."""
    key = "\x1f".join(str(p) for p in parts).encode("ascii")
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def rng_for(*parts) -> np.random.Generator:
    """PCG64 generator keyed by child_seed(*parts)."""
    return np.random.Generator(np.random.PCG64(child_seed(*parts)))
