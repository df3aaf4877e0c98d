"""
Per-run seed derivation.

Seeds must be identical across processes, platforms and worker counts,
so nothing here uses the salted builtin hash(). Cell keys come from a
64-bit FNV-1a of a canonical text and are combined with the master seed
and run index by chained splitmix64 finalizers (full avalanche).
"""

from typing import Union

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF

_FNV_OFFSET64 = 0xCBF29CE484222325
_FNV_PRIME64 = 0x100000001B3

_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET64
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME64) & MASK64
    return h


def splitmix64(value: int) -> int:
    z = (value + _GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def mix(*parts: Union[int, str, bytes]) -> int:

    """Deterministically fold any number of parts into a 64-bit value"""

    h = 0
    for part in parts:
        if isinstance(part, str):
            part = part.encode("utf-8")
        if isinstance(part, bytes):
            part = fnv1a64(part)
        h = splitmix64(h ^ (part & MASK64))
    return h


def stream_key(p: float, n: int) -> int:

    """
    Cell key for the trial stream. Only p and n shape the trials,
    so configurations sharing them replay the same sequences
    """

    return fnv1a64(f"p={p!r};n={n}".encode("ascii"))


def run_seed(master_seed: int, cell_id: int, run_index: int) -> int:
    return mix(master_seed, cell_id, run_index)


def run_generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))
