"""Portable deterministic random numbers.

The generator is xoshiro256** (Blackman-Vigna), seeded from a single
64-bit value through the splitmix64 mixer, with Gaussian variates via
Box-Muller. Everything is integer arithmetic masked to 64 bits, so a
given seed reproduces the identical stream on any platform, independent
of numpy or Python build details. Search trajectories therefore depend
only on the configured seed.
"""

from __future__ import annotations

import math

import numpy as np

_MASK64 = (1 << 64) - 1


def splitmix64(state: int):
    """Advance a splitmix64 state once; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def derive_seeds(seed: int, count: int) -> list[int]:
    """First `count` outputs of the splitmix64 stream started at `seed`.

    Used to give each optimizer restart its own independent seed.
    """
    state = seed & _MASK64
    out = []
    for _ in range(count):
        state, value = splitmix64(state)
        out.append(value)
    return out


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** with splitmix64 state initialization."""

    def __init__(self, seed: int):
        state = seed & _MASK64
        s = []
        for _ in range(4):
            state, value = splitmix64(state)
            s.append(value)
        self._s = s
        self._spare_gauss = None

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def random(self) -> float:
        """Uniform double in [0, 1) with 53 bits of precision."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def gauss(self) -> float:
        """Standard normal variate (Box-Muller, pair cached)."""
        if self._spare_gauss is not None:
            value = self._spare_gauss
            self._spare_gauss = None
            return value
        # u1 in (0, 1] so the log is finite.
        u1 = ((self.next_uint64() >> 11) + 1) * 2.0**-53
        u2 = (self.next_uint64() >> 11) * 2.0**-53
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        self._spare_gauss = radius * math.sin(angle)
        return radius * math.cos(angle)

    def complex_gaussians(self, shape) -> np.ndarray:
        """Array of standard complex Gaussians, filled in row-major order
        (real part drawn before imaginary part for each entry)."""
        total = int(np.prod(shape)) if shape else 1
        flat = np.empty(total, dtype=np.complex128)
        for i in range(total):
            re = self.gauss()
            im = self.gauss()
            flat[i] = complex(re, im)
        return flat.reshape(shape)
