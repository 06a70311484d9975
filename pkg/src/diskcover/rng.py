"""Deterministic 64-bit PRNG for reproducible instance generation.

Benchmark results must be reproducible bit-for-bit from a seed alone, in any
implementation language, so we fix the generator algorithm instead of relying
on a runtime's default RNG.  The scheme is the standard pairing of

  * splitmix64 to expand a single 64-bit seed into the generator state, and
  * xoshiro256** for the output stream,

both exactly as published by Blackman and Vigna (public-domain reference C
code).  Doubles are drawn as ``(next_u64() >> 11) * 2**-53``, giving a value
in [0, 1).  See the README for the byte-exact recipe.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


def splitmix64(state: int) -> tuple[int, int]:
    """Advance a splitmix64 state once; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, (z ^ (z >> 31)) & _MASK


class Xoshiro256StarStar:
    """xoshiro256** seeded from a 64-bit integer via four splitmix64 outputs."""

    __slots__ = ("_s",)

    def __init__(self, seed: int):
        sm = seed & _MASK
        s = []
        for _ in range(4):
            sm, out = splitmix64(sm)
            s.append(out)
        self._s = s

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK, 7) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        """Uniform double in [0, 1): top 53 bits of the next output."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (inclusive), via rejection-free modulo.

        The tiny modulo bias is irrelevant for test-instance sizing and keeps
        the recipe trivial to reproduce.
        """
        span = hi - lo + 1
        return lo + self.next_u64() % span
