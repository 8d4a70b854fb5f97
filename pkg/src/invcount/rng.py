"""Seedable 64-bit PRNG used by the input generators.

The stream is xorshift64* with the state initialized through one round of
splitmix64, so any 64-bit seed (including 0) is usable.  Bounded draws reduce
by modulo.  All arithmetic is unsigned 64-bit with wraparound, which makes the
stream reproducible across platforms and across the pure-Python and compiled
implementations in this package.
"""

from __future__ import annotations

__all__ = ["MASK64", "splitmix64", "Xorshift64Star"]

MASK64 = (1 << 64) - 1

_XS_MULT = 0x2545F4914F6CDD1D
_SM_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """One splitmix64 step on x, returned as an unsigned 64-bit value."""
    x = (x + _SM_GAMMA) & MASK64
    z = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


def seed_state(seed: int) -> int:
    """Initial nonzero xorshift64* state for a 64-bit seed."""
    s = splitmix64(seed & MASK64)
    return s if s else _SM_GAMMA


class Xorshift64Star:
    """xorshift64* stream: shifts 12/25/27, output multiplied by 0x2545F4914F6CDD1D."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed_state(seed)

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * _XS_MULT) & MASK64

    def next_i64(self) -> int:
        """Next value reinterpreted as two's-complement signed 64-bit."""
        u = self.next_u64()
        return u - (1 << 64) if u >= (1 << 63) else u

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) via modulo reduction.  bound >= 1."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound
