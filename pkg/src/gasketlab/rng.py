"""Deterministic, version-stable randomness.

Every sampled object in this package (random graphs, revision schedules,
noise coins) is a pure function of a 64-bit seed.  Randomness comes from a
counter-mode SHA-256 word stream rather than a library RNG so that the
seed-to-output mapping survives interpreter and library upgrades: word
``i`` of the stream is byte slice ``8*(i%4) .. 8*(i%4)+8`` (big-endian) of
``SHA256(domain || seed_be8 || block_be8)`` with ``block = i // 4``.

Changing this mapping is a breaking change; sampled graphs and simulation
traces are part of tested behaviour.
"""

from __future__ import annotations

import hashlib

from .errors import DomainError

_MASK64 = (1 << 64) - 1


def check_seed(seed: int) -> int:
    if not isinstance(seed, int) or not (0 <= seed <= _MASK64):
        raise DomainError(f"seed must be an integer in [0, 2^64), got {seed!r}")
    return seed


class WordStream:
    """Endless stream of 64-bit words determined by (seed, domain)."""

    def __init__(self, seed: int, domain: bytes = b"gasketlab"):
        check_seed(seed)
        self._prefix = domain + seed.to_bytes(8, "big")
        self._block = 0
        self._words: list[int] = []

    def next_word(self) -> int:
        if not self._words:
            digest = hashlib.sha256(
                self._prefix + self._block.to_bytes(8, "big")
            ).digest()
            # reversed so .pop() yields words in digest order
            self._words = [
                int.from_bytes(digest[off : off + 8], "big") for off in (24, 16, 8, 0)
            ]
            self._block += 1
        return self._words.pop()

    def uniform(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_word() >> 11) * 2.0**-53

    def index(self, n: int) -> int:
        """Uniform-enough index in [0, n); documented as ``word mod n``.

        The modulo bias is below 2^-50 for any n this package uses.
        """
        return self.next_word() % n


def derive_seed(master: int, *labels: object) -> int:
    """Derive an independent 64-bit subseed from a master seed and labels.

    Labels are length-prefixed before hashing, so ("ab", "c") and ("a", "bc")
    derive different seeds.
    """
    check_seed(master)
    h = hashlib.sha256()
    h.update(b"gasketlab-derive")
    h.update(master.to_bytes(8, "big"))
    for label in labels:
        enc = str(label).encode("utf-8")
        h.update(len(enc).to_bytes(4, "big"))
        h.update(enc)
    return int.from_bytes(h.digest()[:8], "big")
