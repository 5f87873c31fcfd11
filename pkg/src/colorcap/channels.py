"""Coloring channels over a finite alphabet.

The alphabet is [q] = {1, ..., q}.  A coloring channel is a nonempty subset
I of [q]: on input x it keeps the symbols lying in I, in order, and deletes
the rest.  A channel system is a finite sequence of coloring channels over a
common alphabet; the output of a word under the system is the tuple of its
per-channel projections.  Two equal-length words are confusable when they
produce the same output tuple, i.e. no receiver seeing all projections can
tell them apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence

Word = tuple[int, ...]


def validate_word(word: Sequence[int], q: int) -> Word:
    """Check that every symbol lies in 1..q and return the word as a tuple."""
    w = tuple(word)
    for pos, a in enumerate(w):
        if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= q:
            raise ValueError(f"symbol {a!r} at position {pos} outside 1..{q}")
    return w


@dataclass(frozen=True)
class ChannelSystem:
    """A sequence of coloring channels over the alphabet [q].

    Channels are stored as frozensets; the constructor accepts any iterable
    of iterables of letters.  Order is significant (outputs are tuples
    indexed by channel), duplicates are allowed.
    """

    q: int
    channels: tuple[frozenset[int], ...]

    def __init__(self, q: int, channels: Iterable[Iterable[int]]):
        if not isinstance(q, int) or isinstance(q, bool) or q < 2:
            raise ValueError(f"alphabet size must be an integer >= 2, got {q!r}")
        normalized = tuple(frozenset(c) for c in channels)
        if not normalized:
            raise ValueError("a channel system needs at least one channel")
        for i, ch in enumerate(normalized):
            if not ch:
                raise ValueError(f"channel {i + 1} is empty")
            bad = [a for a in ch if not isinstance(a, int) or isinstance(a, bool)
                   or not 1 <= a <= q]
            if bad:
                raise ValueError(
                    f"channel {i + 1}: letter {bad[0]!r} outside 1..{q}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "channels", normalized)

    @property
    def t(self) -> int:
        return len(self.channels)

    @property
    def letters(self) -> frozenset[int]:
        """Union of all channel letter sets (letters the system can see)."""
        return frozenset().union(*self.channels)


def apply_channel(word: Sequence[int], channel: AbstractSet[int]) -> Word:
    """Project a word onto a channel: keep symbols in the channel, in order."""
    return tuple(a for a in word if a in channel)


def apply_system(word: Sequence[int], system: ChannelSystem) -> tuple[Word, ...]:
    """Output tuple of a word: one projection per channel, in channel order."""
    return tuple(apply_channel(word, ch) for ch in system.channels)


def confusable(x: Sequence[int], y: Sequence[int], system: ChannelSystem) -> bool:
    """Whether two equal-length words have identical output tuples."""
    if len(x) != len(y):
        raise ValueError(f"words must have equal length, got {len(x)} and {len(y)}")
    return apply_system(x, system) == apply_system(y, system)
