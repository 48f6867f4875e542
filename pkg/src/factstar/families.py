"""Generators for the concrete non-complete families and the long witness.

The main family at maximal length k keeps every binary word of lengths
k-1 and k except b a^(k-1), b^(k-1) a (length k) and the two uniform
words (length k-1); its minimal uncompletable length is 5k^2 - 17k + 13
for k >= 4, realized by an explicitly constructed word with free letter
slots.  The catalog also holds the quadratic-growth family (one excluded
length-k word plus short patterns, k > 6) and the extremal sets found by
the exhaustive searches over short universes.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .forbidden import FamilyContext
from .words import BINARY, WordSet

log = logging.getLogger(__name__)


def _layer(length):
    return {"".join(p) for p in product("ab", repeat=length)}


def s_k(k):
    """The family excluding b a^(k-1) and b^(k-1) a; needs k >= 3."""
    if k < 3:
        raise ValueError("s_k needs k >= 3")
    ctx = FamilyContext.for_k(k)
    uniform = {"a" * (k - 1), "b" * (k - 1)}
    return WordSet((_layer(k) - {ctx.u, ctx.v}) | (_layer(k - 1) - uniform), BINARY)


def t_k(k):
    """Mirror (equally: rename) image of s_k: excludes a^(k-1) b, a b^(k-1)."""
    if k < 3:
        raise ValueError("t_k needs k >= 3")
    excluded = {"a" * (k - 1) + "b", "a" + "b" * (k - 1)}
    uniform = {"a" * (k - 1), "b" * (k - 1)}
    return WordSet((_layer(k) - excluded) | (_layer(k - 1) - uniform), BINARY)


def r_k(k):
    """The quadratic family: all length-k words but a^(k-2) b b, plus the
    short patterns x b a^(k-4) y, x b a, b^4, and b a^i x / a^i b for
    i = 1..k-3.  Defined for k > 6; pattern overlaps are deduplicated.
    """
    if k <= 6:
        raise ValueError("R_k defined for k > 6")
    raw = []
    excluded = "a" * (k - 2) + "bb"
    raw.extend(w for w in _layer(k) if w != excluded)
    raw.extend(x + "b" + "a" * (k - 4) + y for x in "ab" for y in "ab")
    raw.extend(x + "ba" for x in "ab")
    raw.append("bbbb")
    for i in range(1, k - 2):
        raw.extend("b" + "a" * i + y for y in "ab")
        raw.append("a" * i + "b")
    words = set(raw)
    log.debug("r_k(%d): %d pattern words, %d distinct", k, len(raw), len(words))
    return WordSet(words, BINARY)


def extreme_sets():
    """The extremal non-complete sets of the exhaustive searches, by name."""
    e3b = (_layer(3) - {"baa", "bba"}) | (_layer(2) - {"ab", "ba"})
    e4 = (_layer(4) - {"aabb", "abaa", "abbb"}) | (_layer(3) - {"aba", "bba", "bbb"})
    return {
        "extreme3a": s_k(3),
        "extreme3b": WordSet(e3b, BINARY),
        "extreme4": WordSet(e4, BINARY),
    }


def omega_slot_count(k):
    """Number of free letter slots in the constructed word."""
    return 1 + 2 * (k - 3)


@dataclass(frozen=True)
class OmegaSpec:
    """Parameters of the constructed word: k and the letters filled into
    its free slots, left to right (default all a)."""

    k: int
    fill: str

    def __post_init__(self):
        if self.k < 4:
            raise ValueError("omega needs k >= 4")
        slots = omega_slot_count(self.k)
        if len(self.fill) != slots:
            raise ValueError(f"fill must supply exactly {slots} letters")
        for c in self.fill:
            if c not in "ab":
                raise ValueError(f"fill letter {c!r} outside the binary alphabet")

    @classmethod
    def default(cls, k):
        if k < 4:
            raise ValueError("omega needs k >= 4")
        return cls(k, "a" * omega_slot_count(k))


def omega(spec):
    """Assemble the uncompletable word of length 5k^2 - 17k + 13 for s_k:
    u, a slot, then for i = 1..k-3 the factor r a^i, slot, b^(k-2-i) r,
    slot, and the final v."""
    ctx = FamilyContext.for_k(spec.k)
    fill = iter(spec.fill)
    parts = [ctx.u, next(fill)]
    for i in range(1, spec.k - 2):
        parts.append(ctx.r)
        parts.append("a" * i)
        parts.append(next(fill))
        parts.append("b" * (spec.k - 2 - i))
        parts.append(ctx.r)
        parts.append(next(fill))
    parts.append(ctx.v)
    return "".join(parts)


def s_formula(k):
    """Closed-form minimal uncompletable length of s_k, k >= 4."""
    if k < 4:
        raise ValueError("the closed form holds for k >= 4")
    return 5 * k * k - 17 * k + 13


class RkLength(NamedTuple):
    value: int
    conjectured: bool


def r_formula(k):
    """Quadratic minimal length 3k^2 - 9k + 1 for r_k; checked for
    7 <= k <= 12 only, so values beyond 12 carry the conjectured flag."""
    if k <= 6:
        raise ValueError("R_k defined for k > 6")
    return RkLength(3 * k * k - 9 * k + 1, not (7 <= k <= 12))
