"""Completeness decision and exact minimal uncompletable words.

Breadth-first search over determinized node subsets starting from the
all-nodes state.  A word empties that state exactly when no left context
extends it into a concatenation of S-words, so the first time the empty
subset appears its BFS depth is the minimal uncompletable length and the
parent chain spells a witness.  Letters expand in alphabet order, which
makes the witness the shortlex-least minimal uncompletable word.
Completeness is concluded only when the reachable subset graph is
exhausted without meeting the empty state.
"""

import time
from dataclasses import dataclass

from .automaton import PrefixAutomaton

DEFAULT_MAX_STATES = 1 << 26
DEFAULT_MAX_WORDS = 100_000


class LimitExceeded(Exception):
    """A resource limit was hit before either verdict was established."""

    def __init__(self, message, explored_states=0):
        super().__init__(message)
        self.explored_states = explored_states


@dataclass
class CompletenessVerdict:
    complete: bool
    witness: str | None
    uwl: int | None
    explored_states: int
    elapsed: float

    def to_json_dict(self):
        return {
            "complete": self.complete,
            "uwl": self.uwl,
            "witness": self.witness,
            "explored_states": self.explored_states,
            "elapsed_ms": self.elapsed * 1000.0,
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            complete=data["complete"],
            witness=data["witness"],
            uwl=data["uwl"],
            explored_states=data["explored_states"],
            elapsed=data["elapsed_ms"] / 1000.0,
        )


@dataclass
class MinimalWords:
    uwl: int
    words: frozenset
    truncated: bool


def exp_bound(word_set):
    """The exponential bound 2^(||S|| - m + 1) on the minimal length."""
    if word_set.m == 0:
        raise ValueError("empty set")
    return 1 << (word_set.total_length - word_set.m + 1)


def decide(word_set, max_states=DEFAULT_MAX_STATES, max_length=None,
           time_limit=None):
    """Decide completeness; on non-complete sets report uwl and the
    shortlex-least minimal uncompletable word.

    Raises LimitExceeded when a limit is hit before either verdict is
    certain; that outcome is distinct from both verdicts.
    """
    t0 = time.perf_counter()
    auto = PrefixAutomaton(word_set)
    letters = auto.alphabet.letters
    tables = [auto.child_mask[c] for c in letters]
    acc = auto.accepting_mask
    start = auto.universal

    states = [start]
    depths = [0]
    parents = [(-1, -1)]
    visited = {start: 0}
    capped = False
    head = 0
    while head < len(states):
        idx = head
        head += 1
        depth = depths[idx]
        if max_length is not None and depth >= max_length:
            capped = True
            continue
        if time_limit is not None and idx % 1024 == 0:
            if time.perf_counter() - t0 > time_limit:
                raise LimitExceeded("time limit exceeded", len(states))
        base = states[idx]
        if base & acc:
            base |= 1
        for ci, table in enumerate(tables):
            bits = base
            out = 0
            while bits:
                low = bits & -bits
                out |= table[low.bit_length() - 1]
                bits ^= low
            if out & acc:
                out |= 1
            if out in visited:
                continue
            visited[out] = len(states)
            states.append(out)
            depths.append(depth + 1)
            parents.append((idx, ci))
            if out == 0:
                witness = _spell(parents, letters, len(states) - 1)
                return CompletenessVerdict(
                    complete=False,
                    witness=witness,
                    uwl=depth + 1,
                    explored_states=len(states),
                    elapsed=time.perf_counter() - t0,
                )
            if len(states) > max_states:
                raise LimitExceeded(
                    f"state limit {max_states} exceeded", len(states)
                )
    if capped:
        raise LimitExceeded(
            f"length limit {max_length} reached before exhaustion", len(states)
        )
    return CompletenessVerdict(
        complete=True,
        witness=None,
        uwl=None,
        explored_states=len(states),
        elapsed=time.perf_counter() - t0,
    )


def _spell(parents, letters, idx):
    out = []
    while idx > 0:
        idx, ci = parents[idx]
        out.append(letters[ci])
    return "".join(reversed(out))


def all_minimal_words(word_set, max_states=DEFAULT_MAX_STATES,
                      max_words=DEFAULT_MAX_WORDS):
    """Every uncompletable word of the minimal length.

    Enumerated as the shortest subset-BFS paths to the empty state; the
    deterministic stepping makes distinct paths spell distinct words.  The
    result is truncated at max_words (flagged on the result).
    """
    first = decide(word_set, max_states=max_states)
    if first.complete:
        raise ValueError("set is complete: there is no uncompletable word")
    target = first.uwl

    auto = PrefixAutomaton(word_set)
    letters = auto.alphabet.letters
    tables = [auto.child_mask[c] for c in letters]
    acc = auto.accepting_mask
    start = auto.universal

    states = [start]
    depths = [0]
    visited = {start: 0}
    preds = [[]]
    empty_preds = []
    head = 0
    while head < len(states):
        idx = head
        head += 1
        depth = depths[idx]
        if depth >= target:
            break
        base = states[idx]
        if base & acc:
            base |= 1
        for ci, table in enumerate(tables):
            bits = base
            out = 0
            while bits:
                low = bits & -bits
                out |= table[low.bit_length() - 1]
                bits ^= low
            if out & acc:
                out |= 1
            if out == 0:
                if depth + 1 == target:
                    empty_preds.append((idx, ci))
                continue
            j = visited.get(out)
            if j is not None:
                if depths[j] == depth + 1:
                    preds[j].append((idx, ci))
                continue
            if depth + 1 >= target:
                continue  # non-empty states at the last level are dead ends
            visited[out] = len(states)
            states.append(out)
            depths.append(depth + 1)
            preds.append([(idx, ci)])
            if len(states) > max_states:
                raise LimitExceeded(
                    f"state limit {max_states} exceeded", len(states)
                )

    words = set()
    truncated = False

    def walk(idx, suffix):
        nonlocal truncated
        if truncated:
            return
        if idx == 0:
            if len(words) >= max_words:
                truncated = True
            else:
                words.add(suffix)
            return
        for src, ci in preds[idx]:
            walk(src, letters[ci] + suffix)
            if truncated:
                return

    for src, ci in empty_preds:
        walk(src, letters[ci])
        if truncated:
            break
    return MinimalWords(uwl=target, words=frozenset(words), truncated=truncated)
