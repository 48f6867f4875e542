"""Exhaustive extremal-set experiments over short-word universes.

Enumerates subsets of all words up to a length bound, keeps the
inclusion-maximal non-complete ones, groups them by canonical form under
the four set symmetries (identity, mirror, rename, both) and ranks the
classes by minimal uncompletable length.

Non-completeness is inherited by subsets, so a set is maximal exactly
when it is non-complete while every one-word extension is complete; the
engines lean on that monotonicity.  Up to length 3 the whole lattice is
swept; the length-4 universe needs a minimum-count filter on the
length-4 layer and is explored stratum by stratum: for each choice of
the length-4 part, the short-word lattice is walked top-down from the
full set, descending only through complete sets, so the walk stops on
the non-complete frontier where the maximal candidates live.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

from .shortest import LimitExceeded, decide
from .words import BINARY, Symmetry, WordSet, apply_symmetry_set, shortlex_key

SYMMETRIES = (
    Symmetry.IDENTITY,
    Symmetry.MIRROR,
    Symmetry.RENAME,
    Symmetry.MIRROR_RENAME,
)

MIN_LAYER4_COUNT = 8  # resource policy floor for the length-4 search


def _serial_key(word_set):
    return tuple(shortlex_key(w, word_set.alphabet) for w in word_set.sorted_words())


def orbit(word_set):
    """Distinct symmetry images, shortlex-least serialization first."""
    images = {}
    for sym in SYMMETRIES:
        img = apply_symmetry_set(word_set, sym)
        images[_serial_key(img)] = img
    return [images[key] for key in sorted(images)]


def canonical_form(word_set):
    """The shortlex-least symmetry image; equal exactly on isomorphic sets."""
    if len(word_set.alphabet) != 2:
        raise ValueError("canonical form is defined for binary alphabets only")
    return orbit(word_set)[0]


def universe_words(max_len, alphabet=BINARY):
    """All non-empty words up to max_len, in shortlex order."""
    out = []
    for length in range(1, max_len + 1):
        out.extend("".join(p) for p in product(alphabet.letters, repeat=length))
    return out


def is_maximal_non_complete(word_set, universe):
    """Non-complete, and every one-word extension inside the universe is
    complete."""
    if decide(word_set).complete:
        return False
    for x in universe.words - word_set.words:
        if not decide(word_set.with_word(x)).complete:
            return False
    return True


@dataclass
class SearchClass:
    words: WordSet
    orbit_size: int
    uwl: int
    witness: str

    def to_json_dict(self):
        return {
            "words": self.words.sorted_words(),
            "orbit_size": self.orbit_size,
            "uwl": self.uwl,
            "witness": self.witness,
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            words=WordSet(data["words"], BINARY),
            orbit_size=data["orbit_size"],
            uwl=data["uwl"],
            witness=data["witness"],
        )


@dataclass
class SearchReport:
    universe: str
    filters: str
    classes: list
    sets_examined: int
    elapsed: float

    @property
    def top_classes(self):
        if not self.classes:
            return []
        best = self.classes[0].uwl
        return [c for c in self.classes if c.uwl == best]

    def to_json_dict(self):
        return {
            "universe": self.universe,
            "filters": self.filters,
            "classes": [c.to_json_dict() for c in self.classes],
            "sets_examined": self.sets_examined,
            "elapsed_ms": self.elapsed * 1000.0,
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            universe=data["universe"],
            filters=data["filters"],
            classes=[SearchClass.from_json_dict(c) for c in data["classes"]],
            sets_examined=data["sets_examined"],
            elapsed=data["elapsed_ms"] / 1000.0,
        )


def _mask_words(words, mask):
    return [w for b, w in enumerate(words) if mask >> b & 1]


def _sweep_chunk(args):
    words, lo, hi = args
    words = tuple(words)
    out = []
    for mask in range(lo, hi):
        out.append(decide(WordSet(_mask_words(words, mask), BINARY)).complete)
    return out


def _passes_counts(word_list, min_counts):
    for length, need in min_counts.items():
        if sum(1 for w in word_list if len(w) == length) < need:
            return False
    return True


def _group_classes(found, symmetry_reduction):
    """found: list of (word tuple, uwl, witness) for maximal sets."""
    classes = []
    if symmetry_reduction:
        clusters = {}
        for words, uwl, witness in found:
            ws = WordSet(words, BINARY)
            canon = canonical_form(ws)
            clusters.setdefault(_serial_key(canon), (canon, uwl))
            if clusters[_serial_key(canon)][1] != uwl:
                raise AssertionError("symmetry images disagree on uwl")
        for key in sorted(clusters):
            canon, uwl = clusters[key]
            verdict = decide(canon)
            classes.append(
                SearchClass(canon, len(orbit(canon)), verdict.uwl, verdict.witness)
            )
    else:
        for words, uwl, witness in found:
            classes.append(SearchClass(WordSet(words, BINARY), 1, uwl, witness))
    classes.sort(key=lambda c: (-c.uwl, _serial_key(c.words)))
    return classes


def _full_sweep(max_len, min_counts, workers, symmetry_reduction, time_limit):
    t0 = time.perf_counter()
    words = universe_words(max_len)
    n = len(words)
    total = 1 << n
    complete = [False] * total
    if workers > 1:
        bounds = [(total * i) // workers for i in range(workers + 1)]
        bounds[0] = 1
        chunks = [(words, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_chunk, chunks))
        pos = 1
        for chunk in results:
            for value in chunk:
                complete[pos] = value
                pos += 1
    else:
        for mask in range(1, total):
            if time_limit is not None and time.perf_counter() - t0 > time_limit:
                raise LimitExceeded("search time limit exceeded")
            complete[mask] = decide(WordSet(_mask_words(words, mask), BINARY)).complete

    found = []
    for mask in range(1, total):
        if complete[mask]:
            continue
        if any(not complete[mask | (1 << b)] for b in range(n) if not mask >> b & 1):
            continue
        member_words = _mask_words(words, mask)
        if not _passes_counts(member_words, min_counts):
            continue
        verdict = decide(WordSet(member_words, BINARY))
        found.append((tuple(member_words), verdict.uwl, verdict.witness))

    classes = _group_classes(found, symmetry_reduction)
    return SearchReport(
        universe=f"all words of length <= {max_len}",
        filters=_render_filters(min_counts),
        classes=classes,
        sets_examined=total - 1,
        elapsed=time.perf_counter() - t0,
    )


def _render_filters(min_counts):
    if not min_counts:
        return "none"
    items = ", ".join(f"{length}:{need}" for length, need in sorted(min_counts.items()))
    return f"min words per length {items}"


# --- length-4 engine ------------------------------------------------------

def _quick_masks(small):
    """Bit masks over the short-word universe whose presence makes any
    superset complete: both letters, the full length-2 layer, or the full
    length-3 layer."""
    index = {w: b for b, w in enumerate(small)}
    ab = (1 << index["a"]) | (1 << index["b"])
    layer2 = 0
    layer3 = 0
    for w, b in index.items():
        if len(w) == 2:
            layer2 |= 1 << b
        elif len(w) == 3:
            layer3 |= 1 << b
    return (ab, layer2, layer3)


def _explore_layer4_part(args):
    """All maximal non-complete sets whose length-4 layer equals part."""
    part, small, sig4, min_counts = args
    small = tuple(small)
    nsmall = len(small)
    fullq = (1 << nsmall) - 1
    quick = _quick_masks(small)
    part_words = frozenset(part)
    others = [w for w in sig4 if w not in part_words]

    memo = {}
    complete_cache = []
    nc_cache = []
    examined = 0

    def verdict_q(qmask):
        nonlocal examined
        known = memo.get(qmask)
        if known is not None:
            return known
        examined += 1
        for core in quick:
            if qmask & core == core:
                memo[qmask] = True
                return True
        for c in complete_cache:
            if qmask & c == c:
                memo[qmask] = True
                return True
        for c in nc_cache:
            if qmask | c == c:
                memo[qmask] = False
                return False
        words = set(part_words)
        words.update(_mask_words(small, qmask))
        result = decide(WordSet(words, BINARY)).complete
        memo[qmask] = result
        if result:
            complete_cache.append(qmask)
        else:
            nc_cache.append(qmask)
        return result

    # walk the short-word lattice downward through complete sets only;
    # maximal candidates sit on the non-complete frontier
    frontier = []
    seen = {fullq}
    stack = [fullq]
    while stack:
        qmask = stack.pop()
        if verdict_q(qmask):
            for b in range(nsmall):
                if qmask >> b & 1:
                    child = qmask ^ (1 << b)
                    if child not in seen:
                        seen.add(child)
                        stack.append(child)
        else:
            frontier.append(qmask)

    results = []
    for qmask in frontier:
        if any(
            not verdict_q(qmask | (1 << b))
            for b in range(nsmall)
            if not qmask >> b & 1
        ):
            continue
        member_words = sorted(part_words, key=shortlex_key) + _mask_words(small, qmask)
        if not _passes_counts(member_words, min_counts):
            continue
        grown_complete = True
        for x in others:
            examined += 1
            if not decide(WordSet(set(member_words) | {x}, BINARY)).complete:
                grown_complete = False
                break
        if not grown_complete:
            continue
        verdict = decide(WordSet(member_words, BINARY))
        results.append((tuple(member_words), verdict.uwl, verdict.witness))
    results.sort(key=lambda r: tuple(shortlex_key(w) for w in r[0]))
    return results, examined


def _layer4_parts(min4, symmetry_reduction):
    sig4 = ["".join(p) for p in product("ab", repeat=4)]
    parts = []
    for size in range(min4, len(sig4) + 1):
        for combo in combinations(sig4, size):
            if symmetry_reduction:
                ws = WordSet(combo, BINARY)
                if _serial_key(ws) != _serial_key(canonical_form(ws)):
                    continue
            parts.append(combo)
    return sig4, parts


def _search_layer4(min_counts, workers, symmetry_reduction, time_limit):
    t0 = time.perf_counter()
    min4 = min_counts.get(4, 0)
    sig4, parts = _layer4_parts(min4, symmetry_reduction)
    small = universe_words(3)
    examined = 0
    found = []
    jobs = [(part, small, sig4, min_counts) for part in parts]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = pool.map(_explore_layer4_part, jobs, chunksize=16)
            for results, part_examined in outcomes:
                found.extend(results)
                examined += part_examined
    else:
        for job in jobs:
            if time_limit is not None and time.perf_counter() - t0 > time_limit:
                raise LimitExceeded("search time limit exceeded")
            results, part_examined = _explore_layer4_part(job)
            found.extend(results)
            examined += part_examined

    classes = _group_classes(found, symmetry_reduction)
    return SearchReport(
        universe="all words of length <= 4",
        filters=_render_filters(min_counts),
        classes=classes,
        sets_examined=examined,
        elapsed=time.perf_counter() - t0,
    )


def exhaustive_search(max_len, min_counts=None, workers=1,
                      symmetry_reduction=True, time_limit=None):
    """Search the subsets of the length-bounded universe for maximal
    non-complete sets, ranked by uwl.

    max_len up to 3 sweeps every subset; max_len 4 requires a minimum
    count of at least {floor} length-4 words (the paper-sized experiment
    uses 11).  Larger universes are out of scope.
    """.format(floor=MIN_LAYER4_COUNT)
    min_counts = dict(min_counts or {})
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    if max_len > 4:
        raise ValueError("universes beyond length 4 are out of scope")
    if max_len == 4:
        if min_counts.get(4, 0) < MIN_LAYER4_COUNT:
            raise ValueError(
                "the length-4 universe needs a minimum-count filter on the "
                f"length-4 layer of at least {MIN_LAYER4_COUNT}, "
                "e.g. min_counts={4: 11}"
            )
        return _search_layer4(min_counts, workers, symmetry_reduction, time_limit)
    return _full_sweep(max_len, min_counts, workers, symmetry_reduction, time_limit)
