"""Alphabets, words, finite word sets, and the two set symmetries.

Words are plain strings over a small ordered alphabet; the alphabet order
fixes the shortlex order used everywhere a canonical word or set has to be
picked.  Word sets are immutable and carry their size statistics.
"""

from enum import Enum


class Alphabet:
    """Ordered alphabet of distinct single-character letters."""

    def __init__(self, letters="ab"):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet letters must be distinct")
        for c in letters:
            if not isinstance(c, str) or len(c) != 1:
                raise ValueError(f"bad alphabet letter: {c!r}")
        self.letters = letters
        self._index = {c: i for i, c in enumerate(letters)}

    def index(self, letter):
        return self._index[letter]

    def check_word(self, word):
        for c in word:
            if c not in self._index:
                raise ValueError(
                    f"letter {c!r} not in alphabet {''.join(self.letters)!r}"
                )
        return word

    def __contains__(self, letter):
        return letter in self._index

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Alphabet({''.join(self.letters)!r})"


BINARY = Alphabet("ab")


def shortlex_key(word, alphabet=BINARY):
    """Sort key for shortlex order: shorter first, then letterwise."""
    return (len(word), tuple(alphabet.index(c) for c in word))


def lex_compare(w1, w2, alphabet=BINARY):
    """Shortlex comparison; returns -1, 0 or 1."""
    k1 = shortlex_key(w1, alphabet)
    k2 = shortlex_key(w2, alphabet)
    return (k1 > k2) - (k1 < k2)


class Symmetry(Enum):
    IDENTITY = "identity"
    MIRROR = "mirror"
    RENAME = "rename"
    MIRROR_RENAME = "mirror_rename"


def _rename_table(alphabet, permutation=None):
    # default permutation reverses the alphabet order; on {a, b} this is
    # the letter swap, and it is an involution for any alphabet size
    if permutation is None:
        permutation = dict(zip(alphabet.letters, reversed(alphabet.letters)))
    return str.maketrans(permutation)


def apply_symmetry(word, sym, alphabet=BINARY, permutation=None):
    """Mirror reverses the word, rename maps letters through the permutation
    (default: reversed alphabet order), mirror_rename composes both."""
    alphabet.check_word(word)
    if sym is Symmetry.IDENTITY:
        return word
    out = word[::-1] if sym in (Symmetry.MIRROR, Symmetry.MIRROR_RENAME) else word
    if sym in (Symmetry.RENAME, Symmetry.MIRROR_RENAME):
        out = out.translate(_rename_table(alphabet, permutation))
    return out


class WordSet:
    """Immutable finite set of non-empty words with its statistics:
    m (element count), total_length (sum of lengths), k (maximal length)."""

    def __init__(self, words, alphabet=BINARY):
        ws = frozenset(words)
        if "" in ws:
            raise ValueError("the empty word is not allowed in a word set")
        for w in ws:
            alphabet.check_word(w)
        self.alphabet = alphabet
        self.words = ws
        self.m = len(ws)
        self.total_length = sum(map(len, ws))
        self.k = max(map(len, ws), default=0)

    def sorted_words(self):
        return sorted(self.words, key=lambda w: shortlex_key(w, self.alphabet))

    def with_word(self, word):
        return WordSet(self.words | {word}, self.alphabet)

    def __contains__(self, word):
        return word in self.words

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return self.m

    def __eq__(self, other):
        return (
            isinstance(other, WordSet)
            and self.alphabet == other.alphabet
            and self.words == other.words
        )

    def __hash__(self):
        return hash((self.alphabet, self.words))

    def __repr__(self):
        return f"WordSet({{{', '.join(self.sorted_words())}}})"


def apply_symmetry_set(word_set, sym, permutation=None):
    """Elementwise symmetry; m, total_length and k are preserved."""
    return WordSet(
        (apply_symmetry(w, sym, word_set.alphabet, permutation) for w in word_set),
        word_set.alphabet,
    )


def mirror_set(word_set):
    return apply_symmetry_set(word_set, Symmetry.MIRROR)


def rename_set(word_set):
    return apply_symmetry_set(word_set, Symmetry.RENAME)
