"""Trie acceptor for the prefixes of S* with determinized subset stepping.

The acceptor is the prefix trie of S in which every node holding a full
word of S may restart at the root, so a run spells a prefix of some
concatenation of S-words.  Subsets of trie nodes are bit-vectors (Python
ints, node id = bit position); stepping a subset tracks every surviving
run at once, and a word is a factor of some concatenation exactly when a
run starting somewhere survives it, i.e. when stepping the all-nodes
subset never empties.

Node ids follow the shortlex order of the node path words (equivalently
breadth-first insertion), so dumps and bit layouts are reproducible.
"""

from .words import shortlex_key


class PrefixAutomaton:
    """Prefix trie of a word set with restart-at-root subset semantics."""

    def __init__(self, word_set):
        if word_set.m == 0:
            raise ValueError("empty set")
        self.source_set = word_set
        self.alphabet = word_set.alphabet
        paths = {""}
        for w in word_set:
            for i in range(1, len(w) + 1):
                paths.add(w[:i])
        order = sorted(paths, key=lambda p: shortlex_key(p, self.alphabet))
        index = {p: i for i, p in enumerate(order)}
        n = len(order)
        self.node_count = n
        self.path_words = order
        self.universal = (1 << n) - 1
        acc = 0
        for w in word_set:
            acc |= 1 << index[w]
        self.accepting_mask = acc
        self.child_id = {}
        self.child_mask = {}
        for c in self.alphabet:
            ids = [None] * n
            masks = [0] * n
            for p, i in index.items():
                j = index.get(p + c)
                if j is not None:
                    ids[i] = j
                    masks[i] = 1 << j
            self.child_id[c] = ids
            self.child_mask[c] = masks
        self._node_images = None

    def is_accepting(self, node):
        return self.accepting_mask >> node & 1 == 1

    def initial_universal(self):
        """All nodes: every node is reached by its own path word."""
        return self.universal

    def initial_root(self):
        # closure({root}); the root never accepts since the empty word
        # is excluded from word sets
        return 1

    def step(self, bits, letter):
        """One determinized step with restart closure on both sides."""
        if bits & self.accepting_mask:
            bits |= 1
        masks = self.child_mask[letter]
        out = 0
        while bits:
            low = bits & -bits
            out |= masks[low.bit_length() - 1]
            bits ^= low
        if out & self.accepting_mask:
            out |= 1
        return out

    def run(self, bits, word):
        for c in word:
            bits = self.step(bits, c)
            if not bits:
                return 0
        return bits

    def member_pref_star(self, word):
        """Is word a prefix of some concatenation of S-words?"""
        return self.run(self.initial_root(), word) != 0

    def member_fact_star(self, word):
        """Is word a factor of some concatenation of S-words?"""
        return self.run(self.universal, word) != 0

    def is_uncompletable(self, word):
        return not self.member_fact_star(word)

    def node_step_images(self):
        """step({q}, c) for every node q and letter c, cached."""
        if self._node_images is None:
            self._node_images = {
                c: [self.step(1 << q, c) for q in range(self.node_count)]
                for c in self.alphabet
            }
        return self._node_images

    def dump(self):
        """Stable textual listing of nodes and edges, sorted by id then letter."""
        lines = []
        for i, p in enumerate(self.path_words):
            acc = "true" if self.is_accepting(i) else "false"
            lines.append(f"node {i} path={p or 'ε'} accepting={acc}")
        for i in range(self.node_count):
            for c in self.alphabet:
                j = self.child_id[c][i]
                if j is not None:
                    lines.append(f"edge {i} {c} {j}")
        return "\n".join(lines)


def build(word_set):
    """Build the trie acceptor for the given word set."""
    return PrefixAutomaton(word_set)
