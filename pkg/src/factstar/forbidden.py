"""Forbidden-position calculus and structural validators.

A 0-based boundary position j of a word w (0 <= j <= |w|-1) is forbidden
when the suffix w[j:] is not a prefix of any concatenation of S-words.
For the k-family that excludes exactly u = b a^(k-1) and v = b^(k-1) a
from the length-k layer, forbidden positions inside occurrences of u and v
obey tight transfer laws; this module computes the positions, their block
form, the occurrence table, and checkers for each law.  The checkers test
the stated closed forms on concrete words, they do not re-derive them.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class FamilyContext:
    """The two excluded length-k words and their two-letter overlap."""

    k: int
    u: str
    v: str
    r: str

    @classmethod
    def for_k(cls, k):
        if k < 3:
            raise ValueError("family context needs k >= 3")
        return cls(
            k=k,
            u="b" + "a" * (k - 1),
            v="b" * (k - 1) + "a",
            r="b" * (k - 1) + "a" * (k - 1),
        )


def forbidden_positions(auto, word):
    """All 0-based positions j such that word[j:] extends no run.

    Computed by a right-to-left sweep of the node set that still survives
    the remaining letters: a node q survives position j when its one-step
    image under word[j] meets the survivors of position j+1, and j is
    forbidden exactly when the root does not survive.  Equivalent to (and
    tested against) running member_pref_star on every suffix, but shares
    only the step tables with it.
    """
    images = auto.node_step_images()
    n = auto.node_count
    alive = (1 << n) - 1  # every node survives the empty suffix
    out = []
    for j in range(len(word) - 1, -1, -1):
        table = images[word[j]]
        nxt = 0
        bit = 1
        for q in range(n):
            if table[q] & alive:
                nxt |= bit
            bit <<= 1
        alive = nxt
        if not alive & 1:
            out.append(j)
    return frozenset(out)


def blocks(residues, k):
    """Partition residues mod k into maximal cyclically-consecutive runs.

    Runs are listed by increasing head; a run wrapping past k-1 is merged
    into a single block and lands last.  The full residue set is a single
    block starting at 0.
    """
    if not residues:
        return []
    res = sorted(set(residues))
    if res[0] < 0 or res[-1] >= k:
        raise ValueError("residues must lie in [0, k-1]")
    runs = [[res[0]]]
    for x in res[1:]:
        if x == runs[-1][-1] + 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == k - 1:
        wrap = runs.pop()
        wrap.extend(runs.pop(0))
        runs.append(wrap)
    return runs


def render_blocks(block_form):
    """Render a block form like [5,6; 8; 10,0,1,2]."""
    return "[" + "; ".join(",".join(map(str, b)) for b in block_form) + "]"


@dataclass(frozen=True)
class Occurrence:
    """An occurrence of u or v with its locally renumbered forbidden set."""

    which: str
    start: int
    local_forbidden: frozenset


def occurrences(ctx, word, forbidden):
    """All occurrences of u and v in start order, with local sets 0..k-1."""
    occs = []
    for which, pattern in (("u", ctx.u), ("v", ctx.v)):
        start = word.find(pattern)
        while start != -1:
            local = frozenset(
                j - start for j in forbidden if start <= j < start + ctx.k
            )
            occs.append(Occurrence(which, start, local))
            start = word.find(pattern, start + 1)
    occs.sort(key=lambda o: o.start)
    return occs


def gap_between(ctx, p, q):
    """Length of x in the factor pxq; -2 exactly for the one possible
    overlap (a v occurrence whose last two letters start a u)."""
    return q.start - p.start - ctx.k


def consecutive_pairs(ctx, occs):
    """Adjacent occurrence pairs (p left, q right) with their gaps."""
    return [(p, q, gap_between(ctx, p, q)) for p, q in zip(occs, occs[1:])]


def check_lemma1(ctx, word, forbidden):
    """Step-k inheritance: for forbidden j >= k, position j-k is forbidden
    iff j-1 is forbidden or the k-1 letters strictly between are uniform.

    Returns the violating positions j (expected empty).
    """
    k = ctx.k
    uniform = ("a" * (k - 1), "b" * (k - 1))
    bad = []
    for j in sorted(forbidden):
        if j < k:
            continue
        lhs = (j - k) in forbidden
        rhs = (j - 1) in forbidden or word[j - k : j - 1] in uniform
        if lhs != rhs:
            bad.append(j)
    return bad


def check_lemma2_zero(ctx, occ):
    """Zero-position law: 0 is always forbidden in a v occurrence; in a u
    occurrence 0 is forbidden exactly when k-1 is."""
    if occ.which == "v":
        return 0 in occ.local_forbidden
    return (0 in occ.local_forbidden) == (ctx.k - 1 in occ.local_forbidden)


def check_shift_inclusion(ctx, p, q, gap=None, occs=None):
    """Transfer law for a consecutive pair: the left local set embeds into
    the right one shifted by the gap (mod k), plus position 0.  The
    overlapping v-u pair shifts by -2 instead.

    With occs given, raises on a non-consecutive pair.
    """
    if occs is not None and any(p.start < o.start < q.start for o in occs):
        raise ValueError("not consecutive")
    if gap is None:
        gap = gap_between(ctx, p, q)
    if gap == -2:
        if not (p.which == "v" and q.which == "u"):
            raise ValueError("only a v occurrence may overlap a following u")
        shift = -2
    elif gap >= 0:
        shift = gap
    else:
        raise ValueError(f"impossible occurrence gap {gap}")
    k = ctx.k
    allowed = {(j + shift) % k for j in q.local_forbidden} | {0}
    return set(p.local_forbidden) <= allowed


@dataclass(frozen=True)
class PairClass:
    """Closed-form classification of an increasing pair; gap_residue is
    the gap mod k where the form constrains it."""

    case: str
    gap_residue: int | None = None


def _zero_tail_shape(local, k):
    """i such that local == {0} | {i..k-1}, else None."""
    if 0 not in local or len(local) < 2:
        return None
    rest = set(local) - {0}
    i = min(rest)
    return i if rest == set(range(i, k)) else None


def _zero_midtail_shape(local, k):
    """i such that local == {0} | {i..k-2}, else None."""
    if 0 not in local or (k - 1) in local or len(local) < 2:
        return None
    rest = set(local) - {0}
    i = min(rest)
    return i if rest == set(range(i, k - 1)) else None


def _head_tail_split(local, k):
    """(i, j) with local == {0..i} | {j..k-1} and i+1 < j, else None."""
    if 0 not in local or (k - 1) not in local:
        return None
    i = 0
    while i + 1 in local and i + 1 < k:
        i += 1
    j = k - 1
    while j - 1 in local and j - 1 > 0:
        j -= 1
    if i + 1 >= j:
        return None
    if set(local) != set(range(i + 1)) | set(range(j, k)):
        return None
    return i, j


def classify_pair(ctx, p, q, gap=None):
    """Match an increasing consecutive pair against its three possible
    closed forms; returns case "none" when the pair is not increasing or
    fits no form."""
    if gap is None:
        gap = gap_between(ctx, p, q)
    k = ctx.k
    fp = set(p.local_forbidden)
    fq = set(q.local_forbidden)
    if len(fp) <= len(fq):
        return PairClass("none")
    if p.which == "u" and q.which == "u":
        for j in range(1, k - 1):
            if fq == set(range(1, j + 1)) and fp == {0} | set(range(k - j, k)):
                return PairClass("i", gap % k)
    if p.which == "v" and q.which == "u" and gap == -2:
        if fp == {0, k - 1} and fq == {1}:
            return PairClass("ii")
    if p.which == "u" and q.which == "v" and gap >= 0:
        split = _head_tail_split(fq, k)
        if split is not None:
            i, j = split
            if fp == {0} | set(range(j - i - 1, k)) and gap % k == (k - 1 - i) % k:
                return PairClass("iii", gap % k)
    return PairClass("none")


@dataclass
class PairReport:
    p: Occurrence
    q: Occurrence
    gap: int
    relation: str  # "increasing" | "equal" | "decreasing"
    shift_ok: bool
    classification: PairClass | None
    tags: list = field(default_factory=list)
    notes: list = field(default_factory=list)


@dataclass
class StructureReport:
    word: str
    k: int
    u_prefix_ok: bool
    v_suffix_ok: bool
    lemma1_violations: list
    zero_law_ok: bool
    occurrences: list
    pairs: list
    increasing_count: int
    inconsistencies: list


def validate_minimal_structure(ctx, word, auto):
    """Check a minimal uncompletable word against every structural law.

    The word must be uncompletable (error otherwise); minimality is the
    caller's claim and only its consequences are tested.  Pairs matching
    no law hypothesis are tagged "unconstrained", not failed.  On a
    non-minimal uncompletable word failed checks are reported, not raised.
    """
    if not auto.is_uncompletable(word):
        raise ValueError("word is a factor of the concatenations; nothing to validate")
    k = ctx.k
    forb = forbidden_positions(auto, word)
    occs = occurrences(ctx, word, forb)
    problems = []

    u_prefix_ok = word.startswith(ctx.u)
    v_suffix_ok = word.endswith(ctx.v)
    if not u_prefix_ok:
        problems.append("u is not a prefix")
    if not v_suffix_ok:
        problems.append("v is not a suffix")

    lemma1_violations = check_lemma1(ctx, word, forb)
    if lemma1_violations:
        problems.append(f"step-k inheritance fails at {lemma1_violations}")
    zero_law_ok = all(check_lemma2_zero(ctx, o) for o in occs)
    if not zero_law_ok:
        problems.append("zero-position law fails in some occurrence")

    pair_reports = []
    increasing = 0
    for p, q, gap in consecutive_pairs(ctx, occs):
        notes = []
        tags = []
        classification = None
        shift_ok = check_shift_inclusion(ctx, p, q, gap)
        if not shift_ok:
            notes.append("shift inclusion fails")
        fp = p.local_forbidden
        fq = q.local_forbidden
        if p.which == "v" and q.which == "v":
            im = _zero_midtail_shape(fq, k)
            if im is not None:
                tags.append("vv-decreasing")
                if len(fp) >= len(fq):
                    notes.append("v-v pair with mid-tail shape fails to decrease")
        if len(fp) > len(fq):
            relation = "increasing"
            increasing += 1
            if len(fp) != len(fq) + 1:
                notes.append("forbidden count increases by more than 1")
            classification = classify_pair(ctx, p, q, gap)
            if classification.case == "none":
                notes.append("increasing pair matches no closed form")
        elif len(fp) == len(fq):
            relation = "equal"
            i = _zero_tail_shape(fq, k)
            if p.which == "u" and q.which == "u" and i is not None:
                tags.append("uu-equal")
                if set(fp) != set(fq):
                    notes.append("equal-size u-u pair must carry identical sets")
            elif p.which == "v" and q.which == "u" and i is not None and i > 1:
                tags.append("vu-equal")
                expected = {0} | set(range(i - 1, k - 1))
                if gap != -2 or set(fp) != expected:
                    notes.append("equal-size v-u pair must overlap with shifted run")
            elif p.which == "u" and q.which == "v":
                im = _zero_midtail_shape(fq, k)
                if im is not None and im > 1 and len(blocks(fp, k)) == 1:
                    tags.append("uv-equal")
                    option_a = {0, 1} | set(range(im + 2, k))
                    option_b = {0} | set(range(im + 1, k))
                    if set(fp) not in (option_a, option_b):
                        notes.append("single-block u-v pair has the wrong shape")
            if not tags:
                tags.append("unconstrained")
        else:
            relation = "decreasing"
        pair_reports.append(
            PairReport(p, q, gap, relation, shift_ok, classification, tags, notes)
        )
        problems.extend(f"pair @({p.start},{q.start}): {n}" for n in notes)

    return StructureReport(
        word=word,
        k=k,
        u_prefix_ok=u_prefix_ok,
        v_suffix_ok=v_suffix_ok,
        lemma1_violations=lemma1_violations,
        zero_law_ok=zero_law_ok,
        occurrences=occs,
        pairs=pair_reports,
        increasing_count=increasing,
        inconsistencies=problems,
    )
