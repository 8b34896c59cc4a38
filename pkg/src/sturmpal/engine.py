"""Maximal palindromes of a leveled Sturmian word by tracing centers.

Each center (a letter, or an ``aa`` pair) of a level word is either
*original* at that level or the image of exactly one center of the level
below.  Originals have one of the fixed shapes ``a^i`` (``i <= p_min``) or
``a^p_min b a^p_min``; an image's maximal palindrome is the reflection
``a^p_min b alpha(P) a^p_min`` of the palindrome ``P`` below.  Lengths
therefore propagate by integer arithmetic, one pass per level.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _backend
from .errors import InsufficientContext, NotAPalindrome, OutOfRange, SizeLimitExceeded
from .words import (
    DEFAULT_CAP,
    BinaryWord,
    DefiningSequence,
    LeveledWord,
    ParameterPair,
    apply_morphism,
    as_sequence,
    as_word,
)


class CenterKind(str, enum.Enum):
    A = "a"
    B = "b"
    AA = "aa"

    @property
    def width(self) -> int:
        return 2 if self is CenterKind.AA else 1


_KIND_CODES = (CenterKind.A, CenterKind.B, CenterKind.AA)


class Classification(enum.Enum):
    ORIGINAL = "original"
    REFLECTION = "reflection"


@dataclass(frozen=True, order=True)
class Center:
    kind: CenterKind
    position: int

    def __post_init__(self):
        object.__setattr__(self, "kind", CenterKind(self.kind))

    @property
    def midpoint(self) -> float:
        return self.position + (0.5 if self.kind is CenterKind.AA else 0.0)

    def __str__(self):
        return f"{self.kind.name}@{self.position}"


def enumerate_centers(word) -> list[Center]:
    """Every letter and every ``aa`` pair of ``word``, ordered by midpoint."""
    s = str(as_word(word))
    out = []
    for i, c in enumerate(s, 1):
        out.append(Center(CenterKind.A if c == "a" else CenterKind.B, i))
        if c == "a" and i < len(s) and s[i] == "a":
            out.append(Center(CenterKind.AA, i))
    return out


def _check_center(word: BinaryWord, center: Center):
    w = word.letters
    i = center.position
    ok = 1 <= i <= len(w)
    if ok and center.kind is CenterKind.AA:
        ok = i < len(w) and w[i - 1] == 0 and w[i] == 0
    elif ok:
        ok = w[i - 1] == (center.kind is CenterKind.B)
    if not ok:
        raise ValueError(f"{center} is not a center of this word")


def trace_position(lw: LeveledWord, level: int, pos: int) -> int:
    """Start, in ``levels[level + 1]``, of the block image of ``levels[level][pos]``."""
    if not 0 <= level < lw.n:
        raise OutOfRange(f"level {level} has no successor (levels 0..{lw.n})")
    if not 1 <= pos <= len(lw.levels[level]):
        raise OutOfRange(f"position {pos} outside 1..{len(lw.levels[level])}")
    na, nb = lw.prefix_counts(level, pos - 1)
    pair = lw.pi[level]
    return (pair.p + 1) * na + (pair.p_prime + 1) * nb + 1


def classify_center(lw: LeveledWord, level: int, center: Center) -> Classification:
    if not 1 <= level <= lw.n:
        raise ValueError(f"level must be in 1..{lw.n}")
    word = lw.levels[level]
    prev = lw.levels[level - 1].letters
    center = Center(center.kind, center.position)
    _check_center(word, center)
    pair = lw.pair_into(level)
    _, cb = lw.prefix_index(level)
    t = int(cb[center.position - 1])  # 0-based block index
    if center.kind is CenterKind.B:
        if t + 1 >= len(prev):
            raise InsufficientContext(f"{center}: successor block lies beyond level {level}")
        same = prev[t] == prev[t + 1]
        return Classification.REFLECTION if same else Classification.ORIGINAL
    r = pair.p_prime if prev[t] else pair.p
    j = center.position - trace_position(lw, level - 1, t + 1)
    if center.kind is CenterKind.A:
        middle = r % 2 == 1 and j == (r - 1) // 2
    else:
        middle = r % 2 == 0 and j == r // 2 - 1
    return Classification.REFLECTION if middle else Classification.ORIGINAL


def wp_reflect(pair: ParameterPair, palindrome) -> BinaryWord:
    """a^p_min b alpha(X) a^p_min for a palindrome X."""
    x = as_word(palindrome)
    if not x.is_palindrome():
        raise NotAPalindrome(f"{x!r} is not a palindrome")
    pad = np.zeros(pair.p_min, dtype=np.uint8)
    body = apply_morphism(pair, x).letters
    return BinaryWord(np.concatenate([pad, [1], body, pad]).astype(np.uint8))


def _reflect_arith(pair: ParameterPair, length: int, weight: int) -> tuple[int, int]:
    m = pair.p_min
    return 2 * m + 1 + (pair.p + 1) * (length - weight) + (pair.p_prime + 1) * weight, length + 1


def _reflect_kind(pair: ParameterPair, kind: CenterKind) -> CenterKind:
    if kind is CenterKind.AA:
        return CenterKind.B
    r = pair.p if kind is CenterKind.A else pair.p_prime
    return CenterKind.A if r % 2 else CenterKind.AA


def _original_word(pair: ParameterPair, form: int) -> BinaryWord:
    if form == 0:
        m = pair.p_min
        return BinaryWord("a" * m + "b" + "a" * m)
    return BinaryWord("a" * form)


@dataclass(frozen=True)
class Member:
    """A distinct maximal palindrome, identified by (origin level, form).

    ``form`` 0 is ``a^p_min b a^p_min`` at the origin level, ``form`` i >= 1
    is ``a^i``.
    """

    origin_level: int
    form: int
    length: int
    weight: int
    kind: CenterKind

    @property
    def key(self) -> tuple[int, int]:
        return self.origin_level, self.form


@dataclass(frozen=True)
class MaximalPalindromeSet:
    pi: DefiningSequence
    members: tuple[Member, ...]

    @property
    def level(self) -> int:
        return len(self.pi)

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[Member]:
        return iter(self.members)

    def keys(self) -> list[tuple[int, int]]:
        return [m.key for m in self.members]

    def member(self, key) -> Member:
        for m in self.members:
            if m.key == tuple(key):
                return m
        raise KeyError(key)

    def word(self, key, cap: int = DEFAULT_CAP) -> BinaryWord:
        m = key if isinstance(key, Member) else self.member(key)
        if m.length > cap:
            raise SizeLimitExceeded(m.length, cap)
        w = _original_word(self.pi[m.origin_level - 1], m.form)
        for pair in self.pi.pairs[m.origin_level :]:
            w = wp_reflect(pair, w)
        return w

    def words(self, cap: int = DEFAULT_CAP) -> frozenset[str]:
        return frozenset(str(self.word(m, cap)) for m in self.members)

    def originals(self) -> list[Member]:
        """Members original at the top level (the O_X part)."""
        return [m for m in self.members if m.origin_level == self.level]

    def kind_counts(self, members=None) -> dict[CenterKind, int]:
        counts = {k: 0 for k in CenterKind}
        for m in self.members if members is None else members:
            counts[m.kind] += 1
        return counts

    def __contains__(self, item):
        if isinstance(item, tuple):
            return any(m.key == item for m in self.members)
        w = as_word(item)
        length, weight = len(w), w.count_b
        return any(
            m.length == length and m.weight == weight and self.word(m) == w for m in self.members
        )


def _level_originals(pair: ParameterPair, level: int) -> list[Member]:
    m = pair.p_min
    out = [Member(level, 0, 2 * m + 1, 1, CenterKind.B)]
    for i in range(1, m + 1):
        out.append(Member(level, i, i, 0, CenterKind.A if i % 2 else CenterKind.AA))
    return out


def original_set(pair: ParameterPair) -> MaximalPalindromeSet:
    """The maximal palindromes original in a level built with ``pair``."""
    return MaximalPalindromeSet(DefiningSequence((pair,)), tuple(_level_originals(pair, 1)))


def distinct_maximal_set(pi, cap: int = DEFAULT_CAP) -> MaximalPalindromeSet:
    pi = as_sequence(pi)
    members = []
    for level, pair in enumerate(pi, 1):
        for mem in _level_originals(pair, level):
            length, weight, kind = mem.length, mem.weight, mem.kind
            for up in pi.pairs[level:]:
                length, weight = _reflect_arith(up, length, weight)
                kind = _reflect_kind(up, kind)
            if length > cap:
                raise SizeLimitExceeded(length, cap)
            members.append(Member(level, mem.form, length, weight, kind))
    return MaximalPalindromeSet(pi, tuple(members))


@dataclass(frozen=True)
class PalindromeOccurrence:
    center: Center
    length: int
    origin_level: int | None = None
    sequence_id: tuple[int, int] | None = None
    flagged: bool = False

    @property
    def start(self) -> int:
        return self.center.position - (self.length - self.center.kind.width) // 2

    @property
    def end(self) -> int:
        return self.start + self.length - 1

    def to_record(self) -> dict:
        sid = self.sequence_id
        return {
            "position": self.center.position,
            "center_kind": self.center.kind.value,
            "length": self.length,
            "origin_level": self.origin_level,
            "sequence_id": None if sid is None else f"{sid[0]}:{sid[1]}",
            "flagged": self.flagged,
        }


RECORD_FIELDS = ("position", "center_kind", "length", "origin_level", "sequence_id", "flagged")


_MODS = (2_147_483_629, 2_147_483_587)
_BASE = 131


def _powers(n: int, mod: int) -> np.ndarray:
    out = np.ones(n + 1, dtype=np.int64)
    out[1:2] = _BASE
    k = 2
    while k <= n:
        step = min(k, n + 1 - k)
        out[k : k + step] = out[:step] * (out[k - 1] * _BASE % mod) % mod
        k += step
    return out


def _factor_keys(x: np.ndarray, starts: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    """Shift-normalised double polynomial hashes of the factors x[s:s+len]."""
    n = len(x)
    keys = [lengths]
    for mod in _MODS:
        pw = _powers(n, mod)
        g = np.zeros(n + 1, dtype=np.int64)
        np.cumsum((x.astype(np.int64) + 1) * pw[:n] % mod, out=g[1:])
        g %= mod
        h = (g[starts + lengths] - g[starts]) % mod
        keys.append(h * pw[n - starts] % mod)
    return np.stack(keys, axis=1)


def _seed_state(seed: BinaryWord, kernels):
    """Level-0 state: palindromes resolved inside the seed itself.

    Returns the state tuple and, per seed form id, the (start, length) of a
    representative occurrence.
    """
    x = np.ascontiguousarray(seed.letters)
    n = len(x)
    llen, plen = kernels.seed_radii(x)
    idx = np.arange(n, dtype=np.int64)
    cb = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(x, out=cb[1:])

    lstart = idx - (llen - 1) // 2
    lok = (lstart > 0) & (lstart + llen < n)
    has_pair = plen > 0
    pstart = idx + 1 - plen // 2
    pok = has_pair & (pstart > 0) & (pstart + plen < n)

    # forms: one id per distinct complete palindrome, numbered by first occurrence
    starts = np.concatenate([lstart[lok], pstart[pok]])
    lengths = np.concatenate([llen[lok], plen[pok]])
    order = np.concatenate([2 * idx[lok], 2 * idx[pok] + 1])
    forms = np.full(len(starts), -1, dtype=np.int32)
    reps = np.zeros((0, 2), dtype=np.int64)
    if len(starts):
        srt = np.argsort(order, kind="stable")
        starts, lengths = starts[srt], lengths[srt]
        _, first, inverse = np.unique(
            _factor_keys(x, starts, lengths), axis=0, return_index=True, return_inverse=True
        )
        rank = np.empty(len(first), dtype=np.int32)
        rank[np.argsort(first, kind="stable")] = np.arange(len(first), dtype=np.int32)
        forms = rank[inverse.reshape(-1)]
        reps = np.stack([starts[np.sort(first)], lengths[np.sort(first)]], axis=1)
        # undo the midpoint sort so forms line up with lok / pok order
        unsorted = np.empty_like(forms)
        unsorted[srt] = forms
        forms = unsorted
    nl = int(lok.sum())

    state_llen = np.where(lok, llen, 0)
    state_lwt = np.where(lok, cb[np.minimum(lstart + llen, n)] - cb[np.maximum(lstart, 0)], 0)
    lform = np.full(n, -1, dtype=np.int32)
    lform[lok] = forms[:nl]
    state_plen = np.where(pok, plen, 0)
    state_pwt = np.where(pok, cb[np.minimum(pstart + plen, n)] - cb[np.clip(pstart, 0, n)], 0)
    pform = np.full(n, -1, dtype=np.int32)
    pform[pok] = forms[nl:]
    porg = np.where(has_pair, 0, -1).astype(np.int16)
    state = (
        state_llen,
        state_lwt,
        np.zeros(n, dtype=np.int16),
        lform,
        state_plen,
        state_pwt,
        porg,
        pform,
    )
    return state, reps


class OccurrenceTable:
    """Columnar result of :func:`locate_occurrences`, one row per center.

    Rows are ordered by center midpoint.  Iterating yields
    :class:`PalindromeOccurrence` objects; bulk consumers should use the
    numpy columns directly.
    """

    def __init__(self, pi, seed, word_length, columns, seed_forms=None):
        self.pi = pi
        self.word_length = word_length
        (self.positions, self.kinds, self.lengths, self.origin_levels, self.forms, self.flagged) = columns
        self.seed = seed
        self.seed_forms = np.zeros((0, 2), dtype=np.int64) if seed_forms is None else seed_forms

    def seed_palindrome(self, form: int) -> BinaryWord:
        """Complete seed palindrome with the given form id."""
        start, length = (int(v) for v in self.seed_forms[form])
        return self.seed.factor(start + 1, start + length)

    def __len__(self):
        return len(self.positions)

    def row(self, k: int) -> PalindromeOccurrence:
        form = int(self.forms[k])
        origin = int(self.origin_levels[k])
        return PalindromeOccurrence(
            Center(_KIND_CODES[self.kinds[k]], int(self.positions[k])),
            int(self.lengths[k]),
            origin,
            None if form < 0 else (origin, form),
            bool(self.flagged[k]),
        )

    def __iter__(self) -> Iterator[PalindromeOccurrence]:
        for k in range(len(self)):
            yield self.row(k)

    def find(self, kind, position) -> PalindromeOccurrence:
        kind = CenterKind(kind)
        code = _KIND_CODES.index(kind)
        hit = np.flatnonzero((self.positions == position) & (self.kinds == code))
        if not len(hit):
            raise KeyError(f"no center {kind.name}@{position}")
        return self.row(int(hit[0]))

    def window(self, start: int, end: int) -> "OccurrenceTable":
        """Rows whose center lies entirely inside positions start..end."""
        width = np.where(self.kinds == 2, 1, 0)
        keep = (self.positions >= start) & (self.positions + width <= end)
        cols = tuple(c[keep] for c in self._columns())
        return OccurrenceTable(self.pi, self.seed, self.word_length, cols, self.seed_forms)

    def _columns(self):
        return (self.positions, self.kinds, self.lengths, self.origin_levels, self.forms, self.flagged)

    def kind_counts(self) -> dict[CenterKind, int]:
        counts = np.bincount(self.kinds, minlength=3)
        return {k: int(counts[i]) for i, k in enumerate(_KIND_CODES)}

    def count_original(self, level: int | None = None) -> int:
        level = len(self.pi) if level is None else level
        return int(np.count_nonzero(self.origin_levels == level))

    def distinct_ids(self) -> set[tuple[int, int]]:
        """Sequence ids of all unflagged rows."""
        ok = ~self.flagged
        pairs = np.unique(np.stack([self.origin_levels[ok].astype(np.int64), self.forms[ok]], axis=1), axis=0)
        return {(int(a), int(b)) for a, b in pairs}

    def materialize(self, sequence_id, cap: int = DEFAULT_CAP) -> BinaryWord:
        origin, form = sequence_id
        if origin == 0:
            w = self.seed_palindrome(form)
            rest = self.pi.pairs
        else:
            w = _original_word(self.pi[origin - 1], form)
            rest = self.pi.pairs[origin:]
        length, weight = len(w), w.count_b
        for pair in rest:
            length, weight = _reflect_arith(pair, length, weight)
        if length > cap:
            raise SizeLimitExceeded(length, cap)
        for pair in rest:
            w = wp_reflect(pair, w)
        return w

    def distinct_words(self, cap: int = DEFAULT_CAP) -> set[str]:
        return {str(self.materialize(sid, cap)) for sid in self.distinct_ids()}

    def to_records(self) -> list[dict]:
        return [occ.to_record() for occ in self]

    def write_tsv(self, fp):
        fp.write("\t".join(RECORD_FIELDS) + "\n")
        for rec in self.to_records():
            fp.write("\t".join("" if rec[f] is None else str(rec[f]).lower() if isinstance(rec[f], bool) else str(rec[f]) for f in RECORD_FIELDS) + "\n")

    def to_json(self) -> str:
        return json.dumps(self.to_records())


def locate_occurrences(lw: LeveledWord, backend: str | None = None) -> OccurrenceTable:
    """One row per center of the ultimate word, with origin level and length.

    Lengths are exact whenever the palindrome and both letters bounding it
    fit inside the word; otherwise the row is flagged and carries the
    palindrome clipped at the word edge.
    """
    if lw.n < 1:
        raise ValueError("need a defining sequence with at least one pair")
    k = _backend.get(backend)
    state, seed_forms = _seed_state(lw.seed, k)
    for level in range(1, lw.n + 1):
        pair = lw.pair_into(level)
        prev = np.ascontiguousarray(lw.levels[level - 1].letters)
        state = k.propagate(prev, pair.p, pair.p_prime, level, state)
    cols = k.finalize(np.ascontiguousarray(lw.ultimate.letters), state)
    return OccurrenceTable(lw.pi, lw.seed, len(lw.ultimate), cols, seed_forms)


def bistandard_prefix(pi, iterations: int, cap: int = DEFAULT_CAP) -> list[BinaryWord]:
    """Nested palindromes W_0 = a, W_k = wp_q1(wp_q2(... wp_qk(a))).

    ``q`` is ``pi`` cycled.  Each new pair is applied innermost, which keeps
    every W_k a factor of W_{k+1}.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    seq = as_sequence(pi).cycled(iterations)
    chain = [BinaryWord("a")]
    for k in range(1, iterations + 1):
        length, weight = 1, 0
        for pair in reversed(seq.pairs[:k]):
            length, weight = _reflect_arith(pair, length, weight)
        if length > cap:
            raise SizeLimitExceeded(length, cap)
        w = BinaryWord("a")
        for pair in reversed(seq.pairs[:k]):
            w = wp_reflect(pair, w)
        chain.append(w)
    return chain
