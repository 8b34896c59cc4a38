"""Binary words, the morphism alpha_(p,p') and level stacks.

Letters are stored as a read-only ``uint8`` array with ``a = 0`` and
``b = 1``.  All positions in the public API are 1-based.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidPair, NotBlockComplete, ParseError, SizeLimitExceeded

DEFAULT_CAP = 10**8

_A, _B = ord("a"), ord("b")


class BinaryWord:
    """Immutable finite word over {a, b}."""

    __slots__ = ("_letters",)

    def __init__(self, letters: "str | BinaryWord | np.ndarray | Iterable[int]" = ""):
        if isinstance(letters, BinaryWord):
            arr = letters._letters
        elif isinstance(letters, str):
            raw = np.frombuffer(letters.encode("ascii"), dtype=np.uint8)
            arr = (raw == _B).astype(np.uint8)
            if np.count_nonzero(arr) + np.count_nonzero(raw == _A) != len(raw):
                raise ValueError(f"word {letters!r} has letters outside {{a, b}}")
        else:
            arr = np.asarray(letters, dtype=np.uint8)
            if arr.ndim != 1 or (arr.size and arr.max() > 1):
                raise ValueError("letter array must be 1-d with values in {0, 1}")
            arr = arr.copy()
        arr.setflags(write=False)
        self._letters = arr

    @property
    def letters(self) -> np.ndarray:
        return self._letters

    def __len__(self):
        return len(self._letters)

    def __str__(self):
        return np.where(self._letters == 1, _B, _A).astype(np.uint8).tobytes().decode("ascii")

    def __repr__(self):
        s = str(self) if len(self) <= 40 else f"{str(self.factor(1, 37))}...({len(self)} letters)"
        return f"BinaryWord({s!r})"

    def __eq__(self, other):
        if isinstance(other, str):
            other = BinaryWord(other)
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return np.array_equal(self._letters, other._letters)

    def __hash__(self):
        return hash(self._letters.tobytes())

    def __add__(self, other):
        return BinaryWord(np.concatenate([self._letters, as_word(other)._letters]))

    @property
    def count_a(self) -> int:
        return len(self) - self.count_b

    @property
    def count_b(self) -> int:
        return int(np.count_nonzero(self._letters))

    weight = count_b

    def at(self, i: int) -> str:
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} outside 1..{len(self)}")
        return "b" if self._letters[i - 1] else "a"

    def factor(self, i: int, j: int) -> "BinaryWord":
        """X[i..j], inclusive and 1-based; empty when j < i."""
        if j < i:
            return BinaryWord("")
        if i < 1 or j > len(self):
            raise IndexError(f"factor [{i}..{j}] outside 1..{len(self)}")
        return BinaryWord(self._letters[i - 1 : j])

    def reverse(self) -> "BinaryWord":
        return BinaryWord(self._letters[::-1])

    def is_palindrome(self) -> bool:
        return bool(np.array_equal(self._letters, self._letters[::-1]))


def as_word(w) -> BinaryWord:
    return w if isinstance(w, BinaryWord) else BinaryWord(w)


@dataclass(frozen=True)
class ParameterPair:
    p: int
    p_prime: int

    def __post_init__(self):
        for v in (self.p, self.p_prime):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise InvalidPair(f"parameters must be integers, got {v!r}")
        if self.p < 1 or self.p_prime < 1:
            raise InvalidPair(f"({self.p},{self.p_prime}): parameters must be >= 1")
        if abs(self.p - self.p_prime) != 1:
            raise InvalidPair(f"({self.p},{self.p_prime}): |p - p'| must be 1")

    @property
    def p_min(self) -> int:
        return min(self.p, self.p_prime)

    @property
    def p_max(self) -> int:
        return self.p_min + 1

    def run(self, letter: str) -> int:
        """Length of the a-run in the image block of ``letter``."""
        return self.p if letter == "a" else self.p_prime

    def __str__(self):
        return f"{self.p},{self.p_prime}"


def validate_pair(p: int, p_prime: int) -> ParameterPair:
    return ParameterPair(p, p_prime)


@dataclass(frozen=True)
class DefiningSequence:
    pairs: tuple[ParameterPair, ...]

    def __post_init__(self):
        converted = []
        for i, pr in enumerate(self.pairs, 1):
            if not isinstance(pr, ParameterPair):
                try:
                    pr = ParameterPair(*pr)
                except InvalidPair as exc:
                    raise InvalidPair(str(exc), index=i) from None
            converted.append(pr)
        object.__setattr__(self, "pairs", tuple(converted))

    @classmethod
    def of(cls, *pairs) -> "DefiningSequence":
        return cls(tuple(pairs))

    @classmethod
    def parse(cls, text: str) -> "DefiningSequence":
        return parse_defining_sequence(text)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return DefiningSequence(self.pairs[i])
        return self.pairs[i]

    def __add__(self, other):
        return DefiningSequence(self.pairs + tuple(as_sequence(other).pairs))

    def __str__(self):
        return ";".join(str(p) for p in self.pairs)

    def cycled(self, count: int) -> "DefiningSequence":
        """The first ``count`` pairs of the infinite repetition of this sequence."""
        if not self.pairs:
            raise ValueError("cannot cycle an empty sequence")
        return DefiningSequence(tuple(self.pairs[i % len(self.pairs)] for i in range(count)))


def as_sequence(pi) -> DefiningSequence:
    if isinstance(pi, DefiningSequence):
        return pi
    if isinstance(pi, str):
        return parse_defining_sequence(pi)
    if isinstance(pi, ParameterPair):
        return DefiningSequence((pi,))
    return DefiningSequence(tuple(pi))


_INT = re.compile(r"^[+-]?\d+$")


def parse_defining_sequence(text: str) -> DefiningSequence:
    """Parse ``"p,p';p,p';..."``; whitespace is ignored."""
    cleaned = re.sub(r"\s+", "", text)
    if not cleaned:
        raise ParseError("empty defining sequence")
    pairs = []
    for i, chunk in enumerate(cleaned.split(";"), 1):
        parts = chunk.split(",")
        if len(parts) != 2 or not all(_INT.match(x) for x in parts):
            raise ParseError(f"expected 'p,p'' but got {chunk!r}", index=i)
        try:
            pairs.append(ParameterPair(int(parts[0]), int(parts[1])))
        except InvalidPair as exc:
            raise InvalidPair(str(exc), index=i) from None
    return DefiningSequence(tuple(pairs))


def predicted_counts(pair: ParameterPair, ya: int, yb: int) -> tuple[int, int, int]:
    """(|X|, |X|_a, |X|_b) for X = alpha(Y) from the letter counts of Y."""
    if ya < 0 or yb < 0:
        raise ValueError("letter counts must be non-negative")
    p, q = pair.p, pair.p_prime
    return (p + 1) * ya + (q + 1) * yb, p * ya + q * yb, ya + yb


def apply_morphism(pair: ParameterPair, word) -> BinaryWord:
    w = as_word(word).letters
    if not len(w):
        return BinaryWord("")
    block = np.where(w == 1, pair.p_prime + 1, pair.p + 1).astype(np.int64)
    ends = np.cumsum(block) - 1
    out = np.zeros(int(ends[-1]) + 1, dtype=np.uint8)
    out[ends] = 1
    return BinaryWord(out)


def _runs(pair: ParameterPair, w: np.ndarray) -> np.ndarray:
    """a-run length of every full block; raises unless ``w`` is block-complete."""
    if not len(w):
        return np.zeros(0, dtype=np.int64)
    if w[-1] != 1:
        raise NotBlockComplete("word does not end with a full block")
    bpos = np.flatnonzero(w)
    runs = np.diff(bpos, prepend=-1) - 1
    bad = (runs != pair.p) & (runs != pair.p_prime)
    if bad.any():
        k = int(np.argmax(bad))
        raise NotBlockComplete(
            f"block {k + 1} has a-run {int(runs[k])}, expected {pair.p} or {pair.p_prime}"
        )
    return runs


def invert_morphism(pair: ParameterPair, word) -> BinaryWord:
    runs = _runs(pair, as_word(word).letters)
    return BinaryWord((runs == pair.p_prime).astype(np.uint8))


class Block(NamedTuple):
    kind: str  # "short" | "long"
    start: int
    end: int
    letter: str  # preimage letter


class ASequence(NamedTuple):
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


class BlockDecomposition(NamedTuple):
    blocks: list[Block]
    a_sequences: list[ASequence]


def block_decompose(pair: ParameterPair, word) -> BlockDecomposition:
    runs = _runs(pair, as_word(word).letters)
    blocks, aseqs = [], []
    pos = 1
    for r in runs.tolist():
        kind = "short" if r == pair.p_min else "long"
        letter = "a" if r == pair.p else "b"
        blocks.append(Block(kind, pos, pos + r, letter))
        if r:
            aseqs.append(ASequence(pos, pos + r - 1))
        pos += r + 1
    return BlockDecomposition(blocks, aseqs)


@dataclass(frozen=True)
class LeveledWord:
    """A seed word and its successive images; ``levels[0]`` is the seed."""

    pi: DefiningSequence
    levels: tuple[BinaryWord, ...]
    _prefix: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.pi)

    @property
    def seed(self) -> BinaryWord:
        return self.levels[0]

    @property
    def ultimate(self) -> BinaryWord:
        return self.levels[-1]

    def pair_into(self, level: int) -> ParameterPair:
        """The pair producing ``levels[level]`` from ``levels[level - 1]``."""
        return self.pi[level - 1]

    def prefix_index(self, level: int) -> tuple[np.ndarray, np.ndarray]:
        """Arrays (#a, #b) over prefixes of length 0..|levels[level]|."""
        if level not in self._prefix:
            w = self.levels[level].letters
            cb = np.zeros(len(w) + 1, dtype=np.int64)
            np.cumsum(w, out=cb[1:])
            ca = np.arange(len(w) + 1, dtype=np.int64) - cb
            self._prefix[level] = (ca, cb)
        return self._prefix[level]

    def prefix_counts(self, level: int, k: int) -> tuple[int, int]:
        ca, cb = self.prefix_index(level)
        return int(ca[k]), int(cb[k])


def expand(pi, seed="a", cap: int = DEFAULT_CAP) -> LeveledWord:
    pi = as_sequence(pi)
    seed = as_word(seed)
    if not len(seed):
        raise ValueError("seed must be non-empty")
    if len(seed) > cap:
        raise SizeLimitExceeded(len(seed), cap)
    levels = [seed]
    ya, yb = seed.count_a, seed.count_b
    for pair in pi:
        length, ya, yb = predicted_counts(pair, ya, yb)
        if length > cap:
            raise SizeLimitExceeded(length, cap)
        levels.append(apply_morphism(pair, levels[-1]))
    return LeveledWord(pi, tuple(levels))


def image_length(pi, word) -> int:
    """|alpha_pi(word)| by Property 1 arithmetic, without materialising."""
    w = as_word(word)
    ya, yb = w.count_a, w.count_b
    length = len(w)
    for pair in as_sequence(pi):
        length, ya, yb = predicted_counts(pair, ya, yb)
    return length


def fibonacci_prefix(length: int) -> BinaryWord:
    """Prefix of the Fibonacci word, fixed point of a -> ab, b -> a."""
    w = "a"
    while len(w) < length:
        w = "".join("ab" if c == "a" else "a" for c in w)
    return BinaryWord(w[:length])


def random_pairs(rng, count: int, max_p: int) -> list[ParameterPair]:
    """``count`` pairs drawn uniformly from valid pairs with max(p, p') <= max_p."""
    pool = [ParameterPair(p, q) for p in range(1, max_p + 1) for q in (p - 1, p + 1) if 1 <= q <= max_p]
    if not pool:
        raise ValueError("max_p must be at least 2")
    return [rng.choice(pool) for _ in range(count)]


def balanced_word(za: int, zb: int) -> BinaryWord:
    """Lower mechanical word with ``za`` a's and ``zb`` b's."""
    n = za + zb
    if n == 0:
        return BinaryWord("")
    i = np.arange(1, n + 1)
    letters = (i * zb) // n - ((i - 1) * zb) // n
    return BinaryWord(letters.astype(np.uint8))


__all__: Sequence[str] = [
    "DEFAULT_CAP",
    "BinaryWord",
    "ParameterPair",
    "DefiningSequence",
    "LeveledWord",
    "Block",
    "ASequence",
    "BlockDecomposition",
    "as_word",
    "as_sequence",
    "validate_pair",
    "parse_defining_sequence",
    "predicted_counts",
    "apply_morphism",
    "invert_morphism",
    "block_decompose",
    "expand",
    "image_length",
    "fibonacci_prefix",
    "random_pairs",
    "balanced_word",
]
