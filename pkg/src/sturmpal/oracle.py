"""Brute-force reference for maximal palindromes.

Works on raw strings by plain center expansion.  Nothing here looks at
levels, blocks or the reflection map, so it can be used to falsify the
engine.
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import Center, CenterKind, PalindromeOccurrence, enumerate_centers, trace_position
from .words import DEFAULT_CAP, BinaryWord, LeveledWord, as_word, expand, fibonacci_prefix


@dataclass(frozen=True)
class ContextWindow:
    """A finite word with a 1-based inclusive core window to analyze."""

    full_word: BinaryWord
    core_start: int
    core_end: int

    def __post_init__(self):
        object.__setattr__(self, "full_word", as_word(self.full_word))
        if not 1 <= self.core_start <= self.core_end <= len(self.full_word):
            raise ValueError(
                f"core {self.core_start}..{self.core_end} not inside 1..{len(self.full_word)}"
            )

    @classmethod
    def whole(cls, word) -> "ContextWindow":
        w = as_word(word)
        return cls(w, 1, len(w))

    @property
    def margin(self) -> int:
        return min(self.core_start - 1, len(self.full_word) - self.core_end)

    @property
    def core(self) -> BinaryWord:
        return self.full_word.factor(self.core_start, self.core_end)

    def text(self) -> str:
        return str(self.full_word)

    def core_centers(self) -> list[Center]:
        shift = self.core_start - 1
        return [Center(c.kind, c.position + shift) for c in enumerate_centers(self.core)]


def _expand(s: str, lo: int, hi: int) -> tuple[int, int, bool]:
    n = len(s)
    while lo >= 0 and hi < n and s[lo] == s[hi]:
        lo -= 1
        hi += 1
    return lo + 1, hi, lo >= 0 and hi < n


def _expand_center(s: str, center: Center) -> tuple[int, int, bool]:
    i = center.position - 1
    if center.kind is CenterKind.AA:
        return _expand(s, i - 1, i + 2)
    return _expand(s, i - 1, i + 1)


def longest_palindrome_at(ctx: ContextWindow, center: Center) -> tuple[int, bool]:
    """Length of the maximal palindrome at ``center`` and whether it is complete.

    Incomplete means the expansion ran into the end of the full word while
    still matching, so the true length is unknown.
    """
    s = ctx.text()
    width = center.kind.width
    if not ctx.core_start <= center.position <= ctx.core_end - width + 1:
        raise ValueError(f"{center} is outside the core window")
    want = "aa" if center.kind is CenterKind.AA else center.kind.value
    if s[center.position - 1 : center.position - 1 + width] != want:
        raise ValueError(f"{center} is not a center of this word")
    lo, hi, complete = _expand_center(s, center)
    return hi - lo, complete


def brute_occurrences(ctx: ContextWindow) -> list[PalindromeOccurrence]:
    """One occurrence per core center, ordered by midpoint; incomplete ones flagged."""
    s = ctx.text()
    out = []
    for c in ctx.core_centers():
        lo, hi, complete = _expand_center(s, c)
        out.append(PalindromeOccurrence(c, hi - lo, flagged=not complete))
    return out


def occurrence_string(ctx: ContextWindow, occ: PalindromeOccurrence) -> str:
    return ctx.text()[occ.start - 1 : occ.end]


def brute_distinct(ctx: ContextWindow) -> set[str]:
    """Distinct maximal palindromes among complete core occurrences."""
    s = ctx.text()
    found = set()
    for c in ctx.core_centers():
        lo, hi, complete = _expand_center(s, c)
        if complete:
            found.add(s[lo:hi])
    return found


def lemma6_check(ctx: ContextWindow, palindrome) -> bool:
    """True iff ``palindrome`` also occurs as a proper same-centric factor of a longer palindrome.

    False means no such echo was found in the context; for a short context
    that is inconclusive rather than a counterexample.
    """
    s = ctx.text()
    p = str(as_word(palindrome))
    if not p or p != p[::-1]:
        raise ValueError(f"{p!r} is not a palindrome")
    i = s.find(p)
    while i != -1:
        j = i + len(p)
        if i > 0 and j < len(s) and s[i - 1] == s[j]:
            return True
        i = s.find(p, i + 1)
    return False


def reversal_closure_check(ctx: ContextWindow, max_len: int) -> bool:
    """Every core factor of length <= max_len has its reverse somewhere in the full word."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    s = ctx.text()
    n = len(s)
    present = {s[i : i + k] for k in range(1, max_len + 1) for i in range(n - k + 1)}
    a, b = ctx.core_start - 1, ctx.core_end
    for k in range(1, max_len + 1):
        for i in range(a, b - k + 1):
            if s[i : i + k][::-1] not in present:
                return False
    return True


def margin_seed(margin: int, core="a") -> BinaryWord:
    """Fibonacci factor with ``margin`` letters on each side of an occurrence of ``core``."""
    if margin < 0:
        raise ValueError("margin must be >= 0")
    core = str(as_word(core))
    if not core:
        raise ValueError("core must be non-empty")
    length = 3 * margin + 4 * len(core) + 16
    while length < 10**6:
        f = str(fibonacci_prefix(length))
        i = f.find(core, margin)
        if i != -1 and i + len(core) + margin <= len(f):
            return BinaryWord(f[i - margin : i + len(core) + margin])
        length *= 2
    raise ValueError(f"{core!r} is not a factor of the Fibonacci word")


def _trace_up(lw: LeveledWord, pos: int) -> int:
    for level in range(lw.n):
        pos = trace_position(lw, level, pos)
    return pos


def margin_context(pi, margin: int = 1, cap: int = DEFAULT_CAP, core="a") -> tuple[ContextWindow, LeveledWord]:
    """Context whose core window is the image of ``core`` under ``pi``.

    The seed carries ``margin`` letters of the Fibonacci word on each side
    of ``core``, so the core window has their images as context.
    """
    core = as_word(core)
    seed = margin_seed(margin, core)
    lw = expand(pi, seed, cap)
    start = _trace_up(lw, margin + 1)
    after = margin + len(core) + 1
    end = _trace_up(lw, after) - 1 if after <= len(seed) else len(lw.ultimate)
    return ContextWindow(lw.ultimate, start, end), lw
