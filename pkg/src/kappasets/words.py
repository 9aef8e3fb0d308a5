"""Reduced words over a signed alphabet, ball enumeration, and direct sums.

A word in the free group on m letters is a tuple of nonzero ints: letter i
(0-based) is stored as i + 1, its inverse as -(i + 1), and the empty tuple
is the identity. Every function here keeps words freely reduced, so tuple
equality is group equality.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

Word = tuple[int, ...]
DSWord = tuple[Word, ...]

IDENTITY: Word = ()

#: Refuse to materialize balls bigger than this (override per call).
MAX_BALL_WORDS = 2_000_000


class WordSyntaxError(ValueError):
    """Malformed word literal."""


def reduce_word(letters: Iterable[int]) -> Word:
    """Freely reduce a sequence of signed letter codes."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter code")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def concat(u: Word, v: Word) -> Word:
    """Reduced product u*v; exact for any word lengths, never truncated."""
    i = len(u)
    j = 0
    nv = len(v)
    while i > 0 and j < nv and u[i - 1] == -v[j]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


def concat_all(*words: Word) -> Word:
    out: Word = ()
    for w in words:
        out = concat(out, w)
    return out


def inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def conjugate(x: Word, g: Word) -> Word:
    """g^-1 * x * g."""
    return concat(concat(inverse(g), x), g)


def first_last(w: Word) -> tuple[int, int]:
    """First and last signed letters of a nonempty reduced word."""
    if not w:
        raise ValueError("first/last letter undefined for the identity word")
    return w[0], w[-1]


def first_last2(w: Word) -> tuple[Word, Word]:
    """Length-2 prefix and suffix; requires |w| >= 2."""
    if len(w) < 2:
        raise ValueError("length-2 prefix/suffix require a word of length >= 2")
    return w[:2], w[-2:]


def alph(w: Word) -> frozenset[int]:
    """0-based indices of the letters occurring in w with either sign."""
    return frozenset(abs(x) - 1 for x in w)


def letter_rank(x: int) -> int:
    # canonical letter order: a < a^-1 < b < b^-1 < ...
    return 2 * (abs(x) - 1) + (1 if x < 0 else 0)


def word_sort_key(w: Word) -> tuple:
    """(length, lexicographic) sort key matching ball index order."""
    return (len(w), tuple(letter_rank(x) for x in w))


def signed_letters(letters: Sequence[int]) -> list[int]:
    """Signed codes of the given 0-based letters in canonical order."""
    out: list[int] = []
    for i in sorted(letters):
        out.append(i + 1)
        out.append(-(i + 1))
    return out


def ball_size(alphabet_size: int, radius: int) -> int:
    """Closed-form count of reduced words of length <= radius."""
    m, length = alphabet_size, radius
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    if length < 0:
        raise ValueError("radius must be >= 0")
    if m == 1:
        return 2 * length + 1
    q = 2 * m - 1
    return 1 + 2 * m * (q**length - 1) // (q - 1)


def _grow_words(words: list[Word], codes: Sequence[int], rounds: int) -> list[Word]:
    """Extend each word by one letter per round, keeping (length, lex) order."""
    all_words = list(words)
    frontier = list(words)
    for _ in range(rounds):
        nxt: list[Word] = []
        for w in frontier:
            last = w[-1] if w else 0
            for x in codes:
                if x != -last:
                    nxt.append(w + (x,))
        all_words.extend(nxt)
        frontier = nxt
    return all_words


class Ball:
    """All reduced words of length <= radius, indexed in (length, lex) order.

    Index 0 is the identity. The index map is built lazily on first use.
    """

    def __init__(self, alphabet_size: int, radius: int, words: list[Word]):
        self.alphabet_size = alphabet_size
        self.radius = radius
        self.words = words
        self._index: dict[Word, int] | None = None

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def word_at(self, i: int) -> Word:
        return self.words[i]

    def index_of(self, w: Word) -> int:
        if self._index is None:
            self._index = {u: i for i, u in enumerate(self.words)}
        return self._index[w]

    def __contains__(self, w: Word) -> bool:
        if self._index is None:
            self._index = {u: i for i, u in enumerate(self.words)}
        return w in self._index

    def __repr__(self) -> str:
        return f"Ball(m={self.alphabet_size}, L={self.radius}, size={self.size})"


def enumerate_ball(alphabet_size: int, radius: int, max_words: int = MAX_BALL_WORDS) -> Ball:
    """Enumerate the radius-L ball of the rank-m free group.

    Raises ValueError when the closed-form size exceeds max_words.
    """
    expected = ball_size(alphabet_size, radius)
    if expected > max_words:
        raise ValueError(
            f"ball of rank {alphabet_size}, radius {radius} has {expected} words"
            f" (limit {max_words})"
        )
    codes = signed_letters(range(alphabet_size))
    words = _grow_words([IDENTITY], codes, radius)
    if len(words) != expected:
        raise RuntimeError("ball enumeration disagrees with the closed-form count")
    return Ball(alphabet_size, radius, words)


def words_over(letters: Sequence[int], radius: int) -> list[Word]:
    """Reduced words of length <= radius using only the given 0-based letters."""
    return _grow_words([IDENTITY], signed_letters(letters), radius)


_XN_TOKEN = re.compile(r"x(\d+)(')?")
_LETTER_TOKEN = re.compile(r"([a-z])(')?")


def parse_word(text: str, alphabet_size: int) -> Word:
    """Parse a word literal: letters a,b,c,... or x1,x2,...; apostrophe inverts.

    Juxtaposition concatenates ("ab'a"). "" and "1" denote the identity.
    """
    s = text.strip()
    if s in ("", "1"):
        return IDENTITY
    if re.fullmatch(r"(x\d+'?)+", s):
        token_re = _XN_TOKEN

        def idx(tok: str) -> int:
            i = int(tok) - 1
            if i < 0:
                raise WordSyntaxError(f"letter numbering starts at x1: {text!r}")
            return i

    elif re.fullmatch(r"([a-z]'?)+", s):
        token_re = _LETTER_TOKEN

        def idx(tok: str) -> int:
            return ord(tok) - ord("a")

    else:
        raise WordSyntaxError(f"cannot parse word literal {text!r}")
    codes: list[int] = []
    for tok, apos in token_re.findall(s):
        i = idx(tok)
        if i >= alphabet_size:
            raise WordSyntaxError(
                f"letter {tok!r} out of range for alphabet of size {alphabet_size}"
            )
        codes.append(-(i + 1) if apos else i + 1)
    return reduce_word(codes)


def format_word(w: Word) -> str:
    """Inverse of parse_word on reduced words; identity prints as "1"."""
    if not w:
        return "1"
    if max(abs(x) for x in w) <= 26:
        return "".join(chr(ord("a") + abs(x) - 1) + ("'" if x < 0 else "") for x in w)
    return "".join(f"x{abs(x)}" + ("'" if x < 0 else "") for x in w)


@dataclass(frozen=True)
class WordSetPredicate:
    """Intensional word set: a total, deterministic membership test."""

    description: str
    fn: Callable[..., bool]

    def __call__(self, w) -> bool:
        return self.fn(w)

    def __repr__(self) -> str:
        return f"WordSetPredicate({self.description})"


# -- direct sums of free groups ------------------------------------------------


def ds_identity(summands: int) -> DSWord:
    return (IDENTITY,) * summands


def ds_concat(g: DSWord, h: DSWord) -> DSWord:
    if len(g) != len(h):
        raise ValueError("direct-sum words have different numbers of summands")
    return tuple(concat(a, b) for a, b in zip(g, h))


def ds_inverse(g: DSWord) -> DSWord:
    return tuple(inverse(c) for c in g)


def ds_conjugate(x: DSWord, g: DSWord) -> DSWord:
    """g^-1 * x * g, componentwise."""
    return ds_concat(ds_concat(ds_inverse(g), x), g)


def ds_support(g: DSWord) -> tuple[int, ...]:
    """Indices of the non-identity components."""
    return tuple(i for i, c in enumerate(g) if c)


def ds_rho(g: DSWord) -> int:
    """Last signed letter of the highest-index non-identity component."""
    for c in reversed(g):
        if c:
            return c[-1]
    raise ValueError("ds_rho undefined for the identity tuple")


def enumerate_ds_ball(
    alphabet_sizes: Sequence[int], radius: int, max_words: int = MAX_BALL_WORDS
) -> list[DSWord]:
    """All tuples of component words of length <= radius, component 0 major."""
    balls = [enumerate_ball(m, radius).words for m in alphabet_sizes]
    total = 1
    for b in balls:
        total *= len(b)
    if total > max_words:
        raise ValueError(f"direct-sum ball has {total} words (limit {max_words})")
    return list(itertools.product(*balls))
