"""
Letters, words and contents: the shared vocabulary of the plactic monoid.

Letters are positive integers with no fixed upper bound, so the same types
serve the finite rank monoids P_n and the infinite rank monoid P_N.
"""
import re
from collections import Counter
from typing import Dict, Iterable, Iterator, Optional, Tuple

from plactic_monoid.constants.app_constants import (
    COMMENT_PREFIX,
    COMPACT_MAX_LETTER,
    STYLE_COMPACT,
    STYLE_SEPARATED,
    WORD_SEPARATORS,
    WORD_STYLES,
)
from plactic_monoid.exceptions import FormatError, ParseError, ValidationError
from plactic_monoid.utils.logging_config import get_logger

logger = get_logger(__name__)

_SEPARATOR_RE = re.compile(WORD_SEPARATORS)
_LETTER_RE = re.compile(r'[0-9]+')


def _check_letter(letter) -> int:
    if isinstance(letter, bool) or not isinstance(letter, int):
        raise ValidationError(f"Letter must be an integer, got {letter!r}",
                              field_name="letter", invalid_value=letter, validation_rule="integer")
    if letter < 1:
        raise ValidationError(f"Letter must be positive, got {letter}",
                              field_name="letter", invalid_value=letter, validation_rule="letter >= 1")
    return letter


class Word(tuple):
    """Immutable finite sequence of positive-integer letters."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        letters = tuple(letters)
        for letter in letters:
            _check_letter(letter)
        return super().__new__(cls, letters)

    @classmethod
    def _trusted(cls, letters: Iterable[int]) -> "Word":
        """Build a word from letters already known to be valid."""
        return tuple.__new__(cls, letters)

    def __add__(self, other) -> "Word":
        if not isinstance(other, Word):
            other = Word(other)
        return Word._trusted(tuple.__add__(self, other))

    def __getitem__(self, index):
        result = tuple.__getitem__(self, index)
        if isinstance(index, slice):
            return Word._trusted(result)
        return result

    def __repr__(self) -> str:
        return f"Word({list(self)!r})"

    @property
    def rank(self) -> int:
        return rank_of(self)

    def reversed(self) -> "Word":
        return Word._trusted(tuple.__getitem__(self, slice(None, None, -1)))


class Content:
    """
    Sparse tally of letter occurrences (the Parikh image of a word).

    Only nonzero counts are stored, so contents of words over an unbounded
    alphabet compare and hash consistently.
    """

    __slots__ = ('_counts',)

    def __init__(self, counts: Optional[Dict[int, int]] = None):
        cleaned = {}
        for letter, count in (counts or {}).items():
            _check_letter(letter)
            if isinstance(count, bool) or not isinstance(count, int) or count < 0:
                raise ValidationError(f"Count for letter {letter} must be a nonnegative integer",
                                      field_name="count", invalid_value=count, validation_rule="count >= 0")
            if count:
                cleaned[letter] = count
        self._counts = dict(sorted(cleaned.items()))

    @property
    def counts(self) -> Dict[int, int]:
        return dict(self._counts)

    @property
    def rank(self) -> int:
        return max(self._counts, default=0)

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def count(self, letter: int) -> int:
        return self._counts.get(letter, 0)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._counts.items())

    def as_vector(self, n: int) -> Tuple[int, ...]:
        """Counts of letters 1..n as a tuple (letters above n are dropped)."""
        return tuple(self.count(k) for k in range(1, n + 1))

    def row_word(self) -> Word:
        """The weakly increasing word with this content."""
        return Word._trusted(letter for letter, count in self._counts.items() for _ in range(count))

    def __add__(self, other: "Content") -> "Content":
        if not isinstance(other, Content):
            return NotImplemented
        merged = Counter(self._counts)
        merged.update(other._counts)
        return Content(dict(merged))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Content):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        return f"Content({self._counts!r})"


def parse_word(text: str, style: Optional[str] = None) -> Word:
    """
    Parse word text.

    Two forms are accepted: a compact digit string such as ``34231122``
    (letters 1-9 only) or positive integers separated by whitespace and/or
    commas such as ``10 2 10``. Without an explicit style, text containing a
    separator is read as separated, anything else as compact.

    Args:
        text: The text to parse; blank text is the empty word
        style: 'compact', 'separated' or None to detect

    Returns:
        The parsed Word

    Raises:
        ParseError: On a non-numeric token or a letter below 1
    """
    if text is None:
        raise ParseError("Cannot parse word from None")
    stripped = text.strip()
    if not stripped:
        return Word()
    if stripped.startswith(COMMENT_PREFIX):
        raise ParseError("Comment text is not a word", token=stripped)

    if style is None:
        style = STYLE_SEPARATED if _SEPARATOR_RE.search(stripped) else STYLE_COMPACT
    elif style not in WORD_STYLES:
        raise ParseError(f"Unknown word style: {style}", token=style)

    if style == STYLE_COMPACT:
        tokens = list(stripped)
    else:
        tokens = [token for token in _SEPARATOR_RE.split(stripped) if token]

    letters = []
    for token in tokens:
        # int() would also take '+3', '1_0' and non-ASCII digits
        if not _LETTER_RE.fullmatch(token):
            raise ParseError(f"Non-numeric letter in word {stripped!r}", token=token)
        letter = int(token)
        if letter < 1:
            raise ParseError(f"Letters must be positive integers in word {stripped!r}", token=token)
        letters.append(letter)

    return Word._trusted(letters)


def format_word(w: Iterable[int], style: str = STYLE_COMPACT) -> str:
    """
    Render a word as text that parse_word reads back with the same style.

    Raises:
        FormatError: For compact style when a letter exceeds 9, or an unknown style
    """
    letters = tuple(w)
    if style == STYLE_COMPACT:
        for letter in letters:
            if letter > COMPACT_MAX_LETTER:
                raise FormatError("Compact style only supports letters 1-9", letter=letter, style=style)
        return ''.join(str(letter) for letter in letters)
    if style == STYLE_SEPARATED:
        return ' '.join(str(letter) for letter in letters)
    raise FormatError(f"Unknown word style: {style}", style=style)


def format_word_auto(w: Iterable[int]) -> str:
    """Compact form when every letter fits, separated form otherwise."""
    letters = tuple(w)
    if all(letter <= COMPACT_MAX_LETTER for letter in letters):
        return format_word(letters, STYLE_COMPACT)
    return format_word(letters, STYLE_SEPARATED)


def content_of(w: Iterable[int]) -> Content:
    """Count how many times each letter occurs in w."""
    return Content(dict(Counter(w)))


def rank_of(w: Iterable[int]) -> int:
    """Largest letter of w, or 0 for the empty word."""
    return max(w, default=0)
