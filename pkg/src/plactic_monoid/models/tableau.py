"""
Semistandard Young tableaux in French convention and Schensted row insertion.

Rows are stored bottom-up: ``rows[0]`` is the bottom (longest) row, where
insertion starts. Readings convert to top-row-first order at the boundary.
"""
from bisect import bisect_right
from typing import Iterable, List, Sequence, Tuple

from plactic_monoid.exceptions import ValidationError
from plactic_monoid.models.word import Content, Word, content_of
from plactic_monoid.utils.logging_config import get_logger

logger = get_logger(__name__)

Row = Tuple[int, ...]


class Tableau:
    """
    A filling of a Young diagram, rows indexed bottom (0) to top.

    The plain constructor does not validate so that malformed fillings can be
    represented and rejected by is_valid_tableau; use from_rows for a checked
    construction.
    """

    __slots__ = ('_rows',)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        self._rows: Tuple[Row, ...] = tuple(tuple(row) for row in rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        """Build a tableau from bottom-first rows, rejecting invalid fillings."""
        tableau = cls(rows)
        if not tableau.is_valid():
            raise ValidationError("Rows do not form a semistandard tableau",
                                  field_name="rows", invalid_value=tableau.rows,
                                  validation_rule="rows weakly increase, columns strictly increase upward, "
                                                  "row lengths weakly decrease upward")
        return tableau

    @property
    def rows(self) -> Tuple[Row, ...]:
        return self._rows

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self._rows)

    def __len__(self) -> int:
        return sum(len(row) for row in self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(row) for row in self._rows]!r})"

    def is_valid(self) -> bool:
        rows = self._rows
        for r, row in enumerate(rows):
            if not row:
                return False
            if any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in row):
                return False
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                return False
            if r > 0:
                below = rows[r - 1]
                if len(row) > len(below):
                    return False
                if any(row[c] <= below[c] for c in range(len(row))):
                    return False
        return True

    def columns(self) -> List[Word]:
        """Columns left to right, each read top to bottom."""
        width = len(self._rows[0]) if self._rows else 0
        return [
            Word._trusted(row[c] for row in reversed(self._rows) if len(row) > c)
            for c in range(width)
        ]

    def row_reading(self) -> Word:
        return Word._trusted(letter for row in reversed(self._rows) for letter in row)

    def column_reading(self) -> Word:
        return Word._trusted(letter for column in self.columns() for letter in column)

    def content(self) -> Content:
        return content_of(letter for row in self._rows for letter in row)

    def insert(self, x: int) -> "Tableau":
        """Schensted row insertion of x, without re-validating self."""
        rows = [list(row) for row in self._rows]
        _bump_into(rows, x)
        return Tableau(rows)

    def pretty(self) -> str:
        """One row per line, top row first, entries space-separated."""
        return '\n'.join(' '.join(str(x) for x in row) for row in reversed(self._rows))


def _bump_into(rows: List[List[int]], x: int) -> None:
    """Insert x into mutable bottom-first rows in place."""
    for row in rows:
        # leftmost entry strictly larger than x
        position = bisect_right(row, x)
        if position == len(row):
            row.append(x)
            return
        row[position], x = x, row[position]
    rows.append([x])


def insert_letter(t: Tableau, x: int) -> Tableau:
    """
    Schensted row insertion of a single letter.

    If the bottom row extended by x is still a row, x is appended. Otherwise x
    replaces the leftmost strictly larger letter y of that row and y is
    inserted into the row above in the same way.

    Raises:
        ValidationError: If t is not a valid tableau or x is not a letter
    """
    if not t.is_valid():
        raise ValidationError("Cannot insert into an invalid tableau", field_name="tableau",
                              invalid_value=t.rows, validation_rule="semistandard")
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise ValidationError(f"Cannot insert non-letter {x!r}", field_name="letter",
                              invalid_value=x, validation_rule="letter >= 1")
    return t.insert(x)


def tableau_of_word(w: Iterable[int], start: Tableau = None) -> Tableau:
    """Insert the letters of w one by one, starting from the empty tableau (or start)."""
    rows = [list(row) for row in start.rows] if start is not None else []
    for x in Word(w):
        _bump_into(rows, x)
    return Tableau(rows)


def row_reading(t: Tableau) -> Word:
    """Rows concatenated top row first, each read left to right."""
    return t.row_reading()


def column_reading(t: Tableau) -> Word:
    """Columns concatenated left to right, each read top to bottom."""
    return t.column_reading()


def is_valid_tableau(t: Tableau) -> bool:
    return t.is_valid()


def tableau_of_column_exponents(exponents: Sequence[int], n: int) -> Tableau:
    """
    Tableau whose column reading is f_1^x_1 f_2^x_2 ... f_n^x_n.

    Here f_i is the column n, n-1, ..., i, so the columns stack left to right
    from tallest to shortest and row r (bottom is r = 1) holds the letter
    i + r - 1 once for every copy of f_i with n - i + 1 >= r.
    """
    if len(exponents) != n:
        raise ValidationError(f"Expected {n} exponents, got {len(exponents)}",
                              field_name="exponents", invalid_value=tuple(exponents),
                              validation_rule="one exponent per letter")
    if any(x < 0 for x in exponents):
        raise ValidationError("Column exponents must be nonnegative", field_name="exponents",
                              invalid_value=tuple(exponents), validation_rule="x_i >= 0")

    rows = []
    for r in range(1, n + 1):
        row = [i + r - 1 for i in range(1, n - r + 2) for _ in range(exponents[i - 1])]
        if not row:
            break
        rows.append(row)
    return Tableau(rows)
