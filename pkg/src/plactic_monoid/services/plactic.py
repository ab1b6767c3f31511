"""
The plactic monoid: elements, multiplication, Knuth rewriting and a
brute-force congruence oracle.

Elements are identified by the row reading of their tableau, which is the
normal form Schensted insertion produces directly.
"""
import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional

from plactic_monoid.constants.app_constants import CLASS_PROGRESS_INTERVAL, get_class_budget
from plactic_monoid.exceptions import BudgetExceededError, RankError, ValidationError
from plactic_monoid.models.tableau import Tableau, tableau_of_word
from plactic_monoid.models.word import Content, Word
from plactic_monoid.utils.logging_config import get_logger, log_performance

logger = get_logger(__name__)

# Knuth relation schemas, named by their left-hand side and right-hand side
PATTERN_XZY = 'xzy=zxy'  # x <= y < z
PATTERN_YXZ = 'yxz=yzx'  # x < y <= z

FORWARD = 'forward'      # rewrite the left-hand form into the right-hand form
BACKWARD = 'backward'


class PlacticElement:
    """
    A Knuth congruence class, stored as its tableau.

    The normal form is the row reading of the tableau; content is cached.
    Instances are immutable and hashable.
    """

    __slots__ = ('_tableau', '_normal_form', '_content')

    def __init__(self, tableau: Tableau):
        self._tableau = tableau
        self._normal_form = tableau.row_reading()
        self._content = None

    @property
    def tableau(self) -> Tableau:
        return self._tableau

    @property
    def normal_form(self) -> Word:
        return self._normal_form

    @property
    def column_form(self) -> Word:
        return self._tableau.column_reading()

    @property
    def content(self) -> Content:
        if self._content is None:
            self._content = self._tableau.content()
        return self._content

    @property
    def rank(self) -> int:
        return self._normal_form.rank

    def __len__(self) -> int:
        return len(self._normal_form)

    def __mul__(self, other: "PlacticElement") -> "PlacticElement":
        if not isinstance(other, PlacticElement):
            return NotImplemented
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlacticElement):
            return NotImplemented
        return self._normal_form == other._normal_form

    def __hash__(self) -> int:
        return hash(self._normal_form)

    def __repr__(self) -> str:
        return f"PlacticElement({list(self._normal_form)!r})"

    def power(self, k: int) -> "PlacticElement":
        if k < 0:
            raise ValidationError("Negative powers are not defined in a monoid", field_name="k", invalid_value=k,
                                  validation_rule="k >= 0")
        result = identity()
        for _ in range(k):
            result = multiply(result, self)
        return result


@dataclass(frozen=True)
class KnuthRelationInstance:
    """One applicable Knuth rewrite inside a word."""
    position: int
    pattern: str
    direction: str


def element_of(w: Iterable[int]) -> PlacticElement:
    """The class of w, normalized by Schensted insertion."""
    return PlacticElement(tableau_of_word(w))


def identity() -> PlacticElement:
    return PlacticElement(Tableau())


def multiply(a: PlacticElement, b: PlacticElement) -> PlacticElement:
    """Insert the normal form of b into the tableau of a."""
    if not b.normal_form:
        return a
    return PlacticElement(tableau_of_word(b.normal_form, start=a.tableau))


def equals(a: PlacticElement, b: PlacticElement) -> bool:
    return a.normal_form == b.normal_form


def is_row(w: Iterable[int]) -> bool:
    """Weakly increasing."""
    letters = tuple(w)
    return all(letters[i] <= letters[i + 1] for i in range(len(letters) - 1))


def is_column(w: Iterable[int]) -> bool:
    """Strictly decreasing."""
    letters = tuple(w)
    return all(letters[i] > letters[i + 1] for i in range(len(letters) - 1))


def knuth_instances(w: Iterable[int]) -> List[KnuthRelationInstance]:
    """
    Every Knuth rewrite applicable to w.

    Both schemas reduce to a transposition inside a window a b c:
    xzy <-> zxy swaps a and b when min(a, b) <= c < max(a, b), and
    yxz <-> yzx swaps b and c when min(b, c) < a <= max(b, c).
    Each test is symmetric in the swapped pair, so w' is a neighbour of w
    exactly when w is a neighbour of w'.
    """
    letters = tuple(w)
    instances = []
    for i in range(len(letters) - 2):
        a, b, c = letters[i], letters[i + 1], letters[i + 2]
        if min(a, b) <= c < max(a, b):
            instances.append(KnuthRelationInstance(i, PATTERN_XZY, FORWARD if a < b else BACKWARD))
        if min(b, c) < a <= max(b, c):
            instances.append(KnuthRelationInstance(i, PATTERN_YXZ, FORWARD if b < c else BACKWARD))
    return instances


def apply_knuth_relation(w: Iterable[int], instance: KnuthRelationInstance) -> Word:
    """
    Rewrite w with a single Knuth relation.

    Raises:
        ValidationError: If the instance does not apply to w
    """
    letters = list(w)
    if instance not in knuth_instances(letters):
        raise ValidationError(f"{instance} does not apply to {letters}", field_name="instance",
                              invalid_value=instance, validation_rule="one of knuth_instances(w)")
    i = instance.position
    if instance.pattern == PATTERN_XZY:
        letters[i], letters[i + 1] = letters[i + 1], letters[i]
    else:
        letters[i + 1], letters[i + 2] = letters[i + 2], letters[i + 1]
    return Word(letters)


def knuth_neighbors(w: Iterable[int]) -> FrozenSet[Word]:
    """All words one Knuth relation away from w."""
    word = Word(w)
    return frozenset(apply_knuth_relation(word, instance) for instance in knuth_instances(word))


def knuth_class(w: Iterable[int], max_size: Optional[int] = None) -> FrozenSet[Word]:
    """
    Breadth-first closure of {w} under Knuth rewriting.

    This is a brute-force oracle for testing, not a production path.

    Args:
        w: Starting word
        max_size: State budget; defaults to PLACTIC_CLASS_BUDGET or 100000

    Raises:
        BudgetExceededError: If the class holds more than max_size words
    """
    budget = get_class_budget(max_size)
    start = Word(w)
    started_at = time.perf_counter()

    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for neighbor in knuth_neighbors(current):
            if neighbor in seen:
                continue
            seen.add(neighbor)
            if len(seen) > budget:
                logger.warning(f"Knuth class of {list(start)} exceeds budget {budget}")
                raise BudgetExceededError("Knuth class too large for the brute-force oracle",
                                          budget=budget, explored=len(seen))
            if len(seen) % CLASS_PROGRESS_INTERVAL == 0:
                logger.debug(f"Knuth class BFS: {len(seen)} words, {len(queue)} queued")
            queue.append(neighbor)

    if len(start) > 8:
        log_performance(logger, "knuth_class", time.perf_counter() - started_at,
                        length=len(start), size=len(seen))
    return frozenset(seen)


def column_generator(i: int, n: int) -> PlacticElement:
    """
    The column f_i = n (n-1) ... i.

    Raises:
        RankError: Unless 1 <= i <= n
    """
    if n < 1 or i < 1 or i > n:
        raise RankError(f"Column generator index must satisfy 1 <= i <= n, got i={i}", letter=i, rank=n)
    return PlacticElement(Tableau([i + r] for r in range(n - i + 1)))


def column_factorization(a: PlacticElement) -> List[Word]:
    """Columns c_1 ... c_p of the tableau of a, so that a = c_1 ... c_p."""
    return a.tableau.columns()


def columns_of_rank(n: int) -> List[Word]:
    """All nonempty strictly decreasing words over {1, ..., n}."""
    if n < 1:
        raise RankError("Rank must be at least 1", rank=n)
    return [
        Word._trusted(sorted(letters, reverse=True))
        for size in range(1, n + 1)
        for letters in combinations(range(1, n + 1), size)
    ]
