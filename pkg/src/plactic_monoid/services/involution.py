"""
The Schutzenberger involution theta on words and on P_n.

theta reverses a word and sends each letter k to n - k + 1. It is an
anti-automorphism of the free monoid that respects the Knuth relations, so it
descends to P_n. It depends on the rank n, which is why every call takes a
RankContext.
"""
from dataclasses import dataclass
from typing import Iterable, Optional

from plactic_monoid.exceptions import RankError
from plactic_monoid.models.word import Word, rank_of
from plactic_monoid.services.plactic import PlacticElement, element_of
from plactic_monoid.utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RankContext:
    """The rank n of the ambient finite plactic monoid P_n."""
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise RankError("Rank must be a positive integer", rank=self.n)

    @classmethod
    def for_words(cls, *words: Iterable[int], rank: Optional[int] = None) -> "RankContext":
        """
        Smallest context containing the given words, or an explicit rank.

        Raises:
            RankError: If an explicit rank is below the largest letter
        """
        needed = max((rank_of(w) for w in words), default=0)
        if rank is None:
            return cls(max(needed, 1))
        if rank < needed:
            raise RankError(f"Rank {rank} is smaller than the largest letter {needed}", letter=needed, rank=rank)
        return cls(rank)

    def check(self, w: Iterable[int]) -> None:
        largest = rank_of(w)
        if largest > self.n:
            raise RankError(f"Letter {largest} is outside the alphabet 1..{self.n}", letter=largest, rank=self.n)


def complement_letter(k: int, ctx: RankContext) -> int:
    if k < 1 or k > ctx.n:
        raise RankError(f"Letter {k} is outside the alphabet 1..{ctx.n}", letter=k, rank=ctx.n)
    return ctx.n - k + 1


def theta_word(w: Iterable[int], ctx: RankContext) -> Word:
    """
    Reverse w, then complement every letter.

    Raises:
        RankError: If a letter of w exceeds ctx.n
    """
    word = Word(w)
    ctx.check(word)
    return Word._trusted(ctx.n - letter + 1 for letter in reversed(word))


def theta_element(a: PlacticElement, ctx: RankContext) -> PlacticElement:
    """theta on P_n: apply theta to the normal form, then renormalize."""
    return element_of(theta_word(a.normal_form, ctx))
