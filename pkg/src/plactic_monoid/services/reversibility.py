"""
Constructive witnesses that two principal ideals of a plactic monoid intersect.

Equations solved, for given u and v:

- equal content:  X u = X v     (only when c(u) = c(v))
- left ideals:    X u = Y v
- right ideals:   u X = v Y
- mixed:          u X = Y v

The equal-content witness is a product of column generators
X = f_1^x_1 ... f_n^x_n with x_1 = 0 and x_i >= c_{i-1}(u). With that choice
every letter i of u bumps an i+1 out of the bottom row of X, whatever order
the letters arrive in, so X u depends on the content of u only.
"""
import itertools
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from plactic_monoid.constants.app_constants import (
    DEFAULT_SEARCH_MAX_LENGTH,
    EQUATION_EQUAL_CONTENT,
    EQUATION_LEFT,
    EQUATION_MIXED,
    EQUATION_RIGHT,
    EQUATIONS,
    SIDE_LEFT,
    SIDE_RIGHT,
    STYLE_SEPARATED,
)
from plactic_monoid.exceptions import ContentMismatchError, ParseError, RankError, ValidationError
from plactic_monoid.models.tableau import tableau_of_column_exponents
from plactic_monoid.models.word import Content, format_word, parse_word
from plactic_monoid.services.involution import RankContext, theta_element
from plactic_monoid.services.plactic import PlacticElement, element_of, multiply
from plactic_monoid.utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class EqualContentWitness:
    """X = f_1^x_1 ... f_n^x_n together with its exponents."""
    exponents: Tuple[int, ...]
    witness: PlacticElement
    rank: int


@dataclass(frozen=True)
class WitnessPair:
    """
    A solution (left, right) of one of the ideal equations.

    common_value is the element both sides evaluate to, e.g. left*u = right*v
    for the left-ideal equation.
    """
    left: PlacticElement
    right: PlacticElement
    equation: str
    common_value: PlacticElement
    rank: Optional[int] = None


def _check_rank(n: int, *elements: PlacticElement) -> RankContext:
    ctx = RankContext(n)
    for element in elements:
        ctx.check(element.normal_form)
    return ctx


def witness_from_exponents(exponents: Sequence[int], n: int, u: Optional[PlacticElement] = None) -> EqualContentWitness:
    """
    Wrap a chosen exponent vector as a witness.

    When u is given, the vector must satisfy x_1 = 0 and x_i >= c_{i-1}(u).

    Raises:
        ValidationError: On a malformed or insufficient exponent vector
    """
    exponents = tuple(exponents)
    witness = PlacticElement(tableau_of_column_exponents(exponents, n))
    if u is not None:
        counts = u.content.as_vector(n)
        if exponents[0] != 0:
            raise ValidationError("The first column exponent must be 0", field_name="exponents",
                                  invalid_value=exponents, validation_rule="x_1 = 0")
        for i in range(2, n + 1):
            if exponents[i - 1] < counts[i - 2]:
                raise ValidationError(f"Exponent x_{i} is smaller than c_{i - 1}(u) = {counts[i - 2]}",
                                      field_name="exponents", invalid_value=exponents,
                                      validation_rule="x_i >= c_{i-1}(u)")
    return EqualContentWitness(exponents=exponents, witness=witness, rank=n)


def equal_content_witness(u: PlacticElement, v: PlacticElement, n: int, extra: int = 0) -> EqualContentWitness:
    """
    Find X with X u = X v for elements of equal content.

    The exponents are x_1 = 0 and x_i = c_{i-1}(u) + extra for i >= 2; extra = 0
    gives the smallest choice the construction allows.

    Raises:
        RankError: If u or v uses a letter above n
        ContentMismatchError: If c(u) != c(v)
    """
    _check_rank(n, u, v)
    if u.content != v.content:
        logger.error(f"Content mismatch: {u.content} vs {v.content}")
        raise ContentMismatchError("X u = X v requires u and v to have equal content",
                                   left_content=u.content, right_content=v.content)
    if extra < 0:
        raise ValidationError("Exponent slack must be nonnegative", field_name="extra",
                              invalid_value=extra, validation_rule="extra >= 0")

    counts = u.content.as_vector(n)
    exponents = (0,) + tuple(counts[i - 1] + extra for i in range(1, n))
    result = witness_from_exponents(exponents, n, u)
    logger.debug(f"Equal-content witness at rank {n}: exponents={exponents}")
    return result


def closed_form_product(exponents: Sequence[int], u_content: Content, n: int) -> PlacticElement:
    """
    X u computed from exponents alone, without inserting u.

    With X = f_1^x_1 ... f_n^x_n and c_i(u) <= x_{i+1}, the product is
    f_1^(x_1 + c_1) ... f_i^(x_i - c_{i-1} + c_i) ... f_n^(x_n - c_{n-1} + c_n).

    Raises:
        ValidationError: If some x_{i+1} < c_i(u)
        RankError: If u_content uses a letter above n
    """
    if u_content.rank > n:
        raise RankError(f"Content uses letter {u_content.rank} above the rank", letter=u_content.rank, rank=n)
    exponents = tuple(exponents)
    counts = u_content.as_vector(n)
    if len(exponents) != n:
        raise ValidationError(f"Expected {n} exponents, got {len(exponents)}", field_name="exponents",
                              invalid_value=exponents, validation_rule="one exponent per letter")
    for i in range(1, n):
        if counts[i - 1] > exponents[i]:
            raise ValidationError(f"c_{i}(u) = {counts[i - 1]} exceeds x_{i + 1} = {exponents[i]}",
                                  field_name="exponents", invalid_value=exponents,
                                  validation_rule="c_i(u) <= x_{i+1}")

    shifted = [exponents[0] + counts[0]]
    shifted.extend(exponents[i] - counts[i - 1] + counts[i] for i in range(1, n))
    return PlacticElement(tableau_of_column_exponents(shifted, n))


def content_equalizers(u: PlacticElement, v: PlacticElement) -> Tuple[PlacticElement, PlacticElement]:
    """
    Elements alpha, beta with c(alpha u) = c(beta v).

    alpha is the row with the content of v and beta the row with the content
    of u.
    """
    alpha = element_of(v.content.row_word())
    beta = element_of(u.content.row_word())
    return alpha, beta


def solve_equal_content(u: PlacticElement, v: PlacticElement, n: int) -> WitnessPair:
    """X u = X v as a witness pair with left = right = X."""
    x = equal_content_witness(u, v, n).witness
    return WitnessPair(left=x, right=x, equation=EQUATION_EQUAL_CONTENT, common_value=multiply(x, u), rank=n)


def solve_left(u: PlacticElement, v: PlacticElement, n: int) -> WitnessPair:
    """
    Solve X u = Y v in P_n.

    alpha u and beta v share their content, so some X has X alpha u = X beta v;
    the answer is (X alpha, X beta).
    """
    _check_rank(n, u, v)
    alpha, beta = content_equalizers(u, v)
    x = equal_content_witness(multiply(alpha, u), multiply(beta, v), n).witness
    left = multiply(x, alpha)
    right = multiply(x, beta)
    common = multiply(left, u)
    logger.debug(f"solve_left at rank {n}: X={list(x.normal_form)} common={list(common.normal_form)}")
    return WitnessPair(left=left, right=right, equation=EQUATION_LEFT, common_value=common, rank=n)


def solve_right(u: PlacticElement, v: PlacticElement, n: int) -> WitnessPair:
    """
    Solve u X = v Y in P_n.

    Solve A theta(u) = B theta(v), then apply theta: u theta(A) = v theta(B).
    """
    ctx = _check_rank(n, u, v)
    mirrored = solve_left(theta_element(u, ctx), theta_element(v, ctx), n)
    left = theta_element(mirrored.left, ctx)
    right = theta_element(mirrored.right, ctx)
    return WitnessPair(left=left, right=right, equation=EQUATION_RIGHT, common_value=multiply(u, left), rank=n)


def solve_mixed(u: PlacticElement, v: PlacticElement, n: Optional[int] = None) -> WitnessPair:
    """u X = Y v, solved by X = v and Y = u. Any rank holding u and v works."""
    n = max(u.rank, v.rank, 1) if n is None else _check_rank(n, u, v).n
    return WitnessPair(left=v, right=u, equation=EQUATION_MIXED, common_value=multiply(u, v), rank=n)


def solve_infinite(u: PlacticElement, v: PlacticElement, side: str = SIDE_LEFT,
                   n: Optional[int] = None) -> WitnessPair:
    """
    Solve in P_N by working in the smallest P_n containing u and v, or in P_n
    for an explicit n.

    Witnesses found in P_n remain witnesses in P_N since P_n sits inside P_N.

    Raises:
        RankError: If n is below the largest letter of u or v
    """
    if n is None:
        n = max(u.rank, v.rank, 1)
    if side == SIDE_LEFT:
        return solve_left(u, v, n)
    if side == SIDE_RIGHT:
        return solve_right(u, v, n)
    raise ValidationError(f"Unknown side: {side}", field_name="side", invalid_value=side,
                          validation_rule="left or right")


def _evaluate(pair: WitnessPair, u: PlacticElement, v: PlacticElement) -> Optional[Tuple[PlacticElement, PlacticElement]]:
    if pair.equation in (EQUATION_LEFT, EQUATION_EQUAL_CONTENT):
        return multiply(pair.left, u), multiply(pair.right, v)
    if pair.equation == EQUATION_RIGHT:
        return multiply(u, pair.left), multiply(v, pair.right)
    if pair.equation == EQUATION_MIXED:
        return multiply(u, pair.left), multiply(pair.right, v)
    return None


def verify_witness(pair: WitnessPair, u: PlacticElement, v: PlacticElement) -> bool:
    """Recompute both sides of the recorded equation and compare with common_value."""
    sides = _evaluate(pair, u, v)
    if sides is None:
        logger.warning(f"Cannot verify unknown equation {pair.equation!r}")
        return False
    if pair.equation == EQUATION_EQUAL_CONTENT and pair.left != pair.right:
        return False
    lhs, rhs = sides
    return lhs == rhs == pair.common_value


def _elements_up_to(n: int, max_length: int):
    """Distinct elements of P_n of length <= max_length, shortest first."""
    seen = {}
    for length in range(max_length + 1):
        for letters in itertools.product(range(1, n + 1), repeat=length):
            element = element_of(letters)
            if element not in seen:
                seen[element] = length
    return sorted(seen, key=lambda e: (len(e), tuple(e.normal_form)))


def minimal_witness_search(u: PlacticElement, v: PlacticElement, side: str = SIDE_LEFT,
                           max_length: int = DEFAULT_SEARCH_MAX_LENGTH,
                           n: Optional[int] = None) -> Optional[WitnessPair]:
    """
    Brute-force the witness pair of least total length, up to max_length per side.

    Test utility: it makes no claim about the constructive solvers.

    Returns:
        The shortest WitnessPair found, or None
    """
    n = n if n is not None else max(u.rank, v.rank, 1)
    _check_rank(n, u, v)
    if side not in (SIDE_LEFT, SIDE_RIGHT):
        raise ValidationError(f"Unknown side: {side}", field_name="side", invalid_value=side,
                              validation_rule="left or right")

    candidates = _elements_up_to(n, max_length)
    if side == SIDE_LEFT:
        reached_from_u = {}
        for x in candidates:
            reached_from_u.setdefault(multiply(x, u), x)
        best = None
        for y in candidates:
            x = reached_from_u.get(multiply(y, v))
            if x is not None and (best is None or len(x) + len(y) < len(best[0]) + len(best[1])):
                best = (x, y)
        equation = EQUATION_LEFT
    else:
        reached_from_u = {}
        for x in candidates:
            reached_from_u.setdefault(multiply(u, x), x)
        best = None
        for y in candidates:
            x = reached_from_u.get(multiply(v, y))
            if x is not None and (best is None or len(x) + len(y) < len(best[0]) + len(best[1])):
                best = (x, y)
        equation = EQUATION_RIGHT

    if best is None:
        return None
    left, right = best
    common = multiply(left, u) if side == SIDE_LEFT else multiply(u, left)
    return WitnessPair(left=left, right=right, equation=equation, common_value=common, rank=n)


def witness_to_dict(pair: WitnessPair, u: Optional[PlacticElement] = None,
                    v: Optional[PlacticElement] = None) -> Dict[str, Any]:
    """
    JSON-ready form of a witness; words are in separated form.

    u and v are included when given so the object can be verified on its own.
    """
    data = {
        'equation': pair.equation,
        'left': format_word(pair.left.normal_form, STYLE_SEPARATED),
        'right': format_word(pair.right.normal_form, STYLE_SEPARATED),
        'common': format_word(pair.common_value.normal_form, STYLE_SEPARATED),
        'rank': pair.rank,
    }
    if u is not None:
        data['u'] = format_word(u.normal_form, STYLE_SEPARATED)
    if v is not None:
        data['v'] = format_word(v.normal_form, STYLE_SEPARATED)
    return data


def witness_from_dict(data: Dict[str, Any]) -> WitnessPair:
    """
    Rebuild a WitnessPair from witness_to_dict output.

    Raises:
        ValidationError: On missing fields, an unknown equation or unparsable words
    """
    if not isinstance(data, dict):
        raise ValidationError("Witness must be a JSON object", field_name="witness", invalid_value=data)
    missing = [key for key in ('equation', 'left', 'right', 'common') if key not in data]
    if missing:
        raise ValidationError(f"Witness is missing fields: {', '.join(missing)}", field_name="witness",
                              invalid_value=data, validation_rule="equation, left, right, common")
    if data['equation'] not in EQUATIONS:
        raise ValidationError(f"Unknown equation: {data['equation']!r}", field_name="equation",
                              invalid_value=data['equation'], validation_rule=" | ".join(EQUATIONS))
    try:
        left, right, common = (element_of(parse_word(str(data[key]), STYLE_SEPARATED))
                               for key in ('left', 'right', 'common'))
    except ParseError as e:
        raise ValidationError("Witness contains an unparsable word", field_name="witness",
                              invalid_value=data, original_error=e)
    return WitnessPair(left=left, right=right, equation=data['equation'], common_value=common,
                       rank=data.get('rank'))
