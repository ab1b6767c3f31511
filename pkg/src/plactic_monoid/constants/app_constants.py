"""
Application constants for the plactic monoid toolkit.
"""
import os

from plactic_monoid.exceptions import ValidationError

# Word text format
COMPACT_MAX_LETTER = 9
COMMENT_PREFIX = '#'
WORD_SEPARATORS = r'[\s,]+'
STYLE_COMPACT = 'compact'
STYLE_SEPARATED = 'separated'
WORD_STYLES = (STYLE_COMPACT, STYLE_SEPARATED)
STDIN_MARKER = '-'

# Knuth-class oracle
DEFAULT_CLASS_BUDGET = 100000
CLASS_BUDGET_ENV_VAR = 'PLACTIC_CLASS_BUDGET'
CLASS_PROGRESS_INTERVAL = 10000  # Log BFS progress every N states

# Equations solved by the reversibility module
EQUATION_LEFT = 'left'            # X u = Y v   (principal left ideals)
EQUATION_RIGHT = 'right'          # u X = v Y   (principal right ideals)
EQUATION_MIXED = 'mixed'          # u X = Y v
EQUATION_EQUAL_CONTENT = 'equal-content'  # X u = X v
EQUATIONS = (EQUATION_LEFT, EQUATION_RIGHT, EQUATION_MIXED, EQUATION_EQUAL_CONTENT)

SIDE_LEFT = 'left'
SIDE_RIGHT = 'right'

# Brute-force witness search
DEFAULT_SEARCH_MAX_LENGTH = 3

# Verification sweeps
SWEEP_KINDS = ('left', 'right', 'mixed', 'equal-content', 'infinite')
DEFAULT_SWEEP_COUNT = 1000
DEFAULT_SWEEP_RANKS = (2, 3, 4, 5)
DEFAULT_SWEEP_MAX_LENGTH = 8
DEFAULT_SWEEP_SEED = 0
INFINITE_SWEEP_MAX_LETTER = 12
SWEEP_CHUNK_SIZE = 100
MAX_REPORTED_FAILURES = 5

# CLI exit codes
EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2

# Application info
APP_NAME = "plactic"
APP_VERSION = "1.0"


def get_class_budget(override=None):
    """
    Resolve the Knuth-class BFS budget.

    Precedence: explicit override, then the PLACTIC_CLASS_BUDGET environment
    variable, then DEFAULT_CLASS_BUDGET.

    Raises:
        ValidationError: If the resolved value is not a positive integer
    """
    raw = override if override is not None else os.environ.get(CLASS_BUDGET_ENV_VAR)
    if raw is None or raw == '':
        return DEFAULT_CLASS_BUDGET

    try:
        budget = int(raw)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"Invalid class budget: {raw!r}", field_name=CLASS_BUDGET_ENV_VAR,
                              invalid_value=raw, validation_rule="positive integer", original_error=e)

    if budget < 1:
        raise ValidationError(f"Invalid class budget: {raw!r}", field_name=CLASS_BUDGET_ENV_VAR,
                              invalid_value=raw, validation_rule="positive integer")
    return budget
