"""
Custom exceptions for the plactic monoid toolkit.

This module defines a hierarchy of custom exceptions so that callers (and the
command-line front end) can tell bad input apart from violated preconditions
and exhausted resource budgets.
"""


class PlacticError(Exception):
    """
    Base exception for all plactic monoid errors.

    All custom exceptions in this package inherit from this class, so the CLI
    can catch every package-specific failure in one handler.
    """
    pass


class ParseError(PlacticError):
    """
    Exception raised when word text cannot be parsed.

    This includes:
    - Non-numeric tokens
    - Zero or negative letters
    - Malformed lines in word files

    Attributes:
        token: The offending token
        line_number: Line number where parsing failed (if applicable)
        original_error: The underlying exception that was caught
    """

    def __init__(self, message, token=None, line_number=None, original_error=None):
        self.token = token
        self.line_number = line_number
        self.original_error = original_error

        full_message = message
        if token is not None:
            full_message += f" (Token: {token!r})"
        if line_number:
            full_message += f" (Line: {line_number})"

        super().__init__(full_message)


class FormatError(PlacticError):
    """
    Exception raised when a word cannot be rendered in the requested style.

    Attributes:
        letter: The letter that could not be rendered
        style: The requested output style
    """

    def __init__(self, message, letter=None, style=None):
        self.letter = letter
        self.style = style

        full_message = message
        if letter is not None:
            full_message += f" (Letter: {letter})"
        if style:
            full_message += f" (Style: {style})"

        super().__init__(full_message)


class ValidationError(PlacticError):
    """
    Exception raised for contract violations.

    This includes:
    - Rows that do not form a semistandard tableau
    - Malformed witness objects
    - Invalid configuration values and command arguments

    Attributes:
        field_name: Name of the field that failed validation
        invalid_value: The value that failed validation
        validation_rule: The rule that was violated
        original_error: The underlying exception that was caught
    """

    def __init__(self, message, field_name=None, invalid_value=None, validation_rule=None, original_error=None):
        self.field_name = field_name
        self.invalid_value = invalid_value
        self.validation_rule = validation_rule
        self.original_error = original_error

        full_message = message
        if field_name:
            full_message += f" (Field: {field_name})"
        if validation_rule:
            full_message += f" (Rule: {validation_rule})"

        super().__init__(full_message)


class ContentMismatchError(ValidationError):
    """
    Raised when two elements must share their content but do not.

    Xu = Xv is only solvable for elements of equal content, so the
    equal-content solver refuses anything else.
    """

    def __init__(self, message, left_content=None, right_content=None):
        self.left_content = left_content
        self.right_content = right_content
        super().__init__(message, field_name="content", validation_rule="c(u) == c(v)")


class RankError(PlacticError):
    """
    Exception raised when a letter falls outside the alphabet {1, ..., n}.

    Attributes:
        letter: The letter (or generator index) that is out of range
        rank: The rank n of the ambient monoid
    """

    def __init__(self, message, letter=None, rank=None):
        self.letter = letter
        self.rank = rank

        full_message = message
        if letter is not None:
            full_message += f" (Letter: {letter})"
        if rank is not None:
            full_message += f" (Rank: {rank})"

        super().__init__(full_message)


class BudgetExceededError(PlacticError):
    """
    Exception raised when a brute-force search outgrows its state budget.

    Attributes:
        budget: The maximum number of states allowed
        explored: Number of states reached before giving up
    """

    def __init__(self, message, budget=None, explored=None):
        self.budget = budget
        self.explored = explored

        full_message = message
        if budget is not None:
            full_message += f" (Budget: {budget})"
        if explored is not None:
            full_message += f" (Explored: {explored})"

        super().__init__(full_message)


class FileOperationError(PlacticError):
    """
    Exception raised for file operation failures.

    Attributes:
        file_path: Path to the file that caused the error
        operation: Type of operation that failed (read, open, etc.)
        original_error: The underlying exception that was caught
    """

    def __init__(self, message, file_path=None, operation=None, original_error=None):
        self.file_path = file_path
        self.operation = operation
        self.original_error = original_error

        full_message = message
        if file_path:
            full_message += f" (File: {file_path})"
        if operation:
            full_message += f" (Operation: {operation})"

        super().__init__(full_message)


class MultiprocessingError(PlacticError):
    """
    Exception raised when a verification sweep worker fails.

    Attributes:
        worker_id: ID of the chunk/worker that failed (if applicable)
        operation: Operation that failed
        original_error: The underlying exception that was caught
    """

    def __init__(self, message, worker_id=None, operation=None, original_error=None):
        self.worker_id = worker_id
        self.operation = operation
        self.original_error = original_error

        full_message = message
        if worker_id is not None:
            full_message += f" (Worker: {worker_id})"
        if operation:
            full_message += f" (Operation: {operation})"

        super().__init__(full_message)
