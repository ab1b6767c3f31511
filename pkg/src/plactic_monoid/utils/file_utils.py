"""
Utility functions for reading words and witness documents with error handling.
"""
import os
import sys
from typing import List, Optional, TextIO

from plactic_monoid.constants.app_constants import COMMENT_PREFIX, STDIN_MARKER
from plactic_monoid.exceptions import FileOperationError, ParseError
from plactic_monoid.models.word import Word, parse_word
from plactic_monoid.utils.logging_config import get_logger, log_exception

logger = get_logger(__name__)


def read_text_source(source: str, stdin: Optional[TextIO] = None) -> str:
    """
    Read all text from a file path, or from stdin when source is '-'.

    Args:
        source: File path or '-'
        stdin: Stream to use for '-' (defaults to sys.stdin)

    Returns:
        The full text

    Raises:
        FileOperationError: If the file cannot be read
    """
    if source == STDIN_MARKER:
        stream = stdin if stdin is not None else sys.stdin
        logger.debug("Reading from stdin")
        return stream.read()

    if not os.path.exists(source):
        error_msg = f"File not found: {source}"
        logger.error(error_msg)
        raise FileOperationError(error_msg, file_path=source, operation="read")

    if not os.access(source, os.R_OK):
        error_msg = f"File is not readable: {source}"
        logger.error(error_msg)
        raise FileOperationError(error_msg, file_path=source, operation="read")

    try:
        with open(source, 'r', encoding='utf-8') as f:
            return f.read()
    except PermissionError as e:
        error_msg = f"Permission denied reading file: {source}"
        logger.error(error_msg)
        raise FileOperationError(error_msg, file_path=source, operation="read", original_error=e)
    except (OSError, UnicodeDecodeError) as e:
        error_msg = f"I/O error reading file: {source}"
        log_exception(logger, e, error_msg, file_path=source)
        raise FileOperationError(error_msg, file_path=source, operation="read", original_error=e)


def parse_word_lines(text: str) -> List[Word]:
    """
    Parse one word per line, skipping blank lines and '#' comments.

    Raises:
        ParseError: With the 1-based line number of the first bad line
    """
    words = []
    for line_number, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        try:
            words.append(parse_word(stripped))
        except ParseError as e:
            raise ParseError(f"Invalid word on line {line_number}", token=e.token,
                             line_number=line_number, original_error=e)
    logger.debug(f"Parsed {len(words)} words")
    return words


def read_words(source: str, stdin: Optional[TextIO] = None) -> List[Word]:
    """Read one word per line from a file path or from stdin ('-')."""
    return parse_word_lines(read_text_source(source, stdin))
