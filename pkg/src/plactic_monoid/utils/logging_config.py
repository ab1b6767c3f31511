"""
Centralized logging configuration for the plactic monoid toolkit.

Console output goes to stderr so that stdout stays reserved for words, tableaux
and JSON witnesses. File logging is optional and rotates.
"""
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path


# Log levels
LOG_LEVEL_DEBUG = logging.DEBUG
LOG_LEVEL_INFO = logging.INFO
LOG_LEVEL_WARNING = logging.WARNING
LOG_LEVEL_ERROR = logging.ERROR
LOG_LEVEL_CRITICAL = logging.CRITICAL

# Default log format
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(funcName)s:%(lineno)d - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# Console format (simpler for user-facing messages)
CONSOLE_FORMAT = '%(levelname)s - %(message)s'

# Log file settings
LOG_DIR = 'logs'
LOG_FILE = 'plactic.log'
MAX_LOG_SIZE = 10 * 1024 * 1024  # 10 MB
BACKUP_COUNT = 5

PACKAGE_LOGGER = 'plactic_monoid'


def setup_logging(log_level=LOG_LEVEL_INFO, console_level=LOG_LEVEL_WARNING, log_to_file=False, log_to_console=True):
    """
    Configure the package logger.

    This function sets up:
    - Optional file handler with rotation (logs/plactic.log)
    - Console handler on stderr
    - Structured formatting with timestamps and context

    Args:
        log_level: Minimum level for file logging (default: INFO)
        console_level: Minimum level for console logging (default: WARNING)
        log_to_file: Enable file logging (default: False)
        log_to_console: Enable console logging (default: True)

    Returns:
        logging.Logger: Configured package logger
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(LOG_LEVEL_DEBUG)  # Capture everything, handlers will filter
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    if log_to_file:
        try:
            log_dir_path = Path(LOG_DIR)
            log_dir_path.mkdir(parents=True, exist_ok=True)

            file_handler = RotatingFileHandler(
                log_dir_path / LOG_FILE,
                maxBytes=MAX_LOG_SIZE,
                backupCount=BACKUP_COUNT,
                encoding='utf-8'
            )
            file_handler.setLevel(log_level)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
            logger.addHandler(file_handler)

        except Exception as e:
            # If file logging fails, at least log to console
            print(f"Warning: Could not set up file logging: {e}", file=sys.stderr)

    if log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(console_level)
        console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        logger.addHandler(console_handler)

    if not logger.handlers:
        logger.addHandler(logging.NullHandler())

    logger.debug(f"Logging initialized (file={logging.getLevelName(log_level) if log_to_file else 'off'}, "
                 f"console={logging.getLevelName(console_level) if log_to_console else 'off'})")

    return logger


def get_logger(name):
    """
    Get a logger instance for a specific module.

    Args:
        name: Name of the module (typically __name__)

    Returns:
        logging.Logger: Logger for the module
    """
    return logging.getLogger(name)


def log_exception(logger, exc, message="An error occurred", **kwargs):
    """
    Log an exception with full stack trace and context.

    Args:
        logger: Logger instance to use
        exc: Exception object to log
        message: Custom message to prefix the error
        **kwargs: Additional context to log (key-value pairs)
    """
    context = " | ".join(f"{k}={v}" for k, v in kwargs.items())
    full_message = f"{message}: {exc}"
    if context:
        full_message += f" | Context: {context}"

    logger.error(full_message, exc_info=True)


def set_log_level(level, handler_type='all'):
    """
    Change the logging level at runtime.

    Args:
        level: New log level (logging.DEBUG, INFO, WARNING, ERROR, CRITICAL)
        handler_type: Which handlers to update ('file', 'console', or 'all')
    """
    logger = logging.getLogger(PACKAGE_LOGGER)

    for handler in logger.handlers:
        is_file = isinstance(handler, RotatingFileHandler)
        if handler_type == 'all':
            handler.setLevel(level)
        elif handler_type == 'file' and is_file:
            handler.setLevel(level)
        elif handler_type == 'console' and isinstance(handler, logging.StreamHandler) and not is_file:
            handler.setLevel(level)


def log_performance(logger, operation, duration, **kwargs):
    """
    Log performance metrics for operations.

    Args:
        logger: Logger instance to use
        operation: Name of the operation
        duration: Duration in seconds
        **kwargs: Additional metrics (pairs_checked, states_explored, etc.)
    """
    metrics = " | ".join(f"{k}={v}" for k, v in kwargs.items())
    message = f"Performance: {operation} completed in {duration:.3f}s"
    if metrics:
        message += f" | Metrics: {metrics}"

    logger.info(message)


def log_command(logger, verb, **kwargs):
    """
    Log a CLI invocation for the audit trail.

    Args:
        logger: Logger instance to use
        verb: The command verb being executed
        **kwargs: Additional context (words, rank, output mode)
    """
    context = " | ".join(f"{k}={v}" for k, v in kwargs.items())
    message = f"Command: {verb}"
    if context:
        message += f" | Context: {context}"

    logger.info(message)
