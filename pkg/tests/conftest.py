"""
Pytest configuration and fixtures for the plactic monoid tests.
"""
import io
import itertools
import random
import shutil
import sys
import tempfile
from pathlib import Path

import pytest

# Add src directory to path for imports
src_path = Path(__file__).parent.parent / 'src'
sys.path.insert(0, str(src_path))

from plactic_monoid.components.cli import PlacticCLI
from plactic_monoid.models.tableau import Tableau
from plactic_monoid.models.word import Word
from plactic_monoid.services.plactic import element_of


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    temp_path = tempfile.mkdtemp()
    yield temp_path
    shutil.rmtree(temp_path, ignore_errors=True)


@pytest.fixture
def rng():
    """Seeded random generator so randomized tests are reproducible."""
    return random.Random(20240917)


# Running example fixtures
@pytest.fixture
def example_word():
    """Row reading of the running example tableau."""
    return Word([3, 4, 2, 3, 1, 1, 2, 2])


@pytest.fixture
def example_column_word():
    """Column reading of the running example tableau."""
    return Word([3, 2, 1, 4, 3, 1, 2, 2])


@pytest.fixture
def example_tableau():
    """Rows 1122 / 23 / 34, bottom row first."""
    return Tableau([[1, 1, 2, 2], [2, 3], [3, 4]])


@pytest.fixture
def words_up_to_length():
    """Factory: all words over {1..rank} of length <= max_length."""
    def _words(rank, max_length):
        return [
            Word(letters)
            for length in range(max_length + 1)
            for letters in itertools.product(range(1, rank + 1), repeat=length)
        ]
    return _words


@pytest.fixture
def element_factory():
    """Factory fixture building plactic elements from letter lists."""
    return lambda letters: element_of(letters)


# CLI fixtures
class CLIResult:
    def __init__(self, exit_code, stdout, stderr):
        self.exit_code = exit_code
        self.stdout = stdout
        self.stderr = stderr


@pytest.fixture
def run_cli():
    """Run the CLI in-process with captured streams."""
    def _run(*argv, stdin_text=''):
        stdout, stderr = io.StringIO(), io.StringIO()
        cli = PlacticCLI(stdout=stdout, stderr=stderr, stdin=io.StringIO(stdin_text))
        exit_code = cli.run(list(argv))
        return CLIResult(exit_code, stdout.getvalue(), stderr.getvalue())
    return _run


# Cleanup fixture
@pytest.fixture(autouse=True)
def cleanup_logs():
    """Clean up log files created during tests."""
    yield
    log_dir = Path('logs')
    if log_dir.exists():
        for log_file in log_dir.glob('*.log*'):
            try:
                log_file.unlink()
            except OSError:
                pass
