"""
Randomized verification sweeps for the ideal-intersection solvers.

Cases are generated deterministically from a seed, split into chunks and
checked on all CPU cores. Each case solves an equation for a random pair and
re-verifies the witness independently.
"""
import multiprocessing as mp
import random
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from plactic_monoid.constants.app_constants import (
    DEFAULT_SWEEP_COUNT,
    DEFAULT_SWEEP_MAX_LENGTH,
    DEFAULT_SWEEP_RANKS,
    DEFAULT_SWEEP_SEED,
    INFINITE_SWEEP_MAX_LETTER,
    MAX_REPORTED_FAILURES,
    SIDE_LEFT,
    SIDE_RIGHT,
    SWEEP_CHUNK_SIZE,
    SWEEP_KINDS,
)
from plactic_monoid.exceptions import MultiprocessingError, ValidationError
from plactic_monoid.models.word import Word
from plactic_monoid.services.plactic import element_of, multiply
from plactic_monoid.services.reversibility import (
    closed_form_product,
    equal_content_witness,
    solve_infinite,
    solve_left,
    solve_mixed,
    solve_right,
    verify_witness,
)
from plactic_monoid.utils.logging_config import get_logger, log_exception, log_performance

logger = get_logger(__name__)


@dataclass
class SweepReport:
    """Outcome of a sweep."""
    kind: str
    total: int = 0
    passed: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)
    duration: float = 0.0
    workers: int = 1

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def to_dict(self) -> Dict[str, object]:
        return {
            'kind': self.kind,
            'total': self.total,
            'passed': self.passed,
            'failed': self.total - self.passed,
            'failures': self.failures[:MAX_REPORTED_FAILURES],
            'duration': round(self.duration, 3),
            'workers': self.workers,
        }


def random_word(rng: random.Random, rank: int, max_length: int) -> Word:
    """Uniform length in 0..max_length, uniform letters in 1..rank."""
    length = rng.randint(0, max_length)
    return Word._trusted(rng.randint(1, rank) for _ in range(length))


def random_pair(rng: random.Random, rank: int, max_length: int) -> Tuple[Word, Word]:
    return random_word(rng, rank, max_length), random_word(rng, rank, max_length)


def shuffled_pair(rng: random.Random, rank: int, max_length: int) -> Tuple[Word, Word]:
    """A random word and a random rearrangement of it (equal content)."""
    u = random_word(rng, rank, max_length)
    letters = list(u)
    rng.shuffle(letters)
    return u, Word._trusted(letters)


def _check_case(kind: str, rng: random.Random, ranks: Sequence[int], max_length: int) -> Optional[Dict[str, object]]:
    """Run one random case; return a failure record or None."""
    if kind == 'infinite':
        u_word, v_word = random_pair(rng, INFINITE_SWEEP_MAX_LETTER, max_length)
        side = SIDE_LEFT if rng.random() < 0.5 else SIDE_RIGHT
        u, v = element_of(u_word), element_of(v_word)
        pair = solve_infinite(u, v, side)
        passed = verify_witness(pair, u, v)
        rank = pair.rank
    else:
        rank = rng.choice(list(ranks))
        if kind == 'equal-content':
            u_word, v_word = shuffled_pair(rng, rank, max_length)
            u, v = element_of(u_word), element_of(v_word)
            witness = equal_content_witness(u, v, rank)
            product = multiply(witness.witness, u)
            passed = (product == multiply(witness.witness, v)
                      and product == closed_form_product(witness.exponents, u.content, rank))
        else:
            u_word, v_word = random_pair(rng, rank, max_length)
            u, v = element_of(u_word), element_of(v_word)
            if kind == 'left':
                pair = solve_left(u, v, rank)
            elif kind == 'right':
                pair = solve_right(u, v, rank)
            else:
                pair = solve_mixed(u, v)
            passed = verify_witness(pair, u, v)

    if passed:
        return None
    return {'u': list(u_word), 'v': list(v_word), 'rank': rank}


def verify_chunk(args):
    """Check one chunk of cases (module-level function for multiprocessing compatibility)."""
    kind, chunk_id, count, ranks, max_length, seed = args
    try:
        rng = random.Random(seed * 1_000_003 + chunk_id)
        failures = []
        for _ in range(count):
            failure = _check_case(kind, rng, ranks, max_length)
            if failure is not None:
                failures.append(failure)
        return {
            'chunk_id': chunk_id,
            'checked': count,
            'failures': failures,
            'success': True
        }
    except Exception as e:
        return {
            'chunk_id': chunk_id,
            'error': str(e),
            'success': False
        }


class BatchSweeper:
    """Parallel sweep manager."""

    def __init__(self, max_workers: Optional[int] = None, chunk_size: int = SWEEP_CHUNK_SIZE):
        self.max_workers = max_workers or get_max_parallel_workers()
        self.chunk_size = chunk_size

    def _chunks(self, kind, count, ranks, max_length, seed):
        chunks = []
        for chunk_id, start in enumerate(range(0, count, self.chunk_size)):
            chunks.append((kind, chunk_id, min(self.chunk_size, count - start), tuple(ranks), max_length, seed))
        return chunks

    def run(self, kind: str, count: int = DEFAULT_SWEEP_COUNT, ranks: Sequence[int] = DEFAULT_SWEEP_RANKS,
            max_length: int = DEFAULT_SWEEP_MAX_LENGTH, seed: int = DEFAULT_SWEEP_SEED,
            progress_callback: Optional[Callable[[str], None]] = None) -> SweepReport:
        """
        Run count random cases of the given kind.

        Raises:
            ValidationError: On an unknown kind or invalid parameters
            MultiprocessingError: If a chunk raises while checking its cases
        """
        if kind not in SWEEP_KINDS:
            raise ValidationError(f"Unknown sweep kind: {kind}", field_name="kind", invalid_value=kind,
                                  validation_rule=" | ".join(SWEEP_KINDS))
        if count < 0 or max_length < 0 or not ranks or min(ranks) < 1:
            raise ValidationError("Sweep needs count >= 0, max_length >= 0 and ranks >= 1",
                                  field_name="sweep", invalid_value=(count, tuple(ranks), max_length))

        start_time = time.perf_counter()
        chunks = self._chunks(kind, count, ranks, max_length, seed)
        report = SweepReport(kind=kind, workers=self.max_workers)

        if self.max_workers > 1 and len(chunks) > 1:
            results = self._run_parallel(chunks, progress_callback)
        else:
            report.workers = 1
            results = self._run_sequential(chunks, progress_callback)

        for result in sorted(results, key=lambda r: r['chunk_id']):
            if not result['success']:
                raise MultiprocessingError(f"Sweep chunk failed: {result.get('error', 'Unknown error')}",
                                           worker_id=result['chunk_id'], operation=f"sweep:{kind}")
            report.total += result['checked']
            report.passed += result['checked'] - len(result['failures'])
            report.failures.extend(result['failures'])

        report.duration = time.perf_counter() - start_time
        log_performance(logger, f"sweep:{kind}", report.duration,
                        total=report.total, passed=report.passed, workers=report.workers)
        return report

    def _run_parallel(self, chunks, progress_callback=None):
        if progress_callback:
            progress_callback(f"Starting parallel sweep of {len(chunks)} chunks on {self.max_workers} cores...")

        results = []
        try:
            with ProcessPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_chunk = {executor.submit(verify_chunk, args): args[1] for args in chunks}

                for future in as_completed(future_to_chunk):
                    chunk_id = future_to_chunk[future]
                    result = future.result()
                    if not result['success']:
                        logger.warning(f"Chunk {chunk_id} failed in worker: {result.get('error')}")
                    results.append(result)

                    if progress_callback:
                        progress = (len(results) / len(chunks)) * 100
                        progress_callback(f"Sweeping: {progress:.0f}%")

        except Exception as e:
            log_exception(logger, e, "Parallel sweep failed, falling back to sequential execution")
            return self._run_sequential(chunks, progress_callback)

        return results

    def _run_sequential(self, chunks, progress_callback=None):
        if progress_callback:
            progress_callback("Using sequential mode...")
        results = []
        for args in chunks:
            results.append(verify_chunk(args))
            if progress_callback:
                progress_callback(f"Sweeping: {len(results) * 100 // max(len(chunks), 1)}%")
        return results


def get_max_parallel_workers() -> int:
    """Returns the number of worker processes to use for a sweep."""
    cpu_count = mp.cpu_count()
    if cpu_count >= 8:
        return cpu_count
    return max(1, cpu_count - 1)
