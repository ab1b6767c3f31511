"""
Command-line front end for the plactic monoid toolkit.
"""
import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from plactic_monoid.constants.app_constants import (
    APP_NAME,
    APP_VERSION,
    DEFAULT_SWEEP_COUNT,
    DEFAULT_SWEEP_MAX_LENGTH,
    DEFAULT_SWEEP_RANKS,
    DEFAULT_SWEEP_SEED,
    EXIT_ERROR,
    EXIT_FALSE,
    EXIT_OK,
    SIDE_LEFT,
    SIDE_RIGHT,
    STDIN_MARKER,
    STYLE_SEPARATED,
    SWEEP_KINDS,
    WORD_STYLES,
)
from plactic_monoid.exceptions import PlacticError, ValidationError
from plactic_monoid.models.word import Word, content_of, format_word, format_word_auto, parse_word
from plactic_monoid.services.batch_sweep import BatchSweeper
from plactic_monoid.services.involution import RankContext, theta_word
from plactic_monoid.services.plactic import element_of, equals, knuth_class, multiply
from plactic_monoid.services.reversibility import (
    solve_equal_content,
    solve_infinite,
    solve_left,
    solve_mixed,
    solve_right,
    verify_witness,
    witness_from_dict,
    witness_to_dict,
)
from plactic_monoid.utils.file_utils import read_text_source, read_words
from plactic_monoid.utils.logging_config import (
    LOG_LEVEL_DEBUG,
    LOG_LEVEL_INFO,
    get_logger,
    log_command,
    log_exception,
    set_log_level,
    setup_logging,
)

logger = get_logger(__name__)

UNARY_VERBS = ('normalize', 'content', 'tableau', 'involute', 'class')
BINARY_VERBS = ('multiply', 'equal', 'solve-left', 'solve-right', 'solve-mixed', 'solve-equal', 'solve-infinite')


class PlacticCLI:
    """Parses a command line, runs one verb and reports an exit status."""

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None,
                 stdin: Optional[TextIO] = None):
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        self.stdin = stdin if stdin is not None else sys.stdin
        self.args = None
        self._handlers: Dict[str, Callable[[List[Word]], int]] = {
            'normalize': self._normalize,
            'content': self._content,
            'tableau': self._tableau,
            'involute': self._involute,
            'class': self._class,
            'multiply': self._multiply,
            'equal': self._equal,
            'solve-left': self._solve,
            'solve-right': self._solve,
            'solve-mixed': self._solve,
            'solve-equal': self._solve,
            'solve-infinite': self._solve,
            'verify': self._verify,
            'sweep': self._sweep,
        }

    def build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--json', action='store_true', help="emit JSON instead of text")
        common.add_argument('--rank', type=int, default=None,
                            help="rank n of P_n (default: largest letter of the inputs)")
        common.add_argument('--style', choices=WORD_STYLES, default=None,
                            help="word output style in text mode (default: compact when possible)")
        common.add_argument('--budget', type=int, default=None,
                            help="Knuth-class state budget (overrides PLACTIC_CLASS_BUDGET)")
        common.add_argument('-v', '--verbose', action='count', default=0, help="more log output on stderr")
        common.add_argument('--log-file', action='store_true', help="also log to logs/plactic.log")

        parser = argparse.ArgumentParser(prog=APP_NAME, description="Plactic monoid normal forms and ideal-intersection witnesses")
        parser.add_argument('--version', action='version', version=f"{APP_NAME} {APP_VERSION}")
        verbs = parser.add_subparsers(dest='verb', required=True)

        word_help = ("word as digits (34231122) or separated integers ('10 2 10'); '' is the empty word; "
                     "'-' reads one per line from stdin, skipping blank and '#' lines")
        for verb in UNARY_VERBS:
            sub = verbs.add_parser(verb, parents=[common])
            sub.add_argument('words', nargs='+', help=word_help)
        for verb in BINARY_VERBS:
            sub = verbs.add_parser(verb, parents=[common])
            sub.add_argument('words', nargs='+', help=word_help)
            if verb == 'solve-infinite':
                sub.add_argument('--side', choices=(SIDE_LEFT, SIDE_RIGHT), default=SIDE_LEFT)

        verify = verbs.add_parser('verify', parents=[common])
        verify.add_argument('words', nargs='*', help="u and v (default: the u, v fields of the witness)")
        verify.add_argument('--witness', default=STDIN_MARKER, help="witness JSON file, or '-' for stdin")

        sweep = verbs.add_parser('sweep', parents=[common])
        sweep.add_argument('--kind', choices=SWEEP_KINDS, default='left')
        sweep.add_argument('--count', type=int, default=DEFAULT_SWEEP_COUNT)
        sweep.add_argument('--seed', type=int, default=DEFAULT_SWEEP_SEED)
        sweep.add_argument('--max-length', type=int, default=DEFAULT_SWEEP_MAX_LENGTH)
        sweep.add_argument('--ranks', default=','.join(str(r) for r in DEFAULT_SWEEP_RANKS),
                           help="comma-separated ranks to draw from")
        sweep.add_argument('--workers', type=int, default=None)
        sweep.set_defaults(words=[])

        return parser

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        parser = self.build_parser()
        try:
            self.args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_ERROR

        setup_logging(log_to_file=self.args.log_file)
        if self.args.verbose:
            set_log_level((LOG_LEVEL_INFO, LOG_LEVEL_DEBUG)[min(self.args.verbose, 2) - 1], 'console')
        if self.args.verbose >= 2:
            set_log_level(LOG_LEVEL_DEBUG, 'file')
        log_command(logger, self.args.verb, words=self.args.words, rank=self.args.rank, json=self.args.json)

        try:
            words = self._read_words(self.args.words)
            return self._handlers[self.args.verb](words)
        except PlacticError as e:
            logger.debug(f"{self.args.verb} failed: {e!r}")
            print(f"{APP_NAME}: error: {e}", file=self.stderr)
            return EXIT_ERROR
        except Exception as e:
            log_exception(logger, e, f"Unexpected failure in {self.args.verb}")
            print(f"{APP_NAME}: internal error: {e}", file=self.stderr)
            return EXIT_ERROR

    def _read_words(self, raw_words: Sequence[str]) -> List[Word]:
        words = []
        for raw in raw_words:
            if raw == STDIN_MARKER:
                words.extend(read_words(STDIN_MARKER, self.stdin))
            else:
                words.append(parse_word(raw))
        return words

    def _expect_pair(self, words: List[Word]):
        if len(words) != 2:
            raise ValidationError(f"'{self.args.verb}' takes exactly two words, got {len(words)}",
                                  field_name="words", invalid_value=len(words), validation_rule="exactly 2")
        return words

    def _fmt(self, w) -> str:
        letters = w.normal_form if hasattr(w, 'normal_form') else w
        if self.args.json:
            return format_word(letters, STYLE_SEPARATED)
        if self.args.style:
            return format_word(letters, self.args.style)
        return format_word_auto(letters)

    def _emit(self, text_line: str, payload: Dict[str, object]) -> None:
        if self.args.json:
            print(json.dumps(payload, sort_keys=True), file=self.stdout)
        else:
            print(text_line, file=self.stdout)

    # Unary verbs

    def _normalize(self, words: List[Word]) -> int:
        for w in words:
            normal = element_of(w)
            self._emit(self._fmt(normal), {'word': self._fmt(w), 'normal_form': self._fmt(normal)})
        return EXIT_OK

    def _content(self, words: List[Word]) -> int:
        for w in words:
            content = content_of(w)
            text = ' '.join(f"{letter}:{count}" for letter, count in content.items())
            self._emit(text, {'word': self._fmt(w), 'counts': {str(k): c for k, c in content.items()},
                              'rank': content.rank})
        return EXIT_OK

    def _tableau(self, words: List[Word]) -> int:
        for index, w in enumerate(words):
            t = element_of(w).tableau
            if not self.args.json and index:
                print(file=self.stdout)
            self._emit(t.pretty(), {'word': self._fmt(w), 'rows': [list(row) for row in reversed(t.rows)],
                                    'shape': list(t.shape)})
        return EXIT_OK

    def _involute(self, words: List[Word]) -> int:
        for w in words:
            ctx = RankContext.for_words(w, rank=self.args.rank)
            theta = theta_word(w, ctx)
            self._emit(self._fmt(theta), {'word': self._fmt(w), 'rank': ctx.n, 'theta': self._fmt(theta)})
        return EXIT_OK

    def _class(self, words: List[Word]) -> int:
        for w in words:
            members = sorted(knuth_class(w, self.args.budget))
            if self.args.json:
                self._emit('', {'word': self._fmt(w), 'size': len(members),
                                'members': [self._fmt(m) for m in members]})
            else:
                for member in members:
                    print(self._fmt(member), file=self.stdout)
        return EXIT_OK

    # Binary verbs

    def _multiply(self, words: List[Word]) -> int:
        u, v = (element_of(w) for w in self._expect_pair(words))
        product = multiply(u, v)
        self._emit(self._fmt(product), {'u': self._fmt(u), 'v': self._fmt(v), 'product': self._fmt(product)})
        return EXIT_OK

    def _equal(self, words: List[Word]) -> int:
        u, v = (element_of(w) for w in self._expect_pair(words))
        same = equals(u, v)
        self._emit('true' if same else 'false', {'u': self._fmt(words[0]), 'v': self._fmt(words[1]), 'equal': same})
        return EXIT_OK if same else EXIT_FALSE

    def _solve(self, words: List[Word]) -> int:
        u_word, v_word = self._expect_pair(words)
        u, v = element_of(u_word), element_of(v_word)
        verb = self.args.verb

        n = RankContext.for_words(u_word, v_word, rank=self.args.rank).n
        if verb == 'solve-mixed':
            pair = solve_mixed(u, v, n)
        elif verb == 'solve-infinite':
            pair = solve_infinite(u, v, self.args.side, n)
        else:
            solver = {'solve-left': solve_left, 'solve-right': solve_right, 'solve-equal': solve_equal_content}[verb]
            pair = solver(u, v, n)

        logger.info(f"{verb}: left={list(pair.left.normal_form)} right={list(pair.right.normal_form)}")
        if self.args.json:
            print(json.dumps(witness_to_dict(pair, u, v), sort_keys=True), file=self.stdout)
        else:
            print(f"left: {self._fmt(pair.left)}", file=self.stdout)
            print(f"right: {self._fmt(pair.right)}", file=self.stdout)
            print(f"common: {self._fmt(pair.common_value)}", file=self.stdout)
        return EXIT_OK

    def _verify(self, words: List[Word]) -> int:
        text = read_text_source(self.args.witness, self.stdin)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError("Witness is not valid JSON", field_name="witness", original_error=e)
        pair = witness_from_dict(data)

        if words:
            u_word, v_word = self._expect_pair(words)
        elif isinstance(data, dict) and 'u' in data and 'v' in data:
            u_word = parse_word(str(data['u']), STYLE_SEPARATED)
            v_word = parse_word(str(data['v']), STYLE_SEPARATED)
        else:
            raise ValidationError("verify needs u and v, as arguments or as witness fields",
                                  field_name="words", validation_rule="u and v")

        valid = verify_witness(pair, element_of(u_word), element_of(v_word))
        self._emit('valid' if valid else 'invalid', {'equation': pair.equation, 'valid': valid})
        return EXIT_OK if valid else EXIT_FALSE

    def _sweep(self, words: List[Word]) -> int:
        try:
            ranks = tuple(int(r) for r in self.args.ranks.split(',') if r.strip())
        except ValueError as e:
            raise ValidationError(f"Invalid rank list: {self.args.ranks!r}", field_name="ranks",
                                  invalid_value=self.args.ranks, original_error=e)

        sweeper = BatchSweeper(max_workers=self.args.workers)
        report = sweeper.run(self.args.kind, count=self.args.count, ranks=ranks,
                             max_length=self.args.max_length, seed=self.args.seed,
                             progress_callback=logger.debug)
        text = f"{report.kind}: {report.passed}/{report.total} passed in {report.duration:.2f}s"
        self._emit(text, report.to_dict())
        if not self.args.json:
            for failure in report.failures:
                print(f"  counterexample: {failure}", file=self.stdout)
        return EXIT_OK if report.ok else EXIT_FALSE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point."""
    return PlacticCLI().run(argv)
