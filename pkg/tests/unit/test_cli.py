"""
Unit tests for the command-line front end.
"""
import json
import logging
import os
from logging.handlers import RotatingFileHandler

import pytest

from plactic_monoid.components.cli import PlacticCLI, main
from plactic_monoid.utils.logging_config import PACKAGE_LOGGER


@pytest.mark.unit
@pytest.mark.cli
class TestUnaryVerbs:
    """Test verbs that take one or more words."""

    def test_normalize_column_reading(self, run_cli):
        result = run_cli('normalize', '32143122')
        assert result.exit_code == 0
        assert result.stdout == "34231122\n"

    def test_normalize_several_words(self, run_cli):
        result = run_cli('normalize', '32143122', '221')
        assert result.stdout.splitlines() == ["34231122", "212"]

    def test_normalize_large_letters(self, run_cli):
        result = run_cli('normalize', '10 2')
        assert result.stdout == "10 2\n"

    def test_normalize_separated_style(self, run_cli):
        result = run_cli('normalize', '--style', 'separated', '21')
        assert result.stdout == "2 1\n"

    def test_normalize_json(self, run_cli):
        result = run_cli('normalize', '--json', '32143122')
        assert json.loads(result.stdout) == {'word': '3 2 1 4 3 1 2 2', 'normal_form': '3 4 2 3 1 1 2 2'}

    def test_normalize_from_stdin(self, run_cli):
        result = run_cli('normalize', '-', stdin_text="# words\n32143122\n\n221\n")
        assert result.stdout.splitlines() == ["34231122", "212"]

    def test_empty_word_argument(self, run_cli):
        result = run_cli('normalize', '21', '', '12')
        assert result.stdout.splitlines() == ["21", "", "12"]

    def test_help_describes_word_input(self, capsys):
        assert PlacticCLI().run(['normalize', '--help']) == 0
        help_text = ' '.join(capsys.readouterr().out.split())
        assert "'' is the empty word" in help_text
        assert "skipping blank and '#' lines" in help_text

    def test_content(self, run_cli):
        result = run_cli('content', '34231122')
        assert result.stdout == "1:2 2:3 3:2 4:1\n"

    def test_content_json(self, run_cli):
        data = json.loads(run_cli('content', '--json', '331').stdout)
        assert data == {'word': '3 3 1', 'counts': {'1': 1, '3': 2}, 'rank': 3}

    def test_tableau(self, run_cli):
        result = run_cli('tableau', '34231122')
        assert result.stdout == "3 4\n2 3\n1 1 2 2\n"

    def test_tableau_json(self, run_cli):
        data = json.loads(run_cli('tableau', '--json', '34231122').stdout)
        assert data['rows'] == [[3, 4], [2, 3], [1, 1, 2, 2]]
        assert data['shape'] == [4, 2, 2]

    def test_two_tableaux_are_separated_by_a_blank_line(self, run_cli):
        assert run_cli('tableau', '21', '1').stdout == "2\n1\n\n1\n"

    @pytest.mark.parametrize("word,expected", [("32341", "41232"), ("432123", "234321")])
    def test_involute(self, run_cli, word, expected):
        result = run_cli('involute', word, '--rank', '4')
        assert result.exit_code == 0
        assert result.stdout == expected + "\n"

    def test_involute_default_rank(self, run_cli):
        # rank defaults to the largest letter, 3 here
        assert run_cli('involute', '31').stdout == "31\n"

    def test_involute_rank_too_small(self, run_cli):
        result = run_cli('involute', '5', '--rank', '3')
        assert result.exit_code == 2
        assert "plactic: error:" in result.stderr

    def test_class(self, run_cli):
        result = run_cli('class', '212')
        assert result.stdout.splitlines() == ["212", "221"]

    def test_class_contains_normal_form(self, run_cli):
        members = run_cli('class', '32143122').stdout.splitlines()
        normal = run_cli('normalize', '32143122').stdout.strip()
        assert normal in members
        assert "32143122" in members

    def test_class_json(self, run_cli):
        data = json.loads(run_cli('class', '--json', '132').stdout)
        assert data == {'word': '1 3 2', 'size': 2, 'members': ['1 3 2', '3 1 2']}

    def test_class_budget_option(self, run_cli):
        result = run_cli('class', '--budget', '2', '32143122')
        assert result.exit_code == 2
        assert "Budget" in result.stderr

    def test_class_budget_environment(self, run_cli, monkeypatch):
        monkeypatch.setenv('PLACTIC_CLASS_BUDGET', '3')
        result = run_cli('class', '32143122')
        assert result.exit_code == 2

    def test_invalid_budget_environment(self, run_cli, monkeypatch):
        monkeypatch.setenv('PLACTIC_CLASS_BUDGET', 'lots')
        result = run_cli('class', '12')
        assert result.exit_code == 2
        assert "PLACTIC_CLASS_BUDGET" in result.stderr


@pytest.mark.unit
@pytest.mark.cli
class TestBinaryVerbs:
    """Test verbs that take exactly two words."""

    def test_multiply(self, run_cli):
        assert run_cli('multiply', '2', '1').stdout == "21\n"

    def test_multiply_json(self, run_cli):
        data = json.loads(run_cli('multiply', '--json', '32', '1').stdout)
        assert data == {'u': '3 2', 'v': '1', 'product': '3 2 1'}

    def test_equal_true(self, run_cli):
        result = run_cli('equal', '212', '221')
        assert result.exit_code == 0
        assert result.stdout == "true\n"

    def test_equal_false(self, run_cli):
        result = run_cli('equal', '12', '21')
        assert result.exit_code == 1
        assert result.stdout == "false\n"

    def test_equal_json(self, run_cli):
        data = json.loads(run_cli('equal', '--json', '32143122', '34231122').stdout)
        assert data['equal'] is True

    def test_wrong_number_of_words(self, run_cli):
        result = run_cli('equal', '1', '2', '3')
        assert result.exit_code == 2
        assert "exactly two words" in result.stderr

    def test_solve_left_json(self, run_cli):
        result = run_cli('solve-left', '1', '2', '--rank', '2', '--json')
        assert result.exit_code == 0
        assert json.loads(result.stdout) == {
            'equation': 'left', 'left': '2 2', 'right': '2 1', 'common': '2 1 2',
            'rank': 2, 'u': '1', 'v': '2',
        }

    def test_solve_left_text(self, run_cli):
        result = run_cli('solve-left', '1', '2', '--rank', '2')
        assert result.stdout.splitlines() == ["left: 22", "right: 21", "common: 212"]

    def test_solve_right_text(self, run_cli):
        lines = run_cli('solve-right', '1', '2').stdout.splitlines()
        assert [line.split(':')[0] for line in lines] == ['left', 'right', 'common']

    def test_solve_mixed(self, run_cli):
        data = json.loads(run_cli('solve-mixed', '--json', '21', '12').stdout)
        assert data['left'] == '1 2'
        assert data['right'] == '2 1'
        assert data['equation'] == 'mixed'

    def test_solve_equal(self, run_cli):
        data = json.loads(run_cli('solve-equal', '--json', '12', '21').stdout)
        assert data['left'] == data['right'] == '2'
        assert data['common'] == '2 1 2'

    def test_solve_equal_content_mismatch(self, run_cli):
        result = run_cli('solve-equal', '1', '2')
        assert result.exit_code == 2
        assert "content" in result.stderr

    def test_solve_infinite_right(self, run_cli):
        data = json.loads(run_cli('solve-infinite', '--json', '--side', 'right', '5', '1').stdout)
        assert data['equation'] == 'right'
        assert data['rank'] == 5

    @pytest.mark.parametrize("verb", ['solve-left', 'solve-right', 'solve-mixed', 'solve-equal', 'solve-infinite'])
    def test_solve_rank_too_small(self, run_cli, verb):
        result = run_cli(verb, '31', '13', '--rank', '2')
        assert result.exit_code == 2
        assert "smaller than the largest letter" in result.stderr

    @pytest.mark.parametrize("verb", ['solve-mixed', 'solve-infinite'])
    def test_explicit_rank_is_honoured(self, run_cli, verb):
        result = run_cli(verb, '--json', '--rank', '7', '5', '1')
        assert result.exit_code == 0
        assert json.loads(result.stdout)['rank'] == 7
        assert run_cli('verify', stdin_text=result.stdout).exit_code == 0


@pytest.mark.unit
@pytest.mark.cli
class TestVerify:
    """Test witness verification."""

    def test_solver_output_verifies(self, run_cli):
        witness = run_cli('solve-right', '--json', '31', '22').stdout
        result = run_cli('verify', stdin_text=witness)
        assert result.exit_code == 0
        assert result.stdout == "valid\n"

    def test_tampered_witness(self, run_cli):
        data = json.loads(run_cli('solve-left', '--json', '1', '2').stdout)
        data['left'] = '2 2 2'
        result = run_cli('verify', stdin_text=json.dumps(data))
        assert result.exit_code == 1
        assert result.stdout == "invalid\n"

    def test_words_on_command_line(self, run_cli):
        witness = run_cli('solve-mixed', '--json', '1', '2').stdout
        assert run_cli('verify', '1', '2', stdin_text=witness).exit_code == 0
        assert run_cli('verify', '2', '1', stdin_text=witness).exit_code == 1

    def test_witness_file(self, run_cli, temp_dir):
        path = os.path.join(temp_dir, 'witness.json')
        with open(path, 'w', encoding='utf-8') as f:
            f.write(run_cli('solve-left', '--json', '12', '3').stdout)
        result = run_cli('verify', '--witness', path, '--json')
        assert json.loads(result.stdout) == {'equation': 'left', 'valid': True}

    def test_missing_witness_file(self, run_cli, temp_dir):
        result = run_cli('verify', '--witness', os.path.join(temp_dir, 'missing.json'))
        assert result.exit_code == 2
        assert "File not found" in result.stderr

    def test_invalid_json(self, run_cli):
        result = run_cli('verify', stdin_text="{not json")
        assert result.exit_code == 2
        assert "not valid JSON" in result.stderr

    def test_witness_without_words(self, run_cli):
        witness = json.dumps({'equation': 'mixed', 'left': '2', 'right': '1', 'common': '1 2'})
        result = run_cli('verify', stdin_text=witness)
        assert result.exit_code == 2
        assert "needs u and v" in result.stderr


@pytest.mark.unit
@pytest.mark.cli
class TestSweep:
    """Test the sweep verb."""

    def test_sweep_text(self, run_cli):
        result = run_cli('sweep', '--kind', 'mixed', '--count', '20', '--workers', '1')
        assert result.exit_code == 0
        assert result.stdout.startswith("mixed: 20/20 passed in ")

    def test_sweep_json(self, run_cli):
        result = run_cli('sweep', '--kind', 'equal-content', '--count', '10', '--ranks', '2,3',
                         '--workers', '1', '--json')
        data = json.loads(result.stdout)
        assert data['total'] == 10
        assert data['failed'] == 0

    def test_sweep_bad_ranks(self, run_cli):
        result = run_cli('sweep', '--ranks', 'two,three', '--workers', '1')
        assert result.exit_code == 2
        assert "Invalid rank list" in result.stderr

    def test_sweep_unknown_kind(self, run_cli):
        assert run_cli('sweep', '--kind', 'sideways').exit_code == 2


@pytest.mark.unit
@pytest.mark.cli
class TestErrors:
    """Test argument and input errors."""

    def test_no_verb(self, run_cli):
        assert run_cli().exit_code == 2

    def test_unknown_verb(self, run_cli):
        assert run_cli('factor', '12').exit_code == 2

    def test_bad_letter(self, run_cli):
        result = run_cli('normalize', '1x2')
        assert result.exit_code == 2
        assert "Token" in result.stderr

    def test_bad_line_on_stdin(self, run_cli):
        result = run_cli('normalize', '-', stdin_text="12\n1 0 2\n")
        assert result.exit_code == 2
        assert "Line: 2" in result.stderr

    def test_version(self, run_cli):
        assert run_cli('--version').exit_code == 0

    def test_unexpected_exception(self, run_cli, mocker):
        mocker.patch('plactic_monoid.components.cli.element_of', side_effect=RuntimeError("kaboom"))
        result = run_cli('normalize', '12')
        assert result.exit_code == 2
        assert "internal error: kaboom" in result.stderr

    def test_main_uses_real_streams(self, capsys):
        assert main(['multiply', '1', '2']) == 0
        assert capsys.readouterr().out == "12\n"

    def test_default_streams(self):
        import sys
        cli = PlacticCLI()
        assert cli.stdout is sys.stdout
        assert cli.stdin is sys.stdin


@pytest.mark.unit
@pytest.mark.cli
class TestVerbosity:
    """Test that -v raises console logging."""

    @staticmethod
    def _console_level():
        handlers = logging.getLogger(PACKAGE_LOGGER).handlers
        console = [h for h in handlers if not isinstance(h, RotatingFileHandler)]
        return console[0].level

    @pytest.mark.parametrize("flags,level", [
        ([], logging.WARNING),
        (['-v'], logging.INFO),
        (['-vv'], logging.DEBUG),
        (['-vvv'], logging.DEBUG),
    ])
    def test_console_level(self, run_cli, flags, level):
        assert run_cli('normalize', *flags, '21').exit_code == 0
        assert self._console_level() == level

    def test_verbose_uses_set_log_level(self, run_cli, mocker):
        spy = mocker.patch('plactic_monoid.components.cli.set_log_level')
        run_cli('normalize', '-vv', '21')
        spy.assert_any_call(logging.DEBUG, 'console')
        spy.assert_any_call(logging.DEBUG, 'file')
