"""
Integration tests for complete command-line workflows.
"""
import json
from pathlib import Path
from unittest.mock import patch

import pytest
from hypothesis import HealthCheck, given, settings

from tests.strategies import ranked_words


def spaced(word):
    return ' '.join(str(letter) for letter in word)


@pytest.mark.integration
@pytest.mark.cli
class TestCLIWorkflow:
    """Chain CLI verbs the way a script would."""

    def test_word_file_to_tableaux(self, run_cli, temp_dir):
        words_file = Path(temp_dir) / 'words.txt'
        words_file.write_text("# column readings\n32143122\n321\n", encoding='utf-8')
        stdin_text = words_file.read_text(encoding='utf-8')

        normalized = run_cli('normalize', '-', stdin_text=stdin_text)
        assert normalized.stdout.splitlines() == ["34231122", "321"]

        tableaux = run_cli('tableau', '-', stdin_text=normalized.stdout)
        assert tableaux.stdout == "3 4\n2 3\n1 1 2 2\n\n3\n2\n1\n"

    @pytest.mark.parametrize("verb", ['solve-left', 'solve-right', 'solve-mixed', 'solve-infinite'])
    def test_solve_then_verify(self, run_cli, verb):
        solved = run_cli(verb, '--json', '3 1 4', '2 2 5')
        assert solved.exit_code == 0

        verified = run_cli('verify', '--json', stdin_text=solved.stdout)
        assert verified.exit_code == 0
        assert json.loads(verified.stdout)['valid'] is True

    def test_witness_common_value_is_in_both_ideals(self, run_cli):
        witness = json.loads(run_cli('solve-left', '--json', '12', '2').stdout)
        left_product = run_cli('multiply', witness['left'], witness['u'], '--style', 'separated')
        right_product = run_cli('multiply', witness['right'], witness['v'], '--style', 'separated')
        assert left_product.stdout.strip() == right_product.stdout.strip() == witness['common']

    def test_equal_content_pair(self, run_cli):
        witness = json.loads(run_cli('solve-equal', '--json', '1213', '3211').stdout)
        assert witness['left'] == witness['right']
        check = run_cli('equal', f"{witness['left']} 1 2 1 3", f"{witness['left']} 3 2 1 1")
        assert check.exit_code == 0

    def test_class_members_all_normalize_alike(self, run_cli):
        members = run_cli('class', '2132').stdout.splitlines()
        normal_forms = {run_cli('normalize', m).stdout for m in members}
        assert len(normal_forms) == 1

    def test_log_file_option(self, run_cli, temp_dir):
        with patch('plactic_monoid.utils.logging_config.LOG_DIR', temp_dir):
            result = run_cli('normalize', '--log-file', '21')

        assert result.exit_code == 0
        log_text = (Path(temp_dir) / 'plactic.log').read_text(encoding='utf-8')
        assert "Command: normalize" in log_text

    @pytest.mark.slow
    def test_sweep_all_kinds(self, run_cli):
        for kind in ('left', 'right', 'mixed', 'equal-content', 'infinite'):
            result = run_cli('sweep', '--kind', kind, '--count', '200', '--json')
            assert result.exit_code == 0
            assert json.loads(result.stdout)['failed'] == 0


@pytest.mark.integration
@pytest.mark.cli
class TestCLIProperties:
    """CLI round trips on generated words."""

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(data=ranked_words(count=2))
    def test_solve_left_output_verifies(self, run_cli, data):
        _, u, v = data
        solved = run_cli('solve-left', '--json', spaced(u), spaced(v))
        assert solved.exit_code == 0

        verified = run_cli('verify', stdin_text=solved.stdout)
        assert verified.exit_code == 0
        assert verified.stdout == "valid\n"

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(data=ranked_words(count=1, max_size=9))
    def test_normalize_is_idempotent(self, run_cli, data):
        _, w = data
        once = run_cli('normalize', spaced(w))
        twice = run_cli('normalize', once.stdout.strip())
        assert once.exit_code == twice.exit_code == 0
        assert twice.stdout == once.stdout
