import json
import os
import subprocess
import sys

import pytest


def run_cli(*args, env_extra=None, stdin=None):
    env = dict(os.environ)
    env.pop("ORDERMAPS_FORMAT", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "ordermaps", *args],
        capture_output=True,
        text=True,
        env=env,
        input=stdin,
    )


class TestCount:
    def test_poi_2_prints_the_number(self):
        result = run_cli("count", "--family", "poi", "--n", "2")
        assert result.returncode == 0
        assert result.stdout == "6\n"

    def test_stratum_and_cell(self):
        assert run_cli("count", "--family", "po", "--n", "4", "--r", "2").stdout == "60\n"
        out = run_cli("count", "--family", "po", "--n", "2", "--r", "2", "--k", "1")
        assert out.stdout == "2\n"

    def test_exclude_null(self):
        result = run_cli("count", "--family", "po", "--n", "2", "--exclude-null")
        assert result.stdout == "7\n"

    def test_json_payload(self):
        result = run_cli("count", "--family", "poi", "--n", "2", "--format", "json")
        assert json.loads(result.stdout) == {"family": "poi", "n": 2, "value": 6}

    def test_cell_requires_stratum(self):
        result = run_cli("count", "--family", "po", "--n", "2", "--k", "1")
        assert result.returncode == 2
        assert "requires" in result.stderr


class TestMoments:
    def test_json_example(self):
        result = run_cli("moments", "--family", "o", "--n", "3", "--r", "3", "--format", "json")
        assert result.returncode == 0
        assert result.stdout == '{"family":"o","mean":"9/5","n":3,"r":3,"variance":"9/25"}\n'

    def test_text_output(self):
        result = run_cli("moments", "--family", "poi", "--n", "2")
        assert result.stdout == "mean=1/1\nvariance=1/3\n"


class TestPmf:
    def test_csv_schema(self):
        result = run_cli("pmf", "--family", "po", "--n", "2", "--format", "csv")
        lines = result.stdout.splitlines()
        assert lines[0] == "k,p_num,p_den,p_approx"
        assert lines[1].startswith("1,6,7,")
        assert lines[2].startswith("2,1,7,")

    def test_json_rationals_are_strings(self):
        result = run_cli("pmf", "--family", "po", "--n", "2", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["normalizer"] == 7
        assert payload["support"] == [{"k": 1, "p": "6/7"}, {"k": 2, "p": "1/7"}]

    def test_approx_flag_adds_decimal_fields(self):
        result = run_cli("pmf", "--family", "po", "--n", "2", "--format", "json", "--approx")
        payload = json.loads(result.stdout)
        assert "p_approx" in payload["support"][0]

    def test_conditional(self):
        result = run_cli("pmf", "--family", "po", "--n", "3", "--r", "2", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["support"] == [{"k": 1, "p": "1/2"}, {"k": 2, "p": "1/2"}]


class TestEnumerate:
    def test_canonical_lines(self):
        result = run_cli("enumerate", "--family", "o", "--n", "2")
        assert result.stdout.splitlines() == [
            '{"map":[[1,1],[2,1]],"n":2}',
            '{"map":[[1,2],[2,2]],"n":2}',
            '{"map":[[1,1],[2,2]],"n":2}',
        ]

    def test_count_limits_the_stream(self):
        result = run_cli("enumerate", "--family", "po", "--n", "3", "--count", "2")
        assert len(result.stdout.splitlines()) == 2


class TestSample:
    def test_deterministic_stream(self):
        args = ("sample", "--family", "po", "--n", "5", "--seed", "11", "--count", "6")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_jobs_fanout_is_deterministic(self):
        args = ("sample", "--family", "poi", "--n", "4", "--seed", "3",
                "--count", "9", "--jobs", "3")
        first, second = run_cli(*args), run_cli(*args)
        assert first.stdout == second.stdout
        assert len(first.stdout.splitlines()) == 9

    def test_report_payload(self):
        result = run_cli("sample", "--family", "poi", "--n", "2", "--seed", "7",
                         "--count", "3000", "--report")
        payload = json.loads(result.stdout)
        assert payload["sample_count"] == 3000
        assert "/" in payload["tv_distance"]
        assert float(payload["tv_distance_approx"]) < 0.05
        assert sum(payload["empirical"].values()) == 3000


class TestRankUnrank:
    def test_unrank(self):
        result = run_cli("unrank", "--family", "po", "--n", "2", "--index", "7")
        assert result.stdout == '{"map":[[1,1],[2,2]],"n":2}\n'

    def test_rank_from_argument(self):
        doc = '{"n": 3, "map": [[1,1],[2,1],[3,2]]}'
        result = run_cli("rank", "--family", "po", doc)
        assert result.stdout == "32\n"

    def test_rank_reads_stdin_lines(self):
        enum = run_cli("enumerate", "--family", "po", "--n", "2")
        result = run_cli("rank", "--family", "po", stdin=enum.stdout)
        assert result.stdout.splitlines() == [str(i) for i in range(8)]

    def test_out_of_range_index(self):
        result = run_cli("unrank", "--family", "o", "--n", "2", "--index", "3")
        assert result.returncode == 2
        assert "outside" in result.stderr


class TestVerifyAndIdentity:
    @pytest.mark.parametrize("family", ["po", "poi", "o", "pt"])
    def test_verify_passes(self, family):
        result = run_cli("verify", "--family", family, "--n", "3")
        assert result.returncode == 0

    def test_verify_json(self):
        result = run_cli("verify", "--family", "poi", "--n", "2", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["ok"] is True and payload["failure"] is None

    def test_identity_single(self):
        result = run_cli("identity", "--id", "3", "--max", "8")
        assert result.returncode == 0
        assert "all equal" in result.stdout

    def test_identity_all_four(self):
        result = run_cli("identity", "--max", "5", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["ok"] is True
        assert [r["identity"] for r in payload["results"]] == [1, 2, 3, 4]


class TestFormatsAndErrors:
    def test_env_var_sets_default_format(self):
        result = run_cli("count", "--family", "poi", "--n", "2",
                         env_extra={"ORDERMAPS_FORMAT": "json"})
        assert json.loads(result.stdout)["value"] == 6

    def test_explicit_flag_overrides_env(self):
        result = run_cli("count", "--family", "poi", "--n", "2", "--format", "text",
                         env_extra={"ORDERMAPS_FORMAT": "json"})
        assert result.stdout == "6\n"

    def test_missing_required_flag_exits_2(self):
        result = run_cli("count", "--family", "po")
        assert result.returncode == 2

    def test_domain_error_exits_2(self):
        result = run_cli("count", "--family", "o", "--n", "3", "--r", "2")
        assert result.returncode == 2
        assert "r = n" in result.stderr

    def test_unknown_subcommand_exits_2(self):
        assert run_cli("frobnicate").returncode == 2
