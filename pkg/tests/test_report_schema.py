"""Tests for the report models and schema generation."""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from pinclass.schemas import (
    EnumerationProfile,
    FinitenessReport,
    LassoWitness,
    RunConfig,
    SubVerdict,
    Verdict,
    generate_schema,
)
from pinclass.schemas.generate import SCHEMA_PATH, load_schema
from pinclass.schemas.generate import main as generate_main


def report_data(**overrides):
    data = {
        "pin": {"verdict": "finite"},
        "alternations": {"verdict": "finite"},
        "wedge1": {"verdict": "finite"},
        "wedge2": {"verdict": "finite"},
        "overall": "finite",
    }
    data.update(overrides)
    return data


class TestFinitenessReport:
    """Validation of serialized reports."""

    def test_valid_minimal_report(self):
        """Witnesses and timings default to empty."""
        report = FinitenessReport.model_validate(report_data())
        assert report.overall is Verdict.FINITE
        assert report.witnesses.pin_lasso is None
        assert report.witnesses.pin_words == []
        assert report.timings == {}

    def test_overall_must_match(self):
        """An infinite sub-verdict forces an infinite overall verdict."""
        with pytest.raises(ValidationError, match="disagrees"):
            FinitenessReport.model_validate(
                report_data(wedge1={"verdict": "infinite"})
            )
        with pytest.raises(ValidationError, match="disagrees"):
            FinitenessReport.model_validate(report_data(overall="infinite"))

    def test_extra_fields_rejected(self):
        """Unknown keys are errors."""
        with pytest.raises(ValidationError):
            FinitenessReport.model_validate(report_data(verdicts=[]))
        with pytest.raises(ValidationError):
            SubVerdict.model_validate({"verdict": "finite", "reason": "x"})

    def test_symmetry_index_range(self):
        """There are eight symmetries."""
        SubVerdict(verdict=Verdict.INFINITE, failing_symmetry_index=7)
        with pytest.raises(ValidationError):
            SubVerdict(verdict=Verdict.INFINITE, failing_symmetry_index=8)

    def test_lasso_needs_a_cycle(self):
        """A lasso with an empty cycle pumps nothing."""
        assert LassoWitness(prefix="", cycle="LU").suffix == ""
        with pytest.raises(ValidationError):
            LassoWitness(prefix="L", cycle="")

    def test_json_round_trip(self):
        """Dumped reports validate back to equal models."""
        report = FinitenessReport.model_validate(
            report_data(
                pin={"verdict": "infinite"},
                overall="infinite",
                witnesses={"pin_lasso": {"prefix": "L", "cycle": "UL"}},
                timings={"cycle": 0.2},
            )
        )
        restored = FinitenessReport.model_validate_json(report.model_dump_json())
        assert restored == report

    def test_sub_verdicts_in_report_order(self):
        """Criteria are listed pin first."""
        report = FinitenessReport.model_validate(report_data())
        assert list(report.sub_verdicts) == ["pin", "alternations", "wedge1", "wedge2"]


class TestEnumerationProfile:
    """Per-length counts from bounded searches."""

    def test_counts_must_cover_every_length(self):
        """Each length from 1 to max_length needs a count."""
        with pytest.raises(ValidationError, match="missing"):
            EnumerationProfile(max_length=3, counts={1: 1, 3: 0})

    def test_csv_sorted_by_length(self):
        """Rows are in increasing length order."""
        profile = EnumerationProfile(max_length=2, counts={2: 2, 1: 1})
        assert profile.to_csv() == "length,count\n1,1\n2,2\n"

    def test_json_keys_become_strings(self):
        """Lengths are object keys in JSON."""
        profile = EnumerationProfile(max_length=1, counts={1: 1})
        assert json.loads(profile.model_dump_json())["counts"] == {"1": 1}


class TestRunConfig:
    """Options of a decide run."""

    def test_defaults(self):
        """Text output, no witnesses, no oracle."""
        config = RunConfig(input_path=Path("basis.txt"))
        assert config.output_format == "text"
        assert not config.emit_witness
        assert config.dot_path is None
        assert config.oracle_depth == 0

    @pytest.mark.parametrize("depth", [-1, 11])
    def test_oracle_depth_bounds(self, depth):
        """Oracle depth lies in 0..10."""
        with pytest.raises(ValidationError):
            RunConfig(input_path=Path("basis.txt"), oracle_depth=depth)

    def test_output_format(self):
        """Only text and json are known."""
        with pytest.raises(ValidationError):
            RunConfig(input_path=Path("basis.txt"), output_format="yaml")


class TestSchemaGeneration:
    """JSON Schema of the report."""

    def test_generate_schema(self):
        """Metadata is attached to the pydantic schema."""
        schema = generate_schema()
        assert schema["$schema"] == "https://json-schema.org/draft/2020-12/schema"
        assert schema["title"] == "pinclass Finiteness Report"
        assert set(schema["required"]) == {
            "pin",
            "alternations",
            "wedge1",
            "wedge2",
            "overall",
        }
        assert schema["additionalProperties"] is False

    def test_write_then_check(self, tmp_path, capsys):
        """--check passes right after writing and fails on drift."""
        output = tmp_path / "report.schema.json"
        assert generate_main(["--output", str(output)]) == 0
        assert generate_main(["--output", str(output), "--check"]) == 0

        output.write_text("{}\n")
        assert generate_main(["--output", str(output), "--check"]) == 1
        assert "drift" in capsys.readouterr().out

    def test_check_missing_file(self, tmp_path):
        """A missing schema counts as drift."""
        missing = tmp_path / "absent.json"
        assert generate_main(["--output", str(missing), "--check"]) == 1

    def test_committed_schema_up_to_date(self, capsys):
        """The schema shipped with the package matches the models."""
        assert SCHEMA_PATH.exists()
        assert load_schema(SCHEMA_PATH) == generate_schema()
        assert generate_main(["--check"]) == 0
        assert "up to date" in capsys.readouterr().out

    def test_formatting_is_not_drift(self, tmp_path):
        """Only the parsed schema is compared."""
        output = tmp_path / "report.schema.json"
        output.write_text(json.dumps(generate_schema(), sort_keys=True))
        assert generate_main(["--output", str(output), "--check"]) == 0
