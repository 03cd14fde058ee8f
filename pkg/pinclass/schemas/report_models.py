"""Pydantic models for finiteness reports, run configuration and oracle profiles.

These models are the serialized surface of the tool: the CLI prints
``FinitenessReport`` as JSON, and the JSON Schema generated from it is the
contract for downstream scripts.
"""

from enum import Enum
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Verdict(str, Enum):
    """Number of simple permutations in the class."""

    FINITE = "finite"
    INFINITE = "infinite"


class SubVerdict(BaseModel):
    """Outcome of one of the four finiteness criteria."""

    verdict: Verdict
    failing_symmetry: str | None = Field(
        default=None, description="First symmetry whose class no basis element lies in"
    )
    failing_symmetry_index: int | None = Field(default=None, ge=0, le=7)
    note: str | None = None

    model_config = ConfigDict(extra="forbid")


class LassoWitness(BaseModel):
    """Words prefix + cycle * k + suffix accepted for every k >= 0."""

    prefix: str
    cycle: str = Field(..., min_length=1)
    suffix: str = ""

    model_config = ConfigDict(extra="forbid")


class PinWitness(BaseModel):
    """A pumped lasso word with its strict pin word and decoded permutation."""

    repetitions: int = Field(..., ge=0)
    m_word: str
    pin_word: str
    permutation: str
    avoids_basis: bool

    model_config = ConfigDict(extra="forbid")


class EnumerationProfile(BaseModel):
    """Counts of objects found by a bounded enumeration, per length."""

    max_length: int = Field(..., ge=0)
    counts: dict[int, int] = Field(default_factory=dict)

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def check_lengths(self) -> "EnumerationProfile":
        missing = [n for n in range(1, self.max_length + 1) if n not in self.counts]
        if missing:
            raise ValueError(f"counts missing for lengths {missing}")
        return self

    def to_csv(self) -> str:
        rows = ["length,count"]
        rows.extend(f"{n},{self.counts[n]}" for n in sorted(self.counts))
        return "\n".join(rows) + "\n"


class Witnesses(BaseModel):
    """Optional evidence attached to a report."""

    pin_lasso: LassoWitness | None = None
    pin_words: list[PinWitness] = Field(default_factory=list)
    simple_counts: EnumerationProfile | None = None

    model_config = ConfigDict(extra="forbid")


class FinitenessReport(BaseModel):
    """Whether Av(B) contains finitely many simple permutations."""

    pin: SubVerdict
    alternations: SubVerdict
    wedge1: SubVerdict
    wedge2: SubVerdict
    overall: Verdict
    witnesses: Witnesses = Field(default_factory=Witnesses)
    timings: dict[str, float] = Field(
        default_factory=dict, description="Wall time per stage in milliseconds"
    )

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "examples": [
                {
                    "pin": {"verdict": "finite"},
                    "alternations": {"verdict": "finite"},
                    "wedge1": {"verdict": "finite"},
                    "wedge2": {"verdict": "finite"},
                    "overall": "finite",
                    "witnesses": {},
                    "timings": {"automaton": 0.4},
                }
            ]
        },
    )

    @property
    def sub_verdicts(self) -> dict[str, SubVerdict]:
        return {
            "pin": self.pin,
            "alternations": self.alternations,
            "wedge1": self.wedge1,
            "wedge2": self.wedge2,
        }

    @model_validator(mode="after")
    def check_overall(self) -> "FinitenessReport":
        """Overall is finite exactly when all four sub-verdicts are finite."""
        all_finite = all(
            sub.verdict is Verdict.FINITE for sub in self.sub_verdicts.values()
        )
        if all_finite != (self.overall is Verdict.FINITE):
            raise ValueError(
                f"overall verdict {self.overall.value} disagrees with the sub-verdicts"
            )
        return self


class RunConfig(BaseModel):
    """Options of one ``pinclass decide`` run."""

    input_path: Path
    output_format: Literal["text", "json"] = "text"
    emit_witness: bool = False
    dot_path: Path | None = None
    oracle_depth: int = Field(default=0, ge=0, le=10)

    model_config = ConfigDict(extra="forbid")

    @field_validator("input_path")
    @classmethod
    def validate_input_path(cls, v: Path) -> Path:
        if str(v).strip() == "":
            raise ValueError("input path must not be empty")
        return v


def generate_schema() -> dict[str, Any]:
    """JSON Schema of the report, with Draft 2020-12 metadata."""
    schema = FinitenessReport.model_json_schema()
    schema.update(
        {
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "version": "1.0.0",
            "title": "pinclass Finiteness Report",
            "description": "Decision on the number of simple permutations in Av(B)",
        }
    )
    return schema
