"""Serialized report, configuration and enumeration models."""

from .report_models import (
    EnumerationProfile,
    FinitenessReport,
    LassoWitness,
    PinWitness,
    RunConfig,
    SubVerdict,
    Verdict,
    Witnesses,
    generate_schema,
)

__all__ = [
    "EnumerationProfile",
    "FinitenessReport",
    "LassoWitness",
    "PinWitness",
    "RunConfig",
    "SubVerdict",
    "Verdict",
    "Witnesses",
    "generate_schema",
]
