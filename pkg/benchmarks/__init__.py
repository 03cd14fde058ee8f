"""Timing benchmarks for the factor-automaton pipeline."""

__version__ = "1.0.0"
