"""Performance metrics collection and reporting."""

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any


@dataclass
class PerformanceResult:
    """Single performance measurement result."""

    name: str
    value: float
    unit: str = "seconds"
    size: int = 0
    states: int = 0
    timestamp: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "value": self.value,
            "unit": self.unit,
            "size": self.size,
            "states": self.states,
            "timestamp": self.timestamp or datetime.now(timezone.utc).isoformat(),
        }


class BenchmarkMetrics:
    """Collect and format performance metrics."""

    def format_markdown_summary(self, results: list[PerformanceResult]) -> str:
        """Format results as a markdown list for CI job summaries."""
        lines = ["## Factor Automaton Benchmark Results\n"]

        for result in results:
            lines.append(
                f"⏱️ **{result.name}**: {result.value:.3f}s "
                f"(Σ|factors| = {result.size}, {result.states} states)"
            )

        return "\n".join(lines)

    def save_artifacts(self, results: list[PerformanceResult], path: Path) -> None:
        """Save results as JSON artifact."""
        largest = max(results, key=lambda r: r.size, default=None)
        data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "results": [r.to_dict() for r in results],
            "summary": {
                "total_metrics": len(results),
                "largest_size": largest.size if largest else 0,
                "largest_seconds": largest.value if largest else 0.0,
            },
        }

        with open(path, "w") as f:
            json.dump(data, f, indent=2)
