"""Benchmark runner for the factor-automaton pipeline.

Times automaton construction, complementation and the cycle test on synthetic
factor sets, checks that the time grows at most 1.5 times as fast as the
input size, and compares against saved baselines.
"""

import argparse
import itertools
import json
import sys
import time
from collections.abc import Sequence
from pathlib import Path

from benchmarks.metrics import BenchmarkMetrics, PerformanceResult
from benchmarks.scenarios import FACTOR_SCENARIOS, FactorScenario
from pinclass.automata import (
    build_factor_automaton,
    complement,
    has_accessible_coaccessible_cycle,
)

SCALING_TOLERANCE = 1.5
ABSOLUTE_LIMIT_SECONDS = 2.0
ABSOLUTE_LIMIT_SIZE = 100_000
REGRESSION_THRESHOLD = 0.20


class PinClassBenchmark:
    """Performance benchmark runner with scaling and regression checks."""

    def __init__(self, baseline_path: Path = Path("benchmarks/baselines.json")):
        self.baseline_path = baseline_path
        self.metrics = BenchmarkMetrics()

    def measure_pipeline(
        self, scenario: FactorScenario, iterations: int = 3
    ) -> PerformanceResult:
        """Average wall time of build + complement + cycle test."""
        factors = scenario.factors()
        size = sum(len(f) for f in factors)
        times = []
        states = 0
        for i in range(iterations):
            start = time.perf_counter()
            allowed = complement(build_factor_automaton(factors))
            has_accessible_coaccessible_cycle(allowed)
            times.append(time.perf_counter() - start)
            states = allowed.num_states
            print(f"  {scenario.name} iteration {i + 1}/{iterations}: {times[-1]:.3f}s")
        return PerformanceResult(
            name=scenario.name,
            value=sum(times) / len(times),
            size=size,
            states=states,
        )

    def run_benchmarks(
        self, scenarios: Sequence[FactorScenario] | None = None, iterations: int = 3
    ) -> list[PerformanceResult]:
        """Run every scenario in order of increasing size."""
        if scenarios is None:
            scenarios = FACTOR_SCENARIOS
        results = []
        print("⏱️ Running factor automaton benchmarks...")
        for scenario in sorted(scenarios, key=lambda s: s.total_length):
            print(f"\n📋 Scenario: {scenario.name}")
            result = self.measure_pipeline(scenario, iterations)
            results.append(result)
            print(f"✅ Average time: {result.value:.3f}s ({result.states} states)")
        return results

    def check_scaling(self, results: list[PerformanceResult]) -> bool:
        """True when time grows at most 1.5x the size ratio between neighbours."""
        ok = True
        print("\n📈 Checking scaling...")
        ordered = sorted(results, key=lambda r: r.size)
        for smaller, larger in itertools.pairwise(ordered):
            if smaller.size == 0 or smaller.value <= 0:
                continue
            size_ratio = larger.size / smaller.size
            time_ratio = larger.value / smaller.value
            growth = f"time x{time_ratio:.1f} for size x{size_ratio:.1f}"
            if time_ratio > SCALING_TOLERANCE * size_ratio:
                print(f"❌ {larger.name}: {growth}")
                ok = False
            else:
                print(f"✅ {larger.name}: {growth}")
        for result in ordered:
            too_slow = result.value > ABSOLUTE_LIMIT_SECONDS
            if result.size >= ABSOLUTE_LIMIT_SIZE and too_slow:
                print(
                    f"❌ {result.name}: {result.value:.3f}s exceeds "
                    f"{ABSOLUTE_LIMIT_SECONDS:.1f}s"
                )
                ok = False
        return ok

    def check_regression(self, results: list[PerformanceResult]) -> bool:
        """Check if any metric regressed >20% from baseline."""
        if not self.baseline_path.exists():
            print("📊 No baseline found - establishing new baseline")
            self.save_baseline(results)
            return False

        with open(self.baseline_path) as f:
            baseline_data = json.load(f)

        baselines = baseline_data.get("baselines", {})
        has_regression = False
        print("\n📊 Checking for performance regressions...")

        for result in results:
            if result.name not in baselines:
                print(f"📝 New metric: {result.name} = {result.value:.3f}s")
                continue
            baseline = baselines[result.name]["value"]
            regression = (result.value - baseline) / baseline
            if regression > REGRESSION_THRESHOLD:
                print(f"❌ REGRESSION: {result.name} is {regression:.1%} slower")
                print(f"   Baseline: {baseline:.3f}s, Current: {result.value:.3f}s")
                has_regression = True
            elif regression < -0.10:
                print(f"✅ IMPROVEMENT: {result.name} is {-regression:.1%} faster")
            else:
                print(f"✅ {result.name}: {regression:+.1%} change")

        return has_regression

    def save_baseline(self, results: list[PerformanceResult]) -> None:
        """Save current results as new baseline."""
        baseline_data = {
            "timestamp": time.time(),
            "baselines": {r.name: r.to_dict() for r in results},
        }

        self.baseline_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.baseline_path, "w") as f:
            json.dump(baseline_data, f, indent=2)
        print(f"💾 Saved new baseline to {self.baseline_path}")


def main(args: list[str] | None = None) -> int:
    """Main benchmark runner; returns 1 on a scaling failure or regression."""
    parser = argparse.ArgumentParser(description="Run factor automaton benchmarks")
    parser.add_argument(
        "--save-baseline",
        action="store_true",
        help="Save current results as new baseline",
    )
    parser.add_argument(
        "--check-only",
        action="store_true",
        help="Only check saved results for regressions, don't run benchmarks",
    )
    parser.add_argument(
        "--output",
        type=Path,
        default=Path("benchmark_results.json"),
        help="Output file for results",
    )
    parser.add_argument(
        "--baseline",
        type=Path,
        default=Path("benchmarks/baselines.json"),
        help="Baseline file (created on first run)",
    )
    parser.add_argument(
        "--iterations", type=int, default=3, help="Runs averaged per scenario"
    )

    parsed_args = parser.parse_args(args)
    benchmark = PinClassBenchmark(baseline_path=parsed_args.baseline)

    if parsed_args.check_only:
        if not parsed_args.output.exists():
            print("❌ No results file found for check-only mode")
            return 1
        with open(parsed_args.output) as f:
            data = json.load(f)
        results = [PerformanceResult(**r) for r in data["results"]]
        return 1 if benchmark.check_regression(results) else 0

    print("🎯 Starting factor automaton benchmarks")
    print("=" * 50)

    results = benchmark.run_benchmarks(iterations=parsed_args.iterations)

    benchmark.metrics.save_artifacts(results, parsed_args.output)
    print(f"\n💾 Results saved to {parsed_args.output}")

    scaling_ok = benchmark.check_scaling(results)
    has_regression = benchmark.check_regression(results)

    print("\n" + benchmark.metrics.format_markdown_summary(results))

    if parsed_args.save_baseline:
        benchmark.save_baseline(results)

    if has_regression or not scaling_ok:
        print("\n❌ Performance check failed!")
        return 1
    print("\n✅ All performance checks passed!")
    return 0


if __name__ == "__main__":
    sys.exit(main())
