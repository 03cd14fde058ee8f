"""Write the finiteness report JSON Schema next to this module.

Run with ``--check`` in CI to fail when the committed schema drifts from the
pydantic models.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from pinclass.schemas.report_models import generate_schema

SCHEMA_PATH = Path(__file__).parent / "report.schema.json"


def load_schema(path: Path) -> dict[str, Any] | None:
    """Parsed schema at ``path``, or None when it is missing or not JSON.

    Key order and whitespace are not part of the comparison.
    """
    try:
        loaded = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    return loaded if isinstance(loaded, dict) else None


def main(args: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Generate the report JSON Schema")
    parser.add_argument("--output", type=Path, default=SCHEMA_PATH)
    parser.add_argument(
        "--check",
        action="store_true",
        help="Compare against the existing file instead of writing it",
    )
    parsed = parser.parse_args(args)
    schema = generate_schema()
    rendered = json.dumps(schema, indent=2) + "\n"

    if parsed.check:
        if load_schema(parsed.output) != schema:
            print(f"❌ Schema drift detected: {parsed.output}")
            return 1
        print(f"✅ Schema up to date: {parsed.output}")
        return 0

    try:
        parsed.output.write_text(rendered)
    except OSError as e:
        print(f"❌ Error writing schema: {e}")
        return 1
    print(f"✅ Generated schema: {parsed.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
