"""Run the CLI in JSON mode on a fixed set of inputs and validate each document."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

F = "50*x1^18 - 3125*x2^9 - 162*x2; 49*x2^18 - 35*x1^9 - 109375*x1"

CASES = [
    ("valuation_table", ["analyze", "-p", "5", F]),
    ("valuation_table", ["analyze", "-p", "5", "--verbose", F]),
    ("valuation_table", ["analyze", "-p", "2", "x1 - 2"]),
    ("valuation_table", ["analyze", "-p", "3", "--laurent", "x1*x2 - 1; x1*x2^-1 - 3"]),
    ("strata", ["analyze", "-p", "2", "--strata", "x1^2 - x1; x2^2 - x2"]),
    ("strata", ["analyze", "-p", "3", "--strata", "x1*x2 - x1; x1^2 - x1"]),
    ("strata", ["analyze", "-p", "3", "--strata", "x1 - 1 + x2; x1^2 - 1 + x2"]),
    ("bound", ["bounds", "lenstra-local", "-p", "2", "-d", "1", "-e", "1", "-f", "1", "-m", "2"]),
    ("bound", ["bounds", "lenstra-global", "-d", "2", "-m", "40"]),
    ("bound", ["bounds", "gamma", "-n", "2", "-m", "2"]),
    ("bound", ["bounds", "valuation-count", "-n", "2", "-m", "6"]),
    ("polygon", ["polygon", "-p", "5", "x1^3 - 41/5*x1^2 + 83/5*x1 - 3"]),
]


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.stem.removesuffix(".schema"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values())
    failures = 0
    for name, args in CASES:
        out = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True, check=True).stdout
        validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
        errors = list(validator.iter_errors(json.loads(out)))
        status = "ok" if not errors else "INVALID"
        print(f"{status} {name}: {' '.join(args[:2])}")
        for e in errors:
            print(f"  {e.json_path}: {e.message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
