#!/usr/bin/env python3
"""Runs the pellrep CLI and validates its JSON output against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("solve", ["--sequence", "pell", "solve"]),
    ("solve", ["--sequence", "pell-lucas", "--base-min", "10", "--base-max", "10", "solve"]),
    ("bounds", ["--sequence", "pell", "bounds"]),
    ("bounds", ["--sequence", "pell-lucas", "bounds"]),
    ("reduce", ["--sequence", "pell-lucas", "--base-min", "2", "--base-max", "3", "reduce"]),
    ("contfrac", ["contfrac", "--base", "6", "--terms", "30"]),
    ("contfrac", ["contfrac", "--expr", "(1+sqrt(5))/2", "--threshold", "1e6"]),
    ("check", ["check", "169", "4"]),
    ("check", ["check", "111", "10"]),
]


def main():
    if len(sys.argv) != 3:
        sys.exit("usage: validate_json.py <pellrep binary> <schema dir>")
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

    schemas = {}
    for path in schema_dir.glob("*.json"):
        schemas[path.name] = json.loads(path.read_text())
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in schemas.items()
    )

    failures = 0
    for schema_name, args in CASES:
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"[FAIL] {label}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(schemas[schema_name + ".json"], registry=registry)
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        if errors:
            failures += 1
            print(f"[FAIL] {label}: {len(errors)} schema errors")
            for err in errors[:5]:
                print(f"    {list(err.absolute_path)}: {err.message}")
        else:
            print(f"[PASS] {label}")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
