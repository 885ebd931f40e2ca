"""Run the nilrs CLI and validate its JSON output against the committed schema."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ["list", "--json"],
    ["check", "--all", "--json"],
    ["report", "g0_1", "--json"],
    ["report", "g2_lambda", "--param", "lambda=3", "--json"],
    ["report", "general_diag", "--json"],
    ["solve", "g_mu", "--param", "mu=2", "--degree", "2", "--json"],
    ["solve", "g0_1", "--degree", "1", "--json"],
    ["solve", "flat_euclidean", "--degree", "1", "--alpha", "0", "--json"],
    ["solve", "g_mu", "--param", "mu=2", "--degree", "1", "--alpha", "5", "--json"],
    ["flow", "--initial", "1,1,1,1", "--t-end", "0.1", "--step", "0.01", "--format", "json"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for args in CASES:
        out = subprocess.run([binary, *args], capture_output=True, text=True)
        label = " ".join(args)
        if out.returncode != 0:
            print(f"FAIL {label}: exit {out.returncode}: {out.stderr.strip()}")
            failed += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(out.stdout)), key=lambda e: list(e.path))
        for e in errors[:5]:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message[:200]}")
        failed += bool(errors)
        if not errors:
            print(f"ok   {label}")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
