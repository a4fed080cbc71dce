"""Validates CLI JSON output against the shipped schemas and checks that
repeated runs are byte-identical."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, samples, schema_dir, data_dir = sys.argv[1:5]
schema_dir = pathlib.Path(schema_dir)
data_dir = pathlib.Path(data_dir)


def schema(name):
    return json.loads((schema_dir / f"{name}.schema.json").read_text())


def run(args, expect=0):
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode != expect:
        sys.exit(f"{args}: exit {out.returncode}, expected {expect}\n{out.stderr}")
    return out.stdout


cases = [
    (["schubert", "--group", "U3", "--format", "json"], "family"),
    (["schubert", "--group", "Sp2", "--ring", "Q", "--format", "json"], "family"),
    (["schubert", "--group", "SO3", "--ring", "Z[1/2]", "--format", "json"], "family"),
    (["schubert", "--datum-file", str(data_dir / "g2.json"), "--ring", "Q", "--format", "json"], "family"),
    (["matrix", "--group", "U3", "--generator", "1", "--format", "json"], "matrix"),
    (["matrix", "--group", "Sp2", "--generator", "2", "--format", "json"], "matrix"),
    (["torsion", "--group", "PSU3", "--format", "json"], "torsion"),
    (["invariants", "--group", "U2", "--ring", "Z/2", "--relations", "e1+e2", "--max-degree", "4",
      "--format", "json"], "invariants"),
    (["decompose", "--group", "U3", "--ring", "Q", "--max-degree", "4", "--format", "json"], "decomposition"),
    (["table-check", "--group", "Sp2", "--format", "json"], "table_report"),
    (["poincare", "--group", "Sp2", "--subgroup", "2e1,2e2", "--format", "json"], "series"),
    (["poincare", "--group", "Sp2", "--subgroup", "2e1,2e2", "--series", "coset", "--format", "json"], "series"),
    (["poincare", "--group", "U3", "--series", "flag", "--format", "json"], "series"),
    (["tensor", "--group", "Sp2", "--subgroup", "2e1,2e2", "--ring", "Z/2", "--route", "direct",
      "--max-degree", "4", "--format", "json"], "series"),
    (["verify", "--suite", "braid", "--group", "Sp2", "--format", "json"], "verify_report"),
]

failures = 0
for args, name in cases:
    first = run(args)
    second = run(args)
    if first != second:
        print(f"FAIL nondeterministic output: {args}")
        failures += 1
    try:
        jsonschema.validate(json.loads(first), schema(name))
    except jsonschema.ValidationError as e:
        print(f"FAIL {args}: {e.message}")
        failures += 1

lines = subprocess.run([samples], capture_output=True, text=True, check=True).stdout.splitlines()
for line, name in zip(lines, ["polynomial", "root_datum", "demazure_element"]):
    try:
        jsonschema.validate(json.loads(line), schema(name))
    except jsonschema.ValidationError as e:
        print(f"FAIL {name} sample: {e.message}")
        failures += 1
for f in sorted(data_dir.glob("*.json")):
    jsonschema.validate(json.loads(f.read_text()), schema("root_datum"))

# Text output is deterministic too.
for args in (["schubert", "--group", "U3"], ["verify", "--suite", "homogeneous"]):
    if run(args) != run(args):
        print(f"FAIL nondeterministic text output: {args}")
        failures += 1

print(f"{len(cases)} JSON cases checked, {failures} failures")
sys.exit(1 if failures else 0)
