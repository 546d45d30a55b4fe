"""Run the CLI in JSON mode and validate each document against schemas/."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values())


def validate(name, doc):
    v = Draft202012Validator(schemas[name], registry=registry)
    errors = sorted(v.iter_errors(doc), key=lambda e: list(e.path))
    for e in errors:
        print(f"{name}: {list(e.path)}: {e.message}")
    return not errors


def run(*args, expect=0):
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode != expect:
        print(f"{args}: exit {out.returncode}, expected {expect}\n{out.stderr}")
        sys.exit(1)
    return json.loads(out.stdout)


data = root / "data"
cases = [
    ("enumerate.schema.json", ["enumerate", "--type", "A3", "--p", "2", "--json"], 0),
    ("enumerate.schema.json", ["enumerate", "--type", "G2", "--p", "3", "--json"], 0),
    ("compat.schema.json", ["compat", "--type", "B3", "--p", "2", "--sigma", "0,1,1", "--sigma", "1,2,2", "--json"], 0),
    ("weyl.schema.json", ["weyl", "--datum", str(data / "a3_case3.json"), "--json"], 0),
    ("weyl.schema.json", ["weyl", "--datum", str(data / "schalke.json"), "--json"], 0),
    ("cone.schema.json", ["cone", "--datum", str(data / "schalke.json"), "--json"], 0),
    ("cone.schema.json", ["cone", "--datum", str(data / "g2_p2.json"), "--json"], 0),
    ("cone.schema.json", ["cone", "--datum", str(data / "a2_simple.json"), "--json"], 0),
    ("report.schema.json", ["verify", "--suite", "obtuseness", "--p", "2", "--max-rank", "3", "--json"], 0),
    ("report.schema.json", ["verify", "--suite", "lifts", "--p", "2", "--max-rank", "3", "--json"], 0),
    ("table.schema.json", ["table-dump"], 0),
    ("table.schema.json", ["table-dump", "--p", "3"], 0),
]
ok = True
for schema, args, code in cases:
    ok &= validate(schema, run(*args, expect=code))
for f in sorted(data.glob("*.json")):
    ok &= validate("datum.schema.json", json.loads(f.read_text()))
print("schema validation", "passed" if ok else "FAILED")
sys.exit(0 if ok else 1)
