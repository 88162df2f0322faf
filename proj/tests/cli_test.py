"""Runs the zdg CLI end to end: JSON schemas, exit codes, thread determinism."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

ZDG = sys.argv[1]
ROOT = pathlib.Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"
SCHEMAS = {p.name.removesuffix(".schema.json"): json.loads(p.read_text())
           for p in (ROOT / "schemas").glob("*.schema.json")}

failures = []


def run(*args, threads=1):
    return subprocess.run([ZDG, "--threads", str(threads), *map(str, args)],
                          capture_output=True, text=True)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def json_case(schema, args, code=0):
    r = run("--json", *args)
    what = " ".join(map(str, args))
    check(r.returncode == code, f"{what}: exit {r.returncode}, want {code}")
    try:
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, SCHEMAS[schema])
        check(True, f"{what}: matches {schema} schema")
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(False, f"{what}: {e}")
        return None
    par = run("--json", *args, threads=4)
    check(par.stdout == r.stdout, f"{what}: same bytes with 4 threads")
    return doc


g = lambda name: FIX / f"{name}.zdg-graph"

doc = json_case("realize", ["realize", g("table1")])
check(doc and doc["status"] == "unique" and doc["iso_class_count"] == 1,
      "first fixture graph is uniquely realized")
doc = json_case("realize", ["realize", g("clique_4_ends_3")])
check(doc and doc["status"] == "none" and doc["tables"] == [],
      "no realization is a successful empty result")
json_case("realize", ["realize", "--boolean", g("boolean_power_3")])
json_case("realize", ["realize", "--limit", "2", g("table5")])
json_case("realize", ["oracle", g("table5")])
json_case("props", ["props", g("table5")])
json_case("props", ["props", g("square_triangle")])
doc = json_case("boolean-ring", ["boolean-ring", g("boolean_power_3")])
check(doc and doc["ring"]["size"] == 8, "eight-element ring from six vertices")
json_case("boolean-ring", ["boolean-ring", g("table1")], code=1)
json_case("theorems", ["theorems", FIX / "table5.zdg-table"])
doc = json_case("sweep", ["theorems", "--sweep", g("table4")])
check(doc and doc["counterexamples"] == 0, "sweep finds no counterexamples")
json_case("sweep", ["theorems", "--sweep", "--boolean", g("boolean_power_3")])

# text realize renders the table with element names
r = run("realize", "--text", g("table1"))
check(r.returncode == 0 and "a1 |" in r.stdout and "x2" in r.stdout,
      "text realize renders a named triangle")

# family and fixture emit the plain text formats, which read back
with tempfile.TemporaryDirectory() as tmp:
    out = pathlib.Path(tmp) / "st.zdg-graph"
    r = run("family", "shared-ends", 0, 2, "-o", out)
    check(r.returncode == 0 and out.exists(), "family writes a graph file")
    r = run("--json", "realize", out)
    check(r.returncode == 0 and json.loads(r.stdout)["status"] == "unique",
          "written family graph realizes")
    r = run("fixture", 2)
    check(r.returncode == 0 and r.stdout == (FIX / "table2.zdg-table").read_text(),
          "fixture 2 matches the shipped file")

    bad = pathlib.Path(tmp) / "bad.zdg-graph"
    bad.write_text("zdg-graph 1\nn 3\ne 0 1\ne 1 7\n")
    r = run("realize", bad)
    check(r.returncode == 2 and "line 4" in r.stderr,
          "out-of-range edge is a usage error with its line")
    r = run("realize", pathlib.Path(tmp) / "missing")
    check(r.returncode == 2 and r.stderr, "missing file exits 2")
r = run("no-such-command")
check(r.returncode == 2, "unknown subcommand exits 2")
r = run("oracle", g("table1"))
check(r.returncode == 2, "oracle refuses more than four vertices")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
