#!/usr/bin/env python3
"""End-to-end checks for the boolcomb CLI: exit codes, outputs and JSON schemas."""

import json
import os
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMA_DIR = sys.argv[2]

failures = []


def load_schemas():
    schemas = {}
    for name in os.listdir(SCHEMA_DIR):
        if name.endswith(".json"):
            with open(os.path.join(SCHEMA_DIR, name)) as fh:
                schemas[name[:-5]] = json.load(fh)
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )
    return {k: Draft202012Validator(v, registry=registry) for k, v in schemas.items()}


VALIDATORS = load_schemas()


def run(*args, stdin=None, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, env=full_env, timeout=600)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)
    else:
        print("ok  ", what)


def json_case(what, args, schema, code=0, check=None, env=None):
    r = run(*args, env=env)
    expect(r.returncode == code, f"{what}: exit {r.returncode}, expected {code} {r.stderr.strip()}")
    try:
        doc = json.loads(r.stdout)
    except json.JSONDecodeError:
        expect(False, f"{what}: output is JSON")
        return None
    errors = list(VALIDATORS[schema].iter_errors(doc))
    expect(not errors, f"{what}: matches {schema} schema" + (f" ({errors[0].message})" if errors else ""))
    if check is not None:
        expect(check(doc), f"{what}: content")
    return doc


json_case("params K5", ["params", "D~{"], "params",
          check=lambda d: d["omega"] == 5 and d["alpha"] == 1 and d["chi"] == 5 and d["perfect"])
json_case("params C5", ["params", "DUW"], "params",
          check=lambda d: d["omega"] == 2 and d["chi"] == 3 and d["perfect"] is False)

for method in ["vizing", "twin", "classL"]:
    json_case(f"decompose {method} C4", ["decompose", "--method", method, "Cl"], "decomposition",
              check=lambda d: d["certified"] and d["target"] == "Cl")
json_case("decompose xornf", ["decompose", "--method", "xornf", "--fn", "2:0x8", "--class", "equiv", "Cw", "C_"],
          "decomposition", check=lambda d: d["certified"])
json_case("decompose pcseq", ["decompose", "--method", "pcseq", "C_", "CK", "CQ"], "pcseq",
          check=lambda d: d["certified"] and d["n"] == 4 and len(d["sequence"]) == 3)

r = run("hnk", "2", "2")
expect(r.returncode == 0 and r.stdout.strip() == "Cr", "hnk 2 2 prints Cr")
json_case("hnk report", ["hnk", "3", "2", "--report"], "hnk_report",
          check=lambda d: d["omega"] <= d["omega_bound"] and d["alpha"] <= d["alpha_bound"])

json_case("verify all", ["verify", "all", "--seed", "7"], "theorem_checks",
          check=lambda d: len(d) > 0 and all(c["passed"] for c in d))
json_case("verify single", ["verify", "e1-characterization"], "theorem_check", check=lambda d: d["passed"])
r = run("verify", "all", "--table")
expect(r.returncode == 0 and r.stdout.startswith("PASS"), "verify table")
json_case("chi-binding violation", ["chi-binding", "--expr", "union:3:d1", "--binding", "linear:1",
                                    "--samples", "50"], "theorem_check", code=1,
          check=lambda d: not d["passed"] and d["counterexample"] is not None)

json_case("booldim complement 3K2", ["booldim", "--target", "E]~o", "--class", "equiv", "--kmax", "3",
                                     "--mode", "union"], "booldim", check=lambda d: d["found"] and d["k"] == 3)
json_case("booldim C5 exhausted", ["booldim", "--target", "DUW", "--class", "equiv", "--kmax", "2"], "booldim",
          check=lambda d: not d["found"] and d["exhausted_k"] == 2)
r = run("booldim", "--target", "DUW", "--class", "equiv", "--kmax", "3", env={"BOOLCOMB_BUDGET": "1"})
expect(r.returncode == 2 and "Budget" in r.stderr, "booldim honours BOOLCOMB_BUDGET")

json_case("label", ["label", "--fn", "2:0x6", "C_", "CQ"], "labels",
          check=lambda d: len(d["labels"]) == 4 and d["scheme"]["n"] == 4)

r = run("enumerate", "--class", "equiv", "--n", "4")
lines = r.stdout.split()
expect(r.returncode == 0 and len(lines) == 15 and len(set(lines)) == 15, "enumerate equiv n=4 gives Bell(4) graphs")

r = run("combine", "--op", "xor", "C_", "CQ")
expect(r.returncode == 0 and r.stdout.strip() == "Cq", "combine xor")
r = run("combine", "--op", "fn:2:0x6", "C_", "CQ")
expect(r.returncode == 0 and r.stdout.strip() == "Cq", "combine fn")
r = run("--format", "edges", "hnk", "2", "2")
expect(r.returncode == 0 and r.stdout.strip().splitlines()[0].startswith("4"), "edge-list output")

with tempfile.NamedTemporaryFile("w", suffix=".g6", delete=False) as fh:
    fh.write("D~{\n")
    path = fh.name
json_case("graph from file", ["params", path], "params", check=lambda d: d["omega"] == 5)
os.unlink(path)
r = run("params", "-", stdin="D~{\n")
expect(r.returncode == 0 and json.loads(r.stdout)["omega"] == 5, "graph from stdin")

for what, args in [
    ("malformed graph6", ["params", "nonsense"]),
    ("unknown theorem", ["verify", "no-such-check"]),
    ("missing subcommand", []),
    ("bad method", ["decompose", "--method", "bogus", "Cl"]),
    ("mismatched orders", ["combine", "--op", "union", "Cl", "D~{"]),
]:
    r = run(*args)
    expect(r.returncode == 2, f"{what}: exit 2 (got {r.returncode})")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
