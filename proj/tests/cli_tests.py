#!/usr/bin/env python3
"""End-to-end checks of the sierpinski-codes CLI: output formats, exit
codes, and the construct -> verify pipeline."""

import json
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = 0


def run(args, stdin=None):
    return subprocess.run([BIN] + args, input=stdin, capture_output=True, text=True)


def check(name, cond):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL: {name}")
    else:
        print(f"ok:   {name}")


# gen
r = run(["gen", "--n", "2", "--k", "3", "--format", "edgelist"])
check("gen edgelist has 12 lines", r.returncode == 0 and len(r.stdout.splitlines()) == 12)

r = run(["gen", "--n", "1", "--k", "3", "--format", "dot"])
check("gen dot triangle", r.returncode == 0 and r.stdout.count("--") == 3
      and r.stdout.startswith("graph"))

r = run(["gen", "--n", "2", "--k", "3", "--format", "json"])
data = json.loads(r.stdout)
check("gen json", data["n"] == 2 and data["k"] == 3 and len(data["edges"]) == 12)

r2 = run(["gen", "--n", "2", "--k", "3", "--format", "json"])
check("gen deterministic", r.stdout == r2.stdout)

r = run(["gen", "--n", "2", "--k", "2"])
check("gen rejects k<3 with exit 2", r.returncode == 2 and r.stderr)

# construct -> verify pipeline
for n, k, kind, size in [(2, 4, "td", 4), (3, 3, "id", 18), (2, 3, "ld", 3)]:
    r = run(["construct", "--n", str(n), "--k", str(k), "--kind", kind])
    lines = r.stdout.splitlines()
    labels = [l for l in lines if not l.startswith("#")]
    check(f"construct {kind} S({n},{k}) emits {size} labels",
          r.returncode == 0 and len(labels) == size)
    check(f"construct {kind} trailer", lines[-1].startswith("# size=")
          and "verified=true" in lines[-1])
    v = run(["verify", "--n", str(n), "--k", str(k), "--kind", kind, "--code", "-"],
            stdin=r.stdout)
    check(f"construct|verify {kind} S({n},{k})", v.returncode == 0
          and v.stdout.strip() == "VALID")

r = run(["construct", "--n", "1", "--k", "3", "--kind", "id"])
check("construct rejects n=1 identifying", r.returncode == 2)

# verify failures
r = run(["verify", "--n", "2", "--k", "3", "--kind", "td", "--code", "-"], stdin="")
check("verify empty code exits 1 with witness", r.returncode == 1
      and "uncovered" in json.loads(r.stdout)["witness"])

with tempfile.NamedTemporaryFile("w", suffix=".code", delete=False) as f:
    f.write("0,7\n")
    bad = f.name
r = run(["verify", "--n", "2", "--k", "3", "--kind", "dom", "--code", bad])
check("verify out-of-range label exits 2", r.returncode == 2)

# solve
r = run(["solve", "--n", "2", "--k", "3", "--kind", "id"])
data = json.loads(r.stdout)
check("solve id S(2,3)", r.returncode == 0 and data["min_size"] == 6
      and data["status"] == "ProvedOptimal" and len(data["witness"]) == 6)

r = run(["solve", "--n", "2", "--k", "5", "--kind", "td"])
check("solve td S(2,5)", r.returncode == 0 and json.loads(r.stdout)["min_size"] == 6)

r = run(["solve", "--n", "1", "--k", "3", "--kind", "id"])
check("solve infeasible exits 4", r.returncode == 4
      and json.loads(r.stdout)["status"] == "Infeasible")

r = run(["solve", "--n", "2", "--k", "4", "--kind", "dom", "--node-budget", "1",
         "--no-structural-bound"])
check("solve budget exhausted exits 3", r.returncode == 3
      and json.loads(r.stdout)["status"] == "BudgetExhausted")

# table
r = run(["table", "--n", "2-3", "--k", "3-4", "--kind", "id", "--format", "csv"])
rows = [l.split(",") for l in r.stdout.splitlines()[1:]]
check("table id predicted column", [row[3] for row in rows] == ["6", "12", "18", "48"])

r = run(["table", "--n", "2", "--k", "3", "--kind", "dom", "--format", "csv"])
check("table dom S(2,3)", r.stdout.splitlines()[1].split(",")[3] == "3")

r = run(["table", "--n", "2", "--k", "4-5", "--kind", "td", "--format", "csv"])
check("table td row values",
      [l.split(",")[3] for l in r.stdout.splitlines()[1:]] == ["4", "6"])

r = run(["table", "--n", "3-2", "--k", "3"])
check("table rejects empty range", r.returncode == 2)

# conjecture
for n, k, bound in [(2, 3, 6), (2, 4, 12), (4, 3, 54)]:
    r = run(["conjecture", "--n", str(n), "--k", str(k), "--solve-cap", "100"])
    check(f"conjecture S({n},{k})", r.returncode == 0
          and f"bound={bound}" in r.stdout and "ATTAINED" in r.stdout
          and "NOT ATTAINED" not in r.stdout)

print(f"{failures} failures" if failures else "all cli checks passed")
sys.exit(1 if failures else 0)
