"""Runs the CLI against fixed expectations: exit codes, golden output, determinism."""

import json
import subprocess
import sys
from pathlib import Path

CLI = sys.argv[1]
FIXTURES = Path(sys.argv[2])
failures = []


def run(name, code, *args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != code:
        failures.append(f"{name}: exit {proc.returncode}, expected {code}\n{proc.stdout}{proc.stderr}")
    else:
        print(f"{name}: ok")
    return proc.stdout


def expect(name, got, want):
    if got != want:
        failures.append(f"{name}: got {got!r}, expected {want!r}")


J = "0;1;1;0"

expect("act", run("act", 0, "act", "--p", "2", "--matrix", J, "--poly", "1,1,0,1").strip(), "1,0,1,1")
expect("act-frobenius",
       run("act-frobenius", 0, "act", "--p", "2", "--n", "2", "--matrix", "1;0;0;1", "--frob", "1",
           "--poly", "[0,1],1,0,1").strip(),
       "[1,1],1,0,1")
run("tower-bad-prime", 3, "tower", "--p", "4", "--n", "2")

for k in (3, 5):
    out = run(f"golden-k{k}", 0, "invariants", "--p", "2", "--n", "2", "--matrix", J, "--degree", str(k),
              "--output", "json")
    expect(f"golden-k{k}", out, (FIXTURES / f"invariants_q2_n2_antidiag_k{k}.json").read_text())
out = run("golden-scrim", 0, "scrim", "--q", "2", "--degree", "5", "--mode", "list", "--output", "json")
expect("golden-scrim", out, (FIXTURES / "scrim_q2_k5.json").read_text())

run("both-agree", 0, "invariants", "--p", "2", "--n", "2", "--matrix", J, "--degree", "5", "--method", "both")
out = run("census-k4", 0, "invariants", "--p", "2", "--n", "2", "--matrix", J, "--degree", "4",
          "--method", "census", "--output", "json")
expect("census-k4", json.loads(out)["entries"][0]["count"] if out else None, 0)

expect("scrim-count", run("scrim-count", 0, "scrim", "--q", "2", "--degree", "5").strip(), "6")
run("scrim-construct", 0, "scrim", "--q", "2", "--degree", "3", "--mode", "construct")

run("degree-too-large", 4, "invariants", "--p", "2", "--n", "2", "--matrix", J, "--degree", "15")
run("census-budget", 4, "invariants", "--p", "2", "--n", "2", "--matrix", J, "--degree", "5",
    "--method", "census", "--cap-census", "100")
run("scrim-even", 3, "scrim", "--q", "2", "--degree", "4")
run("degree-too-small", 3, "invariants", "--p", "2", "--n", "2", "--matrix", J, "--degree", "1")
run("singular", 3, "invariants", "--p", "2", "--n", "2", "--matrix", "1;1;1;1", "--degree", "3")
run("bad-matrix", 2, "invariants", "--p", "2", "--n", "2", "--matrix", "0;1;1", "--degree", "3")
run("bad-poly", 2, "act", "--p", "2", "--matrix", J, "--poly", "1,,1")
run("missing-option", 2, "act", "--p", "2", "--poly", "1,1,1")

first = run("verify-a", 0, "verify", "--output", "json", "--seed", "7")
second = run("verify-b", 0, "verify", "--output", "json", "--seed", "7")
expect("verify-deterministic", first == second, True)

for f in failures:
    print("FAIL", f)
sys.exit(1 if failures else 0)
