"""End-to-end checks of the btmf command line: values, exit codes, schema, determinism."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BTMF = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
FAILURES = []


def run(*args):
    proc = subprocess.run([BTMF, *args], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args, expect_code=0):
    code, out, err = run(*args)
    check(code == expect_code, f"{args}: exit {code}, expected {expect_code}: {err.strip()}")
    doc = json.loads(out)
    errors = sorted(VALIDATOR.iter_errors(doc), key=str)
    check(not errors, f"{args}: schema violations {[e.message for e in errors[:3]]}")
    code2, out2, _ = run(*args)
    check(out == out2 and code == code2, f"{args}: output is not deterministic")
    return doc


def check(cond, message):
    if not cond:
        FAILURES.append(message)


def rat(num, den=1):
    return {"num": num, "den": den}


doc = run_json("norm", "alpha", "--q", "2", "--r", "3", "--k", "2", "--x", "1,1,0")
check(doc["log_norm"] == rat(-2), f"norm alpha_2 at (1,1,0): {doc['log_norm']}")

doc = run_json("norm", "alpha", "--q", "3", "--k", "1", "--x", "1/2,0")
check(doc["log_norm"]["den"] >= 1, "rational point norm")

doc = run_json("norm", "coeff", "--q", "3", "--k", "1", "--d", "1", "--x", "0,0,0")
check(doc["log_norm"] == rat(3), f"coefficient norm at the origin: {doc['log_norm']}")

doc = run_json("inner-degree", "--form", "alpha:2", "--q", "2", "--r", "3", "--vertex", "0,0")
check(doc["inner_degree"] == 4, f"inner degree at 0: {doc['inner_degree']}")

doc = run_json("inner-degree", "--form", "alpha:2", "--q", "3", "--vertex", "1,1,0")
check(doc["inner_degree"] == 72, f"inner degree at (1,1), q=3: {doc['inner_degree']}")

doc = run_json("wk", "--q", "2", "--r", "3", "--k", "2", "--bound", "3")
check(doc["vertices"] == [[0, 0], [1, 1], [2, 1], [3, 1]], f"wk vertices: {doc['vertices']}")

doc = run_json("vdp", "--form", "alpha:2", "--edge", "0,0,0->1,1,0")
check(doc["value"] == -2, f"vdp 0 -> p: {doc['value']}")

doc = run_json("vdp", "--form", "alpha:2", "--vertex", "0,0", "--direction", "1:0:0")
check(doc["value"] == 1, f"vdp toward (1:0:0): {doc['value']}")

doc = run_json("vdp", "--form", "alpha:2", "--edge", "3,1,0->3,0,0")
check(doc["value"] == 2, f"vdp (3,1) -> (3,0): {doc['value']}")

doc = run_json("charseq", "--x", "1,1,0", "--count", "6")
check(len(doc["entries"]) == 6, "charseq length")

doc = run_json("case-study", "--q", "2")
check(doc["passed"], "case study")
check([v["inner_degree"] for v in doc["vertices"][:2]] == [4, 12], "case-study inner degrees")

doc = run_json("render", "--mode", "inner-degree:2", "--bound", "4")
labels = {tuple(v["vertex"]): v.get("label") for v in doc["vertices"]}
check(labels[(1, 1)] == "12" and labels[(0, 0)] == "4", f"render labels {labels}")

doc = run_json("verify", "--suite", "oracle")
check(doc["passed"] and [c["id"] for c in doc["criteria"]] == [2, 14], "verify oracle")

code, out, _ = run("render", "--mode", "wk:2", "--bound", "6", "--format", "svg")
check(code == 0 and out.startswith("<?xml") and 'class="heavy"' in out, "svg render")
with tempfile.TemporaryDirectory() as tmp:
    target = Path(tmp) / "w2.svg"
    code, _, _ = run("render", "--mode", "wk:2", "--bound", "6", "--format", "svg", "--output", str(target))
    check(code == 0 and target.read_text() == out, "render --output")

code, out, _ = run("render", "--mode", "wk:3", "--bound", "4", "--format", "text")
check(code == 0 and "legend:" in out, "ascii render")

# validation errors exit 2
for args in [
    ("norm", "alpha", "--k", "2", "--x", "1,2,0"),
    ("norm", "alpha", "--q", "6", "--k", "1", "--x", "0,0"),
    ("wk", "--k", "2", "--bound", "65"),
    ("inner-degree", "--form", "coeff:2:1", "--vertex", "0,0"),
    ("inner-degree", "--form", "beta:2", "--vertex", "0,0"),
    ("render", "--mode", "wk:2", "--r", "4"),
    ("vdp", "--form", "alpha:2", "--edge", "0,0,0->2,0,0"),
    ("verify", "--suite", "nothing"),
    ("frobnicate",),
]:
    code, _, _ = run(*args)
    check(code == 2, f"{args}: exit {code}, expected 2")

if FAILURES:
    for f in FAILURES:
        print("FAIL:", f)
    sys.exit(1)
print("all CLI checks passed")
