"""End-to-end checks of the charsum executable: exit codes, JSON schema, CSV round trip."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
CSV_HEADER = "d,q,label,parity,check,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,tol,terms,tail_bound,pass"

failures = []


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def check(name, condition, detail=""):
    print(("ok   " if condition else "FAIL ") + name + (f": {detail}" if detail and not condition else ""))
    if not condition:
        failures.append(name)


def report_json(*args):
    code, out, err = run(*args, "--format", "json")
    doc = json.loads(out) if out else None
    if doc is not None:
        jsonschema.validate(doc, SCHEMA)
    return code, doc, err


def without_times(doc):
    for r in doc["reports"]:
        r["wall_time_ms"] = 0
    return doc


# characters
code, out, _ = run("characters", "-q", "5", "--format", "csv")
rows = list(csv.DictReader(io.StringIO(out)))
check("characters q=5 lists four", code == 0 and len(rows) == 4)
check("characters q=5 one real non-principal",
      sum(r["is_real"] == "true" and r["conductor"] != "1" for r in rows) == 1)
code, out, _ = run("characters", "-q", "1", "--format", "csv")
check("characters q=1 lists one", code == 0 and len(list(csv.DictReader(io.StringIO(out)))) == 1)
code, out, _ = run("characters", "-q", "12", "--format", "json")
doc = json.loads(out)
check("characters q=12 conductors", sorted(c["conductor"] for c in doc["characters"]) == [1, 3, 4, 12])
code, _, err = run("characters", "-q", "0")
check("characters q=0 is a usage error", code == 2 and "modulus" in err, err)

# verify-theorem
code, doc, _ = report_json("verify-theorem", "-q", "4", "--function", "t2", "--tol", "1e-8")
r = doc["reports"]
check("theorem q=4 t2 one passing report", code == 0 and len(r) == 1 and r[0]["pass"])
check("theorem q=4 t2 value", abs(r[0]["lhs"]["re"] + 0.5) < 1e-15 and abs(r[0]["rhs"]["re"] + 0.5) < 1e-8)
code, doc, _ = report_json("verify-theorem", "-q", "9", "--function", "exp")
check("theorem q=9 exp covers every primitive character",
      code == 0 and len(doc["reports"]) == 4 and all(x["pass"] for x in doc["reports"]))
code, doc, _ = report_json("verify-theorem", "-q", "6", "--function", "t2")
check("theorem q=6 has no primitive characters",
      code == 0 and doc["reports"] == [] and any("no primitive" in n for n in doc["summary"]["notices"]))
code, doc, _ = report_json("verify-theorem", "-q", "7", "--function", "step:1/4")
check("theorem q=7 step passes", code == 0 and all(x["pass"] for x in doc["reports"]))
code, _, err = run("verify-theorem", "-q", "5", "--function", "sin")
check("unknown function is a usage error", code == 2 and "unknown function" in err, err)

# example
code, doc, _ = report_json("example", "--id", "1", "-d", "-3")
r = doc["reports"][0]
check("example 1 d=-3 passes at -1/3", code == 0 and r["pass"] and abs(r["lhs"]["re"] + 1 / 3) < 1e-15)
code, doc, _ = report_json("example", "--id", "4", "-d", "-4", "--y", "0.5")
check("example 4 d=-4 y=0.5 passes", code == 0 and doc["reports"][0]["pass"])
code, _, err = run("example", "--id", "1", "-d", "5")
check("example 1 d=5 names the violated hypothesis", code == 2 and "example 1 requires χ(−1) = −1" in err, err)
code, doc, _ = report_json("example", "--id", "3", "-d", "8", "--tol", "1e-30")
check("unattainable tolerance fails with exit 1", code == 1 and not doc["reports"][0]["pass"])
code, _, _ = run("example", "--id", "5", "-d", "5")
check("id out of range is a usage error", code == 2)

# determinism
a = run("example", "--id", "2", "-d", "13", "--format", "json")[1]
b = run("example", "--id", "2", "-d", "13", "--format", "json")[1]
check("json is byte-identical apart from wall time", without_times(json.loads(a)) == without_times(json.loads(b)))
a = run("sweep", "--to", "12")[1]
b = run("sweep", "--to", "12")[1]
check("csv is byte-identical", a == b)

# sweep
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "sweep.csv")
    code, _, _ = run("sweep", "--to", "50", "--output", path)
    text = open(path).read()
    rows = list(csv.DictReader(io.StringIO(text)))
    check("sweep |d|<=50 exits 0 with all rows passing", code == 0 and rows and all(r["pass"] == "true" for r in rows))
    check("sweep header", text.splitlines()[0] == CSV_HEADER)
    keys = [(abs(int(r["d"])), int(r["d"]) > 0) for r in rows]
    check("sweep rows ordered by |d| then sign", keys == sorted(keys))
    # round trip: parse and re-serialize through the csv module
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER.split(","), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    check("csv round-trips through the csv module", buf.getvalue() == text)
    check("csv numbers parse as floats", all(float(r["abs_error"]) >= 0 for r in rows))

    empty = os.path.join(tmp, "empty.csv")
    code, _, _ = run("sweep", "--from", "14", "--to", "14", "--output", empty)
    check("empty sweep range writes the header only", code == 0 and open(empty).read() == CSV_HEADER + "\n")

    code, _, err = run("sweep", "--to", "10", "--output", os.path.join(tmp, "missing", "x.csv"))
    check("unwritable sweep path is an error", code == 2 and "output" in err, err)

code, doc, _ = report_json("sweep", "--to", "30")
check("sweep json publishes the remainder spread", code == 0 and doc["summary"]["remainder_ratio"]["count"] > 0)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
