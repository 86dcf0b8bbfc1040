# Copyright 2026 The starshape Authors.
# SPDX-License-Identifier: Apache-2.0
"""Command-line behaviour tests for the starshape tool.

Usage: cli_test.py --cli PATH --data DIR --schemas DIR CASE
"""

import argparse
import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

ARGS = None


def run(*argv, env=None, check_exit=0):
    full_env = dict(os.environ)
    full_env.pop("STARSHAPE_THREADS", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([ARGS.cli, *argv], capture_output=True, text=True, env=full_env)
    if check_exit is not None and proc.returncode != check_exit:
        raise AssertionError(
            f"{' '.join(argv)}: exit {proc.returncode}, expected {check_exit}\n"
            f"stdout:\n{proc.stdout[-2000:]}\nstderr:\n{proc.stderr[-2000:]}")
    return proc


def data(name):
    return os.path.join(ARGS.data, name)


def schema(name):
    with open(os.path.join(ARGS.schemas, name)) as f:
        return json.load(f)


def validate(doc, name):
    jsonschema.validate(doc, schema(name), cls=jsonschema.Draft202012Validator)


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], [[float(v) for v in r] for r in rows[1:]]


def expect(cond, message):
    if not cond:
        raise AssertionError(message)


# --------------------------------------------------------------------------

def case_determinism():
    base = ["sample", "--dist", data("hypercube3.json"), "--n", "20000", "--seed", "11"]
    a = run(*base).stdout
    expect(a == run(*base).stdout, "repeat run differs")
    expect(a == run(*base, env={"STARSHAPE_THREADS": "1"}).stdout, "1 worker differs")
    expect(a == run(*base, env={"STARSHAPE_THREADS": "3"}).stdout, "3 workers differ")
    other = run("sample", "--dist", data("hypercube3.json"), "--n", "20000", "--seed", "12").stdout
    expect(a != other, "different seeds gave identical output")
    header, rows = read_csv(a)
    expect(header == ["x1", "x2", "x3"], f"header {header}")
    expect(len(rows) == 20000, "row count")


def case_sample_decompose():
    out = run("sample", "--dist", data("ellipse.json"), "--n", "500", "--decompose").stdout
    header, rows = read_csv(out)
    expect(header == ["x1", "x2", "g", "theta"], f"header {header}")
    for x1, x2, g, theta in rows:
        # Gauge of diag(1, 4): sqrt(x1^2 + x2^2 / 4).
        expect(abs(g - math.hypot(x1, x2 / 2)) <= 1e-12 * g, "g column")
        expect(abs(math.atan2(x2, x1) % (2 * math.pi) - theta) <= 1e-12, "theta column")
    out = run("sample", "--dist", data("crosspolytope3.json"), "--n", "200", "--decompose").stdout
    header, rows = read_csv(out)
    expect(header == ["x1", "x2", "x3", "g", "zprime1", "zprime2", "zprime3"], f"header {header}")
    for r in rows:
        expect(abs(sum(abs(v) for v in r[:3]) - r[3]) <= 1e-12 * r[3], "l1 gauge column")
        expect(abs(math.fsum(v * v for v in r[4:]) - 1.0) <= 1e-12, "unit direction")


def case_invalid_config():
    proc = run("sample", "--dist", data("bad_gauge.json"), check_exit=2)
    expect("gauge.params.sigma" in proc.stderr, proc.stderr)
    proc = run("sample", "--dist", data("unknown_field.json"), check_exit=2)
    expect("unknown field 'gauge.params.radius'" in proc.stderr, proc.stderr)
    proc = run("density", "--dist", data("ellipse.json"), "--at", "0,0", check_exit=2)
    expect("ZeroVector" in proc.stderr, proc.stderr)
    run("sample", "--dist", data("ellipse.json"), "--format", "xml", check_exit=2)
    run("sample", "--dist", "/nonexistent.json", check_exit=2)
    # The fixture files themselves conform to the configuration schema.
    for name in ["ellipse.json", "ellipse_identity.json", "hypercube2.json", "hypercube3.json",
                 "crosspolytope2.json", "crosspolytope3.json", "tampered.json", "hexagon.json"]:
        with open(data(name)) as f:
            validate(json.load(f), "distribution.schema.json")
    with open(data("unknown_field.json")) as f:
        try:
            validate(json.load(f), "distribution.schema.json")
        except jsonschema.ValidationError:
            pass
        else:
            raise AssertionError("schema accepted an unknown gauge field")


def case_verify_tampered():
    with tempfile.TemporaryDirectory() as tmp:
        report = os.path.join(tmp, "report.jsonl")
        proc = run("verify", "--dist", data("tampered.json"), "--report", report, check_exit=1)
        expect("criterion 2 twin-route consistency: FAIL" in proc.stdout, proc.stdout)
        with open(report) as f:
            lines = [json.loads(line) for line in f if line.strip()]
        for line in lines:
            validate(line, "criterion.schema.json")
        expect(any(l["criterion"] == 2 and not l["pass"] for l in lines), "report lacks failure")


def case_verify_ellipse():
    with tempfile.TemporaryDirectory() as tmp:
        report = os.path.join(tmp, "report.jsonl")
        proc = run("verify", "--dist", data("ellipse.json"), "--report", report)
        expect("all criteria passed" in proc.stdout, proc.stdout)
        with open(report) as f:
            lines = [json.loads(line) for line in f if line.strip()]
        expect([l["criterion"] for l in lines] == [2, 3, 4, 5, 7], f"criteria {lines}")
        for line in lines:
            validate(line, "criterion.schema.json")


def case_verify_matrix():
    proc = run("verify", "--dist", data("wishart_p2.json"), "--n", "50000")
    for k in (8, 9, 10):
        expect(f"criterion {k} " in proc.stdout, proc.stdout)


def case_matrix_invariants():
    out = run("matrix", "--group", "lt", "--p", "2", "--n", "2000", "--seed", "4").stdout
    header, rows = read_csv(out)
    expect(header == ["t11", "t21", "t22", "u11", "u12", "u22"], f"header {header}")
    for t11, t21, t22, u11, u12, u22 in rows:
        expect(t11 > 0 and t22 > 0, "T diagonal positive")
        det = u11 * u22 - u12 * u12
        tr = u11 + u22
        expect(det > 0 and (1 - tr + det) > 0 and tr < 2, "0 < U < I")
    out = run("matrix", "--group", "gl", "--p", "3", "--n", "2000", "--seed", "4").stdout
    header, rows = read_csv(out)
    expect(header[-3:] == ["l1", "l2", "l3"] and len(header) == 12, f"header {header}")
    for r in rows:
        l1, l2, l3 = r[-3:]
        expect(1 > l1 > l2 > l3 > 0, "ordered roots in (0, 1)")
        b = [r[0:3], r[3:6], r[6:9]]
        for j in range(3):
            col = [b[i][j] for i in range(3)]
            first = next(v for v in col if v != 0)
            expect(first > 0, "first nonzero entry of each B column is positive")
    proc = run("matrix", "--group", "gl", "--p", "2", "--n", "100", "--format", "json")
    doc = json.loads(proc.stdout)
    validate(doc, "table.schema.json")
    expect("rows written: 100" in proc.stderr, proc.stderr)


def case_json_outputs():
    doc = json.loads(run("sample", "--dist", data("hypercube2.json"), "--n", "10",
                         "--decompose", "--format", "json").stdout)
    validate(doc, "table.schema.json")
    expect(len(doc["rows"]) == 10 and len(doc["columns"]) == 4, "sample json shape")

    doc = json.loads(run("constant", "--dist", data("ellipse_identity.json")).stdout)
    validate(doc, "constant.schema.json")
    expect(abs(doc["c0_spherical"] - 1 / (2 * math.pi)) <= 1e-12, "ellipse c0")

    doc = json.loads(run("density", "--dist", data("ellipse_identity.json"), "--at", "1,1",
                         "--format", "json").stdout)
    validate(doc, "density.schema.json")
    expect(abs(doc["points"][0]["density"] - math.exp(-1) / (2 * math.pi)) <= 1e-15, "density")

    doc = json.loads(run("direction-density", "--dist", data("hypercube2.json"), "--theta", "0",
                         "--format", "json").stdout)
    validate(doc, "density.schema.json")
    expect(abs(doc["points"][0]["density"] - 0.125) <= 1e-12, "direction density at theta 0")

    with tempfile.TemporaryDirectory() as tmp:
        samples = os.path.join(tmp, "s.csv")
        report = os.path.join(tmp, "r.json")
        run("sample", "--dist", data("hexagon.json"), "--n", "20000", "--decompose", "--out", samples)
        proc = run("independence-test", "--in", samples, "--cols", "g,theta", "--report", report,
                   "--format", "json")
        validate(json.loads(proc.stdout), "test_report.schema.json")
        with open(report) as f:
            validate(json.loads(f.read()), "test_report.schema.json")
        run("independence-test", "--in", samples, "--cols", "g,missing", check_exit=2)


CASES = {name[5:]: fn for name, fn in globals().items() if name.startswith("case_")}


def main():
    global ARGS
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--data", required=True)
    parser.add_argument("--schemas", required=True)
    parser.add_argument("case", choices=sorted(CASES))
    ARGS = parser.parse_args()
    try:
        CASES[ARGS.case]()
    except (AssertionError, jsonschema.ValidationError) as e:
        print(f"FAIL {ARGS.case}: {e}", file=sys.stderr)
        return 1
    print(f"ok {ARGS.case}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
