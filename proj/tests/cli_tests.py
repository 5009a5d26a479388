#!/usr/bin/env python3
"""End-to-end checks of the chebseq command-line tool.

Usage: cli_tests.py <path-to-binary> <fixture-dir>
"""
import json
import os
import subprocess
import sys
import tempfile

BIN = os.path.abspath(sys.argv[1] if len(sys.argv) > 1 else "./build/chebseq")
DATA = os.path.abspath(sys.argv[2] if len(sys.argv) > 2 else "./data")

failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(f"{' '.join(args)}: exit {proc.returncode} != {expect_code}\n{proc.stderr}")
    return proc.stdout


def check(cond, label):
    if not cond:
        failures.append(label)


# seq: the n = 7 row
out = run("seq", "--kind", "s", "--n", "7", "--k", "0..8")
check(out.split() == "1 8 55 377 2584 17711 121393 832040 5702887".split(), "seq n=7 row")

# negative indices and other kinds
out = run("seq", "--kind", "r", "--n", "34", "--k", "0..3", "--format", "csv")
check(out.splitlines()[1:] == ["0,1", "1,33", "2,1121", "3,38081"], "seq csv r n=34")

# search-a single: certified -1 with unique candidate
res = json.loads(run("search-a", "--n", "110"))
check(res["a"] == -1 and res["certification"] == "TheoremUniqueCandidate", "search-a 110")
check(res["certificate"]["candidate_index"] == 1, "search-a 110 candidate")

# search-a batch over n = 1..34 matches the vendored row
out = run("search-a", "--n", "1..34", "--format", "csv")
got = [line.split(",")[1] for line in out.splitlines()[1:]]
expected = []
with open(os.path.join(DATA, "a269254.txt")) as fh:
    for line in fh:
        if not line.startswith("#"):
            expected.append(line.split()[1])
check(got == expected, f"search-a batch row: {got}")

# the r-side analogue
out = run("search-a", "--n", "1..34", "--kind", "r", "--format", "csv")
got = [line.split(",")[1] for line in out.splitlines()[1:]]
expected = []
with open(os.path.join(DATA, "a269252.txt")) as fh:
    for line in fh:
        if not line.startswith("#"):
            expected.append(line.split()[1])
check(got == expected, f"search-a r batch row: {got}")

# detect / factor / certify on the worked example
reps = json.loads(run("detect", "110"))
check(reps == [{"p": 3, "j": "5"}], "detect 110")
certs = json.loads(run("factor", "--kind", "s", "--n", "110", "--k", "6"))
check(certs[0]["factor_a"] == "116876761" and certs[0]["factor_b"] == "15289", "factor 110 k=6")
cert = json.loads(run("certify", "34", "--kind", "r"))
check(cert["rule"] == "REvenSplit" and cert["a"] == -1, "certify r 34")

# verify: clean exit and deterministic output under a fixed seed,
# independent of worker count
out1 = run("verify", "--all", "--count", "40", "--seed", "7")
out2 = run("verify", "--all", "--count", "40", "--seed", "7", "--jobs", "4")
check(out1 == out2, "verify deterministic for fixed seed across --jobs")
check("failures" in out1 and " 0 failures" in out1, "verify reports zero failures")

# verify with a single identity
out = run("verify", "--identity", "gcd-euclid", "--count", "25")
check("gcd-euclid: 25 tuples" in out, "verify single identity")

# periods
info = json.loads(run("periods", "--n", "110", "--q", "3"))
check(info["pi"] == 3 and info["zero_positions"] == [1], "periods 110 mod 3")
batch = json.loads(run("periods", "--n", "6", "--q-max", "30"))
check([row["q"] for row in batch] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29], "periods q-max")

# primitive divisors
rep = json.loads(run("primitive-divisors", "--n", "3", "--k", "2"))
check(rep["found"] == [11] and rep["cofactor"] == "1", "primitive divisors s_2(3)")

# stats from fixtures: slope, csv, svg
with tempfile.TemporaryDirectory() as tmp:
    csv_path = os.path.join(tmp, "out.csv")
    svg_path = os.path.join(tmp, "out.svg")
    report = json.loads(
        run("stats", "--n", "3", "--fixtures", "a117522.txt", "--csv", csv_path, "--svg", svg_path)
    )
    check(abs(float(report["C"]) - 0.2553739565) < 1e-8, "stats slope n=3")
    check(report["lambda"].startswith("2.6180339887498948482"), "stats lambda digits")
    rows = open(csv_path).read().splitlines()
    check(rows[0] == "N,k,digits,loglog" and len(rows) == 44, "stats csv shape")
    svg = open(svg_path).read()
    check(svg.startswith("<svg") and "<circle" in svg, "stats svg")

# primes enumeration with resume token
out = json.loads(run("primes", "--n", "3", "--kind", "r", "--kmax", "25"))
check(out["indices"] == [1, 2, 3, 5, 6, 8, 11, 14, 21, 23], "primes r n=3")
check(out["resume_k"] == 25, "primes resume token")

# a vanishing budget yields a resumable partial result
out = json.loads(run("primes", "--n", "3", "--kmax", "25", "--budget", "1e-9"))
check(not out["complete"] and out["resume_k"] == 0, "primes budget partial")
out = json.loads(run("primes", "--n", "3", "--kmax", "25", "--resume-from", "9"))
check(out["indices"] == [15, 18, 20, 23], "primes resume-from")

# search-a json batch keeps one object per n
rows = json.loads(run("search-a", "--n", "7..9", "--format", "json"))
check([r["a"] for r in rows] == [-1, 2, 2], "search-a json batch")

# bfile-check passes on a fixture and fails on corruption
ok = json.loads(run("bfile-check", "--file", "a298677.txt", "--kind", "s", "--n", "110"))
check(ok["pass"], "bfile-check fixture")
with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as fh:
    fh.write("0 1\n1 7\n2 42\n")
    bad = fh.name
out = run("bfile-check", "--file", bad, "--kind", "s", "--n", "6", expect_code=1)
check(json.loads(out)["mismatches"][0]["index"] == 2, "bfile-check corruption")
os.unlink(bad)

# fixture directory override via the environment
env = dict(os.environ, CHEBSEQ_FIXTURES=DATA)
proc = subprocess.run(
    [BIN, "bfile-check", "--file", "a033890.txt", "--kind", "s", "--n", "7"],
    capture_output=True, text=True, env=env, cwd=tempfile.gettempdir(),
)
check(proc.returncode == 0 and json.loads(proc.stdout)["pass"], "CHEBSEQ_FIXTURES override")

# usage errors exit 2
run("definitely-not-a-subcommand", expect_code=2)
run("seq", "--kind", "x", "--n", "3", expect_code=2)

if failures:
    print("CLI TEST FAILURES:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("cli tests: all passed")
