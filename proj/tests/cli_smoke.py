"""End-to-end run of the spgap CLI: every subcommand, schema validation of
the JSON outputs, CSV headers, determinism of gen and the exit codes."""

import argparse
import csv
import filecmp
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if expect is not None and proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc


def csv_header(path):
    with open(path, newline="") as f:
        return next(csv.reader(f))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schema", required=True)
    opts = ap.parse_args()
    cli = opts.cli
    validator = jsonschema.Draft202012Validator(json.loads(Path(opts.schema).read_text()))

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        a, b = tmp / "a", tmp / "b"
        run(cli, "gen", "--n", "4,6,8", "--seed", "7", "--out", str(a))
        run(cli, "gen", "--n", "4,6,8", "--seed", "7", "--out", str(b), "--jobs", "3")
        names = [f"{kind}_{n}{ext}" for n in (4, 6, 8) for kind, ext in (("Y", ".g"), ("X", ".tri"), ("X", ".json"))]
        match, mismatch, errors = filecmp.cmpfiles(a, b, names, shallow=False)
        if mismatch or errors:
            sys.exit(f"gen is not deterministic: {mismatch + errors}")

        reports = [a / f"X_{n}.json" for n in (4, 6, 8)]

        verify = tmp / "verify.json"
        proc = run(cli, "verify", "--n", "4,6,8", "--in", str(a), "--cycles", "16,32", "--out", str(verify),
                   expect=None)
        report = json.loads(verify.read_text())
        if proc.returncode != (0 if report["pass"] else 2):
            sys.exit(f"verify exit {proc.returncode} disagrees with pass = {report['pass']}")
        reports.append(verify)

        for name, args in {
            "spectrum": ["spectrum", "--in", str(a / "X_8.tri")],
            "mixing": ["mixing", "--in", str(a / "X_4.tri")],
            "density": ["density", "--in", str(a / "Y_8.g"), "--format", "json"],
        }.items():
            out = tmp / f"{name}.json"
            run(cli, *args, "--out", str(out))
            reports.append(out)

        for path in reports:
            errs = sorted(validator.iter_errors(json.loads(path.read_text())), key=str)
            if errs:
                sys.exit(f"{path.name}: {errs[0].message}")
            print("schema ok", path.name)

        headers = {
            "spectrum": (["spectrum", "--in", str(a / "X_8.tri"), "--format", "csv"],
                         ["vertices", "edges", "diam", "lambda1", "residual", "method"]),
            "mixing": (["mixing", "--in", str(a / "X_4.tri"), "--format", "csv"], ["start", "t", "tv"]),
            "density": (["density", "--in", str(a / "Y_8.g")], ["t_start", "t_end", "rho"]),
        }
        for name, (args, header) in headers.items():
            out = tmp / f"{name}.csv"
            run(cli, *args, "--out", str(out))
            if csv_header(out) != header:
                sys.exit(f"{name}.csv header {csv_header(out)}")
            print("csv ok", name)

        run(cli, "--help")
        run(cli, "gen", "--n", "9", "--seed", "1", "--out", str(tmp / "c"), expect=1)
        run(cli, "gen", "--n", "8", expect=1)
        run(cli, "verify", expect=1)
        run(cli, "verify", "--cycles", "4", expect=1)
        run(cli, "spectrum", "--in", str(tmp / "missing.g"), expect=3)
        run(cli, "mixing", "--in", str(a / "X_4.tri"), "--policy", "best", expect=1)
        run(cli, "density", "--in", str(a / "Y_8.g"), "--root", "100000", expect=1)
        print("exit codes ok")


if __name__ == "__main__":
    main()
