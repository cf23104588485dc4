#!/usr/bin/env python3
# Copyright 2026 The foliage Authors.
# SPDX-License-Identifier: Apache-2.0
"""Validates germ files and CLI output against the JSON schemas."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

TRACE_ARGS = ["--start", "0.6,0.2,0.5,-0.3", "--tmax", "60"]
INVARIANT_ARGS = ["--starts", "2", "--tmax", "60"]


def load(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def run(cli, args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, timeout=900)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schemas", required=True, type=pathlib.Path)
    parser.add_argument("--germs", required=True, type=pathlib.Path)
    opts = parser.parse_args()

    germ_schema = load(opts.schemas / "germ.schema.json")
    report_schema = load(opts.schemas / "report.schema.json")
    registry = Registry().with_resources(
        [(germ_schema["$id"], Resource.from_contents(germ_schema)),
         ("germ.schema.json", Resource.from_contents(germ_schema))])
    germ_validator = Draft202012Validator(germ_schema)
    report_validator = Draft202012Validator(report_schema, registry=registry)

    germs = sorted(opts.germs.glob("*.json"))
    failures = []

    def check(label, args, allowed=(0, 2)):
        code, out, err = run(opts.cli, args)
        if code not in allowed:
            failures.append(f"{label}: exit {code}: {err.strip()}")
            return
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as exc:
            failures.append(f"{label}: invalid json: {exc}")
            return
        errors = sorted(report_validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:3]:
            failures.append(f"{label}: {'/'.join(map(str, e.path))}: {e.message[:200]}")
        code2, out2, _ = run(opts.cli, args)
        if code2 != code or out2 != out:
            failures.append(f"{label}: output not deterministic")

    for germ in germs:
        for e in germ_validator.iter_errors(load(germ)):
            failures.append(f"{germ.name}: {e.message[:200]}")
        g = str(germ)
        check(f"resonances {germ.name}", ["resonances", g])
        data = load(germ)
        if data["n"] != 2:
            code, _, _ = run(opts.cli, ["classify", g])
            if code != 1:
                failures.append(f"classify {germ.name}: expected exit 1, got {code}")
        else:
            check(f"classify {germ.name}", ["classify", g])
            check(f"normal-form {germ.name}", ["normal-form", g, "--degree", "4"])
            check(f"trace {germ.name}", ["trace", g, *TRACE_ARGS])
            check(f"invariants {germ.name}", ["invariants", g, *INVARIANT_ARGS])
    two_d = [g for g in germs if load(g)["n"] == 2]
    for a, b in zip(two_d, two_d[1:]):
        check(f"equiv {a.name} {b.name}", ["equiv", str(a), str(b)])
    for a in germs:
        check(f"nd-equiv {a.name}", ["nd-equiv", str(a), str(a)])

    for f in failures:
        print("FAIL", f)
    print(f"{len(germs)} germs checked, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
