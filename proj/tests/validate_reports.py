#!/usr/bin/env python3
"""Run the CLI for every report kind, validate the JSON against the schema, check exit codes and determinism."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def run(tsid, args, expect):
    proc = subprocess.run([tsid, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def construct(tsid, work, name, *params):
    path = work / f"{name}-{'-'.join(map(str, params))}.dgf"
    path.write_text(run(tsid, ["construct", name, *map(str, params)], 0))
    return str(path)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("tsid")
    parser.add_argument("schema")
    opts = parser.parse_args()

    schema = json.loads(pathlib.Path(opts.schema).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        work = pathlib.Path(tmp)
        p2 = construct(opts.tsid, work, "directed-path", 2)
        tt4 = construct(opts.tsid, work, "transitive-tournament", 4)
        tt7 = construct(opts.tsid, work, "transitive-tournament", 7)
        s11 = construct(opts.tsid, work, "star", 1, 1)
        s20 = construct(opts.tsid, work, "star", 2, 0)
        i4 = construct(opts.tsid, work, "impartial-i4")
        uh = construct(opts.tsid, work, "unique-hom-digraph", 16)
        bcv = str(work / "h.bcv")
        edge_bcv = work / "edge.bcv"
        edge_bcv.write_text("2 1\n1 0 | 1 1\n")
        edge_bcv = str(edge_bcv)

        cases = [
            ("count", ["count", p2, tt4], 0),
            ("count", ["count", "--mode", "hom", "--pin", "0:1", p2, tt4], 0),
            ("property", ["check", "anti", p2, "--exhaustive", "5"], 0),
            ("property", ["check", "anti", s20, "--family", "transitive", "--n", "4..14"], 2),
            ("property", ["--seed", "7", "check", "anti", s11, "--family", "two-block", "--n", "20", "--c", "1/10"], 0),
            ("property", ["check", "sidorenko", p2, "--exhaustive", "5", "--mode", "hom"], 0),
            ("property", ["check", "strong", s11, "--pin", "0", "--exhaustive", "5"], 0),
            ("property", ["check", "impartial", i4, "--n", "6"], 0),
            ("blowup", ["check", "blowup", tt7], 2),
            ("quasi", ["quasi", "--transitive", "10"], 0),
            ("quasi", ["--seed", "3", "quasi", "--two-block", "1/10", "30", "--samples", "50"], 0),
            ("cover-hypercube", ["cover", "hypercube", "4", "2", "--write-bcv", bcv], 0),
            ("cover-verify", ["cover", "verify", construct(opts.tsid, work, "transitive-tournament", 16), bcv], 2),
            ("cover-verify", ["cover", "verify", construct(opts.tsid, work, "directed-path", 1), edge_bcv], 0),
            ("two-path", ["cover", "two-path", uh], 0),
            ("two-path", ["cover", "two-path", construct(opts.tsid, work, "directed-path", 3)], 2),
            ("probe", ["--seed", "2024", "cover", "probe", uh, "--trials", "20"], 0),
        ]
        failures = 0
        for kind, args, expect in cases:
            try:
                report = json.loads(run(opts.tsid, args, expect))
                if report["kind"] != kind:
                    raise AssertionError(f"{args}: kind {report['kind']}, expected {kind}")
                errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
                if errors:
                    raise AssertionError(f"{args}: " + "; ".join(f"{list(e.path)}: {e.message}" for e in errors[:5]))
                print(f"ok    {kind:16} {' '.join(args[-3:])}")
            except (AssertionError, json.JSONDecodeError) as exc:
                failures += 1
                print(f"FAIL  {kind:16} {exc}")
        for args in (["count", p2, str(work / "missing.trn")], ["cover", "hypercube", "3", "4"]):
            try:
                run(opts.tsid, args, 1)
                print(f"ok    error exit     {' '.join(args[-2:])}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL  error exit     {exc}")
        for args in (
            ["--seed", "11", "quasi", "--two-block", "1/10", "40", "--samples", "200"],
            ["--seed", "2024", "cover", "probe", uh, "--trials", "30"],
            ["--seed", "7", "check", "anti", s11, "--family", "two-block", "--n", "16", "--c", "1/4"],
            ["check", "anti", s20, "--exhaustive", "6"],
        ):
            first = run(opts.tsid, ["--threads", "1", *args], 0)
            second = run(opts.tsid, ["--threads", "3", *args], 0)
            if first == second:
                print(f"ok    deterministic  {' '.join(args[:4])}")
            else:
                failures += 1
                print(f"FAIL  deterministic  {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
