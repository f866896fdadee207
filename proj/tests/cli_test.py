#!/usr/bin/env python3
"""End-to-end checks of the command-line tool.

Usage: cli_test.py <path-to-binary>
"""

import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = Path(sys.argv[1])
FAILURES = []


def run(*args):
    return subprocess.run([str(BIN), *args], capture_output=True, text=True)


def check(label, cond, extra=""):
    if cond:
        print(f"ok  {label}")
    else:
        print(f"FAIL {label} {extra}")
        FAILURES.append(label)


def main():
    tmp = Path(tempfile.mkdtemp())

    harmonic_seq = tmp / "harmonic.json"
    harmonic_seq.write_text(json.dumps({"kind": "power", "c": 1.0, "s": 1.0}))
    invsqrt_seq = tmp / "invsqrt.json"
    invsqrt_seq.write_text(json.dumps({"kind": "power", "c": 1.0, "s": 0.5}))
    finite_seq = tmp / "finite.json"
    finite_seq.write_text(json.dumps({"kind": "finite", "entries": [2.0, -3.0, 1.0]}))
    shift_fam = tmp / "shift.json"
    shift_fam.write_text(
        json.dumps({"kind": "shift", "base": {"kind": "finite", "entries": [1.0]}})
    )
    fin_fam = tmp / "finfam.json"
    fin_fam.write_text(
        json.dumps(
            {
                "kind": "explicit",
                "members": [
                    {"kind": "finite", "entries": [1.0, 0.5]},
                    {"kind": "finite", "entries": [0.0, 2.0]},
                ],
            }
        )
    )

    # norm on a_i = 1/i encloses pi^2/6 and exits 0
    out_path = tmp / "report.json"
    r = run("norm", "--seq", str(harmonic_seq), "--p", "1", "--w", "harmonic",
            "--tol", "1e-6", "--out", str(out_path))
    check("norm exit 0", r.returncode == 0, r.stderr)
    rep = json.loads(out_path.read_text())
    lo, hi = rep["norm_pth"]["lo"], rep["norm_pth"]["hi"]
    check("norm encloses pi^2/6", lo <= math.pi**2 / 6 <= hi, f"[{lo}, {hi}]")
    check("norm width", hi - lo <= 1e-6)
    check("report has digest and timing",
          "inputs_digest" in rep and "runtime_ms" in rep)

    # deterministic machine report (timing aside)
    r2 = run("norm", "--seq", str(harmonic_seq), "--p", "1", "--w", "harmonic",
             "--tol", "1e-6", "--out", str(out_path))
    rep2 = json.loads(out_path.read_text())
    rep.pop("runtime_ms"), rep2.pop("runtime_ms")
    check("norm report deterministic", rep == rep2)

    # member on 1/sqrt(i) with invsqrt weights: NotMember, exit 1
    r = run("member", "--seq", str(invsqrt_seq), "--p", "1", "--w", "invsqrt")
    check("member exit 1", r.returncode == 1, r.stdout + r.stderr)
    check("member says NotMember", "NotMember" in r.stdout)

    # seminorm and decompose on a finite sequence
    r = run("seminorm", "--seq", str(finite_seq), "--p", "1", "--w", "harmonic",
            "--i", "3")
    check("seminorm exit 0", r.returncode == 0, r.stderr)
    r = run("decompose", "--seq", str(finite_seq), "--p", "1", "--w", "harmonic",
            "--i", "1")
    check("decompose exit 0", r.returncode == 0, r.stderr)
    check("decompose prints the table", "S_tilde" in r.stdout or "H" in r.stdout)

    # certify: shift family is not precompact (exit 1), finite family is (exit 0)
    r = run("certify", "--family", str(shift_fam), "--p", "1", "--w", "harmonic")
    check("certify shift exit 1", r.returncode == 1, r.stdout + r.stderr)
    r = run("certify", "--family", str(fin_fam), "--p", "1", "--w", "harmonic",
            "--eps", "0.1", "--eps", "0.01")
    check("certify finite exit 0", r.returncode == 0, r.stdout + r.stderr)

    # lambda / gamma
    r = run("lambda", "--M", "1", "--d", "0.5", "--p", "1", "--w", "harmonic")
    check("lambda value", r.returncode == 0 and "= 3" in r.stdout, r.stdout)
    dom_fam = tmp / "dom.json"
    dom_fam.write_text(
        json.dumps({"kind": "dominated", "envelope": {"kind": "power", "c": 1.0, "s": 1.0}})
    )
    r = run("gamma", "--family", str(dom_fam), "--d", "0.25")
    check("gamma value", r.returncode == 0 and "= 5" in r.stdout, r.stdout)

    # diff-family emits a parseable family spec
    r = run("diff-family", "--family", str(fin_fam))
    check("diff-family exit 0", r.returncode == 0, r.stderr)
    diff = json.loads(r.stdout)
    check("diff-family has 4 members", len(diff.get("members", [])) == 4)

    # emit-spec round-trips
    emitted = tmp / "emitted.json"
    run("norm", "--seq", str(finite_seq), "--p", "1", "--w", "harmonic",
        "--emit-spec", str(emitted))
    spec = json.loads(emitted.read_text())
    check("emit-spec round-trip", spec["seq"]["entries"] == [2.0, -3.0, 1.0])

    # malformed spec: exit 2 with a diagnostic
    bad = tmp / "bad.json"
    bad.write_text('{"kind": "mystery"}')
    r = run("norm", "--seq", str(bad), "--p", "1", "--w", "harmonic")
    check("malformed spec exit 2", r.returncode == 2, str(r.returncode))
    check("malformed spec diagnostic", "kind" in r.stderr or "mystery" in r.stderr)

    # selftest smoke run
    r = run("selftest", "--seed", "7", "--trials", "25")
    check("selftest exit 0", r.returncode == 0, r.stdout + r.stderr)
    check("selftest reports suites", "oracle" in r.stdout)

    if FAILURES:
        print(f"{len(FAILURES)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
