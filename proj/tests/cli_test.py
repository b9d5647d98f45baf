# Copyright 2026 The dgscheme Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the command-line tool."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]
with open(SCHEMA) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("DGSCHEME_THREADS", None)
    e.update(env or {})
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, extra=""):
    print(("ok   " if cond else "FAIL ") + name + (" " + extra if extra and not cond else ""))
    if not cond:
        failures.append(name)


def valid(name, text):
    try:
        validator.validate(json.loads(text))
        expect(name + " matches schema", True)
    except (jsonschema.ValidationError, json.JSONDecodeError) as err:
        expect(name + " matches schema", False, str(err)[:400])


code, out, _ = run("wdist", "--m", "3", "--code", "kerdock")
expect("wdist kerdock csv", code == 0 and out == "weight,count\n0,1\n6,112\n8,30\n10,112\n16,1\n", out)

code, out, _ = run("wdist", "--m", "3", "--code", "dg", "--format", "json")
expect("wdist dg exit 0", code == 0)
valid("wdist dg", out)
d = json.loads(out)["checks"][0]["detail"]
expect("wdist dg flags printed count", d["printed_formula"]["inconsistent"] and d["printed_formula"]["value"] == 672)

code, out, _ = run("verify", "--m", "3", "--scheme", "nine")
expect("verify nine exit 0", code == 0)
valid("verify nine", out)
sch = json.loads(out)["checks"][0]["detail"]["scheme"]
expect("verify nine certificate", sch["verified"] and len(sch["class_sizes"]) == 10 and len(sch["P"]) == 10)

for args in (["verify", "--m", "4"], ["verify", "--m", "7"], ["report", "--m", "5", "--depth", "exhaustive"],
             ["verify", "--scheme", "nope"], ["frobnicate"], ["verify", "--m", "5", "--scheme", "gray"]):
    code, _, _ = run(*args)
    expect("usage error " + " ".join(args), code == 2, str(code))
code, _, _ = run("verify", env={"DGSCHEME_THREADS": "zero"})
expect("bad DGSCHEME_THREADS", code == 2)

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "lee.json")
    code, out, _ = run("verify", "--scheme", "lee", "--out", path)
    expect("lee partition is not a scheme", code == 1)
    witness = json.loads(out)
    expect("witness on stdout", witness and witness[0]["detail"]["scheme"]["certificates"])
    with open(path) as f:
        valid("verify lee", f.read())

for cmd in (["eigen", "--scheme", "quotient"], ["dual"], ["fusion", "--scheme", "quotient"], ["charsums"], ["lemmas"],
            ["report", "--timings"], ["report", "--depth", "exhaustive"], ["eigen", "--scheme", "gray"]):
    code, out, _ = run(*cmd, "--m", "3")
    expect(" ".join(cmd) + " exit 0", code == 0, str(code))
    valid(" ".join(cmd), out)

code, out, _ = run("fusion", "--m", "3")
expect("fusion lists admissible groupings", code == 0 and len(json.loads(out)["admissible_fusions"]) > 1)

code, out, _ = run("eigen", "--m", "3", "--scheme", "quotient", "--format", "csv")
expect("eigen csv", code == 0 and out.startswith("# quotient P\n1,") and "# quotient Q\n" in out)
code, out, _ = run("report", "--m", "3", "--format", "pretty")
expect("pretty report", code == 0 and out.count("PASS") == 12 and "FAIL" not in out)

outs = {run("report", "--m", "3", "--threads", str(t))[1] for t in (1, 2, 4)}
outs.add(run("report", "--m", "3", env={"DGSCHEME_THREADS": "3"})[1])
expect("report byte-identical across thread counts", len(outs) == 1)
outs = {run("report", "--m", "3", "--format", "csv", "--threads", str(t))[1] for t in (1, 4)}
expect("csv byte-identical across thread counts", len(outs) == 1)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
