#!/usr/bin/env python3
# Copyright 2026 The jonesdqc1 Authors
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

"""Runs each JSON-emitting CLI command and validates its output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("eval", ["eval", "--strands", "4", "s1 s2 s3"]),
    ("eval", ["eval", "--strands", "4", ""]),
    ("eval", ["eval", '{"strands": 3, "word": [1, -2, 1]}']),
    ("oracle", ["oracle", "--strands", "2", "s1 s1 s1"]),
    ("oracle", ["oracle", "--strands", "1", ""]),
    ("simulate", ["simulate", "--strands", "4", "s1 s2^-1 s3", "--repeats", "10"]),
    ("simulate", ["simulate", "--strands", "3", "s1", "--noise", "none"]),
    ("simulate", ["simulate", "--strands", "3", "s1", "--noise", "depolarizing", "--repeats", "4"]),
    ("discriminate", ["discriminate", "--reps", "1", "--repeats", "5"]),
    ("discriminate", ["discriminate", "--knots-only", "--repeats", "5"]),
    ("basis", ["basis", "--strands", "6", "--format", "json"]),
    ("unitary", ["unitary", "--strands", "3", "s1 s2^-1"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        label = " ".join(args)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
            print(f"ok   {name}: {label}")
        except Exception as e:  # noqa: BLE001
            failures += 1
            print(f"FAIL {name}: {label}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
