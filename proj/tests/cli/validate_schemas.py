#!/usr/bin/env python3
# Copyright 2026 The Hybrid Mechanisms Authors.
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
"""Runs the CLI and validates its JSON output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

PROFILE = '{"expert":{"A":1,"B":0,"none":0.5},"bids":{"A":1,"B":0.9}}'

CASES = [
    ("constants.schema.json", ["constants"], 0),
    ("outcome.schema.json", ["eval", "-m", "bom", "--profile", PROFILE], 0),
    ("ratio_report.schema.json", ["ratio", "-m", "r", "--grid", "101"], 0),
    ("audit_reports.schema.json", ["verify", "-m", "d"], 0),
    ("audit_reports.schema.json",
     ["verify", "--curve", '[{"y":0,"c":1},{"y":1,"c":0}]'], 1),
    ("table1.schema.json", ["table1", "--grid", "101", "--tol", "1"], 0),
    ("curves.schema.json", ["curves", "-m", "bim", "--format", "json"], 0),
    ("curves.schema.json", ["curves", "-m", "eim", "--format", "json"], 0),
]


def main():
  cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
  resources = []
  for path in schema_dir.glob("*.json"):
    contents = json.loads(path.read_text())
    resources.append((path.name, Resource.from_contents(contents)))
  registry = Registry().with_resources(resources)
  failures = 0
  for schema_name, args, want_code in CASES:
    proc = subprocess.run([cli] + args, capture_output=True, text=True,
                          check=False)
    label = " ".join(args[:3])
    if proc.returncode != want_code:
      print(f"FAIL {label}: exit {proc.returncode}, want {want_code}")
      failures += 1
      continue
    schema = registry.get_or_retrieve(schema_name).value.contents
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    if errors:
      print(f"FAIL {label}: {errors[0].message}")
      failures += 1
    else:
      print(f"ok   {label} -> {schema_name}")
  curve = json.loads('[{"y":0,"c":0.2},{"y":1,"c":1}]')
  jsonschema.Draft202012Validator(
      registry.get_or_retrieve("curve_points.schema.json").value.contents
  ).validate(curve)
  return 1 if failures else 0


if __name__ == "__main__":
  sys.exit(main())
