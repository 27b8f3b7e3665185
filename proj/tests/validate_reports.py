"""Run the CLI on a set of commands and validate each JSON report against the schema."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(pathlib.Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

tmp = pathlib.Path(tempfile.mkdtemp())
cusp = tmp / "cusp.json"
cusp.write_text(json.dumps({"charts": [{"label": "cusp", "a": [3, 0], "b": [0, 2], "kappa": [0, 0]}]}))
line = tmp / "line.json"
line.write_text(json.dumps({"charts": [{"label": "l", "a": [2], "b": [0]}]}))

commands = [
    ["bf", "classic", "x^2"],
    ["bf", "classic", "x^3"],
    ["bf", "mero", "x", "y", "--m", "1"],
    ["bf", "mero", "x^3", "y^2", "--m", "0"],
    ["bf", "simple", "x", "y", "--m", "0"],
    ["bf", "reduced", "x^2+y^2", "x", "--weights", "1,1"],
    ["bf", "sabbah-line", "x", "y", "--m", "0"],
    ["nc", "roots", "--charts", str(cusp), "--m", "0"],
    ["nc", "bound", "--charts", str(cusp), "--m", "1"],
    ["nc", "eigen", "--charts", str(cusp), "--m", "0"],
    ["jump", "nc", "--charts", str(cusp)],
    ["check", "lemma4", "x^2", "y", "--m", "1", "--m-prime", "0"],
    ["check", "thm41", "x^3", "y^2", "--m", "0", "--charts", str(cusp)],
    ["check", "corjump", "x^2", "1", "--charts", str(line), "--upper", "1"],
    ["--timing", "bf", "classic", "x"],
]

failures = 0
for args in commands:
    proc = subprocess.run([cli, "--json", *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
    if errors:
        print(f"FAIL {label}: {errors[0].message}")
        failures += 1
    else:
        print(f"ok   {label}")
sys.exit(1 if failures else 0)
