"""Runs the realnorm binary over every fixture and command, then checks each
JSON report against the versioned schema, the exit-code mapping, and the
text/JSON agreement on status."""
import json
import pathlib
import subprocess
import sys

import jsonschema

EXIT_FOR_STATUS = {"ok": 0, "undecided": 1}
COMMANDS = ["analyze", "adjoin", "fiber", "continuity", "wc-search", "hereditary"]


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout


def expected_exit(report):
    if report["status"] == "error":
        return 3 if report["error"]["kind"] == "resource-limit" else 2
    return EXIT_FOR_STATUS[report["status"]]


def main():
    binary, fixtures, schema_path = sys.argv[1:4]
    validator = jsonschema.Draft202012Validator(json.loads(pathlib.Path(schema_path).read_text()))
    failures = []

    def check(label, code, out):
        report = json.loads(out)
        errors = sorted(validator.iter_errors(report), key=str)
        if errors:
            failures.append(f"{label}: {errors[0].message}")
        if code != expected_exit(report):
            failures.append(f"{label}: exit {code} for status {report['status']}")
        return report

    count = 0
    for doc in sorted(pathlib.Path(fixtures).glob("*.txt")):
        for command in COMMANDS:
            code, out = run(binary, "--format", "json", command, str(doc))
            report = check(f"{command} {doc.name}", code, out)
            text_code, text = run(binary, command, str(doc))
            if text_code != code or f"status: {report['status']}" not in text:
                failures.append(f"{command} {doc.name}: text output disagrees")
            count += 1

    code, out = run(binary, "--format", "json", "--max-steps", "0", "analyze", str(pathlib.Path(fixtures) / "trifolium.txt"))
    if check("budget", code, out)["status"] != "error" or code != 3:
        failures.append("budget: expected exit 3")
    code, out = run(binary, "--format", "json", "verify-paper")
    report = check("verify-paper", code, out)
    if code != 0 or not report["result"]["all_pass"]:
        failures.append("verify-paper: not all entries pass")
    code, _ = run(binary, "--format", "yaml", "analyze", "x")
    if code != 2:
        failures.append(f"bad flag: exit {code}")

    for f in failures:
        print("FAIL", f)
    print(f"{count} fixture reports checked, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
