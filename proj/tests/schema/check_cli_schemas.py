"""Runs the hrg binary and validates every JSON document it emits against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def load_schemas(directory):
    schemas = {}
    for path in sorted(pathlib.Path(directory).glob("*.schema.json")):
        schema = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[path.name.removesuffix(".schema.json")] = schema
    return schemas


class Checker:
    def __init__(self, binary, schemas, workdir):
        self.binary = binary
        self.schemas = schemas
        self.workdir = pathlib.Path(workdir)
        self.failures = 0
        self.checked = 0

    def path(self, name):
        return str(self.workdir / name)

    def run(self, *args):
        proc = subprocess.run([self.binary, *args], capture_output=True, text=True)
        if proc.returncode != 0:
            raise RuntimeError(f"hrg {' '.join(args)} exited {proc.returncode}: {proc.stderr}")
        return proc.stdout

    def validate(self, label, schema_name, document):
        self.checked += 1
        validator = jsonschema.Draft202012Validator(self.schemas[schema_name])
        errors = sorted(validator.iter_errors(document), key=lambda e: list(e.path))
        if errors:
            self.failures += 1
            for error in errors:
                print(f"FAIL {label}: {list(error.path)}: {error.message}")
        else:
            print(f"ok   {label}")

    def stdout_json(self, label, schema_name, *args):
        document = json.loads(self.run(*args))
        self.validate(label, schema_name, document)
        return document

    def file_json(self, label, schema_name, file_name, *args):
        self.run(*args)
        document = json.loads(pathlib.Path(self.path(file_name)).read_text())
        self.validate(label, schema_name, document)
        return document


def main():
    if len(sys.argv) != 3:
        print("usage: check_cli_schemas.py HRG_BINARY SCHEMA_DIR")
        return 2
    binary, schema_dir = sys.argv[1], sys.argv[2]
    schemas = load_schemas(schema_dir)
    expected = {"generate_summary", "search_outcome", "validate_result", "scaling_fit", "experiment_summary"}
    missing = expected - schemas.keys()
    if missing:
        print(f"FAIL missing schemas: {sorted(missing)}")
        return 1

    with tempfile.TemporaryDirectory(prefix="hrg_schema_") as tmp:
        c = Checker(binary, schemas, tmp)
        graph, sparse = c.path("g.hrg"), c.path("sparse.hrg")

        c.stdout_json("generate fast", "generate_summary",
                      "generate", "--n", "20000", "--alpha", "0.75", "--avg-degree", "8", "--seed", "2",
                      "--out", graph, "--json")
        c.stdout_json("generate naive", "generate_summary",
                      "generate", "--n", "300", "--alpha", "0.6", "--C", "0", "--out", c.path("naive.hrg"),
                      "--naive", "--json")
        c.stdout_json("generate sparse", "generate_summary",
                      "generate", "--n", "200", "--alpha", "0.75", "--avg-degree", "1", "--seed", "2",
                      "--out", sparse, "--json")

        for strategy in ("greedy", "roundrobin"):
            c.stdout_json(f"query {strategy}", "search_outcome",
                          "query", "--graph", graph, "--source", "0", "--target", "7", "--strategy", strategy,
                          "--json")
        c.stdout_json("query oracle", "search_outcome",
                      "query", "--graph", graph, "--source", "0", "--target", "7", "--strategy", "oracle",
                      "--rho-auto", "--json")
        c.stdout_json("query self", "search_outcome",
                      "query", "--graph", graph, "--source", "3", "--target", "3", "--json")
        unreachable = None
        for target in range(1, 200):
            doc = json.loads(c.run("query", "--graph", sparse, "--source", "0", "--target", str(target), "--json"))
            if not doc["reachable"]:
                unreachable = doc
                break
        if unreachable is None:
            print("FAIL no unreachable pair found in the sparse graph")
            c.failures += 1
        else:
            c.validate("query unreachable", "search_outcome", unreachable)

        for check in ("powerlaw", "maxdeg", "sector", "innerdisk", "width", "diameter"):
            c.stdout_json(f"validate {check}", "validate_result",
                          "validate", "--graph", graph, "--check", check, "--rho-auto", "--starts", "30", "--json")
        c.stdout_json("validate sector explicit", "validate_result",
                      "validate", "--graph", graph, "--check", "sector", "--sector-start", "1.0",
                      "--sector-width", "0.5", "--r-lo", "2", "--r-hi", "15", "--json")
        c.stdout_json("validate innerdisk vacuous", "validate_result",
                      "validate", "--graph", graph, "--check", "innerdisk", "--rho", "0.1", "--json")
        c.stdout_json("validate diameter exact", "validate_result",
                      "validate", "--graph", sparse, "--check", "diameter", "--mode", "exact", "--json")

        for check in ("maxdeg", "sector"):
            c.file_json(f"scaling {check}", "scaling_fit", f"{check}.json",
                        "validate", "--check", check, "--alpha", "0.75", "--n-list", "1000,3000,10000",
                        "--seeds", "1", "--out", c.path(f"{check}.csv"), "--summary", c.path(f"{check}.json"))

        c.file_json("experiment", "experiment_summary", "exp.json",
                    "experiment", "--alphas", "0.7,0.8", "--ns", "1000,2000", "--graphs", "2", "--pairs", "10",
                    "--out", c.path("exp.csv"), "--summary", c.path("exp.json"))
        skipped = c.file_json("experiment skipped", "experiment_summary", "skip.json",
                              "experiment", "--alphas", "0.75", "--ns", "20", "--graphs", "3", "--pairs", "5",
                              "--avg-degree", "0.05", "--out", c.path("skip.csv"), "--summary", c.path("skip.json"))
        if not skipped["warnings"]:
            print("FAIL experiment skipped: expected warnings for tiny graphs")
            c.failures += 1

        print(f"{c.checked} documents checked, {c.failures} failed")
        return 1 if c.failures else 0


if __name__ == "__main__":
    sys.exit(main())
