"""Validate a JSON document against a JSON schema; exit 1 on violation."""
import json
import sys

import jsonschema


def main() -> int:
    schema_path, doc_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    with open(doc_path) as f:
        doc = json.load(f)
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        print(f"{doc_path}: {e.message}", file=sys.stderr)
        return 1
    print(f"{doc_path}: valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
