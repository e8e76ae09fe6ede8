import json
import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
GOLDEN = ROOT / "tests" / "golden"


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("FOLICHAR_SCHEMA", str(ROOT / "schema" / "report.schema.json"))
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def golden_cases():
    with open(GOLDEN / "cases.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("FOLICHAR_CLI")
    if not path:
        pytest.skip("FOLICHAR_CLI not set")
    return path
