import json
from importlib import resources

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ACCEPTANCE_LINES: list[str] = []


def _registry() -> Registry:
    pairs = []
    for item in resources.files("multiseg").joinpath("schemas").iterdir():
        if item.name.endswith(".json"):
            pairs.append((item.name, Resource.from_contents(json.loads(item.read_text()))))
    return Registry().with_resources(pairs)


@pytest.fixture(scope="session")
def validate():
    registry = _registry()

    def check(doc, schema_name):
        schema = registry.contents(schema_name)
        Draft202012Validator(schema, registry=registry).validate(doc)

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
