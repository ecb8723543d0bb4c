from __future__ import annotations

from pathlib import Path

import pytest

from anrdf import closure, parse_graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


def load_closure(name: str):
    doc = parse_graph((DATA_DIR / name).read_text())
    return closure(doc.graph)


@pytest.fixture(scope="session")
def fig1_closure():
    return load_closure("fig1.anrdf")


@pytest.fixture(scope="session")
def fig1_exx1_closure():
    return load_closure("fig1_exx1.anrdf")


@pytest.fixture(scope="session")
def exx1_minimal_closure():
    return load_closure("exx1_minimal.anrdf")


@pytest.fixture(scope="session")
def provenance_closure():
    return load_closure("provenance_chad.anrdf")
