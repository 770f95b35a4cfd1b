"""Shared corpus fixtures: one lattice per isomorphism class at small sizes."""
from __future__ import annotations

import pytest

from conlat import FiniteLattice, enumerate_lattices


@pytest.fixture(scope="session")
def corpus5() -> list[FiniteLattice]:
    return list(enumerate_lattices(5))


@pytest.fixture(scope="session")
def corpus6() -> list[FiniteLattice]:
    return list(enumerate_lattices(6))


@pytest.fixture(scope="session")
def corpus7() -> list[FiniteLattice]:
    return list(enumerate_lattices(7))
