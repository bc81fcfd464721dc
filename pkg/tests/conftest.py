"""Shared fixtures: the tiny exhaustive format and its oracle tables."""

from __future__ import annotations

import pytest

from fpfilter.softfloat import FloatFormat

from oracle import tables_for


@pytest.fixture(scope="session")
def tiny() -> FloatFormat:
    return FloatFormat(p=3, emax=2)


@pytest.fixture(scope="session")
def tiny_oracle(tiny):
    return tables_for(tiny)
