from __future__ import annotations

import pytest

from degprinc.coxeter import catalog


@pytest.fixture(scope="session")
def groups():
    """A handful of small groups used across modules."""
    return {name: catalog(*spec) for name, spec in {
        "A2": ("A", 2), "A3": ("A", 3), "B2": ("B", 2), "B3": ("B", 3),
        "D4": ("D", 4), "I2(5)": ("I2", 5), "H3": ("H3",), "F4": ("F4",),
    }.items()}
