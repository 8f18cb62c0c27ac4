"""Shared fixtures: the space, the pentad census, and dense-matrix oracles.

The dense helpers multiply exact 8x8 complex matrices; they share no code
with the phase-arithmetic engine and serve as the independent cross-check
for every sign computed by it.
"""

import numpy as np
import pytest

from w52.geometry import Space
from w52.pauli import OBSERVABLES, dense_matrix
from w52.pentads import enumerate_pentads, pentad_to_config, pentad_to_pentagram
from w52.taxonomy import classify_census

IDENTITY8 = np.eye(8, dtype=complex)

# entries of Pauli words are 0, +-1, +-i: exactly representable, so matrix
# equality below is exact, no tolerances involved
DENSE = [None] + [dense_matrix(o) for o in OBSERVABLES]


def dense_commutes(a: int, b: int) -> bool:
    """Oracle: do two point ids commute as 8x8 matrices?"""
    return np.array_equal(DENSE[a] @ DENSE[b], DENSE[b] @ DENSE[a])


def dense_product(ids) -> np.ndarray:
    out = IDENTITY8
    for pid in ids:
        out = out @ DENSE[pid]
    return out


def dense_sign(ids) -> int:
    """Oracle: sign of a product that must be plus or minus the identity."""
    product = dense_product(ids)
    if np.array_equal(product, IDENTITY8):
        return 1
    if np.array_equal(product, -IDENTITY8):
        return -1
    raise AssertionError(f"product of {ids} is not +-identity")


@pytest.fixture(scope="session")
def space() -> Space:
    return Space()


@pytest.fixture(scope="session")
def pentads(space):
    return enumerate_pentads(space)


@pytest.fixture(scope="session")
def pentagrams(space, pentads):
    return tuple(pentad_to_pentagram(space, p) for p in pentads)


@pytest.fixture(scope="session")
def configs(space, pentads):
    return tuple(pentad_to_config(space, p) for p in pentads)


@pytest.fixture(scope="session")
def census(space, pentads):
    return classify_census(space, pentads)
