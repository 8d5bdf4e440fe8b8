import math

import numpy as np
import pytest

from hbkern import (
    BlaschkeData,
    OuterLogDensity,
    QuadratureConfig,
    SingularAtoms,
    Symbol,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20260815)


@pytest.fixture
def tight_quad():
    return QuadratureConfig(tolerance=1e-13)


def make_blaschke(zeros) -> Symbol:
    return Symbol(
        blaschke=BlaschkeData(tuple(zeros)),
        singular=SingularAtoms(()),
        outer=OuterLogDensity.zero(),
    )


def make_atoms(atoms) -> Symbol:
    return Symbol(
        blaschke=BlaschkeData(()),
        singular=SingularAtoms(tuple(atoms)),
        outer=OuterLogDensity.zero(),
    )


def disk_sample(rng: np.random.Generator, radius: float = 0.95) -> complex:
    r = radius * math.sqrt(rng.uniform())
    t = rng.uniform(-math.pi, math.pi)
    return complex(r * math.cos(t), r * math.sin(t))
