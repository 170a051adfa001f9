from __future__ import annotations

import pytest

from sdfam import (
    build_cyclic,
    build_elementary_abelian,
    build_field,
    closure,
    matrix_endo,
    scalar_endo,
)

import support


@pytest.fixture(scope="session")
def z5():
    return build_cyclic(5)


@pytest.fixture(scope="session")
def z6():
    return build_cyclic(6)


@pytest.fixture(scope="session")
def z7():
    return build_cyclic(7)


@pytest.fixture(scope="session")
def z13():
    return build_cyclic(13)


@pytest.fixture(scope="session")
def ea9():
    return build_elementary_abelian(3, 2)


@pytest.fixture(scope="session")
def ea4():
    return build_elementary_abelian(2, 2)


@pytest.fixture(scope="session")
def s3():
    return support.symmetric_group(3)


@pytest.fixture(scope="session")
def d4():
    return support.dihedral_square()


@pytest.fixture(scope="session")
def q8_group():
    return support.quaternion_group()


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return build_field(2, 4)


@pytest.fixture(scope="session")
def quaternion_endos(ea9):
    """Order-8 quaternion group of fixed-point-free maps on (Z_3)^2."""
    m = matrix_endo(ea9, [[0, 2], [1, 0]])
    n = matrix_endo(ea9, [[1, 1], [1, 2]])
    return closure([m, n])


@pytest.fixture(scope="session")
def z7_ferrero_endos(z7):
    return closure([scalar_endo(z7, 2)])
