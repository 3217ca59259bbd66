import pytest

from sgpoly import AlgebraContext, FieldSpec, friendly_context, from_generators
from oracles import sieve_irreducibles


@pytest.fixture(scope="session")
def f2():
    return FieldSpec(2)


@pytest.fixture(scope="session")
def f3():
    return FieldSpec(3)


@pytest.fixture(scope="session")
def friendly():
    return friendly_context()


@pytest.fixture(scope="session")
def ctx345(f2):
    return AlgebraContext(f2, from_generators((3, 4, 5)))


@pytest.fixture(scope="session")
def f2_sieve(f2):
    """Oracle irreducibles over F_2 up to degree 16 (multiplication sieve)."""
    return sieve_irreducibles(f2, 16)


@pytest.fixture(scope="session")
def f3_sieve(f3):
    """Oracle irreducibles over F_3 up to degree 10."""
    return sieve_irreducibles(f3, 10)
