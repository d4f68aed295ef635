"""Shared fixtures: the catalog algebras and a few small regression algebras."""

import pytest

from homalt import FamilyParams, mikheev_algebra, mikheev_family
from homalt.homalgebra import HomAlgebra, identity_rows

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def mikheev():
    return mikheev_algebra()


@pytest.fixture(scope="session")
def fam_sym():
    return mikheev_family(FamilyParams.symbolic())


@pytest.fixture(scope="session")
def fam23():
    return mikheev_family(FamilyParams.rational(2, 3))


@pytest.fixture(scope="session")
def fam57():
    return mikheev_family(FamilyParams.rational(5, 7))


@pytest.fixture(scope="session")
def plain_twisted(fam_sym):
    # The twisted product kept as a plain algebra: same mu, identity twist map.
    return HomAlgebra(13, dict(fam_sym.mu), identity_rows(13), params=("lambda", "xi"))


@pytest.fixture(scope="session")
def truncated_poly():
    # k[t]/(t^3): commutative, associative, alpha = Id.
    mu = {(i, j): ((i + j, 1),) for i in range(3) for j in range(3) if i + j < 3}
    return HomAlgebra(3, mu, identity_rows(3))


@pytest.fixture(scope="session")
def upper_triangular():
    # Span of E11, E12, E22 in 2x2 matrices: associative, not commutative.
    mu = {
        (0, 0): ((0, 1),),
        (0, 1): ((1, 1),),
        (1, 2): ((1, 1),),
        (2, 2): ((2, 1),),
    }
    return HomAlgebra(3, mu, identity_rows(3))


@pytest.fixture(scope="session")
def zero_algebra():
    return HomAlgebra(3, {}, {})
