import pytest

from tandemdup import DuplicationSystem, build_automaton


@pytest.fixture(scope="session")
def binary_system():
    return DuplicationSystem.parse("01", "01", 2)


@pytest.fixture(scope="session")
def ternary_system():
    return DuplicationSystem.parse("012", "012", 3)


@pytest.fixture(scope="session")
def quaternary_system():
    return DuplicationSystem.parse("0123", "0123", 3)


@pytest.fixture(scope="session")
def repeat_seed_system():
    return DuplicationSystem.parse("012", "0112", 3)


@pytest.fixture(scope="session")
def binary_automaton(binary_system):
    return build_automaton(binary_system)


@pytest.fixture(scope="session")
def ternary_automaton(ternary_system):
    return build_automaton(ternary_system)


@pytest.fixture(scope="session")
def quaternary_automaton(quaternary_system):
    return build_automaton(quaternary_system)


@pytest.fixture(scope="session")
def repeat_seed_automaton(repeat_seed_system):
    return build_automaton(repeat_seed_system)
