"""
    test_fuzz
    ~~~~~~~~~

    Tests for the :mod:`~compoundbh.scenarios.fuzz` module.
"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from compoundbh import errors
from compoundbh.scenarios import compound_validity_check, random_atom_scenario


@given(st.integers(1, 60), st.integers(0, 10 ** 6), st.integers(1, 8), st.booleans())
def test_random_scenarios_are_valid(m, seed, max_atoms, global_null):
    s = random_atom_scenario(m, seed, max_atoms, global_null=global_null)
    assert compound_validity_check(s) <= 1e-12
    assert 1 <= len(s.h0) <= m
    if global_null:
        assert s.h0 == frozenset(range(1, m + 1))
    for atoms in s.coordinates:
        assert len(atoms) <= max_atoms
        assert sum(w for _, w in atoms) <= 1.0 + 1e-12
        assert all(v < 1.0 for v, _ in atoms)


def test_random_scenarios_are_deterministic():
    assert random_atom_scenario(30, 12, 5) == random_atom_scenario(30, 12, 5)
    assert random_atom_scenario(30, 12, 5) != random_atom_scenario(30, 13, 5)


@pytest.mark.parametrize('m, max_atoms', [(0, 3), (5, 0)])
def test_random_scenario_preconditions(m, max_atoms):
    with pytest.raises(errors.DomainError):
        random_atom_scenario(m, 1, max_atoms)
