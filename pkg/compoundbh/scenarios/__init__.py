"""
    compoundbh/scenarios
    ~~~~~~~~~~~~~~~~~~~~

    Contains p-value scenarios with known null sets used to stress BH.
"""
import dataclasses

from .. import errors
from ..hints import Callable, Float, Int, Str, StrAnyDict
from .atoms import (AtomScenario, Coupling, approx_validity_check, compound_validity_check, constrain_gamma, inflate,
                    prds_check, read)
from .base import SampleDraw, Scenario
from .fuzz import random_atom_scenario
from .props import prop2_scenario, prop4_scenario, prop5_scenario
from .uniform import UniformScenario

__all__ = ['AtomScenario', 'Coupling', 'SampleDraw', 'Scenario', 'UniformScenario', 'approx_validity_check', 'build',
           'compound_validity_check', 'constrain_gamma', 'decode_scenario', 'for_type', 'inflate', 'prds_check',
           'prop2_scenario', 'prop4_scenario', 'prop5_scenario', 'random_atom_scenario', 'read', 'sample']

Builder = Callable[[Float, Int, Int, Int], AtomScenario]


class ScenarioType:
    """
    Known scenario types that can be built by name.
    """
    Prop2 = 'prop2'
    Prop4 = 'prop4'
    Prop5 = 'prop5'
    Random = 'random'
    RandomNull = 'random-null'


def _prop2(alpha: Float, m: Int, seed: Int, max_atoms: Int) -> AtomScenario:
    return prop2_scenario(alpha, m)


def _prop4(alpha: Float, m: Int, seed: Int, max_atoms: Int) -> AtomScenario:
    return prop4_scenario(alpha, m)


def _prop5(alpha: Float, m: Int, seed: Int, max_atoms: Int) -> AtomScenario:
    return prop5_scenario(alpha, m)


def _random(alpha: Float, m: Int, seed: Int, max_atoms: Int) -> AtomScenario:
    return random_atom_scenario(m, seed, max_atoms)


def _random_null(alpha: Float, m: Int, seed: Int, max_atoms: Int) -> AtomScenario:
    return random_atom_scenario(m, seed, max_atoms, global_null=True)


TYPES = {
    ScenarioType.Prop2: _prop2,
    ScenarioType.Prop4: _prop4,
    ScenarioType.Prop5: _prop5,
    ScenarioType.Random: _random,
    ScenarioType.RandomNull: _random_null,
}


def for_type(scenario_type: Str) -> Builder:
    """
    Return the scenario builder registered for the given type name.

    :param scenario_type: Scenario type name
    :return: Callable taking (alpha, m, seed, max_atoms)
    """
    builder = TYPES.get(scenario_type)
    if not builder:
        raise errors.ScenarioTypeNotSupported(scenario_type)
    return builder


def build(scenario_type: Str, alpha: Float, m: Int, seed: Int, max_atoms: Int) -> AtomScenario:
    """
    Build a scenario by type name.
    """
    return for_type(scenario_type)(alpha, m, seed, max_atoms)


def sample(s: Scenario, seed: Int, replicate: Int) -> SampleDraw:
    """
    Draw the p-value vector of replicate `replicate` of scenario `s`.

    :param s: Scenario
    :param seed: Experiment seed
    :param replicate: Replicate index
    :return: Sampled p-values and null set
    """
    return s.sample(seed, replicate)


#: Scenario classes that can be rebuilt from their serialized fields.
DECODABLE = (AtomScenario, UniformScenario)


def decode_scenario(data: StrAnyDict) -> Scenario:
    """
    Rebuild a scenario from its serialized fields, picking the class with exactly those fields.

    :param data: Decoded JSON object
    :return: Scenario
    """
    keys = set(data)
    for cls in DECODABLE:
        if keys == {f.name for f in dataclasses.fields(cls)}:
            return cls(**data)
    raise errors.ScenarioMalformed(f'no scenario type has fields {sorted(keys)}')
