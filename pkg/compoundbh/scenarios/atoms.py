"""
    compoundbh/scenarios/atoms
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains scenarios whose coordinates take finitely many values.

    Each coordinate is a list of ``(value, mass)`` atoms; mass not listed sits at 1.
    Coordinates are independent unless grouped in a bin, in which case every member
    of the bin is driven by one shared uniform and so is identical on every draw.
"""
import dataclasses
import functools
import math

import numpy as np

from .. import errors, serde
from ..config import ApproxParams
from ..hints import AnyStr, Array, FilePath, Float, Int, IntSet, List, OptionalFloat, Str, StrAnyDict, Tuple, Type
from . import base

#: Slack allowed when checking masses add up to at most one.
MASS_TOL = 1e-12

Atom = Tuple[Float, Float]
Atoms = Tuple[Atom, ...]
Bins = Tuple[Tuple[Int, ...], ...]


class Coupling:
    """
    Known ways of coupling coordinates.
    """
    Independent = 'independent'
    Shared = 'shared'


COUPLINGS = (Coupling.Independent, Coupling.Shared)


@dataclasses.dataclass(frozen=True)
class AtomScenario(base.Scenario, serde.SupportsFileSerde):
    """
    Represents a scenario of discrete coordinates with residual mass at 1.
    """
    name: Str
    m: Int
    h0: IntSet
    coordinates: Tuple[Atoms, ...]
    coupling: Str = Coupling.Independent
    bins: Bins = ()
    exact_fdr: OptionalFloat = None
    meta: StrAnyDict = dataclasses.field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'h0', frozenset(int(i) for i in self.h0))
        object.__setattr__(self, 'coordinates', tuple(
            tuple((float(v), float(w)) for v, w in atoms) for atoms in self.coordinates
        ))
        object.__setattr__(self, 'bins', tuple(tuple(int(i) for i in b) for b in self.bins))
        self._validate()

    def _validate(self):
        if self.m < 1 or len(self.coordinates) != self.m:
            raise errors.ScenarioMalformed(f'expected {self.m} coordinates, got {len(self.coordinates)}')
        if any(not 1 <= i <= self.m for i in self.h0):
            raise errors.ScenarioMalformed(f'null indices outside [1, {self.m}]')
        if self.coupling not in COUPLINGS:
            raise errors.ScenarioMalformed(f'unknown coupling "{self.coupling}"')
        if self.coupling == Coupling.Independent and self.bins:
            raise errors.ScenarioMalformed('independent scenarios cannot have bins')
        for i, atoms in enumerate(self.coordinates, 1):
            for value, mass in atoms:
                if not (0.0 <= value <= 1.0) or not (0.0 <= mass <= 1.0):
                    raise errors.ScenarioMalformed(f'coordinate {i} has atom ({value!r}, {mass!r}) outside [0, 1]')
            if math.fsum(w for _, w in atoms) > 1.0 + MASS_TOL:
                raise errors.ScenarioMalformed(f'coordinate {i} masses sum above 1')
            if any(a[0] > b[0] for a, b in zip(atoms, atoms[1:])):
                raise errors.ScenarioMalformed(f'coordinate {i} atoms are not sorted by value')
        seen = set()
        for members in self.bins:
            if not members or seen.intersection(members) or any(not 1 <= i <= self.m for i in members):
                raise errors.ScenarioMalformed(f'bin {list(members)} is empty, overlapping or out of range')
            seen.update(members)
            if len({self.coordinates[i - 1] for i in members}) != 1:
                raise errors.ScenarioMalformed(f'bin {list(members)} mixes coordinates with different atoms')

    @functools.cached_property
    def _tables(self) -> Tuple[Array, Array, Array]:
        width = max((len(atoms) for atoms in self.coordinates), default=0)
        values = np.ones((self.m, width + 1))
        cum = np.full((self.m, max(width, 1)), np.inf)
        for i, atoms in enumerate(self.coordinates):
            if not atoms:
                continue
            values[i, :len(atoms)] = [v for v, _ in atoms]
            cum[i, :len(atoms)] = np.cumsum([w for _, w in atoms])
            # Full mass: the last atom absorbs the rounding so no draw falls through to 1.
            if cum[i, len(atoms) - 1] >= 1.0 - MASS_TOL:
                cum[i, len(atoms) - 1] = np.inf
        groups = np.arange(self.m)
        for members in self.bins:
            groups[[i - 1 for i in members]] = members[0] - 1
        return values, cum, groups

    def draw(self, gen: np.random.Generator) -> Array:
        values, cum, groups = self._tables
        u = gen.random(self.m)[groups]
        idx = (cum <= u[:, None]).sum(axis=1)
        return values[np.arange(self.m), idx]

    def cdf(self, i: Int, t: Float) -> Float:
        if t >= 1.0:
            return 1.0
        return math.fsum(w for v, w in self.coordinates[i - 1] if v <= t)

    def validity_gap(self, params: ApproxParams = ApproxParams()) -> Float:
        locations = sorted({v for i in self.h0 for v, _ in self.coordinates[i - 1]} | {1.0})
        worst = -math.inf
        for t in locations:
            mass = math.fsum(self.cdf(i, t) for i in self.h0)
            worst = max(worst, mass - self.m * (t * (1 + params.epsilon) + params.delta))
        return worst

    def null_mass_below(self, t: Float) -> Float:
        """
        Compute ``sum_{i in H0} P(p_i <= t)``.
        """
        return math.fsum(self.cdf(i, t) for i in self.h0)

    def with_coordinates(self, coordinates: List[Atoms], name: Str, exact_fdr: OptionalFloat = None) -> 'AtomScenario':
        """
        Copy of the scenario with coordinates replaced and the exact FDR reset.
        """
        return dataclasses.replace(self, coordinates=tuple(coordinates), name=name,
                                   exact_fdr=exact_fdr, meta=dict(self.meta))

    @classmethod
    def decode(cls: Type['AtomScenario'], s: AnyStr) -> 'AtomScenario':
        try:
            return cls(**serde.loads(s))
        except (TypeError, ValueError) as ex:
            raise errors.ScenarioMalformed(str(ex)) from ex


def compound_validity_check(s: base.Scenario) -> Float:
    """
    Compute the largest violation of ``sum_{i in H0} F_i(t) <= m t`` over atom locations and t = 1.

    Checking atom locations suffices: between atoms the left side is constant
    while the right side grows.

    :param s: Scenario
    :return: Largest violation; <= 0 means the null coordinates are compound p-values
    """
    return s.validity_gap()


def approx_validity_check(s: base.Scenario, params: ApproxParams) -> Float:
    """
    Compute the largest violation of ``sum_{i in H0} F_i(t) <= m (t (1 + epsilon) + delta)``.

    :param s: Scenario
    :param params: Approximation slack
    :return: Largest violation; <= 0 means (epsilon, delta)-approximate compound p-values
    """
    return s.validity_gap(params)


def prds_check(s: AtomScenario) -> bool:
    """
    Check that every bin shares one atom list, so within-bin coordinates agree on every draw.

    Coordinates driven by a common uniform through the same nondecreasing quantile
    map are comonotone, which makes the vector PRDS on any subset.
    """
    if s.coupling != Coupling.Shared:
        return True
    return all(len({s.coordinates[i - 1] for i in members}) == 1 for members in s.bins)


def _trim_to_unit(atoms: List[Atom]) -> List[Atom]:
    total = math.fsum(w for _, w in atoms)
    excess = total - 1.0
    out = list(atoms)
    for j in range(len(out) - 1, -1, -1):
        if excess <= 0:
            break
        value, mass = out[j]
        take = min(mass, excess)
        out[j] = (value, mass - take)
        excess -= take
    return out


def inflate(s: AtomScenario, params: ApproxParams, floor: Float = 0.0) -> AtomScenario:
    """
    Build an (epsilon, delta)-approximate scenario from a compound one.

    Null masses are scaled by (1 + epsilon) and each null coordinate gains an atom of
    mass delta at `floor`; mass beyond 1 is removed from the largest values first.
    The result passes :func:`approx_validity_check` with the same params whenever the
    input passes :func:`compound_validity_check`.

    :param s: Compound scenario
    :param params: Approximation slack
    :param floor: Value of the added delta atom
    :return: New scenario with no exact FDR
    """
    if s.coupling != Coupling.Independent:
        raise errors.ScenarioPreconditionFailed('inflate supports independent scenarios only')
    coordinates = []
    for i, atoms in enumerate(s.coordinates, 1):
        if i not in s.h0:
            coordinates.append(atoms)
            continue
        grown = [(v, w * (1 + params.epsilon)) for v, w in atoms]
        if params.delta > 0:
            grown.insert(0, (floor, params.delta))
        coordinates.append(tuple(sorted(_trim_to_unit(grown), key=lambda a: a[0])))
    name = f'{s.name}+inflate(eps={params.epsilon!r},delta={params.delta!r})'
    return s.with_coordinates(coordinates, name)


def constrain_gamma(s: AtomScenario, alpha: Float, gamma: Float) -> AtomScenario:
    """
    Cap every null coordinate's mass at or below alpha at gamma by scaling it down.

    Removed mass moves to the residual atom at 1, so compound validity is preserved.

    :param s: Scenario
    :param alpha: Level at which the cap applies
    :param gamma: Cap in [0, 1]
    :return: Scenario satisfying ``P(p_i <= alpha) <= gamma`` for every null
    """
    if not 0.0 <= gamma <= 1.0:
        raise errors.DomainError(f'gamma={gamma!r} outside [0, 1]')
    coordinates = []
    for i, atoms in enumerate(s.coordinates, 1):
        below = math.fsum(w for v, w in atoms if v <= alpha)
        if i not in s.h0 or below <= gamma:
            coordinates.append(atoms)
            continue
        scale = gamma / below
        coordinates.append(tuple((v, w * scale if v <= alpha else w) for v, w in atoms))
    return s.with_coordinates(coordinates, f'{s.name}+gamma({gamma!r})')


def merge_atoms(values: Array, masses: Array) -> Atoms:
    """
    Combine parallel value/mass arrays into a sorted atom tuple, dropping zero masses.
    """
    order = np.argsort(values, kind='stable')
    return tuple((float(values[j]), float(masses[j])) for j in order if masses[j] > 0)


def read(path: FilePath) -> AtomScenario:
    """
    Read a scenario from a JSON file.

    :param path: Path to JSON document
    :return: Scenario
    """
    try:
        return AtomScenario.read(path)
    except FileNotFoundError as ex:
        raise errors.IngestFileNotFound(path) from ex
