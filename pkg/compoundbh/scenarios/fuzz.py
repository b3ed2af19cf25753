"""
    compoundbh/scenarios/fuzz
    ~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains a generator of random independent compound p-value scenarios.
"""
import numpy as np

from .. import errors, rng, utils
from ..hints import Array, Int
from .atoms import AtomScenario, merge_atoms

#: Relative slack kept below the validity cap ``min(m t, |H0|)`` at every atom.
CAP_SLACK = 1e-9

#: Mass below which water filling stops redistributing.
FILL_EPS = 1e-15

#: Upper bound on water filling rounds for one atom.
FILL_ROUNDS = 64


def _fill(gen: np.random.Generator, amount: float, room: Array) -> Array:
    """
    Split `amount` randomly over coordinates without exceeding any coordinate's `room`.
    """
    alloc = np.zeros_like(room)
    for _ in range(FILL_ROUNDS):
        active = room - alloc > FILL_EPS
        if amount <= FILL_EPS or not active.any():
            break
        share = np.zeros_like(room)
        share[active] = gen.dirichlet(np.ones(active.sum())) * amount
        give = np.minimum(share, room - alloc)
        alloc += give
        amount -= give.sum()
    return alloc


def random_atom_scenario(m: Int, seed: Int, max_atoms: Int, global_null: bool = False) -> AtomScenario:
    """
    Draw a random scenario of independent coordinates whose nulls are compound p-values.

    Atom locations ``t_1 < ... < t_r`` are sorted uniforms scaled by ``10^U(-2, 0)``.
    The cumulative null mass at ``t_k`` is drawn uniformly between its value at
    ``t_{k-1}`` and the cap ``min(m t_k, |H0|)``, and the increment is spread over the
    null coordinates at random. Non-nulls get random masses on the same locations.
    Unassigned mass sits at 1.

    :param m: Number of hypotheses
    :param seed: Seed; equal seeds give equal scenarios
    :param max_atoms: Maximum number of atom locations
    :param global_null: Make every coordinate a null
    :return: Scenario passing compound validity
    """
    m = utils.require_count(m, 'm')
    max_atoms = utils.require_count(max_atoms, 'max_atoms')
    if m < 1 or max_atoms < 1:
        raise errors.DomainError(f'm and max_atoms must be >= 1, got {m}, {max_atoms}')
    gen = rng.stream(seed, 0, rng.Family.Scenario)

    n_null = m if global_null else int(gen.integers(1, m + 1))
    nulls = np.sort(gen.choice(m, size=n_null, replace=False))
    r = int(gen.integers(1, max_atoms + 1))
    locations = np.unique(np.sort(gen.random(r)) * 10 ** gen.uniform(-2, 0))
    locations = locations[locations > 0]

    masses = np.zeros((m, locations.size))
    used = np.zeros(n_null)
    budget = 0.0
    for k, t in enumerate(locations):
        cap = min(m * t, n_null) * (1 - CAP_SLACK)
        if cap <= budget:
            continue
        target = budget + gen.random() * (cap - budget)
        alloc = _fill(gen, target - budget, 1.0 - used)
        masses[nulls, k] = alloc
        used += alloc
        budget += alloc.sum()

    is_null = np.zeros(m, dtype=bool)
    is_null[nulls] = True
    for i in np.flatnonzero(~is_null):
        masses[i] = gen.dirichlet(np.ones(locations.size + 1))[:-1]

    return AtomScenario(
        name=f'random(m={m},seed={seed},max_atoms={max_atoms}{",null" if global_null else ""})',
        m=m,
        h0=frozenset(int(i) + 1 for i in nulls),
        coordinates=tuple(merge_atoms(locations, masses[i]) for i in range(m)),
        meta={'seed': seed, 'max_atoms': max_atoms},
    )
