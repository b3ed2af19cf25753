"""
    compoundbh/suites/gamma
    ~~~~~~~~~~~~~~~~~~~~~~~

    Contains the suite checking FDR <= alpha / (1 - gamma) when ``P(p_j <= alpha) <= gamma`` for every null.
"""
from .. import defaults, scenarios
from ..scenarios import atoms
from . import base


class GammaSuite(base.Suite):
    """
    Random and worst-case scenarios with null mass at or below alpha capped at gamma.
    """
    name = 'gamma'

    def checks(self) -> None:
        p = self.params
        for gamma in defaults.GAMMA_LEVELS:
            bound = p.alpha / (1 - gamma)
            for k in range(max(1, p.fuzz_seeds // 5)):
                s = scenarios.random_atom_scenario(p.fuzz_m, p.seed + k, p.max_atoms)
                self.check_bound(atoms.constrain_gamma(s, p.alpha, gamma), p.alpha, bound, note='alpha / (1 - gamma)')
            worst = atoms.constrain_gamma(scenarios.prop4_scenario(p.alpha, 10), p.alpha, gamma)
            self.check_bound(worst, p.alpha, bound, note='alpha / (1 - gamma)')
