"""
    compoundbh/suites/thm1
    ~~~~~~~~~~~~~~~~~~~~~~

    Contains the suite checking FDR <= 1.93 alpha for independent compound p-values.
"""
from .. import defaults, scenarios
from . import base


class IndependentSuite(base.Suite):
    """
    Fuzz battery of random compound scenarios plus the independent worst cases.
    """
    name = 'thm1'

    def checks(self) -> None:
        p = self.params
        bound = defaults.THM1_CONSTANT * p.alpha
        for k in range(p.fuzz_seeds):
            s = scenarios.random_atom_scenario(p.fuzz_m, p.seed + k, p.max_atoms)
            self.check_bound(s, p.alpha, bound, note='1.93 alpha')

        for alpha, m in ((0.1, 30), (0.25, 6)):
            s = scenarios.prop2_scenario(alpha, m)
            self.check_bound(s, alpha, defaults.THM1_CONSTANT * alpha, note='1.93 alpha')
        s = scenarios.prop4_scenario(0.2, 10)
        self.check_bound(s, 0.2, defaults.THM1_CONSTANT * 0.2, note='1.93 alpha')
