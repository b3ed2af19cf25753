"""
    compoundbh/suites/thm3
    ~~~~~~~~~~~~~~~~~~~~~~

    Contains the suite checking FDR <= alpha + 2 alpha^2 under the global null.
"""
from .. import bounds, defaults, scenarios
from . import base


class GlobalNullSuite(base.Suite):
    """
    Global null battery: the global null worst case and random global null scenarios at several levels.
    """
    name = 'thm3'

    def checks(self) -> None:
        p = self.params
        for alpha in defaults.THM3_ALPHAS:
            bound = alpha + 2 * alpha * alpha
            note = f'alpha + 2 alpha^2 (closed form {bounds.globalnull_closed_bound(alpha):.6f})'
            self.check_bound(scenarios.prop4_scenario(alpha, 10), alpha, bound, note=note)
            for k in range(max(1, p.fuzz_seeds // 10)):
                s = scenarios.random_atom_scenario(p.fuzz_m, p.seed + k, p.max_atoms, global_null=True)
                self.check_bound(s, alpha, bound, note=note)
