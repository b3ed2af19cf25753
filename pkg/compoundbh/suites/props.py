"""
    compoundbh/suites/props
    ~~~~~~~~~~~~~~~~~~~~~~~

    Contains the suite matching Monte Carlo estimates of the worst-case scenarios to their exact FDR.
"""
from .. import procedures, scenarios
from . import base

#: (alpha, m) grids of each worst case.
PROP2_GRID = ((0.1, 30), (0.25, 6), (0.5, 3))
PROP4_GRID = ((0.2, 10), (0.5, 2), (0.0, 5))
PROP5_GRID = ((0.25, 3), (0.1, 55), (0.05, 210))


class WorstCaseSuite(base.Suite):
    """
    Checks the exact FDR of the worst-case scenarios and the PRDS lower bound.
    """
    name = 'props'

    def checks(self) -> None:
        for alpha, m in PROP2_GRID:
            s = scenarios.prop2_scenario(alpha, m)
            self.check_exact(s, alpha, s.exact_fdr, note='7 alpha / 6')
        for alpha, m in PROP4_GRID:
            s = scenarios.prop4_scenario(alpha, m)
            self.check_exact(s, alpha, s.exact_fdr, note='alpha + alpha^2 / 4')
        for alpha, m in PROP5_GRID:
            s = scenarios.prop5_scenario(alpha, m)
            est = self.estimate(s, alpha)
            k = self.params.se_multiplier
            lower = 3 / 8 * min(procedures.bh_harmonic_level(alpha, m), 1.0)
            ok = est.within(s.exact_fdr, k) and est.mean >= lower - k * est.se - 1e-12
            self.add(est, alpha, ok, s.exact_fdr, lower, note='3/8 min(alpha h_m, 1) lower bound')
