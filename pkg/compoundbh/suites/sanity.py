"""
    compoundbh/suites/sanity
    ~~~~~~~~~~~~~~~~~~~~~~~~

    Contains the suite checking FDR = alpha |H0| / m for independent uniform nulls.
"""
from .. import scenarios
from . import base

#: (m, number of nulls, non-null Beta shape) per scenario.
GRID = ((20, 20, 1.0), (20, 10, 0.1), (100, 80, 0.05))


class UniformSuite(base.Suite):
    """
    Continuous independent p-values, where BH controls FDR at exactly alpha |H0| / m.
    """
    name = 'sanity'

    def checks(self) -> None:
        alpha = self.params.alpha
        for m, n_null, signal in GRID:
            s = scenarios.UniformScenario(m, frozenset(range(1, n_null + 1)), signal,
                                          name=f'uniform(m={m},nulls={n_null},signal={signal})')
            self.check_exact(s, alpha, s.classical_fdr(alpha), note='alpha |H0| / m')
