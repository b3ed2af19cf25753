"""
    compoundbh/suites/thm2
    ~~~~~~~~~~~~~~~~~~~~~~

    Contains the suite for independent (epsilon, delta)-approximate compound p-values.

    With delta = 0 the FDR is checked against ``1.93 alpha (1 + epsilon)``; with
    delta > 0 the modified FDR, whose denominator adds ``m delta / (alpha (1 + epsilon))``,
    is checked against the same bound.
"""
from .. import defaults, scenarios
from ..config import ApproxParams, Metric
from ..scenarios import atoms
from . import base

#: Slack levels applied to every base scenario.
LEVELS = (ApproxParams(0.1, 0.0), ApproxParams(0.0, 0.01), ApproxParams(0.2, 0.005))

#: Largest analytic violation tolerated when validating an inflated scenario.
VALIDITY_TOL = 1e-12


class ApproximateSuite(base.Suite):
    """
    Inflates compound scenarios to approximate ones and checks the (modified) FDR bound.
    """
    name = 'thm2'

    def bases(self):
        p = self.params
        for k in range(max(1, p.fuzz_seeds // 5)):
            yield scenarios.random_atom_scenario(p.fuzz_m, p.seed + k, p.max_atoms)
        yield scenarios.prop4_scenario(0.2, 10)

    def checks(self) -> None:
        alpha = self.params.alpha
        for s in self.bases():
            for params in LEVELS:
                inflated = atoms.inflate(s, params)
                violation = atoms.approx_validity_check(inflated, params)
                if violation > VALIDITY_TOL:
                    self.add_invalid(inflated.name, alpha, violation, 'inflated scenario is not (eps, delta) valid')
                    continue
                metric = Metric.FDR if params.delta == 0 else Metric.ModifiedFDR
                bound = defaults.THM1_CONSTANT * alpha * (1 + params.epsilon)
                self.check_bound(inflated, alpha, bound, metric, params, note=f'1.93 alpha (1 + eps), {metric}')
