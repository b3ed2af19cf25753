"""
    compoundbh/actions/scenario
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains functionality for the `scenario` action.
"""
from .. import errors, loggers, results, scenarios
from ..hints import Float, Int, OptionalStr, Str

LOG = loggers.get_logger()

#: Largest validity violation tolerated for a built scenario.
VALIDITY_TOL = 1e-12


@results.wrapper
def scenario(scenario_type: Str,
             alpha: Float,
             m: Int,
             seed: Int,
             max_atoms: Int,
             out: OptionalStr = None) -> results.Result:
    """
    Responsible for building a named scenario and emitting it as JSON.

    :param scenario_type: Scenario type name
    :param alpha: Level the scenario is built for
    :param m: Number of hypotheses
    :param seed: Seed of random scenarios
    :param max_atoms: Atom locations of random scenarios
    :param out: Output JSON file; printed when omitted
    :return: Result of the scenario action
    """
    s = scenarios.build(scenario_type, alpha, m, seed, max_atoms)
    violation = scenarios.compound_validity_check(s)
    if violation > VALIDITY_TOL:
        raise errors.ScenarioInvalid(violation)
    LOG.debug(f'built {s.name}, validity margin {violation!r}')
    if out:
        s.write(out)
        return results.success(stdout=f'wrote {s.name} to {out}')
    return results.success(stdout=s.encode())
