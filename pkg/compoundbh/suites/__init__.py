"""
    compoundbh/suites
    ~~~~~~~~~~~~~~~~~

    Contains Monte Carlo batteries checking the FDR bounds of BH.
"""
from .. import errors
from ..hints import Optional, Str
from .base import Row, Suite, SuiteClass, SuiteParams, SuiteReport, Verdict
from .gamma import GammaSuite
from .props import WorstCaseSuite
from .sanity import UniformSuite
from .thm1 import IndependentSuite
from .thm2 import ApproximateSuite
from .thm3 import GlobalNullSuite

__all__ = ['Row', 'Suite', 'SuiteParams', 'SuiteReport', 'SuiteType', 'Verdict', 'for_type', 'run_suite']


class SuiteType:
    """
    Known suite names.
    """
    Thm1 = 'thm1'
    Thm2 = 'thm2'
    Thm3 = 'thm3'
    Gamma = 'gamma'
    Props = 'props'
    Sanity = 'sanity'


TYPES = {
    SuiteType.Thm1: IndependentSuite,
    SuiteType.Thm2: ApproximateSuite,
    SuiteType.Thm3: GlobalNullSuite,
    SuiteType.Gamma: GammaSuite,
    SuiteType.Props: WorstCaseSuite,
    SuiteType.Sanity: UniformSuite,
}


def for_type(suite: Str) -> SuiteClass:
    """
    Return the suite class registered under the given name.

    :param suite: Suite name
    :return: Suite class
    """
    cls = TYPES.get(suite)
    if not cls:
        raise errors.SuiteTypeNotSupported(suite)
    return cls


def run_suite(name: Str, params: Optional[SuiteParams] = None) -> SuiteReport:
    """
    Run the named suite.

    :param name: Suite name
    :param params: Replicates, seed, workers and battery sizes
    :return: Report with one row per scenario
    """
    return for_type(name)(params or SuiteParams()).run()
