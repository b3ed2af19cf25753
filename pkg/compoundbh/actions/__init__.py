"""
    compoundbh/actions
    ~~~~~~~~~~~~~~~~~~

    Contains functionality for performing the command line actions.
"""
from .analyze import analyze
from .construct import construct
from .estimate import estimate
from .scenario import scenario
from .simulate import simulate
from .verify_bounds import verify_bounds

__all__ = [
    'analyze',
    'construct',
    'estimate',
    'scenario',
    'simulate',
    'verify_bounds'
]
