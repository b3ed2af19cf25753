"""
    compoundbh/scenarios/uniform
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains the scenario of independent continuous p-values.
"""
import dataclasses

import numpy as np

from ..config import ApproxParams
from ..hints import Array, Float, Int, IntSet, OptionalFloat, Str
from . import base


@dataclasses.dataclass(frozen=True)
class UniformScenario(base.Scenario):
    """
    Represents m independent coordinates; nulls are Unif[0, 1] and non-nulls are
    Beta(`signal`, 1), which is stochastically smaller for ``signal < 1``.

    BH controls FDR at exactly ``alpha |H0| / m`` here.
    """
    m: Int
    h0: IntSet
    signal: Float = 1.0
    name: Str = 'uniform'

    def __post_init__(self):
        object.__setattr__(self, 'h0', frozenset(self.h0))

    @property
    def exact_fdr(self) -> OptionalFloat:
        return None

    def classical_fdr(self, alpha: Float) -> Float:
        return alpha * len(self.h0) / self.m

    def draw(self, gen: np.random.Generator) -> Array:
        u = gen.random(self.m)
        if self.signal == 1.0:
            return u
        alt = u ** (1.0 / self.signal)
        return np.where(self.null_mask_array(), u, alt)

    def cdf(self, i: Int, t: Float) -> Float:
        t = min(max(t, 0.0), 1.0)
        return t if i in self.h0 else t ** self.signal

    def validity_gap(self, params: ApproxParams = ApproxParams()) -> Float:
        # Linear in t, so the maximum sits at an endpoint.
        return max(len(self.h0) * t - self.m * (t * (1 + params.epsilon) + params.delta) for t in (0.0, 1.0))
