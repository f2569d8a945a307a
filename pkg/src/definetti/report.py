"""Shared report type for overlap computations.

Every overlap functional delta in this package feeds the same pair of
trace-distance error bounds: 2*sqrt(1-delta) in general and 2*(1-delta)
when the target representation appears with multiplicity one.  Trace
distance here is normalized as (1/2)*tr|A-B|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

_FLOAT_SLACK = 1e-12


@dataclass(frozen=True)
class DeltaReport:
    """An overlap value in [0, 1] plus the error bounds it implies.

    delta and bound_linear stay exact rationals whenever the computation
    was exact; bound_sqrt is necessarily a float.
    """

    delta: Fraction | float
    bound_sqrt: float
    bound_linear: Fraction | float
    formula_id: str
    psi_label: str

    def __post_init__(self) -> None:
        d = self.delta
        if isinstance(d, float):
            if not (-_FLOAT_SLACK <= d <= 1 + _FLOAT_SLACK):
                raise ValueError(f"delta out of range: {d!r}")
        elif not (0 <= d <= 1):
            raise ValueError(f"delta out of range: {d!r}")
        if not float(self.bound_linear) <= self.bound_sqrt + _FLOAT_SLACK:
            raise ValueError("linear bound must not exceed the sqrt bound on [0, 1]")

    @classmethod
    def from_delta(cls, delta, formula_id: str, psi_label: str) -> "DeltaReport":
        if isinstance(delta, float):
            # float path: forgive roundoff at the endpoints
            if not (-_FLOAT_SLACK <= delta <= 1 + _FLOAT_SLACK):
                raise ValueError(f"delta out of range: {delta!r}")
            delta = min(max(delta, 0.0), 1.0)
            linear = 2.0 * (1.0 - delta)
        else:
            delta = Fraction(delta)
            if not (0 <= delta <= 1):
                raise ValueError(f"delta out of range: {delta!r}")
            linear = 2 * (1 - delta)
        bound_sqrt = 2.0 * math.sqrt(float(1 - delta))
        return cls(
            delta=delta,
            bound_sqrt=bound_sqrt,
            bound_linear=linear,
            formula_id=formula_id,
            psi_label=psi_label,
        )
