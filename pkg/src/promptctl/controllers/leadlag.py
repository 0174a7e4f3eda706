"""Lead-lag compensator K * (T1*s + 1) / (T2*s + 1), discretized per step.

The continuous transfer function is mapped to a first-order recurrence with
the bilinear (Tustin) transform s <- (2/dt) * (1 - z^-1) / (1 + z^-1):

    u[k] = b0 * e[k] + b1 * e[k-1] - a1 * u[k-1]

with  a = 2*T1/dt,  b = 2*T2/dt,
      b0 = K*(a+1)/(b+1),  b1 = K*(1-a)/(b+1),  a1 = (1-b)/(b+1).

T1 = T2 cancels pole against zero and the filter collapses to the static
gain K; a held constant input settles to K (unit DC gain times K).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..errors import SchemaMismatchError


@dataclass(frozen=True)
class LeadLagParams:
    """Gain, lead/lag time constants and the per-dimension filter state."""

    gain: float
    t1: float
    t2: float
    prev_error: np.ndarray | None = None
    prev_output: np.ndarray | None = None

    def __post_init__(self):
        if not np.isfinite(self.gain):
            raise ValueError(f"gain must be finite, got {self.gain}")
        if self.t1 <= 0 or self.t2 <= 0:
            raise ValueError(f"time constants must be positive, got t1={self.t1}, t2={self.t2}")


def lead_lag_step(
    params: LeadLagParams, error: np.ndarray, dt: float
) -> tuple[np.ndarray, LeadLagParams]:
    """Filter one error sample per dimension; returns (control, next params).

    The filter state starts at rest (zero previous input and output).
    """
    if not np.isfinite(dt) or dt <= 0:
        raise ValueError(f"dt must be a positive real, got {dt}")
    error = np.asarray(error, dtype=np.float64)
    if not np.all(np.isfinite(error)):
        raise ValueError(f"error must be finite, got {error}")

    prev_error = params.prev_error
    prev_output = params.prev_output
    if prev_error is None:
        prev_error = np.zeros_like(error)
        prev_output = np.zeros_like(error)
    elif prev_error.shape != error.shape:
        raise SchemaMismatchError(
            f"error has shape {error.shape}, filter state has shape {prev_error.shape}"
        )

    a = 2.0 * params.t1 / dt
    b = 2.0 * params.t2 / dt
    b0 = params.gain * (a + 1.0) / (b + 1.0)
    b1 = params.gain * (1.0 - a) / (b + 1.0)
    a1 = (1.0 - b) / (b + 1.0)

    control = b0 * error + b1 * prev_error - a1 * prev_output
    new_params = replace(params, prev_error=error.copy(), prev_output=control.copy())
    return control, new_params


class LeadLagController:
    """Stateful wrapper around :func:`lead_lag_step` for loop use."""

    def __init__(self, gain: float, t1: float, t2: float):
        self.params = LeadLagParams(gain=gain, t1=t1, t2=t2)
        self._initial = self.params

    def step(self, error: np.ndarray, dt: float = 1.0) -> np.ndarray:
        control, self.params = lead_lag_step(self.params, error, dt)
        return control

    def reset(self) -> None:
        self.params = self._initial
