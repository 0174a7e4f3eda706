"""Discrete PID control over error vectors.

The control law combines the present error, its rectangular accumulation
and its first difference:

    u = kp * e  +  ki * I  +  kd * d,      I += e * dt,   d = (e - e_prev) / dt

The accumulator can be clamped (anti-windup) and the whole history can be
switched off: in stateless session mode the integral and derivative
contributions are identically zero and the controller degenerates to pure
proportional action, mirroring API-style usage where every call starts a
fresh session.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from ..errors import SchemaMismatchError


class SessionMode(Enum):
    """Whether the controller may use accumulated history."""

    STATEFUL = "stateful"
    STATELESS = "stateless"


@dataclass(frozen=True)
class PidGains:
    """Non-negative proportional, integral and derivative gains."""

    kp: float
    ki: float = 0.0
    kd: float = 0.0

    def __post_init__(self):
        for name in ("kp", "ki", "kd"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {v}")
        if self.kp + self.ki + self.kd <= 0:
            raise ValueError("at least one gain must be positive")


@dataclass(frozen=True)
class PidState:
    """Integral accumulator, previous error and step counter."""

    integral: np.ndarray
    prev_error: np.ndarray | None = None
    step: int = 0
    anti_windup_limit: float | None = None

    @classmethod
    def initial(cls, n_dims: int, anti_windup_limit: float | None = None) -> "PidState":
        if anti_windup_limit is not None and anti_windup_limit <= 0:
            raise ValueError(f"anti_windup_limit must be positive, got {anti_windup_limit}")
        return cls(integral=np.zeros(n_dims), anti_windup_limit=anti_windup_limit)


def pid_step(
    state: PidState,
    error: np.ndarray,
    dt: float,
    gains: PidGains,
    mode: SessionMode = SessionMode.STATEFUL,
) -> tuple[np.ndarray, PidState]:
    """Advance the PID recurrence one step.

    Returns the control vector and the successor state; neither input is
    mutated, so replaying the same (state, error) pair reproduces the same
    outputs bit for bit.

    Stateful mode accumulates ``I += e * dt`` before use (clamped to
    ``+-anti_windup_limit`` when set) and uses a first difference for the
    derivative, defined as zero on the first step.  Stateless mode returns
    exactly ``kp * e``; the accumulator stays zero and only ``prev_error``
    is recorded for trace purposes.
    """
    error = np.asarray(error, dtype=np.float64)
    if error.shape != state.integral.shape:
        raise SchemaMismatchError(
            f"error has shape {error.shape}, controller is sized for {state.integral.shape}"
        )
    if not np.all(np.isfinite(error)):
        raise ValueError(f"error must be finite, got {error}")
    if not np.isfinite(dt) or dt <= 0:
        raise ValueError(f"dt must be a positive real, got {dt}")

    if mode is SessionMode.STATELESS:
        control = gains.kp * error
        new_state = replace(state, prev_error=error.copy(), step=state.step + 1)
        return control, new_state

    integral = state.integral + error * dt
    if state.anti_windup_limit is not None:
        limit = state.anti_windup_limit
        integral = np.clip(integral, -limit, limit)

    if state.prev_error is None:
        derivative = np.zeros_like(error)
    else:
        derivative = (error - state.prev_error) / dt

    control = gains.kp * error + gains.ki * integral + gains.kd * derivative
    new_state = PidState(
        integral=integral,
        prev_error=error.copy(),
        step=state.step + 1,
        anti_windup_limit=state.anti_windup_limit,
    )
    return control, new_state


class PidController:
    """Stateful wrapper around :func:`pid_step` for loop use."""

    def __init__(
        self,
        gains: PidGains,
        n_dims: int,
        mode: SessionMode = SessionMode.STATEFUL,
        anti_windup_limit: float | None = None,
    ):
        self.gains = gains
        self.mode = mode
        self._n_dims = n_dims
        self._anti_windup_limit = anti_windup_limit
        self.state = PidState.initial(n_dims, anti_windup_limit)

    def step(self, error: np.ndarray, dt: float = 1.0) -> np.ndarray:
        control, self.state = pid_step(self.state, error, dt, self.gains, self.mode)
        return control

    def reset(self) -> None:
        self.state = PidState.initial(self._n_dims, self._anti_windup_limit)
