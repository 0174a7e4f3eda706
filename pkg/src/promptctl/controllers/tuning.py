"""Controller tuning: the classic Ziegler-Nichols table fed by a relay experiment.

``relay_autotune`` drives a single-input/single-output simulation with a
bang-bang relay on the error sign.  Once the induced oscillation settles,
its period gives the ultimate period Tu directly, and the describing
function of the relay gives the ultimate gain Ku = 4*d / (pi * a) from the
relay amplitude d and the oscillation amplitude a.  ``ziegler_nichols_gains``
then applies the closed-loop table kp = 0.6*Ku, Ti = Tu/2, Td = Tu/8.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np

from ..errors import TuningError
from .pid import PidGains


@runtime_checkable
class DynamicPlant(Protocol):
    """A deterministic scalar process advanced one sample at a time."""

    dt: float

    def reset(self) -> None: ...

    def step(self, u: float) -> float: ...


def ziegler_nichols_gains(ku: float, tu: float) -> PidGains:
    """Classic closed-loop PID table from ultimate gain and period.

    kp = 0.6*ku, ki = kp / (tu/2) = 1.2*ku/tu, kd = kp * tu/8 = 0.075*ku*tu.
    """
    if not np.isfinite(ku) or ku <= 0:
        raise ValueError(f"ku must be positive, got {ku}")
    if not np.isfinite(tu) or tu <= 0:
        raise ValueError(f"tu must be positive, got {tu}")
    kp = 0.6 * ku
    ki = 1.2 * ku / tu
    kd = 0.075 * ku * tu
    return PidGains(kp=kp, ki=ki, kd=kd)


def relay_autotune(
    plant: DynamicPlant,
    relay_amplitude: float,
    max_steps: int = 200_000,
    setpoint: float = 0.0,
    settle_cycles: int = 4,
    period_tolerance: float = 0.02,
) -> tuple[float, float]:
    """Estimate (ku, tu) by relay feedback.

    The relay applies +-relay_amplitude depending on the sign of the error
    setpoint - y.  Rising crossings of y through the setpoint are timed (with
    linear interpolation between samples); once the last ``settle_cycles``
    periods agree within ``period_tolerance`` relative spread the oscillation
    is considered sustained.  Raises :class:`TuningError` when no such
    oscillation appears within ``max_steps`` samples.
    """
    if relay_amplitude <= 0:
        raise ValueError(f"relay amplitude must be positive, got {relay_amplitude}")
    if max_steps < 2:
        raise ValueError(f"max_steps must be >= 2, got {max_steps}")

    plant.reset()
    dt = plant.dt
    d = relay_amplitude

    crossings: list[float] = []
    window: list[float] = []  # samples since the previous rising crossing
    prev_y: float | None = None
    amplitude: float | None = None

    y = setpoint  # relay sees zero error before the first sample
    for k in range(max_steps):
        u = d if (setpoint - y) >= 0 else -d
        y_next = plant.step(u)
        t_next = (k + 1) * dt

        if prev_y is not None and prev_y < setpoint <= y_next:
            frac = (setpoint - prev_y) / (y_next - prev_y)
            crossings.append(t_next - dt + frac * dt)
            if len(crossings) >= settle_cycles + 2 and len(window) > 2:
                periods = np.diff(crossings[-(settle_cycles + 1):])
                mean = periods.mean()
                if mean > 0 and np.max(np.abs(periods - mean)) <= period_tolerance * mean:
                    amplitude = (max(window) - min(window)) / 2.0
                    if amplitude > 0:
                        return 4.0 * d / (np.pi * amplitude), float(mean)
            window = []
        window.append(y_next)
        prev_y = y_next
        y = y_next

    raise TuningError(
        f"no sustained oscillation detected within {max_steps} steps "
        f"({len(crossings)} setpoint crossings seen)"
    )
