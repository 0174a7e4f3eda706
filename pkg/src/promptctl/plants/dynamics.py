"""Scalar dynamic processes for tuning experiments.

These expose the sample-at-a-time ``DynamicPlant`` interface used by the
relay autotuner, not the generative ``Plant`` interface.
"""

from __future__ import annotations

from collections import deque

import numpy as np


class SecondOrderPlant:
    """Damped second-order process with input transport delay.

    Continuous model (integrated with RK4 under zero-order hold):

        y'' + 2*zeta*w0*y' + w0^2*y = w0^2 * gain * u(t - delay)

    The delay is rounded to a whole number of samples.  The loop transfer
    function has a genuine phase crossover, so relay feedback produces a
    sustained oscillation whose period approximates the ultimate period.
    """

    def __init__(
        self,
        natural_freq: float = 1.0,
        damping: float = 0.7,
        gain: float = 1.0,
        delay: float = 1.0,
        dt: float = 0.005,
    ):
        if natural_freq <= 0 or damping < 0 or dt <= 0 or delay < 0:
            raise ValueError("natural_freq, dt must be positive; damping, delay >= 0")
        self.w0 = float(natural_freq)
        self.zeta = float(damping)
        self.gain = float(gain)
        self.delay = float(delay)
        self.dt = float(dt)
        self._n_delay = int(round(delay / dt))
        self.reset()

    def reset(self) -> None:
        self._y = 0.0
        self._v = 0.0
        self._buffer: deque[float] = deque([0.0] * self._n_delay, maxlen=max(self._n_delay, 1))
        if self._n_delay == 0:
            self._buffer.clear()

    def _derivatives(self, y: float, v: float, u: float) -> tuple[float, float]:
        return v, self.w0**2 * (self.gain * u - y) - 2.0 * self.zeta * self.w0 * v

    def step(self, u: float) -> float:
        if self._n_delay > 0:
            self._buffer.append(u)
            u_eff = self._buffer[0]
        else:
            u_eff = u
        h = self.dt
        y, v = self._y, self._v
        k1y, k1v = self._derivatives(y, v, u_eff)
        k2y, k2v = self._derivatives(y + 0.5 * h * k1y, v + 0.5 * h * k1v, u_eff)
        k3y, k3v = self._derivatives(y + 0.5 * h * k2y, v + 0.5 * h * k2v, u_eff)
        k4y, k4v = self._derivatives(y + h * k3y, v + h * k3v, u_eff)
        self._y = y + h * (k1y + 2 * k2y + 2 * k3y + k4y) / 6.0
        self._v = v + h * (k1v + 2 * k2v + 2 * k3v + k4v) / 6.0
        return self._y


class StaticPlant:
    """No dynamics at all: the output never reacts to the input."""

    def __init__(self, value: float = 0.0, dt: float = 0.005):
        self.value = float(value)
        self.dt = float(dt)

    def reset(self) -> None:
        pass

    def step(self, u: float) -> float:
        return self.value
