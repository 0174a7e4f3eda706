"""Integrator plant: the simplest controllable system, y(t+1) = y(t) + g*u(t)."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..metrics import MetricSchema, MetricVector, as_float_array
from .base import Plant


class LinearPlant(Plant):
    """Per-dimension integrator with unit (or configured) input gain.

    Under pure proportional control u = kp*e with setpoint r this contracts
    the error geometrically, |e(t+1)| = |1 - g*kp| * |e(t)|, which makes it
    the reference plant for convergence checks and controller comparisons.
    """

    reentrant = False

    def __init__(
        self,
        schema: MetricSchema,
        initial: Sequence[float] | float,
        gain: Sequence[float] | float = 1.0,
    ):
        n = len(schema)
        self._schema = schema
        self._initial = np.broadcast_to(np.asarray(initial, dtype=np.float64), (n,)).copy()
        schema.validate_values(self._initial, "initial")
        self._gain = np.broadcast_to(np.asarray(gain, dtype=np.float64), (n,)).copy()
        self._state = self._initial.copy()
        self._step = 0

    @property
    def schema(self) -> MetricSchema:
        return self._schema

    def reset(self) -> None:
        self._state = self._initial.copy()
        self._step = 0

    def generate(self, prompt, control=None, rng=None):
        if control is not None:
            u = as_float_array(control)
            self._schema.validate_values(u, "control")
            self._state = self._state + self._gain * u
        artifact = f"state {self._step}: {self._state.tolist()}"
        self._step += 1
        return artifact, MetricVector(self._schema, self._state.copy())
