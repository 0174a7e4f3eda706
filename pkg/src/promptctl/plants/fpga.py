"""Simulated FPGA synthesis plants.

Two substitutes for a real synthesis toolchain:

* :class:`ScriptedPlant` replays a fixed sequence of observation vectors,
  for exact reproduction of known trajectories.
* :class:`ParametricFpgaPlant` exposes simple first-order dynamics where a
  requested reduction is partially realized through a responsiveness
  coefficient per dimension, down to a floor.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

import numpy as np

from ..errors import PlantExhaustedError
from ..metrics import Direction, MetricDimension, MetricSchema, MetricVector, as_float_array
from .base import Plant


def fpga_resource_schema() -> MetricSchema:
    """LUT/FF/DSP/BRAM utilization in percent plus timing slack in ns."""
    return MetricSchema(
        [
            MetricDimension("LUTs", "percent", Direction.LOWER_IS_BETTER),
            MetricDimension("FFs", "percent", Direction.LOWER_IS_BETTER),
            MetricDimension("DSPs", "percent", Direction.LOWER_IS_BETTER),
            MetricDimension("BRAMs", "percent", Direction.LOWER_IS_BETTER),
            MetricDimension("slack_ns", "ns", Direction.HIGHER_IS_BETTER),
        ]
    )


class ScriptedPlant(Plant):
    """Replays a pre-recorded sequence of observations, then errors out."""

    reentrant = False  # a shared cursor is single-owner state

    def __init__(self, schema: MetricSchema, sequence: Sequence[Sequence[float]]):
        self._schema = schema
        self._sequence = [MetricVector(schema, row) for row in sequence]
        if not self._sequence:
            raise ValueError("scripted sequence must not be empty")
        self._cursor = 0

    @classmethod
    def from_json_file(cls, path: str | Path, schema: MetricSchema) -> "ScriptedPlant":
        """Load a JSON array of metric-vector arrays."""
        rows = json.loads(Path(path).read_text())
        return cls(schema, rows)

    @property
    def schema(self) -> MetricSchema:
        return self._schema

    @property
    def remaining(self) -> int:
        return len(self._sequence) - self._cursor

    def reset(self) -> None:
        self._cursor = 0

    def generate(self, prompt, control=None, rng=None):
        if self._cursor >= len(self._sequence):
            raise PlantExhaustedError(
                f"scripted sequence exhausted after {len(self._sequence)} observations"
            )
        observation = self._sequence[self._cursor]
        artifact = f"// scripted synthesis report {self._cursor}: {json.dumps(observation.as_dict())}"
        self._cursor += 1
        return artifact, observation


class ParametricFpgaPlant(Plant):
    """First-order utilization dynamics with partial responsiveness.

    For lower-is-better (utilization) dimensions a control u moves the value
    by responsiveness * u, never below the floor and clamped into [0, 100]
    for percent units.  For higher-is-better (slack-like) dimensions the
    value moves by slack_gain * u.  Optional zero-mean Gaussian noise with
    per-dimension sigma models run-to-run synthesis variation.
    """

    reentrant = False

    def __init__(
        self,
        schema: MetricSchema,
        baseline: Sequence[float],
        responsiveness: Sequence[float] | float = 1.0,
        floors: Sequence[float] | float = 0.0,
        slack_gain: float = 1.0,
        noise_sigma: Sequence[float] | float | None = None,
    ):
        n = len(schema)
        self._schema = schema
        self._baseline = as_float_array(baseline)
        schema.validate_values(self._baseline, "baseline")
        self._rho = np.broadcast_to(np.asarray(responsiveness, dtype=np.float64), (n,)).copy()
        if np.any(self._rho < 0) or np.any(self._rho > 1):
            raise ValueError(f"responsiveness must lie in [0, 1], got {self._rho}")
        self._floors = np.broadcast_to(np.asarray(floors, dtype=np.float64), (n,)).copy()
        if np.any(self._floors < 0):
            raise ValueError(f"floors must be >= 0, got {self._floors}")
        self._slack_gain = float(slack_gain)
        if noise_sigma is None:
            self._sigma = None
        else:
            self._sigma = np.broadcast_to(np.asarray(noise_sigma, dtype=np.float64), (n,)).copy()
            if np.any(self._sigma < 0):
                raise ValueError("noise sigma must be >= 0")
        self._lower = np.array(
            [d.direction is Direction.LOWER_IS_BETTER for d in schema], dtype=bool
        )
        self._percent = np.array([d.unit == "percent" for d in schema], dtype=bool)
        self._state = self._baseline.copy()
        self._step = 0

    @property
    def schema(self) -> MetricSchema:
        return self._schema

    def reset(self) -> None:
        self._state = self._baseline.copy()
        self._step = 0

    def generate(self, prompt, control=None, rng=None):
        if control is not None:
            u = as_float_array(control)
            self._schema.validate_values(u, "control")
            moved = np.where(
                self._lower,
                self._state + self._rho * u,
                self._state + self._slack_gain * u,
            )
            moved = np.where(self._lower, np.maximum(moved, self._floors), moved)
            self._state = np.where(
                self._percent, np.clip(moved, 0.0, 100.0), moved
            )
        values = self._state.copy()
        if self._sigma is not None and rng is not None:
            values = values + rng.normal(0.0, self._sigma)
            values = np.where(self._percent, np.clip(values, 0.0, 100.0), values)
        observation = MetricVector(self._schema, values)
        artifact = f"// parametric synthesis report {self._step}: {json.dumps(observation.as_dict())}"
        self._step += 1
        return artifact, observation
