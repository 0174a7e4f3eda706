"""Mamdani fuzzy controller on (error, error rate).

Both inputs are fuzzified with five triangular membership sets labeled
NB, NS, Z, PS, PB whose peaks sit at -L, -L/2, 0, L/2, L on a configurable
universe [-L, +L] (inputs are clamped into the universe, so the outer sets
saturate at the bounds).  A 5x5 rule table maps every label pair to an
output set; activations use min for AND, are max-aggregated per output set,
and the aggregate membership is defuzzified by centroid on a symmetric
grid.  Output sets are triangles centered at {-1, -0.5, 0, 0.5, 1} times
the output gain, so the defuzzified control always lies within
[-output_gain, +output_gain].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError

#: label order used by rule tables: index 0..4 = NB, NS, Z, PS, PB
LABELS = ("NB", "NS", "Z", "PS", "PB")

#: classic antisymmetric rule table, rows = error label, cols = derror label
STANDARD_RULES = (
    ("NB", "NB", "NB", "NS", "Z"),
    ("NB", "NB", "NS", "Z", "PS"),
    ("NB", "NS", "Z", "PS", "PB"),
    ("NS", "Z", "PS", "PB", "PB"),
    ("Z", "PS", "PB", "PB", "PB"),
)


def _triangle(x: np.ndarray, left: float, center: float, right: float) -> np.ndarray:
    # evaluated so that mirrored parameters give bitwise-mirrored values
    rising = (x - left) / (center - left)
    falling = (right - x) / (right - center)
    return np.clip(np.minimum(rising, falling), 0.0, 1.0)


def _memberships(value: float, half_range: float) -> np.ndarray:
    """Degrees of membership of a clamped scalar in the five input sets."""
    x = min(max(value, -half_range), half_range)
    step = half_range / 2.0
    centers = [-half_range, -step, 0.0, step, half_range]
    out = np.empty(5)
    for k, c in enumerate(centers):
        out[k] = _triangle(np.asarray(x, dtype=np.float64), c - step, c, c + step)
    return out


@dataclass(frozen=True)
class FuzzyRulebase:
    """Input universes, rule table and output-set geometry."""

    error_range: float = 1.0
    derror_range: float = 1.0
    output_gain: float = 1.0
    rules: tuple[tuple[str, ...], ...] = STANDARD_RULES
    grid_points_per_side: int = 600

    def __post_init__(self):
        if self.error_range <= 0 or self.derror_range <= 0:
            raise ValueError("input ranges must be positive")
        if self.output_gain <= 0:
            raise ValueError("output gain must be positive")
        if len(self.rules) == 0:
            raise ConfigError("rule table is empty")
        if len(self.rules) != 5 or any(len(row) != 5 for row in self.rules):
            raise ConfigError("rule table must be 5x5")
        for row in self.rules:
            for label in row:
                if label not in LABELS:
                    raise ConfigError(f"unknown output label {label!r}")

    @property
    def output_centers(self) -> np.ndarray:
        return self.output_gain * np.array([-1.0, -0.5, 0.0, 0.5, 1.0])

    def output_grid(self) -> np.ndarray:
        # symmetric about zero so mirrored aggregates have mirrored centroids
        half = np.linspace(0.0, 1.5 * self.output_gain, self.grid_points_per_side + 1)
        return np.concatenate([-half[:0:-1], half])


def fuzzy_step(rulebase: FuzzyRulebase, error: float, derror: float) -> float:
    """One Mamdani inference pass: fuzzify, fire rules, aggregate, defuzzify."""
    if not (np.isfinite(error) and np.isfinite(derror)):
        raise ValueError(f"inputs must be finite, got ({error}, {derror})")

    mu_e = _memberships(float(error), rulebase.error_range)
    mu_de = _memberships(float(derror), rulebase.derror_range)

    # min-AND activation, max-aggregated per output set
    activation = np.zeros(5)
    for i in range(5):
        if mu_e[i] == 0.0:
            continue
        for j in range(5):
            w = min(mu_e[i], mu_de[j])
            if w == 0.0:
                continue
            k = LABELS.index(rulebase.rules[i][j])
            if w > activation[k]:
                activation[k] = w

    grid = rulebase.output_grid()
    half_width = 0.5 * rulebase.output_gain
    aggregate = np.zeros_like(grid)
    for k, center in enumerate(rulebase.output_centers):
        if activation[k] == 0.0:
            continue
        clipped = np.minimum(activation[k], _triangle(grid, center - half_width, center, center + half_width))
        aggregate = np.maximum(aggregate, clipped)

    area = float(np.sum(aggregate))
    if area <= 0.0:
        return 0.0
    return float(np.sum(grid * aggregate) / area)


class FuzzyController:
    """Per-dimension fuzzy control; the error rate is a first difference."""

    def __init__(self, rulebase: FuzzyRulebase, n_dims: int):
        self.rulebase = rulebase
        self._n_dims = n_dims
        self._prev_error: np.ndarray | None = None

    def step(self, error: np.ndarray, dt: float = 1.0) -> np.ndarray:
        if not np.isfinite(dt) or dt <= 0:
            raise ValueError(f"dt must be a positive real, got {dt}")
        error = np.asarray(error, dtype=np.float64)
        if self._prev_error is None:
            derror = np.zeros_like(error)
        else:
            derror = (error - self._prev_error) / dt
        control = np.array(
            [fuzzy_step(self.rulebase, e, de) for e, de in zip(error, derror)]
        )
        self._prev_error = error.copy()
        return control

    def reset(self) -> None:
        self._prev_error = None
