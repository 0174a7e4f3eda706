"""Named, unit-tagged metric vectors.

A :class:`MetricSchema` fixes the order, names, units and improvement
direction of the quantities a loop drives (resource utilizations, timing
slack, token probabilities, ...).  Setpoints, observations and scaled
feedback are all :class:`MetricVector` instances over one shared schema;
error and control signals are plain float arrays aligned to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import SchemaMismatchError


class Direction(str, Enum):
    """Which way an observation should move to approach its setpoint."""

    LOWER_IS_BETTER = "lower_is_better"
    HIGHER_IS_BETTER = "higher_is_better"


@dataclass(frozen=True)
class MetricDimension:
    """One named, unit-tagged measured quantity."""

    name: str
    unit: str
    direction: Direction = Direction.LOWER_IS_BETTER

    def __post_init__(self):
        if not self.name:
            raise ValueError("dimension name must be non-empty")
        if not self.unit:
            raise ValueError(f"dimension {self.name!r}: unit must be non-empty")


class MetricSchema:
    """Ordered, immutable collection of dimensions with unique names."""

    def __init__(self, dimensions: Iterable[MetricDimension]):
        dims = tuple(dimensions)
        names = [d.name for d in dims]
        if len(set(names)) != len(names):
            raise ValueError(f"dimension names must be unique, got {names}")
        self._dimensions = dims
        self._index = {d.name: i for i, d in enumerate(dims)}

    @property
    def dimensions(self) -> tuple[MetricDimension, ...]:
        return self._dimensions

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self._dimensions)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no dimension named {name!r} in schema {self.names}") from None

    def __len__(self) -> int:
        return len(self._dimensions)

    def __iter__(self) -> Iterator[MetricDimension]:
        return iter(self._dimensions)

    def __getitem__(self, i: int) -> MetricDimension:
        return self._dimensions[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, MetricSchema) and self._dimensions == other._dimensions

    def __hash__(self) -> int:
        return hash(self._dimensions)

    def __repr__(self) -> str:
        return f"MetricSchema({list(self.names)})"

    def validate_values(self, values: np.ndarray, what: str = "values") -> None:
        """Raise if an array does not conform to this schema."""
        if values.shape != (len(self),):
            raise SchemaMismatchError(
                f"{what}: expected {len(self)} entries for {self.names}, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError(f"{what}: all entries must be finite, got {values}")


def as_float_array(values: Sequence[float] | np.ndarray) -> np.ndarray:
    """Copy arbitrary numeric input into a 1-D float64 array."""
    return np.array(values, dtype=np.float64).reshape(-1)


class MetricVector:
    """Float values bound to a :class:`MetricSchema`, one per dimension."""

    def __init__(self, schema: MetricSchema, values: Sequence[float] | np.ndarray):
        arr = as_float_array(values)
        schema.validate_values(arr)
        arr.flags.writeable = False
        self._schema = schema
        self._values = arr

    @property
    def schema(self) -> MetricSchema:
        return self._schema

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, key: int | str) -> float:
        if isinstance(key, str):
            key = self._schema.index(key)
        return float(self._values[key])

    def as_dict(self) -> dict[str, float]:
        return {name: float(v) for name, v in zip(self._schema.names, self._values)}

    def __repr__(self) -> str:
        pairs = ", ".join(f"{n}={v:g}" for n, v in self.as_dict().items())
        return f"MetricVector({pairs})"


def require_same_schema(a: MetricVector, b: MetricVector) -> MetricSchema:
    if a.schema != b.schema:
        raise SchemaMismatchError(
            f"schemas differ: {a.schema.names} vs {b.schema.names}"
        )
    return a.schema
