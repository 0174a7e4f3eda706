"""Common controller surface consumed by the loop engine."""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np


@runtime_checkable
class Controller(Protocol):
    """A discrete-time state machine mapping error vectors to control vectors.

    Implementations own their internal state; one controller instance must be
    driven by exactly one loop.
    """

    def step(self, error: np.ndarray, dt: float = 1.0) -> np.ndarray:
        """Advance one step and return the control vector for ``error``."""
        ...

    def reset(self) -> None:
        """Return to the initial (zero-history) state."""
        ...
