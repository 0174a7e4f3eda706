"""The plant interface: prompt and control in, artifact and metrics out."""

from __future__ import annotations

import abc

import numpy as np

from ..metrics import MetricSchema, MetricVector


class Plant(abc.ABC):
    """A controllable generative system.

    ``generate`` consumes the current prompt text and (after the first step)
    the control vector that produced it, and returns the generated artifact
    together with one measurement per schema dimension.  Plants that declare
    themselves deterministic must reproduce outputs exactly for a fixed
    seeded ``rng``.
    """

    #: whether several loops may drive one instance concurrently
    reentrant: bool = True

    @property
    @abc.abstractmethod
    def schema(self) -> MetricSchema: ...

    @abc.abstractmethod
    def generate(
        self,
        prompt: str,
        control: np.ndarray | None = None,
        rng: np.random.Generator | None = None,
    ) -> tuple[str, MetricVector]: ...

    def reset(self) -> None:
        """Return to the initial state; default plants are stateless."""
