"""Exception types shared across the package."""


class PromptControlError(Exception):
    """Base class for every error raised by promptctl."""


class SchemaMismatchError(PromptControlError):
    """A vector, matrix or report does not conform to the metric schema in use."""


class ConfigError(PromptControlError):
    """Invalid, incomplete or contradictory configuration."""


class TuningError(PromptControlError):
    """A relay experiment failed to produce a usable sustained oscillation."""


class NonStabilizableError(PromptControlError):
    """The Riccati iteration did not converge; (A, B) is likely not stabilizable."""


class IllConditionedError(PromptControlError):
    """A matrix inversion required by a solver is singular or numerically unusable."""


class DataError(PromptControlError):
    """An observation contained non-finite or otherwise unusable values."""


class PlantError(PromptControlError):
    """A plant failed to produce an observation."""

    #: whether the failure is worth retrying (transient vs. deterministic)
    retryable = True


class PlantExhaustedError(PlantError):
    """A scripted plant ran out of pre-recorded observations."""

    retryable = False


class ObservationError(PromptControlError):
    """A plant report is missing a required dimension."""


class ReportParseError(PromptControlError):
    """A plant report value could not be interpreted as a finite number."""


class HttpPlantError(PlantError):
    """Base class for failures of the HTTP-backed plant."""


class HttpTimeoutError(HttpPlantError):
    """The HTTP request timed out."""


class HttpConnectionError(HttpPlantError):
    """The HTTP endpoint could not be reached."""


class HttpStatusError(HttpPlantError):
    """The HTTP endpoint answered with an error status."""

    def __init__(self, status: int, message: str = ""):
        super().__init__(message or f"HTTP status {status}")
        self.status = status


class MalformedResponseError(HttpPlantError):
    """The HTTP endpoint answered 200 but the body is not a usable completion."""

    retryable = False


class LoopAbortedError(PromptControlError):
    """The control loop stopped early; carries the partial trace and the cause."""

    def __init__(self, trace, cause: BaseException):
        super().__init__(f"loop aborted after {len(trace.records)} step(s): {cause}")
        self.trace = trace
        self.cause = cause
