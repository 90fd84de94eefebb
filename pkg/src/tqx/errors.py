"""Exception hierarchy for the tqx toolkit."""


class TqxError(Exception):
    """Base class for all tqx errors."""


class ZeroRowError(TqxError):
    """A row with (near-)zero norm cannot be L2-normalized."""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} has zero norm and cannot be normalized")


class DimensionMismatchError(TqxError):
    """Operands disagree on embedding dimension or shape."""


class EmptyInputError(TqxError):
    """An operation received an empty sequence where values are required."""


class MalformedRecordError(TqxError):
    """A raw keyword record failed validation."""

    def __init__(self, index: int, reason: str):
        self.index = index
        self.reason = reason
        super().__init__(f"record {index}: {reason}")


class EmptyResultError(TqxError):
    """A filter removed every keyword (likely a misspelled semantic type)."""


class PoolEmbeddingMismatchError(TqxError):
    """Keyword pool and keyword embedding matrix disagree on size or order."""


class KTooLargeError(TqxError):
    """Requested more clusters than there are data points."""


class SingleClusterError(TqxError):
    """Silhouette needs at least two distinct clusters."""


class KClassMismatchError(TqxError):
    """Cluster count and class count differ; no bijective matching exists."""


class BatchTooSmallError(TqxError):
    """Batch statistics need at least two samples in training mode."""


class NonFiniteGradientError(TqxError):
    """A gradient contained NaN or Inf; optimizer state would be poisoned."""


class MissingClassInTrainError(TqxError):
    """The training split does not cover every class."""


class InfeasibleMarginError(TqxError):
    """Synthetic fixture constraints cannot be satisfied."""


class ProviderError(TqxError):
    """The remote embedding provider failed or answered with a bad payload."""

    def __init__(self, message: str, status: int | None = None):
        self.status = status
        super().__init__(message)


class MissingIdsError(ProviderError):
    """The provider response omitted some of the requested ids."""

    def __init__(self, ids):
        self.ids = list(ids)
        super().__init__(f"provider response missing ids: {self.ids}")


class ConfigError(TqxError):
    """Run configuration is invalid (bad value or missing input file)."""


class PipelineStageError(TqxError):
    """A pipeline stage failed; carries the stage name for diagnostics."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")
