"""Dense embedding containers and the elementary numerics built on them.

Embedding rows are stored as float32 (the precision embeddings are usually
exported at); every reduction over a row (norms, dot products) accumulates
in float64 so results are stable and bit-reproducible across runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, EmptyInputError, ZeroRowError

__all__ = ["EmbeddingMatrix", "SimilarityMatrix", "l2_normalize", "cosine_similarity", "softmax"]

ZERO_NORM_THRESHOLD = 1e-12
UNIT_NORM_TOLERANCE = 1e-5


@dataclass
class EmbeddingMatrix:
    """N identified embedding rows of a common dimension D.

    ids must be unique and align one-to-one with the rows of ``values``.
    ``normalized`` records whether every row is unit length; it is only set
    by :func:`l2_normalize` (or trusted constructors such as file loaders
    that re-verify it).
    """

    ids: list[str]
    values: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        self.values = np.ascontiguousarray(self.values, dtype=np.float32)
        if self.values.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D matrix, got shape {self.values.shape}")
        self.ids = [str(i) for i in self.ids]
        if len(self.ids) != self.values.shape[0]:
            raise DimensionMismatchError(
                f"{len(self.ids)} ids but {self.values.shape[0]} rows")
        if len(set(self.ids)) != len(self.ids):
            seen, dupes = set(), set()
            for i in self.ids:
                (dupes if i in seen else seen).add(i)
            raise ValueError(f"duplicate ids: {sorted(dupes)[:5]}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("embedding matrix contains NaN or Inf")
        if self.normalized:
            norms = row_norms(self.values)
            if not np.allclose(norms, 1.0, atol=UNIT_NORM_TOLERANCE):
                raise ValueError("normalized flag set but some rows are not unit length")

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    def __len__(self) -> int:
        return self.n_rows


@dataclass
class SimilarityMatrix:
    """Cosine similarities: one row per image, one column per keyword."""

    scores: np.ndarray
    image_ids: list[str] | None = field(default=None)

    def __post_init__(self):
        self.scores = np.asarray(self.scores, dtype=np.float64)
        if self.scores.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D matrix, got shape {self.scores.shape}")
        if not np.all(np.isfinite(self.scores)):
            raise ValueError("similarity matrix contains NaN or Inf")
        if self.scores.size and (self.scores.min() < -1.0 or self.scores.max() > 1.0):
            raise ValueError("cosine similarities must lie in [-1, 1]")

    @property
    def n_images(self) -> int:
        return self.scores.shape[0]

    @property
    def n_keywords(self) -> int:
        return self.scores.shape[1]


def row_norms(values: np.ndarray) -> np.ndarray:
    """Euclidean norm of every row, accumulated in float64."""
    v = np.asarray(values)
    return np.sqrt(np.einsum("ij,ij->i", v, v, dtype=np.float64))


def l2_normalize(m: EmbeddingMatrix) -> EmbeddingMatrix:
    """Return a copy of ``m`` with every row scaled to unit Euclidean norm.

    Raises ZeroRowError for any row whose norm falls below 1e-12; such a row
    has no direction and would poison every cosine downstream.
    """
    norms = row_norms(m.values)
    zero = np.flatnonzero(norms < ZERO_NORM_THRESHOLD)
    if zero.size:
        raise ZeroRowError(int(zero[0]))
    scaled = (m.values.astype(np.float64) / norms[:, None]).astype(np.float32)
    return EmbeddingMatrix(ids=list(m.ids), values=scaled, normalized=True)


def cosine_similarity(images: EmbeddingMatrix, keywords: EmbeddingMatrix) -> SimilarityMatrix:
    """Full cosine-similarity matrix between image rows and keyword rows.

    Inputs are normalized internally when their ``normalized`` flag is unset.
    Scores are computed with float64 accumulation and clamped to [-1, 1] so
    that float rounding can never perturb downstream rank ties.
    """
    if images.dim != keywords.dim:
        raise DimensionMismatchError(
            f"image dim {images.dim} != keyword dim {keywords.dim}")
    a = images if images.normalized else l2_normalize(images)
    b = keywords if keywords.normalized else l2_normalize(keywords)
    scores = a.values.astype(np.float64) @ b.values.astype(np.float64).T
    np.clip(scores, -1.0, 1.0, out=scores)
    return SimilarityMatrix(scores=scores, image_ids=list(images.ids))


def softmax(scores, temperature: float = 1.0) -> np.ndarray:
    """Stable softmax of a score vector at the given temperature.

    The maximum is subtracted before exponentiation, so arbitrarily large
    scores cannot overflow. Output is float64, strictly positive, and sums
    to 1 up to rounding.
    """
    if temperature <= 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    s = np.asarray(scores, dtype=np.float64)
    if s.size == 0:
        raise EmptyInputError("softmax of an empty score list")
    if not np.all(np.isfinite(s)):
        raise ValueError("softmax input contains NaN or Inf")
    z = s / temperature
    z -= z.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)
