"""Batch-level augmentation and replay over caller-owned float32 buffers."""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from primeaug import (
    PrimeConfig,
    RecipeError,
    apply_recipe,
    prime_augment,
    recipe_from_json,
    rng_derive,
)
from primeaug import config_from_dict as _config_from_dict
from primeaug import load_preset as _load_preset


class BatchBoundaryError(ValueError):
    """The batch buffer violates the (N, H, W, 3) float32 contiguous contract."""


class BatchReplayError(ValueError):
    """One or more recipes failed to replay; see `failures`."""

    def __init__(self, failures):
        self.failures = list(failures)
        lines = "; ".join(f"element {i}: {msg}" for i, msg in self.failures)
        super().__init__(f"replay failed for {len(self.failures)} element(s): {lines}")


def load_preset(name: str) -> PrimeConfig:
    """Named operating point (`cifar` or `imagenet`)."""
    return _load_preset(name)


def config_from_dict(data: dict) -> PrimeConfig:
    """Build a config from a plain dict (same schema as the config JSON)."""
    return _config_from_dict(data)


def _check_batch(batch) -> np.ndarray:
    if not isinstance(batch, np.ndarray):
        raise BatchBoundaryError(f"batch must be a numpy array, got {type(batch).__name__}")
    if batch.ndim != 4 or batch.shape[3] != 3:
        raise BatchBoundaryError(f"batch must have shape (N, H, W, 3), got {batch.shape}")
    if batch.shape[0] < 1:
        raise BatchBoundaryError("batch is empty")
    if batch.dtype != np.float32:
        raise BatchBoundaryError(f"batch dtype must be float32, got {batch.dtype}")
    if not batch.flags["C_CONTIGUOUS"]:
        raise BatchBoundaryError("batch must be C-contiguous")
    return batch


def _map_elements(fn, count: int, workers) -> list:
    if workers is None or workers <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


def augment_batch(
    batch: np.ndarray,
    cfg: PrimeConfig,
    master_seed: int,
    epoch: int,
    workers: int | None = None,
) -> tuple[np.ndarray, list[str]]:
    """Augment every batch element; returns (output batch, recipe JSON list).

    Element i draws from the stream labeled (epoch, i), so results are
    deterministic for fixed (master_seed, epoch) and independent of
    `workers`.  Values outside [0, 1] are clamped into a copy first and a
    RuntimeWarning is issued.
    """
    batch = _check_batch(batch)
    lo, hi = float(batch.min()), float(batch.max())
    if lo < 0.0 or hi > 1.0:
        warnings.warn(
            f"batch values outside [0, 1] (range [{lo:g}, {hi:g}]); clamping a copy",
            RuntimeWarning,
            stacklevel=2,
        )
        batch = np.clip(batch, 0.0, 1.0)
    count = batch.shape[0]
    out = np.empty_like(batch)
    recipes: list[str | None] = [None] * count

    from primeaug import recipe_to_json

    def run(i: int):
        augmented, recipe = prime_augment(
            batch[i].astype(np.float64), cfg, rng_derive(master_seed, [epoch, i])
        )
        out[i] = augmented.astype(np.float32)
        recipes[i] = recipe_to_json(recipe)

    _map_elements(run, count, workers)
    return out, recipes


def replay_batch(
    batch: np.ndarray,
    recipes: list[str],
    workers: int | None = None,
) -> np.ndarray:
    """Re-apply serialized recipes element by element.

    Produces bit-identical results to `augment_batch` when given its
    recipes.  Malformed recipes are collected and raised together as a
    BatchReplayError naming each failing element.
    """
    batch = _check_batch(batch)
    count = batch.shape[0]
    if len(recipes) != count:
        raise BatchReplayError(
            [(-1, f"need {count} recipes for {count} elements, got {len(recipes)}")]
        )
    out = np.empty_like(batch)
    failures: list[tuple[int, str]] = []

    def run(i: int):
        try:
            recipe = recipe_from_json(recipes[i])
            out[i] = apply_recipe(batch[i].astype(np.float64), recipe).astype(np.float32)
        except RecipeError as exc:
            failures.append((i, str(exc)))

    _map_elements(run, count, workers)
    if failures:
        raise BatchReplayError(sorted(failures))
    return out
