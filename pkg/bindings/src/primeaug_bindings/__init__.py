"""Batch bridge for training loops.

Exposes the core augmentation over contiguous float32 (N, H, W, 3) batches,
one RNG stream per (epoch, element index), with recipes returned as JSON
strings for audit and exact replay.  The bridge validates shape, dtype, and
contiguity at the boundary and raises typed errors instead of crashing;
during compute it stays inside numpy/scipy kernels, which release the GIL,
so worker threads parallelize across batch elements.
"""

from .batch import (
    BatchBoundaryError,
    BatchReplayError,
    augment_batch,
    config_from_dict,
    load_preset,
    replay_batch,
)

__version__ = "0.1.0"
