import os
import time

import numpy as np
import pytest

from primeaug import (
    ColorSettings,
    PrimeConfig,
    SpatialSettings,
    cifar_preset,
    prime_augment,
    rng_derive,
)
from primeaug_bindings import (
    BatchBoundaryError,
    BatchReplayError,
    augment_batch,
    config_from_dict,
    load_preset,
    replay_batch,
)


def small_config():
    return PrimeConfig(
        spatial=SpatialSettings(cut_frequency=5, sigma_min=0.002, sigma_max=0.01),
        color=ColorSettings(max_frequency=5, band_width=3, sigma_max=0.01),
    )


def make_batch(count=4, size=16, seed=0):
    gen = rng_derive(seed, [0]).generator
    return gen.random((count, size, size, 3)).astype(np.float32)


def test_boundary_validation():
    cfg = small_config()
    with pytest.raises(BatchBoundaryError):
        augment_batch([[1.0]], cfg, 0, 0)
    with pytest.raises(BatchBoundaryError):
        augment_batch(np.zeros((4, 4, 3), dtype=np.float32), cfg, 0, 0)
    with pytest.raises(BatchBoundaryError):
        augment_batch(np.zeros((2, 4, 4, 4), dtype=np.float32), cfg, 0, 0)
    with pytest.raises(BatchBoundaryError):
        augment_batch(np.zeros((2, 4, 4, 3), dtype=np.float64), cfg, 0, 0)
    fortran = np.asfortranarray(np.zeros((2, 4, 4, 3), dtype=np.float32))
    with pytest.raises(BatchBoundaryError):
        augment_batch(fortran, cfg, 0, 0)


def test_out_of_range_clamped_with_warning():
    batch = make_batch()
    batch[0, 0, 0, 0] = 1.5
    cfg = small_config().with_scale(0.0)
    with pytest.warns(RuntimeWarning):
        out, _ = augment_batch(batch, cfg, 3, 0)
    assert out[0, 0, 0, 0] == 1.0
    assert np.array_equal(out, np.clip(batch, 0.0, 1.0))


def test_zero_scale_round_trip():
    batch = make_batch()
    out, recipes = augment_batch(batch, small_config().with_scale(0.0), 1, 0)
    assert np.array_equal(out, batch)
    assert len(recipes) == batch.shape[0]


def test_deterministic_over_repeats():
    batch = make_batch()
    cfg = small_config()
    out1, rec1 = augment_batch(batch, cfg, 42, epoch=5)
    out2, rec2 = augment_batch(batch, cfg, 42, epoch=5)
    assert np.array_equal(out1, out2)
    assert rec1 == rec2
    out3, _ = augment_batch(batch, cfg, 42, epoch=6)
    assert not np.array_equal(out1, out3)


def test_elementwise_equivalence_with_core():
    # the [SECONDARY] acceptance check: bitwise equality against the core
    # library per element on a 16-image batch, labels (epoch, i)
    batch = make_batch(count=16, size=16, seed=3)
    cfg = cifar_preset()
    out, recipes = augment_batch(batch, cfg, master_seed=9, epoch=2)
    for i in range(16):
        want, _ = prime_augment(
            batch[i].astype(np.float64), cfg, rng_derive(9, [2, i])
        )
        assert np.array_equal(out[i], want.astype(np.float32)), f"element {i}"
    report = f"[PASS] bindings-equivalence: 16/16 elements bitwise equal to core"
    print(report)


def test_workers_do_not_change_results():
    batch = make_batch(count=8)
    cfg = small_config()
    serial, rec_s = augment_batch(batch, cfg, 7, 0, workers=1)
    threaded, rec_t = augment_batch(batch, cfg, 7, 0, workers=4)
    assert np.array_equal(serial, threaded)
    assert rec_s == rec_t


def test_replay_reproduces_augment_bitwise():
    batch = make_batch(count=6)
    cfg = small_config()
    out, recipes = augment_batch(batch, cfg, 11, 1)
    replayed = replay_batch(batch, recipes)
    assert np.array_equal(replayed, out)


def test_replay_identity_recipes():
    batch = make_batch()
    _, recipes = augment_batch(batch, small_config().with_scale(0.0), 2, 0)
    assert np.array_equal(replay_batch(batch, recipes), batch)


def test_replay_is_order_sensitive():
    batch = make_batch(count=4)
    cfg = small_config()
    out, recipes = augment_batch(batch, cfg, 13, 0)
    shuffled = [recipes[1], recipes[0], recipes[3], recipes[2]]
    replayed = replay_batch(batch, shuffled)
    assert not np.array_equal(replayed, out)


def test_replay_error_report_names_elements():
    batch = make_batch(count=3)
    _, recipes = augment_batch(batch, small_config(), 17, 0)
    recipes[1] = "{broken json"
    with pytest.raises(BatchReplayError) as excinfo:
        replay_batch(batch, recipes)
    assert excinfo.value.failures[0][0] == 1
    with pytest.raises(BatchReplayError):
        replay_batch(batch, recipes[:2])


def test_interleaved_callers_do_not_perturb_each_other():
    # no hidden state: interleaving calls with distinct seeds leaves each
    # caller's outputs identical to its un-interleaved run
    batch_a = make_batch(count=3, seed=1)
    batch_b = make_batch(count=3, seed=2)
    cfg = small_config()
    solo_a, _ = augment_batch(batch_a, cfg, master_seed=100, epoch=0)
    solo_b, _ = augment_batch(batch_b, cfg, master_seed=200, epoch=0)
    inter_a1, _ = augment_batch(batch_a, cfg, master_seed=100, epoch=0)
    inter_b, _ = augment_batch(batch_b, cfg, master_seed=200, epoch=0)
    inter_a2, _ = augment_batch(batch_a, cfg, master_seed=100, epoch=0)
    assert np.array_equal(solo_a, inter_a1)
    assert np.array_equal(solo_a, inter_a2)
    assert np.array_equal(solo_b, inter_b)


def test_config_helpers():
    assert load_preset("cifar") == cifar_preset()
    cfg = config_from_dict({"mixing_width": 2, "enabled": ["spectral"]})
    assert cfg.mixing_width == 2
    assert cfg.enabled == frozenset({"spectral"})


@pytest.mark.skipif((os.cpu_count() or 1) < 4, reason="needs a >= 4-core host")
def test_two_worker_speedup():
    # [SECONDARY] acceptance: numpy kernels release the GIL, so two workers
    # must beat one by > 1.3x wall-clock on a 4-core host
    batch = rng_derive(19, [0]).generator.random((16, 224, 224, 3)).astype(np.float32)
    cfg = load_preset("imagenet")
    augment_batch(batch[:2], cfg, 0, 0)  # warm caches
    start = time.perf_counter()
    augment_batch(batch, cfg, 1, 0, workers=1)
    serial = time.perf_counter() - start
    start = time.perf_counter()
    augment_batch(batch, cfg, 1, 0, workers=2)
    threaded = time.perf_counter() - start
    speedup = serial / threaded
    print(f"[{'PASS' if speedup > 1.3 else 'FAIL'}] bindings-speedup: {speedup:.2f}x")
    assert speedup > 1.3
