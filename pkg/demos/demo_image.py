"""Shared synthetic test image for the demo scripts (no external data)."""

import numpy as np


def make_demo_image(size=96):
    """A colorful scene with smooth gradients, edges, and fine detail."""
    v = np.linspace(0.0, 1.0, size)
    x, y = np.meshgrid(v, v)
    img = np.zeros((size, size, 3))
    img[..., 0] = 0.55 + 0.35 * np.sin(2 * np.pi * x) * np.cos(np.pi * y)
    img[..., 1] = 0.45 + 0.4 * y
    img[..., 2] = 0.5 + 0.3 * np.cos(3 * np.pi * x * y)
    # a bright disc and a dark square give the warps something to grab
    cx, cy, r = 0.3, 0.35, 0.18
    disc = (x - cx) ** 2 + (y - cy) ** 2 < r * r
    img[disc] = [0.95, 0.85, 0.2]
    img[int(0.6 * size) : int(0.8 * size), int(0.55 * size) : int(0.75 * size)] = [
        0.1,
        0.15,
        0.4,
    ]
    # checkerboard strip for high-frequency content
    strip = (np.indices((size, size)).sum(axis=0) % 2).astype(float)
    img[int(0.85 * size) :, :, :] = strip[int(0.85 * size) :, :, None] * 0.8 + 0.1
    return np.clip(img, 0.0, 1.0)
