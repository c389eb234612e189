"""Gallery of the three transform primitives at increasing strength.

Writes one strip per primitive (clean image on the left, then four draws at
growing strength) plus a mixed-augmentation preview grid, to demos/output/.
"""

from pathlib import Path

import numpy as np

from demo_image import make_demo_image
from primeaug import (
    apply_color,
    apply_spatial,
    apply_spectral,
    cifar_preset,
    draw_color_coefficients,
    draw_spatial_coefficients,
    draw_spectral_coefficients,
    preview_grid,
    rng_derive,
    write_png,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

img = make_demo_image(96)
write_png(OUT / "clean.png", img)


def strip(tiles, sep=2):
    height = tiles[0].shape[0]
    canvas = np.ones((height, sum(t.shape[1] + sep for t in tiles) - sep, 3))
    left = 0
    for tile in tiles:
        canvas[:, left : left + tile.shape[1]] = tile
        left += tile.shape[1] + sep
    return canvas


# spectral: random FIR filter around the identity tap; sigma scales contrast
# and ringing.  kernel 3x3 throughout.
tiles = [img]
for k, sigma in enumerate([1.0, 2.5, 4.0, 6.0]):
    params = draw_spectral_coefficients(rng_derive(1, [k]), 3, sigma)
    tiles.append(apply_spectral(img, params))
write_png(OUT / "gallery_spectral.png", strip(tiles))
print("spectral strip: sigma = 1, 2.5, 4, 6 (kernel 3x3)")

# spatial: smooth random warp; cut frequency 100 as in the 32x32 preset,
# strengths around the calibrated window
tiles = [img]
for k, sigma in enumerate([0.005, 0.012, 0.018, 0.03]):
    params = draw_spatial_coefficients(rng_derive(2, [k]), 100, sigma)
    tiles.append(apply_spatial(img, params))
write_png(OUT / "gallery_spatial.png", strip(tiles))
print("spatial strip: sigma = 0.005, 0.012, 0.018, 0.03 (cut 100)")

# color: per-channel sine curves; black and white stay fixed by construction
tiles = [img]
for k, sigma in enumerate([0.005, 0.01, 0.02, 0.04]):
    params = draw_color_coefficients(rng_derive(3, [k]), 10, 11, 0, sigma)
    tiles.append(apply_color(img, params))
write_png(OUT / "gallery_color.png", strip(tiles))
print("color strip: sigma = 0.005, 0.01, 0.02, 0.04 (band [0, 10])")

# the full mix: chains of composed primitives blended with the clean image
write_png(OUT / "clean_for_grid.png", img)
grid = preview_grid(OUT / "clean_for_grid.png", cifar_preset(), seed=7, rows=2, cols=4)
write_png(OUT / "gallery_mixed.png", grid)
print("mixed grid: 2x4 tiles, top-left clean; see demos/output/")
