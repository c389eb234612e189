"""Offline dataset augmentation with manifest verification.

Builds a small synthetic dataset, writes 3 augmented copies per image, then
replays every manifest entry and confirms the stored checksums.
"""

from pathlib import Path

from demo_image import make_demo_image
from primeaug import Manifest, augment_dataset, cifar_preset, verify_manifest, write_png
from primeaug.rng import rng_derive

root = Path(__file__).parent / "output" / "dataset"
inputs = root / "inputs"
outputs = root / "augmented"
inputs.mkdir(parents=True, exist_ok=True)

for i in range(6):
    noise = rng_derive(99, [i]).generator.random((32, 32, 3))
    write_png(inputs / f"sample_{i:02d}.png", 0.5 * make_demo_image(32) + 0.5 * noise)

manifest = augment_dataset(inputs, outputs, copies=3, cfg=cifar_preset(), master_seed=7)
print(f"wrote {len(manifest.entries)} augmented PNGs ({len(manifest.skipped)} skipped)")
print(f"manifest: {outputs / 'manifest.json'}")

loaded = Manifest.load(outputs / "manifest.json")
failures = verify_manifest(loaded, inputs, outputs)
print(f"replay verification: {len(loaded.entries) - len(failures)}/{len(loaded.entries)} match")

entry = loaded.entries[0]
print(
    f"first entry: {entry.source} copy {entry.copy_index} -> {entry.output}, "
    f"sha256 {entry.sha256[:12]}..., recipe at {entry.recipe_ref}"
)
