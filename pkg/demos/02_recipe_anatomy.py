"""Anatomy of one augmentation draw and its replayable recipe.

Shows the chain/step structure, the Dirichlet weights, JSON serialization,
and bit-exact replay from the serialized form.
"""

import numpy as np

from demo_image import make_demo_image
from primeaug import (
    apply_recipe,
    cifar_preset,
    prime_augment,
    recipe_from_json,
    recipe_to_json,
    rng_derive,
)

img = make_demo_image(64)
cfg = cifar_preset()

out, recipe = prime_augment(img, cfg, rng_derive(2024, [0]))

print(f"weights (index 0 = clean image): {np.round(recipe.weights, 4)}")
for c, chain in enumerate(recipe.chains, start=1):
    steps = []
    for step in chain:
        if step.kind == "identity":
            steps.append("identity")
        else:
            steps.append(f"{step.kind}(sigma={step.params.sigma:.4g})")
    print(f"chain {c}: " + " -> ".join(steps))

payload = recipe_to_json(recipe)
print(f"serialized recipe: {len(payload)} bytes of JSON")

replayed = apply_recipe(img, recipe_from_json(payload))
print("replay from JSON is bit-identical:", np.array_equal(replayed, out))

# zero global strength collapses every primitive to the identity
out0, _ = prime_augment(img, cfg.with_scale(0.0), rng_derive(2024, [1]))
print("zero strength scale returns the input bitwise:", np.array_equal(out0, img))
