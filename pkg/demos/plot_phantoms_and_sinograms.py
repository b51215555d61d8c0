"""
Phantoms, projections and count noise
=====================================

Build the Shepp-Logan head and a random training phantom, project both
into 32-view sinograms, then draw Poisson noise at the three preset
count levels.  Images land in ``demo_output/``.
"""
from pathlib import Path

import numpy as np

from sinogan import PhantomConfig, add_poisson_noise, forward_project, generate_random_phantom, shepp_logan
from sinogan.io import save_png
from sinogan.projector import NOISE_PRESETS, Geometry

out = Path("demo_output")
out.mkdir(exist_ok=True)

# 128x128 pixels, values in [0, 1]
head = shepp_logan(128)
blob = generate_random_phantom(PhantomConfig(seed=42))
print("random phantom max:", blob.max(), "nonzero fraction:", round(float((blob > 0).mean()), 3))

###############################################################################
# A sinogram has one row per view angle and one column per detector bin.
geom = Geometry()
sino = forward_project(head, geom)
print("sinogram shape:", sino.shape, "peak line integral:", round(float(sino.max()), 2))
save_png(out / "head.png", head)
save_png(out / "head_sinogram.png", sino)

###############################################################################
# Lower counts mean relatively noisier data.  The noisy sinogram stays in
# the same units as the clean one, so the two can be compared directly.
for level, counts in NOISE_PRESETS.items():
    noisy = add_poisson_noise(sino, counts, seed=0)
    rel = np.linalg.norm(noisy - sino) / np.linalg.norm(sino)
    print(f"{level:>6}: counts scale {counts:5.0f}, relative error {rel:.3f}")
    save_png(out / f"head_sinogram_{level}.png", noisy)
