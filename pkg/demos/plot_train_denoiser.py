"""
Training a small sinogram denoiser
==================================

A narrow generator trained for a few epochs on 64 phantoms.  Far too little
to beat OSEM on its own, but it shows the moving parts: data pairs, the
adversarial and L1 losses, checkpoints, and inference.
"""
from pathlib import Path

import numpy as np

from sinogan import PhantomConfig, add_poisson_noise, forward_project, generate_random_phantom
from sinogan.gan import TrainConfig, denoise, load_generator, train
from sinogan.io import load_checkpoint, save_checkpoint
from sinogan.metrics import mse
from sinogan.projector import Geometry

out = Path("demo_output")
out.mkdir(exist_ok=True)
geom = Geometry()

images = np.stack([generate_random_phantom(PhantomConfig(seed=s)) for s in range(64)])
clean = forward_project(images, geom)
noisy = np.stack([add_poisson_noise(c, 50, seed=1000 + i) for i, c in enumerate(clean)])

###############################################################################
# Each trace entry is (step, discriminator loss, adversarial loss, L1 loss).
config = TrainConfig(epochs=3, batch_size=8, channel_scale=0.1, seed=0)
state = train(config, noisy, clean)
for step, ld, adv, l1 in state.trace[::4]:
    print(f"step {step:3d}  D {ld:.3f}  G-adv {adv:.3f}  L1 {l1:.4f}")

###############################################################################
# Checkpoints hold both networks and the optimiser moments.
path = out / "demo.ckpt"
save_checkpoint(path, state.to_checkpoint())
gen = load_generator(load_checkpoint(path))

test_clean = forward_project(generate_random_phantom(PhantomConfig(seed=999_999)), geom)
test_noisy = add_poisson_noise(test_clean, 50, seed=7)
print("noisy MSE:", mse(test_noisy, test_clean), "denoised MSE:", mse(denoise(gen, test_noisy), test_clean))
