"""
The full pipeline in miniature
==============================

``reproduce`` chains data generation, training, the Shepp-Logan tables and
the held-out evaluation.  This run shrinks every size so it finishes in
about a minute; the desk-scale defaults take hours.  The same thing from a
shell is ``sinogan reproduce --config small.cfg --out demo_output/small``.
"""
from sinogan.pipeline import ExperimentConfig, read_table, reproduce

config = ExperimentConfig(image_size=64, num_views=16, num_bins=64, num_train=32, num_heldout=4,
                          epochs=2, batch_size=8, channel_scale=0.1)
out = reproduce(config, "demo_output/small", overwrite=True)

for row in read_table(out / "table_reconstruction.csv"):
    print(f"{row['noise_level']:>6} {row['method']:>8}  SSIM {row['ssim']:.3f}  PSNR {row['psnr_db']:.2f} dB")
