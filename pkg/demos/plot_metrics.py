"""
Image quality metrics
=====================

MAPE, MSE, SSIM and PSNR on a pair of images, and what a report row holds.
"""
import numpy as np

from sinogan.metrics import evaluate_pair, mape, psnr_from_mse, ssim

rng = np.random.default_rng(0)
ref = rng.random((64, 64))
test = ref + 0.05 * rng.standard_normal(ref.shape)

rep = evaluate_pair(test, ref, label="demo")
print(rep.row())

###############################################################################
# PSNR is a function of MSE alone once the data range is fixed.
print("PSNR from MSE:", psnr_from_mse(rep.mse, rep.data_range), "vs", rep.psnr)

###############################################################################
# Identical images score SSIM 1.  MAPE skips reference pixels at zero and
# can report how many bins it used.
print("SSIM(x, x):", ssim(ref, ref))
ref[:8] = 0.0
value, used = mape(test, ref, return_count=True)
print(f"MAPE {value:.2f}% over {used} of {ref.size} pixels")
