"""Look inside the two fusion stages of an untrained network on one phantom crop.

Prints how the variational fusion splits weight between the ViT and CNN
features, and how evidential uncertainty gates the refinement.

    python3 demos/fusion_and_uncertainty.py
"""
import numpy as np

from vfseg.autodiff import Tensor, no_grad
from vfseg.config import ModelConfig, PhantomSpec
from vfseg.model import VesselSegNet
from vfseg.phantom import generate_phantom

image, label = generate_phantom(PhantomSpec(seed=1))
crop = image.data[16:48, 16:48, 16:48]
model = VesselSegNet(ModelConfig(), seed=0)

with no_grad():
    out = model(Tensor(crop[None, None]))

w = out.cvf.weights
print("variational fusion on the deepest grid", w.beta_v.shape[2:])
print(f"  beta_v mean {w.beta_v.data.mean():.3f}  range [{w.beta_v.data.min():.3f}, {w.beta_v.data.max():.3f}]")
print(f"  beta_v + beta_c deviates from 1 by at most {np.abs(w.beta_v.data + w.beta_c.data - 1).max():.1e}")

b, eur = out.belief, out.eur
U = b.U.data
print("evidential refinement at full resolution", U.shape[2:])
print(f"  uncertainty U = K/S in [{U.min():.3f}, {U.max():.3f}]")
print(f"  beliefs plus U sum to 1 within {np.abs(b.belief().data.sum(1) + U[:, 0] - 1).max():.1e}")
print(f"  refinement gate lambda mean {eur.lam.data.mean():.3f}")
fg = out.probs.data[0, 1] > 0.5
print(f"  untrained foreground fraction {fg.mean():.3f} (labels: {label.data[16:48, 16:48, 16:48].mean():.3f})")
