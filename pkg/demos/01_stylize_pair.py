"""Stylize one benchmark pair end to end and save every intermediate.

Run from the repository root:

    python demos/01_stylize_pair.py

Outputs land in demos/out/. Weights are seeded-random unless you point
PHOTOSTYLE_WEIGHTS at an FPWT file exported from real checkpoints.
"""

import os
from pathlib import Path

import numpy as np

from photostyle import (
    PipelineConfig,
    default_networks,
    load_weights,
    multi_level_stylize,
    random_weights,
    smooth,
    write_image,
)
from photostyle.benchmark import synthetic_photo

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

content = synthetic_photo(256, 160, seed=0)
style = synthetic_photo(256, 160, seed=5)
write_image(content, out_dir / "01_content.png")
write_image(style, out_dir / "01_style.png")

networks = default_networks()
weight_file = os.environ.get("PHOTOSTYLE_WEIGHTS")
weights = load_weights(weight_file) if weight_file else random_weights(networks, seed=0)

# step one: feature-space stylization through the four-level cascade
stylized = np.clip(multi_level_stylize(content, style, networks, weights), 0.0, 1.0)
write_image(stylized, out_dir / "01_stylized_raw.png")

# step two: graph smoothing against the content photo
smoothed = smooth(stylized, content, mode="exact", lam=1e-4)
write_image(smoothed, out_dir / "01_smoothed.png")

print("wrote", sorted(p.name for p in out_dir.glob("01_*")))
print("config defaults:", PipelineConfig())
