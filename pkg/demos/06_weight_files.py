"""Create, save, reload and inspect an FPWT weight file.

The format is a flat list of named float32 tensors; string metadata such
as the preprocessing convention rides along as byte-coded entries.
"""

from pathlib import Path

from photostyle import default_networks, load_weights, random_weights, save_weights

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
path = out_dir / "06_random.fpwt"

networks = default_networks()
store = random_weights(networks, seed=42)
save_weights(store, path)
print(f"wrote {path} ({path.stat().st_size / 1e6:.1f} MB, {len(store)} entries)")

loaded = load_weights(path)
print("preprocessing convention:", loaded.convention)
print("untrained decoders:", loaded.get_string("decoder/untrained"))
for name in list(loaded)[:6]:
    print(f"  {name:32s} {loaded.get(name).shape}")
first_conv = loaded.get("encoder/conv1_1/weight")
print("encoder/conv1_1/weight shape:", first_conv.shape)
