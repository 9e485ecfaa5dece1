"""How the four pose-injection modes differ, without any training.

Walks through the PadaLN modulation on a three-number token, shows what
the zero-initialised pose pathways do before training, and prints the
parameter overhead each mode adds to the default transformer.

    python3 demos/injection_modes.py
"""

import torch

from posedit import conditioning as cd
from posedit.dit import DiT, DiTConfig, count_parameters


def padaln_by_hand() -> None:
    y = torch.tensor([[1.0, 2.0, 3.0]], dtype=torch.float64)
    params = cd.ModulationParams(
        gamma=torch.ones(3, dtype=torch.float64),
        beta=torch.full((3,), 0.5, dtype=torch.float64),
        delta=torch.full((3,), 0.3, dtype=torch.float64),
    )
    y1, y2 = cd.padaln_transform(y, params, eps=0.0)
    print("pose token [1, 2, 3] with gamma=1, beta=0.5, delta=0.3")
    print(f"  added to vision tokens: {y1[0].tolist()}")
    print(f"  passed to the next block: {y2[0].tolist()}  (= 1.3 x the above)")


def init_behaviour() -> None:
    torch.manual_seed(0)
    cfg = dict(dim=32, blocks=2, heads=2, frames=2, latent_h=4, latent_w=4, text_len=4, vocab_size=20)
    x = torch.randn(1, 2, 8, 4, 4)
    ids, t = torch.tensor([[2, 3, 0, 0]]), torch.tensor([50])
    pose_a, pose_b = torch.randn(1, 2, 4, 4, 4), torch.randn(1, 2, 4, 4, 4)
    cases = [
        ("ca", {}, "zero output projection: cross-attention adds nothing yet"),
        ("padaln", {}, "zero modulation: normalised pose tokens are added as-is"),
        ("padaln", {"gated_injection": True}, "delta-gated variant: strictly pose-blind"),
    ]
    for mode, extra, why in cases:
        model = DiT(DiTConfig(mode=mode, **cfg, **extra)).eval()
        with torch.no_grad():
            model.head.weight.normal_(std=0.02)
            same = torch.equal(model(x, t, ids, pose_a), model(x, t, ids, pose_b))
        label = mode + (" (gated)" if extra else "")
        print(f"  {label:15s} pose-blind at init: {str(same):5s}  {why}")


def overheads() -> None:
    print("default model (d=128, 6 blocks):")
    for mode in ("padaln", "uvt", "ca", "expert"):
        counts = count_parameters(DiT(DiTConfig(mode=mode)))
        print(f"  {mode:7s} total {counts['total']:>9,d}  pose pathway {counts['pose_pathway']:>9,d}  "
              f"overhead {counts['overhead_ratio']:.3f}")


if __name__ == "__main__":
    padaln_by_hand()
    print("at initialisation:")
    init_behaviour()
    overheads()
