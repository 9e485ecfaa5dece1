"""Tour of the synthetic stick-figure world.

Renders one motion sequence in a few appearances, writes frame strips as
PPM images and shows the prompt, pose rendering and background mask that
travel with every training sample.

    python3 demos/synthetic_world.py /tmp/world
"""

import sys
from pathlib import Path

import numpy as np

from posedit import formats, synthworld

SIZE = (32, 32)


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    poses = synthworld.sample_motion(seed=7, num_frames=8)
    print(f"8 frames, largest joint move between frames {synthworld.max_joint_step(poses):.3f}")

    for head, body, bg in [("circle", "red", "white"), ("square", "blue", "cyan"), ("triangle", "yellow", "magenta")]:
        app = synthworld.AppearanceSpec(head, body, bg)
        video = synthworld.render_video(poses, app, SIZE)
        mask = synthworld.make_mask(poses, app, SIZE)
        name = f"{head}-{body}-{bg}"
        formats.write_ppm(out / f"{name}.ppm", formats.strip(video))
        print(f"{name}: '{synthworld.compose_prompt(app)}', {int(mask.sum())}/{mask.size} background pixels")

    pose_video = synthworld.render_pose_video(poses, SIZE)
    formats.write_ppm(out / "pose.ppm", formats.strip(pose_video))
    lit = np.any(pose_video > 0, axis=1).mean()
    print(f"pose rendering: {lit:.1%} of pixels carry a bone color, the rest are exactly black")

    app = synthworld.AppearanceSpec("circle", "green", "gray")
    formats.write_ppm(out / "reference.ppm", synthworld.reference_frame(app, SIZE))
    print(f"held-out (body, background) pairs for seed 0: {synthworld.held_out_combinations(0)}")
    print(f"images written to {out}")


if __name__ == "__main__":
    main(Path(sys.argv[1] if len(sys.argv) > 1 else "demo-world"))
