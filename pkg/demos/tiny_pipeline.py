"""The whole pipeline at toy scale, through the command line.

Generates a small dataset, fits the shared autoencoder, trains a small
PadaLN transformer for a few hundred steps, samples two test videos and
scores them. Takes about a minute on one CPU core; the models are far too
small to control pose well, so read the numbers as plumbing, not results.

    python3 demos/tiny_pipeline.py /tmp/tiny
"""

import json
import sys
from pathlib import Path

from posedit.cli import main as posedit


def run(*argv) -> None:
    argv = [str(a) for a in argv]
    print("$ posedit", " ".join(argv))
    if posedit(argv) != 0:
        raise SystemExit(f"command failed: {argv[0]}")


def demo(out: Path) -> None:
    data, ae, model = out / "data", out / "ae", out / "padaln"
    run("gen-data", "--out", data, "--count", 60, "--seed", 1)
    run("train-ae", "--data", data, "--out", ae, "--steps", 600, "--kappa-frames", 128)
    print("  autoencoder:", json.loads((ae / "summary.json").read_text()))

    run("train", "--data", data, "--ae", ae / "ae.dyc1", "--out", model, "--mode", "padaln",
        "--steps", 300, "--batch", 8, "--T", 50, "--dim", 64, "--blocks", 2, "--log-every", 100)
    print("  last log line:", (model / "log.txt").read_text().splitlines()[-1])

    common = ["--ckpt", model / "model.dyc1", "--ae", ae / "ae.dyc1", "--data", data]
    run("sample", *common, "--out", out / "samples", "--items", 2)
    run("eval", *common, "--out", out / "eval", "--items", 8, "--trials", 4)
    print((out / "eval" / "metrics.txt").read_text())
    run("attn-viz", *common, "--out", out / "attention")
    print("  diagonality:", (out / "attention" / "diagonality.json").read_text())
    print(f"generated and true frame strips are PPM files under {out / 'samples'}")


if __name__ == "__main__":
    demo(Path(sys.argv[1] if len(sys.argv) > 1 else "demo-tiny"))
