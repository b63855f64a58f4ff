"""Train for three iterations on a toy problem and inspect the artifacts.

This is the full trainer (rollout collection, advantage normalization,
KL-penalized policy steps, value regression, curriculum bookkeeping)
pointed at a problem small enough to finish in about a minute: two
robots in an empty world, short episodes, tiny batches. Nothing useful
is learned; the point is to watch the machinery turn and to see which
files a run leaves behind.

    python demos/04_tiny_training_run.py
"""
from pathlib import Path

from swarmnav.config import load_config
from swarmnav.train import train

OUT = Path("runs/demos/tiny-run")

OVERRIDES = {
    "seed": "1",
    "train.T_max": "256",
    "train.E_pi": "2",
    "train.E_V": "2",
    "train.chunk_size": "256",
    "train.episode_time_limit": "4.0",
    "curriculum.stage1.scenarios": "[random_empty]",
    "curriculum.stage1.robots": "2",
    "curriculum.stage1.max_iterations": "2",
    "curriculum.stage2.scenarios": "[random_empty]",
    "curriculum.stage2.robots": "2",
    "curriculum.stage2.instances": "1",
    "run.iterations": "3",
    "run.checkpoint_every": "2",
}


def main() -> None:
    cfg = load_config(overrides=OVERRIDES)
    print("three iterations, two robots, empty world:")
    summary = train(cfg, OUT)
    print(f"\nsummary: {summary}")
    print("\nartifacts:")
    for path in sorted(OUT.iterdir()):
        print(f"  {path}  ({path.stat().st_size} bytes)")
    print("\nresume later with train(cfg, out_dir, resume_path=.../checkpoint_latest.npz),")
    print("or from the command line: swarmnav train --checkpoint ...")


if __name__ == "__main__":
    main()
