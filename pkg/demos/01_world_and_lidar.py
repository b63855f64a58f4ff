"""Build a cluttered scenario and look through one robot's lidar.

Samples a random obstacle-strewn layout, renders the world from above,
and overlays the 512 beams of robot 0's scan so you can see exactly what
the policy network sees: distances only, no identities, no velocities.

Run from the repository root:

    python demos/01_world_and_lidar.py
"""
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from swarmnav.scenarios import scenario_factory
from swarmnav.sensing import BEARINGS, SENSOR_OFFSET_FRAC, raycast_scan

OUT = pathlib.Path("runs/demos")


def main() -> None:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(3)))
    spec = scenario_factory("random", n=6, n_obstacles=5)(rng)
    world = spec.build_world(dt=0.1)

    scan = raycast_scan(world, 0)
    print(f"scenario: {spec.n_robots} robots, "
          f"{world.obstacles.segments.shape[0]} wall segments, "
          f"{world.obstacles.discs.shape[0]} disc obstacles")
    print(f"robot 0 scan: min {scan.min():.2f} m, median {np.median(scan):.2f} m, "
          f"{int((scan < 4.0).sum())} of {scan.size} beams hit something")

    fig, ax = plt.subplots(figsize=(8, 8))
    for seg in world.obstacles.segments:
        ax.plot([seg[0], seg[2]], [seg[1], seg[3]], color="black", lw=2)
    for disc in world.obstacles.discs:
        ax.add_patch(plt.Circle((disc[0], disc[1]), disc[2], color="dimgray"))

    robot = world.robots[0]
    origin = robot.pose.xy + SENSOR_OFFSET_FRAC * robot.radius * robot.pose.heading()
    angles = robot.pose.theta + BEARINGS
    ends_x = origin[0] + scan * np.cos(angles)
    ends_y = origin[1] + scan * np.sin(angles)
    for i in range(0, scan.size, 4):  # every 4th beam keeps the plot readable
        ax.plot([origin[0], ends_x[i]], [origin[1], ends_y[i]],
                color="tab:orange", lw=0.3, alpha=0.5)

    for i, r in enumerate(world.robots):
        color = "tab:red" if i == 0 else "tab:blue"
        ax.add_patch(plt.Circle((r.pose.x, r.pose.y), r.radius, color=color, zorder=3))
        ax.plot(*r.goal, "x", color=color, ms=8)
    ax.set_aspect("equal")
    ax.set_title("world through robot 0's lidar (every 4th beam)")

    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / "world_and_lidar.png"
    fig.savefig(path, bbox_inches="tight", dpi=120)
    print(f"figure written to {path}")


if __name__ == "__main__":
    main()
