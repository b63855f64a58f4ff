"""Score the go-straight baseline so learned policies have a floor.

Runs the evaluation harness twice with a controller that simply drives
at its goal: four robots crossing a circle (everyone meets in the
middle), then a hundred. The four navigation metrics come out of the
same aggregation the trained policies are scored with, so these numbers
are the floor any learned checkpoint must clear.

    python demos/05_evaluate_baseline.py
"""
from swarmnav.evaluate import GoStraightController, evaluate


def show(name: str, metrics: dict) -> None:
    def fmt(v):
        return "   n/a" if v is None else f"{v:6.3f}"

    print(f"  {name}")
    print(f"    success {metrics['success_rate']:.2f}  "
          f"collision {metrics['collision_rate']:.2f}  "
          f"timeout {metrics['timeout_rate']:.2f}")
    print(f"    extra time {fmt(metrics['extra_time_mean'])} s  "
          f"avg speed {fmt(metrics['avg_speed_mean'])} m/s  "
          f"({metrics['robots']} robots over {metrics['trials']} trials)")


def main() -> None:
    controller = GoStraightController()
    print("go-straight baseline:")
    show(
        "4-robot circle, radius 2.5 m",
        evaluate(controller, scenario="circle", n=4, seed=0, trials=20,
                 scenario_params={"radius": 2.5}),
    )
    show(
        "100-robot circle, radius 12 m",
        evaluate(controller, scenario="circle", n=100, seed=0, trials=5,
                 scenario_params={"radius": 12.0, "even_spacing": True}),
    )
    print("head-on geometry punishes straight-line driving; a policy that")
    print("cannot beat these rates has learned nothing about avoidance.")


if __name__ == "__main__":
    main()
