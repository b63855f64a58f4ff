"""Finite-difference audit of the hand-written backward pass.

The network's gradients are coded by hand, so this is the check that
keeps everyone honest: perturb single weights, compare the central
difference against the analytic gradient, layer by layer. Relative
errors around 1e-6 are rounding noise; anything near 1e-4 would mean a
broken derivative.

    python demos/02_gradient_check.py [draws]
"""
import sys
import time

from swarmnav.net import gradient_check


def main() -> None:
    draws = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    print(f"checking analytic gradients against central differences ({draws} draws)")
    start = time.perf_counter()
    errors = gradient_check(seed=0, draws=draws)
    elapsed = time.perf_counter() - start

    for layer in sorted(errors):
        print(f"  {layer:>18s}  max rel err {errors[layer]:.3e}")
    worst = max(errors.values())
    print(f"worst layer: {worst:.3e} after {elapsed:.1f}s "
          f"({'fine' if worst < 1e-4 else 'BROKEN'})")


if __name__ == "__main__":
    main()
