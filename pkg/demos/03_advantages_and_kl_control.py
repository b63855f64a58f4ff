"""Two small numerical stories: GAE smoothing and the KL thermostat.

Part one runs generalized advantage estimation over a toy episode and
shows how lambda trades bias against variance: lambda 0 trusts the value
function (one-step TD), lambda 1 trusts the empirical returns.

Part two replays the adaptive KL penalty. The coefficient beta climbs by
x1.5 whenever an update moved the policy more than twice the KL target
and shrinks when it moved less than half of it, which is the whole
trust-region mechanism of the trainer.

    python demos/03_advantages_and_kl_control.py
"""
import numpy as np

from swarmnav.ppo import TrainConfig, adapt_beta, compute_gae


def advantage_story() -> None:
    # a 10-step episode: small progress rewards, arrival bonus at the end
    rewards = np.array([0.3, 0.25, 0.2, -0.1, 0.3, 0.35, 0.2, 0.25, 0.3, 15.0])
    values = np.array([2.0, 2.2, 2.4, 2.6, 2.9, 3.3, 3.9, 4.8, 6.5, 9.0])
    print("advantages for one toy episode (terminal, bootstrap 0):")
    print("  lambda   A_0     A_4     A_9")
    for lam in (0.0, 0.5, 0.95, 1.0):
        adv, _ = compute_gae(rewards, values, 0.0, gamma=0.99, lam=lam)
        print(f"  {lam:>6.2f}  {adv[0]:+6.2f}  {adv[4]:+6.2f}  {adv[9]:+6.2f}")
    print("  lambda 0 scores each step against the critic alone;")
    print("  lambda 1 discounts the whole remaining return, bonus included.\n")


def kl_story() -> None:
    cfg = TrainConfig()
    target = cfg.kl_target
    # a plausible run: big early steps, then the policy settles
    measured = [0.006, 0.004, 0.005, 0.002, 0.0016, 0.0007, 0.0004, 0.0012, 0.0005]
    beta = cfg.beta_init
    print(f"adaptive penalty, KL target {target}:")
    print("  step  measured KL   beta before -> after")
    for i, kl in enumerate(measured):
        new_beta = adapt_beta(beta, kl, cfg)
        arrow = "up" if new_beta > beta else ("down" if new_beta < beta else "hold")
        print(f"  {i:>4d}  {kl:>11.4f}   {beta:7.3f} -> {new_beta:7.3f}  ({arrow})")
        beta = new_beta
    print("  the coefficient chases the KL target from both sides.")


def main() -> None:
    advantage_story()
    kl_story()


if __name__ == "__main__":
    main()
