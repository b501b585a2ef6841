"""Designing drive strengths for arbitrary output distributions.

The closed-form conditions cover complete conversion, the 50/50 split and
the three-mode equal split; the numeric solver handles everything else.
This demo solves a few targets, compares against the closed forms where
they exist, and shows the honest failure mode for an unreachable target.
"""

import math

from sagnac_qfc import (
    BranchParams,
    NoConvergence,
    SystemConfig,
    TargetDistribution,
    solve_resonant_conversion,
    solve_target_amplitudes,
    solve_w_condition,
)


def template(n, gamma2=1.0, gamma3=1.0, decay=0.0):
    branches = [BranchParams(1.0, decay, 1.0)]
    if n >= 2:
        branches.append(BranchParams(gamma2, decay, 0.0))
    if n >= 3:
        branches.append(BranchParams(gamma3, decay, 0.0))
    return SystemConfig(branches)


def show(label, solution):
    probs = ", ".join(f"{p:.6f}" for p in solution.achieved.probabilities)
    ratios = ", ".join(f"{r:.9f}" for r in solution.rabi_ratios)
    print(f"{label}")
    print(f"  drive ratios Omega_j/Omega_1: {ratios}")
    print(f"  achieved |T_j|^2: {probs}   residual {solution.residual:.1e}")


def main():
    print("== complete conversion, Gamma_2 = 3 ==")
    sol = solve_target_amplitudes(template(2, gamma2=3.0), TargetDistribution([0, 1]))
    show("target (0, 1):", sol)
    print(f"  closed form: Omega_2 = {solve_resonant_conversion(1, 3, 1):.9f}\n")

    print("== even two-color split ==")
    sol = solve_target_amplitudes(template(2), TargetDistribution([0.5, 0.5]))
    show("target (1/2, 1/2):", sol)
    print(f"  exact ratio Omega_1/Omega_2 = 1+sqrt(2) = {1 + math.sqrt(2):.9f}, "
          f"solver gives {1 / sol.rabi_ratios[0]:.9f}\n")

    print("== three-mode W state, Gamma_2 = Gamma_3 = 2 ==")
    sol = solve_target_amplitudes(
        template(3, gamma2=2.0, gamma3=2.0), TargetDistribution([1 / 3] * 3)
    )
    show("target (1/3, 1/3, 1/3):", sol)
    print(f"  closed form: Omega_2 = {solve_w_condition(1, 2, 1)[0]:.9f}\n")

    print("== asymmetric three-color split ==")
    sol = solve_target_amplitudes(
        template(3, gamma2=1.7, gamma3=0.6), TargetDistribution([0.2, 0.5, 0.3])
    )
    show("target (0.2, 0.5, 0.3):", sol)
    print(f"  W fidelity of this deliberately uneven split: "
          f"{sol.achieved.fidelity_w:.6f}\n")

    print("== unreachable target fails honestly ==")
    try:
        solve_target_amplitudes(
            template(2, decay=0.2), TargetDistribution([0.0, 0.9])
        )
    except NoConvergence as err:
        best = err.best
        print(f"  {err}")
        print(
            f"  best achievable |T_2|^2 here: "
            f"{best.achieved.probabilities[1]:.6f} (decay caps the conversion)"
        )


if __name__ == "__main__":
    main()
