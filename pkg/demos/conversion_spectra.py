"""Frequency-conversion spectra and the effect of spontaneous decay.

A single photon enters on branch 1 with the branch-2 drive tuned to the
resonant conversion condition Omega_1^2 Gamma_2 = Omega_2^2 Gamma_1.
Without decay the photon leaves entirely in the branch-2 frequency mode at
delta = 0; decay opens a loss channel that eats into the conversion peak
while barely moving the (near-zero) direct transmission.

Writes one CSV per decay rate to demos/out/ and, if matplotlib is
available, an overview figure.
"""

import math
from pathlib import Path

import numpy as np

from sagnac_qfc import BranchParams, SystemConfig, transmission_general

OUT_DIR = Path(__file__).parent / "out"

DECAY_RATES = [0.0, 0.1, 0.2, 0.5]
DELTAS = np.linspace(-5, 5, 201)


def spectrum(decay):
    cfg = SystemConfig(
        [
            BranchParams(1.0, decay, 2.0),
            BranchParams(2.0, decay, 2.0 * math.sqrt(2.0)),
        ]
    )
    rows = []
    for delta in DELTAS:
        res = transmission_general(float(delta), cfg)
        t1_sq, t2_sq = np.abs(res.amplitudes) ** 2
        rows.append((float(delta), float(t1_sq), float(t2_sq), res.p_loss))
    return np.array(rows)


def main():
    OUT_DIR.mkdir(exist_ok=True)
    curves = {}
    print("resonant conversion vs decay (Gamma_2 = Omega_1 = Omega_2/sqrt(2) = 2):")
    for decay in DECAY_RATES:
        data = curves[decay] = spectrum(decay)
        path = OUT_DIR / f"conversion_spectrum_decay{decay:g}.csv"
        np.savetxt(
            path,
            data,
            delimiter=",",
            header="delta,T1_sq,T2_sq,P_loss",
            comments="",
            fmt="%.9g",
        )
        center = data[len(data) // 2]
        print(
            f"  decay={decay:>3g}: |T2(0)|^2 = {center[2]:.6f}, "
            f"P_loss(0) = {center[3]:.6f}  -> {path.name}"
        )
    peak = curves[0.2][len(DELTAS) // 2]
    print(f"\nwith decay 0.2 the conversion still reaches {peak[2]:.1%},")
    print("and both conversion and loss peak exactly at resonance.")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; skipping the figure")
        return
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True, sharey=True)
    for ax, decay in zip(axes.flat, DECAY_RATES):
        data = curves[decay]
        ax.plot(data[:, 0], data[:, 1], "b--", label=r"$|T_1|^2$")
        ax.plot(data[:, 0], data[:, 2], "b-", label=r"$|T_2|^2$")
        ax.plot(data[:, 0], data[:, 3], "r-", label=r"$P_{loss}$")
        ax.set_title(f"decay = {decay:g}")
        ax.grid(alpha=0.3)
    axes[0, 0].legend(fontsize="small")
    for ax in axes[1]:
        ax.set_xlabel(r"$\Delta_1/\Gamma_1$")
    fig.tight_layout()
    fig.savefig(OUT_DIR / "conversion_spectra.png", dpi=130)
    print(f"figure: {OUT_DIR / 'conversion_spectra.png'}")


if __name__ == "__main__":
    main()
