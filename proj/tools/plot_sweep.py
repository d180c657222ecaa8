#!/usr/bin/env python3
"""Plot an ntnsim sweep CSV: outage probability against the swept parameter.

Usage: plot_sweep.py results.csv [out.png]
Needs matplotlib; falls back to an ASCII table when it is missing.
"""
import csv
import sys


def load(path):
    with open(path, newline="") as f:
        data = [l for l in f if not l.startswith("#")]
    return list(csv.DictReader(data))


def main():
    if len(sys.argv) < 2:
        print(__doc__)
        return 1
    rows = load(sys.argv[1])
    if not rows:
        print("no data rows in", sys.argv[1])
        return 1
    param = rows[0].get("sweep_param") or "value"
    xs = [float(r["sweep_value"]) for r in rows if r.get("sweep_value")]
    analytic = [(float(r["sweep_value"]), float(r["p_out_analytic"]))
                for r in rows if r.get("p_out_analytic")]
    mc = [(float(r["sweep_value"]), float(r["p_out_mc"]), float(r.get("mc_ci95") or 0))
          for r in rows if r.get("p_out_mc")]
    if not xs:
        print("CSV has no sweep_value column; run the sweep subcommand first")
        return 1
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print(f"{param:>12}  analytic       monte-carlo")
        amap = dict(analytic)
        mmap = {v: (p, c) for v, p, c in mc}
        for x in xs:
            a = f"{amap[x]:.6g}" if x in amap else "-"
            m = f"{mmap[x][0]:.6g} +/- {mmap[x][1]:.2g}" if x in mmap else "-"
            print(f"{x:>12.6g}  {a:<13}  {m}")
        return 0
    fig, ax = plt.subplots(figsize=(6, 4))
    if analytic:
        ax.plot([v for v, _ in analytic], [p for _, p in analytic], "-", label="analytic")
    if mc:
        ax.errorbar([v for v, _, _ in mc], [p for _, p, _ in mc],
                    yerr=[c for _, _, c in mc], fmt="o", ms=4, capsize=3, label="monte carlo")
    ax.set_xlabel(param)
    ax.set_ylabel("outage probability")
    ax.set_ylim(0, 1)
    ax.grid(True, alpha=0.3)
    ax.legend()
    out = sys.argv[2] if len(sys.argv) > 2 else "sweep.png"
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print("wrote", out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
