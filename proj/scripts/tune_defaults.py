#!/usr/bin/env python3
"""Sweep embedding defaults against the fixture corpus.

Runs the built CLI over a (alpha_floor, beta_y, beta_u=beta_v) grid and
prints, per configuration: corpus-mean PSNR/SSIM, the mean BER behind
each robustness gate, and the per-fixture transparency wins of the YUV
pipeline over the RGB baseline. The shipped defaults in EmbedConfig were
frozen from this sweep.

Usage: scripts/tune_defaults.py [path-to-yuvmark-binary]
"""

import csv
import io
import subprocess
import sys
import tempfile
from pathlib import Path

GATES = [
    ("jpeg", "q=100", 0.01),
    ("jpeg", "q=90", 0.05),
    ("gn", "var=0.001", 0.05),
    ("sp", "d=0.001", 0.05),
    ("mf", "w=3", 0.10),
    ("gf", "w=3,sigma=0.5", 0.02),
]

GRID_FLOORS = [28.0, 36.0, 44.0, 52.0]
GRID_BETAS = [(0.10, 0.40), (0.08, 0.50), (0.12, 0.60)]


def run(cli, args):
    proc = subprocess.run([cli] + args, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"{args} failed: {proc.stderr}")
    return proc


def write_config(path, floor, beta_y, beta_uv, extra=""):
    path.write_text(
        f"beta_y = {beta_y}\n"
        f"beta_u = {beta_uv}\n"
        f"beta_v = {beta_uv}\n"
        f"alpha_floor = {floor}\n"
        f"seed = 1\n" + extra
    )


def read_rows(csv_path):
    with open(csv_path, newline="") as f:
        return list(csv.DictReader(f))


def evaluate(cli, tmp, floor, beta_y, beta_uv):
    cfg = tmp / "sweep.cfg"
    out_csv = tmp / "sweep.csv"
    write_config(cfg, floor, beta_y, beta_uv)
    run(cli, ["bench", "--config", str(cfg), "--out-csv", str(out_csv)])
    rows = read_rows(out_csv)
    means = {
        (r["attack"], r["param"]): r for r in rows if r["image"] == "mean"
    }

    none = next(v for (a, _), v in means.items() if a == "none")
    result = {
        "psnr": float(none["psnr"]),
        "ssim": float(none["ssim"]),
        "gates": {},
    }
    for attack, param_prefix, limit in GATES:
        row = next(
            v for (a, p), v in means.items()
            if a == attack and p.startswith(param_prefix)
        )
        result["gates"][f"{attack}:{param_prefix}"] = (float(row["ber"]), limit)

    cs_cfg = tmp / "cs.cfg"
    cs_csv = tmp / "cs.csv"
    write_config(cs_cfg, floor, beta_y, beta_uv, "attacks = jpeg:q=90\n")
    run(cli, ["compare-colorspace", "--config", str(cs_cfg), "--out-csv", str(cs_csv)])
    wins = losses = 0
    for r in read_rows(cs_csv):
        if r["image"] == "mean" or r["attack"] != "none":
            continue
        matched = float(r["ber_yuv"]) == 0.0 and float(r["ber_rgb"]) == 0.0
        if matched and float(r["psnr_yuv"]) > float(r["psnr_rgb"]):
            wins += 1
        else:
            losses += 1
    result["cs_wins"] = (wins, wins + losses)
    return result


def main():
    cli = sys.argv[1] if len(sys.argv) > 1 else "build/tools/yuvmark"
    if not Path(cli).exists():
        sys.exit(f"CLI not found at {cli}; build first or pass the path")

    header = ["floor", "b_y", "b_uv", "psnr", "ssim"] + [g[0] + ":" + g[1] for g in GATES] + [
        "yuv_wins", "verdict"
    ]
    print("\t".join(header))
    with tempfile.TemporaryDirectory() as tmpdir:
        tmp = Path(tmpdir)
        for floor in GRID_FLOORS:
            for beta_y, beta_uv in GRID_BETAS:
                r = evaluate(cli, tmp, floor, beta_y, beta_uv)
                ok = r["psnr"] >= 35.0 and r["ssim"] >= 0.97
                cells = [f"{floor:g}", f"{beta_y:g}", f"{beta_uv:g}",
                         f"{r['psnr']:.2f}", f"{r['ssim']:.4f}"]
                for key, (ber, limit) in r["gates"].items():
                    mark = "" if ber <= limit else "!"
                    ok = ok and ber <= limit
                    cells.append(f"{ber:.4f}{mark}")
                wins, total = r["cs_wins"]
                ok = ok and wins >= 7
                cells.append(f"{wins}/{total}")
                cells.append("PASS" if ok else "fail")
                print("\t".join(cells), flush=True)


if __name__ == "__main__":
    main()
