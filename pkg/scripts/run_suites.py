"""Run every verification suite with its default parameters and print a summary table.

Reports are written as JSON to the output directory (default: ./reports).
"""
import argparse
import time
from pathlib import Path

from harmgauss import verify
from harmgauss.harmonic import Poly2
from harmgauss.surface import surface_from_polys


def suites():
    x, y = Poly2.x(), Poly2.y()
    saddle = surface_from_polys(x, y, x * y)
    grid = saddle.domain.grid(9, 9)
    return {
        "thm1-exact": lambda: verify.distortion_identity_suite(100, verify.RandomSurfaceSpec(4, 10, 1), 5),
        "thm1-exact-general": lambda: verify.distortion_identity_suite(
            100, verify.RandomSurfaceSpec(4, 10, 1, normalized=False), 5),
        "thm1-numeric": lambda: verify.fd_bridge_suite(saddle, grid),
        "dilatation": lambda: verify.dilatation_bridge_check(saddle, grid),
        "remark14": verify.branch_line_counterexample,
        "thm3": verify.planar_family_suite,
        "n-identity": lambda: verify.n_identity_suite(100, seed=1),
        "curvature": lambda: verify.curvature_sign_suite(seed=1),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    print(f"{'suite':<20}{'passed':>8}{'failed':>8}{'skipped':>9}{'seconds':>9}")
    for name, run in suites().items():
        start = time.perf_counter()
        report = run()
        elapsed = time.perf_counter() - start
        (out / f"{name}.json").write_text(report.to_json())
        s = report.summary
        print(f"{name:<20}{s['passed']:>8}{s['failures']:>8}{s['skipped']:>9}{elapsed:>9.2f}")


if __name__ == "__main__":
    main()
