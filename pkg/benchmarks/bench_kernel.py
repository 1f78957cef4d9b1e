"""Compare the compiled and pure-Python sweep kernels.

Builds the same seeded diagrams through both kernels, checks they agree
exactly, and reports the per-diagram cost of each.  Run as a script:

    python benchmarks/bench_kernel.py [--replicates N]
"""

from __future__ import annotations

import argparse
import time

from bulletlab import PoissonLaw, Rect, RngStream, build_diagram, get_preset, kernel_name


def _time_kernel(kernel: str, preset_name: str, rect: Rect, n: int) -> float:
    preset = get_preset(preset_name)
    law = PoissonLaw(nuH=preset.nuH, nuV=preset.nuV)
    start = time.perf_counter()
    for i in range(n):
        build_diagram(
            preset.params, law, rect, RngStream(2024).substream(i), kernel=kernel
        )
    return (time.perf_counter() - start) / n


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--replicates", type=int, default=500)
    parser.add_argument("--rect", default="0,0,4,4")
    args = parser.parse_args()
    x0, y0, x1, y1 = (float(v) for v in args.rect.split(","))
    rect = Rect(x0=x0, y0=y0, x1=x1, y1=y1)

    try:
        kernel_name("compiled")
        kernels = ["python", "compiled"]
    except RuntimeError:
        print("compiled kernel unavailable; timing the python kernel only")
        kernels = ["python"]

    for preset_name in ("loop", "loop-half", "cbmc", "hammersley", "pv"):
        preset = get_preset(preset_name)
        law = PoissonLaw(nuH=preset.nuH, nuV=preset.nuV)
        if len(kernels) == 2:
            for i in range(min(args.replicates, 50)):
                rng = RngStream(99).substream(i)
                a = build_diagram(preset.params, law, rect, rng, kernel="python")
                rng = RngStream(99).substream(i)
                b = build_diagram(preset.params, law, rect, rng, kernel="compiled")
                assert a == b, f"kernel mismatch on {preset_name} substream {i}"
        times = {k: _time_kernel(k, preset_name, rect, args.replicates) for k in kernels}
        line = f"{preset_name:>10}: " + "  ".join(
            f"{k} {times[k] * 1e6:8.1f} us/diagram" for k in kernels
        )
        if len(kernels) == 2:
            line += f"  speedup x{times['python'] / times['compiled']:.1f}"
        print(line)


if __name__ == "__main__":
    main()
