"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from hermint import _kernels
from hermint.hermite import hermite


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def workloads(mod):
    polys = [list(hermite(n)) for n in (30, 40, 50, 60)]
    prod = mod.poly_mul(mod.poly_mul(polys[0], polys[1]), mod.poly_mul(polys[2], polys[3]))

    def mul():
        for a in polys:
            for b in polys:
                mod.poly_mul(a, b)

    def integrate():
        for _ in range(200):
            mod.gauss_numerator(prod)

    def recurrence():
        memo = {}
        for a in range(0, 21):
            for b in range(a + 1):
                for c in range(b + 1):
                    for d in range(c + 1):
                        mod.h4_value(a, b, c, d, memo)

    return {"poly_mul 16x (deg 30-60)": mul,
            "gauss_numerator 200x (deg 180)": integrate,
            "h4 recurrence, entries <= 20": recurrence}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    backends = _kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the fallback is timed")
    names = sorted(backends, reverse=True)
    print(f"{'workload':34s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label in workloads(backends["python"]):
        times = {n: _best(workloads(backends[n])[label], args.repeat) for n in names}
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:34s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
              + f"{speed:11.2f}x")


if __name__ == "__main__":
    main()
