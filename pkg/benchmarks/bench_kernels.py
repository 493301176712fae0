"""Compare the numba and numpy kernel backends on the hot array operations.

Run as a plain script; it prints one row per (operation, size) with the
per-call time under each available backend and the resulting speedup.
"""
import time

import numpy as np

from permdyn import _kernels
from permdyn.fields import GF


def timed(fn, repeats):
    fn()
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def build_cases(rng):
    f2 = GF.prime(2)
    f3 = GF.prime(3)
    f1024 = GF.extension(f2, [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1])

    def arr(field, n):
        return rng.integers(0, field.order, n, dtype=np.int64)

    def monic(field, n):
        a = arr(field, n)
        a[-1] = 1
        return a

    cases = []
    for field, label in ((f2, "F_2"), (f3, "F_3"), (f1024, "F_1024")):
        a, b = arr(field, 4096), arr(field, 4096)
        cases.append(("conv    %-7s n=4096" % label,
                      lambda f=field, a=a, b=b: f.kconv(a, b)))
        num, den = arr(field, 8192), monic(field, 2048)
        cases.append(("divmod  %-7s 8192/2048" % label,
                      lambda f=field, a=num, b=den: f.kdivmod(a, b)))
        cf, xs = arr(field, 512), arr(field, 4096)
        cases.append(("eval    %-7s deg 511 at 4096 pts" % label,
                      lambda f=field, a=cf, x=xs: f.keval(a, x)))
    x, y = arr(f1024, 1 << 16), arr(f1024, 1 << 16)
    cases.append(("vadd    F_1024  n=65536",
                  lambda f=f1024, a=x, b=y: f.vadd(a, b)))
    return cases


def main():
    backends = _kernels.available_backends()
    rng = np.random.default_rng(0)
    cases = build_cases(rng)
    before = _kernels.get_backend()
    results = {}
    try:
        for backend in backends:
            _kernels.set_backend(backend)
            _kernels.warmup()
            for label, fn in cases:
                results.setdefault(label, {})[backend] = (timed(fn, 20), fn())
    finally:
        _kernels.set_backend(before)

    header = "%-36s" % "operation" + "".join("%12s" % b for b in backends)
    if len(backends) > 1:
        header += "%10s" % "speedup"
    print(header)
    print("-" * len(header))
    for label, fn in cases:
        per = results[label]
        row = "%-36s" % label
        for backend in backends:
            row += "%10.3f ms" % (per[backend][0] * 1e3)
        if len(backends) > 1:
            outs = [np.asarray(per[b][1][0] if isinstance(per[b][1], tuple)
                               else per[b][1]) for b in backends]
            assert all(np.array_equal(outs[0], o) for o in outs[1:])
            row += "%9.1fx" % (per[backends[0]][0] / per[backends[-1]][0])
        print(row)
    if "numba" not in backends:
        print("numba unavailable; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
