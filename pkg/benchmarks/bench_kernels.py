"""Timing comparison of the compiled and pure-numpy evaluation kernels.

Usage: python benchmarks/bench_kernels.py

The reflection and force-integrand kernels are timed in-process on
representative channel batches; the end-to-end pressure evaluation is
timed in subprocesses so the backend selector (NLCASIMIR_PURE) applies.
"""
from __future__ import annotations

import os
import subprocess
import sys
import time

import numpy as np

from nlcasimir._kernels import HYDRODYNAMIC, LOCAL, pure

try:
    from nlcasimir._kernels import _fast
except ImportError:
    _fast = None

OMEGA_P = 1.3673e16
GAMMA = 5.32e13
BETA2 = 0.6 * 1.4e6**2

PRESSURE_SNIPPET = """
import time
import nlcasimir as nl
from nlcasimir._kernels import BACKEND

gold = nl.load_material("{material}")
m = nl.MirrorModel.hydrodynamic(gold)
cfg = nl.QuadratureConfig(rel_tol=1e-8)
nl.casimir_pressure(50e-9, m, m, cfg)  # warm up
t0 = time.perf_counter()
for _ in range(5):
    p = nl.casimir_pressure(50e-9, m, m, cfg)
print(BACKEND, (time.perf_counter() - t0) / 5.0, p.F_per_area)
"""


def time_call(f, *args, repeats: int = 7) -> float:
    f(*args)  # warm up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        f(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(n: int) -> list[tuple[str, float, float]]:
    rng = np.random.default_rng(3)
    Q = 10.0 ** rng.uniform(5.0, 9.5, n)
    xi = 2.0e15
    L = 50e-9
    hydro = (HYDRODYNAMIC, OMEGA_P, GAMMA, BETA2, 0.0)
    rows = []
    for name, args in (
        ("reflection local", (LOCAL, OMEGA_P, GAMMA, BETA2, 0.0, Q, xi)),
        ("reflection hydrodynamic", (HYDRODYNAMIC, OMEGA_P, GAMMA, BETA2, 0.0, Q, xi)),
    ):
        t_pure = time_call(pure.reflection_s_p, *args)
        t_fast = time_call(_fast.reflection_s_p, *args) if _fast else float("nan")
        rows.append((f"{name} (n={n})", t_pure, t_fast))
    t_pure = time_call(pure.force_q_integrand, Q, xi, L, *hydro, *hydro)
    t_fast = (
        time_call(_fast.force_q_integrand, Q, xi, L, *hydro, *hydro)
        if _fast
        else float("nan")
    )
    rows.append((f"force integrand (n={n})", t_pure, t_fast))
    return rows


def bench_pressure() -> list[tuple[str, float, float]]:
    from nlcasimir.cli import default_material_path

    code = PRESSURE_SNIPPET.format(material=default_material_path())
    times = {}
    for backend, env_extra in (("compiled", {}), ("pure", {"NLCASIMIR_PURE": "1"})):
        env = {k: v for k, v in os.environ.items() if k != "NLCASIMIR_PURE"}
        env.update(env_extra)
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        if out.returncode != 0:
            raise RuntimeError(out.stderr)
        got_backend, seconds, force = out.stdout.split()
        if got_backend != backend:
            raise RuntimeError(f"expected backend {backend}, got {got_backend}")
        times[backend] = (float(seconds), float(force))
    if times["compiled"][1] != times["pure"][1]:
        rel = abs(times["compiled"][1] - times["pure"][1]) / abs(times["pure"][1])
        if rel > 1e-12:
            raise RuntimeError(f"backends disagree by {rel:.2e}")
    return [("pressure 50 nm (hydrodynamic)", times["pure"][0], times["compiled"][0])]


def main() -> None:
    rows = []
    for n in (64, 4096):
        rows += bench_kernels(n)
    rows += bench_pressure()
    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_pure, t_fast in rows:
        ratio = t_pure / t_fast if t_fast == t_fast else float("nan")
        print(f"{name:<{width}}  {t_pure:>10.3e}  {t_fast:>10.3e}  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
