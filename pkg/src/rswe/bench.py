"""Per-stage decoder timing.

Each repeat builds the field tables from scratch (including the cached
transforms), decodes a random full-length codeword with the requested number
of erasures, and times the four pipeline stages separately.  The report
carries per-stage medians and a digest of the decoded vector, which is a
pure function of (m, erasures, seed).
"""

import hashlib
import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import backend, core
from .codec import DIRECT_PATH_FACTOR
from .errors import BadParamsError
from .gf import build_field

PHASES = ("tables", "log_pi", "coefficients", "evaluation")


@dataclass
class BenchReport:
    m: int
    erasures: int
    seed: int
    repeat: int
    backend_name: str
    medians: dict
    digest: str

    def format(self):
        q = 1 << self.m
        lines = [
            f"backend: {self.backend_name}",
            f"m={self.m} q={q} erasures={self.erasures} "
            f"received={q - self.erasures} seed={self.seed} repeats={self.repeat}",
        ]
        for phase in PHASES:
            lines.append(f"{phase + ':':<14}{self.medians[phase]:>10.4f} s")
        lines.append(f"{'total:':<14}{self.medians['total']:>10.4f} s")
        lines.append(f"decoded sha256: {self.digest}")
        return "\n".join(lines)


def _one_run(m, erasures, seed):
    q = 1 << m
    rng = np.random.default_rng(seed)
    perm = rng.permutation(q).astype(np.int64)
    erased = perm[:erasures]
    received_pos = np.sort(perm[erasures:])
    received_val = rng.integers(0, q, size=q - erasures, dtype=np.int64)

    times = {}
    t0 = time.perf_counter()
    t = build_field(m)
    core._lhat(t)
    stack = core.precompute_inverse_stack(t)
    times["tables"] = time.perf_counter() - t0

    rset = core.ReceivedSet.build(received_pos, received_val, q)

    t0 = time.perf_counter()
    logpi = core.compute_log_pi(rset, t)
    times["log_pi"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    coeffs = core.lagrange_coefficients(rset, logpi, t)
    times["coefficients"] = time.perf_counter() - t0

    k = q - erasures
    t0 = time.perf_counter()
    out = np.zeros(q, dtype=np.int64)
    out[received_pos] = received_val
    if erasures == 0:
        pass  # nothing to recover, decode is the identity copy
    elif erasures * k < DIRECT_PATH_FACTOR * q * m:
        out[erased] = core.evaluate_at_points(coeffs, logpi, erased.tolist(), t)
    else:
        out = core.evaluate_all(coeffs, logpi, rset, stack, t)
    times["evaluation"] = time.perf_counter() - t0

    times["total"] = sum(times.values())
    digest = hashlib.sha256(out.astype("<i8").tobytes()).hexdigest()
    return times, digest


def run_bench(m, erasures=None, seed=0, repeat=3, backend_name="auto"):
    q = 1 << m
    if erasures is None:
        erasures = q // 2
    if not 0 <= erasures <= q - 1:
        raise BadParamsError(f"erasures must lie in [0, {q - 1}]")
    if repeat < 1:
        raise BadParamsError("repeat must be at least 1")
    with backend.using(backend_name) as kern:
        name = "compiled" if kern.COMPILED else "python"
        runs = [_one_run(m, erasures, seed) for _ in range(repeat)]
    digests = {d for _, d in runs}
    if len(digests) != 1:
        raise AssertionError("decode result varied across repeats")
    medians = {
        key: statistics.median(r[key] for r, _ in runs)
        for key in (*PHASES, "total")
    }
    return BenchReport(
        m=m, erasures=erasures, seed=seed, repeat=repeat,
        backend_name=name, medians=medians, digest=digests.pop(),
    )
