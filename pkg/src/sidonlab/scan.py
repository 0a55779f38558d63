"""Systematic genus-2 survey: enumerate or sample quintic curves over F_p,
build the symmetric Sidon image of each in its Jacobian, verify it, halve it,
and record group structure plus the exact Weil and epsilon diagnostics.

Every row is produced by the module-level worker so the scan can fan out
over a process pool; SIDON_THREADS caps the pool (0 means one worker per
CPU, 1 means run serially in-process).
"""

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import polyfp
from .bounds import compute_bounds_report
from .errors import FieldTooLargeError, InvalidSeedError, NotPrimeError
from .field import is_prime
from .groups import group_structure
from .hyperelliptic import (
    HyperellipticCurve,
    build_symmetric_sidon,
    halve_set,
)
from .sidon import verify_sidon, verify_symmetric_sidon

MAX_EXHAUSTIVE_SPACE = 10**6

CSV_COLUMNS = (
    "p",
    "f",
    "N1",
    "A_order",
    "invariant_factors",
    "is_cyclic",
    "sym_sidon_ok",
    "halved_size",
    "halved_sidon_ok",
    "epsilon",
    "elapsed_ms",
)


@dataclass(frozen=True)
class ScanRow:
    p: int
    f: Tuple[int, ...]
    n1: int
    a_order: int
    invariant_factors: Tuple[int, ...]
    is_cyclic: bool
    sym_sidon_ok: bool
    halved_size: int
    halved_sidon_ok: bool
    epsilon: float
    elapsed_ms: float

    def to_dict(self):
        return {
            "p": self.p,
            "f": polyfp.to_str(self.f),
            "N1": self.n1,
            "A_order": self.a_order,
            "invariant_factors": list(self.invariant_factors),
            "is_cyclic": self.is_cyclic,
            "sym_sidon_ok": self.sym_sidon_ok,
            "halved_size": self.halved_size,
            "halved_sidon_ok": self.halved_sidon_ok,
            "epsilon": self.epsilon,
            "elapsed_ms": self.elapsed_ms,
        }

    def csv_values(self):
        return (
            str(self.p),
            polyfp.to_str(self.f),
            str(self.n1),
            str(self.a_order),
            ";".join(str(d) for d in self.invariant_factors),
            str(int(self.is_cyclic)),
            str(int(self.sym_sidon_ok)),
            str(self.halved_size),
            str(int(self.halved_sidon_ok)),
            "%.12g" % self.epsilon,
            "%.3f" % self.elapsed_ms,
        )


@dataclass(frozen=True)
class ScanResult:
    header: dict
    rows: List[ScanRow]
    footer: dict

    def to_dict(self):
        return {
            "header": self.header,
            "rows": [r.to_dict() for r in self.rows],
            "footer": self.footer,
        }


def survey_curve(p, f):
    """Full pipeline for one squarefree quintic: counts, group structure,
    symmetric Sidon image, halving, and exact bounds.  Cross-checks the
    zeta-function group order against direct enumeration."""
    t0 = time.perf_counter()
    curve = HyperellipticCurve(p, f)
    elements = curve.enumerate_jacobian()
    a_order = len(elements)
    zeta_order = curve.jacobian_order_zeta()
    if zeta_order != a_order:
        raise ArithmeticError(
            "group order mismatch: enumeration %d vs zeta %d for f=%s mod %d"
            % (a_order, zeta_order, polyfp.to_str(f), p)
        )
    adapter, image, center = build_symmetric_sidon(curve)
    factors, is_cyclic = group_structure(elements, adapter)
    sym_report = verify_symmetric_sidon(image, adapter, center)
    halved = halve_set(image, adapter, center)
    halved_report = verify_sidon(halved, adapter)
    bounds = compute_bounds_report(p, curve.genus, len(image), a_order)
    if not (bounds.weil_s_ok and bounds.weil_a_ok):
        raise ArithmeticError(
            "Weil interval violated for f=%s mod %d" % (polyfp.to_str(f), p)
        )
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return ScanRow(
        p=p,
        f=tuple(f),
        n1=len(image),
        a_order=a_order,
        invariant_factors=factors,
        is_cyclic=is_cyclic,
        sym_sidon_ok=sym_report.is_symmetric_sidon,
        halved_size=len(halved),
        halved_sidon_ok=halved_report.is_sidon,
        epsilon=float(bounds.epsilon),
        elapsed_ms=elapsed_ms,
    )


def _exhaustive_curves(p):
    # Depressed quintics x^5 + c3 x^3 + c2 x^2 + c1 x + c0 cover every
    # isomorphism class when the x^4 term can be translated away, which
    # fails only for p = 5; there the full coefficient space is walked.
    if p == 5:
        pool = itertools.product(range(p), repeat=5)
        for c in pool:
            yield c + (1,)
    else:
        for c in itertools.product(range(p), repeat=4):
            yield c + (0, 1)


def _random_curves(p, count, rng):
    ncoef = 5 if p == 5 else 4
    made = 0
    while made < count:
        c = tuple(rng.randrange(p) for _ in range(ncoef))
        f = c + (1,) if p == 5 else c + (0, 1)
        if not polyfp.is_squarefree(f, p):
            continue
        made += 1
        yield f


def resolve_threads(threads=None):
    """Explicit argument wins; otherwise SIDON_THREADS; otherwise serial.
    A value of 0 asks for one worker per CPU."""
    if threads is None:
        raw = os.environ.get("SIDON_THREADS", "")
        if raw.strip():
            try:
                threads = int(raw)
            except ValueError:
                raise ValueError(
                    "SIDON_THREADS must be an integer, got %r" % raw
                ) from None
        else:
            threads = 1
    if threads < 0:
        raise ValueError("thread count must be >= 0")
    if threads == 0:
        threads = os.cpu_count() or 1
    return threads


def scan_genus2(p, mode="exhaustive", count=None, seed=None, threads=None):
    """Survey squarefree quintics over F_p.

    mode "exhaustive" walks the coefficient space in lexicographic order and
    requires p**5 <= 10**6; mode "random" draws `count` squarefree curves
    from a seeded Mersenne Twister stream, so equal seeds give equal rows.
    """
    if not is_prime(p):
        raise NotPrimeError("%d is not prime" % p)
    if p == 2:
        raise NotPrimeError("characteristic 2 is not supported")
    if mode == "exhaustive":
        if p**5 > MAX_EXHAUSTIVE_SPACE:
            raise FieldTooLargeError(
                "exhaustive scan needs p**5 <= %d, got p = %d"
                % (MAX_EXHAUSTIVE_SPACE, p)
            )
        curves = [
            f for f in _exhaustive_curves(p) if polyfp.is_squarefree(f, p)
        ]
        seed_out = None
    elif mode == "random":
        if count is None or count < 1:
            raise ValueError("random mode needs a positive count")
        if seed is None:
            seed = 0
        if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
            raise InvalidSeedError("seed must be a nonnegative integer")
        rng = random.Random(seed)
        curves = list(_random_curves(p, count, rng))
        seed_out = seed
    else:
        raise ValueError("mode must be 'exhaustive' or 'random'")

    threads = resolve_threads(threads)
    if threads == 1 or len(curves) < 2:
        rows = [survey_curve(p, f) for f in curves]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(survey_curve, [p] * len(curves), curves))

    header = {
        "p": p,
        "mode": mode,
        "rng": "mt19937",
        "seed": seed_out,
        "threads": threads,
        "curves": len(rows),
    }
    footer = _footer(rows)
    return ScanResult(header=header, rows=rows, footer=footer)


def _footer(rows):
    if not rows:
        return {
            "curves": 0,
            "cyclic_fraction": None,
            "max_halved_size": None,
            "epsilon_at_max": None,
        }
    best = max(rows, key=lambda r: r.halved_size)
    return {
        "curves": len(rows),
        "cyclic_fraction": sum(r.is_cyclic for r in rows) / len(rows),
        "max_halved_size": best.halved_size,
        "epsilon_at_max": best.epsilon,
    }
