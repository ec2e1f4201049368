"""Small shared helpers: big-integer logs, least squares, deterministic
parallel map, canonical serialization."""

from __future__ import annotations

import json
import hashlib
import math
from concurrent.futures import ThreadPoolExecutor

_LN2 = math.log(2.0)


def log_int(n):
    """Natural log of a positive int, exact enough for arbitrarily large n.

    math.log overflows float conversion beyond ~1e308; split off the top
    53 bits instead.
    """
    if n <= 0:
        raise ValueError("log of non-positive value")
    bits = n.bit_length()
    if bits <= 900:
        return math.log(n)
    shift = bits - 53
    return math.log(n >> shift) + shift * _LN2


def log2_int(n):
    return log_int(n) / _LN2


def fit_line(points):
    """Least-squares fit y = a + b*x; returns (slope, intercept, residual).

    residual is the RMS deviation of y around the fit.
    """
    m = len(points)
    if m == 0:
        return 0.0, 0.0, 0.0
    if m == 1:
        return 0.0, points[0][1], 0.0
    mx = sum(p[0] for p in points) / m
    my = sum(p[1] for p in points) / m
    sxx = sum((p[0] - mx) ** 2 for p in points)
    sxy = sum((p[0] - mx) * (p[1] - my) for p in points)
    slope = sxy / sxx if sxx > 0 else 0.0
    intercept = my - slope * mx
    rss = sum((p[1] - (intercept + slope * p[0])) ** 2 for p in points)
    return slope, intercept, math.sqrt(rss / m)


def pmap(fn, items, threads=1):
    """Order-preserving map, optionally over a thread pool.

    Results are identical regardless of thread count; threads only change
    wall time.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def round_sig(x, digits=6):
    """Round a float to a fixed number of significant digits for bit-stable
    serialization."""
    if x == 0 or not math.isfinite(x):
        return x
    return float(f"{x:.{digits}g}")


def canonical_json(obj):
    """Deterministic JSON text: sorted keys, no whitespace jitter."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def config_hash(obj):
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()[:16]
