"""Adaptive Gauss-Kronrod quadrature for the two integral shapes that occur
here: exponentially weighted semi-infinite integrals over the evanescent
range, and finite (possibly oscillatory, possibly endpoint-singular)
integrals over the propagating range.

Integrands are called with a 1-d array of abscissae and must return an
array of the same shape (real or complex).  Panels are refined in a fixed
order and summed with ``math.fsum``, so results are bit-reproducible.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, replace

import numpy as np

# Kronrod 15-point nodes/weights and the embedded 7-point Gauss weights.
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XK[:-1], _XK[::-1]])          # 15 nodes on [-1, 1]
KRONROD_WEIGHTS = np.concatenate([_WK[:-1], _WK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]
GAUSS_WEIGHTS[7] = _WG[3]


class QuadratureError(RuntimeError):
    """Raised by callers that require a converged integral."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-30
    max_subdivisions: int = 2000
    decay_scale: float = 0.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if not self.abs_tol >= 0:
            raise ValueError("abs_tol must be >= 0")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


@dataclass(frozen=True)
class QuadratureResult:
    value: float | complex
    error_estimate: float
    evaluations: int
    converged: bool

    def require(self, what="integral"):
        if not self.converged:
            raise QuadratureError(
                f"{what} did not converge: value={self.value!r}, "
                f"error estimate={self.error_estimate:.3e} after {self.evaluations} evaluations",
                self,
            )
        return self.value


def _tolerance(value, spec):
    return max(spec.rel_tol * abs(value), spec.abs_tol)


def _panel(f, a, b):
    half = 0.5 * (b - a)
    y = np.asarray(f(0.5 * (a + b) + half * NODES))
    if not np.all(np.isfinite(y)):
        return math.nan, math.inf
    k = half * np.dot(KRONROD_WEIGHTS, y)
    g = half * np.dot(GAUSS_WEIGHTS, y)
    return complex(k) if np.iscomplexobj(k) else float(k), float(abs(k - g))


def _fsum(values):
    values = list(values)
    if any(isinstance(v, complex) or np.iscomplexobj(v) for v in values):
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    return math.fsum(values)


def _adaptive(f, edges, spec, extra_error=0.0):
    """Globally adaptive bisection over the panels delimited by ``edges``."""
    heap = []
    evaluations = 0
    counter = 0
    for a, b in zip(edges[:-1], edges[1:]):
        v, e = _panel(f, a, b)
        evaluations += 15
        heap.append((-e, counter, a, b, v))
        counter += 1
    heapq.heapify(heap)
    splits = 0
    while True:
        value = _fsum(item[4] for item in heap)
        error = math.fsum(-item[0] for item in heap) + extra_error
        if not math.isfinite(error):
            if splits >= spec.max_subdivisions:
                return QuadratureResult(value, math.inf, evaluations, False)
        elif error <= _tolerance(value, spec):
            return QuadratureResult(value, error, evaluations, True)
        if splits >= spec.max_subdivisions:
            return QuadratureResult(value, error, evaluations, False)
        neg_e, _, a, b, _ = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if not a < m < b:
            # panel can no longer be bisected in floating point
            heapq.heappush(heap, (neg_e, counter, a, b, _))
            return QuadratureResult(value, error, evaluations, False)
        for lo, hi in ((a, m), (m, b)):
            v, e = _panel(f, lo, hi)
            evaluations += 15
            heapq.heappush(heap, (-e, counter, lo, hi, v))
            counter += 1
        splits += 1


def _edges(a, b, breakpoints, initial_panels):
    pts = sorted({a, b, *(p for p in breakpoints if a < p < b)})
    edges = []
    for lo, hi in zip(pts[:-1], pts[1:]):
        edges.extend(np.linspace(lo, hi, initial_panels + 1)[:-1].tolist())
    edges.append(b)
    return edges


def integrate_finite(f, a, b, spec=QuadratureSpec(), singular_end=None,
                     breakpoints=(), initial_panels=4):
    """Integrate ``f`` over ``[a, b]``.

    ``singular_end`` ('a' or 'b') marks an integrable inverse-square-root
    type endpoint singularity; it is removed with x = b - t^2 (or a + t^2)
    before quadrature.
    """
    a, b = float(a), float(b)
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    if singular_end is None:
        g, lo, hi, bps = f, a, b, breakpoints
    elif singular_end == "b":
        def g(t):
            return 2.0 * t * f(b - t * t)
        lo, hi = 0.0, math.sqrt(b - a)
        bps = [math.sqrt(b - p) for p in breakpoints if a < p < b]
    elif singular_end == "a":
        def g(t):
            return 2.0 * t * f(a + t * t)
        lo, hi = 0.0, math.sqrt(b - a)
        bps = [math.sqrt(p - a) for p in breakpoints if a < p < b]
    else:
        raise ValueError("singular_end must be None, 'a' or 'b'")
    return _adaptive(g, _edges(lo, hi, bps, initial_panels), spec)


def integrate_evanescent(f, z, spec=QuadratureSpec(), breakpoints=(), initial_panels=4):
    """Integrate ``f(u) exp(-2 u z)`` over ``u`` in ``(0, inf)``.

    The range is cut at U = max(30/(2z), 10*decay_scale) and extended while
    the estimated tail |f(U)| e^{-2Uz}/(2z) is not negligible; the final
    tail bound is added to the error estimate.  ``z`` is the (dimensionless)
    decay length conjugate to ``u``.
    """
    if not (math.isfinite(z) and z > 0):
        raise ValueError(f"z must be finite and > 0, got {z!r}")

    def weighted(u):
        return f(u) * np.exp(-2.0 * z * u)

    def tail_bound(upper):
        # f grows at most polynomially: local value times a growth allowance
        fu = abs(np.asarray(f(np.array([upper])))[0])
        if not math.isfinite(fu):
            return math.inf
        return 4.0 * fu * math.exp(-2.0 * z * upper) / (2.0 * z)

    upper = max(30.0 / (2.0 * z), 10.0 * spec.decay_scale)
    # half the error budget to the panels, at most a tenth to the tail
    inner = replace(spec, rel_tol=0.5 * spec.rel_tol, abs_tol=0.5 * spec.abs_tol)
    evaluations = 0
    for _ in range(40):
        res = _adaptive(weighted, _edges(0.0, upper, breakpoints, initial_panels), inner)
        tail = tail_bound(upper)
        evaluations += res.evaluations + 1
        if tail <= 0.1 * _tolerance(res.value, spec):
            break
        upper *= 1.5
    error = res.error_estimate + tail
    converged = res.converged and error <= _tolerance(res.value, spec)
    return QuadratureResult(res.value, float(error), evaluations, bool(converged))
