"""Iterative CB-vector bound and stability conditions for Z_m LDPC ensembles.

The state is the vector of pairwise Bhattacharyya parameters CB(0 -> x).
Check nodes combine by circular convolution (an upper bound on the true
check-node vector), variable nodes by component-wise products, and the
result is clipped entry-wise to 1.

The convolution bound is loose for m = 2, where the scalar recursion
``ub_cb_step`` is exact in the same bounding sense and strictly tighter; the
step therefore dispatches to it at m = 2, making the pipeline coincide with
the one-dimensional CB bound there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .binary_bounds import IterationLimits, ub_cb_step
from .channels import CbVector
from .ensembles import DegreeEnsemble, lambda2, rho_prime1

__all__ = [
    "ZmBoundState", "cb_vec_convolve", "cb_vec_pointwise", "zm_bound_step",
    "zm_iterate", "sufficient_stability", "necessary_stability_violated",
    "gfq_stability", "convergence_rate",
]


@dataclass(frozen=True)
class ZmBoundState:
    v: CbVector
    iteration: int


def _require_same_m(u: CbVector, v: CbVector):
    if u.m != v.m:
        raise ValueError(f"alphabet sizes differ: {u.m} vs {v.m}")


def cb_vec_convolve(u: CbVector, v: CbVector) -> CbVector:
    """Circular convolution (u (x) v)[x] = sum_z u[z] v[x - z mod m].

    Direct O(m^2) evaluation; entries may exceed 1 and are not clipped here.
    """
    _require_same_m(u, v)
    m = u.m
    out = np.array([float(np.dot(u.v, np.roll(v.v[::-1], x + 1))) for x in range(m)])
    return CbVector(out)


def cb_vec_pointwise(u: CbVector, v: CbVector) -> CbVector:
    """Component-wise product (the variable-node combination)."""
    _require_same_m(u, v)
    return CbVector(u.v * v.v)


def _conv_power(v: np.ndarray, k: int) -> np.ndarray:
    """k-fold circular convolution power of v (k >= 1)."""
    out = v
    for _ in range(k - 1):
        m = v.size
        out = np.array([float(np.dot(out, np.roll(v[::-1], x + 1))) for x in range(m)])
    return out


def zm_bound_step(v: CbVector, v0: CbVector, e: DegreeEnsemble) -> CbVector:
    """One iteration v' = min(1, v0 . lambda(rho(v))) of the vector bound.

    rho replaces scalar products by circular convolutions, lambda by
    component-wise products, and the min is taken entry-wise at the end.
    For m = 2 the scalar CB recursion is used instead (tighter; see module
    docstring), keeping entry 0 at min(1, v0[0]).
    """
    _require_same_m(v, v0)
    if v.m == 2:
        return CbVector(np.array([
            min(1.0, float(v0.v[0])),
            ub_cb_step(float(v.v[1]), e, float(v0.v[1])),
        ]))
    rho_stage = np.zeros(v.m)
    for k, w in e.rho:
        rho_stage += w * _conv_power(v.v, k - 1)
    lam_stage = np.zeros(v.m)
    for k, w in e.lam:
        lam_stage += w * rho_stage ** (k - 1)
    return CbVector(np.minimum(1.0, v0.v * lam_stage))


def zm_iterate(v0: CbVector, e: DegreeEnsemble,
               limits: IterationLimits | None = None):
    """Iterate the vector bound from v = v0.

    Returns (verdict, trajectory) where verdict is "decodable" once
    max_{x != 0} v[x] < decode_eps (pairwise errors then vanish),
    "not-decodable" on a stall, "inconclusive" at max_iter.
    """
    if v0.v.max() > 1.0 + 1e-9:
        raise ValueError("initial CB vector entries must lie in [0, 1]")
    limits = limits or IterationLimits()
    v = v0
    trajectory = [ZmBoundState(v, 0)]
    prev = v.max_off_zero()
    for it in range(1, limits.max_iter + 1):
        v = zm_bound_step(v, v0, e)
        trajectory.append(ZmBoundState(v, it))
        mu = v.max_off_zero()
        if mu < limits.decode_eps:
            return "decodable", trajectory
        if abs(mu - prev) < limits.stall_eps:
            return "not-decodable", trajectory
        prev = mu
    return "inconclusive", trajectory


def sufficient_stability(e: DegreeEnsemble, v: CbVector) -> bool:
    """True iff lambda_2 rho'(1) v[x] < 1 for every x != 0 (code is stable)."""
    coef = lambda2(e) * rho_prime1(e)
    return bool(np.all(coef * v.v[1:] < 1.0))


def necessary_stability_violated(e: DegreeEnsemble, v: CbVector) -> bool:
    """True iff some x != 0 has lambda_2 rho'(1) v[x] > 1 (error floor certain)."""
    coef = lambda2(e) * rho_prime1(e)
    return bool(np.any(coef * v.v[1:] > 1.0))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def gfq_stability(e: DegreeEnsemble, v: CbVector, q: int):
    """GF(q) stability pair: both predicates on the off-zero average.

    Uniform nonzero edge weights average the pairwise error pattern, so the
    scalar (sum_{x != 0} v[x]) / (q - 1) replaces each individual entry.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if v.m != q:
        raise ValueError(f"CB vector has m={v.m}, expected q={q}")
    coef = lambda2(e) * rho_prime1(e)
    avg = float(v.v[1:].sum()) / (q - 1)
    return coef * avg < 1.0, coef * avg > 1.0


def convergence_rate(e: DegreeEnsemble, v0: CbVector) -> float:
    """Asymptotic per-iteration contraction factor near the zero fixed point:
    lambda_2 rho'(1) max_{x != 0} v0[x] (zero means superexponential decay)."""
    return lambda2(e) * rho_prime1(e) * v0.max_off_zero()
