"""Edge-perspective degree distributions (lambda, rho) of LDPC ensembles.

lambda_k (rho_k) is the fraction of edges attached to variable (check) nodes
of degree k, and lambda(x) = sum_k lambda_k x^(k-1), likewise rho.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

__all__ = [
    "DegreeEnsemble", "regular_ensemble", "lambda_eval", "rho_eval",
    "lambda2", "rho_prime1", "design_rate", "ensemble_from_json",
    "ensemble_to_json",
]

MASS_TOL = 1e-12
JSON_MASS_TOL = 1e-9
MAX_DEGREE = 10_000     # enumeration kernels elsewhere need bounded degree


def _validated_pairs(pairs, side: str):
    pairs = tuple((int(k), float(w)) for k, w in pairs)
    if not pairs:
        raise ValueError(f"{side} distribution is empty")
    degrees = [k for k, _ in pairs]
    if len(set(degrees)) != len(degrees):
        raise ValueError(f"{side} degrees must be distinct")
    if any(k < 2 for k in degrees):
        raise ValueError(f"{side} degrees must be >= 2")
    if any(k > MAX_DEGREE for k in degrees):
        raise ValueError(f"{side} degree exceeds the supported maximum {MAX_DEGREE}")
    if any(w < 0.0 for _, w in pairs):
        raise ValueError(f"{side} masses must be nonnegative")
    total = sum(w for _, w in pairs)
    if abs(total - 1.0) > MASS_TOL:
        raise ValueError(f"{side} masses must sum to 1 within {MASS_TOL}")
    return tuple(sorted((k, w / total) for k, w in pairs))


@dataclass(frozen=True)
class DegreeEnsemble:
    """Sparse (degree, mass) pairs for the lambda and rho edge polynomials."""
    lam: tuple   # of (degree, mass)
    rho: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", _validated_pairs(self.lam, "lambda"))
        object.__setattr__(self, "rho", _validated_pairs(self.rho, "rho"))


def regular_ensemble(dv: int, dc: int) -> DegreeEnsemble:
    """The regular (dv, dc) ensemble: lambda(x) = x^(dv-1), rho(x) = x^(dc-1)."""
    return DegreeEnsemble(((dv, 1.0),), ((dc, 1.0),))


def lambda_eval(e: DegreeEnsemble, x: float) -> float:
    return sum(w * x ** (k - 1) for k, w in e.lam)


def rho_eval(e: DegreeEnsemble, x: float) -> float:
    return sum(w * x ** (k - 1) for k, w in e.rho)


def lambda2(e: DegreeEnsemble) -> float:
    """Mass of degree-2 variable nodes (drives the stability condition)."""
    return next((w for k, w in e.lam if k == 2), 0.0)


def rho_prime1(e: DegreeEnsemble) -> float:
    """rho'(1) = sum_k rho_k (k - 1)."""
    return sum(w * (k - 1) for k, w in e.rho)


def design_rate(e: DegreeEnsemble) -> float:
    """1 - (sum rho_k / k) / (sum lambda_k / k)."""
    return 1.0 - sum(w / k for k, w in e.rho) / sum(w / k for k, w in e.lam)


def ensemble_from_json(text: str) -> DegreeEnsemble:
    """Parse {"lambda": [[deg, mass], ...], "rho": [...]}; masses to 1 +- 1e-9."""
    data = json.loads(text)
    for side in ("lambda", "rho"):
        if side not in data:
            raise ValueError(f"ensemble JSON is missing the {side!r} key")
        total = sum(w for _, w in data[side])
        if abs(total - 1.0) > JSON_MASS_TOL:
            raise ValueError(f"{side} masses sum to {total}, expected 1 +- {JSON_MASS_TOL}")
        data[side] = [(k, w / total) for k, w in data[side]]
    return DegreeEnsemble(tuple(map(tuple, data["lambda"])),
                          tuple(map(tuple, data["rho"])))


def ensemble_to_json(e: DegreeEnsemble) -> str:
    return json.dumps({"lambda": [list(p) for p in e.lam],
                       "rho": [list(p) for p in e.rho]})
