"""Threshold searches and decodable-region sweeps.

Bisection assumes the decodability verdict is monotone in the channel
parameter (every supported family's noise measures increase with it); the
assumption is checked at the initial bracket and a violation raises
``NonMonotoneError`` instead of silently bisecting.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import de as de_mod
from .binary_bounds import (IterationLimits, iterate_bound, ub_sb_star)
from .channels import (CHANNEL_FAMILIES, NoisePair, cb_of, sb_of)
from .de import DeConfig
from .ensembles import DegreeEnsemble

__all__ = [
    "SEARCH_BOUNDS", "ThresholdResult", "RegionGrid", "NonMonotoneError",
    "measure_threshold", "channel_threshold", "region_sweep",
]

SEARCH_BOUNDS = ("ub-cb", "lb-cb", "ub-sb", "ub-cbsb", "ub-sb-star", "de")
DEFAULT_BISECT_STEPS = 24


class NonMonotoneError(RuntimeError):
    """Decodability verdicts do not straddle at the bisection bracket."""

    def __init__(self, family: str, lo, hi, lo_ok: bool, hi_ok: bool):
        if not lo_ok and not hi_ok:
            detail = ("no decodable parameter in the bracket; the bound "
                      "certifies nothing for this family (ensembles with "
                      "lambda_2 rho'(1) >= 1 defeat the SB-based recursions)")
        elif lo_ok and hi_ok:
            detail = "the entire bracket is decodable"
        else:
            detail = "verdicts are non-monotone in the parameter"
        super().__init__(
            f"{detail} for {family}: decodable({lo})={lo_ok}, "
            f"decodable({hi})={hi_ok}")
        self.brackets = (lo, hi)
        self.verdicts = (lo_ok, hi_ok)


@dataclass(frozen=True)
class ThresholdResult:
    parameter: str
    lo: float
    hi: float
    value: float
    source: str
    iterations: int

    def to_dict(self) -> dict:
        return {
            "schema": "bpbounds.threshold/1",
            "parameter": self.parameter,
            "lo": self.lo,
            "hi": self.hi,
            "value": self.value,
            "source": self.source,
            "iterations": self.iterations,
        }


@dataclass
class RegionGrid:
    """Decodable-region sample: feasible (cb, sb) points with verdicts.

    Points are certified-decodable by the two-dimensional bound; a False
    entry means "not certified", never "proved undecodable".
    """
    points: list           # of (cb, sb, decodable, iterations)
    overlays: dict         # ub_cb / ub_sb / ub_sb_star lines

    def to_csv(self, fh) -> None:
        fh.write("cb,sb,decodable,iterations\n")
        for cb, sb, dec, it in self.points:
            fh.write(f"{cb:.12g},{sb:.12g},{int(dec)},{it}\n")

    def overlays_json(self) -> str:
        return json.dumps({"schema": "bpbounds.region-overlays/1", **self.overlays},
                          sort_keys=True)


def _steps_for(lo: float, hi: float, tol: float | None) -> int:
    if tol is None:
        return DEFAULT_BISECT_STEPS
    if tol <= 0:
        raise ValueError("tol must be positive")
    steps = 1
    width = hi - lo
    while width > tol and steps < 60:
        width *= 0.5
        steps += 1
    return steps


def _bound_decodable(kind: str, cb: float | None, sb: float | None,
                     e: DegreeEnsemble, limits: IterationLimits) -> tuple:
    traj = iterate_bound(kind, NoisePair(cb=cb, sb=sb), e, limits)
    return traj.verdict == "decodable", traj.iterations


def measure_threshold(kind: str, e: DegreeEnsemble, tol: float | None = 2e-5,
                      limits: IterationLimits | None = None,
                      de_config: DeConfig | None = None) -> float:
    """Supremum of the scalar channel measure the bound still decodes.

    CB for ub-cb/lb-cb, SB for ub-sb; ub-sb-star returns 4 p*(1-p*) with p*
    the DE threshold of the BSC family.
    """
    limits = limits or IterationLimits()
    if kind == "ub-sb-star":
        p_star, _, _ = de_mod.de_threshold(CHANNEL_FAMILIES["bsc"], e,
                                           de_config or DeConfig())
        return ub_sb_star(p_star)
    if kind not in ("ub-cb", "lb-cb", "ub-sb"):
        raise ValueError(f"measure_threshold does not support kind {kind!r}")
    lo, hi = 0.0, 1.0
    for _ in range(_steps_for(lo, hi, tol)):
        mid = 0.5 * (lo + hi)
        if kind == "ub-sb":
            ok, _ = _bound_decodable(kind, None, mid, e, limits)
        else:
            ok, _ = _bound_decodable(kind, mid, None, e, limits)
        if ok:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _channel_verdict(kind: str, family, theta: float, e: DegreeEnsemble,
                     limits: IterationLimits, sb_star: float | None):
    ch = family.build(theta)
    if kind == "ub-sb-star":
        return sb_of(ch) <= sb_star, 0
    if kind == "ub-cb" or kind == "lb-cb":
        return _bound_decodable(kind, cb_of(ch), None, e, limits)
    if kind == "ub-sb":
        return _bound_decodable(kind, None, sb_of(ch), e, limits)
    if kind == "ub-cbsb":
        return _bound_decodable(kind, cb_of(ch), sb_of(ch), e, limits)
    raise ValueError(f"unknown bound kind {kind!r}")


def channel_threshold(kind: str, family_name: str, e: DegreeEnsemble,
                      tol: float | None = None,
                      limits: IterationLimits | None = None,
                      de_config: DeConfig | None = None,
                      p_star: float | None = None) -> ThresholdResult:
    """Bisect the channel-family parameter against a bound's verdict.

    Per probe the channel's noise measures are evaluated and the selected
    recursion run.  ``kind`` "de" delegates to the sampled-DE oracle;
    "ub-sb-star" compares the channel SB against 4 p*(1-p*), computing p*
    by DE when not supplied.  Note that "lb-cb" yields an *outer* bound:
    parameters above its threshold are certainly undecodable, but nothing
    below it is certified.
    """
    if kind not in SEARCH_BOUNDS:
        raise ValueError(f"unknown bound kind {kind!r}; expected one of {SEARCH_BOUNDS}")
    family = CHANNEL_FAMILIES[family_name]
    limits = limits or IterationLimits()
    lo, hi = family.lo, family.hi

    if kind == "de":
        cfg = de_config or DeConfig()
        steps = 13
        value, blo, bhi = de_mod.de_threshold(family, e, cfg, steps=steps)
        return ThresholdResult(family.param, blo, bhi, value, "de", steps)

    sb_star = None
    if kind == "ub-sb-star":
        if p_star is None:
            p_star, _, _ = de_mod.de_threshold(CHANNEL_FAMILIES["bsc"], e,
                                               de_config or DeConfig())
        sb_star = ub_sb_star(p_star)

    lo_ok, _ = _channel_verdict(kind, family, max(lo, 1e-9), e, limits, sb_star)
    hi_ok, _ = _channel_verdict(kind, family, hi, e, limits, sb_star)
    if not lo_ok or hi_ok:
        raise NonMonotoneError(family_name, lo, hi, lo_ok, hi_ok)

    iterations = 0
    for _ in range(_steps_for(lo, hi, tol)):
        mid = 0.5 * (lo + hi)
        ok, its = _channel_verdict(kind, family, mid, e, limits, sb_star)
        iterations += 1
        if ok:
            lo = mid
        else:
            hi = mid
    return ThresholdResult(family.param, lo, hi, 0.5 * (lo + hi), kind, iterations)


# ---------------------------------------------------------------------------
# decodable-region sweep
# ---------------------------------------------------------------------------

def _region_point(args):
    cb, sb, e, limits = args
    ok, its = _bound_decodable("ub-cbsb", cb, sb, e, limits)
    return cb, sb, ok, its


def region_sweep(e: DegreeEnsemble, n_cb: int, n_sb: int,
                 limits: IterationLimits | None = None,
                 p_star: float | None = None,
                 de_config: DeConfig | None = None,
                 jobs: int = 1) -> RegionGrid:
    """Verdict of the two-dimensional bound on a feasible (cb, sb) grid.

    For each of n_cb values of cb the feasible band sb in [cb^2, cb] is
    sampled at n_sb points.  Overlay lines carry the one-dimensional
    thresholds; ub_sb_star uses the supplied p_star or runs the DE oracle.
    """
    if n_cb < 2 or n_sb < 2:
        raise ValueError("grid counts must be >= 2")
    limits = limits or IterationLimits()
    tasks = []
    for i in range(n_cb):
        cb = i / (n_cb - 1)
        for j in range(n_sb):
            sb = cb * cb + (cb - cb * cb) * j / (n_sb - 1)
            tasks.append((cb, sb, e, limits))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            points = list(pool.map(_region_point, tasks, chunksize=8))
    else:
        points = [_region_point(t) for t in tasks]

    if p_star is None:
        p_star, _, _ = de_mod.de_threshold(CHANNEL_FAMILIES["bsc"], e,
                                           de_config or DeConfig())
    overlays = {
        "ub_cb": measure_threshold("ub-cb", e, limits=limits),
        "ub_sb": measure_threshold("ub-sb", e, limits=limits),
        "ub_sb_star": ub_sb_star(p_star),
    }
    return RegionGrid(points=points, overlays=overlays)
