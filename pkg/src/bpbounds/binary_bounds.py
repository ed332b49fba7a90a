"""Iterative and non-iterative decodability bounds for binary LDPC ensembles.

All bounds track scalar noise measures of the depth-2l support tree channel
and certify decodability when the tracked measure is driven to zero:

* ``ub_cb_step``   -- CB upper bound (check inputs replaced by BECs); valid
  for non-symmetric binary channels as well via the reverse-channel view.
* ``lb_cb_step``   -- CB lower bound (check inputs replaced by BSCs).
* ``ub_sb_step``   -- SB upper bound (BEC check stage, BSC variable stage).
* ``two_dim_check_step`` / ``two_dim_var_step`` -- the joint (CB, SB) upper
  bound built from the moment-constrained extremal families.
* ``ub_sb_star``   -- non-iterative bound: any BI-SO channel whose SB does
  not exceed that of a decodable BSC is itself decodable.

The two-dimensional step output is projected back onto the feasible
region SB <= CB <= sqrt(SB).  The projection keeps a valid bound: the true
pair satisfies those inequalities, so min(sb, cb) still dominates the true
SB and min(cb, sqrt(sb)) the true CB.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .channels import BscMixture, NoisePair
from .ensembles import DegreeEnsemble, lambda_eval, rho_eval
from .extremal import AtomicBscFamily, variable_node_upper_family

__all__ = [
    "BOUND_KINDS", "IterationLimits", "BoundTrajectory",
    "cb_check_bec", "cb_check_bsc", "cb_var",
    "ub_cb_step", "lb_cb_step", "sb_of_bsc_combination", "ub_sb_step",
    "two_dim_check_step", "phi_variable_sb", "two_dim_var_step",
    "iterate_bound", "ub_sb_star",
    "SequenceMapperChannel", "sequence_mapper_cb",
    "sb_matched_bsc_replacement",
]

BOUND_KINDS = ("ub-cb", "lb-cb", "ub-sb", "ub-cbsb")

ENUM_CAP = 20            # exact 2^d sign-pattern enumeration up to this many inputs
PRODUCT_CAP = 100_000    # atom-product enumeration budget in phi_variable_sb
GRID_HALF = 40.0         # quantized-LLR fallback: grid on [-40, 40]
GRID_BINS = 1 << 14


@dataclass(frozen=True)
class IterationLimits:
    max_iter: int = 10_000
    decode_eps: float = 1e-10
    stall_eps: float = 1e-13

    def __post_init__(self):
        if self.max_iter <= 0 or self.decode_eps <= 0 or self.stall_eps <= 0:
            raise ValueError("iteration limits must be positive")


@dataclass
class BoundTrajectory:
    """States of one bound run; sb entries are None for CB-only bounds."""
    kind: str
    states: list          # of (cb | None, sb | None)
    verdict: str          # "decodable" | "not-decodable" | "inconclusive"
    iterations: int


# ---------------------------------------------------------------------------
# elementary transfer functions
# ---------------------------------------------------------------------------

def cb_check_bec(cbs) -> float:
    """Check-node CB when every input is a BEC: 1 - prod(1 - cb_i)."""
    out = 1.0
    for c in cbs:
        out *= 1.0 - c
    return 1.0 - out


def cb_check_bsc(cbs) -> float:
    """Check-node CB when every input is a BSC: sqrt(1 - prod(1 - cb_i^2))."""
    out = 1.0
    for c in cbs:
        out *= 1.0 - c * c
    return math.sqrt(max(0.0, 1.0 - out))


def cb_var(cbs) -> float:
    """Variable-node CB: plain product of the input CBs."""
    out = 1.0
    for c in cbs:
        out *= c
    return out


def ub_cb_step(cb: float, e: DegreeEnsemble, cb0: float) -> float:
    """One iteration of the CB upper bound: cb0 * lambda(1 - rho(1 - cb))."""
    return min(1.0, cb0 * lambda_eval(e, 1.0 - rho_eval(e, 1.0 - cb)))


def lb_cb_step(cb: float, e: DegreeEnsemble, cb0: float) -> float:
    """One iteration of the CB lower bound (BSC check replacement)."""
    inner = sum(w * math.sqrt(max(0.0, 1.0 - (1.0 - cb * cb) ** (k - 1)))
                for k, w in e.rho)
    return min(1.0, cb0 * lambda_eval(e, inner))


# ---------------------------------------------------------------------------
# exact SB of a variable-node combination of BSCs
# ---------------------------------------------------------------------------

def _bsc_llr(a: float):
    """(P(sign=-1 | X=0), |LLR|) of a BSC with index a = 2 sqrt(p(1-p))."""
    s = math.sqrt(max(0.0, (1.0 - a) * (1.0 + a)))
    p = (1.0 - s) / 2.0
    mag = 2.0 * math.log((1.0 + s) / a)    # = log((1-p)/p), stable for tiny a
    return p, mag


def sb_of_bsc_combination(avals, enum_cap: int = ENUM_CAP) -> float:
    """SB of a variable node whose inputs are BSCs with indices ``avals``.

    The output LLR is the sum of the input LLRs +-log((1-p_i)/p_i); for up to
    ``enum_cap`` inputs all 2^d sign patterns are enumerated exactly and
    SB = sum_patterns Pr(pattern | X=0) * 2 / (1 + e^sum).  Beyond the cap a
    quantized-density convolution takes over.  A perfect input (a = 0) forces
    SB = 0; a useless input (a = 1) contributes LLR 0 and is dropped.
    """
    vals = [float(a) for a in avals if a < 1.0]
    if any(a <= 0.0 for a in vals):
        return 0.0
    if not vals:
        return 1.0
    if len(vals) > enum_cap:
        dens = [_spike_density(a) for a in vals]
        return _sb_of_density(_convolve_densities(dens))
    if len(vals) <= 4:
        # scalar fast path; the two-dimensional iteration lives here
        pm = [_bsc_llr(a) for a in vals]
        total = 0.0
        for signs in itertools.product((0, 1), repeat=len(pm)):
            w = 1.0
            m = 0.0
            for (p, mag), s in zip(pm, signs):
                if s:
                    w *= p
                    m -= mag
                else:
                    w *= 1.0 - p
                    m += mag
            if m < 700.0:
                total += w * 2.0 / (1.0 + math.exp(m))
        return total
    weights = np.array([1.0])
    llrs = np.array([0.0])
    for a in vals:
        p, mag = _bsc_llr(a)
        weights = np.concatenate([weights * (1.0 - p), weights * p])
        llrs = np.concatenate([llrs + mag, llrs - mag])
    with np.errstate(over="ignore"):
        return float(np.sum(weights * 2.0 / (1.0 + np.exp(llrs))))


def _spike_density(a: float) -> np.ndarray:
    """Two-spike LLR density of a BSC on the quantized grid."""
    dens = np.zeros(GRID_BINS + 1)
    half = GRID_BINS // 2
    if a <= 0.0:
        dens[-1] = 1.0
        return dens
    p, mag = _bsc_llr(a)
    step = GRID_HALF / half
    idx = min(half, int(round(mag / step)))
    dens[half + idx] += 1.0 - p
    dens[half - idx] += p
    return dens


def _family_density(fam: AtomicBscFamily) -> np.ndarray:
    dens = np.zeros(GRID_BINS + 1)
    for w, a in fam.atoms:
        dens += w * _spike_density(a)
    return dens


def _convolve_densities(densities) -> np.ndarray:
    from scipy.signal import fftconvolve

    half = GRID_BINS // 2
    out = densities[0]
    for d in densities[1:]:
        full = fftconvolve(out, d)
        # index offsets add; fold saturated tails into the boundary bins
        center = (full.size - 1) // 2
        out = full[center - half:center + half + 1].copy()
        out[0] += full[:center - half].sum()
        out[-1] += full[center + half + 1:].sum()
        out = np.clip(out, 0.0, None)
    return out


def _sb_of_density(dens: np.ndarray) -> float:
    half = GRID_BINS // 2
    grid = (np.arange(GRID_BINS + 1) - half) * (GRID_HALF / half)
    with np.errstate(over="ignore"):
        return float(np.sum(dens * 2.0 / (1.0 + np.exp(grid))))


def ub_sb_step(sb: float, e: DegreeEnsemble, sb0: float) -> float:
    """One iteration of the SB upper bound.

    Check stage: inputs replaced by BECs of equal SB, giving u = 1 - rho(1-sb).
    Variable stage: channel and check outputs replaced by BSCs of equal SB,
    combined exactly.
    """
    u = 1.0 - rho_eval(e, 1.0 - sb)
    a_ch = math.sqrt(max(0.0, sb0))
    a_in = math.sqrt(max(0.0, u))
    out = sum(w * sb_of_bsc_combination([a_ch] + [a_in] * (k - 1))
              for k, w in e.lam)
    return min(1.0, out)


# ---------------------------------------------------------------------------
# the two-dimensional (CB, SB) upper bound
# ---------------------------------------------------------------------------

def _project_feasible(cb: float, sb: float):
    # inward projection onto SB <= CB <= sqrt(SB); see module docstring
    cb = min(1.0, max(0.0, cb))
    sb = min(1.0, max(0.0, sb))
    sb = min(sb, cb)
    cb = min(cb, math.sqrt(sb))
    return cb, sb


def two_dim_check_step(pair: NoisePair, e: DegreeEnsemble) -> NoisePair:
    """Joint check-node step: SB via BEC replacement, CB via the two-atom
    moment-matched maximizer (a binomial average of BSC check combinations)."""
    cb, sb = pair.cb, pair.sb
    if cb is None or sb is None:
        raise ValueError("two_dim_check_step needs a full NoisePair")
    if cb <= 0.0 or sb <= 0.0:
        return NoisePair(0.0, 0.0)
    sbp = 1.0 - rho_eval(e, 1.0 - sb)
    if sb <= cb * cb * (1.0 + 1e-13):
        # BSC-consistent input: the mixture collapses to the single BSC
        cbp = sum(w * math.sqrt(max(0.0, 1.0 - (1.0 - cb * cb) ** (k - 1)))
                  for k, w in e.rho)
    else:
        t2 = min(1.0, (sb / cb) ** 2)
        q = min(1.0, cb * cb / sb)       # probability an input atom is active
        cbp = 0.0
        for k, w in e.rho:
            acc = 0.0
            for i in range(1, k):
                acc += (math.comb(k - 1, i)
                        * math.sqrt(max(0.0, 1.0 - (1.0 - t2) ** i))
                        * (1.0 - q) ** (k - 1 - i) * q ** i)
            cbp += w * acc
    cbp, sbp = _project_feasible(cbp, sbp)
    return NoisePair(cbp, sbp)


def phi_variable_sb(ch0: AtomicBscFamily, chin: AtomicBscFamily,
                    d_minus_1: int, product_cap: int = PRODUCT_CAP) -> float:
    """SB of a variable node fed by one ch0 draw and d_minus_1 chin draws.

    Exact product enumeration over atom selections while the number of terms
    stays below ``product_cap``; otherwise the atom families are turned into
    quantized LLR densities and convolved.
    """
    if d_minus_1 < 0:
        raise ValueError("d_minus_1 must be >= 0")
    if d_minus_1 == 0:
        return ch0.moment_a2()        # SB of a BSC mixture is E[a^2]
    n_terms = len(ch0.atoms) * len(chin.atoms) ** d_minus_1
    if n_terms <= product_cap and d_minus_1 + 1 <= ENUM_CAP:
        out = 0.0
        for picks in itertools.product(chin.atoms, repeat=d_minus_1):
            w_in = 1.0
            for w, _ in picks:
                w_in *= w
            chosen = [a for _, a in picks]
            for w0, a0 in ch0.atoms:
                out += w_in * w0 * sb_of_bsc_combination([a0] + chosen)
        return out
    dens = [_family_density(ch0)] + [_family_density(chin)] * d_minus_1
    return _sb_of_density(_convolve_densities(dens))


def two_dim_var_step(pair0: NoisePair, pair: NoisePair, e: DegreeEnsemble,
                     fam0: AtomicBscFamily | None = None) -> NoisePair:
    """Joint variable-node step.

    CB multiplies (BSC replacement is exact there); SB is bounded through the
    three-atom upper families for both the channel and the incoming messages.
    The degree average uses lambda_k, since variable-node degrees follow
    lambda.
    """
    cb0, sb0 = pair0.cb, pair0.sb
    cb, sb = pair.cb, pair.sb
    if None in (cb0, sb0, cb, sb):
        raise ValueError("two_dim_var_step needs full NoisePairs")
    if cb <= 0.0 and sb <= 0.0:
        return NoisePair(0.0, 0.0)
    cbp = cb0 * lambda_eval(e, cb)
    if fam0 is None:
        fam0 = variable_node_upper_family(cb0, sb0)
    famin = variable_node_upper_family(cb, sb)
    sbp = sum(w * phi_variable_sb(fam0, famin, k - 1) for k, w in e.lam)
    cbp, sbp = _project_feasible(cbp, sbp)
    return NoisePair(cbp, sbp)


# ---------------------------------------------------------------------------
# the iteration driver
# ---------------------------------------------------------------------------

def iterate_bound(kind: str, start: NoisePair, e: DegreeEnsemble,
                  limits: IterationLimits | None = None) -> BoundTrajectory:
    """Run a bound recursion from the uncoded channel's noise measures.

    Decodable once the tracked measure drops below ``decode_eps``;
    not-decodable when successive iterates change by less than ``stall_eps``
    while still above it; inconclusive at ``max_iter``.
    """
    if kind not in BOUND_KINDS:
        raise ValueError(f"unknown bound kind {kind!r}; expected one of {BOUND_KINDS}")
    limits = limits or IterationLimits()

    if kind in ("ub-cb", "lb-cb"):
        if start.cb is None:
            raise ValueError(f"{kind} needs start.cb")
        step = ub_cb_step if kind == "ub-cb" else lb_cb_step
        x0 = x = start.cb
        states = [(x, None)]
        for it in range(1, limits.max_iter + 1):
            xn = step(x, e, x0)
            states.append((xn, None))
            if xn < limits.decode_eps:
                return BoundTrajectory(kind, states, "decodable", it)
            if abs(xn - x) < limits.stall_eps:
                return BoundTrajectory(kind, states, "not-decodable", it)
            x = xn
        return BoundTrajectory(kind, states, "inconclusive", limits.max_iter)

    if kind == "ub-sb":
        if start.sb is None:
            raise ValueError("ub-sb needs start.sb")
        s0 = s = start.sb
        states = [(None, s)]
        for it in range(1, limits.max_iter + 1):
            sn = ub_sb_step(s, e, s0)
            states.append((None, sn))
            if sn < limits.decode_eps:
                return BoundTrajectory(kind, states, "decodable", it)
            if abs(sn - s) < limits.stall_eps:
                return BoundTrajectory(kind, states, "not-decodable", it)
            s = sn
        return BoundTrajectory(kind, states, "inconclusive", limits.max_iter)

    # ub-cbsb
    if start.cb is None or start.sb is None:
        raise ValueError("ub-cbsb needs a full NoisePair start")
    pair0 = start
    fam0 = variable_node_upper_family(pair0.cb, pair0.sb)
    pair = start
    states = [(pair.cb, pair.sb)]
    mu_prev = None
    for it in range(1, limits.max_iter + 1):
        chk = two_dim_check_step(pair, e)
        pair = two_dim_var_step(pair0, chk, e, fam0)
        states.append((pair.cb, pair.sb))
        mu = max(pair.cb, pair.sb)
        if mu < limits.decode_eps:
            return BoundTrajectory(kind, states, "decodable", it)
        if mu_prev is not None and abs(mu - mu_prev) < limits.stall_eps:
            return BoundTrajectory(kind, states, "not-decodable", it)
        mu_prev = mu
    return BoundTrajectory(kind, states, "inconclusive", limits.max_iter)


def ub_sb_star(p_star: float) -> float:
    """Non-iterative SB threshold from a decodable BSC crossover p_star.

    Every BI-SO channel with SB <= 4 p* (1 - p*) is certified decodable by
    the same ensemble.
    """
    if not 0.0 <= p_star <= 0.5:
        raise ValueError("p_star must lie in [0, 1/2]")
    return 4.0 * p_star * (1.0 - p_star)


# ---------------------------------------------------------------------------
# exact CB of a small bit-to-sequence channel, and the SB-matched replacement
# ---------------------------------------------------------------------------

MAX_COORDS = 12
MAX_ATOMS = 3
MAX_OUTPUT_CELLS = 1 << 21


@dataclass(frozen=True)
class SequenceMapperChannel:
    """A bit X mapped (possibly randomly) to a word, sent over per-coordinate
    BSC mixtures whose mixture labels are observed.

    ``words0``/``words1`` list (probability, bit-tuple) branches given X = 0
    and X = 1; the prior on X may be non-uniform.
    """
    prior0: float
    words0: tuple          # of (prob, word tuple)
    words1: tuple
    coords: tuple          # of BscMixture

    def __post_init__(self):
        if not 0.0 < self.prior0 < 1.0:
            raise ValueError("prior0 must lie strictly inside (0, 1)")
        n = len(self.coords)
        if n == 0 or n > MAX_COORDS:
            raise ValueError(f"need between 1 and {MAX_COORDS} coordinates")
        if any(len(c.atoms) > MAX_ATOMS for c in self.coords):
            raise ValueError(f"coordinate mixtures may have at most {MAX_ATOMS} atoms")
        cells = 1
        for c in self.coords:
            cells *= 2 * len(c.atoms)
        if cells > MAX_OUTPUT_CELLS:
            raise ValueError("instance too large for exact output enumeration")
        for words in (self.words0, self.words1):
            if abs(sum(p for p, _ in words) - 1.0) > 1e-12:
                raise ValueError("branch probabilities must sum to 1")
            if any(len(word) != n for _, word in words):
                raise ValueError("every word must have one bit per coordinate")


def _joint_output_weights(ch: SequenceMapperChannel, words) -> np.ndarray:
    """P(output cell | X) over the product space of (bit, atom) observations."""
    shapes = [2 * len(c.atoms) for c in ch.coords]
    acc = np.zeros(shapes) if len(shapes) > 1 else np.zeros(shapes[0])
    for prob, word in words:
        factor = np.array([1.0])
        for bit, mixture in zip(word, ch.coords):
            lik = []
            for w, p in mixture.atoms:
                # output cells ordered (atom, z=bit-received): z == sent w.p. 1-p
                lik.append(w * ((1.0 - p) if bit == 0 else p))       # z = 0
                lik.append(w * (p if bit == 0 else (1.0 - p)))       # z = 1
            factor = np.multiply.outer(factor, np.array(lik))
        acc = acc + prob * factor.reshape(acc.shape)
    return acc


def sequence_mapper_cb(ch: SequenceMapperChannel) -> float:
    """Exact CB = 2 sum_y sqrt(P(X=0, y) P(X=1, y)) by output enumeration."""
    a0 = _joint_output_weights(ch, ch.words0)
    a1 = _joint_output_weights(ch, ch.words1)
    return float(2.0 * math.sqrt(ch.prior0 * (1.0 - ch.prior0))
                 * np.sum(np.sqrt(a0 * a1)))


def sb_matched_bsc_replacement(ch: SequenceMapperChannel, coord: int = 0):
    """Replace one coordinate's mixture by the BSC matching E[4p(1-p)].

    Returns (cb_before, cb_after); the replacement never decreases the exact
    CB of the bit-to-sequence channel, for uniform or non-uniform priors.
    """
    mixture = ch.coords[coord]
    beta = sum(w * 4.0 * p * (1.0 - p) for w, p in mixture.atoms)
    p_match = (1.0 - math.sqrt(max(0.0, 1.0 - beta))) / 2.0
    replaced = list(ch.coords)
    replaced[coord] = BscMixture(((1.0, p_match),))
    after = SequenceMapperChannel(ch.prior0, ch.words0, ch.words1, tuple(replaced))
    return sequence_mapper_cb(ch), sequence_mapper_cb(after)
