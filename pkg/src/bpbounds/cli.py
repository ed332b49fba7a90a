"""Command-line surface: measures | threshold | region | zm | decompose | de.

Single results are printed as JSON (with a "schema" field), grids are written
as CSV with a JSON overlay sidecar.  Every command is deterministic given its
flags and seed.

Exit codes: 0 success, 2 parse error, 3 non-monotone verdicts,
4 unwritable output path, 5 symmetry violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .binary_bounds import IterationLimits
from .channels import (CHANNEL_FAMILIES, ChannelSpecError, MscChannel,
                       MscMixture, NotSymmetricError,
                       UnsupportedChannelError, cb_of, cb_vector_of,
                       cutoff_rate, msc_pe, parse_channel_spec, pe_of, sb_of,
                       symmetrize, msc_decompose)
from .de import DeConfig
from .ensembles import DegreeEnsemble, ensemble_from_json, regular_ensemble
from .search import (NonMonotoneError, SEARCH_BOUNDS, channel_threshold,
                     region_sweep)
from .zm import (convergence_rate, necessary_stability_violated,
                 sufficient_stability, zm_iterate)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NON_MONOTONE = 3
EXIT_UNWRITABLE = 4
EXIT_NOT_SYMMETRIC = 5


def _emit(payload: dict, out_path: str | None) -> int:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out_path:
        try:
            with open(out_path, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"cannot write {out_path}: {exc}", file=sys.stderr)
            return EXIT_UNWRITABLE
    else:
        print(text)
    return EXIT_OK


def _load_ensemble(args) -> DegreeEnsemble:
    if args.ensemble is None:
        return regular_ensemble(3, 6)
    with open(args.ensemble) as fh:
        return ensemble_from_json(fh.read())


def _limits(args) -> IterationLimits:
    return IterationLimits(max_iter=args.max_iter)


def cmd_measures(args) -> int:
    ch = parse_channel_spec(args.channel)
    if isinstance(ch, (MscChannel, MscMixture)):
        vec = cb_vector_of(ch)
        payload = {
            "schema": "bpbounds.measures/1",
            "kind": "msc",
            "m": vec.m,
            "cb_vector": [float(x) for x in vec.v],
            "cutoff_rate": cutoff_rate(vec),
            "pe": msc_pe(ch),
        }
        return _emit(payload, args.out)
    cb = cb_of(ch)
    sb = sb_of(ch)
    try:
        pe = pe_of(ch)
    except UnsupportedChannelError:
        pe = None
    payload = {
        "schema": "bpbounds.measures/1",
        "kind": "binary",
        "channel": args.channel,
        "cb": cb,
        "sb": sb,
        "pe": pe,
        "measures_consistent": bool(sb <= cb + 1e-12 and cb * cb <= sb + 1e-12),
    }
    return _emit(payload, args.out)


def cmd_threshold(args) -> int:
    e = _load_ensemble(args)
    cfg = DeConfig(population_size=args.de_pop, seed=args.seed)
    result = channel_threshold(args.bound, args.family, e, tol=args.tol,
                               limits=_limits(args), de_config=cfg,
                               p_star=args.p_star)
    payload = result.to_dict()
    payload.update({"bound": args.bound, "family": args.family,
                    "ensemble": args.ensemble or "regular(3,6)"})
    return _emit(payload, args.out)


def cmd_region(args) -> int:
    e = _load_ensemble(args)
    try:
        n_cb, n_sb = (int(v) for v in args.grid.lower().split("x"))
    except ValueError:
        print(f"--grid expects NxM, got {args.grid!r}", file=sys.stderr)
        return EXIT_PARSE
    cfg = DeConfig(population_size=args.de_pop, seed=args.seed)
    grid = region_sweep(e, n_cb, n_sb, limits=_limits(args),
                        p_star=args.p_star, de_config=cfg, jobs=args.jobs)
    try:
        with open(args.out, "w") as fh:
            grid.to_csv(fh)
        sidecar = args.out + ".overlays.json"
        with open(sidecar, "w") as fh:
            fh.write(grid.overlays_json() + "\n")
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    print(f"wrote {len(grid.points)} grid points to {args.out} "
          f"(overlays in {sidecar})")
    return EXIT_OK


def cmd_zm(args) -> int:
    e = _load_ensemble(args)
    ch = parse_channel_spec(args.channel)
    if not isinstance(ch, (MscChannel, MscMixture)):
        print("zm expects an msc: channel spec", file=sys.stderr)
        return EXIT_PARSE
    vec = cb_vector_of(ch)
    if args.action == "bound":
        verdict, traj = zm_iterate(vec, e, _limits(args))
        payload = {
            "schema": "bpbounds.zm-bound/1",
            "verdict": verdict,
            "iterations": traj[-1].iteration,
            "final_max_off_zero": traj[-1].v.max_off_zero(),
            "initial_cb_vector": [float(x) for x in vec.v],
        }
    else:
        payload = {
            "schema": "bpbounds.zm-stability/1",
            "sufficient": sufficient_stability(e, vec),
            "necessary_violated": necessary_stability_violated(e, vec),
            "convergence_rate": convergence_rate(e, vec),
        }
    return _emit(payload, args.out)


def cmd_decompose(args) -> int:
    with open(args.matrix) as fh:
        rows = json.load(fh)
    cond = np.asarray(rows, dtype=float)
    if args.symmetrize:
        mix = symmetrize(cond)
    else:
        if args.transform is None:
            print("--transform is required unless --symmetrize is given",
                  file=sys.stderr)
            return EXIT_PARSE
        transform = [int(v) for v in args.transform.split(",")]
        mix = msc_decompose(cond, transform)
    payload = {
        "schema": "bpbounds.decompose/1",
        "m": mix.m,
        "atoms": [{"weight": w, "p": [float(x) for x in ch.p]}
                  for w, ch in mix.atoms],
        "cb_vector": [float(x) for x in cb_vector_of(mix).v],
    }
    return _emit(payload, args.out)


def cmd_de(args) -> int:
    e = _load_ensemble(args)
    cfg = DeConfig(population_size=args.de_pop, seed=args.seed,
                   max_iter=args.max_iter)
    result = channel_threshold("de", args.family, e, de_config=cfg)
    payload = result.to_dict()
    payload.update({"bound": "de", "family": args.family, "seed": args.seed,
                    "population_size": args.de_pop,
                    "ensemble": args.ensemble or "regular(3,6)"})
    return _emit(payload, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bpbounds",
        description="Finite-dimensional bounds on BP decodable thresholds")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ensemble=True):
        if ensemble:
            p.add_argument("--ensemble", help="ensemble JSON file "
                           "(default: regular (3,6))")
        p.add_argument("--max-iter", type=int, default=10_000,
                       help="recursion iteration cap (default 10000)")
        p.add_argument("--seed", type=int, default=0,
                       help="RNG seed for DE runs (default 0)")
        p.add_argument("--out", help="write JSON here instead of stdout")

    p = sub.add_parser("measures", help="noise measures of a channel spec")
    p.add_argument("--channel", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("threshold", help="bisect a channel family against a bound")
    common(p)
    p.add_argument("--bound", required=True, choices=SEARCH_BOUNDS)
    p.add_argument("--family", required=True, choices=sorted(CHANNEL_FAMILIES))
    p.add_argument("--tol", type=float, default=None,
                   help="bracket width target (default: 24 bisection steps)")
    p.add_argument("--de-pop", type=int, default=200_000,
                   help="DE population size (default 200000)")
    p.add_argument("--p-star", type=float, default=None,
                   help="skip the DE run for ub-sb-star")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("region", help="decodable-region sweep to CSV")
    common(p, ensemble=True)
    p.add_argument("--grid", required=True, help="NxM grid counts")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--de-pop", type=int, default=200_000)
    p.add_argument("--p-star", type=float, default=None)
    p.set_defaults(func=cmd_region)
    # --out is required for region (CSV target)

    p = sub.add_parser("zm", help="Z_m vector bound or stability report")
    common(p)
    p.add_argument("--channel", required=True, help="msc:... spec")
    p.add_argument("--action", choices=("bound", "stability"), default="bound")
    p.set_defaults(func=cmd_zm)

    p = sub.add_parser("decompose", help="MSC decomposition of a matrix file")
    p.add_argument("--matrix", required=True, help="JSON file with P(y|x) rows")
    p.add_argument("--transform", help="comma-separated output permutation")
    p.add_argument("--symmetrize", action="store_true",
                   help="dither-symmetrize an arbitrary matrix first")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("de", help="sampled density-evolution threshold")
    common(p)
    p.add_argument("--family", required=True, choices=sorted(CHANNEL_FAMILIES))
    p.add_argument("--de-pop", type=int, default=200_000)
    p.set_defaults(func=cmd_de)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "region" and not args.out:
        print("region requires --out CSV path", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ChannelSpecError as exc:
        print(f"channel spec error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotSymmetricError as exc:
        print(f"not symmetric: {exc}", file=sys.stderr)
        return EXIT_NOT_SYMMETRIC
    except NonMonotoneError as exc:
        print(f"threshold search failed: {exc}", file=sys.stderr)
        return EXIT_NON_MONOTONE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
