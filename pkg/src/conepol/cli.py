"""Command-line interface.

Commands: charpoly, pol, certify, chow-verify, poset-check.  Rationals are
always serialized as p/q strings and subsets as sorted integer lists, so a
fixed config and seed produce byte-identical JSON.

Exit codes: 0 success/verified, 1 usage, 2 invalid input, 3 certification
or verification failed, 4 size guard.
"""

import argparse
import json
import sys

from . import chow, cone, intervalpoly, lorentz, matroid, poset, subsets
from .errors import ConepolError, InvalidParams, SizeLimitExceeded
from .multipoly import to_text
from .unipoly import is_log_concave

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_FAILED = 3
EXIT_SIZE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_matroid_args(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matroid", metavar="FILE", help="matroid JSON file")
    group.add_argument("--uniform", nargs=2, type=int, metavar=("R", "N"))
    group.add_argument("--graphic", metavar="FILE", help="edge-list JSON file")
    group.add_argument("--fano", action="store_true")


def _add_common_args(p):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--interval", nargs=2, metavar=("K", "L"),
                   help="comma-separated element lists; 'empty' for the bottom")


def load_matroid(args):
    if args.fano:
        return matroid.fano()
    if args.uniform is not None:
        r, n = args.uniform
        return matroid.uniform_matroid(r, n)
    if args.graphic is not None:
        with open(args.graphic) as fh:
            payload = json.load(fh)
        edges = payload["edges"] if isinstance(payload, dict) else payload
        return matroid.graphic_matroid([tuple(e) for e in edges])
    with open(args.matroid) as fh:
        payload = json.load(fh)
    return matroid_from_json(payload)


def matroid_from_json(payload):
    kind = payload.get("type")
    if kind == "uniform":
        return matroid.uniform_matroid(int(payload["r"]), int(payload["n"]))
    if kind == "graphic":
        return matroid.graphic_matroid([tuple(e) for e in payload["edges"]])
    if kind == "fano":
        return matroid.fano()
    if kind is not None:
        raise InvalidParams(f"unknown matroid type {kind!r}")
    n = int(payload["n"])
    labels = tuple(payload["labels"]) if "labels" in payload else None
    ground = matroid.GroundSet(n, labels)
    bases = [subsets.from_elements(b) for b in payload["bases"]]
    return matroid.Matroid(ground, set(bases))


def resolve_interval(args, lattice):
    if args.interval is None:
        return lattice.bottom, lattice.top
    K = subsets.parse_elements(args.interval[0])
    L = subsets.parse_elements(args.interval[1])
    if K not in lattice or L not in lattice:
        raise InvalidParams("interval endpoints must be flats of the matroid")
    if not subsets.is_proper_subset(K, L):
        raise InvalidParams("interval needs K strictly below L")
    return K, L


def _emit(args, text_lines, json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _poly_json(poly):
    return [str(c) for c in poly.coeffs_descending()]


def cmd_charpoly(args):
    M = load_matroid(args)
    chi = matroid.characteristic_polynomial(M)
    i = next(
        e for e in range(M.ground.n) if M.rank(1 << e) == 1
    )
    chibar = matroid.reduced_characteristic_polynomial(M, i)
    abs_coeffs = chibar.abs_coeffs_descending()
    concave = is_log_concave(abs_coeffs)
    _emit(
        args,
        [
            f"matroid: rank {M.rank_total}, {len(M.bases)} bases",
            f"chi(t)    = {chi}",
            f"chibar(t) = {chibar}",
            "abs coeffs (leading first): " + ", ".join(str(c) for c in abs_coeffs),
            f"log-concave: {str(concave).lower()}",
        ],
        {
            "rank": M.rank_total,
            "bases": len(M.bases),
            "chi": _poly_json(chi),
            "chibar": _poly_json(chibar),
            "abs_coeffs": [str(c) for c in abs_coeffs],
            "log_concave": concave,
        },
    )
    return EXIT_OK


def cmd_pol(args):
    M = load_matroid(args)
    lattice = matroid.flats_lattice(M)
    K, L = resolve_interval(args, lattice)
    f = intervalpoly.interval_polynomial(lattice, K, L)
    obj = {
        "interval": {"K": subsets.elements(K), "L": subsets.elements(L)},
        "degree": f.degree,
        "polynomial": to_text(f),
    }
    lines = [to_text(f)]
    if args.eval is not None:
        coords = cone.IntervalCoords(K, L)
        if args.eval == "alpha":
            point = cone.alpha_vector(coords)
        elif args.eval == "beta":
            point = cone.beta_vector(coords)
        else:
            with open(args.eval) as fh:
                point = cone.IntervalVector.from_json_obj(json.load(fh), coords)
        value = f.evaluate(point)
        obj["value"] = str(value)
        lines.append(f"value: {value}")
    _emit(args, lines, obj)
    return EXIT_OK


def _load_direction_tuples(path, coords):
    with open(path) as fh:
        payload = json.load(fh)
    tuples = payload["tuples"] if isinstance(payload, dict) else payload
    return [
        tuple(cone.IntervalVector.from_json_obj(v, coords) for v in tup)
        for tup in tuples
    ]


def cmd_certify(args):
    M = load_matroid(args)
    lattice = matroid.flats_lattice(M)
    K, L = resolve_interval(args, lattice)
    directions = None
    if args.directions is not None:
        coords = cone.IntervalCoords(K, L)
        directions = _load_direction_tuples(args.directions, coords)
    cert = lorentz.certify_cone_lorentzian(
        lattice, K, L, samples=args.samples, seed=args.seed, directions=directions
    )
    obj = cert.to_json_obj()
    lines = [
        "interval: [{{{}}}, {{{}}}], degree {}".format(
            subsets.format_elements(K), subsets.format_elements(L), cert.degree
        ),
        f"samples: {len(cert.samples)}",
        f"verdict: {str(cert.verdict).lower()}",
    ]
    if not cert.verdict:
        bad = next(i for i, s in enumerate(cert.samples) if not s.passed)
        lines.append(f"first failing tuple: {bad}")
    _emit(args, lines, obj)
    return EXIT_OK if cert.verdict else EXIT_FAILED


def cmd_chow_verify(args):
    M = load_matroid(args)
    lattice = matroid.flats_lattice(M)
    if args.all_intervals:
        pairs = [
            (K, L)
            for K, L in lattice.comparable_pairs()
            if lattice.interval_degree(K, L) <= args.max_degree
        ]
    else:
        pairs = [resolve_interval(args, lattice)]
    results = []
    lines = []
    all_ok = True
    for K, L in pairs:
        ring = chow.ChowRing(lattice, K, L)
        witness = chow.vol_pol_mismatch_witness(lattice, K, L)
        ok = witness is None
        all_ok = all_ok and ok
        entry = {
            "interval": {"K": subsets.elements(K), "L": subsets.elements(L)},
            "graded_dims": ring.graded_dims,
            "equal": ok,
        }
        if witness is not None:
            entry["witness"] = witness
        results.append(entry)
        lines.append(
            "[{}] vol == pol on [{{{}}}, {{{}}}], graded dims {}".format(
                "ok" if ok else "FAIL",
                subsets.format_elements(K),
                subsets.format_elements(L),
                ring.graded_dims,
            )
        )
    lines.append(f"verdict: {str(all_ok).lower()}")
    _emit(args, lines, {"intervals": results, "verdict": all_ok})
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_poset_check(args):
    M = load_matroid(args)
    lattice = matroid.flats_lattice(M)
    checks = {
        "flats_axioms": poset.flats_axioms_hold(lattice, lattice.top),
        "one_balanced": poset.is_one_balanced(lattice),
        "balanced": poset.is_balanced(lattice),
        "semimodular": poset.is_semimodular_lattice(lattice),
        "interval_connected": poset.is_interval_connected(lattice),
    }
    ok = all(checks.values())
    lines = [f"{name}: {str(val).lower()}" for name, val in sorted(checks.items())]
    lines.append(f"verdict: {str(ok).lower()}")
    _emit(args, lines, {"checks": checks, "flats": len(lattice), "verdict": ok})
    return EXIT_OK if ok else EXIT_FAILED


def build_parser():
    parser = _Parser(prog="conepol", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="characteristic polynomials and log-concavity")
    _add_matroid_args(p)
    _add_common_args(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("pol", help="interval polynomial, optionally evaluated")
    _add_matroid_args(p)
    _add_common_args(p)
    p.add_argument("--eval", metavar="alpha|beta|FILE")
    p.set_defaults(func=cmd_pol)

    p = sub.add_parser("certify", help="sampled cone-Lorentzian certification")
    _add_matroid_args(p)
    _add_common_args(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--directions", metavar="FILE",
                   help="JSON file with explicit direction tuples")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("chow-verify", help="volume polynomial vs interval polynomial")
    _add_matroid_args(p)
    _add_common_args(p)
    p.add_argument("--all-intervals", action="store_true")
    p.add_argument("--max-degree", type=int, default=chow.MAX_DEGREE)
    p.set_defaults(func=cmd_chow_verify)

    p = sub.add_parser("poset-check", help="lattice-of-flats predicates")
    _add_matroid_args(p)
    _add_common_args(p)
    p.set_defaults(func=cmd_poset_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"SizeLimitExceeded: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ConepolError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
