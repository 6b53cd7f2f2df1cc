"""Command-line front end.

Subcommands: classify, voronoi, theta, embed, surface, series, verify.
Input is a JSON config file whose ``gram`` entry is a 2x2 array of rational
strings ("p/q" or "n"); JSON output is deterministic (sorted keys, exact
rational strings, no timestamps).  Only the OFF mesh export approximates,
at a configurable number of decimal digits.

Exit codes: 0 success, 1 verification failure, 2 input error.  Input
errors emit a machine-readable JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import kummer, nonarch, verify
from .errors import (
    EmptySupportError,
    NonSymmetricError,
    NotPositiveDefiniteError,
    ProductTypeError,
    RadiusTooSmallError,
)
from .exact import Mat2, Vec2, Vec3, fraction_decimal, fraction_str, to_fraction
from .lattice import (
    PrincipallyPolarizedSurface,
    classify,
    lagrange_reduce,
    make_surface,
    voronoi_cell,
)
from .theta import ThetaCharacteristic, theta_eval

INPUT_ERRORS = (
    NonSymmetricError,
    NotPositiveDefiniteError,
    ProductTypeError,
    RadiusTooSmallError,
    EmptySupportError,
    ValueError,
    TypeError,
    KeyError,
    OSError,
    json.JSONDecodeError,
)


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _emit_error(kind: str, message: str) -> None:
    obj = {"error": {"type": kind, "message": message}}
    sys.stderr.write(json.dumps(obj, sort_keys=True) + "\n")


def _load_config(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        config = json.load(fh)
    if not isinstance(config, dict) or "gram" not in config:
        raise ValueError("config must be a JSON object with a 'gram' entry")
    return config


def _parse_gram(raw) -> Mat2:
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in raw)
    ):
        raise ValueError("'gram' must be a 2x2 array")
    entries = []
    for row in raw:
        for cell in row:
            if isinstance(cell, float):
                raise ValueError("gram entries must be exact: use strings like '1/2'")
            entries.append(to_fraction(cell))
    return Mat2(*entries)


def _surface_from_config(config: dict) -> PrincipallyPolarizedSurface:
    return make_surface(_parse_gram(config["gram"]))


def _parse_point(text: str) -> Vec2:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"point must be 'x1,x2', got {text!r}")
    return Vec2(Fraction(parts[0].strip()), Fraction(parts[1].strip()))


def _vec2_json(v: Vec2) -> list[str]:
    return [fraction_str(v.x), fraction_str(v.y)]


def _vec3_json(v: Vec3) -> list[str]:
    return [fraction_str(v.x), fraction_str(v.y), fraction_str(v.z)]


def cmd_classify(args) -> int:
    surface = _surface_from_config(_load_config(args.file))
    rb = lagrange_reduce(surface)
    _emit(
        {
            "class": classify(surface).value,
            "reduced_basis": {"u": _vec2_json(rb.u), "v": _vec2_json(rb.v)},
            "norms": {
                "uu": fraction_str(rb.norms[0]),
                "vv": fraction_str(rb.norms[1]),
                "uv": fraction_str(rb.norms[2]),
            },
        }
    )
    return 0


def cmd_voronoi(args) -> int:
    surface = _surface_from_config(_load_config(args.file))
    cell = voronoi_cell(surface)
    _emit(
        {
            "kind": cell.kind.value,
            "relevant_vectors": [_vec2_json(r) for r in cell.relevant_vectors],
            "vertices": [_vec2_json(m) for m in cell.vertices],
        }
    )
    return 0


def cmd_theta(args) -> int:
    surface = _surface_from_config(_load_config(args.file))
    char = ThetaCharacteristic.parse(args.char)
    point = _parse_point(args.point)
    tv = theta_eval(surface, char, point)
    _emit(
        {
            "char": str(char),
            "point": _vec2_json(point),
            "value": fraction_str(tv.value),
            "minimizer": _vec2_json(tv.minimizer),
        }
    )
    return 0


def cmd_embed(args) -> int:
    surface = _surface_from_config(_load_config(args.file))
    point = _parse_point(args.point)
    _emit(
        {
            "point": _vec2_json(point),
            "psi": _vec3_json(kummer.psi_eval(surface, point)),
        }
    )
    return 0


def _face_cycle(quartic: kummer.KummerQuartic, face: kummer.FacePlane) -> list[int]:
    """Vertex indices of a face in cyclic order (for valid mesh output)."""
    ids = face.vertex_ids
    points = [quartic.vertex(vid) for vid in ids]
    base, e1, e2 = kummer._parallelogram_frame(points)
    order = [base, base + e1, base + e1 + e2, base + e2]
    return [quartic.vertices.index(p) for p in order]


def cmd_surface(args) -> int:
    surface = _surface_from_config(_load_config(args.file))
    quartic = kummer.build_quartic(surface)
    if args.out == "json":
        faces = [
            {
                "normal": list(face.normal),
                "offset": fraction_str(face.offset),
                "vertices": list(face.vertex_ids),
                "cells": list(face.source_cells),
            }
            for face in quartic.faces
        ]
        _emit(
            {
                "vertices": {
                    label: _vec3_json(v)
                    for label, v in zip(kummer.VERTEX_LABELS, quartic.vertices)
                },
                "faces": faces,
                "theta_constants": [
                    fraction_str(t) for t in quartic.theta_constants
                ],
            }
        )
        return 0
    digits = args.precision
    lines = ["OFF", "8 6 12"]
    for v in quartic.vertices:
        lines.append(
            " ".join(fraction_decimal(c, digits) for c in v.as_tuple())
        )
    for face in quartic.faces:
        lines.append("4 " + " ".join(str(i) for i in _face_cycle(quartic, face)))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_series(args) -> int:
    surface = _surface_from_config(_load_config(args.file))
    char = ThetaCharacteristic.parse(args.char)
    point = _parse_point(args.point)
    if args.cutoff is not None:
        cutoff = args.cutoff
    else:
        cutoff = nonarch.safe_cutoff(surface, char, point.sup_norm())
    series = nonarch.build_series(surface, char, cutoff)
    value = nonarch.tropicalize_series(series, point)
    _emit(
        {
            "char": str(char),
            "point": _vec2_json(point),
            "cutoff": cutoff,
            "terms": len(series.support),
            "constant_shift": fraction_str(series.constant_shift),
            "value": fraction_str(value),
        }
    )
    return 0


def cmd_verify(args) -> int:
    config = _load_config(args.file)
    surface = _surface_from_config(config)
    seed = args.seed if args.seed is not None else int(config.get("seed", 0))
    samples = (
        args.samples if args.samples is not None else int(config.get("samples", 200))
    )
    if samples < 1:
        raise ValueError("samples must be positive")

    def progress(check):
        sys.stderr.write(
            f"[{check.status:4s}] {check.name} "
            f"({check.cases} cases, {check.elapsed * 1000:.1f} ms)\n"
        )

    report = verify.run_verification(
        surface, seed=seed, samples=samples, progress=progress
    )
    _emit(report.to_json_dict())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropical-kummer",
        description="Exact computations on tropical abelian surfaces and "
        "their Kummer quartics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="surface class and reduced basis")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("voronoi", help="Voronoi cell kind, relevant vectors, vertices")
    p.add_argument("file")
    p.set_defaults(func=cmd_voronoi)

    p = sub.add_parser("theta", help="evaluate one theta function")
    p.add_argument("file")
    p.add_argument("--char", required=True, help="two bits, e.g. 10")
    p.add_argument("--point", required=True, help="exact coordinates 'x1,x2'")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("embed", help="theta embedding of a point")
    p.add_argument("file")
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("surface", help="Kummer quartic vertices and faces")
    p.add_argument("file")
    p.add_argument("--out", choices=("json", "off"), default="json")
    p.add_argument("--precision", type=int, default=12, help="OFF decimal digits")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("series", help="tropicalized truncated theta series")
    p.add_argument("file")
    p.add_argument("--char", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run the seeded verification suite")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        _emit_error(type(exc).__name__, str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
