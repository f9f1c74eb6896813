"""Command-line front end: documents, scans, reports, and SVG figures.

Subcommands::

    invert    image fraction of a boundary point reflected across a side
    grow      grow a reflection body from a polygon document
    area      Euclidean area, sharp bound, and optional hyperbolic check
    extremal  lattice scan (and refinement) of the minimax objective
    check     run a property suite, one JSON report line per case
    render    draw a body as an SVG of geodesic arcs, colored by generation

Exit codes: 0 success, 1 invalid input, 2 mathematical finding (violation
or counterexample), 3 I/O failure.  Polygon and body documents are JSON;
angles are decimal turn fractions.  ``HYPERGON_MAX_SIDES`` overrides the
default growth cap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .disk_geometry import GeodesicSide, invert_on_circle, side_circle, unit_point
from .errors import DepthLimitError, DomainError, HypergonError, PrecisionError
from .extremal import (
    SimplexPoint,
    grid_scan,
    minimax_objective,
    property_suite,
    refine_minimum,
    sample_simplex,
    suite_names,
)
from .measures import (
    area_upper_bound,
    euclidean_area,
    hyperbolic_area_ideal,
    hyperbolic_area_quadrature,
)
from .polygon import DEFAULT_MAX_SIDES, Body, IdealPolygon, grow_body

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FINDING = 2
EXIT_IO = 3


def _max_sides() -> int:
    raw = os.environ.get("HYPERGON_MAX_SIDES")
    if raw is None:
        return DEFAULT_MAX_SIDES
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError("HYPERGON_MAX_SIDES must be an integer") from exc


# ---------------------------------------------------------------------------
# documents


def polygon_to_doc(poly: IdealPolygon) -> dict:
    return {"n": poly.n, "angles": list(poly.angles), "rotation": poly.rotation}


def polygon_from_doc(doc) -> IdealPolygon:
    if not isinstance(doc, dict):
        raise DomainError("polygon document must be a JSON object")
    if "angles" not in doc:
        raise DomainError("polygon document must carry an 'angles' array")
    angles = doc["angles"]
    if not isinstance(angles, list) or not all(isinstance(a, (int, float)) for a in angles):
        raise DomainError("angles must be an array of decimals")
    n = doc.get("n", len(angles))
    if n != len(angles):
        raise DomainError("n must match the number of angles")
    rotation = doc.get("rotation", 0.0)
    if not isinstance(rotation, (int, float)):
        raise DomainError("rotation must be a decimal")
    return IdealPolygon(tuple(float(a) for a in angles), float(rotation))


def body_to_doc(body: Body) -> dict:
    angles = [float(a) for a in body.boundary_angles]
    return {
        "n": body.base.n,
        "generations": body.generations,
        "polygon_counts": list(body.polygon_counts),
        "boundary_angles": angles,
        "euclidean_area": euclidean_area(body.boundary_angles),
        "base": polygon_to_doc(body.base),
        "checksum": hashlib.sha256(json.dumps(angles).encode()).hexdigest(),
    }


# ---------------------------------------------------------------------------
# rendering


@dataclass(frozen=True)
class RenderSpec:
    """Figure parameters: canvas size, strokes, generation colors, precision."""

    canvas: int = 720
    circle_stroke: float = 0.008
    side_stroke: float = 0.004
    colors: tuple[str, ...] = (
        "#1f77b4",
        "#d62728",
        "#2ca02c",
        "#9467bd",
        "#ff7f0e",
        "#8c564b",
    )
    precision: int = 6

    def __post_init__(self):
        if self.canvas <= 0 or self.circle_stroke <= 0 or self.side_stroke <= 0:
            raise DomainError("render sizes must be positive")
        if not 3 <= self.precision <= 12:
            raise DomainError("render precision must be in 3..12")
        if not self.colors:
            raise DomainError("need at least one generation color")


def render_spec_from_doc(doc) -> RenderSpec:
    if not isinstance(doc, dict):
        raise DomainError("render spec must be a JSON object")
    kwargs = {}
    for key in ("canvas", "circle_stroke", "side_stroke", "precision"):
        if key in doc:
            kwargs[key] = doc[key]
    if "colors" in doc:
        kwargs["colors"] = tuple(str(c) for c in doc["colors"])
    return RenderSpec(**kwargs)


def _side_geodesic(t0: float, t1: float) -> GeodesicSide:
    """The geodesic through two boundary fractions, via the short arc."""
    w = (t1 - t0) % 1.0
    if w > 0.5:
        return GeodesicSide(t1, 1.0 - w)
    return GeodesicSide(t0, w)


def _arc_command(t0: float, t1: float, fmt) -> str:
    """SVG elliptical-arc command for the geodesic from t0 to t1.

    Coordinates are emitted y-flipped (screen orientation).  The geodesic
    arc always spans less than half its circle, so the large-arc flag is 0;
    the sweep flag is chosen so the arc passes the circle point nearest the
    origin (the bulge toward the center).
    """
    geo = _side_geodesic(t0, t1)
    circ = side_circle(geo)
    c = circ.center
    cx, cy = c.x, -c.y
    p1 = unit_point(t1)
    x1, y1 = p1.x, -p1.y
    p0 = unit_point(t0)
    x0, y0 = p0.x, -p0.y
    # nearest point of the circle to the origin, on the segment center->origin
    scale = (circ.center_dist - circ.radius) / circ.center_dist
    qx, qy = cx * scale, cy * scale
    phi0 = math.atan2(y0 - cy, x0 - cx)
    phi1 = math.atan2(y1 - cy, x1 - cx)
    phi_q = math.atan2(qy - cy, qx - cx)
    two_pi = 2.0 * math.pi
    sweep = 1 if (phi_q - phi0) % two_pi < (phi1 - phi0) % two_pi else 0
    r = fmt(circ.radius)
    return f"A {r} {r} 0 0 {sweep} {fmt(x1)} {fmt(y1)}"


def _cycle_path(verts: tuple[float, ...], fmt) -> str:
    p0 = unit_point(verts[0])
    cmds = [f"M {fmt(p0.x)} {fmt(-p0.y)}"]
    n = len(verts)
    for i in range(n):
        cmds.append(_arc_command(verts[i], verts[(i + 1) % n], fmt))
    cmds.append("Z")
    return " ".join(cmds)


def render_svg(body: Body, spec: RenderSpec | None = None) -> str:
    """Deterministic SVG of a body: unit circle plus per-generation outlines."""
    spec = spec or RenderSpec()

    def fmt(v: float) -> str:
        s = f"{v:.{spec.precision}f}"
        if float(s) == 0.0:
            s = f"{0.0:.{spec.precision}f}"  # never emit -0
        return s

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.canvas}" '
        f'height="{spec.canvas}" viewBox="-1.05 -1.05 2.1 2.1">',
        f'<circle cx="0" cy="0" r="1" fill="none" stroke="#000000" '
        f'stroke-width="{spec.circle_stroke}"/>',
    ]
    for g, cells in enumerate(body.polygons):
        color = spec.colors[g % len(spec.colors)]
        for verts in cells:
            d = _cycle_path(verts, fmt)
            lines.append(
                f'<path d="{d}" fill="none" stroke="{color}" '
                f'stroke-width="{spec.side_stroke}"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _load_json(path: str):
    with open(path, "r") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid JSON in {path}: {exc}") from exc


def _cmd_invert(args) -> int:
    side = GeodesicSide(args.side[0], args.side[1])
    x = invert_on_circle(args.beta, side)
    print(f"{x:.12f}")
    return EXIT_OK


def _cmd_grow(args) -> int:
    poly = polygon_from_doc(_load_json(args.infile))
    body = grow_body(poly, args.generations, _max_sides())
    doc = body_to_doc(body)
    with open(args.out, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")
    if args.svg:
        svg = render_svg(body)
        with open(args.svg, "w") as fh:
            fh.write(svg)
    return EXIT_OK


def _cmd_area(args) -> int:
    poly = polygon_from_doc(_load_json(args.infile))
    area = euclidean_area(poly.angles)
    bound = area_upper_bound(poly.n)
    print(f"euclidean_area {area:.12f}")
    print(f"upper_bound {bound:.12f}")
    print(f"slack {bound - area:.12f}")
    if args.hyperbolic:
        quad = hyperbolic_area_quadrature(poly, args.cells)
        print(f"hyperbolic_area {quad:.12f}")
        print(f"hyperbolic_ideal {hyperbolic_area_ideal(poly.n):.12f}")
    return EXIT_OK


def _parse_step(text: str) -> float:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return float(num) / float(den)
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse grid step '{text}'") from exc


def _cmd_extremal(args) -> int:
    report = grid_scan(args.n, args.grid, dump_path=args.dump)
    regular = SimplexPoint((1.0 / args.n,) * args.n)
    out = {
        "n": args.n,
        "step": report.detail["step"],
        "lattice_points": report.size,
        "best_point": list(report.best_point),
        "best_value": report.best_value,
        "second_best_value": report.detail["second_best_value"],
        "isolation_margin": report.detail["isolation_margin"],
        "regular_value": report.detail["regular_value"],
        "margin_to_regular": report.detail["margin_to_regular"],
        "seed": args.seed,
    }
    finding = not report.passed
    if args.refine:
        rng = np.random.default_rng(args.seed)
        starts = sample_simplex(args.n, args.starts, rng)
        max_dist = 0.0
        best_refined = math.inf
        point, value = refine_minimum(SimplexPoint(report.best_point), args.tol)
        best_refined = min(best_refined, value)
        max_dist = max(max_dist, max(abs(a - 1.0 / args.n) for a in point.angles))
        for row in starts:
            point, value = refine_minimum(SimplexPoint(tuple(row)), args.tol)
            best_refined = min(best_refined, value)
            max_dist = max(max_dist, max(abs(a - 1.0 / args.n) for a in point.angles))
        out["refine"] = {
            "starts": args.starts,
            "tol": args.tol,
            "best_refined_value": best_refined,
            "max_distance_to_regular": max_dist,
        }
        if best_refined < minimax_objective(regular) - 1e-12:
            finding = True
    print(json.dumps(out))
    return EXIT_FINDING if finding else EXIT_OK


def _cmd_check(args) -> int:
    report = property_suite(args.suite, args.samples, args.seed)
    by_case: dict[int, list] = {}
    for v in report.violations:
        by_case.setdefault(v.case, []).append(v.as_dict())
    header = {
        "suite": report.name,
        "size": report.size,
        "seed": report.seed,
        "evidence": report.evidence,
        "violations": len(report.violations),
    }
    out = [json.dumps(header)]
    for case in range(report.size):
        hits = by_case.get(case)
        line = {
            "suite": report.name,
            "case": case,
            "status": "violation" if hits else "pass",
            "detail": {"violations": hits} if hits else None,
        }
        out.append(json.dumps(line))
    print("\n".join(out))
    return EXIT_FINDING if report.violations else EXIT_OK


def _cmd_render(args) -> int:
    doc = _load_json(args.infile)
    if not isinstance(doc, dict) or "base" not in doc:
        raise DomainError("body document lacks the 'base' polygon needed for rendering")
    poly = polygon_from_doc(doc["base"])
    generations = doc.get("generations")
    if not isinstance(generations, int) or generations < 0:
        raise DomainError("body document must carry a non-negative 'generations'")
    body = grow_body(poly, generations, _max_sides())
    spec = render_spec_from_doc(_load_json(args.spec)) if args.spec else RenderSpec()
    svg = render_svg(body, spec)
    with open(args.out, "w") as fh:
        fh.write(svg)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_INVALID, f"error: {message}\n")


def _parse_side(text: str) -> tuple[float, float]:
    try:
        a, alpha = (float(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"side must be 'a,alpha' with decimal fractions, got '{text}'"
        ) from exc
    return a, alpha


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypergon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invert", help="invert a boundary point across a side")
    p.add_argument("--side", type=_parse_side, required=True, metavar="A,ALPHA")
    p.add_argument("--beta", type=float, required=True)
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("grow", help="grow a reflection body")
    p.add_argument("--in", dest="infile", required=True, metavar="POLY.JSON")
    p.add_argument("--generations", type=int, required=True)
    p.add_argument("--out", required=True, metavar="BODY.JSON")
    p.add_argument("--svg", metavar="FIG.SVG")
    p.set_defaults(func=_cmd_grow)

    p = sub.add_parser("area", help="areas and bounds of a polygon")
    p.add_argument("--in", dest="infile", required=True, metavar="POLY.JSON")
    p.add_argument("--hyperbolic", action="store_true")
    p.add_argument("--cells", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_area)

    p = sub.add_parser("extremal", help="minimax lattice scan and refinement")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--grid", type=_parse_step, default=1.0 / 200.0, metavar="STEP")
    p.add_argument("--refine", action="store_true")
    p.add_argument("--starts", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump", metavar="GRID.CSV")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument("--suite", required=True, choices=suite_names())
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("render", help="render a body document to SVG")
    p.add_argument("--in", dest="infile", required=True, metavar="BODY.JSON")
    p.add_argument("--out", required=True, metavar="FIG.SVG")
    p.add_argument("--spec", metavar="RENDER.JSON")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DepthLimitError, PrecisionError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HypergonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
