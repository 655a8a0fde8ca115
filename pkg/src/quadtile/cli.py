"""Command-line surface: decide, tile, verify and certify instances.

Problem documents are JSON: {"p": "2", "shapes": [{"e": "1", "f": "1"}],
"target": {"e": "0", "f": "1"}} with every number an exact rational
string ("num" or "num/den"; decimals are rejected).  Tiling documents
and certificate bundles use the plain-object forms from the tiling
module, again with exact strings only.

Exit codes: 0 = YES / valid, 10 = NO / invalid, 2 = input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .constructor import construct
from .criteria import MIXED, ShapeSpec, decide
from .errors import (
    ContextMismatch,
    DegenerateShape,
    InternalVerificationFailure,
    NonPositiveRadicand,
    NotAnImpossibleInstance,
    ParseError,
    RationalSquareRoot,
)
from .exactfield import format_rational, parse_rational, quad_from_obj, validate_context
from .tiling import (
    AreaCoeffs,
    Tiling,
    area_additivity_check,
    bundle_to_obj,
    check_certificate,
    is_guillotine,
    make_bundle,
    tiling_from_obj,
    tiling_to_obj,
    verify_exact_cover,
    verify_ratios,
)

_INPUT_ERRORS = (
    ParseError,
    NonPositiveRadicand,
    RationalSquareRoot,
    DegenerateShape,
    ContextMismatch,
)

_PALETTE = ("#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc", "#fc9272", "#c7e9c0")


def parse_problem(text: str) -> ShapeSpec:
    """Parse a problem document; errors name the offending field."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("problem document must be an object")
    for field in ("p", "shapes", "target"):
        if field not in obj:
            raise ParseError(f"problem document is missing '{field}'")
    if not isinstance(obj["p"], str):
        raise ParseError("p: expected a string rational")
    ctx = validate_context(parse_rational(obj["p"]))
    if not isinstance(obj["shapes"], list) or not obj["shapes"]:
        raise ParseError("shapes: expected a nonempty array")
    shapes = tuple(
        quad_from_obj(ctx, shape, f"shapes[{i}]") for i, shape in enumerate(obj["shapes"])
    )
    target = quad_from_obj(ctx, obj["target"], "target")
    return ShapeSpec(ctx=ctx, shapes=shapes, target=target)


def render_svg(t: Tiling) -> str:
    """Deterministic SVG view of a tiling, 512 units wide.

    Floating point appears here and only here; the drawing is
    presentation, the document is the artifact of record.  The title
    keeps the exact bounds as text.
    """
    width_px = 512.0
    scale = width_px / t.width.approx()
    height_px = t.height.approx() * scale
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px:.6f}" '
        f'height="{height_px:.6f}" viewBox="0 0 {width_px:.6f} {height_px:.6f}">',
        f"  <title>exact bounds: W = {t.width}, H = {t.height}</title>",
    ]
    for tile in t.tiles:
        x = tile.x.approx() * scale
        w = tile.w.approx() * scale
        h = tile.h.approx() * scale
        # tiling y grows upward, SVG y grows downward
        y = height_px - (tile.y.approx() * scale) - h
        fill = _PALETTE[(tile.shape_index or 0) % len(_PALETTE)]
        lines.append(
            f'  <rect x="{x:.6f}" y="{y:.6f}" width="{w:.6f}" height="{h:.6f}" '
            f'fill="{fill}" stroke="#333333" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _status(line: str, to_stdout: bool) -> None:
    print(line, file=sys.stdout if to_stdout else sys.stderr)


def cmd_decide(spec: ShapeSpec, show_classification: bool) -> int:
    decision = decide(spec)
    c = decision.classification
    print(f"verdict: {decision.verdict}")
    print(f"case: {c.kind}")
    if c.kind == MIXED:
        print(f"  conjugate > 0 at shape {c.pos_index}, conjugate < 0 at shape {c.neg_index}")
    else:
        print(f"  extremal shape: {c.extremal_index}, bound: {format_rational(c.bound)}")
    print(f"admissible targets: {c.admissible_set()}")
    if show_classification:
        for i, x in enumerate(spec.shapes):
            conj = x.conj()
            side = "positive" if conj.sign() > 0 else "negative"
            print(f"  shape {i}: {x}, conjugate {conj} is {side}")
    if decision.witness_plan is not None:
        print(f"construction: {decision.witness_plan}")
    if decision.reason is not None:
        print(f"reason: {decision.reason}")
    return 0 if decision.tileable else 10


def cmd_tile(spec: ShapeSpec, out_path: str | None, svg_path: str | None) -> int:
    to_file = out_path is not None and out_path != "-"
    decision = decide(spec)
    if not decision.tileable:
        bundle = make_bundle(spec.target, spec.shapes)
        _emit(json.dumps(bundle_to_obj(bundle), indent=2) + "\n", out_path)
        _status("verdict: NO; wrote a certificate bundle instead of a tiling", to_file)
        return 10
    t = construct(spec)
    cover = verify_exact_cover(t)
    ratios = verify_ratios(t, spec.shapes)
    if not (cover.dissection_ok and ratios.ratios_ok):
        raise InternalVerificationFailure(
            "construct returned a tiling that fails re-verification"
        )
    _emit(json.dumps(tiling_to_obj(t), indent=2) + "\n", out_path)
    if svg_path is not None:
        _emit(render_svg(t), svg_path)
    _status(f"verdict: YES; wrote a verified tiling with {len(t.tiles)} tiles", to_file)
    return 0


def cmd_verify(spec: ShapeSpec, tiling_text: str) -> int:
    try:
        obj = json.loads(tiling_text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    t = tiling_from_obj(obj)
    if t.ctx.p != spec.ctx.p:
        raise ContextMismatch("problem and tiling documents use different radicands")
    cover = verify_exact_cover(t)
    ratios = verify_ratios(t, spec.shapes)

    def flag(ok: bool | None) -> str:
        return "pass" if ok else "FAIL"

    print(f"contained: {flag(cover.contained)}")
    print(f"disjoint: {flag(cover.disjoint)}")
    print(f"covered: {flag(cover.covered)}")
    print(f"ratios: {flag(ratios.ratios_ok)}")
    if cover.dissection_ok:
        print(f"guillotine: {'yes' if is_guillotine(t) else 'no'}")
        rng = random.Random(0)
        triples = [
            AreaCoeffs(
                rng.randint(-9, 9),
                rng.randint(-9, 9),
                rng.randint(-9, 9),
            )
            for _ in range(3)
        ]
        additive = all(area_additivity_check(t, c) for c in triples)
        print(f"additivity spot-check (3 random coefficient triples): {flag(additive)}")
    else:
        print("guillotine: skipped (not an exact dissection)")
    for indices, reason in cover.failures + ratios.failures:
        where = ", ".join(f"tile {i}" for i in indices) or "tiling"
        print(f"failure: {where}: {reason}")
    ok = cover.dissection_ok and bool(ratios.ratios_ok)
    print(f"verdict: {'valid' if ok else 'invalid'}")
    return 0 if ok else 10


def cmd_certify(spec: ShapeSpec, out_path: str | None) -> int:
    to_file = out_path is not None and out_path != "-"
    try:
        bundle = make_bundle(spec.target, spec.shapes)
    except NotAnImpossibleInstance as exc:
        _status(f"not certifiable: {exc}", True)
        return 10
    if not check_certificate(bundle.core):
        raise InternalVerificationFailure("bundle core failed re-checking before write")
    _emit(json.dumps(bundle_to_obj(bundle), indent=2) + "\n", out_path)
    _status(
        "certificate: coefficients "
        f"A={format_rational(bundle.core.coeffs.A)}, "
        f"B={format_rational(bundle.core.coeffs.B)}, "
        f"C={format_rational(bundle.core.coeffs.C)}; "
        f"quarter discriminant {format_rational(bundle.core.quarter_discriminant)}; "
        f"{len(bundle.reductions)} reduction tilings",
        to_file,
    )
    return 0


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadtile",
        description=(
            "Decide, construct, verify and certify rectangle dissections "
            "whose side ratios live in a quadratic field."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_decide = sub.add_parser("decide", help="print the exact YES/NO verdict")
    p_decide.add_argument("--problem", required=True, help="problem document (JSON file)")
    p_decide.add_argument(
        "--classify", action="store_true", help="also print per-shape conjugate signs"
    )

    p_tile = sub.add_parser("tile", help="construct a verified tiling (or a certificate)")
    p_tile.add_argument("--problem", required=True)
    p_tile.add_argument("--out", help="output document path (default: stdout)")
    p_tile.add_argument("--svg", help="also render the tiling as SVG")

    p_verify = sub.add_parser("verify", help="verify a tiling document against a problem")
    p_verify.add_argument("--problem", required=True)
    p_verify.add_argument("--tiling", required=True, help="tiling document (JSON file)")

    p_certify = sub.add_parser("certify", help="emit an impossibility certificate bundle")
    p_certify.add_argument("--problem", required=True)
    p_certify.add_argument("--out", help="output document path (default: stdout)")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        spec = parse_problem(_read(args.problem))
        if args.command == "decide":
            return cmd_decide(spec, args.classify)
        if args.command == "tile":
            return cmd_tile(spec, args.out, args.svg)
        if args.command == "verify":
            return cmd_verify(spec, _read(args.tiling))
        return cmd_certify(spec, args.out)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
