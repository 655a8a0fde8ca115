"""Rectangle dissections with exact Q[sqrt(p)] coordinates.

Data model for placed tiles and tilings, exact-cover and side-ratio
verification, guillotine detection, the bilinear "area" functional that
is additive over dissections, impossibility certificates built from it,
and a small bounded closure search used as an independent test oracle.

Every predicate here is exact; floats never enter any decision.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property

from .criteria import MIXED, ShapeSpec, decide
from .errors import (
    ConstructionFailure,
    ContextMismatch,
    DegenerateShape,
    InternalVerificationFailure,
    NotADissection,
    NotAnImpossibleInstance,
    NotTileable,
    ParseError,
)
from .exactfield import (
    FieldContext,
    Quad,
    Rational,
    format_rational,
    parse_rational,
    quad_from_obj,
    quad_to_obj,
    validate_context,
)


@dataclass(frozen=True)
class PlacedTile:
    """An axis-aligned rectangle: bottom-left corner (x, y), sides w, h."""

    x: Quad
    y: Quad
    w: Quad
    h: Quad
    shape_index: int | None = None

    def __post_init__(self) -> None:
        p = self.x.ctx.p
        for name in ("y", "w", "h"):
            if getattr(self, name).ctx.p != p:
                raise ContextMismatch(f"tile field {name} has a different radicand")
        if self.w.sign() <= 0 or self.h.sign() <= 0:
            raise DegenerateShape(f"tile sides must be positive, got {self.w} x {self.h}")

    @property
    def x_end(self) -> Quad:
        return self.x + self.w

    @property
    def y_end(self) -> Quad:
        return self.y + self.h


@dataclass(frozen=True)
class Tiling:
    """A bounds rectangle [0,W] x [0,H] and the tiles meant to fill it."""

    width: Quad
    height: Quad
    tiles: tuple[PlacedTile, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if self.height.ctx.p != self.width.ctx.p:
            raise ContextMismatch("bounds W and H have different radicands")
        if self.width.sign() <= 0 or self.height.sign() <= 0:
            raise DegenerateShape("bounds must have positive sides")
        for i, t in enumerate(self.tiles):
            if t.x.ctx.p != self.width.ctx.p:
                raise ContextMismatch(f"tile {i} has a different radicand than bounds")

    @property
    def ctx(self) -> FieldContext:
        return self.width.ctx

    @property
    def ratio(self) -> Quad:
        return self.height / self.width

    @cached_property
    def moments(self) -> tuple[Rational, Rational, Rational]:
        """Componentwise sums (sum alpha*gamma, sum beta*gamma + alpha*delta,
        sum beta*delta) over tile sides w = alpha + beta*sqrt(p),
        h = gamma + delta*sqrt(p); the total area-functional value for any
        coefficients is a dot product with these three rationals."""
        m1 = Fraction(0)
        m2 = Fraction(0)
        m3 = Fraction(0)
        for tile in self.tiles:
            alpha, beta = tile.w.e, tile.w.f
            gamma, delta = tile.h.e, tile.h.f
            m1 += alpha * gamma
            m2 += beta * gamma + alpha * delta
            m3 += beta * delta
        return m1, m2, m3


@dataclass(frozen=True)
class AreaCoeffs:
    """Coefficients (A, B, C) of the bilinear functional on side components."""

    A: Rational
    B: Rational
    C: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        object.__setattr__(self, "C", Fraction(self.C))


@dataclass(frozen=True)
class Certificate:
    """Coefficients refuting a single-shape instance.

    The 1 x target rectangle gets functional value 0 while every tile of
    the given side ratio gets a strictly one-signed value, so no exact
    dissection can exist (the functional is additive over dissections).
    leading and quarter_discriminant summarize the tile quadratic form.
    """

    coeffs: AreaCoeffs
    shape: Quad
    target: Quad
    leading: Rational
    quarter_discriminant: Rational


@dataclass(frozen=True)
class CertificateBundle:
    """A core certificate against the extremal shape x_k plus, for every
    other shape x_i, a verified tiling of ratio x_i by x_k-tiles.

    Together these refute a multi-shape instance: any dissection using
    all shapes could be rewritten to use x_k alone, which the core rules
    out.  reductions are ordered by ascending shape index, skipping k.
    """

    k: int
    core: Certificate
    reductions: tuple[Tiling, ...]


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the independent checks; None means not checked.

    contained, disjoint and covered together are equivalent to "exact
    dissection".  annotated carries the input tiling with shape_index
    filled in by the ratio check (the input itself is never mutated).
    """

    contained: bool | None = None
    disjoint: bool | None = None
    covered: bool | None = None
    ratios_ok: bool | None = None
    guillotine: bool | None = None
    failures: tuple[tuple[tuple[int, ...], str], ...] = ()
    annotated: Tiling | None = None

    @property
    def dissection_ok(self) -> bool:
        return bool(self.contained and self.disjoint and self.covered)

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        def pick(a, b):
            return b if b is not None else a

        return VerifyReport(
            contained=pick(self.contained, other.contained),
            disjoint=pick(self.disjoint, other.disjoint),
            covered=pick(self.covered, other.covered),
            ratios_ok=pick(self.ratios_ok, other.ratios_ok),
            guillotine=pick(self.guillotine, other.guillotine),
            failures=self.failures + other.failures,
            annotated=other.annotated if other.annotated is not None else self.annotated,
        )


def _interiors_disjoint(t: Tiling) -> tuple[bool, tuple[tuple[tuple[int, ...], str], ...]]:
    """Sweep over x; keep y-intervals of active tiles ordered.

    Closing events sort before opening events at equal x, so tiles that
    merely touch are never reported.  Stops at the first overlap.
    """
    events = []
    for i, tile in enumerate(t.tiles):
        events.append((tile.x, 1, i))
        events.append((tile.x_end, 0, i))
    events.sort(key=lambda ev: (ev[0], ev[1]))
    active: list[tuple[Quad, Quad, int]] = []
    for _, kind, i in events:
        tile = t.tiles[i]
        key = (tile.y, tile.y_end, i)
        if kind == 0:
            pos = bisect.bisect_left(active, key)
            if pos < len(active) and active[pos] == key:
                del active[pos]
            continue
        pos = bisect.bisect_left(active, key)
        if pos > 0 and active[pos - 1][1] > key[0]:
            return False, (((active[pos - 1][2], i), "tile interiors overlap"),)
        if pos < len(active) and active[pos][0] < key[1]:
            return False, (((active[pos][2], i), "tile interiors overlap"),)
        active.insert(pos, key)
    return True, ()


def verify_exact_cover(t: Tiling) -> VerifyReport:
    """Check containment, interior disjointness and exact area balance.

    The three booleans are computed independently.  Given containment
    and disjointness, the exact equation sum(w_i*h_i) = W*H is
    equivalent to the tiles covering all of the bounds.
    """
    zero = t.ctx.zero()
    failures: list[tuple[tuple[int, ...], str]] = []
    contained = True
    for i, tile in enumerate(t.tiles):
        inside = (
            tile.x >= zero
            and tile.y >= zero
            and tile.x_end <= t.width
            and tile.y_end <= t.height
        )
        if not inside:
            contained = False
            failures.append(((i,), "tile extends outside the bounds"))
    area = zero
    for tile in t.tiles:
        area = area + tile.w * tile.h
    covered = area == t.width * t.height
    if not covered:
        failures.append(((), f"tile areas sum to {area}, bounds area is {t.width * t.height}"))
    disjoint, overlaps = _interiors_disjoint(t)
    return VerifyReport(
        contained=contained,
        disjoint=disjoint,
        covered=covered,
        failures=tuple(failures) + overlaps,
    )


def verify_ratios(t: Tiling, shapes: list[Quad] | tuple[Quad, ...]) -> VerifyReport:
    """Check that every tile realizes one of the given side ratios.

    A tile passes iff w/h or h/w equals some shape exactly (ratios are
    orientation-free).  Tiles with shape_index unset get it filled in
    the returned report's annotated tiling.
    """
    shapes = tuple(shapes)
    if not shapes:
        raise DegenerateShape("at least one shape ratio is required")
    for x in shapes:
        if x.sign() <= 0:
            raise DegenerateShape(f"shape {x} is not positive")
    ratios_ok = True
    failures: list[tuple[tuple[int, ...], str]] = []
    annotated: list[PlacedTile] = []
    for i, tile in enumerate(t.tiles):
        r_wide = tile.w / tile.h
        r_tall = tile.h / tile.w
        match = None
        for j, x in enumerate(shapes):
            if x == r_tall or x == r_wide:
                match = j
                break
        if match is None:
            ratios_ok = False
            failures.append(((i,), f"side ratio {r_tall} matches no given shape"))
            annotated.append(tile)
        elif tile.shape_index is None:
            annotated.append(replace(tile, shape_index=match))
        else:
            annotated.append(tile)
    return VerifyReport(
        ratios_ok=ratios_ok,
        failures=tuple(failures),
        annotated=replace(t, tiles=tuple(annotated)),
    )


def _seams(spans: list[tuple[Quad, Quad]]) -> list[Quad]:
    """Interior positions not strictly inside any open span.

    spans come sorted by start; merging open intervals breaks exactly at
    the coordinates where a full cut is possible.
    """
    cuts: list[Quad] = []
    end = spans[0][1]
    for start, stop in spans[1:]:
        if start < end:
            if stop > end:
                end = stop
        else:
            cuts.append(end)
            end = stop
    return cuts


def is_guillotine(t: Tiling) -> bool:
    """True iff the tiling decomposes by recursive full-width/height cuts.

    Instead of recursing on one cut at a time, each region is split at
    all parallel seams at once; the result is the same and it keeps the
    work near-linear on deep stacks and large grids.  Vertical cuts are
    tried before horizontal, at ascending coordinates.
    """
    report = verify_exact_cover(t)
    if not report.dissection_ok:
        raise NotADissection(f"not an exact dissection: {report.failures}")
    worklist: list[list[int]] = [list(range(len(t.tiles)))]
    while worklist:
        idxs = worklist.pop()
        if len(idxs) <= 1:
            continue
        idxs.sort(key=lambda i: t.tiles[i].x)
        cuts = _seams([(t.tiles[i].x, t.tiles[i].x_end) for i in idxs])
        vertical = bool(cuts)
        if not cuts:
            idxs.sort(key=lambda i: t.tiles[i].y)
            cuts = _seams([(t.tiles[i].y, t.tiles[i].y_end) for i in idxs])
            if not cuts:
                return False
        strips: list[list[int]] = [[] for _ in range(len(cuts) + 1)]
        for i in idxs:
            start = t.tiles[i].x if vertical else t.tiles[i].y
            strips[bisect.bisect_right(cuts, start)].append(i)
        worklist.extend(strips)
    return True


def area_functional(c: AreaCoeffs, side1: Quad, side2: Quad) -> Rational:
    """The bilinear functional on side components.

    For sides alpha + beta*sqrt(p) and gamma + delta*sqrt(p) the value is
    alpha*gamma*A + (beta*gamma + alpha*delta)*B + beta*delta*C, an exact
    rational, symmetric in the two sides.
    """
    if side1.ctx.p != side2.ctx.p:
        raise ContextMismatch("sides of one rectangle must share a radicand")
    alpha, beta = side1.e, side1.f
    gamma, delta = side2.e, side2.f
    return alpha * gamma * c.A + (beta * gamma + alpha * delta) * c.B + beta * delta * c.C


def area_additivity_check(t: Tiling, c: AreaCoeffs) -> bool:
    """True iff the tile functional values sum exactly to the bounds value.

    Holds for every exact dissection and arbitrary rational coefficients;
    a corrupted tiling simply returns False, so no pre-verification is
    done here.  The per-tile sums are bilinear in (A, B, C), so the
    cached tiling moments reduce each call after the first to a dot
    product.
    """
    m1, m2, m3 = t.moments
    total = c.A * m1 + c.B * m2 + c.C * m3
    return total == area_functional(c, t.width, t.height)


def make_certificate(z: Quad, x1: Quad) -> Certificate:
    """Impossibility certificate for a single-shape NO instance.

    With z = e + f*sqrt(p) and x1 = a1 + b1*sqrt(p), b1 != 0, the
    coefficients (f, -e, 2*f*a1^2/b1^2 - p*f) give the 1 x z bounds value
    e*A + f*B = 0 while the tile quadratic form has leading coefficient
    f*a1 - e*b1 and quarter discriminant (a1^2 - p*b1^2)(e^2 - f^2*a1^2/b1^2),
    negative on every NO instance including the boundary sub-cases
    e <= 0 and f <= 0 (see the inequality notes in the tests).

    For rational x1 (b1 = 0) a NO instance forces f != 0 and the variant
    coefficients (f, -e, (e^2+1)/f) make the tile form definite with
    inner quarter discriminant e^2 - f*C = -1.
    """
    if z.ctx.p != x1.ctx.p:
        raise ContextMismatch("target and shape use different radicands")
    spec = ShapeSpec(ctx=z.ctx, shapes=(x1,), target=z)
    if decide(spec).tileable:
        raise NotAnImpossibleInstance(
            f"target {z} is tileable by {x1}; construct a tiling instead"
        )
    p = z.ctx.p
    e, f = z.e, z.f
    a1, b1 = x1.e, x1.f
    if b1 != 0:
        coeffs = AreaCoeffs(f, -e, 2 * f * a1 * a1 / (b1 * b1) - p * f)
        leading = f * a1 - e * b1
        qdisc = (a1 * a1 - p * b1 * b1) * (e * e - f * f * a1 * a1 / (b1 * b1))
    else:
        coeffs = AreaCoeffs(f, -e, (e * e + 1) / f)
        leading = f * a1
        qdisc = e * e - f * coeffs.C
    cert = Certificate(
        coeffs=coeffs, shape=x1, target=z, leading=leading, quarter_discriminant=qdisc
    )
    if not check_certificate(cert):
        raise InternalVerificationFailure(
            f"certificate self-check failed for target {z}, shape {x1}"
        )
    return cert


def check_certificate(cert: Certificate) -> bool:
    """Re-derive the two defining properties by independent arithmetic.

    (i) the 1 x target bounds get functional value zero;
    (ii) a tile with ratio cert.shape and short side alpha + beta*sqrt(p)
    gets value P*alpha^2 + Q*alpha*beta + R*beta^2 where
    P = A*a1 + B*b1, Q = A*p*b1 + 2*B*a1 + C*b1, R = B*p*b1 + C*a1;
    the form must be definite: P != 0 and (Q/2)^2 - P*R < 0.

    The stored leading coefficient must equal the recomputed P; the
    stored quarter_discriminant is checked for sign only (the recomputed
    discriminant is authoritative).  Returns False rather than raising,
    so tampered certificates are rejected, not crashed on.
    """
    z, x = cert.target, cert.shape
    if z.ctx.p != x.ctx.p:
        return False
    p = z.ctx.p
    A, B, C = cert.coeffs.A, cert.coeffs.B, cert.coeffs.C
    a1, b1 = x.e, x.f
    if area_functional(cert.coeffs, z.ctx.one(), z) != 0:
        return False
    P = A * a1 + B * b1
    half_q = (A * p * b1 + 2 * B * a1 + C * b1) / 2
    R = B * p * b1 + C * a1
    if P == 0 or half_q * half_q - P * R >= 0:
        return False
    return cert.leading == P and cert.quarter_discriminant < 0


def make_bundle(z: Quad, shapes: list[Quad] | tuple[Quad, ...]) -> CertificateBundle:
    """Refute a multi-shape NO instance.

    Picks the extremal shape x_k (the classification bound), certifies
    z against it, and tiles every other shape's ratio by x_k-tiles; the
    classification inequalities guarantee those single-shape instances
    are all YES.  Everything is re-verified before returning.
    """
    shapes = tuple(shapes)
    spec = ShapeSpec(ctx=z.ctx, shapes=shapes, target=z)
    decision = decide(spec)
    if decision.tileable:
        raise NotAnImpossibleInstance(f"target {z} is tileable; no bundle exists")
    c = decision.classification
    assert c.kind != MIXED, "mixed classification never yields NO"
    k = c.extremal_index
    core = make_certificate(z, shapes[k])

    from .constructor import construct

    reductions = []
    for i, x in enumerate(shapes):
        if i == k:
            continue
        try:
            reduction = construct(ShapeSpec(ctx=z.ctx, shapes=(shapes[k],), target=x))
        except NotTileable as exc:
            raise ConstructionFailure(
                f"shape {x} should be tileable by the extremal shape {shapes[k]}"
            ) from exc
        cover = verify_exact_cover(reduction)
        ratios = verify_ratios(reduction, (shapes[k],))
        if not (cover.dissection_ok and ratios.ratios_ok):
            raise ConstructionFailure(f"reduction tiling for shape {x} failed verification")
        reductions.append(ratios.annotated)
    return CertificateBundle(k=k, core=core, reductions=tuple(reductions))


_SCALE_POOL = (Fraction(1, 2), Fraction(2), Fraction(1, 3), Fraction(3))


@dataclass(frozen=True)
class WitnessExpr:
    """A closure expression over the input shapes: leaves are shapes,
    nodes are sums, reciprocals and positive rational scalings."""

    op: str
    value: Quad
    operands: tuple["WitnessExpr", ...] = ()
    scalar: Rational | None = None
    shape_index: int | None = None
    height: int = 1

    def reevaluate(self) -> Quad:
        """Recompute the value from the tree, ignoring the cached field."""
        if self.op == "shape":
            return self.value
        if self.op == "sum":
            return self.operands[0].reevaluate() + self.operands[1].reevaluate()
        if self.op == "inv":
            return self.operands[0].reevaluate().inv()
        return self.scalar * self.operands[0].reevaluate()

    def __str__(self) -> str:
        if self.op == "shape":
            return f"x{self.shape_index}"
        if self.op == "sum":
            return f"({self.operands[0]} + {self.operands[1]})"
        if self.op == "inv":
            return f"inv({self.operands[0]})"
        return f"({format_rational(self.scalar)})*{self.operands[0]}"


def bounded_closure_search(
    z: Quad,
    shapes: list[Quad] | tuple[Quad, ...],
    depth: int,
    width: int,
) -> WitnessExpr | None:
    """Forward-close the shapes under u+v, 1/u and q*u for q in a fixed
    small pool, keeping at most `width` lowest-height new expressions per
    round, for `depth` rounds.

    Returns an expression for z if reached.  Finding one is sound (the
    closure operations all preserve tileability); not finding one proves
    nothing.  Deterministic and completely independent of the decision
    procedure and the constructor.
    """
    known: dict[Quad, WitnessExpr] = {}
    for i, x in enumerate(shapes):
        if x not in known:
            known[x] = WitnessExpr(op="shape", value=x, shape_index=i)
    if z in known:
        return known[z]
    for _ in range(depth):
        fresh: dict[Quad, WitnessExpr] = {}

        def consider(expr: WitnessExpr) -> None:
            if expr.value not in known and expr.value not in fresh:
                fresh[expr.value] = expr

        items = list(known.items())
        for _, u in items:
            for _, v in items:
                consider(
                    WitnessExpr(
                        op="sum",
                        value=u.value + v.value,
                        operands=(u, v),
                        height=1 + max(u.height, v.height),
                    )
                )
        for _, u in items:
            consider(
                WitnessExpr(
                    op="inv", value=u.value.inv(), operands=(u,), height=1 + u.height
                )
            )
            for q in _SCALE_POOL:
                consider(
                    WitnessExpr(
                        op="scale",
                        value=q * u.value,
                        operands=(u,),
                        scalar=q,
                        height=1 + u.height,
                    )
                )
        if z in fresh:
            return fresh[z]
        ranked = sorted(fresh.values(), key=lambda ex: ex.height)
        for expr in ranked[:width]:
            known[expr.value] = expr
    return known.get(z)


def tiling_to_obj(t: Tiling) -> dict:
    """Plain-object form of a tiling; all numbers as exact strings."""
    tiles = []
    for tile in t.tiles:
        obj = {
            "x": quad_to_obj(tile.x),
            "y": quad_to_obj(tile.y),
            "w": quad_to_obj(tile.w),
            "h": quad_to_obj(tile.h),
        }
        if tile.shape_index is not None:
            obj["shape_index"] = tile.shape_index
        tiles.append(obj)
    return {
        "p": format_rational(t.ctx.p),
        "bounds": {"W": quad_to_obj(t.width), "H": quad_to_obj(t.height)},
        "tiles": tiles,
    }


def tiling_from_obj(obj: dict) -> Tiling:
    """Parse the plain-object tiling form; errors carry field positions."""
    if not isinstance(obj, dict):
        raise ParseError("tiling document must be an object")
    for field_name in ("p", "bounds", "tiles"):
        if field_name not in obj:
            raise ParseError(f"tiling document is missing '{field_name}'")
    ctx = validate_context(parse_rational(_expect_str(obj["p"], "p")))
    bounds = obj["bounds"]
    if not isinstance(bounds, dict) or "W" not in bounds or "H" not in bounds:
        raise ParseError("bounds: expected an object with W and H")
    width = quad_from_obj(ctx, bounds["W"], "bounds.W")
    height = quad_from_obj(ctx, bounds["H"], "bounds.H")
    if not isinstance(obj["tiles"], list):
        raise ParseError("tiles: expected an array")
    tiles = []
    for i, tile_obj in enumerate(obj["tiles"]):
        where = f"tiles[{i}]"
        if not isinstance(tile_obj, dict):
            raise ParseError(f"{where}: expected an object")
        fields = {}
        for name in ("x", "y", "w", "h"):
            if name not in tile_obj:
                raise ParseError(f"{where}: missing '{name}'")
            fields[name] = quad_from_obj(ctx, tile_obj[name], f"{where}.{name}")
        shape_index = tile_obj.get("shape_index")
        if shape_index is not None and not isinstance(shape_index, int):
            raise ParseError(f"{where}.shape_index: expected an integer")
        tiles.append(PlacedTile(shape_index=shape_index, **fields))
    return Tiling(width=width, height=height, tiles=tuple(tiles))


def certificate_to_obj(cert: Certificate) -> dict:
    return {
        "p": format_rational(cert.target.ctx.p),
        "target": quad_to_obj(cert.target),
        "shape": quad_to_obj(cert.shape),
        "coeffs": {
            "A": format_rational(cert.coeffs.A),
            "B": format_rational(cert.coeffs.B),
            "C": format_rational(cert.coeffs.C),
        },
        "leading": format_rational(cert.leading),
        "quarter_discriminant": format_rational(cert.quarter_discriminant),
    }


def certificate_from_obj(obj: dict) -> Certificate:
    if not isinstance(obj, dict):
        raise ParseError("certificate document must be an object")
    for field_name in ("p", "target", "shape", "coeffs", "leading", "quarter_discriminant"):
        if field_name not in obj:
            raise ParseError(f"certificate document is missing '{field_name}'")
    ctx = validate_context(parse_rational(_expect_str(obj["p"], "p")))
    coeffs_obj = obj["coeffs"]
    if not isinstance(coeffs_obj, dict):
        raise ParseError("coeffs: expected an object")
    coeff_values = {}
    for name in ("A", "B", "C"):
        if name not in coeffs_obj:
            raise ParseError(f"coeffs: missing '{name}'")
        coeff_values[name] = parse_rational(_expect_str(coeffs_obj[name], f"coeffs.{name}"))
    return Certificate(
        coeffs=AreaCoeffs(**coeff_values),
        shape=quad_from_obj(ctx, obj["shape"], "shape"),
        target=quad_from_obj(ctx, obj["target"], "target"),
        leading=parse_rational(_expect_str(obj["leading"], "leading")),
        quarter_discriminant=parse_rational(
            _expect_str(obj["quarter_discriminant"], "quarter_discriminant")
        ),
    )


def bundle_to_obj(bundle: CertificateBundle) -> dict:
    return {
        "k": bundle.k,
        "core": certificate_to_obj(bundle.core),
        "reductions": [tiling_to_obj(t) for t in bundle.reductions],
    }


def bundle_from_obj(obj: dict) -> CertificateBundle:
    if not isinstance(obj, dict):
        raise ParseError("bundle document must be an object")
    for field_name in ("k", "core", "reductions"):
        if field_name not in obj:
            raise ParseError(f"bundle document is missing '{field_name}'")
    if not isinstance(obj["k"], int):
        raise ParseError("k: expected an integer")
    if not isinstance(obj["reductions"], list):
        raise ParseError("reductions: expected an array")
    return CertificateBundle(
        k=obj["k"],
        core=certificate_from_obj(obj["core"]),
        reductions=tuple(tiling_from_obj(t) for t in obj["reductions"]),
    )


def _expect_str(value, where: str) -> str:
    if not isinstance(value, str):
        raise ParseError(f"{where}: expected a string rational, got {value!r}")
    return value
