"""Explicit guillotine tilings realizing every YES decision.

Construction is planned as a small recipe tree and then evaluated into
exact geometry.  The four node kinds mirror the closure operations that
make the tileable set what it is: a unit tile, a vertical stack (sum of
ratios), a transpose (reciprocal), and an n-by-m grid of copies scaled
back to width 1 (positive rational multiple).

Canonical orientation: a "tiling of ratio r" has bounds 1 x r.  The raw
transpose of such a tiling has bounds r x 1; recipe evaluation restores
the canonical width by a uniform similarity, which cannot change any
side ratio or verification verdict.

Every constructed tiling is re-verified before being returned; the
decomposition formulas are validated by that check, not trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .criteria import ALL_POSITIVE_CONJ, MIXED, ShapeSpec, decide
from .errors import (
    ConjugateNotNegative,
    ConjugateNotPositive,
    InternalVerificationFailure,
    NonPositiveScale,
    NotTileable,
    WidthMismatch,
)
from .exactfield import Quad, Rational
from .tiling import PlacedTile, Tiling, verify_exact_cover, verify_ratios


@dataclass(frozen=True)
class UnitTile:
    shape_index: int


@dataclass(frozen=True)
class Stack:
    lower: "Recipe"
    upper: "Recipe"


@dataclass(frozen=True)
class Transpose:
    child: "Recipe"


@dataclass(frozen=True)
class ScaleRational:
    child: "Recipe"
    q: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise NonPositiveScale(f"scale factor must be positive, got {self.q}")


Recipe = Union[UnitTile, Stack, Transpose, ScaleRational]


def tile_count(recipe: Recipe) -> int:
    """Number of tiles the recipe will produce, without building them."""
    if isinstance(recipe, UnitTile):
        return 1
    if isinstance(recipe, Stack):
        return tile_count(recipe.lower) + tile_count(recipe.upper)
    if isinstance(recipe, Transpose):
        return tile_count(recipe.child)
    return recipe.q.numerator * recipe.q.denominator * tile_count(recipe.child)


def recipe_text(recipe: Recipe) -> str:
    """Nested textual form of the recipe, for audit output."""
    if isinstance(recipe, UnitTile):
        return f"unit({recipe.shape_index})"
    if isinstance(recipe, Stack):
        return f"stack({recipe_text(recipe.lower)}, {recipe_text(recipe.upper)})"
    if isinstance(recipe, Transpose):
        return f"transpose({recipe_text(recipe.child)})"
    return f"scale({recipe_text(recipe.child)}, {recipe.q})"


def unit(shape_index: int, x: Quad) -> Tiling:
    """Bounds 1 x x filled by a single tile of that ratio."""
    zero = x.ctx.zero()
    one = x.ctx.one()
    tile = PlacedTile(x=zero, y=zero, w=one, h=x, shape_index=shape_index)
    return Tiling(width=one, height=x, tiles=(tile,))


def stack(t1: Tiling, t2: Tiling) -> Tiling:
    """Place t2 on top of t1; ratios add."""
    one = t1.ctx.one()
    if t1.width != one or t2.width != one:
        raise WidthMismatch(
            f"stack needs width-1 operands, got {t1.width} and {t2.width}"
        )
    lifted = tuple(
        PlacedTile(x=t.x, y=t.y + t1.height, w=t.w, h=t.h, shape_index=t.shape_index)
        for t in t2.tiles
    )
    return Tiling(width=one, height=t1.height + t2.height, tiles=t1.tiles + lifted)


def transpose(t: Tiling) -> Tiling:
    """Mirror across the main diagonal; the realized ratio inverts."""
    flipped = tuple(
        PlacedTile(x=tile.y, y=tile.x, w=tile.h, h=tile.w, shape_index=tile.shape_index)
        for tile in t.tiles
    )
    return Tiling(width=t.height, height=t.width, tiles=flipped)


def scale_rational(t: Tiling, q: Rational) -> Tiling:
    """Ratio times m/n via an n-wide, m-high grid of copies, rescaled.

    The grid spans n x m*a in units of the 1 x a operand; dividing all
    coordinates by n restores width 1 and leaves every side ratio alone.
    Tile count multiplies by m*n.
    """
    q = Fraction(q)
    if q <= 0:
        raise NonPositiveScale(f"scale factor must be positive, got {q}")
    one = t.ctx.one()
    if t.width != one:
        raise WidthMismatch(f"scale needs a width-1 operand, got {t.width}")
    if q == 1:
        return t
    m, n = q.numerator, q.denominator
    shrink = Fraction(1, n)
    tiles = []
    for row in range(m):
        dy = row * t.height
        for col in range(n):
            for tile in t.tiles:
                tiles.append(
                    PlacedTile(
                        x=(tile.x + col) * shrink,
                        y=(tile.y + dy) * shrink,
                        w=tile.w * shrink,
                        h=tile.h * shrink,
                        shape_index=tile.shape_index,
                    )
                )
    return Tiling(width=one, height=t.height * q, tiles=tuple(tiles))


def _normalize(t: Tiling) -> Tiling:
    """Uniform similarity taking the bounds width to exactly 1."""
    one = t.ctx.one()
    if t.width == one:
        return t
    s = t.width.inv()
    tiles = tuple(
        PlacedTile(
            x=tile.x * s, y=tile.y * s, w=tile.w * s, h=tile.h * s,
            shape_index=tile.shape_index,
        )
        for tile in t.tiles
    )
    return Tiling(width=one, height=t.height * s, tiles=tiles)


def evaluate(recipe: Recipe, shapes: Sequence[Quad]) -> Tiling:
    """Build the exact geometry of a recipe; always width-1 bounds."""
    if isinstance(recipe, UnitTile):
        return unit(recipe.shape_index, shapes[recipe.shape_index])
    if isinstance(recipe, Stack):
        return stack(evaluate(recipe.lower, shapes), evaluate(recipe.upper, shapes))
    if isinstance(recipe, Transpose):
        return _normalize(transpose(evaluate(recipe.child, shapes)))
    return scale_rational(evaluate(recipe.child, shapes), recipe.q)


def _scaled(child: Recipe, q: Fraction) -> Recipe:
    # identity scales would only inflate the tree
    return child if q == 1 else ScaleRational(child, q)


def _conj_plan(x: Quad, i: int) -> Recipe:
    """Recipe for ratio conj(x) from shape x; needs conj(x) > 0.

    transpose gives 1/x = conj(x)/norm(x); the norm is a positive
    rational here, so one grid scale lands exactly on conj(x).
    """
    if x.conj().sign() <= 0:
        raise ConjugateNotPositive(f"conj({x}) = {x.conj()} is not positive")
    return _scaled(Transpose(UnitTile(i)), x.norm())


def _rational_plan(q: Fraction, x: Quad, i: int) -> Recipe:
    """Recipe for rational ratio q > 0 from shape x with conj(x) > 0.

    x + conj(x) = 2a is rational, so stacking x on its conjugate block
    and scaling by q/(2a) works; a rational shape skips the stack.
    """
    if q <= 0:
        raise NonPositiveScale(f"ratio must be positive, got {q}")
    if x.f == 0:
        return _scaled(UnitTile(i), q / x.e)
    core = Stack(UnitTile(i), _conj_plan(x, i))
    return _scaled(core, q / (2 * x.e))


def _neg_conj_plan(x: Quad, i: int) -> Recipe:
    """Recipe for ratio -conj(x) from shape x; needs conj(x) < 0.

    1/x = -conj(x)/(-norm(x)) with -norm(x) a positive rational.
    """
    if x.conj().sign() >= 0:
        raise ConjugateNotNegative(f"conj({x}) = {x.conj()} is not negative")
    return _scaled(Transpose(UnitTile(i)), -x.norm())


def _sqrtp_plan(q: Fraction, x: Quad, i: int) -> Recipe:
    """Recipe for ratio q*sqrt(p), q > 0, from shape x with conj(x) < 0.

    x + (-conj(x)) = 2b*sqrt(p), so stack and scale by q/(2b).
    """
    if q <= 0:
        raise NonPositiveScale(f"sqrt(p) coefficient must be positive, got {q}")
    core = Stack(UnitTile(i), _neg_conj_plan(x, i))
    return _scaled(core, q / (2 * x.f))


def conjugate_tiling(x: Quad) -> Tiling:
    """Tiling of ratio conj(x) by x-tiles (conj(x) > 0 required)."""
    return evaluate(_conj_plan(x, 0), (x,))


def rational_tiling(q: Rational, x: Quad) -> Tiling:
    """Tiling of rational ratio q > 0 by x-tiles (conj(x) > 0 required)."""
    return evaluate(_rational_plan(Fraction(q), x, 0), (x,))


def neg_conjugate_tiling(x: Quad) -> Tiling:
    """Tiling of ratio -conj(x) by x-tiles (conj(x) < 0 required)."""
    return evaluate(_neg_conj_plan(x, 0), (x,))


def sqrtp_tiling(q: Rational, x: Quad) -> Tiling:
    """Tiling of ratio q*sqrt(p), q > 0, by x-tiles (conj(x) < 0 required)."""
    return evaluate(_sqrtp_plan(Fraction(q), x, 0), (x,))


def plan(spec: ShapeSpec) -> Recipe:
    """Recipe realizing the target ratio; raises NotTileable on NO.

    Dispatches on the conjugate-sign classification.  Zero summands are
    skipped rather than realized as empty strips, and negative target
    components route through the reciprocal, whose components are both
    positive, followed by a transpose.
    """
    decision = decide(spec)
    if not decision.tileable:
        raise NotTileable(decision.reason)
    c = decision.classification
    z = spec.target
    e, f = z.e, z.f
    if c.kind == MIXED:
        i, j = c.pos_index, c.neg_index
        if f == 0:
            return _rational_plan(e, spec.shapes[i], i)
        if e == 0:
            return _sqrtp_plan(f, spec.shapes[j], j)
        if e > 0 and f > 0:
            return Stack(
                _rational_plan(e, spec.shapes[i], i),
                _sqrtp_plan(f, spec.shapes[j], j),
            )
        # z > 0 rules out e < 0 and f < 0 at once
        inner = plan(ShapeSpec(ctx=spec.ctx, shapes=spec.shapes, target=z.inv()))
        return Transpose(inner)
    if c.kind == ALL_POSITIVE_CONJ:
        k = c.extremal_index
        xk = spec.shapes[k]
        if f == 0:
            return _rational_plan(e, xk, k)
        ak, bk = xk.e, abs(xk.f)
        # the sqrt(p) block: x_k itself or its conjugate, whichever has
        # the sqrt(p) component of the same sign as f
        if (f > 0) == (xk.f > 0):
            block: Recipe = UnitTile(k)
        else:
            block = _conj_plan(xk, k)
        first = _scaled(block, abs(f) / bk)
        remainder = e - abs(f) * ak / bk
        if remainder == 0:
            return first
        return Stack(first, _rational_plan(remainder, xk, k))
    k = c.extremal_index
    xk = spec.shapes[k]
    if e == 0:
        return _sqrtp_plan(f, xk, k)
    ak, bk = abs(xk.e), xk.f
    if (e > 0) == (xk.e > 0):
        block = UnitTile(k)
    else:
        block = _neg_conj_plan(xk, k)
    first = _scaled(block, abs(e) / ak)
    remainder = f - abs(e) * bk / ak
    if remainder == 0:
        return first
    return Stack(first, _sqrtp_plan(remainder, xk, k))


def construct(spec: ShapeSpec) -> Tiling:
    """Build and self-verify a tiling for a YES instance.

    The output has bounds 1 x target, every tile carries its shape index,
    and exact cover, side ratios and the realized ratio are all checked
    before returning (guillotine structure is checked by the test suite,
    not here, to keep construction fast).
    """
    recipe = plan(spec)
    t = evaluate(recipe, spec.shapes)
    cover = verify_exact_cover(t)
    ratios = verify_ratios(t, spec.shapes)
    correct_ratio = t.width == spec.ctx.one() and t.height == spec.target
    if not (cover.dissection_ok and ratios.ratios_ok and correct_ratio):
        raise InternalVerificationFailure(
            f"constructed tiling failed self-verification for target {spec.target}"
        )
    return t
