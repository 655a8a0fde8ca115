"""Seeded random-instance generators shared across the test suite.

Every generator takes an explicit random.Random so each test pins its
own seed.  Rejection sampling keeps components small; the YES-instance
cone sampling uses the fact that each cone bound is below 1/sqrt(p)
(positive-conjugate case) resp. below sqrt(p) (negative-conjugate case),
which makes the sampled targets automatically positive.
"""

from __future__ import annotations

import random
from fractions import Fraction

from quadtile import ShapeSpec, plan, tile_count, validate_context
from quadtile.exactfield import FieldContext, Quad

# positive non-squares, all above 1 so f*sqrt(p) dominates f in magnitude
P_POOL = (
    Fraction(2),
    Fraction(3),
    Fraction(5),
    Fraction(6),
    Fraction(7),
    Fraction(10),
    Fraction(13),
    Fraction(8, 3),
    Fraction(5, 2),
)

CASES = ("mixed", "all_positive_conj", "all_negative_conj")

NO_KINDS = (
    "over_bound_pos",
    "nonpositive_e",
    "over_bound_neg",
    "nonpositive_f",
    "rational_shape",
)


def rand_ctx(rng: random.Random) -> FieldContext:
    return validate_context(rng.choice(P_POOL))


def rand_fraction(rng: random.Random, lo: int = -6, hi: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_positive_quad(ctx: FieldContext, rng: random.Random) -> Quad:
    while True:
        z = ctx.quad(rand_fraction(rng), rand_fraction(rng))
        if z.sign() > 0:
            return z


def rand_pos_conj_shape(
    ctx: FieldContext, rng: random.Random, allow_rational: bool = True
) -> Quad:
    """x > 0 with conj(x) > 0: the rational part dominates."""
    while True:
        b = rand_fraction(rng, -3, 3, 2)
        if b == 0 and not allow_rational:
            continue
        x = ctx.quad(Fraction(rng.randint(1, 9), rng.randint(1, 2)), b)
        if x.sign() > 0 and x.conj().sign() > 0:
            return x


def rand_neg_conj_shape(ctx: FieldContext, rng: random.Random) -> Quad:
    """x > 0 with conj(x) < 0: the sqrt(p) part dominates."""
    while True:
        x = ctx.quad(
            rand_fraction(rng, -3, 3, 2),
            Fraction(rng.randint(1, 9), rng.randint(1, 2)),
        )
        if x.sign() > 0 and x.conj().sign() < 0:
            return x


def yes_instance(ctx: FieldContext, rng: random.Random, case: str) -> ShapeSpec:
    """A random instance guaranteed YES, in the requested classification case."""
    if case == "mixed":
        shapes = [rand_pos_conj_shape(ctx, rng), rand_neg_conj_shape(ctx, rng)]
        if rng.random() < 0.3:
            extra = rand_pos_conj_shape if rng.random() < 0.5 else rand_neg_conj_shape
            shapes.append(extra(ctx, rng))
        rng.shuffle(shapes)
        target = rand_positive_quad(ctx, rng)
    elif case == "all_positive_conj":
        shapes = [
            rand_pos_conj_shape(ctx, rng) for _ in range(rng.randint(1, 3))
        ]
        bound = max(abs(x.f) / x.e for x in shapes)
        e = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        # endpoints of r reach the extremal rays of the cone
        r = Fraction(rng.randint(-4, 4), 4)
        target = ctx.quad(e, r * e * bound)
    else:
        shapes = [rand_neg_conj_shape(ctx, rng) for _ in range(rng.randint(1, 3))]
        bound = max(abs(x.e) / x.f for x in shapes)
        f = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        r = Fraction(rng.randint(-4, 4), 4)
        target = ctx.quad(r * f * bound, f)
    return ShapeSpec(ctx=ctx, shapes=tuple(shapes), target=target)


def yes_construct_instance(
    ctx: FieldContext, rng: random.Random, case: str, cap: int = 10**4
):
    """A YES instance whose construction recipe stays under `cap` tiles."""
    while True:
        spec = yes_instance(ctx, rng, case)
        recipe = plan(spec)
        if tile_count(recipe) <= cap:
            return spec, recipe


def no_instance_n1(ctx: FieldContext, rng: random.Random, kind: str) -> tuple[Quad, Quad]:
    """A random single-shape NO instance (target, shape) of the given kind.

    over_bound_*: strict cone violation with the leading component positive;
    nonpositive_e / nonpositive_f: the boundary sub-cases;
    rational_shape: b1 = 0, where any nonzero f component refutes.
    """
    if kind == "over_bound_pos":
        x = rand_pos_conj_shape(ctx, rng, allow_rational=False)
        bound = abs(x.f) / x.e
        e = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        f = (e * bound + Fraction(rng.randint(1, 6), rng.randint(1, 3))) * rng.choice((1, -1))
        z = ctx.quad(e, f)
        if z.sign() <= 0:
            z = ctx.quad(e, -f)
    elif kind == "nonpositive_e":
        x = rand_pos_conj_shape(ctx, rng, allow_rational=False)
        e = Fraction(rng.randint(-6, 0), rng.randint(1, 3))
        z = ctx.quad(e, abs(e) + rng.randint(1, 4))
    elif kind == "over_bound_neg":
        x = rand_neg_conj_shape(ctx, rng)
        bound = abs(x.e) / x.f
        f = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        e = (f * bound + Fraction(rng.randint(1, 6), rng.randint(1, 3))) * rng.choice((1, -1))
        z = ctx.quad(e, f)
        if z.sign() <= 0:
            z = ctx.quad(-e, f)
    elif kind == "nonpositive_f":
        x = rand_neg_conj_shape(ctx, rng)
        f = Fraction(rng.randint(-6, 0), rng.randint(1, 3))
        # 4 > sqrt(p) for every pool radicand, so e > |f|*sqrt(p)
        z = ctx.quad(4 * (abs(f) + rng.randint(1, 3)), f)
    else:
        x = ctx.quad(Fraction(rng.randint(1, 9), rng.randint(1, 3)))
        f = Fraction(rng.choice((-1, 1)) * rng.randint(1, 6), rng.randint(1, 3))
        e = rand_fraction(rng, -6, 6, 3) if f > 0 else 4 * abs(f) + 1
        z = ctx.quad(e, f)
        if z.sign() <= 0:
            z = ctx.quad(abs(e) + 1, f)
    assert z.sign() > 0 and x.sign() > 0
    return z, x


def no_instance_multi(
    ctx: FieldContext, rng: random.Random, n: int, reduction_cap: int = 4000
) -> ShapeSpec:
    """A NO instance with n shapes in one cone, target outside it, whose
    bundle reductions stay below `reduction_cap` tiles each."""
    while True:
        if rng.random() < 0.5:
            shapes = [
                rand_pos_conj_shape(ctx, rng, allow_rational=rng.random() < 0.2)
                for _ in range(n)
            ]
            bound = max(abs(x.f) / x.e for x in shapes)
            if rng.random() < 0.25:
                e = Fraction(rng.randint(-4, 0), rng.randint(1, 2))
                target = ctx.quad(e, abs(e) + rng.randint(1, 3))
            else:
                e = Fraction(rng.randint(1, 6), rng.randint(1, 2))
                target = ctx.quad(e, e * bound + Fraction(rng.randint(1, 4), rng.randint(1, 2)))
        else:
            shapes = [rand_neg_conj_shape(ctx, rng) for _ in range(n)]
            bound = max(abs(x.e) / x.f for x in shapes)
            if rng.random() < 0.25:
                f = Fraction(rng.randint(-4, 0), rng.randint(1, 2))
                target = ctx.quad(4 * (abs(f) + rng.randint(1, 3)), f)
            else:
                f = Fraction(rng.randint(1, 6), rng.randint(1, 2))
                target = ctx.quad(f * bound + Fraction(rng.randint(1, 4), rng.randint(1, 2)), f)
        spec = ShapeSpec(ctx=ctx, shapes=tuple(shapes), target=target)
        bounds = [abs(x.f) / x.e if x.conj().sign() > 0 else abs(x.e) / x.f for x in shapes]
        k = bounds.index(max(bounds))
        costs = []
        for i, x in enumerate(shapes):
            if i == k:
                continue
            reduction = ShapeSpec(ctx=ctx, shapes=(shapes[k],), target=x)
            costs.append(tile_count(plan(reduction)))
        if all(c <= reduction_cap for c in costs):
            return spec
