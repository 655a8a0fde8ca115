"""Classification of shape sets and the exact tileability decision.

A problem instance fixes a radicand p, shape ratios x_1..x_n > 0 and a
target ratio z > 0, all in Q[sqrt(p)].  The decision splits on the signs
of the shape conjugates: with both signs present every positive field
element is tileable; with all conjugates positive (resp. negative) the
tileable targets form a closed cone around the rational (resp. sqrt(p))
axis whose slope is an exact rational computed from the extremal shape.

``decide`` never consults the constructor; ``affine_decide`` is a second,
independently coded n=1 criterion used for differential testing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatch, DegenerateShape, RationalShape
from .exactfield import FieldContext, Quad, Rational, rational_sign

MIXED = "mixed"
ALL_POSITIVE_CONJ = "all_positive_conj"
ALL_NEGATIVE_CONJ = "all_negative_conj"


@dataclass(frozen=True)
class ShapeSpec:
    """An instance: field context, shape ratios and the target ratio."""

    ctx: FieldContext
    shapes: tuple[Quad, ...]
    target: Quad

    def __post_init__(self) -> None:
        object.__setattr__(self, "shapes", tuple(self.shapes))
        if not self.shapes:
            raise DegenerateShape("at least one shape ratio is required")
        for i, x in enumerate(self.shapes):
            if x.ctx.p != self.ctx.p:
                raise ContextMismatch(f"shape {i} has radicand {x.ctx.p}")
            if x.sign() <= 0:
                raise DegenerateShape(f"shape {i} = {x} is not positive")
        if self.target.ctx.p != self.ctx.p:
            raise ContextMismatch(f"target has radicand {self.target.ctx.p}")
        if self.target.sign() <= 0:
            raise DegenerateShape(f"target {self.target} is not positive")


@dataclass(frozen=True)
class Classification:
    """Which conjugate-sign case an instance falls into.

    kind == MIXED: pos_index / neg_index are the smallest shape indices
    whose conjugates are positive resp. negative.  In the two cone cases
    extremal_index names the shape attaining the cone bound (smallest
    index on ties) and bound is that exact rational slope.
    """

    kind: str
    pos_index: int | None = None
    neg_index: int | None = None
    extremal_index: int | None = None
    bound: Rational | None = None

    def admissible_set(self) -> str:
        if self.kind == MIXED:
            return "every positive e + f*sqrt(p) with e, f rational"
        if self.kind == ALL_POSITIVE_CONJ:
            return f"e > 0 and |f| <= ({self.bound})*e"
        return f"f > 0 and |e| <= ({self.bound})*f"


@dataclass(frozen=True)
class Decision:
    tileable: bool
    classification: Classification
    witness_plan: str | None = None
    reason: str | None = None

    @property
    def verdict(self) -> str:
        return "YES" if self.tileable else "NO"


def classify(spec: ShapeSpec) -> Classification:
    """Split on the exact conjugate signs of all shapes.

    A zero conjugate is impossible (it would force sqrt(p) rational), so
    every shape lands strictly on one side.
    """
    signs = []
    for x in spec.shapes:
        s = x.conj().sign()
        assert s != 0, "conj(x) == 0 contradicts sqrt(p) irrational"
        signs.append(s)
    if 1 in signs and -1 in signs:
        return Classification(
            MIXED, pos_index=signs.index(1), neg_index=signs.index(-1)
        )
    if all(s > 0 for s in signs):
        # x > 0 and conj(x) > 0 force the rational part positive.
        ratios = [abs(x.f) / x.e for x in spec.shapes]
        bound = max(ratios)
        return Classification(
            ALL_POSITIVE_CONJ, extremal_index=ratios.index(bound), bound=bound
        )
    # x > 0 and conj(x) < 0 force the sqrt(p) part positive.
    ratios = [abs(x.e) / x.f for x in spec.shapes]
    bound = max(ratios)
    return Classification(
        ALL_NEGATIVE_CONJ, extremal_index=ratios.index(bound), bound=bound
    )


def decide(spec: ShapeSpec) -> Decision:
    """Exact YES/NO tileability of the target by the given shapes."""
    c = classify(spec)
    e, f = spec.target.e, spec.target.f
    if c.kind == MIXED:
        plan = (
            f"split the target into a rational block built from shape "
            f"{c.pos_index} and a sqrt(p)-multiple block built from shape "
            f"{c.neg_index}; take the reciprocal first if a component is negative"
        )
        return Decision(True, c, witness_plan=plan)
    if c.kind == ALL_POSITIVE_CONJ:
        ok = e > 0 and abs(f) <= e * c.bound
        axis, comp = "e", (e, f)
    else:
        ok = f > 0 and abs(e) <= f * c.bound
        axis, comp = "f", (f, e)
    if ok:
        plan = (
            f"scale shape {c.extremal_index} (or its conjugate block) to match "
            f"the sqrt(p) component, then pad with a block on the {axis}-axis"
        )
        return Decision(True, c, witness_plan=plan)
    reason = (
        f"target ({spec.target}) lies outside the admissible cone "
        f"{c.admissible_set()}: |{comp[1]}| > {c.bound} * {comp[0]}; "
        f"an impossibility certificate is available via tiling.make_bundle"
    )
    return Decision(False, c, reason=reason)


def affine_decide(z: Quad, x: Quad) -> bool:
    """Independent n=1 criterion via the affine form z = d*x + g.

    With x = alpha + beta*sqrt(p), beta != 0, the unique rationals
    d = f/beta and g = e - d*alpha determine tileability:
    either g = 0 and d > 0, or alpha != 0 with
    g*(alpha^2 - beta^2*p)/alpha > 0 and d + g/(2*alpha) >= 0.

    Shares no case logic with :func:`decide`; used for differential tests.
    """
    if z.ctx.p != x.ctx.p:
        raise ContextMismatch("target and shape use different radicands")
    alpha, beta, p = x.e, x.f, x.ctx.p
    if beta == 0:
        raise RationalShape(f"shape {x} is rational; affine criterion undefined")
    d = z.f / beta
    g = z.e - d * alpha
    if g == 0:
        return d > 0
    if alpha == 0:
        return False
    return (
        rational_sign(g * (alpha * alpha - beta * beta * p) / alpha) > 0
        and d + g / (2 * alpha) >= 0
    )
