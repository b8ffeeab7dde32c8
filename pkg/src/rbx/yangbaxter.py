"""Dendriform splitting, tensor and operator Yang-Baxter equations, and the
modified relation for B = 2R + theta id.

The tensor equation is checked in two modes because the two circulating
conventions differ in their last term: the "printed" mode evaluates
r13 r12 - r12 r23 + r23 r12, the "standard" mode r13 r12 - r12 r23 + r23 r13.
Solutions like E12 (x) E12 satisfy both (every term vanishes separately), so
the constructive route to weight-0 operators is available either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import RBAlgebra, SamplePlan, b_operator, double_product, half_shuffles
from .errors import ConfigError
from .models import RatMatrix, matrix_algebra
from .report import CheckResult

__all__ = [
    "TensorR",
    "LieCarrier",
    "kron",
    "aybe_check",
    "rb_from_tensor",
    "tensor_rb_algebra",
    "check_dendriform",
    "check_operator_ybe",
    "check_modified_ybe",
]


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    na, nb = a.dim, b.dim
    return RatMatrix(
        [
            [a.rows[i // nb][j // nb] * b.rows[i % nb][j % nb] for j in range(na * nb)]
            for i in range(na * nb)
        ]
    )


@dataclass(frozen=True)
class TensorR:
    """r = sum u_i (x) v_i with all factors square of one dimension."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        dims = {m.dim for pair in self.pairs for m in pair}
        if len(dims) > 1:
            raise ValueError(f"mixed factor dimensions {sorted(dims)}")

    @property
    def dim(self) -> int:
        return self.pairs[0][0].dim if self.pairs else 0

    def embeddings(self):
        """r12, r13, r23 in the tensor cube, as dim^3 matrices."""
        n = self.dim
        eye = RatMatrix.identity(n)
        zero = RatMatrix.zeros(n**3)
        r12 = r13 = r23 = zero
        for u, v in self.pairs:
            r12 = r12 + kron(kron(u, v), eye)
            r13 = r13 + kron(kron(u, eye), v)
            r23 = r23 + kron(kron(eye, u), v)
        return r12, r13, r23


def aybe_check(r: TensorR, mode: str = "printed") -> CheckResult:
    """Associative Yang-Baxter equation in the tensor cube."""
    name = f"aybe/{mode}/dim={r.dim}"
    anchor = "Eq. (ag)"
    if not r.pairs:
        return CheckResult.ok(name, anchor)
    r12, r13, r23 = r.embeddings()
    if mode == "printed":
        value = r13 * r12 - r12 * r23 + r23 * r12
    elif mode == "standard":
        value = r13 * r12 - r12 * r23 + r23 * r13
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if value == RatMatrix.zeros(r.dim**3):
        return CheckResult.ok(name, anchor)
    return CheckResult.bad(name, anchor, f"residual tensor {value}")


def rb_from_tensor(r: TensorR):
    """x -> sum u_i x v_i; a weight-0 Rota-Baxter operator when AYBE holds."""
    check = aybe_check(r)
    if check.status != "pass":
        raise ValueError(f"tensor fails the associative Yang-Baxter equation: {check.counterexample}")

    def rb(x: RatMatrix) -> RatMatrix:
        out = RatMatrix.zeros(x.dim)
        for u, v in r.pairs:
            out = out + u * x * v
        return out

    return rb


def tensor_rb_algebra(r: TensorR) -> RBAlgebra:
    """The matrix algebra re-equipped with the induced weight-0 operator."""
    base = matrix_algebra(r.dim)
    return RBAlgebra(
        name=f"tensor-rb[{r.dim}]",
        weight=Fraction(0),
        zero=base.zero,
        one=base.one,
        rb=rb_from_tensor(r),
        commutative=False,
        basis=base.basis,
        random_element=base.random_element,
    )


@dataclass(frozen=True)
class LieCarrier:
    """Commutator bracket on top of an associative model."""

    alg: RBAlgebra

    def bracket(self, x, y):
        return x * y - y * x


# ---------------------------------------------------------------------------
# axiom checkers


def check_dendriform(alg: RBAlgebra, plan: SamplePlan) -> CheckResult:
    """Half-shuffle splitting of a weight-0 product into up/down parts."""
    name = f"dendriform/{alg.name}/{plan.mode}"
    anchor = "Eq. (demishuffleNC)"
    if alg.weight != 0:
        raise ConfigError(f"dendriform splitting needs weight 0, got {alg.weight}")

    def up(x, y):
        return half_shuffles(alg, x, y)[0]

    def down(x, y):
        return half_shuffles(alg, x, y)[1]

    for a, b, c in plan.triples(alg):
        pairs = [
            ("up-up", up(up(a, b), c), up(a, up(b, c) + down(b, c))),
            ("down-up", down(a, up(b, c)), up(down(a, b), c)),
            ("down-down", down(a, down(b, c)), down(up(a, b) + down(a, b), c)),
        ]
        for tag, lhs, rhs in pairs:
            if not lhs == rhs:
                return CheckResult.bad(
                    name, anchor, f"{tag}: a={a}; b={b}; c={c}; lhs={lhs}; rhs={rhs}"
                )
        if alg.commutative:
            # the commutative axioms collapse the triple to a single product
            if not down(a, b) == up(b, a):
                return CheckResult.bad(name, anchor, f"a={a}; b={b}: down != flipped up")
            lhs = down(a, down(b, c))
            rhs = down(down(a, b) + down(b, a), c)
            if not lhs == rhs:
                return CheckResult.bad(
                    name, anchor, f"comm: a={a}; b={b}; c={c}; lhs={lhs}; rhs={rhs}"
                )
    return CheckResult.ok(name, anchor)


def check_operator_ybe(lie, rb=None, plan: SamplePlan = SamplePlan("exhaustive")) -> CheckResult:
    """Operator classical YBE and the pre-Lie nature of the split brackets.

    `lie` may be a LieCarrier or any algebra carrying the commutator bracket.
    With no explicit operator the carrier's own R is used, which must then
    have weight 0.
    """
    if not isinstance(lie, LieCarrier):
        lie = LieCarrier(lie)
    alg = lie.alg
    name = f"operator-ybe/{alg.name}/{plan.mode}"
    anchor = "Eq. (ybc)"
    if rb is None:
        if alg.weight != 0:
            raise ConfigError(f"operator YBE needs weight 0, got {alg.weight}")
        rb = alg.rb
    br = lie.bracket

    def up(x, y):
        return br(x, rb(y))

    def down(x, y):
        return br(rb(x), y)

    def br_r(x, y):
        return br(rb(x), y) + br(x, rb(y))

    for x, y in plan.pairs(alg):
        lhs = br(rb(x), rb(y))
        rhs = rb(br_r(x, y))
        if not lhs == rhs:
            return CheckResult.bad(name, anchor, f"x={x}; y={y}; lhs={lhs}; rhs={rhs}")
        split = up(x, y) - up(y, x)
        if not br_r(x, y) == split:
            return CheckResult.bad(name, anchor, f"x={x}; y={y}; bracket={br_r(x, y)}; split={split}")
    for x, y, z in plan.triples(alg):
        jac = br_r(br_r(x, y), z) + br_r(br_r(y, z), x) + br_r(br_r(z, x), y)
        if not jac == alg.zero:
            return CheckResult.bad(name, anchor, f"jacobi x={x}; y={y}; z={z}; value={jac}")
        lhs = up(up(x, y), z) - up(x, up(y, z))
        rhs = up(up(x, z), y) - up(x, up(z, y))
        if not lhs == rhs:
            return CheckResult.bad(name, anchor, f"up not right pre-Lie: x={x}; y={y}; z={z}")
        lhs = down(down(x, y), z) - down(x, down(y, z))
        rhs = down(down(y, x), z) - down(y, down(x, z))
        if not lhs == rhs:
            return CheckResult.bad(name, anchor, f"down not left pre-Lie: x={x}; y={y}; z={z}")
    return CheckResult.ok(name, anchor)


def check_modified_ybe(alg: RBAlgebra, plan: SamplePlan) -> CheckResult:
    """B = 2R + theta id: associative and Lie modified relations, the Jacobi
    identity of the halved bracket, and the double-product rewrite."""
    name = f"modified-ybe/{alg.name}/{plan.mode}"
    anchor = "Eq. (modRBR)"
    theta = alg.weight
    half = Fraction(1, 2)
    lie = LieCarrier(alg)
    br = lie.bracket

    def b(x):
        return b_operator(alg, x)

    def br_b(x, y):
        return half * (br(b(x), y) + br(x, b(y)))

    for x, y in plan.pairs(alg):
        lhs = b(x) * b(y)
        rhs = b(b(x) * y + x * b(y)) - theta**2 * (x * y)
        if not lhs == rhs:
            return CheckResult.bad(name, anchor, f"x={x}; y={y}; lhs={lhs}; rhs={rhs}")
        lhs = br(b(x), b(y))
        rhs = b(br(b(x), y) + br(x, b(y))) - theta**2 * br(x, y)
        if not lhs == rhs:
            return CheckResult.bad(name, anchor, f"lie form: x={x}; y={y}; lhs={lhs}; rhs={rhs}")
        lhs = double_product(alg, x, y)
        rhs = half * (b(x) * y + x * b(y))
        if not lhs == rhs:
            return CheckResult.bad(name, anchor, f"rewrite: x={x}; y={y}; lhs={lhs}; rhs={rhs}")
    for x, y, z in plan.triples(alg):
        jac = br_b(br_b(x, y), z) + br_b(br_b(y, z), x) + br_b(br_b(z, x), y)
        if not jac == alg.zero:
            return CheckResult.bad(name, anchor, f"jacobi x={x}; y={y}; z={z}; value={jac}")
    return CheckResult.ok(name, anchor)
