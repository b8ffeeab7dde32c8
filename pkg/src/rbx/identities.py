"""Fixed points, Magnus/Spitzer identities, Bohnenblust-Spitzer, Atkinson,
Bogoliubov, and the flows/BCH correspondence.

Everything works over truncated series in the grading parameter with exact
carrier coefficients, so each check is an exact coefficientwise comparison.

Conventions fixed here once:

* a "source" series z feeds equations as l = 1 + lambda R(l z); a plain
  element x is the constant source series. Bogoliubov instead consumes a
  series with zero constant term and no extra lambda shift, matching the
  degree-by-degree renormalization recursion f_n = R((f x)_n).
* the Magnus recursion is Omega = lambda z + sum_n ((-1)^n B_n / n!)
  ell^n_{Omega |>}(lambda z). The commutative closed form
  theta^{-1} log(1 + theta F) pins the sign convention; the recursion
  reproduces it exactly (checked coefficientwise by spitzer checks).
* the flows composition is implemented so that the solution map is a
  homomorphism: solve(x # y) = solve(x) solve(y). With left fixed points
  f = 1 + lambda R(fx) this forces x # y = y + exp(-ell_{Omega'(y) |>})(x);
  the variant with x and y swapped composes the factors in the opposite
  order (verified by expanding grade 2: the correction must be -y |> x).
* the partitions closed form carries (-theta)^{n - |pi|}. The n = 2 case
  F1 * F2 - theta F2 F1 = R(F1)F2 + R(F2)F1 forces the sign.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import RBAlgebra, SamplePlan, double_product, prelie_left, tilde_operator
from .combinat import Permutation, canonical_cycles, permutations, set_partitions
from .errors import ConfigError
from .report import CheckResult
from .scalars import bernoulli
from .series import LambdaSeries, series_exp, series_inverse, series_log

__all__ = [
    "FixedPointSolution",
    "MagnusExpansion",
    "BSOperands",
    "solve_fixed_point",
    "solve_fixed_point_series",
    "atkinson_solutions",
    "check_atkinson",
    "bogoliubov_decompose",
    "check_bogoliubov",
    "spitzer_check_commutative",
    "prelie_magnus",
    "prelie_magnus_of_series",
    "check_nc_spitzer",
    "cycle_chain_product",
    "check_bohnenblust_spitzer",
    "bch_series",
    "bch_of_series",
    "flows_product",
    "check_flows_product_law",
    "check_flows_bch",
]

SIDE_LEFT = "left-R"
SIDE_RIGHT = "right-Rtilde"

BS_FORMS = ("commutative-partitions", "cycles-prelie", "weight-zero")


def _constant_source(alg: RBAlgebra, x, order: int) -> LambdaSeries:
    return LambdaSeries.term(alg, 0, x, order)


def _pow(x, n: int):
    out = x
    for _ in range(n - 1):
        out = out * x
    return out


def _first_mismatch(a: LambdaSeries, b: LambdaSeries):
    for k in range(min(a.order, b.order) + 1):
        if not a.coefficient(k) == b.coefficient(k):
            return k, a.coefficient(k), b.coefficient(k)
    return None


# ---------------------------------------------------------------------------
# fixed points


def solve_fixed_point_series(
    alg: RBAlgebra, z: LambdaSeries, side: str = SIDE_LEFT, order: int | None = None
) -> LambdaSeries:
    """Solve l = 1 + lambda R(l z) (left-R) or h = 1 + lambda Rtilde(z h)."""
    n_max = z.order if order is None else order
    coeffs = [alg.one]
    for n in range(1, n_max + 1):
        w = alg.zero
        for i in range(n):  # grade of the solution factor
            j = n - 1 - i
            if j > z.order:
                continue
            if side == SIDE_LEFT:
                w = w + coeffs[i] * z.coefficient(j)
            elif side == SIDE_RIGHT:
                w = w + z.coefficient(j) * coeffs[i]
            else:
                raise ValueError(f"unknown side {side!r}")
        coeffs.append(alg.rb(w) if side == SIDE_LEFT else tilde_operator(alg, w))
    return LambdaSeries(alg, tuple(coeffs))


def solve_fixed_point(alg: RBAlgebra, x, side: str = SIDE_LEFT, order: int = 6) -> LambdaSeries:
    return solve_fixed_point_series(alg, _constant_source(alg, x, order), side, order)


@dataclass(frozen=True)
class FixedPointSolution:
    """Both one-sided fixed points of the same source element."""

    f: LambdaSeries
    h: LambdaSeries
    source: object
    order: int


def atkinson_solutions(alg: RBAlgebra, x, order: int) -> FixedPointSolution:
    return FixedPointSolution(
        f=solve_fixed_point(alg, x, SIDE_LEFT, order),
        h=solve_fixed_point(alg, x, SIDE_RIGHT, order),
        source=x,
        order=order,
    )


def check_atkinson(
    alg: RBAlgebra, x, order: int, plan: SamplePlan = SamplePlan("exhaustive")
) -> CheckResult:
    """Factorization fh = 1 - lambda theta fxh, its inverse form, and the
    splitting lemma R(a)Rtilde(b) = R(a Rtilde(b)) + Rtilde(R(a) b)."""
    name = f"atkinson/{alg.name}/N={order}"
    anchor = "Eq. (Atkins)"
    theta = alg.weight
    sol = atkinson_solutions(alg, x, order)
    lam_x = LambdaSeries.term(alg, 1, x, order)
    one_s = LambdaSeries.one(alg, order)

    lhs = sol.f * sol.h
    rhs = one_s - theta * (sol.f * lam_x * sol.h)
    miss = _first_mismatch(lhs, rhs)
    if miss:
        k, a, b = miss
        return CheckResult.bad(name, anchor, f"x={x}; grade {k}: fh={a}; 1-th*fxh={b}")

    lhs = series_inverse(sol.f) * series_inverse(sol.h)
    rhs = one_s + theta * lam_x
    miss = _first_mismatch(lhs, rhs)
    if miss:
        k, a, b = miss
        return CheckResult.bad(name, anchor, f"x={x}; grade {k}: f^-1 h^-1={a}; 1+th*x={b}")

    for a, b in plan.pairs(alg):
        tb = tilde_operator(alg, b)
        left = alg.rb(a) * tb
        right = alg.rb(a * tb) + tilde_operator(alg, alg.rb(a) * b)
        if not left == right:
            return CheckResult.bad(name, anchor, f"lemma a={a}; b={b}; lhs={left}; rhs={right}")
    return CheckResult.ok(name, anchor)


# ---------------------------------------------------------------------------
# Bogoliubov recursion (idempotent projector splitting)


def bogoliubov_decompose(alg: RBAlgebra, x: LambdaSeries):
    """Solve f = 1 + R(fx) and h^-1 = 1 - Rtilde(fx) degree by degree.

    x must have zero constant term; the grading lives inside x itself.
    """
    if not x.coefficient(0) == alg.zero:
        raise ValueError("source series must have zero constant term")
    f = [alg.one]
    hinv = [alg.one]
    for n in range(1, x.order + 1):
        w = alg.zero
        for i in range(n):
            w = w + f[i] * x.coefficient(n - i)
        f.append(alg.rb(w))
        hinv.append(-tilde_operator(alg, w))
    return LambdaSeries(alg, tuple(f)), LambdaSeries(alg, tuple(hinv))


def check_bogoliubov(alg: RBAlgebra, x: LambdaSeries) -> CheckResult:
    """Counterterm purely in the image of R, renormalized part killed by R,
    and the factorization f (1 - x) h = 1."""
    name = f"bogoliubov/{alg.name}/N={x.order}"
    anchor = "Eq. (Atkins)"
    f, hinv = bogoliubov_decompose(alg, x)
    for n in range(1, x.order + 1):
        fn = f.coefficient(n)
        hn = hinv.coefficient(n)
        if not alg.rb(hn) == alg.zero:
            return CheckResult.bad(name, anchor, f"grade {n}: renormalized part {hn} not R-free")
        if not tilde_operator(alg, fn) == alg.zero:
            return CheckResult.bad(name, anchor, f"grade {n}: counterterm {fn} not purely in im R")
    h = series_inverse(hinv)
    one_s = LambdaSeries.one(alg, x.order)
    prod = f * (one_s - x) * h
    miss = _first_mismatch(prod, one_s)
    if miss:
        k, a, _ = miss
        return CheckResult.bad(name, anchor, f"grade {k}: f(1-x)h={a}; expected unit")
    return CheckResult.ok(name, anchor)


# ---------------------------------------------------------------------------
# Magnus expansion and Spitzer identities


@dataclass(frozen=True)
class MagnusExpansion:
    omega: LambdaSeries
    source: object
    weight: Fraction


def _apply_prelie_series(alg: RBAlgebra, w: LambdaSeries, t: LambdaSeries) -> LambdaSeries:
    """Grade g of w |> t, using only w grades >= 1."""
    out = []
    for g in range(t.order + 1):
        acc = alg.zero
        for i in range(1, g + 1):
            acc = acc + prelie_left(alg, w.coefficient(i), t.coefficient(g - i))
        out.append(acc)
    return LambdaSeries(alg, tuple(out))


def prelie_magnus_of_series(alg: RBAlgebra, z: LambdaSeries, order: int) -> LambdaSeries:
    """Omega = lambda z + sum_{n>0} ((-1)^n B_n / n!) ell^n_{Omega |>}(lambda z).

    Grade k of the ell^n term pairs Omega grades >= 1 with a lambda z grade
    >= 1, so it only reads Omega below grade k: the recursion is well founded
    and each coefficient is independent of the truncation order.
    """
    lam_z = LambdaSeries(
        alg, tuple([alg.zero] + [z.coefficient(k) for k in range(order)])
    )
    omega = [alg.zero]
    for k in range(1, order + 1):
        acc = lam_z.coefficient(k)
        partial = LambdaSeries(alg, tuple(omega + [alg.zero] * (order + 1 - len(omega))))
        tower = lam_z
        for n in range(1, k):
            tower = _apply_prelie_series(alg, partial, tower)
            c = Fraction((-1) ** n) * bernoulli(n) / math.factorial(n)
            if c:
                acc = acc + c * tower.coefficient(k)
        omega.append(acc)
    return LambdaSeries(alg, tuple(omega))


def prelie_magnus(alg: RBAlgebra, x, order: int) -> MagnusExpansion:
    omega = prelie_magnus_of_series(alg, _constant_source(alg, x, order), order)
    return MagnusExpansion(omega=omega, source=x, weight=alg.weight)


def _log_closed_form(alg: RBAlgebra, x, order: int) -> LambdaSeries:
    """theta^{-1} log(1 + theta lambda x) as a series of carrier elements.

    Coefficient n is (-1)^(n-1) theta^(n-1) x^n / n; at theta = 0 only the
    linear term survives, which is the correct algebraic limit.
    """
    coeffs = [alg.zero]
    for n in range(1, order + 1):
        c = Fraction((-1) ** (n - 1), n) * alg.weight ** (n - 1)
        coeffs.append(c * _pow(x, n) if c else alg.zero)
    return LambdaSeries(alg, tuple(coeffs))


def spitzer_check_commutative(alg: RBAlgebra, x, order: int) -> CheckResult:
    """log of the fixed point equals R(theta^{-1} log(1 + theta lambda x)),
    and the Magnus series collapses to the same closed form."""
    name = f"spitzer/{alg.name}/N={order}"
    anchor = "Eq. (SpitzId)"
    if not alg.commutative:
        raise ConfigError(f"spitzer closed form needs a commutative carrier, not {alg.name}")
    closed = _log_closed_form(alg, x, order)
    lhs = series_log(solve_fixed_point(alg, x, SIDE_LEFT, order))
    rhs = LambdaSeries(alg, tuple(alg.rb(c) for c in closed.coeffs))
    miss = _first_mismatch(lhs, rhs)
    if miss:
        k, a, b = miss
        return CheckResult.bad(name, anchor, f"x={x}; grade {k}: log f={a}; R(closed form)={b}")

    omega = prelie_magnus(alg, x, order).omega
    miss = _first_mismatch(omega, closed)
    if miss:
        k, a, b = miss
        return CheckResult.bad(name, anchor, f"x={x}; grade {k}: omega={a}; closed form={b}")
    return CheckResult.ok(name, anchor)


def check_nc_spitzer(alg: RBAlgebra, x, order: int) -> CheckResult:
    """R applied to the Magnus series is the log of the left fixed point."""
    name = f"nc-spitzer/{alg.name}/N={order}"
    anchor = "Eq. (pLMag)"
    omega = prelie_magnus(alg, x, order).omega
    lhs = LambdaSeries(alg, tuple(alg.rb(c) for c in omega.coeffs))
    rhs = series_log(solve_fixed_point(alg, x, SIDE_LEFT, order))
    miss = _first_mismatch(lhs, rhs)
    if miss:
        k, a, b = miss
        return CheckResult.bad(name, anchor, f"x={x}; grade {k}: R(omega)={a}; log f={b}")
    return CheckResult.ok(name, anchor)


# ---------------------------------------------------------------------------
# Bohnenblust-Spitzer


@dataclass(frozen=True)
class BSOperands:
    alg: RBAlgebra
    operands: tuple

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(self.operands))
        if not 1 <= len(self.operands) <= 6:
            raise ConfigError(f"operand count {len(self.operands)} outside 1..6")

    @property
    def n(self) -> int:
        return len(self.operands)

    def at(self, i: int):
        """1-based access, matching permutation indices."""
        return self.operands[i - 1]


def _nested_lhs(ops: BSOperands) -> object:
    """sum over sigma of R(...R(R(F_s1)F_s2)...)F_sn, last factor outside."""
    alg = ops.alg
    total = alg.zero
    for sigma in itertools.permutations(range(1, ops.n + 1)):
        acc = ops.at(sigma[0])
        for i in sigma[1:]:
            acc = alg.rb(acc) * ops.at(i)
        total = total + acc
    return total


def cycle_chain_product(ops: BSOperands, sigma: Permutation, variant: str):
    """One permutation's contribution to the closed-form right-hand side.

    Each canonical cycle (a_0 a_1 ... a_m) becomes a chain seeded at F_{a_0}
    with right factors applied innermost-first: the associative variant
    multiplies by theta F_{a_i}, the prelie variant applies y -> y |> F_{a_i}.
    Cycle values are folded with the double product in canonical order.
    """
    if sigma.size != ops.n:
        raise ValueError(f"permutation degree {sigma.size} != operand count {ops.n}")
    alg = ops.alg
    values = []
    for cycle in canonical_cycles(sigma).cycles:
        acc = ops.at(cycle[0])
        for a in cycle[1:]:
            if variant == "associative":
                acc = alg.weight * (acc * ops.at(a))
            elif variant == "prelie":
                acc = prelie_left(alg, acc, ops.at(a))
            else:
                raise ValueError(f"unknown variant {variant!r}")
        values.append(acc)
    return functools.reduce(lambda u, v: double_product(alg, u, v), values)


def check_bohnenblust_spitzer(ops: BSOperands, form: str) -> CheckResult:
    alg = ops.alg
    name = f"bohnenblust-spitzer/{alg.name}/n={ops.n}/{form}"
    theta = alg.weight
    star = lambda u, v: double_product(alg, u, v)

    if form == "commutative-partitions":
        anchor = "Eq. (clBSp)"
        if not alg.commutative:
            raise ConfigError("partitions form needs a commutative carrier")
        rhs = alg.zero
        for part in set_partitions(ops.n):
            blocks = []
            for block in part.blocks:
                prod = functools.reduce(lambda u, v: u * v, (ops.at(j) for j in block))
                blocks.append(Fraction(math.factorial(len(block) - 1)) * prod)
            term = functools.reduce(star, blocks)
            rhs = rhs + (-theta) ** (ops.n - part.block_count) * term
    elif form == "cycles-prelie":
        anchor = "Eq. (clBSpPerm)"
        rhs = alg.zero
        for sigma in permutations(ops.n):
            rhs = rhs + cycle_chain_product(ops, sigma, "prelie")
    elif form == "weight-zero":
        anchor = "Eq. (clBSp)"
        if theta != 0:
            raise ConfigError("weight-zero form needs weight 0")
        if not alg.commutative:
            raise ConfigError("weight-zero form needs a commutative carrier")
        rhs = functools.reduce(star, ops.operands)
    else:
        raise ValueError(f"unknown form {form!r}")

    lhs = _nested_lhs(ops)
    if not lhs == rhs:
        ops_render = "; ".join(f"F{i + 1}={f}" for i, f in enumerate(ops.operands))
        return CheckResult.bad(name, anchor, f"{ops_render}; lhs={lhs}; rhs={rhs}")
    return CheckResult.ok(name, anchor)


# ---------------------------------------------------------------------------
# BCH in the carrier and double products


class _Unitized:
    """Formal unit adjoined to the (nonunital) double product."""

    __slots__ = ("alg",)

    def __init__(self, alg: RBAlgebra):
        self.alg = alg

    @property
    def zero(self) -> "_UnitizedElement":
        return _UnitizedElement(self, Fraction(0), self.alg.zero)

    @property
    def one(self) -> "_UnitizedElement":
        return _UnitizedElement(self, Fraction(1), self.alg.zero)


class _UnitizedElement:
    __slots__ = ("carrier", "scalar", "body")

    def __init__(self, carrier: _Unitized, scalar: Fraction, body):
        self.carrier = carrier
        self.scalar = Fraction(scalar)
        self.body = body

    def __add__(self, other: "_UnitizedElement") -> "_UnitizedElement":
        return _UnitizedElement(self.carrier, self.scalar + other.scalar, self.body + other.body)

    def __sub__(self, other: "_UnitizedElement") -> "_UnitizedElement":
        return self + (-other)

    def __neg__(self) -> "_UnitizedElement":
        return _UnitizedElement(self.carrier, -self.scalar, -self.body)

    def __rmul__(self, scalar) -> "_UnitizedElement":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = Fraction(scalar)
        return _UnitizedElement(self.carrier, q * self.scalar, q * self.body)

    def __mul__(self, other: "_UnitizedElement") -> "_UnitizedElement":
        body = self.scalar * other.body + other.scalar * self.body
        body = body + double_product(self.carrier.alg, self.body, other.body)
        return _UnitizedElement(self.carrier, self.scalar * other.scalar, body)

    def __eq__(self, other) -> bool:
        return self.scalar == other.scalar and self.body == other.body

    __hash__ = None

    def __str__(self) -> str:
        return f"{self.scalar}*unit + {self.body}"


def bch_of_series(alg: RBAlgebra, a: LambdaSeries, b: LambdaSeries, product: str = "carrier") -> LambdaSeries:
    """log(exp(a) exp(b)) for series with zero constant coefficient."""
    if product == "carrier":
        return series_log(series_exp(a) * series_exp(b))
    if product != "double":
        raise ValueError(f"unknown product {product!r}")
    dc = _Unitized(alg)
    lift = lambda s: LambdaSeries(
        dc, tuple(_UnitizedElement(dc, Fraction(0), c) for c in s.coeffs)
    )
    out = series_log(series_exp(lift(a)) * series_exp(lift(b)))
    for k in range(out.order + 1):
        if out.coefficient(k).scalar != 0:
            raise ArithmeticError("unit component leaked into a BCH coefficient")
    return LambdaSeries(alg, tuple(c.body for c in out.coeffs))


def bch_series(alg: RBAlgebra, a, b, order: int, product: str = "carrier") -> LambdaSeries:
    return bch_of_series(
        alg,
        LambdaSeries.term(alg, 1, a, order),
        LambdaSeries.term(alg, 1, b, order),
        product,
    )


# ---------------------------------------------------------------------------
# the flows composition


def flows_product(alg: RBAlgebra, x, y, order: int) -> LambdaSeries:
    """The source z = x # y with solve(z) = solve(x) solve(y).

    z = y + exp(-ell_{Omega'(y) |>})(x), returned as a source series whose
    grade-0 coefficient is x + y.
    """
    omega_y = prelie_magnus(alg, y, order).omega
    term = _constant_source(alg, x, order)
    acc = term
    for k in range(1, order + 1):
        term = _apply_prelie_series(alg, omega_y, term)
        acc = acc + Fraction((-1) ** k, math.factorial(k)) * term
    return acc + _constant_source(alg, y, order)


def check_flows_product_law(alg: RBAlgebra, x, y, order: int) -> CheckResult:
    """solve(x # y) = solve(x) solve(y) coefficientwise."""
    name = f"flows-product/{alg.name}/N={order}"
    anchor = "Eq. (pLMag)"
    z = flows_product(alg, x, y, order)
    lhs = solve_fixed_point_series(alg, z, SIDE_LEFT, order)
    rhs = solve_fixed_point(alg, x, SIDE_LEFT, order) * solve_fixed_point(alg, y, SIDE_LEFT, order)
    miss = _first_mismatch(lhs, rhs)
    if miss:
        k, a, b = miss
        return CheckResult.bad(name, anchor, f"x={x}; y={y}; grade {k}: solve(z)={a}; fh={b}")
    return CheckResult.ok(name, anchor)


def check_flows_bch(alg: RBAlgebra, x, y, order: int) -> CheckResult:
    """Omega'(x # y) = BCH of Omega'(x), Omega'(y) in the double product."""
    name = f"flows-bch/{alg.name}/N={order}"
    anchor = "Eq. (pLMag)"
    z = flows_product(alg, x, y, order)
    lhs = prelie_magnus_of_series(alg, z, order)
    rhs = bch_of_series(
        alg,
        prelie_magnus(alg, x, order).omega,
        prelie_magnus(alg, y, order).omega,
        "double",
    )
    miss = _first_mismatch(lhs, rhs)
    if miss:
        k, a, b = miss
        return CheckResult.bad(
            name, anchor, f"x={x}; y={y}; grade {k}: omega(x#y)={a}; bch={b}"
        )
    return CheckResult.ok(name, anchor)
