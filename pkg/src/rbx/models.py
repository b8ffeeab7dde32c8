"""Concrete Rota-Baxter algebra instances.

Four carriers, each with its operator and weight:

* sequences over a polynomial ring with the shifted partial-sum operator
  (weight 1), the standard algebra in commutative and noncommutative flavors;
* truncated Laurent elements with the pole projection (weight -1);
* square rational matrices with the upper-triangular projection (weight -1);
* univariate rational polynomials with integration from 0 (weight 0).

Sequence windows are exact: entry k of R reads only entries below k, so any
identity verified entrywise on a window of length W is exact there. Laurent
arithmetic refuses to truncate poles (exponents below the pole bound raise),
while exponents above the regular truncation bound are dropped; the bound is
sized per computation so nothing that could multiply back down is ever lost.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .algebra import RBAlgebra
from .errors import ConfigError
from .polynomials import CPoly, NCPoly, Word
from .report import CheckResult

__all__ = [
    "RatMatrix",
    "LaurentElement",
    "SeqElement",
    "PolyFunction",
    "triangular_projection",
    "laurent_pole_projection",
    "standard_sum_operator",
    "summation_operator",
    "riemann_integral",
    "polynomial_derivative",
    "finite_difference",
    "matrix_algebra",
    "laurent_algebra",
    "laurent_monomial",
    "commutative_standard_algebra",
    "noncommutative_standard_algebra",
    "standard_generator",
    "integration_algebra",
    "summation_algebra",
    "elementary_symmetric_check",
    "nested_sum_encoding",
    "nested_sum_encoding_sum",
    "check_vector_field_prelie",
]


# ---------------------------------------------------------------------------
# rational matrices


class RatMatrix:
    """Immutable n x n matrix of Fractions."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, n: int) -> "RatMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "RatMatrix":
        """Matrix unit E_ij, 1-based indices."""
        return cls([[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(n)] for r in range(n)])

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in row] for row in self.rows])

    def __rmul__(self, scalar) -> "RatMatrix":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = Fraction(scalar)
        return RatMatrix([[q * a for a in row] for row in self.rows])

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        n = self.dim
        if other.dim != n:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.rows))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows) + "]"

    __repr__ = __str__


def triangular_projection(m: RatMatrix) -> RatMatrix:
    """Keep entries on or above the diagonal, zero the rest.

    Idempotent; the complementary projection lands in the strictly lower
    triangular subalgebra, which makes this a weight -1 Rota-Baxter operator.
    """
    return RatMatrix(
        [[v if i <= j else 0 for j, v in enumerate(row)] for i, row in enumerate(m.rows)]
    )


def matrix_algebra(dim: int = 3) -> RBAlgebra:
    basis = tuple(
        RatMatrix.unit(dim, i, j) for i in range(1, dim + 1) for j in range(1, dim + 1)
    )

    def rand(rng: random.Random) -> RatMatrix:
        return RatMatrix(
            [
                [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(dim)]
                for _ in range(dim)
            ]
        )

    return RBAlgebra(
        name=f"matrix{dim}",
        weight=Fraction(-1),
        zero=RatMatrix.zeros(dim),
        one=RatMatrix.identity(dim),
        rb=triangular_projection,
        commutative=False,
        basis=basis,
        random_element=rand,
    )


# ---------------------------------------------------------------------------
# truncated Laurent elements


class LaurentElement:
    """Map exponent -> Fraction on the range [-pole_bound, trunc].

    Multiplication drops exponents above ``trunc`` (harmless for the checks,
    which only ever compare what both sides keep) and raises ``ConfigError``
    for exponents below ``-pole_bound``: losing a pole would falsify the
    identities, so the bound must be sized up instead.
    """

    __slots__ = ("coeffs", "pole_bound", "trunc")

    def __init__(self, coeffs, pole_bound: int, trunc: int):
        if pole_bound < 0 or trunc < 0:
            raise ValueError("bounds must be nonnegative")
        clean = {}
        for e, c in dict(coeffs).items():
            c = Fraction(c)
            if c == 0:
                continue
            if e < -pole_bound:
                raise ConfigError(
                    f"exponent {e} below pole bound -{pole_bound}; enlarge the bound"
                )
            if e > trunc:
                continue
            clean[e] = c
        self.coeffs = clean
        self.pole_bound = pole_bound
        self.trunc = trunc

    def _match(self, other: "LaurentElement") -> None:
        if (self.pole_bound, self.trunc) != (other.pole_bound, other.trunc):
            raise ValueError("Laurent bounds differ")

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        self._match(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentElement(out, self.pole_bound, self.trunc)

    def __sub__(self, other: "LaurentElement") -> "LaurentElement":
        return self + (-other)

    def __neg__(self) -> "LaurentElement":
        return LaurentElement(
            {e: -c for e, c in self.coeffs.items()}, self.pole_bound, self.trunc
        )

    def __rmul__(self, scalar) -> "LaurentElement":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = Fraction(scalar)
        return LaurentElement(
            {e: q * c for e, c in self.coeffs.items()}, self.pole_bound, self.trunc
        )

    def __mul__(self, other: "LaurentElement") -> "LaurentElement":
        self._match(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e > self.trunc:
                    continue
                if e < -self.pole_bound:
                    raise ConfigError(
                        f"exponent {e} below pole bound -{self.pole_bound}; enlarge the bound"
                    )
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentElement(out, self.pole_bound, self.trunc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentElement):
            return NotImplemented
        self._match(other)
        return self.coeffs == other.coeffs

    __hash__ = None

    def is_regular(self) -> bool:
        return all(e >= 0 for e in self.coeffs)

    def is_polar(self) -> bool:
        return all(e < 0 for e in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            else:
                base = "eps" if e == 1 else f"eps^{e}"
                parts.append(base if c == 1 else f"{c} {base}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def laurent_pole_projection(x: LaurentElement) -> LaurentElement:
    """Keep the strictly negative exponents: the divergent part."""
    return LaurentElement(
        {e: c for e, c in x.coeffs.items() if e < 0}, x.pole_bound, x.trunc
    )


def laurent_monomial(e: int, pole_bound: int = 4, trunc: int = 6) -> LaurentElement:
    return LaurentElement({e: Fraction(1)}, pole_bound, trunc)


def laurent_algebra(
    pole_bound: int = 4, trunc: int = 6, basis_exponents=range(-2, 4)
) -> RBAlgebra:
    basis = tuple(LaurentElement({e: 1}, pole_bound, trunc) for e in basis_exponents)
    exps = list(basis_exponents)

    def rand(rng: random.Random) -> LaurentElement:
        return LaurentElement(
            {e: Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for e in exps},
            pole_bound,
            trunc,
        )

    return RBAlgebra(
        name=f"laurent[{pole_bound},{trunc}]",
        weight=Fraction(-1),
        zero=LaurentElement({}, pole_bound, trunc),
        one=LaurentElement({0: 1}, pole_bound, trunc),
        rb=laurent_pole_projection,
        commutative=True,
        basis=basis,
        random_element=rand,
    )


# ---------------------------------------------------------------------------
# sequence algebras (the standard algebra and the scalar summation algebra)


class SeqElement:
    """Finite window of ring values with pointwise operations."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)
        if not self.entries:
            raise ValueError("empty window")

    def _match(self, other: "SeqElement") -> None:
        if len(self.entries) != len(other.entries):
            raise ValueError("window lengths differ")

    def __add__(self, other: "SeqElement") -> "SeqElement":
        self._match(other)
        return SeqElement(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "SeqElement") -> "SeqElement":
        self._match(other)
        return SeqElement(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "SeqElement":
        return SeqElement(-a for a in self.entries)

    def __rmul__(self, scalar) -> "SeqElement":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = Fraction(scalar)
        return SeqElement(q * a for a in self.entries)

    def __mul__(self, other: "SeqElement") -> "SeqElement":
        self._match(other)
        return SeqElement(a * b for a, b in zip(self.entries, other.entries))

    def __pow__(self, n: int) -> "SeqElement":
        if n < 0:
            raise ValueError("negative power")
        out = self
        if n == 0:
            raise ValueError("need the ambient unit for power 0")
        for _ in range(n - 1):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeqElement):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __str__(self) -> str:
        return "(" + "; ".join(str(a) for a in self.entries) + ")"

    __repr__ = __str__


def standard_sum_operator(s: SeqElement) -> SeqElement:
    """Entry k of the output is the sum of input entries below k.

    Entry 0 is zero. Entry k reads only entries < k, which is what makes a
    finite window exact. Weight 1.
    """
    zero = Fraction(0) * s.entries[0]
    out = []
    acc = zero
    for a in s.entries:
        out.append(acc)
        acc = acc + a
    return SeqElement(out)


def summation_operator(s: SeqElement) -> SeqElement:
    """The summation operator on scalar sequences: R(f)(n) = sum_{k<n} f(k)."""
    return standard_sum_operator(s)


def finite_difference(s: SeqElement) -> SeqElement:
    """Forward difference f(n+1) - f(n); the window shrinks by one."""
    e = s.entries
    return SeqElement(e[k + 1] - e[k] for k in range(len(e) - 1))


def _standard_algebra(window: int, cap: int, poly, kind: str) -> RBAlgebra:
    one = SeqElement([poly.one(cap)] * window)
    zero = SeqElement([poly.zero(cap)] * window)
    # scalar indicator sequences: a 1 at one slot, 0 elsewhere
    basis = tuple(
        SeqElement([poly.one(cap) if i == k else poly.zero(cap) for i in range(window)])
        for k in range(window)
    )

    # sparse draws: a constant part plus letter terms at two slots. Laws are
    # multilinear, so this spans the same coverage while keeping iterated
    # partial sums from piling up terms quadratically.
    def rand(rng: random.Random) -> SeqElement:
        c = Fraction(rng.randint(-2, 2))
        entries = [c * poly.one(cap) for _ in range(window)]
        for _ in range(2):
            slot = rng.randint(1, max(window - 1, 1))
            d = Fraction(rng.randint(-2, 2), rng.randint(1, 2))
            entries[slot] = entries[slot] + d * poly.letter(slot, cap)
        return SeqElement(entries)

    return RBAlgebra(
        name=f"standard-{kind}[W={window}]",
        weight=Fraction(1),
        zero=zero,
        one=one,
        rb=standard_sum_operator,
        commutative=(kind == "comm"),
        basis=basis,
        random_element=rand,
    )


def commutative_standard_algebra(window: int = 10, cap: int = 8) -> RBAlgebra:
    return _standard_algebra(window, cap, CPoly, "comm")


def noncommutative_standard_algebra(window: int = 10, cap: int = 8) -> RBAlgebra:
    return _standard_algebra(window, cap, NCPoly, "nc")


def standard_generator(window: int = 10, cap: int = 8, kind: str = "comm") -> SeqElement:
    """The sequence (0, x_1, x_2, ...): slot k carries the k-th letter.

    Iterated images of this element realize the elementary symmetric
    functions: R^(n) at slot k is e_n(x_1 .. x_{k-1}).
    """
    poly = CPoly if kind == "comm" else NCPoly
    return SeqElement(
        [poly.zero(cap)] + [poly.letter(k, cap) for k in range(1, window)]
    )


def summation_algebra(window: int = 10) -> RBAlgebra:
    one = SeqElement([Fraction(1)] * window)
    zero = SeqElement([Fraction(0)] * window)
    basis = tuple(
        SeqElement([Fraction(1 if i == k else 0) for i in range(window)])
        for k in range(window)
    )

    def rand(rng: random.Random) -> SeqElement:
        return SeqElement(
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(window)]
        )

    return RBAlgebra(
        name=f"summation[W={window}]",
        weight=Fraction(1),
        zero=zero,
        one=one,
        rb=summation_operator,
        commutative=True,
        basis=basis,
        random_element=rand,
    )


# ---------------------------------------------------------------------------
# polynomial functions with exact integration


class PolyFunction:
    """Univariate polynomial in t over Fraction, coefficient index = degree.

    The cap bounds the representable degree; arithmetic that would exceed it
    raises ConfigError instead of silently dropping terms.
    """

    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs, cap: int = 24):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) - 1 > cap:
            raise ConfigError(f"degree {len(coeffs) - 1} exceeds cap {cap}")
        self.coeffs = tuple(coeffs)
        self.cap = cap

    @classmethod
    def zero(cls, cap: int = 24) -> "PolyFunction":
        return cls([], cap)

    @classmethod
    def one(cls, cap: int = 24) -> "PolyFunction":
        return cls([1], cap)

    @classmethod
    def monomial(cls, n: int, cap: int = 24) -> "PolyFunction":
        return cls([0] * n + [1], cap)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def _match(self, other: "PolyFunction") -> None:
        if self.cap != other.cap:
            raise ValueError("degree caps differ")

    def __add__(self, other: "PolyFunction") -> "PolyFunction":
        self._match(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyFunction(out, self.cap)

    def __sub__(self, other: "PolyFunction") -> "PolyFunction":
        return self + (-other)

    def __neg__(self) -> "PolyFunction":
        return PolyFunction([-c for c in self.coeffs], self.cap)

    def __rmul__(self, scalar) -> "PolyFunction":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = Fraction(scalar)
        return PolyFunction([q * c for c in self.coeffs], self.cap)

    def __mul__(self, other: "PolyFunction") -> "PolyFunction":
        self._match(other)
        if not self.coeffs or not other.coeffs:
            return PolyFunction([], self.cap)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyFunction(out, self.cap)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyFunction):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[n]
            if c == 0:
                continue
            if n == 0:
                parts.append(str(c))
            else:
                base = "t" if n == 1 else f"t^{n}"
                parts.append(base if c == 1 else f"{c} {base}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def riemann_integral(p: PolyFunction) -> PolyFunction:
    """Integration from 0: t^n -> t^(n+1)/(n+1). Weight 0."""
    if p.degree + 1 > p.cap:
        raise ConfigError(f"integral degree {p.degree + 1} exceeds cap {p.cap}")
    return PolyFunction(
        [Fraction(0)] + [c / (n + 1) for n, c in enumerate(p.coeffs)], p.cap
    )


def polynomial_derivative(p: PolyFunction) -> PolyFunction:
    return PolyFunction([n * c for n, c in enumerate(p.coeffs)][1:], p.cap)


def integration_algebra(cap: int = 24) -> RBAlgebra:
    basis = tuple(PolyFunction.monomial(k, cap) for k in range(7))

    def rand(rng: random.Random) -> PolyFunction:
        return PolyFunction(
            [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(4)], cap
        )

    return RBAlgebra(
        name=f"integration[cap={cap}]",
        weight=Fraction(0),
        zero=PolyFunction.zero(cap),
        one=PolyFunction.one(cap),
        rb=riemann_integral,
        commutative=True,
        basis=basis,
        random_element=rand,
    )


# ---------------------------------------------------------------------------
# symmetric-function correspondences in the standard algebra


def _iterated_rb(alg: RBAlgebra, x, n: int):
    """R^(n): R(x), R(R(x)x), R(R(R(x)x)x), ..."""
    acc = alg.rb(x)
    for _ in range(n - 1):
        acc = alg.rb(acc * x)
    return acc


def elementary_symmetric_check(
    n: int, k: int, window: int = 10, cap: int = 8
) -> CheckResult:
    """Iterated partial sums realize e_n; powers realize power sums.

    In the commutative standard algebra, slot k of R^(n) applied to the
    generator equals e_n(x_1 .. x_{k-1}) and slot k of R(x^n) equals
    x_1^n + ... + x_{k-1}^n. The noncommutative variant replaces e_n by the
    sum over strictly increasing index words.
    """
    name = f"standard-symmetric/n={n}/k={k}"
    anchor = "Eq. (shuffle)"
    if n < 1:
        raise ConfigError("order must be >= 1")
    if k >= window:
        raise ConfigError(f"slot {k} needs window > {k}")
    if n > cap:
        raise ConfigError(f"order {n} exceeds degree cap {cap}")

    alg = commutative_standard_algebra(window, cap)
    gen = standard_generator(window, cap, "comm")
    got = _iterated_rb(alg, gen, n).entries[k]
    want = CPoly(
        {Word(c): Fraction(1) for c in itertools.combinations(range(1, k), n)}, cap
    )
    if got != want:
        return CheckResult.bad(name, anchor, f"e_{n} slot {k}: got={got}; want={want}")

    got = alg.rb(gen**n).entries[k]
    want = CPoly({Word((i,) * n): Fraction(1) for i in range(1, k)}, cap)
    if got != want:
        return CheckResult.bad(name, anchor, f"power-sum slot {k}: got={got}; want={want}")

    nalg = noncommutative_standard_algebra(window, cap)
    ngen = standard_generator(window, cap, "nc")
    got = _iterated_rb(nalg, ngen, n).entries[k]
    want = NCPoly(
        {Word(c): Fraction(1) for c in itertools.combinations(range(1, k), n)}, cap
    )
    if got != want:
        return CheckResult.bad(name, anchor, f"ordered words slot {k}: got={got}; want={want}")
    return CheckResult.ok(name, anchor)


def nested_sum_encoding(alg: RBAlgebra, generator: SeqElement, word: Word) -> SeqElement:
    """Encode a word as nested sums: (a_1 .. a_m) -> R(z^a_1 R(z^a_2 ...)).

    With z the generator sequence this is the standard realization of the
    quasi-shuffle algebra: encoding is multiplicative from words with the
    quasi-shuffle product to the carrier product.
    """
    acc = alg.one
    for a in reversed(word.letters):
        acc = alg.rb((generator**a) * acc)
    return acc


def nested_sum_encoding_sum(alg: RBAlgebra, generator: SeqElement, wordsum: NCPoly) -> SeqElement:
    acc = alg.zero
    for w, c in wordsum.terms.items():
        acc = acc + c * nested_sum_encoding(alg, generator, w)
    return acc


# ---------------------------------------------------------------------------
# the vector-field pre-Lie product f |> g = f * g'


def check_vector_field_prelie(max_degree: int = 4) -> CheckResult:
    """Polynomial vector fields under f |> g := f * dg/dt are left pre-Lie.

    On monomials the product is t^n |> t^m = m t^(n+m-1); checked together
    with the left pre-Lie law over all monomial triples up to max_degree.
    """
    name = f"vector-field-prelie/deg<={max_degree}"
    anchor = "Eq. (pL)"
    cap = 3 * max_degree + 2
    mono = [PolyFunction.monomial(i, cap) for i in range(max_degree + 1)]

    def vf(f: PolyFunction, g: PolyFunction) -> PolyFunction:
        return f * polynomial_derivative(g)

    for n in range(max_degree + 1):
        for m in range(max_degree + 1):
            got = vf(mono[n], mono[m])
            want = (
                PolyFunction.zero(cap)
                if m == 0
                else m * PolyFunction.monomial(n + m - 1, cap)
            )
            if got != want:
                return CheckResult.bad(name, anchor, f"t^{n}|>t^{m}: got={got}; want={want}")
    for f, g, h in itertools.product(mono, repeat=3):
        lhs = vf(vf(f, g), h) - vf(f, vf(g, h))
        rhs = vf(vf(g, f), h) - vf(g, vf(f, h))
        if lhs != rhs:
            return CheckResult.bad(name, anchor, f"f={f}; g={g}; h={h}; lhs={lhs}; rhs={rhs}")
    return CheckResult.ok(name, anchor)
