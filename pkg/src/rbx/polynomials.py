"""Words over a positive-integer alphabet and polynomial coefficients on them.

``NCPoly`` is the free associative algebra: finitely supported maps from words
to rationals with concatenation product. ``CPoly`` is its commutative quotient,
keyed by sorted words (monomials read as multisets of letters). Both accept an
optional degree cap: words longer than the cap are dropped by multiplication.
Dropping high degrees is a quotient by a graded ideal, so any identity checked
below the cap is exact, not approximate.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Word", "NCPoly", "CPoly"]


class Word:
    """A finite sequence of alphabet indices (positive integers)."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"letters must be positive integers, got {a!r}")
        self.letters = letters

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"x{a}" for a in self.letters)

    def __repr__(self) -> str:
        return f"Word({self.letters})"


def _clean(terms: dict) -> dict:
    return {w: c for w, c in terms.items() if c != 0}


def _render(terms: dict, fmt) -> str:
    if not terms:
        return "0"
    parts = []
    for w in sorted(terms):
        c = terms[w]
        body = fmt(w)
        if body == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{c} {body}")
    return " + ".join(parts).replace("+ -", "- ")


class NCPoly:
    """Noncommutative polynomial: finitely supported map Word -> Fraction."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms=None, cap: int | None = None):
        terms = _clean(dict(terms or {}))
        if cap is not None:
            terms = {w: c for w, c in terms.items() if len(w) <= cap}
        self.terms = terms
        self.cap = cap

    @classmethod
    def zero(cls, cap: int | None = None) -> "NCPoly":
        return cls({}, cap)

    @classmethod
    def one(cls, cap: int | None = None) -> "NCPoly":
        return cls({Word(): Fraction(1)}, cap)

    @classmethod
    def letter(cls, a: int, cap: int | None = None) -> "NCPoly":
        return cls({Word((a,)): Fraction(1)}, cap)

    @classmethod
    def from_word(cls, w: Word, coeff=1, cap: int | None = None) -> "NCPoly":
        return cls({w: Fraction(coeff)}, cap)

    def _match(self, other: "NCPoly") -> None:
        if type(self) is not type(other):
            raise ValueError("polynomial kinds differ")
        if self.cap != other.cap:
            raise ValueError("degree caps differ")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._match(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return type(self)(out, self.cap)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return type(self)({w: -c for w, c in self.terms.items()}, self.cap)

    def __rmul__(self, scalar) -> "NCPoly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = Fraction(scalar)
        return type(self)({w: q * c for w, c in self.terms.items()}, self.cap)

    def _combine(self, u: Word, v: Word) -> Word:
        return Word(u.letters + v.letters)

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        self._match(other)
        out: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                if self.cap is not None and len(u) + len(v) > self.cap:
                    continue
                w = self._combine(u, v)
                out[w] = out.get(w, Fraction(0)) + cu * cv
        return type(self)(out, self.cap)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        acc = type(self).one(self.cap)
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def __str__(self) -> str:
        return _render(self.terms, str)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class CPoly(NCPoly):
    """Commutative polynomial: monomials are multisets of letters."""

    __slots__ = ()

    def __init__(self, terms=None, cap: int | None = None):
        folded: dict = {}
        for w, c in dict(terms or {}).items():
            key = Word(sorted(w.letters))
            folded[key] = folded.get(key, Fraction(0)) + c
        super().__init__(folded, cap)

    def _combine(self, u: Word, v: Word) -> Word:
        return Word(sorted(u.letters + v.letters))

    def __str__(self) -> str:
        def fmt(w: Word) -> str:
            if not w.letters:
                return "1"
            parts = []
            for a in sorted(set(w.letters)):
                m = w.letters.count(a)
                parts.append(f"x{a}" if m == 1 else f"x{a}^{m}")
            return "".join(parts)

        return _render(self.terms, fmt)
