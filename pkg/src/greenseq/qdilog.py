"""Exact arithmetic in a truncated quantum affine space.

Coefficients live in the field of fractions of integer Laurent
polynomials in t, where t^2 = q.  Series are supported on exponent
vectors alpha in N^n of total degree <= D and multiply by the twisted
rule y^alpha y^beta = t^{lambda(alpha,beta)} y^{alpha+beta} with
lambda(alpha, beta) = alpha^T B beta for the exchange matrix B.
Truncation by total degree is a two-sided ideal, so the products of
dilogarithm series along two reddening sequences of the same quiver can
be compared coefficient by coefficient, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .framed import MutationSequence, frame
from .quiver import Matrix, Quiver, check_skew_symmetric, freeze_matrix


class LaurentPoly:
    """Integer Laurent polynomial in t, stored sparsely as {exponent: coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {
            int(e): int(c) for e, c in (coeffs or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def t_power(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def q_power(cls, m: int, c: int = 1) -> "LaurentPoly":
        """q^m = t^{2m}."""
        return cls({2 * m: c})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by t^e."""
        if e == 0:
            return self
        return LaurentPoly({k + e: c for k, c in self.coeffs.items()})

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self.coeffs.items()})

    @property
    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    @property
    def leading(self) -> int:
        return self.coeffs[self.max_exp]

    @property
    def content(self) -> int:
        g = 0
        for c in self.coeffs.values():
            g = gcd(g, c)
        return g

    def divexact_int(self, c: int) -> "LaurentPoly":
        out = {}
        for e, v in self.coeffs.items():
            if v % c:
                raise ValueError(f"{c} does not divide coefficient {v}")
            out[e] = v // c
        return LaurentPoly(out)

    def divexact(self, d: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError when d does not divide self."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero()
        shift = self.min_exp - d.min_exp
        rem = dict(self.shift(-self.min_exp).coeffs)
        div = d.shift(-d.min_exp).coeffs
        dd = max(div)
        lead = div[dd]
        quot: dict[int, int] = {}
        while rem:
            e = max(rem)
            if e < dd:
                raise ValueError("not an exact division")
            c = rem[e]
            if c % lead:
                raise ValueError("not an exact division")
            f = c // lead
            quot[e - dd] = f
            for de, dc in div.items():
                k = e - dd + de
                nv = rem.get(k, 0) - f * dc
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot).shift(shift)

    def primitive(self) -> "LaurentPoly":
        """Strip t-power and integer-content units; leading coefficient > 0."""
        if not self:
            return LaurentPoly.zero()
        p = self.shift(-self.min_exp)
        c = p.content
        if p.leading < 0:
            c = -c
        return p.divexact_int(c)

    def to_pairs(self) -> list[list[int]]:
        return [[e, self.coeffs[e]] for e in sorted(self.coeffs)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                term = str(abs(c))
            else:
                base = "t" if e == 1 else f"t^{e}"
                term = base if abs(c) == 1 else f"{abs(c)}*{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _pseudo_rem(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Remainder of a by b up to powers of lc(b); enough for a gcd chain."""
    da = a.max_exp
    db = b.max_exp
    lead = b.leading
    rem = dict(a.coeffs)
    while rem:
        e = max(rem)
        if e < db:
            break
        c = rem[e]
        # scale so the leading terms cancel without fractions
        if c % lead:
            for k in list(rem):
                rem[k] *= lead
            c = rem[e]
        f = c // lead
        for de, dc in b.coeffs.items():
            k = e - db + de
            nv = rem.get(k, 0) - f * dc
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return LaurentPoly(rem)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive gcd in Z[t] (up to the units +-t^k), positive leading
    coefficient, via a primitive pseudo-remainder chain."""
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    a = a.primitive()
    b = b.primitive()
    while b:
        a, b = b, _pseudo_rem(a, b).primitive()
    return a


class RationalFunction:
    """Quotient of integer Laurent polynomials in t, kept canonical:
    numerator and denominator coprime with coprime contents, denominator
    with valuation 0 and positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        v = den.min_exp
        if v:
            num = num.shift(-v)
            den = den.shift(-v)
        g = poly_gcd(num, den)
        if g.coeffs != {0: 1}:
            num = num.divexact(g)
            den = den.divexact(g)
        c = gcd(num.content, den.content)
        if den.leading < 0:
            c = -c
        if c != 1:
            num = num.divexact_int(c)
            den = den.divexact_int(c)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(LaurentPoly.one())

    @classmethod
    def from_int(cls, k: int) -> "RationalFunction":
        return cls(LaurentPoly({0: k}))

    @classmethod
    def t_power(cls, e: int) -> "RationalFunction":
        return cls(LaurentPoly.t_power(e))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RationalFunction.from_int(other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    @property
    def is_one(self) -> bool:
        return self.num.coeffs == {0: 1} and self.den.coeffs == {0: 1}

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        # cross-reduce first so the final gcds are small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num.divexact(g1) if g1.coeffs != {0: 1} else self.num
        d2 = other.den.divexact(g1) if g1.coeffs != {0: 1} else other.den
        n2 = other.num.divexact(g2) if g2.coeffs != {0: 1} else other.num
        d1 = self.den.divexact(g2) if g2.coeffs != {0: 1} else self.den
        return RationalFunction(n1 * n2, d1 * d2)

    def inv(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverting zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inv()

    def shift(self, e: int) -> "RationalFunction":
        """Multiply by t^e (a unit, so only the numerator moves)."""
        out = RationalFunction.__new__(RationalFunction)
        out.num = self.num.shift(e)
        out.den = self.den
        return out

    def to_dict(self) -> dict:
        return {"num": self.num.to_pairs(), "den": self.den.to_pairs()}

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den.coeffs == {0: 1}:
            return str(self.num)
        num = str(self.num)
        if len(self.num.coeffs) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"


@dataclass(frozen=True)
class QuantumAffineSpace:
    """Shared shape of a family of series: rank, truncation order, and the
    skew form lambda(alpha, beta) = alpha^T B beta."""

    n: int
    order: int
    lam: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", freeze_matrix(self.lam))
        if self.n < 1:
            raise ValueError("rank must be >= 1")
        if self.order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(self.lam) != self.n:
            raise ValueError("skew form must be n x n")
        check_skew_symmetric(self.lam)

    @classmethod
    def for_quiver(cls, q: Quiver, order: int) -> "QuantumAffineSpace":
        return cls(q.n, order, q.b)

    def pairing(self, alpha: tuple[int, ...], beta: tuple[int, ...]) -> int:
        total = 0
        for i, a in enumerate(alpha):
            if a:
                row = self.lam[i]
                total += a * sum(row[j] * b for j, b in enumerate(beta) if b)
        return total

    def _check_vector(self, alpha) -> tuple[int, ...]:
        alpha = tuple(int(x) for x in alpha)
        if len(alpha) != self.n:
            raise ValueError(f"exponent vector must have length {self.n}")
        if any(x < 0 for x in alpha):
            raise ValueError(f"exponent vector {alpha} must be nonnegative")
        return alpha

    def zero(self) -> "QuantumSeries":
        return QuantumSeries(self, {})

    def one(self) -> "QuantumSeries":
        return QuantumSeries(self, {(0,) * self.n: RationalFunction.one()})

    def monomial(self, alpha, coeff: RationalFunction | None = None) -> "QuantumSeries":
        alpha = self._check_vector(alpha)
        if coeff is None:
            coeff = RationalFunction.one()
        if sum(alpha) > self.order:
            return self.zero()
        return QuantumSeries(self, {alpha: coeff})

    def dilog(self, alpha) -> "QuantumSeries":
        """The quantum dilogarithm series in y^alpha, truncated:
        sum over m of t^{m^2} / prod_{k<m} (q^m - q^k) * y^{m alpha}."""
        alpha = self._check_vector(alpha)
        weight = sum(alpha)
        if weight == 0:
            raise ValueError("dilog needs a nonzero exponent vector")
        terms = {(0,) * self.n: RationalFunction.one()}
        for m in range(1, self.order // weight + 1):
            den = LaurentPoly.one()
            for k in range(m):
                den = den * (LaurentPoly.q_power(m) - LaurentPoly.q_power(k))
            coeff = RationalFunction(LaurentPoly.t_power(m * m), den)
            terms[tuple(m * a for a in alpha)] = coeff
        return QuantumSeries(self, terms)


class QuantumSeries:
    """Element of a QuantumAffineSpace: finitely many exponent vectors of
    total degree <= order, each with an exact rational-function coefficient."""

    __slots__ = ("space", "terms")

    def __init__(self, space: QuantumAffineSpace, terms: Mapping[tuple[int, ...], RationalFunction]):
        self.space = space
        clean = {}
        for alpha, coeff in terms.items():
            alpha = tuple(alpha)
            if sum(alpha) > space.order or not coeff:
                continue
            clean[alpha] = coeff
        self.terms = clean

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def order(self) -> int:
        return self.space.order

    def coefficient(self, alpha) -> RationalFunction:
        return self.terms.get(tuple(alpha), RationalFunction.zero())

    @property
    def constant_term(self) -> RationalFunction:
        return self.coefficient((0,) * self.n)

    def _require_same_space(self, other: "QuantumSeries") -> None:
        if self.space != other.space:
            raise ValueError("series live in different quantum affine spaces")

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumSeries):
            return NotImplemented
        self._require_same_space(other)
        return self.terms == other.terms

    def __add__(self, other: "QuantumSeries") -> "QuantumSeries":
        self._require_same_space(other)
        out = dict(self.terms)
        for alpha, coeff in other.terms.items():
            acc = out.get(alpha)
            out[alpha] = coeff if acc is None else acc + coeff
        return QuantumSeries(self.space, out)

    def __neg__(self) -> "QuantumSeries":
        return QuantumSeries(self.space, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other: "QuantumSeries") -> "QuantumSeries":
        return self + (-other)

    def __mul__(self, other: "QuantumSeries") -> "QuantumSeries":
        """Twisted convolution: each pair contributes
        a_alpha * b_beta * t^{lambda(alpha, beta)} at alpha + beta."""
        self._require_same_space(other)
        space = self.space
        order = space.order
        out: dict[tuple[int, ...], RationalFunction] = {}
        for alpha, ca in self.terms.items():
            da = sum(alpha)
            for beta, cb in other.terms.items():
                if da + sum(beta) > order:
                    continue
                gamma = tuple(a + b for a, b in zip(alpha, beta))
                piece = (ca * cb).shift(space.pairing(alpha, beta))
                acc = out.get(gamma)
                out[gamma] = piece if acc is None else acc + piece
        return QuantumSeries(space, out)

    def inv(self) -> "QuantumSeries":
        """Multiplicative inverse up to the truncation order, computed
        degree by degree; needs an invertible constant term."""
        c0 = self.constant_term
        if not c0:
            raise ZeroDivisionError("series has zero constant term")
        c0_inv = c0.inv()
        space = self.space
        zero_vec = (0,) * space.n
        inv_terms: dict[tuple[int, ...], RationalFunction] = {zero_vec: c0_inv}
        positive = [(a, c) for a, c in self.terms.items() if a != zero_vec]
        for gamma in _vectors_by_degree(space.n, space.order):
            acc = RationalFunction.zero()
            for alpha, ca in positive:
                if any(a > g for a, g in zip(alpha, gamma)):
                    continue
                beta = tuple(g - a for g, a in zip(gamma, alpha))
                xb = inv_terms.get(beta)
                if xb is None:
                    continue
                acc = acc + (ca * xb).shift(space.pairing(alpha, beta))
            if acc:
                inv_terms[gamma] = -(c0_inv * acc)
        return QuantumSeries(space, inv_terms)

    def to_dict(self) -> dict:
        return {
            "D": self.order,
            "terms": [
                {"y": list(alpha), **self.terms[alpha].to_dict()}
                for alpha in sorted(self.terms)
            ],
        }

    def __repr__(self) -> str:
        return f"QuantumSeries(n={self.n}, D={self.order}, terms={len(self.terms)})"


def _vectors_by_degree(n: int, order: int):
    """All nonzero vectors in N^n of total degree <= order, by degree."""
    from itertools import combinations

    for d in range(1, order + 1):
        # compositions of d into n nonnegative parts via stars and bars
        for bars in combinations(range(d + n - 1), n - 1):
            prev = -1
            vec = []
            for b in bars:
                vec.append(b - prev - 1)
                prev = b
            vec.append(d + n - 2 - prev)
            yield tuple(vec)


def q_exp(alpha, space: QuantumAffineSpace) -> QuantumSeries:
    """Quantum dilogarithm series in y^alpha (see QuantumAffineSpace.dilog)."""
    return space.dilog(alpha)


def dt_product(q: Quiver, seq: MutationSequence, order: int) -> QuantumSeries:
    """Ordered product of dilogarithm factors along a mutation sequence:
    at each step the c-vector beta and its sign eps give a factor
    E(y^{eps*beta})^{eps}, multiplied left to right.  When the sequence is
    reddening, the result is the refined DT invariant up to the order."""
    space = QuantumAffineSpace.for_quiver(q, order)
    state = frame(q)
    acc = space.one()
    for k in seq.vertices:
        beta = state.c_vector(k)
        eps = beta.sign
        factor = space.dilog(tuple(eps * e for e in beta.entries))
        if eps < 0:
            factor = factor.inv()
        acc = acc * factor
        state = state.mutate(k)
    return acc


def identity_check(a: QuantumSeries, b: QuantumSeries) -> bool:
    """Exact coefficientwise equality of two series on the same template."""
    a._require_same_space(b)
    return a == b
