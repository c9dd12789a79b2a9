"""Exact closed-form zeta arithmetic: the ring Q[pi^4, z3, z5, ...][T].

Values here are sparse polynomials over exact rationals in the generators
P (standing for pi^4, weight 4), T (the regularization variable, weight 1),
and Zk = zeta(k) for odd k >= 3 (weight k).  No relations among generators
are assumed.  Even zetas never appear as generators: zeta(4l) is rewritten
as a rational multiple of P^l, and zeta(k) for k == 2 (mod 4) is refused,
since it does not lie in this ring.

Also provides Bernoulli numbers (B1 = -1/2), Bernoulli polynomials over
Gaussian rationals, and the exact coefficient sequences for zeta({4}^n)
and its star variant.  All values are immutable and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import InternalCheckError, PreconditionError

Scalar = Union[int, Fraction]

#: monomial: sorted tuple of (generator, exponent), exponents positive
Monomial = Tuple[Tuple[str, int], ...]


def _gen_sort_key(g: str) -> Tuple[int, int]:
    if g == "P":
        return (0, 0)
    if g == "T":
        return (1, 0)
    if g.startswith("Z"):
        return (2, int(g[1:]))
    raise InternalCheckError(f"unknown generator {g!r}")


def _gen_weight(g: str) -> int:
    if g == "P":
        return 4
    if g == "T":
        return 1
    return int(g[1:])


def monomial_weight(mono: Monomial) -> int:
    return sum(_gen_weight(g) * e for g, e in mono)


class ZetaSymbolValue:
    """Sparse polynomial in P, T, Z3, Z5, ... with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = tuple(sorted(((g, e) for g, e in mono if e), key=lambda p: _gen_sort_key(p[0])))
                clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def zero(cls) -> "ZetaSymbolValue":
        return cls()

    @classmethod
    def one(cls) -> "ZetaSymbolValue":
        return cls({(): Fraction(1)})

    @classmethod
    def rational(cls, q: Scalar) -> "ZetaSymbolValue":
        return cls({(): Fraction(q)})

    @classmethod
    def gen(cls, name: str) -> "ZetaSymbolValue":
        _gen_sort_key(name)  # validates
        if name.startswith("Z"):
            k = int(name[1:])
            if k < 3 or k % 2 == 0:
                raise PreconditionError(f"zeta generator must have odd index >= 3, got {k}")
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def P(cls) -> "ZetaSymbolValue":
        return cls.gen("P")

    @classmethod
    def T(cls) -> "ZetaSymbolValue":
        return cls.gen("T")

    @classmethod
    def Z(cls, k: int) -> "ZetaSymbolValue":
        return cls.gen(f"Z{k}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZetaSymbolValue):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == ZetaSymbolValue.rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: object) -> "ZetaSymbolValue":
        if isinstance(other, (int, Fraction)):
            other = ZetaSymbolValue.rational(other)
        if not isinstance(other, ZetaSymbolValue):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ZetaSymbolValue(out)

    __radd__ = __add__

    def __neg__(self) -> "ZetaSymbolValue":
        return ZetaSymbolValue({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: object) -> "ZetaSymbolValue":
        return self + (-other if isinstance(other, ZetaSymbolValue) else ZetaSymbolValue.rational(-Fraction(other)))

    def __rsub__(self, other: object) -> "ZetaSymbolValue":
        return ZetaSymbolValue.rational(Fraction(other)) - self

    def __mul__(self, other: object) -> "ZetaSymbolValue":
        if isinstance(other, (int, Fraction)):
            return ZetaSymbolValue({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, ZetaSymbolValue):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps: Dict[str, int] = dict(m1)
                for g, e in m2:
                    exps[g] = exps.get(g, 0) + e
                key = tuple(sorted(exps.items(), key=lambda p: _gen_sort_key(p[0])))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return ZetaSymbolValue(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZetaSymbolValue":
        if n < 0:
            raise PreconditionError("negative powers are not defined in this ring")
        acc = ZetaSymbolValue.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def homogeneous_weight(self) -> Optional[int]:
        """Weight if homogeneous (None for 0); raises if weights are mixed."""
        ws = {monomial_weight(m) for m in self.terms}
        if not ws:
            return None
        if len(ws) > 1:
            raise InternalCheckError(f"value is not weight-homogeneous: weights {sorted(ws)}")
        return ws.pop()

    def rational_part(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def coefficient(self, mono: Monomial) -> Fraction:
        key = tuple(sorted(mono, key=lambda p: _gen_sort_key(p[0])))
        return self.terms.get(key, Fraction(0))

    def has_generator(self, name: str) -> bool:
        return any(g == name for m in self.terms for g, _ in m)

    def substitute_t(self, t: Scalar) -> "ZetaSymbolValue":
        """Replace T by an exact rational."""
        t = Fraction(t)
        out = ZetaSymbolValue.zero()
        for m, c in self.terms.items():
            rest = tuple((g, e) for g, e in m if g != "T")
            te = sum(e for g, e in m if g == "T")
            out = out + ZetaSymbolValue({rest: c * t**te})
        return out

    def __repr__(self) -> str:
        return f"Sym<{render(self)}>"


def _render_mono(mono: Monomial, sep: str) -> str:
    if not mono:
        return "1"
    bits = []
    for g, e in mono:
        if g == "P":
            bits.append(f"pi^{4 * e}")
        elif g == "T":
            bits.append("T" if e == 1 else f"T^{e}")
        else:
            base = f"z{g[1:]}"
            bits.append(base if e == 1 else f"{base}^{e}")
    return sep.join(bits)


def render(v: ZetaSymbolValue) -> str:
    """Human-readable text, e.g. "1/32*z3*z5*z11 + ...". """
    if not v.terms:
        return "0"
    parts = []
    for mono, c in sorted(v.terms.items(), key=lambda kv: (monomial_weight(kv[0]), kv[0])):
        ms = _render_mono(mono, "*")
        if mono == ():
            parts.append(str(c))
        elif c == 1:
            parts.append(ms)
        elif c == -1:
            parts.append(f"-{ms}")
        else:
            parts.append(f"{c}*{ms}")
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def to_json_dict(v: ZetaSymbolValue) -> Dict[str, str]:
    """JSON-friendly map monomial -> coefficient, rationals as "p/q"."""
    return {
        _render_mono(m, "*"): str(c)
        for m, c in sorted(v.terms.items(), key=lambda kv: (monomial_weight(kv[0]), kv[0]))
    }


def sym_det(rows: Sequence[Sequence[ZetaSymbolValue]]) -> ZetaSymbolValue:
    """Determinant by cofactor expansion (division-free; intended n <= 6)."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise PreconditionError("determinant needs a square matrix")
    if n == 0:
        return ZetaSymbolValue.one()

    def rec(rs: List[Sequence[ZetaSymbolValue]], cols: Tuple[int, ...]) -> ZetaSymbolValue:
        if len(cols) == 1:
            return rs[0][cols[0]]
        total = ZetaSymbolValue.zero()
        for pos, c in enumerate(cols):
            a = rs[0][c]
            if not a:
                continue
            sub = rec(rs[1:], cols[:pos] + cols[pos + 1 :])
            term = a * sub
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return rec(list(rows), tuple(range(n)))


def numeric_value(v: ZetaSymbolValue, t_value: float = 0.0, tol: float = 1e-9) -> float:
    """Float evaluation: P -> pi^4, T -> t_value, zk -> zeta(k)."""
    from .mzv import numeric_mzv

    total = 0.0
    for mono, c in v.terms.items():
        x = float(c)
        for g, e in mono:
            if g == "P":
                x *= (math.pi**4) ** e
            elif g == "T":
                x *= t_value**e
            else:
                x *= numeric_mzv((int(g[1:]),), tol) ** e
        total += x
    return total


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """B_k with the B_1 = -1/2 convention."""
    if k < 0:
        raise PreconditionError("Bernoulli index must be nonnegative")
    if k == 0:
        return Fraction(1)
    # sum_{j=0}^{k} C(k+1, j) B_j = 0
    acc = Fraction(0)
    for j in range(k):
        acc += math.comb(k + 1, j) * bernoulli_number(j)
    return -acc / (k + 1)


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re: Scalar, im: Scalar = 0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def is_imaginary(self) -> bool:
        return self.re == 0

    def __add__(self, other: object) -> "GaussianRational":
        other = _coerce_gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: object) -> "GaussianRational":
        return self + (-_coerce_gauss(other))

    def __rsub__(self, other: object) -> "GaussianRational":
        return _coerce_gauss(other) - self

    def __mul__(self, other: object) -> "GaussianRational":
        other = _coerce_gauss(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        other = _coerce_gauss(other)
        d = other.re**2 + other.im**2
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(other.re / d, -other.im / d)

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return GaussianRational.of(1) / self ** (-n)
        acc = GaussianRational.of(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __repr__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


def _coerce_gauss(x: object) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x))
    raise TypeError(f"cannot coerce {x!r} to GaussianRational")


def bernoulli_poly(k: int, x: Union[GaussianRational, Scalar]) -> GaussianRational:
    """B_k(x) = sum_j C(k,j) B_j x^(k-j) over Gaussian rationals."""
    if k < 0:
        raise PreconditionError("Bernoulli index must be nonnegative")
    x = _coerce_gauss(x)
    total = GaussianRational.of(0)
    for j in range(k + 1):
        total = total + math.comb(k, j) * bernoulli_number(j) * x ** (k - j)
    return total


def z4_power(n: int) -> Fraction:
    """zeta({4}^n) = z4_power(n) * pi^(4n); equals 2^(2n+1)/(4n+2)!."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    return Fraction(2 ** (2 * n + 1), math.factorial(4 * n + 2))


def z4_star_power(n: int) -> Fraction:
    """zeta-star({4}^n) = z4_star_power(n) * pi^(4n), as the finite
    Bernoulli double-product sum."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    total = Fraction(0)
    for j in range(0, 2 * n + 1):
        total += (
            (-1) ** j
            * (1 - Fraction(2) ** (2 * j - 1))
            * (1 - Fraction(2) ** (4 * n - 2 * j - 1))
            * math.comb(4 * n, 2 * j)
            * bernoulli_number(2 * j)
            * bernoulli_number(4 * n - 2 * j)
        )
    return Fraction(4, math.factorial(4 * n)) * total


def zeta_single(k: int) -> ZetaSymbolValue:
    """zeta(k) as a ring element.

    Odd k >= 3 are generators; k divisible by 4 becomes a rational multiple
    of P by the Bernoulli evaluation of zeta(even); k = 1 is the
    regularized value T.  Other even k (k == 2 mod 4) have no home in
    Q[pi^4, z3, z5, ...] and are refused.
    """
    if k < 1:
        raise PreconditionError("zeta argument must be a positive integer")
    if k == 1:
        return ZetaSymbolValue.T()
    if k % 2 == 1:
        return ZetaSymbolValue.Z(k)
    if k % 4 != 0:
        raise PreconditionError(
            f"zeta({k}) is a rational multiple of pi^{k} with {k} == 2 (mod 4), "
            "which lies outside Q[pi^4, zeta(odd)]"
        )
    l = k // 4
    coeff = -bernoulli_number(k) * Fraction(2**k, 2 * math.factorial(k))
    return ZetaSymbolValue({(("P", l),): coeff})


def _p_power(n: int, coeff: Fraction) -> ZetaSymbolValue:
    mono: Monomial = (("P", n),) if n else ()
    return ZetaSymbolValue({mono: coeff})


def zeta_four_block(n: int) -> ZetaSymbolValue:
    """zeta({4}^n) as a ring element (rational times P^n)."""
    return _p_power(n, z4_power(n))


def zeta_four_block_star(n: int) -> ZetaSymbolValue:
    """zeta-star({4}^n) as a ring element."""
    return _p_power(n, z4_star_power(n))
