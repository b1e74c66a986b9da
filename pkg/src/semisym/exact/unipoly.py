"""Univariate polynomials with Scalar coefficients, and factorization over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar

__all__ = [
    "UniPoly",
    "Factor",
    "ParametricInput",
    "factor_over_rationals",
    "factor_parametric",
    "rational_roots",
]


class ParametricInput(ValueError):
    """Raised when a rational-only algorithm meets free parameters."""


class UniPoly:
    """Dense polynomial ``sum coeffs[k] * X**k``; trailing zeros are stripped."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[ScalarLike], var: str = "X"):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: ScalarLike = 1, var: str = "X") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def linear(cls, root: ScalarLike, var: str = "X") -> "UniPoly":
        """``X - root``."""
        return cls([-as_scalar(root), 1], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def _like(self, cs) -> "UniPoly":
        return UniPoly(cs, self.var)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        other = _as_poly(other, self.var)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._like(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return self._like(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-_as_poly(other, self.var))

    def __rsub__(self, other):
        return _as_poly(other, self.var) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = as_scalar(other)
            return self._like(c * x for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return self._like([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        out = self._like([1])
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [ZERO] * max(len(rem) - other.degree, 0)
        inv = ONE / other.lc
        for k in range(len(rem) - 1, other.degree - 1, -1):
            c = rem[k] * inv
            if c.is_zero():
                continue
            q[k - other.degree] = c
            for j, b in enumerate(other.coeffs):
                rem[k - other.degree + j] = rem[k - other.degree + j] - c * b
        return self._like(q), self._like(rem[: other.degree])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = ONE / self.lc
        return self._like(c * inv for c in self.coeffs)

    def derivative(self) -> "UniPoly":
        return self._like(k * c for k, c in enumerate(self.coeffs) if k)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        """Horner evaluation; works for Scalars and for square Matrix arguments."""
        from .matrix import Matrix

        if isinstance(x, Matrix):
            acc = Matrix.zeros(x.rows, x.cols)
            ident = Matrix.identity(x.rows)
            for c in reversed(self.coeffs):
                acc = acc * x + ident * c
            return acc
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def subs(self, assignment: Mapping[str, ScalarLike]) -> "UniPoly":
        return self._like(c.subs(assignment) for c in self.coeffs)

    @property
    def params(self) -> tuple[str, ...]:
        seen: list[str] = []
        for c in self.coeffs:
            seen.extend(p for p in c.params if p not in seen)
        return tuple(seen)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            cs = str(c)
            compound = not c.is_rational and (" " in cs.strip("-") or "/" in cs)
            if compound and cs.startswith("-") and " " not in cs:
                cs, compound = cs, False
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if not mono:
                body = f"({cs})" if compound else cs
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"({cs})*{mono}" if compound else f"{cs}*{mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"UniPoly({self})"


def _as_poly(x, var) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly([x], var)


@dataclass(frozen=True)
class Factor:
    """One factor of a factorization; ``kind`` is constant/linear/quadratic/unresolved."""

    poly: UniPoly
    multiplicity: int
    kind: str

    @property
    def root(self) -> Fraction:
        if self.kind != "linear":
            raise ValueError("only linear factors have a rational root")
        return (-self.poly[0]).to_fraction()


def _rational_coeffs(p: UniPoly) -> list[Fraction]:
    if p.params:
        raise ParametricInput(f"parametric input: substitute {', '.join(p.params)} first")
    return [c.to_fraction() for c in p.coeffs]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: UniPoly) -> list[Fraction]:
    """Distinct rational roots, via the rational-root bound on the primitive integer form."""
    qs = _rational_coeffs(p)
    if len(qs) <= 1:
        return []
    den = 1
    for q in qs:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in qs]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints = ints[1:]
    if len(ints) <= 1:
        return roots
    for num in _divisors(ints[0]):
        for d in _divisors(ints[-1]):
            for cand in (Fraction(num, d), Fraction(-num, d)):
                if cand in roots:
                    continue
                acc = 0
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return sorted(roots)


def _squarefree_parts(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm over a field of characteristic zero."""
    out = []
    f = p.monic()
    df = f.derivative()
    a = f.gcd(df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        b, c = b // a, d // a
        if a.degree > 0:
            out.append((a, i))
        d = c - b.derivative()
        i += 1
    return out


def factor_over_rationals(p: UniPoly) -> list[Factor]:
    """Factor a parameter-free polynomial into monic pieces over Q.

    Linear factors come from the rational-root test, leftover quadratics
    are irreducible (no rational root), and anything of degree >= 3 that
    survives is returned with kind ``"unresolved"``.  A non-unit leading
    coefficient is returned as a leading ``"constant"`` factor.
    """
    _rational_coeffs(p)
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out: list[Factor] = []
    if p.lc != 1:
        out.append(Factor(UniPoly([p.lc], p.var), 1, "constant"))
    if p.degree == 0:
        return out or [Factor(UniPoly([1], p.var), 1, "constant")]
    for part, mult in _squarefree_parts(p):
        rest = part
        for r in rational_roots(part):
            lin = UniPoly.linear(Scalar(r), p.var)
            rest = rest // lin
            out.append(Factor(lin, mult, "linear"))
        if rest.degree == 2:
            out.append(Factor(rest, mult, "quadratic"))
        elif rest.degree >= 3:
            out.append(Factor(rest, mult, "unresolved"))
    return out


def factor_parametric(p: UniPoly) -> list[Factor]:
    """Factor over Q(params) using sympy's multivariate factorization.

    Same output shape as :func:`factor_over_rationals`; a quadratic is only
    reported as such when it does not split over Q(params).
    """
    if not p.params:
        return factor_over_rationals(p)
    from sympy import Poly, Symbol, factor_list

    names = p.params
    lam = Symbol("_lam")
    expr = sum(c.to_sympy() * lam**k for k, c in enumerate(p.coeffs))
    _, parts = factor_list(expr, lam, *[Symbol(n) for n in names])
    out: list[Factor] = []
    lc = p.lc
    for f, mult in parts:
        fp = Poly(f, lam)
        if fp.degree() <= 0:
            continue
        cs = [Scalar.from_sympy(c, names) for c in reversed(fp.all_coeffs())]
        piece = UniPoly(cs, p.var).monic()
        kind = {1: "linear", 2: "quadratic"}.get(piece.degree, "unresolved")
        out.append(Factor(piece, mult, kind))
    out.sort(key=lambda f: (f.poly.degree, str(f.poly)))
    if lc != 1:
        out.insert(0, Factor(UniPoly([lc], p.var), 1, "constant"))
    return out
